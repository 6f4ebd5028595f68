#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ccp/graph.hpp"
#include "ccp/partition.hpp"
#include "ccp/tree.hpp"

namespace ccp {

/// Multicut on trees: a tree plus terminal pairs that must be separated.
/// Vertex colors of `tree` are ignored.
struct MulticutInstance {
  ColoredGraph tree;
  /// Canonical pairs (u < v), sorted, without duplicates.
  std::vector<Edge> requests;
};

/// Validates shape and requests; throws ShapeError / InputError.
MulticutInstance make_multicut(ColoredGraph tree, std::vector<Edge> requests);

struct CutSolution {
  /// Sorted tree edge ids.
  std::vector<EdgeId> cut_edges;
  std::size_t value() const { return cut_edges.size(); }
};

/// True iff every request path contains a cut edge.
bool is_multicut(const MulticutInstance& m, const std::vector<EdgeId>& cut);

/// Requests are all same-color vertex pairs of the (normalized) tree.
MulticutInstance mcc_to_multicut(const ColoredGraph& tree);

/// Colored tree built from a multicut instance: original vertices keep their
/// ids and get distinct colors; each request (u,v) adds a leaf on v and a leaf
/// on u sharing a fresh color.
struct MulticutGadget {
  ColoredGraph graph;
  /// Per edge id of `graph`: true for the added leaf edges (E_2).
  std::vector<bool> is_leaf_edge;
  /// Tree edge id for each E_1 edge of `graph`, kNoEdge for E_2 edges.
  std::vector<EdgeId> tree_edge;
  std::size_t original_vertices = 0;
};

MulticutGadget multicut_to_mcc(const MulticutInstance& m);

/// Minimum multicut of size at most `budget`, or nullopt. Depth-2 branching
/// on the deepest-LCA request, iterated over budgets 0..budget.
std::optional<CutSolution> solve_multicut_fpt(const MulticutInstance& m, std::size_t budget);

/// Primal-dual 2-approximation with reverse delete.
CutSolution approx2_multicut(const MulticutInstance& m);

/// Optimum via budget search capped by the approximation.
CutSolution solve_multicut_exact(const MulticutInstance& m);

/// Result of exhaustive rule application. OPT(original) = OPT(instance) + forced.size().
struct ReducedMulticut {
  MulticutInstance instance;
  /// Original edge ids cut by the forcing rule.
  std::vector<EdgeId> forced;
  /// Original edge id of every reduced edge.
  std::vector<EdgeId> edge_origin;
  /// Reduced vertex of every original vertex.
  std::vector<Vertex> vertex_image;
  std::optional<std::size_t> budget;
  /// False when the supplied budget went negative.
  bool feasible = true;
};

ReducedMulticut reduce_multicut(const MulticutInstance& m, std::optional<std::size_t> budget = std::nullopt);

/// Maps a cut of the reduced instance back to original edge ids (including forced edges).
CutSolution lift_cut(const ReducedMulticut& r, const CutSolution& reduced_cut);

/// Partition of the tree after cutting; asserts j cuts give j+1 components.
Partition decode_cut(const ColoredGraph& tree, const CutSolution& cut);

/// Moves every deleted leaf edge of a gadget solution onto tree edges without
/// increasing the number of deleted edges or breaking feasibility.
std::vector<EdgeId> repair_gadget_solution(const MulticutGadget& gadget, std::vector<EdgeId> deleted);

/// Multicut read off a gadget solution that deletes only tree edges.
CutSolution gadget_solution_to_cut(const MulticutGadget& gadget, const std::vector<EdgeId>& deleted);

enum class TreeMode { exact, approx };

/// MCC on a tree (or forest after normalization) through the multicut bridge.
SolveResult solve_mcc_tree(const ColoredGraph& g, TreeMode mode);

}  // namespace ccp
