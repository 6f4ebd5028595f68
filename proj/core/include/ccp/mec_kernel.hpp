#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccp/graph.hpp"
#include "ccp/partition.hpp"

namespace ccp {

/// Depth-first search forest of a connected graph: tree edges, back edges and
/// the set V_A of vertices that are parents of a DFS leaf.
struct DfsDecomposition {
  Vertex root = 0;
  std::vector<Vertex> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<std::uint32_t> depth;
  std::vector<std::vector<Vertex>> children;
  std::vector<EdgeId> tree_edges;
  std::vector<EdgeId> back_edges;
  /// Sorted ascending.
  std::vector<Vertex> leaf_parents;

  bool is_leaf(Vertex v) const { return children[v].empty(); }
  bool is_ancestor(Vertex ancestor, Vertex v) const;
};

/// Neighbors are explored in ascending id from vertex 0. Throws ShapeError on
/// a disconnected graph.
DfsDecomposition dfs_decompose(const ColoredGraph& g);

/// Every back edge joins a vertex to one of its DFS ancestors.
bool has_ancestor_property(const ColoredGraph& g, const DfsDecomposition& d);

/// Leaves of one color hanging from one anchor, split by neighborhood.
struct LeafClass {
  Vertex anchor = 0;
  Color color = 0;
  std::vector<Vertex> members;
  /// Members with identical neighbor sets share a subclass.
  std::vector<std::vector<Vertex>> subclasses;
};

std::vector<LeafClass> leaf_classes(const ColoredGraph& g, const DfsDecomposition& d);

enum class KernelTrigger { none, zero_budget, long_path, many_leaf_parents, many_leaf_colors };

std::string to_string(KernelTrigger t);

struct EasyYes {
  KernelTrigger trigger = KernelTrigger::none;
  /// Edges of g kept by the witness; everything else is deleted.
  std::vector<EdgeId> kept_edges;
};

/// Fires when a root-leaf DFS path has >= 2k edges, |V_A| >= k, or some anchor
/// has m >= sqrt(2k) leaf colors (m*m >= 2k). The witness has value >= k.
std::optional<EasyYes> easy_yes(const ColoredGraph& g, const DfsDecomposition& d, std::int64_t k);

struct KernelReport {
  KernelTrigger trigger = KernelTrigger::none;
  std::size_t input_vertices = 0;
  std::size_t kernel_vertices = 0;
  std::size_t internal_vertices = 0;
  std::size_t leaf_parents = 0;
  std::size_t leaf_classes = 0;
  std::size_t subclasses = 0;
  std::size_t max_subclasses_per_class = 0;
  std::size_t removed_vertices = 0;
};

/// Either a witness of value >= k or an equivalent reduced instance.
struct KernelOutcome {
  std::int64_t k = 0;
  std::optional<Partition> yes_witness;
  std::optional<ColoredGraph> reduced;
  /// Original vertex of each vertex of `reduced`.
  std::vector<Vertex> kept_vertices;
  KernelReport report;

  bool is_yes() const { return yes_witness.has_value(); }
};

/// Decision kernel for "OPT >= k": every leaf subclass is truncated to its k
/// smallest ids. Works per connected component; a single yes component
/// answers the whole instance.
KernelOutcome kernelize_mec(const ColoredGraph& g, std::int64_t k);

/// Tree kernel: at most one leaf per (parent, color). Preserves the optimum.
KernelOutcome kernelize_mec_tree(const ColoredGraph& g, std::int64_t k);

/// The tree leaf rule alone, without the early-yes checks. Returns the kept
/// vertices (ascending) of the normalized forest.
std::vector<Vertex> tree_leaf_reduction(const ColoredGraph& g);

}  // namespace ccp
