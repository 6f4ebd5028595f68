#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccp/graph.hpp"

namespace ccp {

/// A set of deleted edges together with the vertex components they induce.
///
/// Both views are kept; the constructor that takes both cross-checks them.
class Partition {
 public:
  Partition() = default;

  /// Components are computed from the deleted set. Throws InputError on an
  /// unknown edge id.
  static Partition from_deleted(const ColoredGraph& g, std::vector<EdgeId> deleted);
  /// Deletes exactly the edges whose endpoints are not both kept.
  static Partition from_kept(const ColoredGraph& g, const std::vector<EdgeId>& kept);
  /// Every edge deleted, all components singletons.
  static Partition singletons(const ColoredGraph& g);

  /// Throws InputError if `components` are not the components of g minus `deleted`.
  Partition(const ColoredGraph& g, std::vector<EdgeId> deleted, std::vector<std::vector<Vertex>> components);

  /// Sorted ascending.
  const std::vector<EdgeId>& deleted_edges() const { return deleted_; }
  /// Each component sorted; components ordered by smallest vertex.
  const std::vector<std::vector<Vertex>>& components() const { return components_; }
  std::vector<std::size_t> component_sizes() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<EdgeId> deleted_;
  std::vector<std::vector<Vertex>> components_;
};

/// Sum over components of n_i (n_i - 1) / 2.
std::int64_t mec_value(const Partition& p);
/// Number of components.
std::int64_t mcc_value(const Partition& p);

/// Closure size of a single s-vertex component.
constexpr std::int64_t closure_edges(std::int64_t size) { return size * (size - 1) / 2; }

/// True iff every component of g minus `deleted` has pairwise distinct colors.
bool is_colorful_partition(const ColoredGraph& g, const std::vector<EdgeId>& deleted);

struct ColorConflict {
  std::size_t component;
  Color color;
  Vertex first;
  Vertex second;
};

/// First component holding two vertices of one color, if any.
std::optional<ColorConflict> find_color_conflict(const ColoredGraph& g, const Partition& p);

enum class Problem { mcc, mec };

std::string to_string(Problem p);
Problem problem_from_string(const std::string& s);

std::int64_t objective(Problem problem, const Partition& p);

struct SolveResult {
  std::int64_t objective_value = 0;
  Partition partition;
  std::string algorithm_tag;
  bool certificate_checked = false;
};

/// Re-validates a result: feasible partition and matching objective.
bool certify(const ColoredGraph& g, Problem problem, SolveResult& result);

/// Lifts per-component partitions back onto the parent graph. Edges between
/// different parts cannot exist, so only the parts' own deletions appear.
Partition lift_partition(const ColoredGraph& parent, const std::vector<InducedSubgraph>& parts,
                         const std::vector<Partition>& part_solutions);

/// Maps a partition of normalize(g) back onto g, where the monochromatic
/// edges removed by normalization stay deleted.
Partition lift_normalized(const ColoredGraph& g, const ColoredGraph& normalized, const Partition& p);

/// Runs `solve_part` on every connected component and aggregates the results.
template <typename Solver>
SolveResult solve_per_component(const ColoredGraph& g, Problem problem, Solver&& solve_part) {
  const auto parts = split_components(g);
  std::vector<Partition> solutions;
  solutions.reserve(parts.size());
  std::string tag;
  for (const auto& part : parts) {
    SolveResult r = solve_part(part.graph);
    if (tag.empty()) tag = r.algorithm_tag;
    solutions.push_back(std::move(r.partition));
  }
  SolveResult out;
  out.partition = lift_partition(g, parts, solutions);
  out.objective_value = objective(problem, out.partition);
  out.algorithm_tag = tag;
  return out;
}

}  // namespace ccp
