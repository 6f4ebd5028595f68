#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ccp {

using Vertex = std::uint32_t;
using Color = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Canonical form with u < v.
inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Undirected simple graph with one color per vertex.
///
/// Edges are stored in canonical form and sorted lexicographically; an edge
/// id is its rank in that order, so ids are stable for equal edge sets.
/// Immutable after construction.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  /// Throws InputError on self-loops, duplicate edges, out-of-range endpoints
  /// or colors >= color_count. A color_count of 0 means max color + 1.
  ColoredGraph(std::size_t vertex_count, std::vector<Color> colors, std::vector<Edge> edges,
               std::size_t color_count = 0);

  std::size_t vertex_count() const { return colors_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t color_count() const { return color_count_; }

  Color color(Vertex v) const { return colors_[v]; }
  const std::vector<Color>& colors() const { return colors_; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Incident edges of v sorted by neighbor id.
  std::span<const Incidence> incidences(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.colors_ == b.colors_ && a.edges_ == b.edges_ && a.color_count_ == b.color_count_;
  }

 private:
  std::vector<Color> colors_;
  std::vector<Edge> edges_;
  std::size_t color_count_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adjacency_;
};

/// Union-find with union by size. Supports rollback of the most recent unions
/// when constructed without path compression.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  std::size_t find(std::size_t x) const;
  /// Returns false when already joined.
  bool unite(std::size_t a, std::size_t b);
  std::size_t size_of(std::size_t x) const { return size_[find(x)]; }

  std::size_t history_size() const { return history_.size(); }
  void rollback(std::size_t history_size);

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
};

/// Removes every edge whose endpoints share a color.
ColoredGraph normalize(const ColoredGraph& g);

bool is_normalized(const ColoredGraph& g);

/// Component label per vertex for (V, E minus the flagged edges). Labels are
/// dense and numbered by smallest member vertex.
std::vector<std::size_t> component_labels(const ColoredGraph& g,
                                          const std::vector<bool>& deleted_mask = {});

bool is_connected(const ColoredGraph& g);
bool is_tree(const ColoredGraph& g);
/// Acyclic, possibly disconnected.
bool is_forest(const ColoredGraph& g);
bool is_path(const ColoredGraph& g);

/// Subgraph induced by `vertices` (sorted ascending); vertex i of the result
/// is vertices[i]. Color ids are kept, as is color_count.
struct InducedSubgraph {
  ColoredGraph graph;
  std::vector<Vertex> to_parent;
  /// Parent edge id for each edge of `graph`.
  std::vector<EdgeId> edge_to_parent;
};

InducedSubgraph induced_subgraph(const ColoredGraph& g, const std::vector<Vertex>& vertices);

/// One induced subgraph per connected component, ordered by smallest vertex.
std::vector<InducedSubgraph> split_components(const ColoredGraph& g);

}  // namespace ccp
