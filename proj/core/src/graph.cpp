#include "ccp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ccp/errors.hpp"

namespace ccp {

ColoredGraph::ColoredGraph(std::size_t vertex_count, std::vector<Color> colors, std::vector<Edge> edges,
                           std::size_t color_count)
    : colors_(std::move(colors)), color_count_(color_count) {
  if (colors_.size() != vertex_count) {
    throw InputError("color table has " + std::to_string(colors_.size()) + " entries for " +
                     std::to_string(vertex_count) + " vertices");
  }
  Color max_color = 0;
  for (Color c : colors_) max_color = std::max(max_color, c);
  if (color_count_ == 0) {
    color_count_ = colors_.empty() ? 1 : static_cast<std::size_t>(max_color) + 1;
  } else if (!colors_.empty() && max_color >= color_count_) {
    throw InputError("color " + std::to_string(max_color) + " out of range [0, " +
                     std::to_string(color_count_) + ")");
  }

  for (Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} references a vertex outside [0, " + std::to_string(vertex_count) + ")");
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InputError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }
  edges_ = std::move(edges);

  std::vector<std::size_t> degree(vertex_count, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.u]++] = {e.v, id};
    adjacency_[fill[e.v]++] = {e.u, id};
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
  }
}

std::optional<EdgeId> ColoredGraph::find_edge(Vertex a, Vertex b) const {
  if (a == b || a >= vertex_count() || b >= vertex_count()) return std::nullopt;
  const Edge key = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) const {
  while (parent_[x] != x) x = parent_[x];
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  history_.push_back(b);
  return true;
}

void DisjointSets::rollback(std::size_t history_size) {
  while (history_.size() > history_size) {
    const std::size_t b = history_.back();
    history_.pop_back();
    const std::size_t a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }
}

ColoredGraph normalize(const ColoredGraph& g) {
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    if (g.color(e.u) != g.color(e.v)) kept.push_back(e);
  }
  return ColoredGraph(g.vertex_count(), g.colors(), std::move(kept), g.color_count());
}

bool is_normalized(const ColoredGraph& g) {
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return g.color(e.u) == g.color(e.v); });
}

std::vector<std::size_t> component_labels(const ColoredGraph& g, const std::vector<bool>& deleted_mask) {
  DisjointSets sets(g.vertex_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (!deleted_mask.empty() && deleted_mask[id]) continue;
    sets.unite(g.edge(id).u, g.edge(id).v);
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> root_label(g.vertex_count(), kUnset);
  std::vector<std::size_t> labels(g.vertex_count());
  std::size_t next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t root = sets.find(v);
    if (root_label[root] == kUnset) root_label[root] = next++;
    labels[v] = root_label[root];
  }
  return labels;
}

bool is_connected(const ColoredGraph& g) {
  if (g.vertex_count() <= 1) return true;
  const auto labels = component_labels(g);
  return std::all_of(labels.begin(), labels.end(), [](std::size_t l) { return l == 0; });
}

bool is_tree(const ColoredGraph& g) {
  if (g.vertex_count() == 0) return true;
  return g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

bool is_forest(const ColoredGraph& g) {
  const auto labels = component_labels(g);
  const std::size_t components = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  return g.edge_count() + components == g.vertex_count();
}

bool is_path(const ColoredGraph& g) {
  if (!is_tree(g)) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

InducedSubgraph induced_subgraph(const ColoredGraph& g, const std::vector<Vertex>& vertices) {
  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(g.vertex_count(), kAbsent);
  std::vector<Color> colors;
  colors.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<Vertex>(i);
    colors.push_back(g.color(vertices[i]));
  }
  std::vector<Edge> edges;
  std::vector<EdgeId> parent_ids;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (local[e.u] != kAbsent && local[e.v] != kAbsent) {
      edges.push_back(make_edge(local[e.u], local[e.v]));
      parent_ids.push_back(id);
    }
  }
  InducedSubgraph out{ColoredGraph(vertices.size(), std::move(colors), edges, g.color_count()), vertices, {}};
  // Edge order of the subgraph follows the sorted local pairs; map back by lookup.
  out.edge_to_parent.resize(out.graph.edge_count());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out.edge_to_parent[*out.graph.find_edge(edges[i].u, edges[i].v)] = parent_ids[i];
  }
  return out;
}

std::vector<InducedSubgraph> split_components(const ColoredGraph& g) {
  const auto labels = component_labels(g);
  std::size_t count = 0;
  for (std::size_t l : labels) count = std::max(count, l + 1);
  std::vector<std::vector<Vertex>> groups(count);
  for (Vertex v = 0; v < g.vertex_count(); ++v) groups[labels[v]].push_back(v);
  std::vector<InducedSubgraph> out;
  out.reserve(count);
  for (const auto& group : groups) out.push_back(induced_subgraph(g, group));
  return out;
}

}  // namespace ccp
