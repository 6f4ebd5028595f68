#include "ccp/mec_kernel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ccp/errors.hpp"
#include "ccp/tree.hpp"

namespace ccp {

bool DfsDecomposition::is_ancestor(Vertex ancestor, Vertex v) const {
  while (depth[v] > depth[ancestor]) v = parent[v];
  return v == ancestor;
}

DfsDecomposition dfs_decompose(const ColoredGraph& g) {
  if (!is_connected(g)) throw ShapeError("DFS decomposition requires a connected graph");
  const std::size_t n = g.vertex_count();
  DfsDecomposition d;
  d.parent.assign(n, kNoVertex);
  d.parent_edge.assign(n, kNoEdge);
  d.depth.assign(n, 0);
  d.children.assign(n, {});
  if (n == 0) return d;

  std::vector<bool> visited(n, false);
  std::vector<bool> is_tree_edge(g.edge_count(), false);
  // Explicit recursion stack of (vertex, next incidence to inspect).
  std::vector<std::pair<Vertex, std::size_t>> stack{{d.root, 0}};
  visited[d.root] = true;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto inc = g.incidences(v);
    if (next == inc.size()) {
      stack.pop_back();
      continue;
    }
    const Incidence step = inc[next++];
    if (visited[step.neighbor]) continue;
    visited[step.neighbor] = true;
    d.parent[step.neighbor] = v;
    d.parent_edge[step.neighbor] = step.edge;
    d.depth[step.neighbor] = d.depth[v] + 1;
    d.children[v].push_back(step.neighbor);
    is_tree_edge[step.edge] = true;
    stack.emplace_back(step.neighbor, 0);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) (is_tree_edge[e] ? d.tree_edges : d.back_edges).push_back(e);
  std::vector<bool> anchor(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (d.is_leaf(v) && d.parent[v] != kNoVertex) anchor[d.parent[v]] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (anchor[v]) d.leaf_parents.push_back(v);
  }
  return d;
}

bool has_ancestor_property(const ColoredGraph& g, const DfsDecomposition& d) {
  return std::all_of(d.back_edges.begin(), d.back_edges.end(), [&](EdgeId e) {
    const Edge& edge = g.edge(e);
    return d.is_ancestor(edge.u, edge.v) || d.is_ancestor(edge.v, edge.u);
  });
}

std::vector<LeafClass> leaf_classes(const ColoredGraph& g, const DfsDecomposition& d) {
  std::vector<LeafClass> classes;
  for (Vertex anchor : d.leaf_parents) {
    std::map<Color, std::vector<Vertex>> by_color;
    for (Vertex child : d.children[anchor]) {
      if (d.is_leaf(child)) by_color[g.color(child)].push_back(child);
    }
    for (auto& [color, members] : by_color) {
      LeafClass cls{anchor, color, members, {}};
      std::map<std::vector<Vertex>, std::vector<Vertex>> by_neighborhood;
      for (Vertex leaf : members) {
        std::vector<Vertex> neighborhood;
        for (const Incidence& inc : g.incidences(leaf)) neighborhood.push_back(inc.neighbor);
        by_neighborhood[neighborhood].push_back(leaf);
      }
      for (auto& [_, sub] : by_neighborhood) cls.subclasses.push_back(std::move(sub));
      std::sort(cls.subclasses.begin(), cls.subclasses.end());
      classes.push_back(std::move(cls));
    }
  }
  return classes;
}

std::string to_string(KernelTrigger t) {
  switch (t) {
    case KernelTrigger::none: return "none";
    case KernelTrigger::zero_budget: return "zero-budget";
    case KernelTrigger::long_path: return "long-path";
    case KernelTrigger::many_leaf_parents: return "many-leaf-parents";
    case KernelTrigger::many_leaf_colors: return "many-leaf-colors";
  }
  return "unknown";
}

std::optional<EasyYes> easy_yes(const ColoredGraph& g, const DfsDecomposition& d, std::int64_t k) {
  if (k <= 0) return EasyYes{KernelTrigger::zero_budget, {}};
  const std::size_t n = g.vertex_count();

  Vertex deepest = d.root;
  for (Vertex v = 0; v < n; ++v) {
    if (d.depth[v] > d.depth[deepest]) deepest = v;
  }
  if (static_cast<std::int64_t>(d.depth[deepest]) >= 2 * k) {
    std::vector<EdgeId> path;
    for (Vertex v = deepest; v != d.root; v = d.parent[v]) path.push_back(d.parent_edge[v]);
    std::reverse(path.begin(), path.end());
    EasyYes yes{KernelTrigger::long_path, {}};
    for (std::size_t i = 0; i < path.size(); i += 2) yes.kept_edges.push_back(path[i]);
    return yes;
  }

  if (static_cast<std::int64_t>(d.leaf_parents.size()) >= k) {
    EasyYes yes{KernelTrigger::many_leaf_parents, {}};
    for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
      const Vertex anchor = d.leaf_parents[i];
      const auto& kids = d.children[anchor];
      const Vertex leaf = *std::find_if(kids.begin(), kids.end(), [&](Vertex c) { return d.is_leaf(c); });
      yes.kept_edges.push_back(d.parent_edge[leaf]);
    }
    return yes;
  }

  for (Vertex anchor : d.leaf_parents) {
    std::map<Color, Vertex> one_per_color;
    for (Vertex child : d.children[anchor]) {
      if (d.is_leaf(child)) one_per_color.emplace(g.color(child), child);
    }
    const auto m = static_cast<std::int64_t>(one_per_color.size());
    if (m * m >= 2 * k) {
      EasyYes yes{KernelTrigger::many_leaf_colors, {}};
      for (const auto& [_, leaf] : one_per_color) yes.kept_edges.push_back(d.parent_edge[leaf]);
      std::sort(yes.kept_edges.begin(), yes.kept_edges.end());
      return yes;
    }
  }
  return std::nullopt;
}

namespace {

EdgeId edge_in(const ColoredGraph& g, const ColoredGraph& sub, const std::vector<Vertex>& to_parent, EdgeId e) {
  return *g.find_edge(to_parent[sub.edge(e).u], to_parent[sub.edge(e).v]);
}

KernelOutcome kernelize(const ColoredGraph& g, std::int64_t k, bool tree_rule) {
  KernelOutcome out;
  out.k = k;
  out.report.input_vertices = g.vertex_count();
  if (k <= 0) {
    out.yes_witness = Partition::singletons(g);
    out.report.trigger = KernelTrigger::zero_budget;
    return out;
  }
  const ColoredGraph norm = normalize(g);
  std::vector<bool> removed(norm.vertex_count(), false);

  for (const InducedSubgraph& part : split_components(norm)) {
    const DfsDecomposition d = dfs_decompose(part.graph);
    if (auto yes = easy_yes(part.graph, d, k)) {
      std::vector<EdgeId> kept;
      for (EdgeId e : yes->kept_edges) kept.push_back(edge_in(g, part.graph, part.to_parent, e));
      out.yes_witness = Partition::from_kept(g, kept);
      out.report.trigger = yes->trigger;
      out.reduced.reset();
      out.kept_vertices.clear();
      return out;
    }

    std::size_t internal = 0;
    for (Vertex v = 0; v < part.graph.vertex_count(); ++v) internal += d.is_leaf(v) ? 0 : 1;
    out.report.internal_vertices += internal;
    out.report.leaf_parents += d.leaf_parents.size();
    if (static_cast<std::int64_t>(internal) > 2 * k * k) {
      throw std::logic_error("kernel invariant violated: " + std::to_string(internal) + " internal vertices > 2k^2");
    }

    for (const LeafClass& cls : leaf_classes(part.graph, d)) {
      ++out.report.leaf_classes;
      out.report.subclasses += cls.subclasses.size();
      out.report.max_subclasses_per_class = std::max(out.report.max_subclasses_per_class, cls.subclasses.size());
      if (2 * k + 1 < 63 && cls.subclasses.size() > (std::size_t{1} << (2 * k + 1))) {
        throw std::logic_error("kernel invariant violated: more than 2^(2k+1) leaf subclasses");
      }
      if (tree_rule) {
        // All members share the anchor as sole neighbor; keep the smallest.
        for (std::size_t i = 1; i < cls.members.size(); ++i) removed[part.to_parent[cls.members[i]]] = true;
      } else {
        for (const auto& sub : cls.subclasses) {
          for (std::size_t i = static_cast<std::size_t>(k); i < sub.size(); ++i) removed[part.to_parent[sub[i]]] = true;
        }
      }
    }
  }

  for (Vertex v = 0; v < norm.vertex_count(); ++v) {
    if (!removed[v]) out.kept_vertices.push_back(v);
  }
  out.reduced = induced_subgraph(norm, out.kept_vertices).graph;
  out.report.kernel_vertices = out.kept_vertices.size();
  out.report.removed_vertices = norm.vertex_count() - out.kept_vertices.size();
  return out;
}

}  // namespace

KernelOutcome kernelize_mec(const ColoredGraph& g, std::int64_t k) { return kernelize(g, k, false); }

KernelOutcome kernelize_mec_tree(const ColoredGraph& g, std::int64_t k) {
  if (!is_forest(g)) throw ShapeError("tree kernel requires a forest");
  return kernelize(g, k, true);
}

std::vector<Vertex> tree_leaf_reduction(const ColoredGraph& g) {
  if (!is_forest(g)) throw ShapeError("tree kernel requires a forest");
  const ColoredGraph norm = normalize(g);
  std::vector<bool> removed(norm.vertex_count(), false);
  for (const InducedSubgraph& part : split_components(norm)) {
    const DfsDecomposition d = dfs_decompose(part.graph);
    for (const LeafClass& cls : leaf_classes(part.graph, d)) {
      for (std::size_t i = 1; i < cls.members.size(); ++i) removed[part.to_parent[cls.members[i]]] = true;
    }
  }
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < norm.vertex_count(); ++v) {
    if (!removed[v]) kept.push_back(v);
  }
  return kept;
}

}  // namespace ccp
