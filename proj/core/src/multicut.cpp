#include "ccp/multicut.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ccp/errors.hpp"

namespace ccp {
namespace {

/// Request paths precomputed on a rooted tree.
struct RequestPaths {
  RootedTree rooted;
  std::vector<std::vector<EdgeId>> paths;
  std::vector<Vertex> lca;

  explicit RequestPaths(const MulticutInstance& m) : rooted(root_tree(m.tree)) {
    paths.reserve(m.requests.size());
    lca.reserve(m.requests.size());
    for (const Edge& r : m.requests) {
      paths.push_back(rooted.path_edges(r.u, r.v));
      lca.push_back(rooted.lca(r.u, r.v));
    }
  }

  bool separated(std::size_t request, const std::vector<bool>& cut) const {
    return std::any_of(paths[request].begin(), paths[request].end(), [&](EdgeId e) { return cut[e]; });
  }

  /// Edges of the request path incident to its LCA (one or two).
  std::vector<EdgeId> top_edges(std::size_t request, const MulticutInstance& m) const {
    std::vector<EdgeId> top;
    for (Vertex end : {m.requests[request].u, m.requests[request].v}) {
      if (end == lca[request]) continue;
      Vertex v = end;
      while (rooted.parent[v] != lca[request]) v = rooted.parent[v];
      top.push_back(rooted.parent_edge[v]);
    }
    return top;
  }
};

std::vector<EdgeId> to_sorted_ids(const std::vector<bool>& cut) {
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < cut.size(); ++e) {
    if (cut[e]) ids.push_back(e);
  }
  return ids;
}

class BranchingSearch {
 public:
  BranchingSearch(const MulticutInstance& m) : m_(m), paths_(m), cut_(m.tree.edge_count(), false) {}

  std::optional<CutSolution> run(std::size_t budget) {
    if (!search(budget)) return std::nullopt;
    return CutSolution{to_sorted_ids(cut_)};
  }

 private:
  bool search(std::size_t budget) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < m_.requests.size(); ++i) {
      if (paths_.separated(i, cut_)) continue;
      if (!pick || paths_.rooted.depth[paths_.lca[i]] > paths_.rooted.depth[paths_.lca[*pick]]) pick = i;
    }
    if (!pick) return true;
    if (budget == 0) return false;
    // Any edge lower on an arm is dominated by the arm's top edge because no
    // unseparated request has a deeper LCA.
    for (EdgeId e : paths_.top_edges(*pick, m_)) {
      cut_[e] = true;
      if (search(budget - 1)) return true;
      cut_[e] = false;
    }
    return false;
  }

  const MulticutInstance& m_;
  RequestPaths paths_;
  std::vector<bool> cut_;
};

}  // namespace

MulticutInstance make_multicut(ColoredGraph tree, std::vector<Edge> requests) {
  if (!is_tree(tree)) throw ShapeError("multicut instance requires a tree");
  for (Edge& r : requests) {
    if (r.u >= tree.vertex_count() || r.v >= tree.vertex_count()) {
      throw InputError("request (" + std::to_string(r.u) + "," + std::to_string(r.v) + ") outside the tree");
    }
    if (r.u == r.v) throw InputError("request pairs a vertex with itself: " + std::to_string(r.u));
    r = make_edge(r.u, r.v);
  }
  std::sort(requests.begin(), requests.end());
  requests.erase(std::unique(requests.begin(), requests.end()), requests.end());
  return MulticutInstance{std::move(tree), std::move(requests)};
}

bool is_multicut(const MulticutInstance& m, const std::vector<EdgeId>& cut) {
  std::vector<bool> mask(m.tree.edge_count(), false);
  for (EdgeId e : cut) {
    if (e >= mask.size()) throw InputError("unknown tree edge id " + std::to_string(e));
    mask[e] = true;
  }
  const auto labels = component_labels(m.tree, mask);
  return std::all_of(m.requests.begin(), m.requests.end(),
                     [&](const Edge& r) { return labels[r.u] != labels[r.v]; });
}

MulticutInstance mcc_to_multicut(const ColoredGraph& tree) {
  if (!is_tree(tree)) throw ShapeError("MCC to multicut requires a tree");
  std::vector<Edge> requests;
  for (Vertex x = 0; x < tree.vertex_count(); ++x) {
    for (Vertex y = x + 1; y < tree.vertex_count(); ++y) {
      if (tree.color(x) == tree.color(y)) requests.push_back({x, y});
    }
  }
  return make_multicut(tree, std::move(requests));
}

MulticutGadget multicut_to_mcc(const MulticutInstance& m) {
  const std::size_t n = m.tree.vertex_count();
  const std::size_t r = m.requests.size();
  std::vector<Color> colors(n + 2 * r);
  for (Vertex v = 0; v < n; ++v) colors[v] = v;
  std::vector<Edge> edges(m.tree.edges().begin(), m.tree.edges().end());
  for (std::size_t i = 0; i < r; ++i) {
    const Vertex leaf_on_v = static_cast<Vertex>(n + 2 * i);
    const Vertex leaf_on_u = static_cast<Vertex>(n + 2 * i + 1);
    colors[leaf_on_v] = colors[leaf_on_u] = static_cast<Color>(n + i);
    edges.push_back({m.requests[i].v, leaf_on_v});
    edges.push_back({m.requests[i].u, leaf_on_u});
  }
  MulticutGadget gadget;
  gadget.graph = ColoredGraph(n + 2 * r, std::move(colors), std::move(edges), n + r);
  gadget.original_vertices = n;
  gadget.is_leaf_edge.assign(gadget.graph.edge_count(), false);
  gadget.tree_edge.assign(gadget.graph.edge_count(), kNoEdge);
  for (EdgeId e = 0; e < gadget.graph.edge_count(); ++e) {
    const Edge& edge = gadget.graph.edge(e);
    if (edge.v >= n) {
      gadget.is_leaf_edge[e] = true;
    } else {
      gadget.tree_edge[e] = *m.tree.find_edge(edge.u, edge.v);
    }
  }
  return gadget;
}

std::optional<CutSolution> solve_multicut_fpt(const MulticutInstance& m, std::size_t budget) {
  BranchingSearch search(m);
  for (std::size_t b = 0; b <= budget; ++b) {
    if (auto found = search.run(b)) return found;
  }
  return std::nullopt;
}

CutSolution approx2_multicut(const MulticutInstance& m) {
  const RequestPaths paths(m);
  const std::size_t n = m.tree.vertex_count();
  std::vector<std::vector<std::size_t>> by_lca(n);
  for (std::size_t i = 0; i < m.requests.size(); ++i) by_lca[paths.lca[i]].push_back(i);

  std::vector<bool> cut(m.tree.edge_count(), false);
  std::vector<EdgeId> added;
  // Reverse preorder visits every vertex after all of its descendants.
  for (auto it = paths.rooted.preorder.rbegin(); it != paths.rooted.preorder.rend(); ++it) {
    for (std::size_t i : by_lca[*it]) {
      if (paths.separated(i, cut)) continue;
      for (EdgeId e : paths.top_edges(i, m)) {
        if (!cut[e]) {
          cut[e] = true;
          added.push_back(e);
        }
      }
    }
  }
  auto all_separated = [&]() {
    for (std::size_t i = 0; i < m.requests.size(); ++i) {
      if (!paths.separated(i, cut)) return false;
    }
    return true;
  };
  for (auto it = added.rbegin(); it != added.rend(); ++it) {
    cut[*it] = false;
    if (!all_separated()) cut[*it] = true;
  }
  return CutSolution{to_sorted_ids(cut)};
}

ReducedMulticut reduce_multicut(const MulticutInstance& m, std::optional<std::size_t> budget) {
  const std::size_t n = m.tree.vertex_count();
  DisjointSets merged(n);
  std::vector<bool> contracted(m.tree.edge_count(), false);
  std::vector<Edge> requests = m.requests;
  ReducedMulticut out;
  out.budget = budget;

  const RootedTree rooted = n > 0 ? root_tree(m.tree) : RootedTree{};
  // Contraction never touches an edge that lies on a live request path, so
  // paths in the original tree, minus contracted edges, are the current paths.
  auto live_path = [&](const Edge& r) {
    std::vector<EdgeId> path;
    for (EdgeId e : rooted.path_edges(r.u, r.v)) {
      if (!contracted[e]) path.push_back(e);
    }
    return path;
  };

  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::vector<EdgeId>> paths;
    paths.reserve(requests.size());
    for (const Edge& r : requests) paths.push_back(live_path(r));

    // Forcing: a request across a single edge leaves no choice.
    for (std::size_t i = 0; i < requests.size(); ++i) {
      if (paths[i].size() != 1) continue;
      const EdgeId forced = paths[i].front();
      out.forced.push_back(forced);
      if (out.budget) {
        if (*out.budget == 0) {
          out.feasible = false;
        } else {
          --*out.budget;
        }
      }
      std::vector<Edge> kept;
      for (std::size_t j = 0; j < requests.size(); ++j) {
        if (std::find(paths[j].begin(), paths[j].end(), forced) == paths[j].end()) kept.push_back(requests[j]);
      }
      requests = std::move(kept);
      changed = true;
      break;
    }
    if (changed) continue;

    // Domination: a request whose path contains another request's path is implied by it.
    std::vector<bool> drop(requests.size(), false);
    std::vector<std::vector<bool>> on_path(requests.size(), std::vector<bool>(m.tree.edge_count(), false));
    for (std::size_t i = 0; i < requests.size(); ++i) {
      for (EdgeId e : paths[i]) on_path[i][e] = true;
    }
    for (std::size_t i = 0; i < requests.size(); ++i) {
      for (std::size_t j = 0; j < requests.size() && !drop[i]; ++j) {
        if (i == j || drop[j] || paths[j].size() > paths[i].size()) continue;
        if (paths[j].size() == paths[i].size() && j > i) continue;
        const bool contained =
            std::all_of(paths[j].begin(), paths[j].end(), [&](EdgeId e) { return on_path[i][e]; });
        if (contained) drop[i] = true;
      }
    }
    if (std::find(drop.begin(), drop.end(), true) != drop.end()) {
      std::vector<Edge> kept;
      for (std::size_t i = 0; i < requests.size(); ++i) {
        if (!drop[i]) kept.push_back(requests[i]);
      }
      requests = std::move(kept);
      changed = true;
      continue;
    }

    // Contraction: edges on no request path never need cutting. A
    // request-free leaf disappears this way as well.
    std::vector<bool> used(m.tree.edge_count(), false);
    for (const auto& path : paths) {
      for (EdgeId e : path) used[e] = true;
    }
    for (EdgeId e = 0; e < m.tree.edge_count(); ++e) {
      if (!contracted[e] && !used[e]) {
        contracted[e] = true;
        merged.unite(m.tree.edge(e).u, m.tree.edge(e).v);
        changed = true;
      }
    }
  }

  // Renumber classes by smallest member.
  std::vector<Vertex> class_id(n, kNoVertex);
  out.vertex_image.assign(n, kNoVertex);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t root = merged.find(v);
    if (class_id[root] == kNoVertex) class_id[root] = next++;
    out.vertex_image[v] = class_id[root];
  }
  std::vector<Edge> edges;
  std::vector<EdgeId> origin;
  for (EdgeId e = 0; e < m.tree.edge_count(); ++e) {
    if (contracted[e]) continue;
    edges.push_back(make_edge(out.vertex_image[m.tree.edge(e).u], out.vertex_image[m.tree.edge(e).v]));
    origin.push_back(e);
  }
  std::vector<Edge> mapped;
  for (const Edge& r : requests) mapped.push_back({out.vertex_image[r.u], out.vertex_image[r.v]});
  ColoredGraph reduced_tree(next, std::vector<Color>(next, 0), edges, 1);
  out.edge_origin.assign(reduced_tree.edge_count(), kNoEdge);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out.edge_origin[*reduced_tree.find_edge(edges[i].u, edges[i].v)] = origin[i];
  }
  out.instance = make_multicut(std::move(reduced_tree), std::move(mapped));
  std::sort(out.forced.begin(), out.forced.end());
  return out;
}

CutSolution lift_cut(const ReducedMulticut& r, const CutSolution& reduced_cut) {
  CutSolution out{r.forced};
  for (EdgeId e : reduced_cut.cut_edges) out.cut_edges.push_back(r.edge_origin[e]);
  std::sort(out.cut_edges.begin(), out.cut_edges.end());
  return out;
}

CutSolution solve_multicut_exact(const MulticutInstance& m) {
  const ReducedMulticut reduced = reduce_multicut(m);
  const std::size_t upper = approx2_multicut(reduced.instance).value();
  auto best = solve_multicut_fpt(reduced.instance, upper);
  if (!best) throw std::logic_error("branching found no cut within the approximation bound");
  return lift_cut(reduced, *best);
}

Partition decode_cut(const ColoredGraph& tree, const CutSolution& cut) {
  Partition p = Partition::from_deleted(tree, cut.cut_edges);
  if (is_tree(tree) && p.components().size() != cut.value() + 1) {
    throw std::logic_error("cutting " + std::to_string(cut.value()) + " tree edges gave " +
                           std::to_string(p.components().size()) + " components");
  }
  return p;
}

std::vector<EdgeId> repair_gadget_solution(const MulticutGadget& gadget, std::vector<EdgeId> deleted) {
  const ColoredGraph& g = gadget.graph;
  const RootedTree rooted = root_tree(g);
  std::sort(deleted.begin(), deleted.end());
  for (;;) {
    auto leaf_edge = std::find_if(deleted.begin(), deleted.end(), [&](EdgeId e) { return gadget.is_leaf_edge[e]; });
    if (leaf_edge == deleted.end()) break;
    const Vertex host = g.edge(*leaf_edge).u;
    const Vertex leaf = g.edge(*leaf_edge).v;
    deleted.erase(leaf_edge);

    const Partition p = Partition::from_deleted(g, deleted);
    const auto& members = *std::find_if(p.components().begin(), p.components().end(), [&](const auto& c) {
      return std::binary_search(c.begin(), c.end(), leaf);
    });
    for (Vertex w : members) {
      if (w == leaf || g.color(w) != g.color(leaf)) continue;
      // w is the partner leaf; it hangs on a different tree vertex.
      const Vertex partner_host = g.incidences(w).front().neighbor;
      deleted.push_back(rooted.path_edges(host, partner_host).front());
      std::sort(deleted.begin(), deleted.end());
      break;
    }
  }
  return deleted;
}

CutSolution gadget_solution_to_cut(const MulticutGadget& gadget, const std::vector<EdgeId>& deleted) {
  CutSolution cut;
  for (EdgeId e : deleted) {
    if (gadget.is_leaf_edge[e]) throw InputError("gadget solution deletes a leaf edge; repair it first");
    cut.cut_edges.push_back(gadget.tree_edge[e]);
  }
  std::sort(cut.cut_edges.begin(), cut.cut_edges.end());
  return cut;
}

SolveResult solve_mcc_tree(const ColoredGraph& g, TreeMode mode) {
  if (!is_forest(g)) throw ShapeError("tree MCC solver requires a forest");
  const ColoredGraph forest = normalize(g);
  SolveResult r = solve_per_component(forest, Problem::mcc, [mode](const ColoredGraph& tree) {
    const MulticutInstance m = mcc_to_multicut(tree);
    const CutSolution cut = mode == TreeMode::exact ? solve_multicut_exact(m) : approx2_multicut(m);
    SolveResult part;
    part.partition = decode_cut(tree, cut);
    return part;
  });
  r.partition = lift_normalized(g, forest, r.partition);
  r.objective_value = mcc_value(r.partition);
  r.algorithm_tag = mode == TreeMode::exact ? "tree-exact" : "tree-approx2";
  certify(g, Problem::mcc, r);
  return r;
}

}  // namespace ccp
