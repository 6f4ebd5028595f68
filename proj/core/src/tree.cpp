#include "ccp/tree.hpp"

#include <algorithm>

#include "ccp/errors.hpp"

namespace ccp {

RootedTree root_tree(const ColoredGraph& g, Vertex root) {
  if (!is_tree(g)) throw ShapeError("graph is not a tree");
  RootedTree t;
  const std::size_t n = g.vertex_count();
  t.parent.assign(n, kNoVertex);
  t.parent_edge.assign(n, kNoEdge);
  t.depth.assign(n, 0);
  t.children.assign(n, {});
  if (n == 0) return t;
  if (root >= n) throw InputError("root outside the tree");
  t.root = root;
  t.preorder.reserve(n);
  std::vector<Vertex> stack{root};
  std::vector<bool> seen(n, false);
  seen[root] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    t.preorder.push_back(v);
    for (const Incidence& inc : g.incidences(v)) {
      if (seen[inc.neighbor]) continue;
      seen[inc.neighbor] = true;
      t.parent[inc.neighbor] = v;
      t.parent_edge[inc.neighbor] = inc.edge;
      t.depth[inc.neighbor] = t.depth[v] + 1;
      t.children[v].push_back(inc.neighbor);
    }
    // Reverse push so the smallest child is expanded first.
    for (auto it = t.children[v].rbegin(); it != t.children[v].rend(); ++it) stack.push_back(*it);
  }
  return t;
}

Vertex RootedTree::lca(Vertex a, Vertex b) const {
  while (depth[a] > depth[b]) a = parent[a];
  while (depth[b] > depth[a]) b = parent[b];
  while (a != b) {
    a = parent[a];
    b = parent[b];
  }
  return a;
}

std::vector<EdgeId> RootedTree::path_edges(Vertex a, Vertex b) const {
  const Vertex top = lca(a, b);
  std::vector<EdgeId> up;
  for (Vertex v = a; v != top; v = parent[v]) up.push_back(parent_edge[v]);
  std::vector<EdgeId> down;
  for (Vertex v = b; v != top; v = parent[v]) down.push_back(parent_edge[v]);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

bool RootedTree::is_ancestor(Vertex ancestor, Vertex v) const {
  while (depth[v] > depth[ancestor]) v = parent[v];
  return v == ancestor;
}

}  // namespace ccp
