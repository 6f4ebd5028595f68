#pragma once

#include <cstdint>
#include <vector>

#include "ccp/graph.hpp"

namespace ccp {

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

/// A tree hung from a root. Children are listed in ascending vertex id, which
/// fixes every traversal order used by the tree algorithms.
struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<std::uint32_t> depth;
  std::vector<std::vector<Vertex>> children;
  /// Parents before children.
  std::vector<Vertex> preorder;

  std::size_t size() const { return parent.size(); }
  bool is_leaf(Vertex v) const { return children[v].empty(); }

  Vertex lca(Vertex a, Vertex b) const;
  /// Edge ids on the tree path a..b, ordered from a to b.
  std::vector<EdgeId> path_edges(Vertex a, Vertex b) const;
  bool is_ancestor(Vertex ancestor, Vertex v) const;
};

/// Throws ShapeError unless g is a tree.
RootedTree root_tree(const ColoredGraph& g, Vertex root = 0);

}  // namespace ccp
