#include "ccp/oracle.hpp"

#include <algorithm>
#include <bitset>
#include <limits>
#include <string>

#include "ccp/errors.hpp"

namespace ccp {
namespace {

constexpr std::size_t kMaxOracleColors = 512;
using ColorSet = std::bitset<kMaxOracleColors>;

/// Dense re-numbering of the colors that actually occur.
std::vector<std::size_t> compress_colors(const ColoredGraph& g) {
  std::vector<Color> present(g.colors());
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());
  if (present.size() > kMaxOracleColors) {
    throw CapacityError("oracle supports at most " + std::to_string(kMaxOracleColors) + " distinct colors");
  }
  std::vector<std::size_t> dense(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    dense[v] = static_cast<std::size_t>(std::lower_bound(present.begin(), present.end(), g.color(v)) - present.begin());
  }
  return dense;
}

struct Incumbent {
  bool found = false;
  std::int64_t value = 0;
  std::vector<EdgeId> deleted;

  void offer(std::int64_t candidate, const std::vector<EdgeId>& candidate_deleted, bool maximize) {
    const bool better = !found || (maximize ? candidate > value : candidate < value);
    if (better || (candidate == value && candidate_deleted < deleted)) {
      found = true;
      value = candidate;
      deleted = candidate_deleted;
    }
  }
};

/// Depth-first search over keep/delete decisions in edge-id order. A deleted
/// edge is a cannot-link constraint, so every partition is reached once and
/// its deleted set is exactly the set of crossing edges.
class SubsetSearch {
 public:
  SubsetSearch(const ColoredGraph& g, Problem problem)
      : g_(g), problem_(problem), parent_(g.vertex_count()), size_(g.vertex_count(), 1),
        colors_(g.vertex_count()) {
    const auto dense = compress_colors(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      parent_[v] = v;
      colors_[v].set(dense[v]);
    }
  }

  Incumbent run() {
    recurse(0, 0);
    return best_;
  }

 private:
  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool violates_cannot_link(std::size_t ra, std::size_t rb) const {
    for (EdgeId e : deleted_) {
      const std::size_t fu = find(g_.edge(e).u);
      const std::size_t fv = find(g_.edge(e).v);
      if ((fu == ra && fv == rb) || (fu == rb && fv == ra)) return true;
    }
    return false;
  }

  void recurse(EdgeId next, std::int64_t closure) {
    const std::int64_t unions = static_cast<std::int64_t>(history_.size());
    const std::int64_t components = static_cast<std::int64_t>(g_.vertex_count()) - unions;
    if (problem_ == Problem::mcc && best_.found) {
      // Each remaining edge removes at most one component.
      const std::int64_t remaining = static_cast<std::int64_t>(g_.edge_count() - next);
      if (components - remaining > best_.value) return;
    }
    if (next == g_.edge_count()) {
      best_.offer(problem_ == Problem::mcc ? components : closure, deleted_, problem_ == Problem::mec);
      return;
    }
    const Edge& e = g_.edge(next);
    std::size_t ra = find(e.u);
    std::size_t rb = find(e.v);
    if (ra == rb) {
      recurse(next + 1, closure);
      return;
    }
    const bool disjoint = (colors_[ra] & colors_[rb]).none();
    if (disjoint && !violates_cannot_link(ra, rb)) {
      if (size_[ra] < size_[rb]) std::swap(ra, rb);
      const std::int64_t gain = static_cast<std::int64_t>(size_[ra] * size_[rb]);
      parent_[rb] = ra;
      size_[ra] += size_[rb];
      colors_[ra] |= colors_[rb];
      history_.push_back(rb);
      recurse(next + 1, closure + gain);
      history_.pop_back();
      colors_[ra] ^= colors_[rb];
      size_[ra] -= size_[rb];
      parent_[rb] = rb;
    }
    deleted_.push_back(next);
    recurse(next + 1, closure);
    deleted_.pop_back();
  }

  const ColoredGraph& g_;
  Problem problem_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<ColorSet> colors_;
  std::vector<std::size_t> history_;
  std::vector<EdgeId> deleted_;
  Incumbent best_;
};

SolveResult finish(const ColoredGraph& g, Problem problem, const Incumbent& best, const char* tag) {
  SolveResult r;
  r.partition = Partition::from_deleted(g, best.deleted);
  r.objective_value = objective(problem, r.partition);
  r.algorithm_tag = tag;
  certify(g, problem, r);
  return r;
}

SolveResult subset_oracle(const ColoredGraph& g, Problem problem, const OracleLimits& limits) {
  if (g.edge_count() > limits.max_edges_for_subset_enum) {
    throw CapacityError("oracle limited to " + std::to_string(limits.max_edges_for_subset_enum) +
                        " edges, instance has " + std::to_string(g.edge_count()));
  }
  SubsetSearch search(g, problem);
  return finish(g, problem, search.run(), "oracle");
}

SolveResult partition_oracle(const ColoredGraph& g, Problem problem, const OracleLimits& limits) {
  const std::size_t n = g.vertex_count();
  if (n > limits.max_vertices_for_partition_enum) {
    throw CapacityError("partition oracle limited to " + std::to_string(limits.max_vertices_for_partition_enum) +
                        " vertices, instance has " + std::to_string(n));
  }
  const auto dense = compress_colors(g);
  std::vector<std::size_t> block(n, 0);
  std::vector<ColorSet> block_colors;
  Incumbent best;

  auto evaluate = [&]() {
    const std::size_t blocks = block_colors.size();
    DisjointSets sets(n);
    std::vector<EdgeId> deleted;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      if (block[edge.u] == block[edge.v]) {
        sets.unite(edge.u, edge.v);
      } else {
        deleted.push_back(e);
      }
    }
    std::vector<std::size_t> root_of_block(blocks, static_cast<std::size_t>(-1));
    std::vector<std::int64_t> block_size(blocks, 0);
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t r = sets.find(v);
      if (root_of_block[block[v]] == static_cast<std::size_t>(-1)) root_of_block[block[v]] = r;
      if (root_of_block[block[v]] != r) return;  // block not connected
      ++block_size[block[v]];
    }
    std::int64_t value = 0;
    if (problem == Problem::mcc) {
      value = static_cast<std::int64_t>(blocks);
    } else {
      for (std::int64_t s : block_size) value += closure_edges(s);
    }
    best.offer(value, deleted, problem == Problem::mec);
  };

  auto recurse = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      evaluate();
      return;
    }
    for (std::size_t b = 0; b < block_colors.size(); ++b) {
      if (block_colors[b].test(dense[v])) continue;
      block[v] = b;
      block_colors[b].set(dense[v]);
      self(self, v + 1);
      block_colors[b].reset(dense[v]);
    }
    block[v] = block_colors.size();
    block_colors.emplace_back();
    block_colors.back().set(dense[v]);
    self(self, v + 1);
    block_colors.pop_back();
  };
  recurse(recurse, 0);
  return finish(g, problem, best, "oracle-partitions");
}

}  // namespace

SolveResult oracle_mcc(const ColoredGraph& g, const OracleLimits& limits) {
  return subset_oracle(g, Problem::mcc, limits);
}

SolveResult oracle_mec(const ColoredGraph& g, const OracleLimits& limits) {
  return subset_oracle(g, Problem::mec, limits);
}

SolveResult oracle_mcc_by_partitions(const ColoredGraph& g, const OracleLimits& limits) {
  return partition_oracle(g, Problem::mcc, limits);
}

SolveResult oracle_mec_by_partitions(const ColoredGraph& g, const OracleLimits& limits) {
  return partition_oracle(g, Problem::mec, limits);
}

}  // namespace ccp
