#include "ccp/path_dp.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "ccp/errors.hpp"
#include "ccp/tree.hpp"

namespace ccp {
namespace {

enum class Goal { fewest_segments, largest_closure };

SegmentPlan segment_dp(std::span<const Color> colors, Goal goal) {
  const std::size_t n = colors.size();
  constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::min();
  std::vector<std::int64_t> best(n + 1, kUnset);
  std::vector<std::size_t> cut(n + 1, 0);
  best[0] = 0;
  std::unordered_set<Color> window;
  for (std::size_t j = 1; j <= n; ++j) {
    window.clear();
    // Grow the last segment v_{t+1..j} leftwards until a color repeats.
    for (std::size_t t = j; t-- > 0;) {
      if (!window.insert(colors[t]).second) break;
      const auto len = static_cast<std::int64_t>(j - t);
      const std::int64_t candidate =
          goal == Goal::fewest_segments ? best[t] + 1 : best[t] + closure_edges(len);
      const bool improves = best[j] == kUnset ||
                            (goal == Goal::fewest_segments ? candidate < best[j] : candidate > best[j]);
      if (improves) {
        best[j] = candidate;
        cut[j] = t;
      }
    }
  }
  SegmentPlan plan;
  plan.value = best[n];
  for (std::size_t j = n; j > 0; j = cut[j]) plan.segment_ends.push_back(j);
  std::reverse(plan.segment_ends.begin(), plan.segment_ends.end());
  return plan;
}

SolveResult solve(const PathInstance& p, Problem problem) {
  std::vector<Color> colors;
  colors.reserve(p.order.size());
  for (Vertex v : p.order) colors.push_back(p.graph.color(v));
  const SegmentPlan plan =
      problem == Problem::mcc ? mcc_segments(colors) : mec_segments(colors);

  std::vector<EdgeId> deleted;
  for (std::size_t end : plan.segment_ends) {
    if (end < p.order.size()) deleted.push_back(*p.graph.find_edge(p.order[end - 1], p.order[end]));
  }
  SolveResult r;
  r.partition = Partition::from_deleted(p.graph, std::move(deleted));
  r.objective_value = plan.value;
  r.algorithm_tag = "path-dp";
  certify(p.graph, problem, r);
  return r;
}

}  // namespace

PathInstance make_path_instance(const ColoredGraph& g) {
  if (!is_path(g)) throw ShapeError("graph is not a path");
  PathInstance p{g, {}};
  const std::size_t n = g.vertex_count();
  if (n == 0) return p;
  Vertex start = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) <= 1) {
      start = v;
      break;
    }
  }
  p.order.reserve(n);
  Vertex prev = kNoVertex;
  for (Vertex v = start;;) {
    p.order.push_back(v);
    Vertex next = kNoVertex;
    for (const Incidence& inc : g.incidences(v)) {
      if (inc.neighbor != prev) next = inc.neighbor;
    }
    if (next == kNoVertex) break;
    prev = v;
    v = next;
  }
  return p;
}

SegmentPlan mcc_segments(std::span<const Color> colors) { return segment_dp(colors, Goal::fewest_segments); }

SegmentPlan mec_segments(std::span<const Color> colors) { return segment_dp(colors, Goal::largest_closure); }

SolveResult mcc_path(const PathInstance& p) { return solve(p, Problem::mcc); }

SolveResult mec_path(const PathInstance& p) { return solve(p, Problem::mec); }

}  // namespace ccp
