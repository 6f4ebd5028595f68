#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ccp/graph.hpp"
#include "ccp/partition.hpp"

namespace ccp {

/// A path graph together with its vertices in path order.
struct PathInstance {
  ColoredGraph graph;
  std::vector<Vertex> order;
};

/// Orders the vertices of a path graph starting from its smallest-id
/// endpoint. Throws ShapeError if g is not a (connected) path.
PathInstance make_path_instance(const ColoredGraph& g);

/// Optimal split of a color sequence into contiguous colorful segments.
struct SegmentPlan {
  std::int64_t value = 0;
  /// Segment end positions (exclusive), ascending; the last one is n.
  std::vector<std::size_t> segment_ends;
};

/// Minimizes the number of segments. Table M[0..n] with M[0]=0.
SegmentPlan mcc_segments(std::span<const Color> colors);
/// Maximizes the sum of s(s-1)/2 over segment sizes s.
SegmentPlan mec_segments(std::span<const Color> colors);

SolveResult mcc_path(const PathInstance& p);
SolveResult mec_path(const PathInstance& p);

}  // namespace ccp
