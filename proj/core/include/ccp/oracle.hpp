#pragma once

#include <cstddef>

#include "ccp/graph.hpp"
#include "ccp/partition.hpp"

namespace ccp {

struct OracleLimits {
  std::size_t max_edges_for_subset_enum = 22;
  std::size_t max_vertices_for_partition_enum = 10;
};

// Exhaustive solvers for desk-scale instances. Both enumerate edge subsets
// (each reachable partition exactly once) and break ties by the
// lexicographically smallest deleted-edge set. Throw CapacityError beyond
// the limits.
SolveResult oracle_mcc(const ColoredGraph& g, const OracleLimits& limits = {});
SolveResult oracle_mec(const ColoredGraph& g, const OracleLimits& limits = {});

// Same answers by enumerating set partitions of V and keeping those whose
// blocks are colorful and connected.
SolveResult oracle_mcc_by_partitions(const ColoredGraph& g, const OracleLimits& limits = {});
SolveResult oracle_mec_by_partitions(const ColoredGraph& g, const OracleLimits& limits = {});

}  // namespace ccp
