#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ccp/graph.hpp"
#include "ccp/multicut.hpp"
#include "ccp/partition.hpp"

namespace ccp {

// Line-oriented text formats; `#` starts a comment. Parse errors are thrown
// as InputError prefixed with "line N:".
//
//   graph     p ccg <n> <m> <q> / v <id> <color> / e <u> <v>
//   solution  d <u> <v> ... / obj <value>
//   multicut  p mct <n> <r> / e <u> <v> / q <x> <y>

ColoredGraph read_graph(std::istream& in);
ColoredGraph read_graph_file(const std::filesystem::path& path);
void write_graph(std::ostream& out, const ColoredGraph& g);

struct SolutionFile {
  std::vector<Edge> deleted;
  std::optional<std::int64_t> objective;
};

SolutionFile read_solution(std::istream& in);
SolutionFile read_solution_file(const std::filesystem::path& path);
void write_solution(std::ostream& out, const ColoredGraph& g, const Partition& p, std::int64_t objective);

/// Edge ids of the solution's deleted pairs; InputError if a pair is not an edge of g.
std::vector<EdgeId> resolve_edges(const ColoredGraph& g, const std::vector<Edge>& pairs);

MulticutInstance read_multicut(std::istream& in);
MulticutInstance read_multicut_file(const std::filesystem::path& path);
void write_multicut(std::ostream& out, const MulticutInstance& m);

}  // namespace ccp
