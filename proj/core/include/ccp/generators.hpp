#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ccp/graph.hpp"
#include "ccp/multicut.hpp"
#include "ccp/partition.hpp"

namespace ccp {

/// MinVC -> MCC gadget. Vertex ids: root 0 (color 0); head of path i is 1+i
/// (color 1+i); edge t = {a,b} (a<b, edges in lexicographic order) adds
/// vertex 1+n+2t on path a and 1+n+2t+1 on path b, both colored 1+n+t.
/// Vertex colors of `g` are ignored.
ColoredGraph vc_to_mcc(const ColoredGraph& g);

/// MaxIS -> MEC gadget. Path i occupies ids 1+i*p .. i*p+p: its head, one
/// vertex per incident edge (lexicographic edge order, color shared with the
/// partner vertex), then fresh-colored padding. Padding defaults to n^3 and
/// must be at least 1 + max degree.
ColoredGraph is_to_mec(const ColoredGraph& g, std::optional<std::size_t> padding = std::nullopt);

std::size_t default_is_padding(std::size_t n);

/// The solution built from an independent set: paths of vertices outside the
/// set are cut from the root.
Partition is_forward_solution(const ColoredGraph& g, const ColoredGraph& gadget, std::size_t padding,
                              const std::vector<Vertex>& independent_set);

/// kp(kp+1)/2 + (n-k) p(p-1)/2.
std::int64_t is_gadget_value(std::size_t n, std::size_t k, std::size_t padding);

ColoredGraph random_tree(std::size_t n, std::size_t q, std::uint64_t seed);
ColoredGraph random_path(std::size_t n, std::size_t q, std::uint64_t seed);
/// m distinct non-monochromatic edges chosen uniformly.
ColoredGraph random_graph(std::size_t n, std::size_t m, std::size_t q, std::uint64_t seed);
/// Uncolored simple graph (every vertex color 0, monochromatic edges allowed).
ColoredGraph random_plain_graph(std::size_t n, std::size_t m, std::uint64_t seed);
MulticutInstance random_multicut(std::size_t n, std::size_t requests, std::uint64_t seed);

enum class GeneratorKind { vc2mcc, is2mec, mct2mcc, random_tree, random_graph, random_path, random_multicut };

std::string to_string(GeneratorKind k);
GeneratorKind generator_kind_from_string(const std::string& s);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::random_tree;
  std::uint64_t seed = 0;
  std::size_t n = 8;
  /// Edge count for graph kinds.
  std::size_t m = 8;
  std::size_t q = 3;
  std::size_t requests = 3;
  std::optional<std::size_t> padding;
};

using GeneratedInstance = std::variant<ColoredGraph, MulticutInstance>;

/// Deterministic for a fixed spec. Gadget kinds draw their source instance
/// at random and return the gadget graph.
GeneratedInstance gen_random(const GeneratorSpec& spec);

}  // namespace ccp
