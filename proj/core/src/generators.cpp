#include "ccp/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ccp/errors.hpp"

namespace ccp {
namespace {

std::vector<Edge> sorted_edges(const ColoredGraph& g) { return {g.edges().begin(), g.edges().end()}; }

/// Uniform random recursive tree: vertex i (in creation order) hangs from a
/// uniform earlier vertex; final ids are a random permutation.
struct RandomTree {
  std::vector<Edge> edges;
  std::vector<Vertex> parent;
  std::vector<Vertex> id;
};

RandomTree random_tree_shape(std::size_t n, std::mt19937_64& rng) {
  RandomTree t{{}, std::vector<Vertex>(n, 0), std::vector<Vertex>(n)};
  std::iota(t.id.begin(), t.id.end(), 0u);
  std::shuffle(t.id.begin(), t.id.end(), rng);
  for (Vertex i = 1; i < n; ++i) {
    t.parent[i] = std::uniform_int_distribution<Vertex>(0, i - 1)(rng);
    t.edges.push_back(make_edge(t.id[i], t.id[t.parent[i]]));
  }
  return t;
}

Color other_color(Color avoid, std::size_t q, std::mt19937_64& rng) {
  std::uniform_int_distribution<Color> pick(0, static_cast<Color>(q - 2));
  const Color c = pick(rng);
  return c >= avoid ? c + 1 : c;
}

void require_colors(std::size_t n, std::size_t q) {
  if (n >= 2 && q < 2) throw InputError("a connected normalized instance with n >= 2 needs q >= 2");
  if (n >= 1 && q < 1) throw InputError("q must be positive");
}

}  // namespace

ColoredGraph vc_to_mcc(const ColoredGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::vector<Edge> edges = sorted_edges(g);
  const std::size_t m = edges.size();
  std::vector<Color> colors(1 + n + 2 * m);
  std::vector<Edge> tree;
  std::vector<Vertex> tail(n);
  for (Vertex i = 0; i < n; ++i) {
    colors[1 + i] = 1 + i;
    tree.push_back(make_edge(0, 1 + i));
    tail[i] = 1 + i;
  }
  for (std::size_t t = 0; t < m; ++t) {
    const auto a = static_cast<Vertex>(1 + n + 2 * t);
    const Vertex b = a + 1;
    colors[a] = colors[b] = static_cast<Color>(1 + n + t);
    tree.push_back(make_edge(tail[edges[t].u], a));
    tree.push_back(make_edge(tail[edges[t].v], b));
    tail[edges[t].u] = a;
    tail[edges[t].v] = b;
  }
  const std::size_t total = colors.size();
  return ColoredGraph(total, std::move(colors), std::move(tree), 1 + n + m);
}

std::size_t default_is_padding(std::size_t n) { return n * n * n; }

ColoredGraph is_to_mec(const ColoredGraph& g, std::optional<std::size_t> padding) {
  const std::size_t n = g.vertex_count();
  const std::size_t p = padding.value_or(default_is_padding(n));
  for (Vertex i = 0; i < n; ++i) {
    if (p < 1 + g.degree(i)) {
      throw InputError("padding " + std::to_string(p) + " is shorter than head plus edge vertices of vertex " +
                       std::to_string(i));
    }
  }
  const std::vector<Edge> edges = sorted_edges(g);
  const std::size_t m = edges.size();
  const std::size_t total = 1 + n * p;
  std::vector<Color> colors(total, 0);
  std::vector<Edge> tree;
  // Next free slot on each path; slot 0 is the head.
  std::vector<std::size_t> fill(n, 1);
  auto at = [p](std::size_t path, std::size_t slot) { return static_cast<Vertex>(1 + path * p + slot); };
  for (std::size_t t = 0; t < m; ++t) {
    colors[at(edges[t].u, fill[edges[t].u]++)] = static_cast<Color>(1 + n + t);
    colors[at(edges[t].v, fill[edges[t].v]++)] = static_cast<Color>(1 + n + t);
  }
  Color fresh = static_cast<Color>(1 + n + m);
  for (std::size_t i = 0; i < n; ++i) {
    colors[at(i, 0)] = static_cast<Color>(1 + i);
    for (std::size_t slot = fill[i]; slot < p; ++slot) colors[at(i, slot)] = fresh++;
    if (p > 0) tree.push_back(make_edge(0, at(i, 0)));
    for (std::size_t slot = 1; slot < p; ++slot) tree.push_back(make_edge(at(i, slot - 1), at(i, slot)));
  }
  return ColoredGraph(total, std::move(colors), std::move(tree), fresh);
}

Partition is_forward_solution(const ColoredGraph& g, const ColoredGraph& gadget, std::size_t padding,
                              const std::vector<Vertex>& independent_set) {
  std::vector<bool> chosen(g.vertex_count(), false);
  for (Vertex v : independent_set) chosen.at(v) = true;
  std::vector<EdgeId> deleted;
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    if (!chosen[i]) deleted.push_back(*gadget.find_edge(0, static_cast<Vertex>(1 + i * padding)));
  }
  return Partition::from_deleted(gadget, std::move(deleted));
}

std::int64_t is_gadget_value(std::size_t n, std::size_t k, std::size_t padding) {
  const auto kp = static_cast<std::int64_t>(k * padding);
  const auto p = static_cast<std::int64_t>(padding);
  return kp * (kp + 1) / 2 + static_cast<std::int64_t>(n - k) * p * (p - 1) / 2;
}

ColoredGraph random_tree(std::size_t n, std::size_t q, std::uint64_t seed) {
  require_colors(n, q);
  std::mt19937_64 rng(seed);
  RandomTree t = random_tree_shape(n, rng);
  std::vector<Color> created(n, 0);
  if (n > 0) created[0] = std::uniform_int_distribution<Color>(0, static_cast<Color>(q - 1))(rng);
  for (Vertex i = 1; i < n; ++i) created[i] = other_color(created[t.parent[i]], q, rng);
  std::vector<Color> colors(n);
  for (Vertex i = 0; i < n; ++i) colors[t.id[i]] = created[i];
  return ColoredGraph(n, std::move(colors), std::move(t.edges), q);
}

ColoredGraph random_path(std::size_t n, std::size_t q, std::uint64_t seed) {
  require_colors(n, q);
  std::mt19937_64 rng(seed);
  std::vector<Color> colors(n, 0);
  std::vector<Edge> edges;
  if (n > 0) colors[0] = std::uniform_int_distribution<Color>(0, static_cast<Color>(q - 1))(rng);
  for (Vertex i = 1; i < n; ++i) {
    colors[i] = other_color(colors[i - 1], q, rng);
    edges.push_back({i - 1, i});
  }
  return ColoredGraph(n, std::move(colors), std::move(edges), q);
}

ColoredGraph random_graph(std::size_t n, std::size_t m, std::size_t q, std::uint64_t seed) {
  if (n >= 1 && q < 1) throw InputError("q must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Color> colors(n);
  std::uniform_int_distribution<Color> pick(0, static_cast<Color>(std::max<std::size_t>(q, 1) - 1));
  for (auto& c : colors) c = pick(rng);
  std::vector<Edge> candidates;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (colors[u] != colors[v]) candidates.push_back({u, v});
    }
  }
  if (m > candidates.size()) {
    throw InputError("cannot place " + std::to_string(m) + " non-monochromatic edges; only " +
                     std::to_string(candidates.size()) + " pairs available");
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  candidates.resize(m);
  return ColoredGraph(n, std::move(colors), std::move(candidates), q);
}

ColoredGraph random_plain_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> candidates;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) candidates.push_back({u, v});
  }
  if (m > candidates.size()) throw InputError("too many edges for a simple graph on " + std::to_string(n) + " vertices");
  std::shuffle(candidates.begin(), candidates.end(), rng);
  candidates.resize(m);
  return ColoredGraph(n, std::vector<Color>(n, 0), std::move(candidates), 1);
}

MulticutInstance random_multicut(std::size_t n, std::size_t requests, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RandomTree t = random_tree_shape(n, rng);
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(std::min(requests, pairs.size()));
  return make_multicut(ColoredGraph(n, std::vector<Color>(n, 0), std::move(t.edges), 1), std::move(pairs));
}

std::string to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::vc2mcc: return "vc2mcc";
    case GeneratorKind::is2mec: return "is2mec";
    case GeneratorKind::mct2mcc: return "mct2mcc";
    case GeneratorKind::random_tree: return "random-tree";
    case GeneratorKind::random_graph: return "random-graph";
    case GeneratorKind::random_path: return "random-path";
    case GeneratorKind::random_multicut: return "random-multicut";
  }
  return "unknown";
}

GeneratorKind generator_kind_from_string(const std::string& s) {
  for (auto k : {GeneratorKind::vc2mcc, GeneratorKind::is2mec, GeneratorKind::mct2mcc, GeneratorKind::random_tree,
                 GeneratorKind::random_graph, GeneratorKind::random_path, GeneratorKind::random_multicut}) {
    if (to_string(k) == s) return k;
  }
  throw InputError("unknown generator kind '" + s + "'");
}

GeneratedInstance gen_random(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::vc2mcc: return vc_to_mcc(random_plain_graph(spec.n, spec.m, spec.seed));
    case GeneratorKind::is2mec: return is_to_mec(random_plain_graph(spec.n, spec.m, spec.seed), spec.padding);
    case GeneratorKind::mct2mcc: return multicut_to_mcc(random_multicut(spec.n, spec.requests, spec.seed)).graph;
    case GeneratorKind::random_tree: return random_tree(spec.n, spec.q, spec.seed);
    case GeneratorKind::random_graph: return random_graph(spec.n, spec.m, spec.q, spec.seed);
    case GeneratorKind::random_path: return random_path(spec.n, spec.q, spec.seed);
    case GeneratorKind::random_multicut: return random_multicut(spec.n, spec.requests, spec.seed);
  }
  throw InputError("unknown generator kind");
}

}  // namespace ccp
