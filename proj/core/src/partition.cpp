#include "ccp/partition.hpp"

#include <algorithm>
#include <unordered_map>

#include "ccp/errors.hpp"

namespace ccp {
namespace {

std::vector<std::vector<Vertex>> components_from(const ColoredGraph& g, const std::vector<EdgeId>& deleted) {
  std::vector<bool> mask(g.edge_count(), false);
  for (EdgeId e : deleted) mask[e] = true;
  const auto labels = component_labels(g, mask);
  std::size_t count = 0;
  for (std::size_t l : labels) count = std::max(count, l + 1);
  std::vector<std::vector<Vertex>> comps(count);
  for (Vertex v = 0; v < g.vertex_count(); ++v) comps[labels[v]].push_back(v);
  return comps;
}

void check_edge_ids(const ColoredGraph& g, const std::vector<EdgeId>& ids) {
  for (EdgeId e : ids) {
    if (e >= g.edge_count()) throw InputError("unknown edge id " + std::to_string(e));
  }
}

}  // namespace

Partition Partition::from_deleted(const ColoredGraph& g, std::vector<EdgeId> deleted) {
  check_edge_ids(g, deleted);
  std::sort(deleted.begin(), deleted.end());
  deleted.erase(std::unique(deleted.begin(), deleted.end()), deleted.end());
  Partition p;
  p.components_ = components_from(g, deleted);
  p.deleted_ = std::move(deleted);
  return p;
}

Partition Partition::from_kept(const ColoredGraph& g, const std::vector<EdgeId>& kept) {
  check_edge_ids(g, kept);
  std::vector<bool> keep(g.edge_count(), false);
  for (EdgeId e : kept) keep[e] = true;
  std::vector<EdgeId> deleted;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!keep[e]) deleted.push_back(e);
  }
  return from_deleted(g, std::move(deleted));
}

Partition Partition::singletons(const ColoredGraph& g) {
  std::vector<EdgeId> all(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) all[e] = e;
  return from_deleted(g, std::move(all));
}

Partition::Partition(const ColoredGraph& g, std::vector<EdgeId> deleted, std::vector<std::vector<Vertex>> components) {
  *this = from_deleted(g, std::move(deleted));
  for (auto& c : components) std::sort(c.begin(), c.end());
  std::sort(components.begin(), components.end());
  if (components != components_) {
    throw InputError("component list does not match the deleted edge set");
  }
}

std::vector<std::size_t> Partition::component_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(components_.size());
  for (const auto& c : components_) sizes.push_back(c.size());
  return sizes;
}

std::int64_t mec_value(const Partition& p) {
  std::int64_t total = 0;
  for (const auto& c : p.components()) total += closure_edges(static_cast<std::int64_t>(c.size()));
  return total;
}

std::int64_t mcc_value(const Partition& p) { return static_cast<std::int64_t>(p.components().size()); }

std::optional<ColorConflict> find_color_conflict(const ColoredGraph& g, const Partition& p) {
  std::unordered_map<Color, Vertex> seen;
  for (std::size_t i = 0; i < p.components().size(); ++i) {
    seen.clear();
    for (Vertex v : p.components()[i]) {
      auto [it, inserted] = seen.emplace(g.color(v), v);
      if (!inserted) return ColorConflict{i, g.color(v), it->second, v};
    }
  }
  return std::nullopt;
}

bool is_colorful_partition(const ColoredGraph& g, const std::vector<EdgeId>& deleted) {
  return !find_color_conflict(g, Partition::from_deleted(g, deleted)).has_value();
}

std::string to_string(Problem p) { return p == Problem::mcc ? "mcc" : "mec"; }

Problem problem_from_string(const std::string& s) {
  if (s == "mcc") return Problem::mcc;
  if (s == "mec") return Problem::mec;
  throw InputError("unknown problem '" + s + "' (expected mcc or mec)");
}

std::int64_t objective(Problem problem, const Partition& p) {
  return problem == Problem::mcc ? mcc_value(p) : mec_value(p);
}

bool certify(const ColoredGraph& g, Problem problem, SolveResult& result) {
  const Partition recomputed = Partition::from_deleted(g, result.partition.deleted_edges());
  result.certificate_checked = recomputed == result.partition && !find_color_conflict(g, recomputed) &&
                               objective(problem, recomputed) == result.objective_value;
  return result.certificate_checked;
}

Partition lift_partition(const ColoredGraph& parent, const std::vector<InducedSubgraph>& parts,
                         const std::vector<Partition>& part_solutions) {
  std::vector<EdgeId> deleted;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (EdgeId e : part_solutions[i].deleted_edges()) deleted.push_back(parts[i].edge_to_parent[e]);
  }
  return Partition::from_deleted(parent, std::move(deleted));
}

Partition lift_normalized(const ColoredGraph& g, const ColoredGraph& normalized, const Partition& p) {
  std::vector<EdgeId> deleted;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.color(g.edge(e).u) == g.color(g.edge(e).v)) deleted.push_back(e);
  }
  for (EdgeId e : p.deleted_edges()) {
    deleted.push_back(*g.find_edge(normalized.edge(e).u, normalized.edge(e).v));
  }
  return Partition::from_deleted(g, std::move(deleted));
}

}  // namespace ccp
