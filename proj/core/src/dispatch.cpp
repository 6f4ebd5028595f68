#include "ccp/dispatch.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "ccp/errors.hpp"
#include "ccp/io.hpp"
#include "ccp/multicut.hpp"
#include "ccp/path_dp.hpp"

namespace ccp {
namespace {

SolveResult lift_kernel_solution(const ColoredGraph& g, const KernelOutcome& out, const SolveResult& kernel_result) {
  const ColoredGraph& kernel = *out.reduced;
  std::vector<bool> deleted(kernel.edge_count(), false);
  for (EdgeId e : kernel_result.partition.deleted_edges()) deleted[e] = true;
  std::vector<EdgeId> kept;
  for (EdgeId e = 0; e < kernel.edge_count(); ++e) {
    if (!deleted[e]) {
      kept.push_back(*g.find_edge(out.kept_vertices[kernel.edge(e).u], out.kept_vertices[kernel.edge(e).v]));
    }
  }
  SolveResult r;
  r.partition = Partition::from_kept(g, kept);
  r.objective_value = mec_value(r.partition);
  return r;
}

SolveResult kernel_then_solve(const ColoredGraph& g, const SolveOptions& options, RunReport& report) {
  if (options.k) {
    const std::int64_t k = *options.k;
    const KernelOutcome out = kernelize_mec(g, k);
    report.kernel = out.report;
    report.decision_k = k;
    SolveResult r;
    if (out.is_yes()) {
      r.partition = *out.yes_witness;
      r.objective_value = mec_value(r.partition);
      r.algorithm_tag = "kernel-yes";
    } else {
      r = lift_kernel_solution(g, out, oracle_mec(*out.reduced, options.limits));
      r.algorithm_tag = "kernel+oracle";
    }
    report.decision = r.objective_value >= k;
    return r;
  }

  // Raise k past every certified value until the kernel rules "OPT >= k" out.
  SolveResult best;
  best.partition = Partition::singletons(g);
  best.objective_value = 0;
  for (std::int64_t k = 1;;) {
    const KernelOutcome out = kernelize_mec(g, k);
    report.kernel = out.report;
    SolveResult candidate;
    if (out.is_yes()) {
      candidate.partition = *out.yes_witness;
      candidate.objective_value = mec_value(candidate.partition);
    } else {
      candidate = lift_kernel_solution(g, out, oracle_mec(*out.reduced, options.limits));
      if (candidate.objective_value < k) break;
    }
    if (candidate.objective_value > best.objective_value) best = std::move(candidate);
    k = best.objective_value + 1;
  }
  best.algorithm_tag = "kernel-then-solve";
  return best;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw DispatchError(message);
}

}  // namespace

std::string to_string(Structure s) {
  switch (s) {
    case Structure::path: return "path";
    case Structure::tree: return "tree";
    case Structure::general: return "general";
  }
  return "unknown";
}

Structure detect_structure(const ColoredGraph& g) {
  if (is_path(g)) return Structure::path;
  if (is_tree(g)) return Structure::tree;
  return Structure::general;
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::automatic: return "auto";
    case Algorithm::oracle: return "oracle";
    case Algorithm::path_dp: return "path-dp";
    case Algorithm::tree_exact: return "tree-exact";
    case Algorithm::approx2: return "approx2";
    case Algorithm::colorcoding: return "colorcoding";
    case Algorithm::kernel_then_solve: return "kernel-then-solve";
  }
  return "unknown";
}

Algorithm algorithm_from_string(const std::string& s) {
  for (auto a : {Algorithm::automatic, Algorithm::oracle, Algorithm::path_dp, Algorithm::tree_exact, Algorithm::approx2,
                 Algorithm::colorcoding, Algorithm::kernel_then_solve}) {
    if (to_string(a) == s) return a;
  }
  throw DispatchError("unknown algorithm '" + s + "'");
}

VerificationReport verify_solution(const ColoredGraph& g, const std::vector<EdgeId>& deleted,
                                   std::optional<std::int64_t> claimed, std::optional<Problem> problem) {
  VerificationReport r;
  const Partition p = Partition::from_deleted(g, deleted);
  r.conflict = find_color_conflict(g, p);
  r.feasible = !r.conflict;
  r.mcc = mcc_value(p);
  r.mec = mec_value(p);
  r.claimed = claimed;
  r.problem = problem;
  if (claimed) {
    r.objective_matches = problem ? *claimed == objective(*problem, p) : (*claimed == r.mcc || *claimed == r.mec);
  }
  for (std::size_t size : p.component_sizes()) {
    if (r.census.size() <= size) r.census.resize(size + 1, 0);
    ++r.census[size];
  }
  return r;
}

std::string describe(const VerificationReport& r) {
  std::ostringstream out;
  out << "feasible: " << (r.feasible ? "yes" : "no") << '\n';
  if (r.conflict) {
    out << "conflict: component " << r.conflict->component << " holds vertices " << r.conflict->first << " and "
        << r.conflict->second << " of color " << r.conflict->color << '\n';
  }
  out << "components (mcc): " << r.mcc << '\n' << "closure edges (mec): " << r.mec << '\n';
  if (r.claimed) {
    out << "claimed objective: " << *r.claimed << (r.objective_matches ? " (matches)" : " (MISMATCH)") << '\n';
    if (!r.objective_matches && r.problem) {
      out << "recomputed " << to_string(*r.problem) << ": " << (*r.problem == Problem::mcc ? r.mcc : r.mec) << '\n';
    }
  }
  out << "census (size x count):";
  for (std::size_t s = 1; s < r.census.size(); ++s) {
    if (r.census[s] > 0) out << ' ' << s << 'x' << r.census[s];
  }
  out << '\n' << "verdict: " << (r.passed() ? "pass" : "fail") << '\n';
  return out.str();
}

std::string instance_digest(const ColoredGraph& g) {
  std::ostringstream text;
  write_graph(text, g);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunReport dispatch_solve(Problem problem, Algorithm algo, const ColoredGraph& g, const SolveOptions& options) {
  RunReport report;
  report.digest = instance_digest(g);
  report.problem = problem;
  report.structure = detect_structure(g);
  const bool forest = is_forest(g);

  Algorithm chosen = algo;
  if (algo == Algorithm::automatic) {
    if (report.structure == Structure::path) {
      chosen = Algorithm::path_dp;
    } else if (forest) {
      chosen = problem == Problem::mcc ? Algorithm::tree_exact : Algorithm::colorcoding;
    } else {
      chosen = problem == Problem::mcc ? Algorithm::oracle : Algorithm::kernel_then_solve;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  switch (chosen) {
    case Algorithm::automatic:
    case Algorithm::oracle:
      report.result = problem == Problem::mcc ? oracle_mcc(g, options.limits) : oracle_mec(g, options.limits);
      break;
    case Algorithm::path_dp: {
      require(report.structure == Structure::path, "path-dp needs a path, got a " + to_string(report.structure));
      const PathInstance p = make_path_instance(g);
      report.result = problem == Problem::mcc ? mcc_path(p) : mec_path(p);
      break;
    }
    case Algorithm::tree_exact:
    case Algorithm::approx2:
      require(problem == Problem::mcc, to_string(chosen) + " solves MCC only");
      require(forest, to_string(chosen) + " needs a tree or forest");
      report.result = solve_mcc_tree(g, chosen == Algorithm::tree_exact ? TreeMode::exact : TreeMode::approx);
      break;
    case Algorithm::colorcoding: {
      require(problem == Problem::mec, "colorcoding solves MEC only");
      require(forest, "colorcoding needs a tree or forest");
      const ColorCodingOptions& cc = options.colorcoding;
      report.result = mec_tree_colorcoding(g, cc);
      report.seed = cc.seed;
      report.h_max = cc.h_max.value_or(std::min(g.vertex_count(), kMaxLabels));
      report.trials = cc.mode == LabelMode::randomized ? (cc.trials == 0 ? default_trials(*report.h_max) : cc.trials) : 0;
      break;
    }
    case Algorithm::kernel_then_solve:
      require(problem == Problem::mec, "kernel-then-solve solves MEC only");
      report.result = kernel_then_solve(g, options, report);
      break;
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.algorithm_tag = report.result.algorithm_tag;
  report.objective = report.result.objective_value;

  if (options.verify) {
    const bool certified = certify(g, problem, report.result);
    report.verification =
        verify_solution(g, report.result.partition.deleted_edges(), report.result.objective_value, problem);
    report.verified = certified && report.verification->passed();
  } else {
    report.result.certificate_checked = false;
  }
  return report;
}

}  // namespace ccp
