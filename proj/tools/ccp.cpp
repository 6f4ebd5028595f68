// ccp: command-line front end for the colorful-components solvers.

#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "ccp/dispatch.hpp"
#include "ccp/errors.hpp"
#include "ccp/generators.hpp"
#include "ccp/io.hpp"
#include "ccp/mec_kernel.hpp"
#include "ccp/multicut.hpp"
#include "json.hpp"

namespace {

using namespace ccp;
using nlohmann::ordered_json;

enum ExitCode { kOk = 0, kFailed = 1, kDecisionNo = 2, kCapacity = 3, kMalformed = 4 };

/// Writes to the file named by `path`, or stdout when it is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw InputError("cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

ordered_json deleted_pairs(const ColoredGraph& g, const Partition& p) {
  ordered_json out = ordered_json::array();
  for (EdgeId e : p.deleted_edges()) out.push_back({g.edge(e).u, g.edge(e).v});
  return out;
}

ordered_json to_json(const VerificationReport& r) {
  ordered_json j{{"feasible", r.feasible}, {"mcc", r.mcc}, {"mec", r.mec}, {"passed", r.passed()}};
  if (r.claimed) j["claimed"] = *r.claimed;
  if (r.problem) j["problem"] = to_string(*r.problem);
  j["objective_matches"] = r.objective_matches;
  if (r.conflict) {
    j["conflict"] = {{"component", r.conflict->component},
                     {"color", r.conflict->color},
                     {"vertices", {r.conflict->first, r.conflict->second}}};
  }
  ordered_json census = ordered_json::object();
  for (std::size_t s = 1; s < r.census.size(); ++s) {
    if (r.census[s] > 0) census[std::to_string(s)] = r.census[s];
  }
  j["census"] = census;
  return j;
}

ordered_json to_json(const KernelReport& r) {
  return {{"trigger", to_string(r.trigger)},
          {"input_vertices", r.input_vertices},
          {"kernel_vertices", r.kernel_vertices},
          {"internal_vertices", r.internal_vertices},
          {"leaf_parents", r.leaf_parents},
          {"leaf_classes", r.leaf_classes},
          {"subclasses", r.subclasses},
          {"max_subclasses_per_class", r.max_subclasses_per_class},
          {"removed_vertices", r.removed_vertices}};
}

ordered_json to_json(const ColoredGraph& g, const RunReport& r) {
  ordered_json j{{"instance", r.digest},
                 {"vertices", g.vertex_count()},
                 {"edges", g.edge_count()},
                 {"structure", to_string(r.structure)},
                 {"problem", to_string(r.problem)},
                 {"algorithm", r.algorithm_tag},
                 {"objective", r.objective},
                 {"wall_ms", r.wall_ms},
                 {"verified", r.verified}};
  if (r.h_max) {
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["h_max"] = *r.h_max;
  }
  if (r.decision_k) {
    j["decision_k"] = *r.decision_k;
    j["decision"] = r.decision.value_or(false);
  }
  if (r.kernel) j["kernel"] = to_json(*r.kernel);
  if (r.verification) j["verification"] = to_json(*r.verification);
  j["deleted"] = deleted_pairs(g, r.result.partition);
  return j;
}

struct SolveArgs {
  std::string graph;
  std::string problem = "mcc";
  std::string algo = "auto";
  std::optional<std::int64_t> k;
  std::optional<std::size_t> h_max;
  std::string mode = "exhaustive";
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  bool recolor = false;
  bool no_verify = false;
  bool json = false;
  std::string output;
};

SolveOptions solve_options(const SolveArgs& a) {
  SolveOptions o;
  o.k = a.k;
  o.verify = !a.no_verify;
  o.colorcoding.h_max = a.h_max;
  o.colorcoding.mode = a.mode == "randomized" ? LabelMode::randomized : LabelMode::exhaustive;
  o.colorcoding.trials = a.trials;
  o.colorcoding.seed = a.seed;
  o.colorcoding.threads = a.threads;
  o.colorcoding.recolor = a.recolor;
  return o;
}

int run_solve(const SolveArgs& a) {
  const ColoredGraph g = read_graph_file(a.graph);
  const RunReport r = dispatch_solve(problem_from_string(a.problem), algorithm_from_string(a.algo), g, solve_options(a));
  if (!a.output.empty()) {
    Output out(a.output);
    write_solution(out.stream(), g, r.result.partition, r.objective);
  }
  if (a.json) {
    std::cout << to_json(g, r).dump(2) << '\n';
  } else {
    std::cout << "instance " << r.digest << '\n'
              << "structure " << to_string(r.structure) << '\n'
              << "problem " << to_string(r.problem) << '\n'
              << "algorithm " << r.algorithm_tag << '\n'
              << "objective " << r.objective << '\n';
    if (r.decision_k) std::cout << "decision OPT >= " << *r.decision_k << ": " << (*r.decision ? "yes" : "no") << '\n';
    if (r.h_max) std::cout << "h_max " << *r.h_max << " trials " << r.trials << " seed " << r.seed << '\n';
    std::cout << "verified " << (a.no_verify ? "skipped" : r.verified ? "yes" : "no") << '\n'
              << "wall_ms " << r.wall_ms << '\n';
    if (a.output.empty()) write_solution(std::cout, g, r.result.partition, r.objective);
  }
  if (!a.no_verify && !r.verified) {
    std::cerr << "error: solution failed independent verification\n";
    return kFailed;
  }
  if (r.decision && !*r.decision) return kDecisionNo;
  return kOk;
}

struct KernelArgs {
  std::string graph;
  std::string problem = "mec";
  std::int64_t k = 1;
  bool tree = false;
  std::string output;
};

int run_kernelize(const KernelArgs& a) {
  if (a.problem != "mec") throw DispatchError("kernelize supports --problem mec only");
  const ColoredGraph g = read_graph_file(a.graph);
  const KernelOutcome out = a.tree ? kernelize_mec_tree(g, a.k) : kernelize_mec(g, a.k);
  ordered_json j{{"instance", instance_digest(g)}, {"k", a.k}, {"tree_rule", a.tree},
                 {"answer", out.is_yes() ? "yes" : "reduced"}};
  j["report"] = to_json(out.report);
  if (out.is_yes()) {
    j["witness_value"] = mec_value(*out.yes_witness);
    if (!a.output.empty()) {
      Output file(a.output);
      write_solution(file.stream(), g, *out.yes_witness, mec_value(*out.yes_witness));
    }
  } else {
    j["kept_vertices"] = out.kept_vertices;
    if (!a.output.empty()) {
      Output file(a.output);
      write_graph(file.stream(), *out.reduced);
    }
  }
  std::cout << j.dump(2) << '\n';
  return kOk;
}

struct ReduceArgs {
  std::string input;
  std::string from;
  std::string to;
  std::optional<std::size_t> padding;
  std::optional<std::size_t> budget;
  std::string output;
};

int run_reduce(const ReduceArgs& a) {
  Output out(a.output);
  if (a.from == "vc" && a.to == "mcc") {
    write_graph(out.stream(), vc_to_mcc(read_graph_file(a.input)));
  } else if (a.from == "is" && a.to == "mec") {
    write_graph(out.stream(), is_to_mec(read_graph_file(a.input), a.padding));
  } else if (a.from == "mct" && a.to == "mcc") {
    write_graph(out.stream(), multicut_to_mcc(read_multicut_file(a.input)).graph);
  } else if (a.from == "mcc" && a.to == "mct") {
    write_multicut(out.stream(), mcc_to_multicut(read_graph_file(a.input)));
  } else if (a.from == "mct" && a.to == "mct") {
    const ReducedMulticut r = reduce_multicut(read_multicut_file(a.input), a.budget);
    std::cerr << "forced cuts " << r.forced.size() << (r.feasible ? "" : " (budget exceeded)") << '\n';
    write_multicut(out.stream(), r.instance);
    if (!r.feasible) return kDecisionNo;
  } else {
    throw DispatchError("no reduction from '" + a.from + "' to '" + a.to + "'");
  }
  return kOk;
}

int run_gen(const GeneratorSpec& spec, const std::string& output) {
  Output out(output);
  const GeneratedInstance inst = gen_random(spec);
  if (const auto* g = std::get_if<ColoredGraph>(&inst)) {
    write_graph(out.stream(), *g);
  } else {
    write_multicut(out.stream(), std::get<MulticutInstance>(inst));
  }
  return kOk;
}

int run_verify(const std::string& graph, const std::string& solution, const std::optional<std::string>& problem,
               bool json) {
  const ColoredGraph g = read_graph_file(graph);
  const SolutionFile s = read_solution_file(solution);
  std::optional<Problem> p;
  if (problem) p = problem_from_string(*problem);
  const VerificationReport r = verify_solution(g, resolve_edges(g, s.deleted), s.objective, p);
  if (json) {
    std::cout << to_json(r).dump(2) << '\n';
  } else {
    std::cout << describe(r);
  }
  return r.passed() ? kOk : kFailed;
}

struct BenchArgs {
  std::string kind = "random-tree";
  std::vector<std::size_t> sizes{6, 8, 10};
  std::size_t reps = 3;
  std::uint64_t seed = 1;
  std::size_t q = 3;
  double density = 1.5;
  std::string problem = "mcc";
  std::vector<std::string> algos{"auto"};
  SolveArgs solve;
};

int run_bench(const BenchArgs& a) {
  const Problem problem = problem_from_string(a.problem);
  std::cout << "kind,n,m,q,seed,problem,algorithm,objective,verified,wall_ms\n";
  int status = kOk;
  for (std::size_t n : a.sizes) {
    for (std::size_t rep = 0; rep < a.reps; ++rep) {
      GeneratorSpec spec;
      spec.kind = generator_kind_from_string(a.kind);
      spec.n = n;
      spec.q = a.q;
      spec.m = static_cast<std::size_t>(a.density * static_cast<double>(n));
      spec.seed = a.seed + 1000003 * n + rep;
      // Some colorings of random-graph leave too few non-monochromatic pairs;
      // later seeds are tried in a fixed order, and the seed used is reported.
      std::optional<GeneratedInstance> generated;
      for (int attempt = 0; !generated; ++attempt, spec.seed += 7919) {
        try {
          generated = gen_random(spec);
        } catch (const InputError&) {
          if (attempt == 99) throw;
        }
      }
      spec.seed -= 7919;
      const GeneratedInstance& inst = *generated;
      const auto* g = std::get_if<ColoredGraph>(&inst);
      if (!g) throw DispatchError("bench needs a graph generator kind");
      SolveArgs solve = a.solve;
      solve.seed = spec.seed;
      for (const std::string& algo : a.algos) {
        const RunReport r = dispatch_solve(problem, algorithm_from_string(algo), *g, solve_options(solve));
        if (!r.verified) status = kFailed;
        std::cout << a.kind << ',' << g->vertex_count() << ',' << g->edge_count() << ',' << a.q << ',' << spec.seed
                  << ',' << a.problem << ',' << r.algorithm_tag << ',' << r.objective << ','
                  << (r.verified ? "yes" : "no") << ',' << r.wall_ms << '\n';
      }
    }
  }
  return status;
}

int run_normalize(const std::string& graph, const std::string& output) {
  const ColoredGraph g = read_graph_file(graph);
  const ColoredGraph n = normalize(g);
  std::cerr << "removed " << g.edge_count() - n.edge_count() << " monochromatic edges\n";
  Output out(output);
  write_graph(out.stream(), n);
  return kOk;
}

void add_solver_flags(CLI::App* cmd, SolveArgs& a, bool seed_option = true) {
  cmd->add_option("--h-max", a.h_max, "Largest label count for color coding");
  cmd->add_option("--mode", a.mode, "Labeling family for color coding")
      ->check(CLI::IsMember({"exhaustive", "randomized"}));
  cmd->add_option("--trials", a.trials, "Randomized trials per label count (0 = e^h ln 100)");
  if (seed_option) cmd->add_option("--seed", a.seed, "Seed for randomized labelings");
  cmd->add_option("--threads", a.threads, "Worker threads for color coding")->check(CLI::PositiveNumber);
  cmd->add_flag("--recolor", a.recolor, "Track recolored component colors instead of raw colors");
  cmd->add_flag("--no-verify", a.no_verify, "Skip independent verification");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colorful components: MCC and MEC solvers, kernels, gadgets and verification"};
  app.require_subcommand(1);
  std::function<int()> action;

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve MCC or MEC on a graph file");
  solve_cmd->add_option("graph", solve.graph, "Graph file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--problem", solve.problem)->check(CLI::IsMember({"mcc", "mec"}));
  solve_cmd->add_option("--algo", solve.algo, "auto, oracle, path-dp, tree-exact, approx2, colorcoding, kernel-then-solve");
  solve_cmd->add_option("-k", solve.k, "Decision threshold for kernel-then-solve");
  solve_cmd->add_option("-o,--output", solve.output, "Write the solution file here");
  solve_cmd->add_flag("--json", solve.json, "Print a JSON report");
  add_solver_flags(solve_cmd, solve);
  solve_cmd->callback([&] { action = [&] { return run_solve(solve); }; });

  KernelArgs kernel;
  auto* kernel_cmd = app.add_subcommand("kernelize", "Run the MEC decision kernel");
  kernel_cmd->add_option("graph", kernel.graph)->required()->check(CLI::ExistingFile);
  kernel_cmd->add_option("--problem", kernel.problem);
  kernel_cmd->add_option("-k", kernel.k)->required();
  kernel_cmd->add_flag("--tree", kernel.tree, "Apply the one-leaf-per-parent-and-color tree rule");
  kernel_cmd->add_option("-o,--output", kernel.output, "Witness solution or reduced graph");
  kernel_cmd->callback([&] { action = [&] { return run_kernelize(kernel); }; });

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build a gadget or apply multicut reduction rules");
  reduce_cmd->add_option("input", reduce.input)->required()->check(CLI::ExistingFile);
  reduce_cmd->add_option("--from", reduce.from)->required()->check(CLI::IsMember({"vc", "is", "mct", "mcc"}));
  reduce_cmd->add_option("--to", reduce.to)->required()->check(CLI::IsMember({"mcc", "mec", "mct"}));
  reduce_cmd->add_option("--padding", reduce.padding, "Path length for the independent-set gadget (default n^3)");
  reduce_cmd->add_option("--budget", reduce.budget, "Cut budget for multicut reduction rules");
  reduce_cmd->add_option("-o,--output", reduce.output);
  reduce_cmd->callback([&] { action = [&] { return run_reduce(reduce); }; });

  GeneratorSpec spec;
  std::string kind = "random-tree";
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded instance");
  gen_cmd->add_option("--kind", kind)->check(CLI::IsMember(
      {"vc2mcc", "is2mec", "mct2mcc", "random-tree", "random-graph", "random-path", "random-multicut"}));
  gen_cmd->add_option("--seed", spec.seed);
  gen_cmd->add_option("-n", spec.n, "Vertices");
  gen_cmd->add_option("-m", spec.m, "Edges (graph kinds)");
  gen_cmd->add_option("-q", spec.q, "Colors");
  gen_cmd->add_option("--requests", spec.requests, "Terminal pairs (multicut kinds)");
  gen_cmd->add_option("--padding", spec.padding, "Path length for is2mec");
  gen_cmd->add_option("-o,--output", gen_output);
  gen_cmd->callback([&] {
    spec.kind = generator_kind_from_string(kind);
    action = [&] { return run_gen(spec, gen_output); };
  });

  std::string verify_graph;
  std::string verify_solution_path;
  std::optional<std::string> verify_problem;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution file against a graph");
  verify_cmd->add_option("graph", verify_graph)->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("solution", verify_solution_path)->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--problem", verify_problem, "Objective the 'obj' line claims")
      ->check(CLI::IsMember({"mcc", "mec"}));
  verify_cmd->add_flag("--json", verify_json);
  verify_cmd->callback([&] {
    action = [&] { return run_verify(verify_graph, verify_solution_path, verify_problem, verify_json); };
  });

  std::string normalize_graph;
  std::string normalize_output;
  auto* normalize_cmd = app.add_subcommand("normalize", "Delete monochromatic edges");
  normalize_cmd->add_option("graph", normalize_graph)->required()->check(CLI::ExistingFile);
  normalize_cmd->add_option("-o,--output", normalize_output);
  normalize_cmd->callback([&] { action = [&] { return run_normalize(normalize_graph, normalize_output); }; });

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Solve seeded instance families and print CSV");
  bench_cmd->add_option("--kind", bench.kind)->check(CLI::IsMember({"random-tree", "random-graph", "random-path"}));
  bench_cmd->add_option("--sizes", bench.sizes, "Vertex counts")->delimiter(',');
  bench_cmd->add_option("--reps", bench.reps, "Instances per size");
  bench_cmd->add_option("--seed", bench.seed, "Base seed for instances and randomized labelings");
  bench_cmd->add_option("-q", bench.q, "Colors");
  bench_cmd->add_option("--density", bench.density, "Edges per vertex for random-graph");
  bench_cmd->add_option("--problem", bench.problem)->check(CLI::IsMember({"mcc", "mec"}));
  bench_cmd->add_option("--algos", bench.algos, "Algorithms to compare")->delimiter(',');
  add_solver_flags(bench_cmd, bench.solve, false);
  bench_cmd->callback([&] { action = [&] { return run_bench(bench); }; });

  try {
    app.parse(argc, argv);
    return action();
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
}
