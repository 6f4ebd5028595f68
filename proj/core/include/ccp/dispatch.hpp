#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccp/graph.hpp"
#include "ccp/mec_fpt.hpp"
#include "ccp/mec_kernel.hpp"
#include "ccp/oracle.hpp"
#include "ccp/partition.hpp"

namespace ccp {

enum class Structure { path, tree, general };

std::string to_string(Structure s);

/// path: connected, acyclic, max degree <= 2; tree: connected and acyclic.
Structure detect_structure(const ColoredGraph& g);

enum class Algorithm { automatic, oracle, path_dp, tree_exact, approx2, colorcoding, kernel_then_solve };

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& s);

struct SolveOptions {
  ColorCodingOptions colorcoding;
  /// Decision threshold for kernel-then-solve; without it the optimum is searched.
  std::optional<std::int64_t> k;
  OracleLimits limits;
  bool verify = true;
};

/// Independent re-validation of a solution.
struct VerificationReport {
  bool feasible = false;
  std::optional<ColorConflict> conflict;
  std::int64_t mcc = 0;
  std::int64_t mec = 0;
  std::optional<std::int64_t> claimed;
  /// Objective the claim was compared against, when a problem is known.
  std::optional<Problem> problem;
  bool objective_matches = true;
  /// census[s] = number of components with s vertices.
  std::vector<std::size_t> census;

  bool passed() const { return feasible && objective_matches; }
};

VerificationReport verify_solution(const ColoredGraph& g, const std::vector<EdgeId>& deleted,
                                   std::optional<std::int64_t> claimed = std::nullopt,
                                   std::optional<Problem> problem = std::nullopt);

/// Human-readable summary, one fact per line.
std::string describe(const VerificationReport& r);

struct RunReport {
  std::string digest;
  Problem problem = Problem::mcc;
  Structure structure = Structure::general;
  std::string algorithm_tag;
  std::int64_t objective = 0;
  double wall_ms = 0;
  bool verified = false;
  std::optional<VerificationReport> verification;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::optional<std::size_t> h_max;
  /// Set when the run answered "OPT >= k?" rather than the optimum.
  std::optional<std::int64_t> decision_k;
  std::optional<bool> decision;
  std::optional<KernelReport> kernel;
  SolveResult result;
};

/// FNV-1a over the canonical text form of g.
std::string instance_digest(const ColoredGraph& g);

/// Routes to a solver, then verifies unless disabled. Throws DispatchError
/// when the algorithm does not fit the problem or structure.
RunReport dispatch_solve(Problem problem, Algorithm algo, const ColoredGraph& g, const SolveOptions& options = {});

}  // namespace ccp
