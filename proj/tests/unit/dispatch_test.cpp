#include <gtest/gtest.h>

#include "ccp/dispatch.hpp"
#include "ccp/errors.hpp"
#include "ccp/generators.hpp"
#include "ccp/oracle.hpp"
#include "shapes.hpp"

namespace ccp {
namespace {

TEST(Structure, Detection) {
  EXPECT_EQ(detect_structure(test::rainbow_path(4)), Structure::path);
  EXPECT_EQ(detect_structure(test::star_graph(0, {1, 2, 3})), Structure::tree);
  EXPECT_EQ(detect_structure(ColoredGraph(3, {0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}})), Structure::general);
  EXPECT_EQ(detect_structure(ColoredGraph(3, {0, 1, 2}, {{0, 1}})), Structure::general);
}

TEST(Algorithms, NamesRoundTrip) {
  for (auto a : {Algorithm::automatic, Algorithm::oracle, Algorithm::path_dp, Algorithm::tree_exact, Algorithm::approx2,
                 Algorithm::colorcoding, Algorithm::kernel_then_solve}) {
    EXPECT_EQ(algorithm_from_string(to_string(a)), a);
  }
  EXPECT_THROW(algorithm_from_string("magic"), DispatchError);
}

TEST(Dispatch, AutomaticRouting) {
  EXPECT_EQ(dispatch_solve(Problem::mcc, Algorithm::automatic, test::rainbow_path(5)).algorithm_tag, "path-dp");
  EXPECT_EQ(dispatch_solve(Problem::mcc, Algorithm::automatic, random_tree(8, 3, 1)).algorithm_tag, "tree-exact");
  EXPECT_EQ(dispatch_solve(Problem::mec, Algorithm::automatic, random_tree(8, 3, 1)).algorithm_tag,
            "colorcoding-exhaustive");
  const ColoredGraph g = random_graph(7, 10, 3, 4);
  EXPECT_EQ(dispatch_solve(Problem::mcc, Algorithm::automatic, g).algorithm_tag, "oracle");
  EXPECT_EQ(dispatch_solve(Problem::mec, Algorithm::automatic, g).algorithm_tag, "kernel-then-solve");
}

TEST(Dispatch, RejectsMismatchedAlgorithm) {
  const ColoredGraph cycle(3, {0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_THROW(dispatch_solve(Problem::mcc, Algorithm::path_dp, cycle), DispatchError);
  EXPECT_THROW(dispatch_solve(Problem::mcc, Algorithm::tree_exact, cycle), DispatchError);
  EXPECT_THROW(dispatch_solve(Problem::mec, Algorithm::tree_exact, test::rainbow_path(3)), DispatchError);
  EXPECT_THROW(dispatch_solve(Problem::mcc, Algorithm::colorcoding, test::rainbow_path(3)), DispatchError);
  EXPECT_THROW(dispatch_solve(Problem::mcc, Algorithm::kernel_then_solve, cycle), DispatchError);
}

TEST(Dispatch, EveryRouteVerifiesAndMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const ColoredGraph g = test::random_colored_graph(6 + seed % 4, 6 + seed % 7, 3, seed);
    const RunReport mcc = dispatch_solve(Problem::mcc, Algorithm::automatic, g);
    const RunReport mec = dispatch_solve(Problem::mec, Algorithm::kernel_then_solve, g);
    EXPECT_TRUE(mcc.verified);
    EXPECT_TRUE(mec.verified);
    EXPECT_EQ(mcc.objective, oracle_mcc(g).objective_value);
    EXPECT_EQ(mec.objective, oracle_mec(g).objective_value) << "seed " << seed;
  }
}

TEST(Dispatch, KernelDecisionMode) {
  const ColoredGraph g = test::star_graph(0, {1, 1, 1, 1});
  SolveOptions opts;
  opts.k = 1;
  const RunReport yes = dispatch_solve(Problem::mec, Algorithm::kernel_then_solve, g, opts);
  EXPECT_EQ(yes.decision, std::optional<bool>(true));
  EXPECT_EQ(yes.decision_k, std::optional<std::int64_t>(1));
  opts.k = 2;
  const RunReport no = dispatch_solve(Problem::mec, Algorithm::kernel_then_solve, g, opts);
  EXPECT_EQ(no.decision, std::optional<bool>(false));
  EXPECT_TRUE(no.verified);
  ASSERT_TRUE(no.kernel.has_value());
  EXPECT_EQ(no.kernel->kernel_vertices, 3u);
}

TEST(Dispatch, NoVerifySkipsChecks) {
  SolveOptions opts;
  opts.verify = false;
  const RunReport r = dispatch_solve(Problem::mcc, Algorithm::oracle, test::rainbow_path(4), opts);
  EXPECT_FALSE(r.verified);
  EXPECT_FALSE(r.verification.has_value());
  EXPECT_FALSE(r.result.certificate_checked);
}

TEST(Verification, ReportsConflictsAndMismatches) {
  const ColoredGraph g = test::path_graph({0, 1, 0});
  const VerificationReport bad = verify_solution(g, {}, 3, Problem::mec);
  EXPECT_FALSE(bad.feasible);
  ASSERT_TRUE(bad.conflict.has_value());
  EXPECT_NE(describe(bad).find("verdict: fail"), std::string::npos);

  const VerificationReport good = verify_solution(g, {0}, 1, Problem::mec);
  EXPECT_TRUE(good.passed());
  EXPECT_EQ(good.census, (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_FALSE(verify_solution(g, {0}, 5, Problem::mcc).passed());
  EXPECT_TRUE(verify_solution(g, {0}, 2).passed());
}

TEST(Digest, StableAndSensitive) {
  const ColoredGraph a = test::rainbow_path(4);
  EXPECT_EQ(instance_digest(a), instance_digest(test::rainbow_path(4)));
  EXPECT_EQ(instance_digest(a).size(), 16u);
  EXPECT_NE(instance_digest(a), instance_digest(test::path_graph({0, 1, 2, 0})));
}

}  // namespace
}  // namespace ccp
