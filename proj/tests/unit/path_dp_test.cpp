#include <gtest/gtest.h>

#include "ccp/errors.hpp"
#include "ccp/generators.hpp"
#include "ccp/multicut.hpp"
#include "ccp/oracle.hpp"
#include "ccp/path_dp.hpp"
#include "shapes.hpp"

namespace ccp {
namespace {

std::int64_t mcc_of(const std::vector<Color>& colors) { return mcc_path(make_path_instance(test::path_graph(colors))).objective_value; }
std::int64_t mec_of(const std::vector<Color>& colors) { return mec_path(make_path_instance(test::path_graph(colors))).objective_value; }

TEST(PathDp, BaseCases) {
  EXPECT_EQ(mcc_of({0}), 1);
  EXPECT_EQ(mec_of({0}), 0);
  EXPECT_EQ(mcc_segments({}).value, 0);
  EXPECT_EQ(mec_segments({}).value, 0);
}

TEST(PathDp, RainbowPath) {
  for (std::size_t n = 1; n < 9; ++n) {
    const PathInstance p = make_path_instance(test::rainbow_path(n));
    EXPECT_EQ(mcc_path(p).objective_value, 1);
    EXPECT_EQ(mec_path(p).objective_value, static_cast<std::int64_t>(n * (n - 1) / 2));
  }
}

TEST(PathDp, AlternatingColors) {
  EXPECT_EQ(mcc_of({0, 1, 0, 1}), 2);
  EXPECT_EQ(mec_of({0, 1, 0, 1}), 2);
}

TEST(PathDp, ClosureUsesSegmentLength) {
  // One segment of 3 then one of 1: 3 closure edges, not (3+1)*3/2.
  const SegmentPlan plan = mec_segments(std::vector<Color>{0, 1, 2, 0});
  EXPECT_EQ(plan.value, 3);
}

TEST(PathDp, OrderStartsAtSmallestEndpoint) {
  const ColoredGraph g(4, {0, 1, 2, 3}, {{2, 0}, {0, 3}, {3, 1}});
  const PathInstance p = make_path_instance(g);
  EXPECT_EQ(p.order, (std::vector<Vertex>{1, 3, 0, 2}));
  EXPECT_THROW(make_path_instance(test::star_graph(0, {1, 2, 3})), ShapeError);
}

TEST(PathDp, MatchesOracleOnRandomColorings) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 1 + seed % 10;
    std::vector<Color> colors(n);
    std::uint64_t x = seed * 2654435761u + 1;
    for (auto& c : colors) {
      x = x * 6364136223846793005ull + 1442695040888963407ull;
      c = static_cast<Color>((x >> 33) % 3);
    }
    const ColoredGraph g = test::path_graph(colors);
    const PathInstance p = make_path_instance(g);
    const SolveResult mcc = mcc_path(p);
    const SolveResult mec = mec_path(p);
    EXPECT_EQ(mcc.objective_value, oracle_mcc(g).objective_value) << "seed " << seed;
    EXPECT_EQ(mec.objective_value, oracle_mec(g).objective_value) << "seed " << seed;
    EXPECT_TRUE(mcc.certificate_checked);
    EXPECT_TRUE(mec.certificate_checked);
    EXPECT_TRUE(is_colorful_partition(g, mcc.partition.deleted_edges()));
    EXPECT_TRUE(is_colorful_partition(g, mec.partition.deleted_edges()));
  }
}

TEST(PathDp, AgreesWithMulticutBridge) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ColoredGraph g = random_path(2 + seed % 10, 2 + seed % 3, seed);
    const std::int64_t cut = static_cast<std::int64_t>(solve_multicut_exact(mcc_to_multicut(g)).value());
    EXPECT_EQ(mcc_path(make_path_instance(g)).objective_value, cut + 1);
  }
}

}  // namespace
}  // namespace ccp
