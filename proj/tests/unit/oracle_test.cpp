#include <gtest/gtest.h>

#include "brute.hpp"
#include "ccp/errors.hpp"
#include "ccp/generators.hpp"
#include "ccp/oracle.hpp"
#include "shapes.hpp"

namespace ccp {
namespace {

TEST(Oracle, RainbowConnectedIsOneComponent) {
  const ColoredGraph g(4, {0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  EXPECT_EQ(oracle_mcc(g).objective_value, 1);
  EXPECT_EQ(oracle_mec(g).objective_value, 6);
}

TEST(Oracle, AlternatingPath) {
  const ColoredGraph g = test::path_graph({0, 1, 0, 1});
  EXPECT_EQ(oracle_mcc(g).objective_value, 2);
  EXPECT_EQ(oracle_mec(g).objective_value, 2);
}

TEST(Oracle, SmallMecCases) {
  EXPECT_EQ(oracle_mec(test::rainbow_path(4)).objective_value, 6);
  EXPECT_EQ(oracle_mec(test::path_graph({0, 1, 0})).objective_value, 1);
  EXPECT_EQ(oracle_mec(test::star_graph(0, {1, 1, 1})).objective_value, 1);
}

TEST(Oracle, CoverGadgetNeedsFourComponents) {
  const ColoredGraph gadget = vc_to_mcc(test::five_vertex_cover_graph());
  ASSERT_EQ(gadget.vertex_count(), 18u);
  EXPECT_EQ(oracle_mcc(gadget).objective_value, 4);
}

TEST(Oracle, TieBreakIsLexicographicallySmallestDeletion) {
  const ColoredGraph g = test::path_graph({0, 1, 0});
  EXPECT_EQ(oracle_mec(g).partition.deleted_edges(), (std::vector<EdgeId>{0}));
  EXPECT_EQ(oracle_mcc(g).partition.deleted_edges(), (std::vector<EdgeId>{0}));
}

TEST(Oracle, AgreesWithNaiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 3 + seed % 6;
    const std::size_t m = std::min<std::size_t>(n * (n - 1) / 2, 2 + seed % 11);
    const ColoredGraph g = test::random_colored_graph(n, m, 2 + seed % 3, seed);
    const test::BruteResult expected = test::brute_force(g);
    const SolveResult mcc = oracle_mcc(g);
    const SolveResult mec = oracle_mec(g);
    EXPECT_EQ(mcc.objective_value, expected.mcc) << "seed " << seed;
    EXPECT_EQ(mec.objective_value, expected.mec) << "seed " << seed;
    EXPECT_TRUE(mcc.certificate_checked);
    EXPECT_TRUE(mec.certificate_checked);
    EXPECT_TRUE(is_colorful_partition(g, mcc.partition.deleted_edges()));
    EXPECT_TRUE(is_colorful_partition(g, mec.partition.deleted_edges()));
  }
}

TEST(Oracle, PartitionEnumerationAgreesOnTreesAndGraphs) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const ColoredGraph g = seed % 2 ? random_tree(n, 2 + seed % 4, seed)
                                    : test::random_colored_graph(n, std::min<std::size_t>(n * (n - 1) / 2, n + 2), 3, seed);
    EXPECT_EQ(oracle_mcc_by_partitions(g).objective_value, oracle_mcc(g).objective_value) << "seed " << seed;
    EXPECT_EQ(oracle_mec_by_partitions(g).objective_value, oracle_mec(g).objective_value) << "seed " << seed;
  }
}

TEST(Oracle, OneComponentIffConnectedRainbow) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ColoredGraph g = test::random_colored_graph(5, 3 + seed % 5, 3 + seed % 3, seed);
    std::vector<bool> seen(g.color_count(), false);
    bool rainbow = true;
    for (Color c : g.colors()) {
      rainbow = rainbow && !seen[c];
      seen[c] = true;
    }
    EXPECT_EQ(oracle_mcc(g).objective_value == 1, rainbow && is_connected(g)) << "seed " << seed;
  }
}

TEST(Oracle, MecAtLeastMatchingOfNormalized) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ColoredGraph g = test::random_colored_graph(7, 9, 3, seed);
    EXPECT_GE(oracle_mec(g).objective_value, test::brute_matching(normalize(g)));
  }
}

TEST(Oracle, CapacityLimits) {
  EXPECT_THROW(oracle_mcc(test::rainbow_path(24)), CapacityError);
  EXPECT_THROW(oracle_mec_by_partitions(test::rainbow_path(11)), CapacityError);
  EXPECT_NO_THROW(oracle_mec(test::rainbow_path(23)));
}

TEST(Oracle, EmptyGraph) {
  EXPECT_EQ(oracle_mcc(ColoredGraph{}).objective_value, 0);
  EXPECT_EQ(oracle_mec(ColoredGraph{}).objective_value, 0);
}

}  // namespace
}  // namespace ccp
