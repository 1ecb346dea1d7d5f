#include <gtest/gtest.h>

#include <map>
#include <set>

#include "cutcount/errors.hpp"
#include "cutcount/oracle.hpp"
#include "cutcount/sampling.hpp"
#include "fixtures.hpp"

namespace cutcount {
namespace {

using namespace cutcount::testing;

double chi_square(const std::map<std::vector<EdgeId>, std::size_t>& hits, std::size_t cells, std::size_t draws) {
  const double expected = static_cast<double>(draws) / static_cast<double>(cells);
  double stat = 0;
  std::size_t seen = 0;
  for (const auto& [cut, n] : hits) {
    stat += (static_cast<double>(n) - expected) * (static_cast<double>(n) - expected) / expected;
    ++seen;
  }
  stat += static_cast<double>(cells - seen) * expected;  // cells never hit
  return stat;
}

TEST(Sampling, Path3EachEdgeAboutAThird) {
  const CutInstance inst = path3();
  CountingTree tree(inst);
  tree.fill_all();
  std::map<std::vector<EdgeId>, std::size_t> hits;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    SamplerState st(tree, seed);
    ++hits[st.sample()];
  }
  ASSERT_EQ(hits.size(), 3u);
  for (const auto& [cut, n] : hits) {
    EXPECT_EQ(cut.size(), 1u);
    EXPECT_NEAR(static_cast<double>(n), 1000.0, 100.0);
  }
}

TEST(Sampling, ParallelBranchesPassChiSquare) {
  const CutInstance inst = par(2, 3);
  const std::vector<std::vector<EdgeId>> draws = sample_min_cuts(inst, 9000, 1);
  std::map<std::vector<EdgeId>, std::size_t> hits;
  for (const auto& cut : draws) {
    ASSERT_TRUE(is_cut(inst, cut));
    ASSERT_EQ(cut.size(), 2u);
    ++hits[cut];
  }
  EXPECT_EQ(hits.size(), 9u);
  EXPECT_LT(chi_square(hits, 9, draws.size()), 26.12);
}

TEST(Sampling, SingleCutIsAlwaysReturned) {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 2);
  const CutInstance inst(g, {0}, {2});
  for (const auto& cut : sample_min_cuts(inst, 50, 99)) EXPECT_EQ(cut, (std::vector<EdgeId>{0}));
}

TEST(Sampling, ZeroDrawsAndDeterminism) {
  EXPECT_TRUE(sample_min_cuts(path3(), 0, 5).empty());
  const auto a = sample_min_cuts(par(3, 3), 25, 42);
  const auto b = sample_min_cuts(par(3, 3), 25, 42);
  const auto c = sample_min_cuts(par(3, 3), 25, 43);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(Sampling, DisconnectedGivesEmptyCuts) {
  const auto cuts = sample_min_cuts(disc(), 3, 0);
  ASSERT_EQ(cuts.size(), 3u);
  for (const auto& cut : cuts) EXPECT_TRUE(cut.empty());
}

TEST(Sampling, EveryDrawIsAMinimumCut) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const CutInstance inst = random_instance(seed);
    const std::size_t p = min_cut_size(inst);
    for (const auto& cut : sample_min_cuts(inst, 40, seed)) {
      EXPECT_EQ(cut.size(), p);
      EXPECT_TRUE(is_cut(inst, cut)) << "seed " << seed;
    }
  }
}

TEST(SampleMinCut, ReturnsSides) {
  const CutInstance inst = path3();
  CountingTree tree(inst);
  tree.fill_all();
  SamplerState st(tree, 7);
  const EdgeCut cut = sample_min_cut(inst, st);
  ASSERT_EQ(cut.edges.size(), 1u);
  EXPECT_TRUE(cut.source_side[0]);
  EXPECT_TRUE(cut.target_side[3]);
}

TEST(SamplerState, RequiresAFilledTree) {
  const CountingTree tree(par(2, 2));
  EXPECT_THROW(SamplerState(tree, 0), CutError);
}

TEST(Unrank, IsABijectionOntoTheOracleListing) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const CutInstance inst = random_instance(seed);
    CountingTree tree(inst);
    tree.fill_all();
    std::set<std::vector<EdgeId>> expected;
    for (const EdgeCut& c : brute_force_enumerate(inst).cuts) expected.insert(c.edges);
    std::set<std::vector<EdgeId>> got;
    const BigCount total = tree.count_at(0, 0);
    for (BigCount r = 0; r < total; ++r) got.insert(unrank_min_cut(tree, r));
    EXPECT_EQ(got, expected) << "seed " << seed;
  }
}

TEST(Unrank, RankOutsideRangeThrows) {
  CountingTree tree(path3());
  tree.fill_all();
  EXPECT_THROW(unrank_min_cut(tree, 3), CutError);
  EXPECT_THROW(unrank_min_cut(tree, -1), CutError);
}

TEST(DescentDistribution, ExactlyUniform) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const CutInstance inst = random_instance(seed);
    CountingTree tree(inst);
    tree.fill_all();
    const auto dist = descent_distribution(tree);
    const BigCount total = tree.count_at(0, 0);
    EXPECT_EQ(BigCount(dist.size()), total);
    Rational sum = 0;
    for (const auto& [cut, prob] : dist) {
      EXPECT_EQ(prob, Rational(1, total)) << "seed " << seed;
      sum += prob;
    }
    EXPECT_EQ(sum, 1);
  }
}

TEST(UniformBelow, StaysInRangeForWideBounds) {
  CountingTree tree(path3());
  tree.fill_all();
  SamplerState st(tree, 3);
  const BigCount bound = (BigCount(1) << 130) + 12345;
  bool high_half = false;
  for (int i = 0; i < 200; ++i) {
    const BigCount r = st.uniform_below(bound);
    EXPECT_GE(r, 0);
    EXPECT_LT(r, bound);
    high_half = high_half || r > (bound >> 1);
  }
  EXPECT_TRUE(high_half);
  EXPECT_EQ(st.uniform_below(1), 0);
  EXPECT_THROW(st.uniform_below(0), CutError);
}

}  // namespace
}  // namespace cutcount
