#include <gtest/gtest.h>

#include "cutcount/drainage.hpp"
#include "cutcount/errors.hpp"
#include "cutcount/oracle.hpp"
#include "fixtures.hpp"

namespace cutcount {
namespace {

using namespace cutcount::testing;
using Levels = std::vector<std::vector<EdgeId>>;

TEST(Drainage, Path3HasThreeSingletonLevels) {
  const Drainage d = build_drainage(path3());
  EXPECT_EQ(d.p, 1u);
  EXPECT_EQ(d.levels, (Levels{{0}, {1}, {2}}));
  EXPECT_EQ(d.region(1), (std::vector<Vertex>{0}));
  EXPECT_EQ(d.region(4), (std::vector<Vertex>{3}));
  EXPECT_EQ(d.frontier(2), (std::vector<Vertex>{1}));
}

TEST(Drainage, ParallelBranchesPairUp) {
  const Drainage d = build_drainage(par(2, 3));
  EXPECT_EQ(d.levels, (Levels{{0, 3}, {1, 4}, {2, 5}}));
  EXPECT_EQ(d.region(2), (std::vector<Vertex>{2, 4}));
  EXPECT_EQ(d.region(4), (std::vector<Vertex>{1}));
  EXPECT_EQ(d.level_of[4], 2u);
  EXPECT_EQ(d.region_of[5], 3u);
}

TEST(Drainage, DisconnectedInstanceThrows) {
  try {
    build_drainage(disc());
    FAIL() << "expected an exception";
  } catch (const CutError& e) {
    EXPECT_EQ(e.code(), Errc::disconnected);
  }
}

TEST(Drainage, InvariantsHoldOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const CutInstance inst = random_instance(seed);
    const Drainage d = build_drainage(inst);
    const std::vector<std::string> bad = drainage_violations(inst, d);
    EXPECT_TRUE(bad.empty()) << "seed " << seed << ": " << bad.front();
  }
}

TEST(Drainage, WarmStartMatchesColdStart) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const CutInstance inst = random_instance(seed);
    const Drainage warm = build_drainage(inst, DrainageOptions{true});
    const Drainage cold = build_drainage(inst, DrainageOptions{false});
    EXPECT_EQ(warm.levels, cold.levels) << "seed " << seed;
    EXPECT_EQ(warm.region_of, cold.region_of) << "seed " << seed;
  }
}

TEST(Drainage, TargetSideIsBehindTheLevel) {
  const CutInstance inst = par(2, 3);
  const Drainage d = build_drainage(inst);
  EXPECT_EQ(members_of(target_side(inst, d, 2)), (std::vector<Vertex>{1, 3, 5}));
  EXPECT_EQ(members_of(d.source_side(2)), (std::vector<Vertex>{0, 2, 4}));
  EXPECT_TRUE(members_of(d.source_side(0)).empty());
}

TEST(FrontOf, PicksTheEarliestLevel) {
  const Drainage d = build_drainage(par(2, 3));
  const FrontInfo f = front_of(std::vector<EdgeId>{5, 1}, d);
  EXPECT_EQ(f.front, 2u);
  EXPECT_EQ(f.front_dam, (std::vector<EdgeId>{1}));
}

TEST(FrontOf, EveryOracleCutHasAFront) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CutInstance inst = random_instance(seed);
    const Drainage d = build_drainage(inst);
    for (const EdgeCut& cut : brute_force_enumerate(inst).cuts) {
      const FrontInfo f = front_of(cut.edges, d);
      EXPECT_GE(f.front, 1u);
      EXPECT_FALSE(f.front_dam.empty());
    }
  }
}

TEST(FrontOf, EdgeSetOffEveryLevelThrows) {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 2);
  const CutInstance inst(g, {0}, {2});
  const Drainage d = build_drainage(inst);
  try {
    front_of(std::vector<EdgeId>{1}, d);
    FAIL() << "expected an exception";
  } catch (const CutError& e) {
    EXPECT_EQ(e.code(), Errc::no_front);
  }
}

}  // namespace
}  // namespace cutcount
