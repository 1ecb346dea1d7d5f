#include <gtest/gtest.h>

#include "cutcount/errors.hpp"
#include "cutcount/oracle.hpp"
#include "fixtures.hpp"

namespace cutcount {
namespace {

using namespace cutcount::testing;
using EdgeLists = std::vector<std::vector<EdgeId>>;

EdgeLists edge_lists(const OracleReport& r) {
  EdgeLists out;
  for (const EdgeCut& c : r.cuts) out.push_back(c.edges);
  return out;
}

TEST(BruteForceCount, Fixtures) {
  const CountResult path = brute_force_count(path3());
  EXPECT_EQ(path.p, 1u);
  EXPECT_EQ(path.count, 3);
  const CountResult par23 = brute_force_count(par(2, 3));
  EXPECT_EQ(par23.p, 2u);
  EXPECT_EQ(par23.count, 9);
  const CountResult none = brute_force_count(disc());
  EXPECT_EQ(none.p, 0u);
  EXPECT_EQ(none.count, 1);
}

TEST(BruteForceEnumerate, ColexOrder) {
  EXPECT_EQ(edge_lists(brute_force_enumerate(diamond())), (EdgeLists{{0, 2}, {1, 2}, {0, 3}, {1, 3}}));
  EXPECT_EQ(edge_lists(brute_force_enumerate(path3())), (EdgeLists{{0}, {1}, {2}}));
  EXPECT_EQ(brute_force_enumerate(par(2, 3)).cuts.size(), 9u);
  EXPECT_EQ(edge_lists(brute_force_enumerate(disc())), (EdgeLists{{}}));
}

TEST(BruteForceEnumerate, ListingIsValidAndMatchesCount) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CutInstance inst = random_instance(seed);
    const OracleReport r = brute_force_enumerate(inst);
    EXPECT_EQ(BigCount(r.cuts.size()), brute_force_count(inst).count);
    for (std::size_t i = 0; i < r.cuts.size(); ++i) {
      EXPECT_EQ(r.cuts[i].edges.size(), r.p);
      EXPECT_TRUE(is_cut(inst, r.cuts[i].edges));
      if (i > 0) {
        const auto& a = r.cuts[i - 1].edges;
        const auto& b = r.cuts[i].edges;
        EXPECT_TRUE(std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend())) << "not colex";
      }
    }
  }
}

TEST(BruteForce, BudgetIsAHardError) {
  OracleOptions tiny;
  tiny.budget = 10;
  try {
    brute_force_count(par(3, 4), tiny);
    FAIL() << "expected an exception";
  } catch (const CutError& e) {
    EXPECT_EQ(e.code(), Errc::budget_exceeded);
  }
  EXPECT_THROW(brute_force_enumerate(par(3, 4), tiny), CutError);
}

TEST(AuditTheorems, Fixtures) {
  const AuditReport par23 = audit_theorems(par(2, 3));
  EXPECT_TRUE(par23.ok());
  EXPECT_EQ(par23.traces.size(), 9u);
  std::size_t drainage_cuts = 0;
  for (const CutTrace& t : par23.traces) drainage_cuts += t.drainage_cut;
  EXPECT_EQ(drainage_cuts, 3u);

  const AuditReport path = audit_theorems(path3());
  EXPECT_TRUE(path.ok());
  ASSERT_EQ(path.traces.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(path.traces[i].drainage_cut);
    EXPECT_EQ(path.traces[i].front, i + 1);
  }
}

TEST(AuditTheorems, MixedCutTrace) {
  // {a1, b3}: front level 1, front dam {a1}, which is its own closest dam.
  const AuditReport r = audit_theorems(par(2, 3));
  const auto it = std::find_if(r.traces.begin(), r.traces.end(),
                               [](const CutTrace& t) { return t.edges == std::vector<EdgeId>{0, 5}; });
  ASSERT_NE(it, r.traces.end());
  EXPECT_FALSE(it->drainage_cut);
  EXPECT_EQ(it->front, 1u);
  EXPECT_EQ(it->closest, it->front_dam);
}

TEST(AuditTheorems, RandomCampaignHasNoViolations) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const AuditReport r = audit_theorems(random_instance(seed));
    EXPECT_TRUE(r.ok()) << "seed " << seed << ": " << r.violations.front();
    EXPECT_GE(r.instances_checked, 1u);
  }
}

TEST(AuditTheorems, DisconnectedChecksNothing) {
  const AuditReport r = audit_theorems(disc());
  EXPECT_EQ(r.p, 0u);
  EXPECT_EQ(r.cuts_checked, 0u);
  EXPECT_TRUE(r.ok());
}

TEST(DrainageViolations, CatchesATamperedDrainage) {
  const CutInstance inst = par(2, 3);
  Drainage d = build_drainage(inst);
  EXPECT_TRUE(drainage_violations(inst, d).empty());
  d.levels[1] = d.levels[0];
  EXPECT_FALSE(drainage_violations(inst, d).empty());
}

}  // namespace
}  // namespace cutcount
