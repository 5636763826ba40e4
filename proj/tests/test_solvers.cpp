#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mcmd/cli.hpp"
#include "mcmd/solvers.hpp"

using namespace mcmd;
using namespace mcmd::solvers;

namespace {

Instance on_x(std::vector<std::pair<const char*, const char*>> xr) {
  std::vector<std::tuple<std::string, std::string, std::string>> rows;
  for (auto [x, r] : xr) rows.emplace_back(x, "0", r);
  return fixtures::make_instance(rows);
}

}  // namespace

TEST(ExactSolver, SingleDisk) {
  auto r = solve_exact_mcmd(on_x({{"0", "1"}}));
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(r.best_cardinality, 1u);
}

TEST(ExactSolver, EmptyInstance) {
  auto r = solve_exact_mcmd(Instance{});
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(r.best_cardinality, 0u);
}

TEST(ExactSolver, NoProperFixtureIsInfeasible) {
  for (auto mode : {DisjointnessMode::kMax, DisjointnessMode::kSum})
    EXPECT_FALSE(solve_exact_mcmd(fixtures::no_proper(), mode).feasible());
}

TEST(ExactSolver, BestFourFixture) {
  auto r = solve_exact_mcmd(fixtures::best_four());
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(r.best_cardinality, 4u);
  EXPECT_EQ(r.assignment, fixtures::best_four_phi());
}

TEST(ExactSolver, EnumeratesBestFourFixtureCompletely) {
  std::vector<Assignment> seen;
  enumerate_proper(fixtures::best_four(), DisjointnessMode::kMax, [&](const Assignment& a) {
    seen.push_back(a);
    return true;
  });
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen, (std::vector<Assignment>{Assignment({1, 1, 1, 1, 1}), fixtures::best_four_phi(),
                                           Assignment({3, 3, 3, 3, 3})}));
}

TEST(ExactSolver, TooLarge) {
  auto inst = cli::generate_random(10, cli::Profile::kPlanar, 1);
  try {
    solve_exact_mcmd(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  EXPECT_THROW(solve_exact_rmcmd(inst, DisjointnessMode::kMax, 9), Error);
}

TEST(RelaxedSolver, DominatesProper) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto inst = cli::generate_random(1 + seed % 6, cli::Profile::kPlanar, seed);
    auto p = solve_exact_mcmd(inst);
    auto u = solve_exact_rmcmd(inst);
    ASSERT_TRUE(u.feasible());
    EXPECT_TRUE(verify_uproper(inst, u.assignment).ok);
    if (p.feasible()) EXPECT_GE(u.best_cardinality, p.best_cardinality);
  }
}

TEST(RelaxedSolver, NoProperFixtureRelaxes) {
  auto u = solve_exact_rmcmd(fixtures::no_proper());
  ASSERT_TRUE(u.feasible());
  EXPECT_GE(u.best_cardinality, 2u);
}

TEST(EnumerateProper, MatchesOracleOptimum) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto inst = cli::generate_random(1 + seed % 7, seed % 3 ? cli::Profile::kPlanar : cli::Profile::kCollinear, seed);
    for (auto mode : {DisjointnessMode::kMax, DisjointnessMode::kSum}) {
      std::size_t best = 0;
      bool any = false;
      enumerate_proper(inst, mode, [&](const Assignment& a) {
        EXPECT_TRUE(verify_proper(inst, a, mode).ok);
        best = std::max(best, cardinality(a));
        any = true;
        return true;
      });
      auto r = solve_exact_mcmd(inst, mode);
      ASSERT_EQ(any, r.feasible()) << seed;
      if (any) EXPECT_EQ(best, r.best_cardinality) << seed;
    }
  }
}

TEST(Collinearity, Axis) {
  auto c = collinearity_check(on_x({{"3", "1"}, {"0", "1"}, {"1", "1"}}));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->order, (std::vector<DiskId>{2, 3, 1}));
}

TEST(Collinearity, Triangle) {
  auto inst = fixtures::make_instance({{"0", "0", "1"}, {"1", "0", "1"}, {"1", "1", "1"}});
  EXPECT_FALSE(collinearity_check(inst));
  EXPECT_THROW(solve_collinear(inst), Error);
}

TEST(Collinearity, Diagonal) {
  auto inst = fixtures::make_instance({{"2", "2", "1"}, {"-1", "-1", "1"}, {"1/2", "1/2", "1"}});
  auto c = collinearity_check(inst);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->order, (std::vector<DiskId>{2, 3, 1}));
}

TEST(MergeWindow, EmptyPrefix) {
  auto inst = on_x({{"0", "1"}, {"1/2", "1"}, {"3", "1"}});
  auto order = *collinearity_check(inst);
  auto w = merge_prefix_feasible(inst, order, 1, 0);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->a, 1u);
  EXPECT_EQ(w->b, 1u);
  EXPECT_EQ(w->A, 1u);
  EXPECT_EQ(w->B, 2u);
}

TEST(MergeWindow, ReachableAndNot) {
  auto near = on_x({{"0", "1"}, {"1/2", "1"}});
  EXPECT_TRUE(merge_prefix_feasible(near, *collinearity_check(near), 1, 1));
  auto far = on_x({{"0", "1"}, {"3", "1"}});
  EXPECT_FALSE(merge_prefix_feasible(far, *collinearity_check(far), 1, 1));
  EXPECT_THROW(merge_prefix_feasible(far, *collinearity_check(far), 1, 2), Error);
}

TEST(CollinearSolver, TwoFarDisks) {
  auto s = solve_collinear(on_x({{"0", "1"}, {"10", "1"}}));
  ASSERT_TRUE(s.result.feasible());
  EXPECT_EQ(s.result.best_cardinality, 2u);
  EXPECT_EQ(s.result.assignment, Assignment::identity(2));
}

TEST(CollinearSolver, SingleAndEmpty) {
  EXPECT_EQ(solve_collinear(on_x({{"0", "1"}})).result.best_cardinality, 1u);
  auto e = solve_collinear(Instance{});
  EXPECT_TRUE(e.result.feasible());
  EXPECT_EQ(e.result.best_cardinality, 0u);
}

TEST(CollinearSolver, NoProperFixture) {
  for (auto mode : {DisjointnessMode::kMax, DisjointnessMode::kSum})
    EXPECT_FALSE(solve_collinear(fixtures::no_proper(), mode).result.feasible());
}

TEST(CollinearSolver, MatchesOracleIncludingCoincidentCentres) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto base = cli::generate_random(1 + seed % 8, cli::Profile::kCollinear, 1000 + seed);
    // Every third instance folds centres onto a coarser grid, creating ties.
    std::vector<Disk> disks = base.disks();
    if (seed % 3 == 0)
      for (auto& d : disks) {
        Integer whole = d.centre.x.get_num() / d.centre.x.get_den();
        d.centre.x = Rational(Integer(whole / 2));
      }
    Instance inst(disks);
    for (auto mode : {DisjointnessMode::kMax, DisjointnessMode::kSum}) {
      auto dp = solve_collinear(inst, mode).result;
      auto ex = solve_exact_mcmd(inst, mode);
      ASSERT_EQ(dp.feasible(), ex.feasible()) << seed;
      if (!dp.feasible()) continue;
      EXPECT_EQ(dp.best_cardinality, ex.best_cardinality) << seed;
      EXPECT_TRUE(verify_proper(inst, dp.assignment, mode).ok) << seed;
      EXPECT_EQ(cardinality(dp.assignment), dp.best_cardinality);
    }
  }
}

TEST(CollinearSolver, Deterministic) {
  auto inst = cli::generate_random(12, cli::Profile::kCollinear, 77);
  auto a = solve_collinear(inst);
  auto b = solve_collinear(inst);
  EXPECT_EQ(a.result.assignment, b.result.assignment);
  EXPECT_TRUE(a.table == b.table);
  EXPECT_EQ(a.stats.transitions, b.stats.transitions);
}
