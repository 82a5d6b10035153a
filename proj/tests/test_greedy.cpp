#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracle.hpp"
#include "smib/greedy.hpp"

namespace smib {
namespace {

const SmiFunction kAll[] = {SmiFunction::FLVMI, SmiFunction::FLQMI, SmiFunction::GCMI,
                            SmiFunction::COM};

TEST(Greedy, LazyMatchesPlain) {
  CounterRng rng(100);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = testing::random_matrix(6, 6, 3, rng);
    for (auto f : kAll) {
      const SmiConfig cfg{f, 0.5 + 2.0 * rng.next_unit(), 1.0, Concave::Sqrt};
      const auto plain = greedy_select(s, cfg, 5, GreedyMode::Plain);
      const auto lazy = greedy_select(s, cfg, 5, GreedyMode::Lazy);
      EXPECT_EQ(plain.subset.members, lazy.subset.members) << to_string(f);
      EXPECT_DOUBLE_EQ(plain.objective, lazy.objective);
      ASSERT_EQ(lazy.gain_trace.size(), 5u);
      for (const auto& [idx, g] : lazy.gain_trace) {
        EXPECT_TRUE(std::isfinite(g));
        EXPECT_GE(g, -1e-12);
      }
    }
  }
}

TEST(Greedy, GcmiIsTopK) {
  CounterRng rng(7);
  const auto s = testing::random_matrix(5, 5, 3, rng);
  const auto profile = make_query_profile(s);
  std::vector<Index> order(10);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return profile.query_sum[a] > profile.query_sum[b]; });
  const auto r = greedy_select(s, {SmiFunction::GCMI, 1.0, 1.0, Concave::Sqrt}, 4);
  EXPECT_EQ(r.subset.members, std::vector<Index>(order.begin(), order.begin() + 4));
}

TEST(Greedy, FullBudgetTakesEverything) {
  CounterRng rng(8);
  const auto s = testing::random_matrix(3, 3, 2, rng);
  for (auto f : kAll) {
    auto members = greedy_select(s, {f, 1.0, 1.0, Concave::Sqrt}, 6).subset.members;
    std::sort(members.begin(), members.end());
    EXPECT_EQ(members, (std::vector<Index>{0, 1, 2, 3, 4, 5}));
  }
}

TEST(Greedy, BudgetTooLarge) {
  CounterRng rng(8);
  const auto s = testing::random_matrix(2, 2, 1, rng);
  try {
    greedy_select(s, {}, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetTooLarge);
  }
}

TEST(Greedy, ApproximationOnTenElements) {
  CounterRng rng(10);
  const double ratio = 1.0 - std::exp(-1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = testing::random_matrix(5, 5, 3, rng);
    const SmiConfig cfg{SmiFunction::FLQMI, 1.0, 1.0, Concave::Sqrt};
    double best = 0.0;
    for (const auto& a : testing::all_subsets_of_size(10, 3)) {
      best = std::max(best, testing::oracle_smi(a, s, cfg));
    }
    EXPECT_GE(greedy_select(s, cfg, 3).objective, ratio * best - 1e-12);
  }
}

TEST(BruteForce, SingletonIsBestElement) {
  CounterRng rng(12);
  const auto s = testing::random_matrix(4, 4, 2, rng);
  for (auto f : kAll) {
    const SmiConfig cfg{f, 1.0, 1.0, Concave::Sqrt};
    const auto r = brute_force_best(s, cfg, 1);
    for (Index g = 0; g < 8; ++g) {
      EXPECT_GE(r.objective, eval_smi(Subset{{g}}, s, cfg).value);
    }
  }
}

TEST(BruteForce, FullBudgetAndModularAgreement) {
  CounterRng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = testing::random_matrix(4, 4, 3, rng);
    const SmiConfig cfg{SmiFunction::GCMI, 1.0, 0.5 + rng.next_unit(), Concave::Sqrt};
    const auto brute = brute_force_best(s, cfg, 3);
    const auto greedy = greedy_select(s, cfg, 3);
    EXPECT_EQ(brute.objective, greedy.objective);
  }
  const auto s = testing::random_matrix(3, 2, 1, rng);
  EXPECT_EQ(brute_force_best(s, {}, 5).subset.members, (std::vector<Index>{0, 1, 2, 3, 4}));
}

TEST(BruteForce, TooLarge) {
  CounterRng rng(14);
  const auto s = testing::random_matrix(20, 20, 1, rng);
  try {
    brute_force_best(s, {}, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InstanceTooLarge);
  }
}

}  // namespace
}  // namespace smib
