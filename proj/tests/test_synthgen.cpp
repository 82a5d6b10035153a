#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "smib/synthgen.hpp"

namespace smib {
namespace {

ScenarioConfig small_scenario() {
  ScenarioConfig cfg;
  ClusterSpec t{Point{{1.0, 2.0}}, {0.5, 0.5}, 6, ClusterRole::Targeted, 2};
  ClusterSpec u{Point{{-1.0, 0.0}}, {0.2, 0.2}, 4, ClusterRole::Untargeted, 0};
  cfg.clusters = {t, u};
  cfg.budget = 3;
  return cfg;
}

TEST(Generate, SizesFollowConfig) {
  const auto d = generate_dataset(small_scenario());
  EXPECT_EQ(d.targeted.size(), 6u);
  EXPECT_EQ(d.untargeted.size(), 4u);
  EXPECT_EQ(d.query.size(), 2u);
  for (const auto& p : d.targeted) EXPECT_EQ(p.coords.size(), 2u);
}

TEST(Generate, ZeroCovarianceCollapsesToMean) {
  auto cfg = small_scenario();
  cfg.clusters[0].covariance = {0.0, 0.0};
  const auto d = generate_dataset(cfg);
  for (const auto& p : d.targeted) EXPECT_EQ(p.coords, (std::vector<double>{1.0, 2.0}));
  for (const auto& p : d.query) EXPECT_EQ(p.coords, (std::vector<double>{1.0, 2.0}));
}

TEST(Generate, SameSeedSameDataset) {
  const auto a = generate_dataset(small_scenario());
  const auto b = generate_dataset(small_scenario());
  for (std::size_t i = 0; i < a.targeted.size(); ++i) EXPECT_EQ(a.targeted[i].coords, b.targeted[i].coords);
  auto other = small_scenario();
  other.seed = 8;
  EXPECT_NE(generate_dataset(other).targeted[0].coords, a.targeted[0].coords);
}

TEST(Generate, SampleMomentsMatchCluster) {
  ScenarioConfig cfg;
  cfg.clusters = {{Point{{3.0}}, {4.0}, 20000, ClusterRole::Targeted, 1},
                  {Point{{0.0}}, {1.0}, 1, ClusterRole::Untargeted, 0}};
  const auto d = generate_dataset(cfg);
  double m = 0.0, m2 = 0.0;
  for (const auto& p : d.targeted) {
    m += p.coords[0];
    m2 += p.coords[0] * p.coords[0];
  }
  m /= 20000.0;
  const double var = m2 / 20000.0 - m * m;
  EXPECT_NEAR(m, 3.0, 0.05);
  EXPECT_NEAR(var, 4.0, 0.15);
}

TEST(Validate, RejectsBadScenarios) {
  auto no_untargeted = small_scenario();
  no_untargeted.clusters.pop_back();
  EXPECT_THROW(validate_scenario(no_untargeted), Error);
  auto no_queries = small_scenario();
  no_queries.clusters[0].query_count = 0;
  EXPECT_THROW(validate_scenario(no_queries), Error);
  auto untargeted_queries = small_scenario();
  untargeted_queries.clusters[1].query_count = 1;
  EXPECT_THROW(validate_scenario(untargeted_queries), Error);
  auto negative_cov = small_scenario();
  negative_cov.clusters[0].covariance[0] = -1.0;
  EXPECT_THROW(validate_scenario(negative_cov), Error);
  auto wrong_dim = small_scenario();
  wrong_dim.clusters[0].covariance = {1.0};
  EXPECT_THROW(validate_scenario(wrong_dim), Error);
}

TEST(Presets, Shapes) {
  const auto one = generate_dataset(preset_scenario("one-target"));
  EXPECT_EQ(one.targeted.size(), 40u);
  EXPECT_EQ(one.untargeted.size(), 40u);
  EXPECT_EQ(one.query.size(), 5u);
  const auto two = generate_dataset(preset_scenario("two-target"));
  EXPECT_EQ(two.targeted.size(), 80u);
  EXPECT_EQ(two.untargeted.size(), 40u);
  EXPECT_EQ(two.query.size(), 10u);
  EXPECT_THROW(preset_scenario("three-target"), Error);
}

TEST(UniformChi, FrequenciesWithinThreeSigma) {
  CounterRng rng(2024);
  const std::size_t budget = 5, draws = 6000;
  std::vector<std::size_t> counts(budget + 1, 0);
  for (std::size_t i = 0; i < draws; ++i) {
    const auto a = sample_subset_uniform_chi(20, 20, budget, rng);
    ASSERT_EQ(a.size(), budget);
    std::size_t chi = 0;
    for (Index m : a.members) chi += m < 20;
    ++counts[chi];
  }
  const double p = 1.0 / 6.0;
  const double sd = std::sqrt(draws * p * (1 - p));
  for (std::size_t c : counts) EXPECT_NEAR(static_cast<double>(c), draws * p, 3.0 * sd);
}

TEST(UniformChi, BudgetOneSplitsEvenly) {
  CounterRng rng(1);
  std::size_t targeted = 0;
  const std::size_t draws = 4000;
  for (std::size_t i = 0; i < draws; ++i) targeted += sample_subset_uniform_chi(3, 3, 1, rng).members[0] < 3;
  EXPECT_NEAR(static_cast<double>(targeted) / draws, 0.5, 3.0 * std::sqrt(0.25 / draws));
}

TEST(UniformChi, MembersSortedDistinctInRange) {
  CounterRng rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto a = sample_subset_uniform_chi(5, 7, 5, rng);
    EXPECT_TRUE(std::is_sorted(a.members.begin(), a.members.end()));
    EXPECT_EQ(std::set<Index>(a.members.begin(), a.members.end()).size(), 5u);
    EXPECT_LT(a.members.back(), 12u);
  }
}

TEST(UniformChi, FullTargetedPartition) {
  // |T| = B: whenever χ = B the subset is the whole of T.
  CounterRng rng(77);
  bool saw_full = false;
  for (int i = 0; i < 200; ++i) {
    const auto a = sample_subset_uniform_chi(3, 5, 3, rng);
    if (a.members.back() < 3) {
      EXPECT_EQ(a.members, (std::vector<Index>{0, 1, 2}));
      saw_full = true;
    }
  }
  EXPECT_TRUE(saw_full);
}

TEST(UniformChi, InsufficientPartition) {
  CounterRng rng(0);
  try {
    sample_subset_uniform_chi(2, 10, 3, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientPartition);
  }
}

TEST(Rng, CounterDeterminism) {
  CounterRng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  CounterRng c(42, 50), d(42);
  for (int i = 0; i < 50; ++i) d.next_u64();
  EXPECT_EQ(c.next_u64(), d.next_u64());
  EXPECT_NE(derive_stream_key(7, kDatasetStream), derive_stream_key(7, kSubsetStream));
}

TEST(Rng, NextBelowInRange) {
  CounterRng r(3);
  for (int i = 0; i < 10000; ++i) EXPECT_LT(r.next_below(7), 7u);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.next_unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

}  // namespace
}  // namespace smib
