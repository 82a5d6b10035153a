#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "oracle.hpp"
#include "smib/bounds.hpp"
#include "smib/metrics.hpp"
#include "smib/similarity.hpp"
#include "smib/synthgen.hpp"

namespace smib {
namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

bool same_bits(const std::optional<double>& a, const std::optional<double>& b) {
  return a.has_value() == b.has_value() && (!a || same_bits(*a, *b));
}

void expect_bitwise(const DatasetBoundParams& a, const DatasetBoundParams& b) {
  EXPECT_TRUE(same_bits(a.alpha1, b.alpha1));
  EXPECT_TRUE(same_bits(a.beta1, b.beta1));
  EXPECT_TRUE(same_bits(a.alpha2, b.alpha2));
  EXPECT_TRUE(same_bits(a.beta2, b.beta2));
  EXPECT_TRUE(same_bits(a.alpha3, b.alpha3));
  EXPECT_TRUE(same_bits(a.beta3, b.beta3));
  EXPECT_TRUE(same_bits(a.gamma1, b.gamma1));
  EXPECT_TRUE(same_bits(a.delta1, b.delta1));
  EXPECT_TRUE(same_bits(a.gamma2, b.gamma2));
  EXPECT_TRUE(same_bits(a.delta2, b.delta2));
  EXPECT_TRUE(same_bits(a.omega_u, b.omega_u));
  EXPECT_TRUE(same_bits(a.omega_ut, b.omega_ut));
}

void expect_bitwise(const SubsetBoundParams& a, const SubsetBoundParams& b) {
  EXPECT_TRUE(same_bits(a.alpha4, b.alpha4));
  EXPECT_TRUE(same_bits(a.beta4, b.beta4));
  EXPECT_TRUE(same_bits(a.gamma3, b.gamma3));
  EXPECT_TRUE(same_bits(a.delta3, b.delta3));
  EXPECT_TRUE(same_bits(a.gamma4, b.gamma4));
  EXPECT_TRUE(same_bits(a.delta4, b.delta4));
  EXPECT_TRUE(same_bits(a.overshoot, b.overshoot));
}

SmiConfig make(SmiFunction f, double eta = 1.0, double lambda = 1.0) {
  return {f, eta, lambda, Concave::Sqrt};
}

TEST(DatasetParams, ConstantMatrix) {
  const double c = 0.37;
  std::vector<double> v(6 * 6, c);
  for (std::size_t i = 0; i < 6; ++i) v[i * 6 + i] = 1.0;
  const auto p = extract_dataset_params(SimilarityMatrix(2, 2, 2, v));
  for (double x : {p.alpha1, p.beta1, p.alpha2, p.beta2, p.gamma1, p.delta1, p.gamma2, p.delta2,
                   p.alpha3, p.beta3, p.omega_ut}) {
    EXPECT_DOUBLE_EQ(x, c);
  }
  // The U×U minimum includes the unit diagonal but is still attained off it.
  EXPECT_DOUBLE_EQ(p.omega_u, c);
}

TEST(DatasetParams, Singletons) {
  // [t | u | q], s(t,u) = 0.5, s(t,q) = 0.9, s(u,q) = 0.1.
  const SimilarityMatrix s(1, 1, 1, {1.0, 0.5, 0.9, 0.5, 1.0, 0.1, 0.9, 0.1, 1.0});
  const auto p = extract_dataset_params(s);
  EXPECT_EQ(p.alpha1, 0.1);
  EXPECT_EQ(p.beta1, 0.1);
  EXPECT_EQ(p.gamma1, 0.1);
  EXPECT_EQ(p.delta1, 0.1);
  EXPECT_EQ(p.alpha2, 0.9);
  EXPECT_EQ(p.beta2, 0.9);
  EXPECT_EQ(p.gamma2, 0.9);
  EXPECT_EQ(p.delta2, 0.9);
  EXPECT_EQ(p.beta3, 0.9);
  EXPECT_EQ(p.omega_u, 1.0);
  EXPECT_EQ(p.omega_ut, 0.5);
}

TEST(DatasetParams, OracleBitwiseOnRandomInstances) {
  CounterRng rng(1234);
  for (int trial = 0; trial < 150; ++trial) {
    const auto s = testing::random_matrix(1 + rng.next_below(7), 1 + rng.next_below(7),
                                          1 + rng.next_below(5), rng);
    expect_bitwise(extract_dataset_params(s), testing::oracle_dataset_params(s));
  }
}

TEST(DatasetParams, OrderingInvariants) {
  CounterRng rng(4321);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = extract_dataset_params(testing::random_matrix(4, 4, 3, rng));
    EXPECT_LE(p.alpha1, p.beta1);
    EXPECT_LE(p.alpha2, p.beta2);
    EXPECT_LE(p.gamma1, p.delta1);
    EXPECT_LE(p.gamma2, p.delta2);
    for (double x : {p.alpha1, p.beta1, p.alpha2, p.beta2, p.gamma1, p.delta1, p.gamma2,
                     p.delta2, p.alpha3, p.beta3, p.omega_u, p.omega_ut}) {
      EXPECT_GE(x, 0.0);
      EXPECT_LE(x, 1.0);
    }
  }
}

TEST(SubsetParams, OracleBitwiseOnRandomInstances) {
  CounterRng rng(555);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t nt = 1 + rng.next_below(5), nu = 1 + rng.next_below(5);
    const auto s = testing::random_matrix(nt, nu, 1 + rng.next_below(4), rng);
    const auto p = extract_dataset_params(s);
    std::vector<Index> a;
    for (Index g = 0; g < nt + nu; ++g) {
      if (rng.next_unit() < 0.4) a.push_back(g);
    }
    if (a.empty()) a.push_back(0);
    // Unsorted input must not change anything.
    std::vector<Index> shuffled(a.rbegin(), a.rend());
    const double eta = 0.2 + 3.0 * rng.next_unit();
    const auto got = extract_subset_params(Subset{shuffled}, s, eta, p);
    const auto want = testing::oracle_subset_params(a, s, eta, p);
    expect_bitwise(got, want);
    if (got.alpha4) EXPECT_LE(*got.alpha4, *got.beta4);
    if (got.gamma3) EXPECT_LE(*got.gamma3, *got.delta3);
    if (got.gamma4) EXPECT_LE(*got.gamma4, *got.delta4);
    EXPECT_GE(got.overshoot, 0.0);
  }
}

TEST(SubsetParams, TargetedCoveredLeavesAlpha4Unset) {
  CounterRng rng(6);
  const auto s = testing::random_matrix(2, 3, 2, rng);
  const auto sp = extract_subset_params(Subset{{0, 1, 3}}, s, 1.0, extract_dataset_params(s));
  EXPECT_FALSE(sp.alpha4);
  EXPECT_FALSE(sp.beta4);
  EXPECT_EQ(sp.overshoot, 0.0);
  EXPECT_TRUE(sp.gamma3);
  EXPECT_TRUE(sp.gamma4);
}

TEST(SubsetParams, SaturatedEta) {
  CounterRng rng(17);
  const auto s = testing::random_matrix(4, 3, 2, rng);
  const auto p = extract_dataset_params(s);
  const std::vector<Index> a = {1, 5};
  // η·β₂ ≥ 1 makes the cap inactive, and a large η keeps the overshoot at 0.
  const double eta = 1e6;
  const auto sp = extract_subset_params(Subset{a}, s, eta, p);
  double acc = 0.0;
  for (Index i : {0u, 2u, 3u}) acc += std::max(s.at(i, 1), s.at(i, 5));
  EXPECT_DOUBLE_EQ(*sp.beta4, acc / 3.0);
  EXPECT_EQ(sp.overshoot, 0.0);
}

BoundSizes sizes(std::size_t nt, std::size_t nu, std::size_t nq, std::size_t b) {
  return {nt, nu, nq, b};
}

TEST(RelevanceBounds, FlqmiCollapsedRanges) {
  DatasetBoundParams p;
  p.alpha1 = p.beta1 = 0.0;
  p.alpha2 = p.beta2 = 1.0;
  p.alpha3 = p.beta3 = 0.3;
  const auto b =
      relevance_bounds(4.2, 2, p, SubsetBoundParams{}, make(SmiFunction::FLQMI), sizes(10, 10, 4, 5));
  ASSERT_TRUE(b.preconditions_met);
  EXPECT_DOUBLE_EQ(b.lower, 4.2 - 4 * 0.3);
  EXPECT_DOUBLE_EQ(b.upper, 4.2 - 4 * 0.3);
}

TEST(RelevanceBounds, GcmiCollapsedRanges) {
  DatasetBoundParams p;
  p.gamma1 = p.delta1 = 0.1;
  p.gamma2 = p.delta2 = 0.8;
  const auto cfg = make(SmiFunction::GCMI, 1.0, 0.5);
  const double ifa = 7.0;
  const auto b = relevance_bounds(ifa, 0, p, SubsetBoundParams{}, cfg, sizes(10, 10, 3, 5));
  const double x = ifa / (2.0 * 0.5 * 3.0);
  ASSERT_TRUE(b.preconditions_met);
  EXPECT_DOUBLE_EQ(b.lower, (x - 5 * 0.1) / 0.7);
  EXPECT_DOUBLE_EQ(b.upper, b.lower);
}

TEST(RelevanceBounds, PreconditionFailuresAreFlagged) {
  DatasetBoundParams p;
  p.alpha1 = 0.5;
  p.alpha2 = 0.4;
  p.beta1 = 0.6;
  p.beta2 = 0.9;
  const auto z = sizes(10, 10, 3, 5);
  const auto sep = relevance_bounds(1.0, 2, p, {}, make(SmiFunction::FLQMI), z);
  EXPECT_FALSE(sep.preconditions_met);
  EXPECT_EQ(sep.status, BoundStatus::SeparationViolated);
  EXPECT_EQ(sep.clipped_lower, 0.0);
  EXPECT_EQ(sep.clipped_upper, 5.0);
  const auto chi0 = relevance_bounds(1.0, 0, p, {}, make(SmiFunction::FLVMI), z);
  EXPECT_EQ(chi0.status, BoundStatus::ChiPrecondition);
  const auto undefined = relevance_bounds(1.0, 5, p, {}, make(SmiFunction::COM), z);
  EXPECT_EQ(undefined.status, BoundStatus::UndefinedParameter);
}

TEST(CoverageBounds, FlqmiZeroAttenuation) {
  DatasetBoundParams p;  // every α/β is 0
  const auto b = coverage_bounds(1.8, 2, p, {}, make(SmiFunction::FLQMI, 1e-9), sizes(5, 5, 3, 4));
  ASSERT_TRUE(b.preconditions_met);
  EXPECT_DOUBLE_EQ(b.lower, 0.6);
  EXPECT_DOUBLE_EQ(b.upper, 0.6);
}

TEST(CoverageBounds, GcmiSingleQuerySingleElement) {
  DatasetBoundParams p;
  p.gamma1 = p.delta1 = 0.2;
  p.gamma2 = p.delta2 = 0.7;
  const double ifa = 0.75;
  const auto b = coverage_bounds(ifa, 1, p, {}, make(SmiFunction::GCMI, 1.0, 0.5), sizes(3, 3, 1, 1));
  ASSERT_TRUE(b.preconditions_met);
  // Substituting λ = ½, |Q| = 1, B = 1, χ = 1.
  EXPECT_NEAR(b.lower, ifa - 0.7, 1e-14);
  EXPECT_NEAR(b.upper, ifa + 0.2, 1e-14);
}

TEST(CoverageBounds, FlvmiChiRange) {
  DatasetBoundParams p;
  const auto z = sizes(10, 10, 3, 5);
  EXPECT_EQ(coverage_bounds(1.0, 0, p, {}, make(SmiFunction::FLVMI), z).status,
            BoundStatus::ChiPrecondition);
  EXPECT_EQ(coverage_bounds(1.0, 5, p, {}, make(SmiFunction::FLVMI), z).status,
            BoundStatus::ChiPrecondition);
  EXPECT_TRUE(coverage_bounds(1.0, 4, p, {}, make(SmiFunction::FLVMI), z).preconditions_met);
}

TEST(CoverageBounds, ComIsHeuristic) {
  CounterRng rng(2);
  const auto s = testing::random_matrix(4, 4, 2, rng);
  const auto p = extract_dataset_params(s);
  const auto sp = extract_subset_params(Subset{{0, 5}}, s, 1.0, p);
  const auto b = coverage_bounds(1.0, 1, p, sp, make(SmiFunction::COM), bound_sizes(s, 2));
  EXPECT_TRUE(b.heuristic);
}

// Random COM parameter sets satisfying the separation conditions.
TEST(ComEnvelope, RelevanceIncreasingAndOrdered) {
  CounterRng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    DatasetBoundParams p;
    p.gamma1 = 0.3 * rng.next_unit();
    p.delta1 = p.gamma1 + 0.1 * rng.next_unit();
    p.gamma2 = p.delta1 + 0.05 + 0.4 * rng.next_unit();
    p.delta2 = std::min(1.0, p.gamma2 + 0.2 * rng.next_unit());
    SubsetBoundParams sp;
    sp.gamma3 = p.gamma1;
    sp.delta3 = p.delta1;
    sp.gamma4 = p.gamma2;
    sp.delta4 = p.delta2;
    const SmiConfig cfg{SmiFunction::COM, 0.5 + 2.0 * rng.next_unit(), 1.0,
                        trial % 2 ? Concave::Sqrt : Concave::Log1p};
    const auto z = sizes(20, 20, 1 + rng.next_below(8), 2 + rng.next_below(6));
    double prev_l = -1.0, prev_h = -1.0;
    for (std::size_t c = 0; c <= z.budget; ++c) {
      const auto [fl, fh] = com_relevance_envelope(static_cast<double>(c), p, sp, cfg, z);
      EXPECT_LE(fl, fh + 1e-12);
      EXPECT_GT(fl, prev_l);
      EXPECT_GT(fh, prev_h);
      prev_l = fl;
      prev_h = fh;
    }
  }
}

struct Sample {
  Subset a;
  double value;
  std::size_t chi;
  double delta_q;
  std::optional<double> delta_tma;
};

// Sandwich checks on the shipped presets: 500 uniform-χ subsets each.
class PresetSandwich : public ::testing::TestWithParam<const char*> {};

TEST_P(PresetSandwich, ClippedBoundsContainObservedMetrics) {
  const auto scenario = preset_scenario(GetParam());
  const auto d = generate_dataset(scenario);
  const auto s = build_similarity_matrix(d, KernelConfig{});
  const auto p = extract_dataset_params(s);
  const auto z = bound_sizes(s, scenario.budget);
  CounterRng rng(derive_stream_key(scenario.seed, kSubsetStream));
  std::size_t checked_rel = 0, checked_cov = 0;
  for (int i = 0; i < 500; ++i) {
    const auto a = sample_subset_uniform_chi(d, scenario.budget, rng);
    const std::size_t chi = subset_partition_counts(a, d).chi;
    for (auto f : {SmiFunction::FLVMI, SmiFunction::FLQMI, SmiFunction::GCMI, SmiFunction::COM}) {
      const auto cfg = make(f);
      const double v = eval_smi(a, s, cfg).value;
      const auto sp = extract_subset_params(a, s, cfg.eta, p);
      const auto rel = relevance_bounds(v, chi, p, sp, cfg, z);
      if (rel.preconditions_met) {
        ++checked_rel;
        EXPECT_LE(rel.clipped_lower, static_cast<double>(chi) + 1e-9) << to_string(f);
        EXPECT_GE(rel.clipped_upper, static_cast<double>(chi) - 1e-9) << to_string(f);
      }
      if (f == SmiFunction::COM) continue;
      const auto cov = coverage_bounds(v, chi, p, sp, cfg, z);
      if (cov.preconditions_met) {
        ++checked_cov;
        const double delta = f == SmiFunction::FLVMI
                                 ? delta_avg(a, CoverageTarget::TargetedMinusA, s)
                                 : delta_avg(a, CoverageTarget::Query, s);
        EXPECT_LE(cov.clipped_lower, delta + 1e-9) << to_string(f) << " chi=" << chi;
        EXPECT_GE(cov.clipped_upper, delta - 1e-9) << to_string(f) << " chi=" << chi;
      }
    }
  }
  EXPECT_GT(checked_rel, 0u);
  EXPECT_GT(checked_cov, 0u);
}

INSTANTIATE_TEST_SUITE_P(Presets, PresetSandwich, ::testing::Values("one-target", "two-target"),
                         [](const auto& info) {
                           return std::string(info.param) == "one-target" ? "OneTarget"
                                                                          : "TwoTarget";
                         });

TEST(Bounds, ClippedWithinRange) {
  CounterRng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = testing::random_matrix(5, 5, 3, rng);
    const auto p = extract_dataset_params(s);
    const Subset a{{static_cast<Index>(rng.next_below(5)), static_cast<Index>(5 + rng.next_below(5))}};
    for (auto f : {SmiFunction::FLVMI, SmiFunction::FLQMI, SmiFunction::GCMI, SmiFunction::COM}) {
      const auto cfg = make(f, 0.5 + rng.next_unit());
      const auto sp = extract_subset_params(a, s, cfg.eta, p);
      const double v = eval_smi(a, s, cfg).value;
      const auto z = bound_sizes(s, 2);
      const auto rel = relevance_bounds(v, 1, p, sp, cfg, z);
      const auto cov = coverage_bounds(v, 1, p, sp, cfg, z);
      EXPECT_GE(rel.clipped_lower, 0.0);
      EXPECT_LE(rel.clipped_upper, 2.0);
      EXPECT_GE(cov.clipped_lower, 0.0);
      EXPECT_LE(cov.clipped_upper, 1.0);
      if (rel.preconditions_met) EXPECT_LE(rel.clipped_lower, rel.clipped_upper);
    }
  }
}

}  // namespace
}  // namespace smib
