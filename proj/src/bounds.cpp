#include "smib/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "smib/kernels.hpp"

namespace smib {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Plain left-to-right sums in index order; no SIMD reductions.
double mean_of(std::span<const double> xs) {
  double acc = 0.0;
  for (double x : xs) acc += x;
  return acc / static_cast<double>(xs.size());
}

double mean_gathered(std::span<const double> row, const std::vector<Index>& idx) {
  double acc = 0.0;
  for (Index j : idx) acc += row[j];
  return acc / static_cast<double>(idx.size());
}

BoundInterval failed(BoundStatus status, double hi) {
  BoundInterval b;
  b.lower = -kInf;
  b.upper = kInf;
  b.preconditions_met = false;
  b.status = status;
  b.clipped_lower = 0.0;
  b.clipped_upper = hi;
  return b;
}

BoundInterval finished(double lower, double upper, double hi) {
  BoundInterval b;
  b.lower = lower;
  b.upper = upper;
  b.preconditions_met = true;
  b.status = BoundStatus::Ok;
  b.clipped_lower = std::clamp(lower, 0.0, hi);
  b.clipped_upper = std::clamp(upper, 0.0, hi);
  return b;
}

bool all_set(std::initializer_list<const std::optional<double>*> xs) {
  return std::all_of(xs.begin(), xs.end(), [](const auto* x) { return x->has_value(); });
}

// Smallest x in [0,1] with f(x) >= t for increasing f; -inf if f(0) >= t
// already, +inf if f(1) < t.
template <typename F>
double first_reaching(F f, double t) {
  if (f(0.0) >= t) return -kInf;
  if (f(1.0) < t) return kInf;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) >= t ? hi : lo) = mid;
  }
  return hi;
}

// Largest x in [0,1] with f(x) <= t for increasing f; +inf if f(1) <= t,
// -inf if f(0) > t.
template <typename F>
double last_below(F f, double t) {
  if (f(1.0) <= t) return kInf;
  if (f(0.0) > t) return -kInf;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) <= t ? lo : hi) = mid;
  }
  return lo;
}

// Relative slack for the integer scan in the COM relevance inversion; the
// envelope is tight when the parameter ranges collapse.
constexpr double kScanSlack = 1e-12;

}  // namespace

std::string_view to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::Ok: return "ok";
    case BoundStatus::ChiPrecondition: return "chi_precondition";
    case BoundStatus::SeparationViolated: return "separation_violated";
    case BoundStatus::NonPositiveDenominator: return "non_positive_denominator";
    case BoundStatus::UndefinedParameter: return "undefined_parameter";
  }
  return "?";
}

DatasetBoundParams extract_dataset_params(const SimilarityMatrix& s) {
  const auto& kt = kernels::active();
  const std::size_t nt = s.n_targeted();
  const std::size_t nu = s.n_untargeted();
  const std::size_t nq = s.n_query();

  DatasetBoundParams p;
  p.alpha1 = p.gamma1 = p.alpha2 = p.gamma2 = p.alpha3 = kInf;
  p.beta1 = p.delta1 = p.beta2 = p.delta2 = -kInf;
  p.omega_u = p.omega_ut = kInf;

  for (std::size_t i = 0; i < nt; ++i) {
    const auto q = s.row_query(i);
    const double qmax = kt.range_max(q.data(), nq);
    const double qmean = mean_of(q);
    p.alpha2 = std::min(p.alpha2, qmax);
    p.beta2 = std::max(p.beta2, qmax);
    p.gamma2 = std::min(p.gamma2, qmean);
    p.delta2 = std::max(p.delta2, qmean);
  }
  p.alpha3 = p.gamma2;

  for (std::size_t i = nt; i < nt + nu; ++i) {
    const auto q = s.row_query(i);
    const double qmax = kt.range_max(q.data(), nq);
    const double qmean = mean_of(q);
    p.alpha1 = std::min(p.alpha1, qmax);
    p.beta1 = std::max(p.beta1, qmax);
    p.gamma1 = std::min(p.gamma1, qmean);
    p.delta1 = std::max(p.delta1, qmean);
    const auto ru = s.row_untargeted(i);
    const auto rt = s.row_targeted(i);
    p.omega_u = std::min(p.omega_u, kt.range_min(ru.data(), nu));
    p.omega_ut = std::min(p.omega_ut, kt.range_min(rt.data(), nt));
  }

  double acc = 0.0;
  for (std::size_t k = 0; k < nq; ++k) {
    const auto rt = s.row_targeted(s.query_row(k));
    acc += kt.range_max(rt.data(), nt);
  }
  p.beta3 = acc / static_cast<double>(nq);
  return p;
}

SubsetBoundParams extract_subset_params(const Subset& a, const SimilarityMatrix& s, double eta,
                                        const DatasetBoundParams& params) {
  validate_subset(a, s.ground_size());
  const auto& kt = kernels::active();
  const std::size_t nt = s.n_targeted();

  std::vector<Index> members = a.members;
  std::sort(members.begin(), members.end());
  std::vector<Index> in_t, in_u;
  for (Index m : members) (m < nt ? in_t : in_u).push_back(m);

  SubsetBoundParams out;

  if (!members.empty()) {
    std::vector<bool> selected(s.ground_size(), false);
    for (Index m : members) selected[m] = true;
    const double cap_lo = eta * params.alpha2;
    const double cap_hi = eta * params.beta2;
    double sum_lo = 0.0, sum_hi = 0.0, overshoot = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < nt; ++i) {
      if (selected[i]) continue;
      const auto row = s.row_ground(i);
      const double cover = kt.gather_max(row.data(), members.data(), members.size());
      const auto q = s.row_query(i);
      const double query_cap = eta * kt.range_max(q.data(), q.size());
      sum_lo += std::min(cover, cap_lo);
      sum_hi += std::min(cover, cap_hi);
      if (cover > query_cap) overshoot += cover - query_cap;
      ++count;
    }
    if (count > 0) {
      out.alpha4 = sum_lo / static_cast<double>(count);
      out.beta4 = sum_hi / static_cast<double>(count);
    }
    out.overshoot = overshoot;
  }

  auto query_range = [&](const std::vector<Index>& part, std::optional<double>& lo,
                         std::optional<double>& hi) {
    if (part.empty()) return;
    double mn = kInf, mx = -kInf;
    for (std::size_t k = 0; k < s.n_query(); ++k) {
      const double m = mean_gathered(s.row_ground(s.query_row(k)), part);
      mn = std::min(mn, m);
      mx = std::max(mx, m);
    }
    lo = mn;
    hi = mx;
  };
  query_range(in_u, out.gamma3, out.delta3);
  query_range(in_t, out.gamma4, out.delta4);
  return out;
}

BoundSizes bound_sizes(const SimilarityMatrix& s, std::size_t budget) {
  return {s.n_targeted(), s.n_untargeted(), s.n_query(), budget};
}

std::pair<double, double> com_relevance_envelope(double chi, const DatasetBoundParams& p,
                                                 const SubsetBoundParams& sp,
                                                 const SmiConfig& cfg, const BoundSizes& z) {
  const auto psi = [&](double x) { return apply_concave(cfg.psi, x); };
  const double q = static_cast<double>(z.n_query);
  const double b = static_cast<double>(z.budget);
  const double g3 = sp.gamma3.value_or(0.0), g4 = sp.gamma4.value_or(0.0);
  const double d3 = sp.delta3.value_or(0.0), d4 = sp.delta4.value_or(0.0);
  const double f_l = cfg.eta * chi * (psi(q * p.gamma2) - psi(q * p.gamma1)) +
                     cfg.eta * b * psi(q * p.gamma1) + q * psi(b * g3 + chi * (g4 - g3));
  const double f_h = cfg.eta * chi * (psi(q * p.delta2) - psi(q * p.delta1)) +
                     cfg.eta * b * psi(q * p.delta1) + q * psi(b * d3 + chi * (d4 - d3));
  return {f_l, f_h};
}

std::pair<double, double> com_coverage_envelope(double x, std::size_t chi,
                                                const DatasetBoundParams& p,
                                                const SubsetBoundParams& sp, const SmiConfig& cfg,
                                                const BoundSizes& z) {
  const auto psi = [&](double v) { return apply_concave(cfg.psi, v); };
  const double q = static_cast<double>(z.n_query);
  const double c = static_cast<double>(chi);
  const double rest = static_cast<double>(z.budget) - c;
  // (B−χ)γ3 vanishes when A has no untargeted member.
  const double g3 = rest > 0 ? sp.gamma3.value_or(0.0) : 0.0;
  const double d3 = rest > 0 ? sp.delta3.value_or(0.0) : 0.0;
  const double g4 = sp.gamma4.value_or(0.0), d4 = sp.delta4.value_or(0.0);
  const double f_l = cfg.eta / q * (c * psi(q * p.gamma2) + rest * psi(q * p.gamma1)) +
                     psi((c - 1.0) * g4 + rest * g3 + x);
  const double f_h = cfg.eta / q * (c * psi(q * p.delta2) + rest * psi(q * p.delta1)) +
                     psi((c - 1.0) * d4 + rest * d3 + x);
  return {f_l, f_h};
}

BoundInterval relevance_bounds(double ifa, std::size_t chi, const DatasetBoundParams& p,
                               const SubsetBoundParams& sp, const SmiConfig& cfg,
                               const BoundSizes& z) {
  const double hi = static_cast<double>(z.budget);
  const double eta = cfg.eta;
  const double nt = static_cast<double>(z.n_targeted);
  const double nu = static_cast<double>(z.n_untargeted);
  const double nq = static_cast<double>(z.n_query);
  const double b = static_cast<double>(z.budget);

  switch (cfg.function) {
    case SmiFunction::FLVMI: {
      if (chi < 1) return failed(BoundStatus::ChiPrecondition, hi);
      if (!sp.alpha4 || !sp.beta4) return failed(BoundStatus::UndefinedParameter, hi);
      const double den_lo = std::min(1.0, eta * p.beta2) - *sp.beta4;
      const double den_hi = std::min(1.0, eta * p.alpha2) - *sp.alpha4;
      if (!(den_lo > 0.0 && den_hi > 0.0)) {
        return failed(BoundStatus::NonPositiveDenominator, hi);
      }
      const double lower = (ifa - nu * std::min(1.0, eta * p.beta1) - nt * *sp.beta4) / den_lo;
      const double upper = (ifa - nt * *sp.alpha4) / den_hi;
      return finished(lower, upper, hi);
    }
    case SmiFunction::FLQMI: {
      if (chi < 1) return failed(BoundStatus::ChiPrecondition, hi);
      if (!(p.alpha1 < p.alpha2 && p.beta1 < p.beta2)) {
        return failed(BoundStatus::SeparationViolated, hi);
      }
      const double lower = (ifa - eta * b * p.beta1 - nq * p.beta3) / (eta * (p.beta2 - p.beta1));
      const double upper =
          (ifa - eta * b * p.alpha1 - nq * p.alpha3) / (eta * (p.alpha2 - p.alpha1));
      return finished(lower, upper, hi);
    }
    case SmiFunction::GCMI: {
      if (!(p.gamma1 < p.gamma2 && p.delta1 < p.delta2)) {
        return failed(BoundStatus::SeparationViolated, hi);
      }
      const double x = ifa / (2.0 * cfg.lambda * nq);
      const double lower = (x - b * p.delta1) / (p.delta2 - p.delta1);
      const double upper = (x - b * p.gamma1) / (p.gamma2 - p.gamma1);
      return finished(lower, upper, hi);
    }
    case SmiFunction::COM: {
      if (!all_set({&sp.gamma3, &sp.delta3, &sp.gamma4, &sp.delta4})) {
        return failed(BoundStatus::UndefinedParameter, hi);
      }
      if (!(p.gamma2 > p.gamma1 && *sp.gamma4 > *sp.gamma3 && p.delta2 > p.delta1 &&
            *sp.delta4 > *sp.delta3)) {
        return failed(BoundStatus::SeparationViolated, hi);
      }
      const double slack = kScanSlack * std::max(1.0, std::abs(ifa));
      double lower = kInf, upper = -kInf;
      for (std::size_t c = 0; c <= z.budget; ++c) {
        const auto [f_l, f_h] = com_relevance_envelope(static_cast<double>(c), p, sp, cfg, z);
        if (f_h >= ifa - slack && lower == kInf) lower = static_cast<double>(c);
        if (f_l <= ifa + slack) upper = static_cast<double>(c);
      }
      return finished(lower, upper, hi);
    }
  }
  return failed(BoundStatus::UndefinedParameter, hi);
}

BoundInterval coverage_bounds(double ifa, std::size_t chi, const DatasetBoundParams& p,
                              const SubsetBoundParams& sp, const SmiConfig& cfg,
                              const BoundSizes& z) {
  const double eta = cfg.eta;
  const double c = static_cast<double>(chi);
  const double nt = static_cast<double>(z.n_targeted);
  const double nu = static_cast<double>(z.n_untargeted);
  const double nq = static_cast<double>(z.n_query);
  const double b = static_cast<double>(z.budget);

  switch (cfg.function) {
    case SmiFunction::FLVMI: {
      if (chi < 1 || chi >= z.budget) return failed(BoundStatus::ChiPrecondition, 1.0);
      if (chi >= z.n_targeted) return failed(BoundStatus::NonPositiveDenominator, 1.0);
      const double den = nt - c;
      const double o = sp.overshoot;
      const double lower =
          (ifa - nu * std::min(eta * p.beta1, 1.0) - c * std::min(eta * p.beta2, 1.0) + o) / den;
      const double floor_u = std::min(std::max(p.omega_u, p.omega_ut), eta * p.alpha1);
      const double upper = (ifa - (b - c) * std::min(eta * p.alpha1, 1.0) -
                            c * std::min(eta * p.alpha2, 1.0) - (nu - b - c) * floor_u + o) /
                           den;
      return finished(lower, upper, 1.0);
    }
    case SmiFunction::FLQMI: {
      if (chi < 1) return failed(BoundStatus::ChiPrecondition, 1.0);
      const double lower = (ifa - eta * (c * p.beta2 + (b - c) * p.beta1)) / nq;
      const double upper = (ifa - eta * (c * p.alpha2 + (b - c) * p.alpha1)) / nq;
      return finished(lower, upper, 1.0);
    }
    case SmiFunction::GCMI: {
      const double x = ifa / (2.0 * cfg.lambda * nq);
      const double lower = x - b * p.delta1 - c * (p.delta2 - p.delta1);
      const double upper = x - (b - 1.0) * p.gamma1 + p.gamma2 - c * (p.gamma2 - p.gamma1);
      return finished(lower, upper, 1.0);
    }
    case SmiFunction::COM: {
      if (chi < 1) {
        auto out = failed(BoundStatus::ChiPrecondition, 1.0);
        out.heuristic = true;
        return out;
      }
      if (!sp.gamma4 || !sp.delta4 || (chi < z.budget && (!sp.gamma3 || !sp.delta3))) {
        auto out = failed(BoundStatus::UndefinedParameter, 1.0);
        out.heuristic = true;
        return out;
      }
      // Every per-query maximum set to a common x: |Q| f(x) brackets I_F.
      const double t = ifa / nq;
      const auto f_l = [&](double x) { return com_coverage_envelope(x, chi, p, sp, cfg, z).first; };
      const auto f_h = [&](double x) { return com_coverage_envelope(x, chi, p, sp, cfg, z).second; };
      auto out = finished(first_reaching(f_h, t), last_below(f_l, t), 1.0);
      out.heuristic = true;
      return out;
    }
  }
  return failed(BoundStatus::UndefinedParameter, 1.0);
}

}  // namespace smib
