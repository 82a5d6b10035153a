#include "smib/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "smib/kernels.hpp"

namespace smib {

double delta_avg(const Subset& a, CoverageTarget target, const SimilarityMatrix& s) {
  if (a.members.empty()) throw Error(ErrorCode::EmptySubset, "coverage of an empty subset");
  validate_subset(a, s.ground_size());
  const auto& kt = kernels::active();
  const Index* idx = a.members.data();
  const std::size_t n = a.members.size();

  double acc = 0.0;
  std::size_t count = 0;
  if (target == CoverageTarget::Query) {
    for (std::size_t k = 0; k < s.n_query(); ++k) {
      acc += kt.gather_max(s.row_ground(s.query_row(k)).data(), idx, n);
      ++count;
    }
  } else {
    std::vector<bool> selected(s.ground_size(), false);
    for (Index m : a.members) selected[m] = true;
    for (std::size_t i = 0; i < s.n_targeted(); ++i) {
      if (selected[i]) continue;
      acc += kt.gather_max(s.row_ground(i).data(), idx, n);
      ++count;
    }
  }
  if (count == 0) throw Error(ErrorCode::EmptyTargetSet, "coverage target set is empty");
  return acc / static_cast<double>(count);
}

namespace {

// rank[k] for position k of `order`-sorted data, ties split by position.
std::vector<double> ordinal_ranks(std::span<const double> values,
                                  const std::vector<std::size_t>& base_order) {
  std::vector<std::size_t> order = base_order;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return values[l] < values[r]; });
  std::vector<double> ranks(values.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    ranks[order[pos]] = static_cast<double>(pos + 1);
  }
  return ranks;
}

}  // namespace

double spearman_ordinal(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::LengthMismatch, "spearman inputs differ in length");
  }
  const std::size_t n = xs.size();
  if (n < 2) throw Error(ErrorCode::TooFewSamples, "spearman needs at least two samples");

  std::vector<std::size_t> by_x(n);
  std::iota(by_x.begin(), by_x.end(), std::size_t{0});
  std::stable_sort(by_x.begin(), by_x.end(),
                   [&](std::size_t l, std::size_t r) { return xs[l] < xs[r]; });

  const auto rx = ordinal_ranks(xs, by_x);
  const auto ry = ordinal_ranks(ys, by_x);

  const double mean = static_cast<double>(n + 1) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace smib
