#include <algorithm>
#include <limits>

#include "smib/kernels.hpp"

namespace smib::kernels {
namespace {

double squared_distance(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double range_max(const double* x, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, x[i]);
  return m;
}

double range_min(const double* x, std::size_t n) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) m = std::min(m, x[i]);
  return m;
}

double range_sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double gather_max(const double* x, const std::uint32_t* idx, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) m = std::max(m, x[idx[k]]);
  return m;
}

double gather_sum(const double* x, const std::uint32_t* idx, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += x[idx[k]];
  return acc;
}

void max_accumulate(double* acc, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = std::max(acc[i], x[i]);
}

double min_sum(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::min(a[i], b[i]);
  return acc;
}

double cover_gain(const double* cover, const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::max(x[i] - cover[i], 0.0);
  return acc;
}

double capped_cover_gain(const double* cover, const double* x, const double* cap, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double before = std::min(cover[i], cap[i]);
    const double after = std::min(std::max(cover[i], x[i]), cap[i]);
    acc += after - before;
  }
  return acc;
}

constexpr KernelTable kScalar{
    Backend::Scalar, squared_distance, dot,        range_max,      range_min,
    range_sum,       gather_max,       gather_sum, max_accumulate, min_sum,
    cover_gain,      capped_cover_gain,
};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace smib::kernels
