#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "smib/kernels.hpp"

namespace smib::kernels {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double hmax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(m, _mm_unpackhi_pd(m, m)));
}

inline double hmin(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_min_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_min_sd(m, _mm_unpackhi_pd(m, m)));
}

double squared_distance(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double range_max(const double* x, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  if (n >= 4) {
    __m256d acc = _mm256_set1_pd(m);
    for (; i + 4 <= n; i += 4) acc = _mm256_max_pd(acc, _mm256_loadu_pd(x + i));
    m = hmax(acc);
  }
  for (; i < n; ++i) m = std::max(m, x[i]);
  return m;
}

double range_min(const double* x, std::size_t n) {
  double m = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  if (n >= 4) {
    __m256d acc = _mm256_set1_pd(m);
    for (; i + 4 <= n; i += 4) acc = _mm256_min_pd(acc, _mm256_loadu_pd(x + i));
    m = hmin(acc);
  }
  for (; i < n; ++i) m = std::min(m, x[i]);
  return m;
}

double range_sum(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

inline __m256d gather4(const double* x, const std::uint32_t* idx) {
  const __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx));
  return _mm256_i32gather_pd(x, vi, 8);
}

double gather_max(const double* x, const std::uint32_t* idx, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  std::size_t k = 0;
  if (n >= 4) {
    __m256d acc = _mm256_set1_pd(m);
    for (; k + 4 <= n; k += 4) acc = _mm256_max_pd(acc, gather4(x, idx + k));
    m = hmax(acc);
  }
  for (; k < n; ++k) m = std::max(m, x[idx[k]]);
  return m;
}

double gather_sum(const double* x, const std::uint32_t* idx, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) acc = _mm256_add_pd(acc, gather4(x, idx + k));
  double s = hsum(acc);
  for (; k < n; ++k) s += x[idx[k]];
  return s;
}

void max_accumulate(double* acc, const double* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(acc + i, _mm256_max_pd(_mm256_loadu_pd(acc + i), _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) acc[i] = std::max(acc[i], x[i]);
}

double min_sum(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_min_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += std::min(a[i], b[i]);
  return s;
}

double cover_gain(const double* cover, const double* x, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  __m256d acc = zero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(cover + i));
    acc = _mm256_add_pd(acc, _mm256_max_pd(d, zero));
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += std::max(x[i] - cover[i], 0.0);
  return s;
}

double capped_cover_gain(const double* cover, const double* x, const double* cap, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d c = _mm256_loadu_pd(cover + i);
    const __m256d k = _mm256_loadu_pd(cap + i);
    const __m256d before = _mm256_min_pd(c, k);
    const __m256d after = _mm256_min_pd(_mm256_max_pd(c, _mm256_loadu_pd(x + i)), k);
    acc = _mm256_add_pd(acc, _mm256_sub_pd(after, before));
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    s += std::min(std::max(cover[i], x[i]), cap[i]) - std::min(cover[i], cap[i]);
  }
  return s;
}

constexpr KernelTable kAvx2{
    Backend::Avx2, squared_distance, dot,        range_max,      range_min,
    range_sum,     gather_max,       gather_sum, max_accumulate, min_sum,
    cover_gain,    capped_cover_gain,
};

}  // namespace

namespace detail {
const KernelTable& avx2_table_unchecked() { return kAvx2; }
}  // namespace detail

}  // namespace smib::kernels
