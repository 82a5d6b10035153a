#pragma once

// Data-parallel inner loops used by the similarity builder, the SMI
// evaluators and the bound-parameter extraction.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The active table is chosen once at startup from CPUID; the
// environment variable SMIB_SIMD=scalar forces the reference path.
//
// Max/min style kernels are exact and return bit-identical results across
// backends. Sum style kernels may differ in the last bits because the AVX2
// variant accumulates in four lanes.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace smib::kernels {

enum class Backend { Scalar, Avx2 };

struct KernelTable {
  Backend backend;
  // ‖a−b‖² over n coordinates.
  double (*squared_distance)(const double* a, const double* b, std::size_t n);
  double (*dot)(const double* a, const double* b, std::size_t n);
  // Reductions over a contiguous range; empty ranges give -inf / +inf / 0.
  double (*range_max)(const double* x, std::size_t n);
  double (*range_min)(const double* x, std::size_t n);
  double (*range_sum)(const double* x, std::size_t n);
  // Reductions over x[idx[k]].
  double (*gather_max)(const double* x, const std::uint32_t* idx, std::size_t n);
  double (*gather_sum)(const double* x, const std::uint32_t* idx, std::size_t n);
  // acc[i] = max(acc[i], x[i])
  void (*max_accumulate)(double* acc, const double* x, std::size_t n);
  // Σ min(a[i], b[i])
  double (*min_sum)(const double* a, const double* b, std::size_t n);
  // Σ max(x[i] - cover[i], 0): facility-location gain against a running cover.
  double (*cover_gain)(const double* cover, const double* x, std::size_t n);
  // Σ min(max(cover[i], x[i]), cap[i]) - min(cover[i], cap[i]): capped variant.
  double (*capped_cover_gain)(const double* cover, const double* x, const double* cap,
                              std::size_t n);
};

const KernelTable& scalar_table();
// nullptr when the AVX2 translation unit is not built or the CPU lacks AVX2.
const KernelTable* avx2_table();

// The table every library routine uses.
const KernelTable& active();

std::string_view to_string(Backend b);

// Every backend usable on this machine, scalar first.
std::vector<const KernelTable*> available_tables();

namespace detail {
const KernelTable& avx2_table_unchecked();
}

}  // namespace smib::kernels
