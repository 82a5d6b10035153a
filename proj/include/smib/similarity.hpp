#pragma once

#include <optional>

#include "smib/types.hpp"

namespace smib {

enum class KernelKind { Rbf, CosineShifted };

struct KernelConfig {
  KernelKind kind = KernelKind::Rbf;
  // Squared-distance scale for RBF. Unset means "median heuristic": the
  // median squared pairwise distance over the ground set.
  std::optional<double> bandwidth;
};

std::string_view to_string(KernelKind k);
KernelKind parse_kernel_kind(std::string_view name);

// RBF: exp(-‖x−y‖² / bandwidth). CosineShifted: (1 + cos∠(x,y)) / 2 with
// cos∠ taken as 0 when either vector is zero. Always in [0, 1].
// RBF needs an explicit bandwidth here; throws InvalidKernel otherwise.
double kernel_value(const Point& x, const Point& y, const KernelConfig& k);

// Median of ‖x−y‖² over unordered pairs of distinct ground points. Falls back
// to 1 when every pair coincides (or there is only one ground point).
double median_squared_distance(const LabeledDataset& d);

// Resolves the median heuristic if needed, then fills the [T | U | Q]
// matrix. Diagonal is forced to exactly 1.
SimilarityMatrix build_similarity_matrix(const LabeledDataset& d, const KernelConfig& k);

}  // namespace smib
