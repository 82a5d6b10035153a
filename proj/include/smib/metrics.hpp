#pragma once

#include <optional>
#include <span>

#include "smib/types.hpp"

namespace smib {

enum class CoverageTarget { Query, TargetedMinusA };

// δ_avg^S = (1/|S|) Σ_{i∈S} max_{j∈A} s_ij for S = Q or S = T∖A.
// Throws EmptySubset, or EmptyTargetSet when T ⊆ A.
double delta_avg(const Subset& a, CoverageTarget target, const SimilarityMatrix& s);

// Spearman correlation with ordinal tie splitting. Samples are first put in
// xs order (stable), then each sequence gets ranks 1..n where ties keep that
// order; the result is the Pearson correlation of the two rank vectors.
// Throws LengthMismatch or TooFewSamples (n < 2).
double spearman_ordinal(std::span<const double> xs, std::span<const double> ys);

struct SampleRecord {
  Subset subset;
  double smi_value = 0;
  std::size_t chi = 0;
  double delta_avg_q = 0;
  std::optional<double> delta_avg_t_minus_a;
};

}  // namespace smib
