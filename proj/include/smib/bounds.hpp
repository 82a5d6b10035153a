#pragma once

// Similarity parameters of a labelled dataset and the relevance (χ) and
// coverage (δ_avg) bounds they imply for each SMI instantiation.
//
// Naming follows the usual notation: α/β are ranges of per-element maximum
// query similarity, γ/Δ ranges of per-element mean query similarity, Ω the
// untargeted floor similarities and 𝒪 the overshoot of A over ηQ on T∖A.

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>

#include "smib/smi.hpp"
#include "smib/types.hpp"

namespace smib {

struct DatasetBoundParams {
  double alpha1 = 0, beta1 = 0;    // max_{j∈Q} s_ij over i ∈ U
  double alpha2 = 0, beta2 = 0;    // max_{j∈Q} s_ij over i ∈ T
  double alpha3 = 0;               // min_{i∈T} mean_{j∈Q} s_ij
  double beta3 = 0;                // mean_{i∈Q} max_{j∈T} s_ij
  double gamma1 = 0, delta1 = 0;   // mean_{j∈Q} s_ij over i ∈ U
  double gamma2 = 0, delta2 = 0;   // mean_{j∈Q} s_ij over i ∈ T
  double omega_u = 0;              // min_{i,j∈U} s_ij
  double omega_ut = 0;             // min_{i∈U, j∈T} s_ij
};

// Fields whose index set is empty for the given A are left unset:
// α4/β4 need T∖A ≠ ∅, γ3/Δ3 need A∩U ≠ ∅, γ4/Δ4 need A∩T ≠ ∅.
struct SubsetBoundParams {
  std::optional<double> alpha4, beta4;
  std::optional<double> gamma3, delta3;
  std::optional<double> gamma4, delta4;
  double overshoot = 0;  // 𝒪
};

DatasetBoundParams extract_dataset_params(const SimilarityMatrix& s);
SubsetBoundParams extract_subset_params(const Subset& a, const SimilarityMatrix& s, double eta,
                                        const DatasetBoundParams& params);

struct BoundSizes {
  std::size_t n_targeted = 0;
  std::size_t n_untargeted = 0;
  std::size_t n_query = 0;
  std::size_t budget = 0;  // B = |A|
};

BoundSizes bound_sizes(const SimilarityMatrix& s, std::size_t budget);

enum class BoundStatus {
  Ok,
  ChiPrecondition,          // χ outside the range the bound assumes
  SeparationViolated,       // e.g. α1 < α2 fails
  NonPositiveDenominator,
  UndefinedParameter,       // a subset parameter's index set is empty
};

std::string_view to_string(BoundStatus s);

struct BoundInterval {
  double lower = 0;
  double upper = 0;
  bool preconditions_met = false;
  double clipped_lower = 0;
  double clipped_upper = 0;
  BoundStatus status = BoundStatus::Ok;
  // Set for COM coverage: the interval comes from a common-value reading of a
  // sum-of-maxima bound and is not a guaranteed enclosure of δ_avg.
  bool heuristic = false;
};

// Bounds on χ = |A ∩ T| given I_F(A;Q). For COM this is the set of integer χ
// in [0, B] compatible with f_l(χ) ≤ I_F ≤ f_h(χ). Clipped to [0, B].
BoundInterval relevance_bounds(double ifa, std::size_t chi, const DatasetBoundParams& params,
                               const SubsetBoundParams& subset, const SmiConfig& cfg,
                               const BoundSizes& sizes);

// Bounds on δ_avg^{T∖A} (FLVMI) or δ_avg^Q (FLQMI, GCMI, COM). Clipped to [0, 1].
BoundInterval coverage_bounds(double ifa, std::size_t chi, const DatasetBoundParams& params,
                              const SubsetBoundParams& subset, const SmiConfig& cfg,
                              const BoundSizes& sizes);

// COM relevance envelope (f_l(χ), f_h(χ)) evaluated at a hypothetical χ with
// the subset parameters of the observed A. Requires γ3..Δ4 to be set.
std::pair<double, double> com_relevance_envelope(double chi, const DatasetBoundParams& params,
                                                 const SubsetBoundParams& subset,
                                                 const SmiConfig& cfg, const BoundSizes& sizes);

// Per-query COM coverage envelope (f_l(x), f_h(x)) for a fixed χ ≥ 1.
std::pair<double, double> com_coverage_envelope(double x, std::size_t chi,
                                                const DatasetBoundParams& params,
                                                const SubsetBoundParams& subset,
                                                const SmiConfig& cfg, const BoundSizes& sizes);

}  // namespace smib
