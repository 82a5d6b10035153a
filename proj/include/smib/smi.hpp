#pragma once

#include <vector>

#include "smib/types.hpp"

namespace smib {

struct SmiValue {
  double value = 0.0;
};

// Per-ground-element query statistics shared by every evaluator:
// query_max[g] = max_{j∈Q} s_gj and query_sum[g] = Σ_{j∈Q} s_gj.
struct QueryProfile {
  std::vector<double> query_max;
  std::vector<double> query_sum;
};

QueryProfile make_query_profile(const SimilarityMatrix& s);

// I_F(A; Q) in closed form:
//   FLVMI  Σ_{i∈V} min(max_{j∈A} s_ij, η max_{j∈Q} s_ij)
//   FLQMI  Σ_{i∈Q} max_{j∈A} s_ij + η Σ_{i∈A} max_{j∈Q} s_ij
//   GCMI   2λ Σ_{i∈A} Σ_{j∈Q} s_ij
//   COM    η Σ_{i∈A} ψ(Σ_{j∈Q} s_ij) + Σ_{i∈Q} ψ(Σ_{j∈A} s_ij)
// The result depends only on the member set, not its order.
SmiValue eval_smi(const Subset& a, const SimilarityMatrix& s, const SmiConfig& cfg);
SmiValue eval_smi(const Subset& a, const SimilarityMatrix& s, const SmiConfig& cfg,
                  const QueryProfile& profile);

// Incremental evaluator: holds running per-element maxima / sums for the
// current selection so that gains cost O(|V|) or O(|Q|). Not thread-safe;
// one instance per greedy run.
class SmiEvaluator {
 public:
  SmiEvaluator(const SimilarityMatrix& s, const SmiConfig& cfg);
  SmiEvaluator(const SimilarityMatrix& s, const SmiConfig& cfg, QueryProfile profile);

  // I_F(A ∪ {c}) − I_F(A) for the current A. c must not be selected yet.
  double gain(Index candidate) const;
  void add(Index candidate);

  const Subset& selected() const { return selected_; }
  // Sum of committed gains; equals eval_smi(selected()) up to rounding.
  double running_value() const { return running_; }

 private:
  const SimilarityMatrix* s_;
  SmiConfig cfg_;
  QueryProfile profile_;
  std::vector<double> ground_cover_;  // FLVMI: max_{j∈A} s_ij, i ∈ V
  std::vector<double> ground_cap_;    // FLVMI: η max_{j∈Q} s_ij
  std::vector<double> query_acc_;     // FLQMI: running max; COM: running sum
  std::vector<bool> in_set_;
  Subset selected_;
  double running_ = 0.0;
};

// I_F(A ∪ {c}) − I_F(A); for empty A this is I_F({c}).
// Throws AlreadyMember if c ∈ A.
double marginal_gain(const Subset& a, Index candidate, const SimilarityMatrix& s,
                     const SmiConfig& cfg);

}  // namespace smib
