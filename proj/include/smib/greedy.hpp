#pragma once

#include <utility>
#include <vector>

#include "smib/smi.hpp"
#include "smib/types.hpp"

namespace smib {

struct SelectionResult {
  Subset subset;             // in selection order (lexicographic for brute force)
  double objective = 0.0;    // eval_smi(subset)
  std::vector<std::pair<Index, double>> gain_trace;
};

enum class GreedyMode { Plain, Lazy };

// Cardinality-constrained greedy maximisation of I_F(A; Q). Each step adds
// the element of largest marginal gain, lowest index on ties. Lazy mode keeps
// stale upper bounds in a priority queue and returns the same selection.
// Throws BudgetTooLarge if budget > |V|.
SelectionResult greedy_select(const SimilarityMatrix& s, const SmiConfig& cfg, std::size_t budget,
                              GreedyMode mode = GreedyMode::Lazy);

// Exact maximiser by enumerating all C(|V|, budget) subsets in lexicographic
// order; the first maximiser wins. Throws InstanceTooLarge above 10^6 subsets.
SelectionResult brute_force_best(const SimilarityMatrix& s, const SmiConfig& cfg,
                                 std::size_t budget);

inline constexpr double kBruteForceLimit = 1e6;

}  // namespace smib
