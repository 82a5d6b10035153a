#include "smib/greedy.hpp"

#include <queue>
#include <string>

namespace smib {
namespace {

void check_budget(const SimilarityMatrix& s, std::size_t budget) {
  if (budget > s.ground_size()) {
    throw Error(ErrorCode::BudgetTooLarge, "budget " + std::to_string(budget) +
                                               " exceeds ground set size " +
                                               std::to_string(s.ground_size()));
  }
}

SelectionResult plain_greedy(SmiEvaluator& ev, std::size_t n, std::size_t budget) {
  SelectionResult out;
  std::vector<bool> taken(n, false);
  for (std::size_t step = 0; step < budget; ++step) {
    Index best = 0;
    double best_gain = 0.0;
    bool found = false;
    for (Index c = 0; c < n; ++c) {
      if (taken[c]) continue;
      const double g = ev.gain(c);
      if (!found || g > best_gain) {
        best = c;
        best_gain = g;
        found = true;
      }
    }
    ev.add(best);
    taken[best] = true;
    out.gain_trace.emplace_back(best, best_gain);
  }
  return out;
}

struct Entry {
  double bound;
  Index index;
  std::size_t fresh_at;  // step at which `bound` was computed
};

// Max-heap on bound, then min on index.
struct EntryLess {
  bool operator()(const Entry& l, const Entry& r) const {
    if (l.bound != r.bound) return l.bound < r.bound;
    return l.index > r.index;
  }
};

SelectionResult lazy_greedy(SmiEvaluator& ev, std::size_t n, std::size_t budget) {
  SelectionResult out;
  std::priority_queue<Entry, std::vector<Entry>, EntryLess> heap;
  for (Index c = 0; c < n; ++c) heap.push({ev.gain(c), c, 0});
  for (std::size_t step = 0; step < budget; ++step) {
    while (true) {
      Entry top = heap.top();
      heap.pop();
      if (top.fresh_at == step) {
        ev.add(top.index);
        out.gain_trace.emplace_back(top.index, top.bound);
        break;
      }
      top.bound = ev.gain(top.index);
      top.fresh_at = step;
      heap.push(top);
    }
  }
  return out;
}

}  // namespace

SelectionResult greedy_select(const SimilarityMatrix& s, const SmiConfig& cfg, std::size_t budget,
                              GreedyMode mode) {
  check_budget(s, budget);
  SmiEvaluator ev(s, cfg);
  const std::size_t n = s.ground_size();
  SelectionResult out =
      mode == GreedyMode::Lazy ? lazy_greedy(ev, n, budget) : plain_greedy(ev, n, budget);
  out.subset = ev.selected();
  out.objective = out.subset.members.empty() ? 0.0 : eval_smi(out.subset, s, cfg).value;
  return out;
}

SelectionResult brute_force_best(const SimilarityMatrix& s, const SmiConfig& cfg,
                                 std::size_t budget) {
  check_budget(s, budget);
  const std::size_t n = s.ground_size();
  double combos = 1.0;
  for (std::size_t k = 0; k < budget; ++k) {
    combos = combos * static_cast<double>(n - k) / static_cast<double>(k + 1);
  }
  if (combos > kBruteForceLimit) {
    throw Error(ErrorCode::InstanceTooLarge, "brute force would enumerate more than 1e6 subsets");
  }

  SelectionResult best;
  if (budget == 0) return best;
  const auto profile = make_query_profile(s);
  Subset cur;
  cur.members.resize(budget);
  for (std::size_t k = 0; k < budget; ++k) cur.members[k] = static_cast<Index>(k);
  bool have = false;
  while (true) {
    const double v = eval_smi(cur, s, cfg, profile).value;
    if (!have || v > best.objective) {
      best.subset = cur;
      best.objective = v;
      have = true;
    }
    // Next combination in lexicographic order.
    std::size_t k = budget;
    while (k > 0 && cur.members[k - 1] == n - budget + (k - 1)) --k;
    if (k == 0) break;
    ++cur.members[k - 1];
    for (std::size_t j = k; j < budget; ++j) cur.members[j] = cur.members[j - 1] + 1;
  }

  // Report the gains of the optimum in member order.
  SmiEvaluator ev(s, cfg, profile);
  for (Index m : best.subset.members) {
    best.gain_trace.emplace_back(m, ev.gain(m));
    ev.add(m);
  }
  return best;
}

}  // namespace smib
