#include "smib/smi.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "smib/kernels.hpp"

namespace smib {

QueryProfile make_query_profile(const SimilarityMatrix& s) {
  const auto& kt = kernels::active();
  QueryProfile p;
  p.query_max.resize(s.ground_size());
  p.query_sum.resize(s.ground_size());
  for (std::size_t g = 0; g < s.ground_size(); ++g) {
    const auto q = s.row_query(g);
    p.query_max[g] = kt.range_max(q.data(), q.size());
    p.query_sum[g] = kt.range_sum(q.data(), q.size());
  }
  return p;
}

SmiValue eval_smi(const Subset& a, const SimilarityMatrix& s, const SmiConfig& cfg) {
  return eval_smi(a, s, cfg, make_query_profile(s));
}

SmiValue eval_smi(const Subset& a, const SimilarityMatrix& s, const SmiConfig& cfg,
                  const QueryProfile& profile) {
  if (a.members.empty()) throw Error(ErrorCode::EmptySubset, "SMI of an empty subset requested");
  validate_subset(a, s.ground_size());
  validate_smi_config(cfg);

  std::vector<Index> members = a.members;
  std::sort(members.begin(), members.end());

  const auto& kt = kernels::active();
  const std::size_t nv = s.ground_size();
  const std::size_t nq = s.n_query();

  switch (cfg.function) {
    case SmiFunction::FLVMI: {
      std::vector<double> cover(nv, -std::numeric_limits<double>::infinity());
      for (Index m : members) kt.max_accumulate(cover.data(), s.row_ground(m).data(), nv);
      std::vector<double> cap(nv);
      for (std::size_t i = 0; i < nv; ++i) cap[i] = cfg.eta * profile.query_max[i];
      return {kt.min_sum(cover.data(), cap.data(), nv)};
    }
    case SmiFunction::FLQMI: {
      std::vector<double> cover(nq, -std::numeric_limits<double>::infinity());
      for (Index m : members) kt.max_accumulate(cover.data(), s.row_query(m).data(), nq);
      double relevance = 0.0;
      for (Index m : members) relevance += profile.query_max[m];
      return {kt.range_sum(cover.data(), nq) + cfg.eta * relevance};
    }
    case SmiFunction::GCMI: {
      double total = 0.0;
      for (Index m : members) total += profile.query_sum[m];
      return {2.0 * cfg.lambda * total};
    }
    case SmiFunction::COM: {
      double subset_side = 0.0;
      for (Index m : members) subset_side += apply_concave(cfg.psi, profile.query_sum[m]);
      double query_side = 0.0;
      for (std::size_t k = 0; k < nq; ++k) {
        const double* qrow = s.row_ground(s.query_row(k)).data();
        query_side += apply_concave(cfg.psi, kt.gather_sum(qrow, members.data(), members.size()));
      }
      return {cfg.eta * subset_side + query_side};
    }
  }
  return {0.0};
}

SmiEvaluator::SmiEvaluator(const SimilarityMatrix& s, const SmiConfig& cfg)
    : SmiEvaluator(s, cfg, make_query_profile(s)) {}

SmiEvaluator::SmiEvaluator(const SimilarityMatrix& s, const SmiConfig& cfg, QueryProfile profile)
    : s_(&s), cfg_(cfg), profile_(std::move(profile)), in_set_(s.ground_size(), false) {
  validate_smi_config(cfg_);
  switch (cfg_.function) {
    case SmiFunction::FLVMI:
      ground_cover_.assign(s.ground_size(), 0.0);
      ground_cap_.resize(s.ground_size());
      for (std::size_t i = 0; i < s.ground_size(); ++i) {
        ground_cap_[i] = cfg_.eta * profile_.query_max[i];
      }
      break;
    case SmiFunction::FLQMI:
    case SmiFunction::COM:
      query_acc_.assign(s.n_query(), 0.0);
      break;
    case SmiFunction::GCMI:
      break;
  }
}

double SmiEvaluator::gain(Index c) const {
  const auto& kt = kernels::active();
  switch (cfg_.function) {
    case SmiFunction::FLVMI:
      return kt.capped_cover_gain(ground_cover_.data(), s_->row_ground(c).data(),
                                  ground_cap_.data(), ground_cover_.size());
    case SmiFunction::FLQMI:
      return kt.cover_gain(query_acc_.data(), s_->row_query(c).data(), query_acc_.size()) +
             cfg_.eta * profile_.query_max[c];
    case SmiFunction::GCMI:
      return 2.0 * cfg_.lambda * profile_.query_sum[c];
    case SmiFunction::COM: {
      const auto row = s_->row_query(c);
      double g = cfg_.eta * apply_concave(cfg_.psi, profile_.query_sum[c]);
      for (std::size_t k = 0; k < query_acc_.size(); ++k) {
        g += apply_concave(cfg_.psi, query_acc_[k] + row[k]) -
             apply_concave(cfg_.psi, query_acc_[k]);
      }
      return g;
    }
  }
  return 0.0;
}

void SmiEvaluator::add(Index c) {
  if (c >= s_->ground_size()) {
    throw Error(ErrorCode::IndexOutOfRange, "candidate " + std::to_string(c) + " outside ground set");
  }
  if (in_set_[c]) throw Error(ErrorCode::AlreadyMember, "candidate already selected");
  running_ += gain(c);
  const auto& kt = kernels::active();
  switch (cfg_.function) {
    case SmiFunction::FLVMI:
      kt.max_accumulate(ground_cover_.data(), s_->row_ground(c).data(), ground_cover_.size());
      break;
    case SmiFunction::FLQMI:
      kt.max_accumulate(query_acc_.data(), s_->row_query(c).data(), query_acc_.size());
      break;
    case SmiFunction::COM: {
      const auto row = s_->row_query(c);
      for (std::size_t k = 0; k < query_acc_.size(); ++k) query_acc_[k] += row[k];
      break;
    }
    case SmiFunction::GCMI:
      break;
  }
  in_set_[c] = true;
  selected_.members.push_back(c);
}

double marginal_gain(const Subset& a, Index candidate, const SimilarityMatrix& s,
                     const SmiConfig& cfg) {
  validate_subset(a, s.ground_size());
  if (candidate >= s.ground_size()) {
    throw Error(ErrorCode::IndexOutOfRange, "candidate outside ground set");
  }
  if (a.contains(candidate)) throw Error(ErrorCode::AlreadyMember, "candidate already in subset");
  SmiEvaluator ev(s, cfg);
  for (Index m : a.members) ev.add(m);
  return ev.gain(candidate);
}

}  // namespace smib
