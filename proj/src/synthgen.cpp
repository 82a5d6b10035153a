#include "smib/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace smib {

void validate_scenario(const ScenarioConfig& cfg) {
  bool has_t = false, has_u = false;
  std::size_t queries = 0;
  std::size_t dim = 0;
  for (const auto& c : cfg.clusters) {
    if (c.mean.coords.empty()) throw Error(ErrorCode::InvalidConfig, "cluster mean is empty");
    if (dim == 0) dim = c.mean.coords.size();
    if (c.mean.coords.size() != dim || c.covariance.size() != dim) {
      throw Error(ErrorCode::InvalidConfig, "cluster mean/covariance dimensions disagree");
    }
    for (double v : c.mean.coords) {
      if (!std::isfinite(v)) throw Error(ErrorCode::InvalidConfig, "cluster mean is not finite");
    }
    for (double v : c.covariance) {
      if (!(std::isfinite(v) && v >= 0.0)) {
        throw Error(ErrorCode::InvalidConfig, "covariance entries must be finite and >= 0");
      }
    }
    if (c.count < 1) throw Error(ErrorCode::InvalidConfig, "cluster count must be >= 1");
    if (c.role == ClusterRole::Untargeted && c.query_count > 0) {
      throw Error(ErrorCode::InvalidConfig, "queries may only come from targeted clusters");
    }
    (c.role == ClusterRole::Targeted ? has_t : has_u) = true;
    queries += c.query_count;
  }
  if (!has_t || !has_u) {
    throw Error(ErrorCode::InvalidConfig, "need at least one targeted and one untargeted cluster");
  }
  if (queries < 1) throw Error(ErrorCode::InvalidConfig, "need at least one query point");
  if (cfg.budget < 1) throw Error(ErrorCode::InvalidConfig, "budget must be >= 1");
}

namespace {

Point draw(const ClusterSpec& c, CounterRng& rng) {
  Point p;
  p.coords.resize(c.mean.coords.size());
  for (std::size_t k = 0; k < p.coords.size(); ++k) {
    p.coords[k] = c.mean.coords[k] + std::sqrt(c.covariance[k]) * rng.next_normal();
  }
  return p;
}

ClusterSpec cluster(double x, double y, ClusterRole role, std::size_t queries) {
  ClusterSpec c;
  c.mean.coords = {x, y};
  c.covariance = {0.25, 0.25};
  c.count = 40;
  c.role = role;
  c.query_count = queries;
  return c;
}

}  // namespace

LabeledDataset generate_dataset(const ScenarioConfig& cfg) {
  validate_scenario(cfg);
  CounterRng rng(derive_stream_key(cfg.seed, kDatasetStream));
  LabeledDataset d;
  for (const auto& c : cfg.clusters) {
    auto& dst = c.role == ClusterRole::Targeted ? d.targeted : d.untargeted;
    for (std::size_t i = 0; i < c.count; ++i) dst.push_back(draw(c, rng));
  }
  for (const auto& c : cfg.clusters) {
    for (std::size_t i = 0; i < c.query_count; ++i) d.query.push_back(draw(c, rng));
  }
  return d;
}

ScenarioConfig preset_scenario(std::string_view name) {
  ScenarioConfig cfg;
  if (name == "one-target") {
    cfg.clusters = {cluster(2, 0, ClusterRole::Targeted, 5),
                    cluster(-2, 0, ClusterRole::Untargeted, 0)};
  } else if (name == "two-target") {
    cfg.clusters = {cluster(2, 0, ClusterRole::Targeted, 5),
                    cluster(2, 3, ClusterRole::Targeted, 5),
                    cluster(-2, 0, ClusterRole::Untargeted, 0)};
  } else {
    throw Error(ErrorCode::InvalidConfig, "unknown preset '" + std::string(name) + "'");
  }
  return cfg;
}

std::vector<std::string> preset_names() { return {"one-target", "two-target"}; }

Subset sample_subset_uniform_chi(std::size_t n_targeted, std::size_t n_untargeted,
                                 std::size_t budget, CounterRng& rng) {
  if (n_targeted < budget || n_untargeted < budget) {
    throw Error(ErrorCode::InsufficientPartition,
                "uniform-chi sampling needs |T| >= B and |U| >= B");
  }
  const auto chi = static_cast<std::size_t>(rng.next_below(budget + 1));

  // Partial Fisher-Yates over [offset, offset+n).
  auto pick = [&](std::size_t offset, std::size_t n, std::size_t k, std::vector<Index>& out) {
    std::vector<Index> pool(n);
    std::iota(pool.begin(), pool.end(), static_cast<Index>(offset));
    for (std::size_t i = 0; i < k; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.next_below(n - i));
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
  };

  Subset a;
  a.members.reserve(budget);
  pick(0, n_targeted, chi, a.members);
  pick(n_targeted, n_untargeted, budget - chi, a.members);
  std::sort(a.members.begin(), a.members.end());
  return a;
}

Subset sample_subset_uniform_chi(const LabeledDataset& d, std::size_t budget, CounterRng& rng) {
  return sample_subset_uniform_chi(d.targeted.size(), d.untargeted.size(), budget, rng);
}

}  // namespace smib
