#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "smib/rng.hpp"
#include "smib/types.hpp"

namespace smib {

enum class ClusterRole { Targeted, Untargeted };

struct ClusterSpec {
  Point mean;
  std::vector<double> covariance;  // diagonal; entries ≥ 0
  std::size_t count = 1;
  ClusterRole role = ClusterRole::Targeted;
  // Fresh draws from this cluster placed in Q. Targeted clusters only.
  std::size_t query_count = 0;
};

struct ScenarioConfig {
  std::vector<ClusterSpec> clusters;
  std::size_t budget = 5;
  std::uint64_t seed = 7;
  std::size_t samples = 1000;
};

// Throws InvalidConfig.
void validate_scenario(const ScenarioConfig& cfg);

// Deterministic in cfg.seed. Cluster points are drawn cluster by cluster in
// config order, then queries cluster by cluster.
LabeledDataset generate_dataset(const ScenarioConfig& cfg);

// "one-target": T at (2,0), U at (-2,0), 40 points each, covariance 0.25·I,
// 5 queries from T. "two-target": adds a second T cluster at (2,3) with its
// own 5 queries. Throws InvalidConfig for other names.
ScenarioConfig preset_scenario(std::string_view name);
std::vector<std::string> preset_names();

// χ uniform on {0..B}, then χ distinct members from T and B−χ from U. The
// returned members are sorted. Throws InsufficientPartition unless
// |T| ≥ B and |U| ≥ B.
Subset sample_subset_uniform_chi(std::size_t n_targeted, std::size_t n_untargeted,
                                 std::size_t budget, CounterRng& rng);
Subset sample_subset_uniform_chi(const LabeledDataset& d, std::size_t budget, CounterRng& rng);

// Stream ids carved out of the scenario seed.
inline constexpr std::uint64_t kDatasetStream = 1;
inline constexpr std::uint64_t kSubsetStream = 2;

}  // namespace smib
