#include "smib/types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <unordered_set>

namespace smib {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyPartition: return "EmptyPartition";
    case ErrorCode::NonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidKernel: return "InvalidKernel";
    case ErrorCode::InvalidSmiConfig: return "InvalidSmiConfig";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::DuplicateMember: return "DuplicateMember";
    case ErrorCode::AlreadyMember: return "AlreadyMember";
    case ErrorCode::EmptyTargetSet: return "EmptyTargetSet";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InsufficientPartition: return "InsufficientPartition";
    case ErrorCode::BudgetTooLarge: return "BudgetTooLarge";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

void check_points(const std::vector<Point>& pts, std::string_view name) {
  if (pts.empty()) {
    throw Error(ErrorCode::EmptyPartition, std::string(name) + " partition is empty");
  }
  for (const auto& p : pts) {
    if (p.coords.empty()) {
      throw Error(ErrorCode::DimensionMismatch, std::string(name) + " contains a zero-dimensional point");
    }
    for (double c : p.coords) {
      if (!std::isfinite(c)) {
        throw Error(ErrorCode::NonFiniteCoordinate,
                    std::string(name) + " contains a non-finite coordinate");
      }
    }
  }
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

}  // namespace

void validate_dataset(const LabeledDataset& d) {
  check_points(d.targeted, "targeted");
  check_points(d.untargeted, "untargeted");
  check_points(d.query, "query");
}

SimilarityMatrix::SimilarityMatrix(std::size_t n_targeted, std::size_t n_untargeted,
                                   std::size_t n_query, std::vector<double> values)
    : n_t_(n_targeted),
      n_u_(n_untargeted),
      n_q_(n_query),
      n_(n_targeted + n_untargeted + n_query),
      values_(std::move(values)) {
  if (values_.size() != n_ * n_) {
    throw Error(ErrorCode::DimensionMismatch, "similarity buffer does not match partition sizes");
  }
}

std::size_t SimilarityMatrix::row_index(Partition p, std::size_t local) const {
  switch (p) {
    case Partition::Targeted:
      if (local < n_t_) return local;
      break;
    case Partition::Untargeted:
      if (local < n_u_) return n_t_ + local;
      break;
    case Partition::Query:
      if (local < n_q_) return n_t_ + n_u_ + local;
      break;
  }
  throw Error(ErrorCode::IndexOutOfRange, "local index outside its partition");
}

bool Subset::contains(Index g) const {
  return std::find(members.begin(), members.end(), g) != members.end();
}

void validate_subset(const Subset& a, std::size_t ground_size) {
  std::unordered_set<Index> seen;
  for (Index g : a.members) {
    if (g >= ground_size) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "subset member " + std::to_string(g) + " outside ground set");
    }
    if (!seen.insert(g).second) {
      throw Error(ErrorCode::DuplicateMember, "subset member " + std::to_string(g) + " repeated");
    }
  }
}

PartitionCounts subset_partition_counts(const Subset& a, std::size_t n_targeted,
                                        std::size_t ground_size) {
  PartitionCounts out;
  for (Index g : a.members) {
    if (g >= ground_size) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "subset member " + std::to_string(g) + " outside ground set");
    }
    if (g < n_targeted) {
      ++out.chi;
    } else {
      ++out.untargeted_count;
    }
  }
  return out;
}

PartitionCounts subset_partition_counts(const Subset& a, const LabeledDataset& d) {
  return subset_partition_counts(a, d.targeted.size(), d.ground_size());
}

void validate_smi_config(const SmiConfig& cfg) {
  if (!(std::isfinite(cfg.eta) && cfg.eta > 0.0)) {
    throw Error(ErrorCode::InvalidSmiConfig, "eta must be a positive finite number");
  }
  if (!(std::isfinite(cfg.lambda) && cfg.lambda > 0.0)) {
    throw Error(ErrorCode::InvalidSmiConfig, "lambda must be a positive finite number");
  }
}

std::string_view to_string(SmiFunction f) {
  switch (f) {
    case SmiFunction::FLVMI: return "FLVMI";
    case SmiFunction::FLQMI: return "FLQMI";
    case SmiFunction::GCMI: return "GCMI";
    case SmiFunction::COM: return "COM";
  }
  return "?";
}

std::string_view to_string(Concave c) {
  switch (c) {
    case Concave::Sqrt: return "sqrt";
    case Concave::Log1p: return "log1p";
  }
  return "?";
}

SmiFunction parse_smi_function(std::string_view name) {
  const auto u = upper(name);
  if (u == "FLVMI") return SmiFunction::FLVMI;
  if (u == "FLQMI") return SmiFunction::FLQMI;
  if (u == "GCMI") return SmiFunction::GCMI;
  if (u == "COM") return SmiFunction::COM;
  throw Error(ErrorCode::InvalidSmiConfig, "unknown SMI function '" + std::string(name) + "'");
}

Concave parse_concave(std::string_view name) {
  const auto u = upper(name);
  if (u == "SQRT") return Concave::Sqrt;
  if (u == "LOG1P") return Concave::Log1p;
  throw Error(ErrorCode::InvalidSmiConfig, "unknown concave function '" + std::string(name) + "'");
}

double apply_concave(Concave c, double x) {
  switch (c) {
    case Concave::Sqrt: return std::sqrt(x);
    case Concave::Log1p: return std::log1p(x);
  }
  return x;
}

}  // namespace smib
