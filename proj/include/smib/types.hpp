#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "smib/error.hpp"

namespace smib {

using Index = std::uint32_t;

struct Point {
  std::vector<double> coords;
};

// Ground set V = T ∪ U, held as two disjoint sequences, plus the external
// query set Q.
struct LabeledDataset {
  std::vector<Point> targeted;
  std::vector<Point> untargeted;
  std::vector<Point> query;

  std::size_t ground_size() const { return targeted.size() + untargeted.size(); }
};

// Throws EmptyPartition / NonFiniteCoordinate.
void validate_dataset(const LabeledDataset& d);

enum class Partition { Targeted, Untargeted, Query };

// Dense symmetric similarity matrix over [T | U | Q]. Row g for g < |T|+|U|
// is ground element g; query k lives at row |T|+|U|+k.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  // Takes ownership of a row-major n*n buffer, n = n_targeted+n_untargeted+n_query.
  SimilarityMatrix(std::size_t n_targeted, std::size_t n_untargeted, std::size_t n_query,
                   std::vector<double> values);

  std::size_t size() const { return n_; }
  std::size_t n_targeted() const { return n_t_; }
  std::size_t n_untargeted() const { return n_u_; }
  std::size_t n_query() const { return n_q_; }
  std::size_t ground_size() const { return n_t_ + n_u_; }

  std::size_t row_index(Partition p, std::size_t local) const;
  std::size_t query_row(std::size_t k) const { return n_t_ + n_u_ + k; }
  bool is_targeted(Index ground) const { return ground < n_t_; }

  double at(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * n_, n_};
  }
  // Contiguous slices of row i restricted to one partition.
  std::span<const double> row_targeted(std::size_t i) const { return row(i).subspan(0, n_t_); }
  std::span<const double> row_untargeted(std::size_t i) const { return row(i).subspan(n_t_, n_u_); }
  std::span<const double> row_ground(std::size_t i) const { return row(i).subspan(0, n_t_ + n_u_); }
  std::span<const double> row_query(std::size_t i) const { return row(i).subspan(n_t_ + n_u_, n_q_); }

  std::span<const double> values() const { return values_; }

 private:
  std::size_t n_t_ = 0, n_u_ = 0, n_q_ = 0, n_ = 0;
  std::vector<double> values_;
};

// Members are ground-set indices into T ∪ U ([0, |T|) targeted, [|T|, |T|+|U|)
// untargeted). Order is preserved (greedy records selection order).
struct Subset {
  std::vector<Index> members;

  std::size_t size() const { return members.size(); }
  bool contains(Index g) const;
};

// Throws IndexOutOfRange / DuplicateMember.
void validate_subset(const Subset& a, std::size_t ground_size);

struct PartitionCounts {
  std::size_t chi = 0;
  std::size_t untargeted_count = 0;
};

PartitionCounts subset_partition_counts(const Subset& a, std::size_t n_targeted,
                                        std::size_t ground_size);
PartitionCounts subset_partition_counts(const Subset& a, const LabeledDataset& d);

enum class SmiFunction { FLVMI, FLQMI, GCMI, COM };
enum class Concave { Sqrt, Log1p };

struct SmiConfig {
  SmiFunction function = SmiFunction::FLVMI;
  double eta = 1.0;
  double lambda = 1.0;
  Concave psi = Concave::Sqrt;
};

// Throws InvalidSmiConfig unless eta > 0 and lambda > 0 (both finite).
void validate_smi_config(const SmiConfig& cfg);

std::string_view to_string(SmiFunction f);
std::string_view to_string(Concave c);
SmiFunction parse_smi_function(std::string_view name);
Concave parse_concave(std::string_view name);

double apply_concave(Concave c, double x);

}  // namespace smib
