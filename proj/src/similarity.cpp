#include "smib/similarity.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "smib/kernels.hpp"

namespace smib {
namespace {

void check_dims(const Point& x, const Point& y) {
  if (x.coords.size() != y.coords.size()) {
    throw Error(ErrorCode::DimensionMismatch, "points have different dimensions");
  }
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

double resolved_bandwidth(const KernelConfig& k) {
  if (!k.bandwidth) {
    throw Error(ErrorCode::InvalidKernel, "RBF kernel evaluated without a bandwidth");
  }
  const double bw = *k.bandwidth;
  if (!(std::isfinite(bw) && bw > 0.0)) {
    throw Error(ErrorCode::InvalidKernel, "RBF bandwidth must be positive and finite");
  }
  return bw;
}

double eval_kernel(const double* x, const double* y, std::size_t dim, KernelKind kind, double bw,
                   double norm_x, double norm_y, const kernels::KernelTable& kt) {
  if (kind == KernelKind::Rbf) {
    return clamp01(std::exp(-kt.squared_distance(x, y, dim) / bw));
  }
  double cosine = 0.0;
  if (norm_x > 0.0 && norm_y > 0.0) {
    cosine = std::clamp(kt.dot(x, y, dim) / (norm_x * norm_y), -1.0, 1.0);
  }
  return clamp01(0.5 * (1.0 + cosine));
}

}  // namespace

std::string_view to_string(KernelKind k) {
  return k == KernelKind::Rbf ? "rbf" : "cosine_shifted";
}

KernelKind parse_kernel_kind(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "rbf") return KernelKind::Rbf;
  if (s == "cosine_shifted" || s == "cosine") return KernelKind::CosineShifted;
  throw Error(ErrorCode::InvalidKernel, "unknown kernel kind '" + std::string(name) + "'");
}

double kernel_value(const Point& x, const Point& y, const KernelConfig& k) {
  check_dims(x, y);
  const auto& kt = kernels::active();
  const std::size_t dim = x.coords.size();
  if (k.kind == KernelKind::Rbf) {
    return eval_kernel(x.coords.data(), y.coords.data(), dim, k.kind, resolved_bandwidth(k), 0, 0,
                       kt);
  }
  const double nx = std::sqrt(kt.dot(x.coords.data(), x.coords.data(), dim));
  const double ny = std::sqrt(kt.dot(y.coords.data(), y.coords.data(), dim));
  return eval_kernel(x.coords.data(), y.coords.data(), dim, k.kind, 1.0, nx, ny, kt);
}

double median_squared_distance(const LabeledDataset& d) {
  std::vector<const Point*> ground;
  ground.reserve(d.ground_size());
  for (const auto& p : d.targeted) ground.push_back(&p);
  for (const auto& p : d.untargeted) ground.push_back(&p);

  const auto& kt = kernels::scalar_table();
  std::vector<double> dists;
  dists.reserve(ground.size() * (ground.size() - 1) / 2);
  for (std::size_t i = 0; i < ground.size(); ++i) {
    for (std::size_t j = i + 1; j < ground.size(); ++j) {
      check_dims(*ground[i], *ground[j]);
      dists.push_back(kt.squared_distance(ground[i]->coords.data(), ground[j]->coords.data(),
                                          ground[i]->coords.size()));
    }
  }
  if (dists.empty()) return 1.0;
  // Lower median for even counts so the result is always an observed distance.
  const auto mid = dists.begin() + static_cast<std::ptrdiff_t>((dists.size() - 1) / 2);
  std::nth_element(dists.begin(), mid, dists.end());
  return *mid > 0.0 ? *mid : 1.0;
}

SimilarityMatrix build_similarity_matrix(const LabeledDataset& d, const KernelConfig& k) {
  validate_dataset(d);
  KernelConfig resolved = k;
  if (resolved.kind == KernelKind::Rbf && !resolved.bandwidth) {
    resolved.bandwidth = median_squared_distance(d);
  }
  const double bw = resolved.kind == KernelKind::Rbf ? resolved_bandwidth(resolved) : 1.0;

  std::vector<const Point*> pts;
  pts.reserve(d.targeted.size() + d.untargeted.size() + d.query.size());
  for (const auto& p : d.targeted) pts.push_back(&p);
  for (const auto& p : d.untargeted) pts.push_back(&p);
  for (const auto& p : d.query) pts.push_back(&p);

  const std::size_t dim = pts.front()->coords.size();
  for (const auto* p : pts) {
    if (p->coords.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "dataset points have different dimensions");
    }
  }

  const auto& kt = kernels::active();
  const std::size_t n = pts.size();
  std::vector<double> norms(n, 0.0);
  if (resolved.kind == KernelKind::CosineShifted) {
    for (std::size_t i = 0; i < n; ++i) {
      norms[i] = std::sqrt(kt.dot(pts[i]->coords.data(), pts[i]->coords.data(), dim));
    }
  }

  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i * n + i] = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = eval_kernel(pts[i]->coords.data(), pts[j]->coords.data(), dim,
                                   resolved.kind, bw, norms[i], norms[j], kt);
      values[i * n + j] = v;
      values[j * n + i] = v;
    }
  }
  return SimilarityMatrix(d.targeted.size(), d.untargeted.size(), d.query.size(),
                          std::move(values));
}

}  // namespace smib
