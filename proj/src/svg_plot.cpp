#include "smib/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "smib/harness.hpp"

namespace smib {
namespace svg {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render(const ScatterPlot& plot) {
  double x_min = 0.0, x_max = 1.0;
  if (!plot.points.empty()) {
    x_min = x_max = plot.points.front().x;
    for (const auto& p : plot.points) {
      x_min = std::min(x_min, p.x);
      x_max = std::max(x_max, p.x);
    }
    const double pad = std::max(1e-9, 0.05 * (x_max - x_min));
    x_min -= pad;
    x_max += pad;
  }
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double y_span = plot.y_max > plot.y_min ? plot.y_max - plot.y_min : 1.0;
  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return kTop + (plot.y_max - y) / y_span * plot_h; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\""
     << " data-x-min=\"" << fmt(x_min) << "\" data-x-max=\"" << fmt(x_max) << "\" data-y-min=\""
     << fmt(plot.y_min) << "\" data-y-max=\"" << fmt(plot.y_max) << "\">\n";
  if (!plot.note.empty()) os << "<metadata>" << escape(plot.note) << "</metadata>\n";
  os << "<title>" << escape(plot.title) << "</title>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" fill=\"white\"/>\n";

  // Axes, clip rectangle and ticks.
  os << "<rect class=\"frame\" x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\""
     << fmt(plot_w) << "\" height=\"" << fmt(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 5; ++k) {
    const double xv = x_min + (x_max - x_min) * k / 5.0;
    const double yv = plot.y_min + y_span * k / 5.0;
    os << "<text x=\"" << fmt(px(xv)) << "\" y=\"" << fmt(kTop + plot_h + 18)
       << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt(xv).substr(0, 7) << "</text>\n";
    os << "<text x=\"" << fmt(kLeft - 6) << "\" y=\"" << fmt(py(yv) + 4)
       << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(yv).substr(0, 5) << "</text>\n";
  }
  os << "<text x=\"" << fmt(kLeft + plot_w / 2) << "\" y=\"" << fmt(kHeight - 15)
     << "\" font-size=\"13\" text-anchor=\"middle\">" << escape(plot.x_label) << "</text>\n";
  os << "<text x=\"15\" y=\"" << fmt(kTop + plot_h / 2)
     << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
     << fmt(kTop + plot_h / 2) << ")\">" << escape(plot.y_label) << "</text>\n";
  os << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"24\" font-size=\"15\" text-anchor=\"middle\">"
     << escape(plot.title) << "</text>\n";

  for (const auto& p : plot.points) {
    os << "<circle class=\"sample\" cx=\"" << fmt(px(p.x)) << "\" cy=\"" << fmt(py(p.y))
       << "\" r=\"2.5\" fill=\"#1f77b4\" fill-opacity=\"0.6\" data-ok=\"" << (p.ok ? 1 : 0)
       << "\" data-tag=\"" << p.tag << "\"/>\n";
  }
  for (const auto& c : plot.curves) {
    if (c.points.empty()) continue;
    os << "<polyline class=\"bound\" data-role=\"" << c.role << "\" data-tag=\"" << c.tag
       << "\" fill=\"none\" stroke=\"" << (c.role == "lower" ? "#d62728" : "#2ca02c")
       << "\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      if (i) os << ' ';
      os << fmt(px(c.points[i].first)) << ',' << fmt(py(c.points[i].second));
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace svg

namespace {

namespace fs = std::filesystem;

std::optional<double> median_of(std::vector<double> xs) {
  if (xs.empty()) return std::nullopt;
  const auto mid = xs.begin() + static_cast<std::ptrdiff_t>((xs.size() - 1) / 2);
  std::nth_element(xs.begin(), mid, xs.end());
  return *mid;
}

// Per-field median over samples where the field is defined.
SubsetBoundParams median_subset_params(const std::vector<SubsetBoundParams>& all) {
  auto field = [&](std::optional<double> SubsetBoundParams::*m) {
    std::vector<double> xs;
    for (const auto& sp : all) {
      if (sp.*m) xs.push_back(*(sp.*m));
    }
    return median_of(std::move(xs));
  };
  SubsetBoundParams out;
  out.alpha4 = field(&SubsetBoundParams::alpha4);
  out.beta4 = field(&SubsetBoundParams::beta4);
  out.gamma3 = field(&SubsetBoundParams::gamma3);
  out.delta3 = field(&SubsetBoundParams::delta3);
  out.gamma4 = field(&SubsetBoundParams::gamma4);
  out.delta4 = field(&SubsetBoundParams::delta4);
  std::vector<double> o;
  for (const auto& sp : all) o.push_back(sp.overshoot);
  out.overshoot = median_of(std::move(o)).value_or(0.0);
  return out;
}

// Sample abscissae plus an even grid, so every sample x is also a curve vertex.
std::vector<double> curve_grid(const FunctionRun& run) {
  std::vector<double> xs;
  for (const auto& r : run.records) xs.push_back(r.smi_value);
  if (!xs.empty()) {
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    const double a = *lo, b = *hi;
    for (int k = 0; k <= 100; ++k) xs.push_back(a + (b - a) * k / 100.0);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

template <typename BoundFn>
void add_curves(svg::ScatterPlot& plot, const std::vector<double>& grid, long tag, BoundFn bound) {
  svg::Curve lo{"lower", tag, {}}, hi{"upper", tag, {}};
  for (double x : grid) {
    const BoundInterval b = bound(x);
    if (!b.preconditions_met) continue;
    lo.points.emplace_back(x, b.clipped_lower);
    hi.points.emplace_back(x, b.clipped_upper);
  }
  plot.curves.push_back(std::move(lo));
  plot.curves.push_back(std::move(hi));
}

void write_file(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << body;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace

std::vector<fs::path> emit_plots(const ExperimentResult& result, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw Error(ErrorCode::IoError, "cannot create output directory " + dir.string());
  }
  const std::string note =
      "Bound curves use dataset-level parameters together with the per-sample median of each "
      "subset-dependent parameter (alpha4, beta4, gamma3..delta4, overshoot).";

  std::vector<fs::path> written;
  for (const auto& run : result.runs) {
    const auto& cfg = run.config;
    const auto median_sp = median_subset_params(run.subset_params);
    const auto grid = curve_grid(run);
    const std::string stem =
        std::string(to_string(cfg.function)) + "_eta" + format_double(cfg.eta);
    const std::size_t budget = result.sizes.budget;

    svg::ScatterPlot rel;
    rel.title = std::string(to_string(cfg.function)) + " (eta=" + format_double(cfg.eta) +
                ") relevance, " + result.dataset_name;
    rel.x_label = "I_F(A;Q)";
    rel.y_label = "chi = |A n T|";
    rel.y_min = 0.0;
    rel.y_max = static_cast<double>(budget);
    rel.note = note;
    for (std::size_t i = 0; i < run.records.size(); ++i) {
      const auto& r = run.records[i];
      rel.points.push_back({r.smi_value, static_cast<double>(r.chi),
                            run.relevance[i].preconditions_met, static_cast<long>(r.chi)});
    }
    // χ only enters the FLVMI/FLQMI bounds through the χ ≥ 1 precondition.
    add_curves(rel, grid, -1, [&](double ifa) {
      return relevance_bounds(ifa, 1, result.params, median_sp, cfg, result.sizes);
    });

    svg::ScatterPlot cov;
    const bool tma = cfg.function == SmiFunction::FLVMI;
    cov.title = std::string(to_string(cfg.function)) + " (eta=" + format_double(cfg.eta) +
                ") coverage, " + result.dataset_name;
    cov.x_label = "I_F(A;Q)";
    cov.y_label = tma ? "delta_avg over T\\A" : "delta_avg over Q";
    cov.y_min = 0.0;
    cov.y_max = 1.0;
    cov.note = note + " One curve pair per chi value.";
    for (std::size_t i = 0; i < run.records.size(); ++i) {
      const auto& r = run.records[i];
      const auto& b = run.coverage[i];
      cov.points.push_back({r.smi_value, run.coverage_metric(i),
                            b.preconditions_met && !b.heuristic, static_cast<long>(r.chi)});
    }
    // COM coverage has only an implicit envelope; no curves are drawn for it.
    if (cfg.function != SmiFunction::COM) {
      for (std::size_t chi = 0; chi <= budget; ++chi) {
        add_curves(cov, grid, static_cast<long>(chi), [&](double ifa) {
          return coverage_bounds(ifa, chi, result.params, median_sp, cfg, result.sizes);
        });
      }
    }

    const fs::path rel_path = dir / (stem + "_relevance.svg");
    const fs::path cov_path = dir / (stem + "_coverage.svg");
    write_file(rel_path, svg::render(rel));
    write_file(cov_path, svg::render(cov));
    written.push_back(rel_path);
    written.push_back(cov_path);
  }
  return written;
}

}  // namespace smib
