#pragma once

#include <string>
#include <vector>

namespace smib::svg {

struct ScatterPoint {
  double x = 0, y = 0;
  bool ok = false;  // the sample satisfied the bound preconditions
  long tag = -1;    // e.g. χ; -1 when not meaningful
};

struct Curve {
  std::string role;  // "lower" or "upper"
  long tag = -1;     // curve applies to points with the same tag; -1 = all
  std::vector<std::pair<double, double>> points;
};

struct ScatterPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  double y_min = 0, y_max = 1;
  std::vector<ScatterPoint> points;
  std::vector<Curve> curves;
  std::string note;  // written into <metadata>
};

// Static SVG 1.1. Points are <circle class="sample"> and bound curves
// <polyline class="bound">, both with data-* attributes.
std::string render(const ScatterPlot& plot);

inline constexpr double kWidth = 640, kHeight = 480;
inline constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 60;

}  // namespace smib::svg
