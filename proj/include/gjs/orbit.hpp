#pragma once

// Plot data for cobweb diagrams: curve samples, the alternating
// vertical/horizontal iteration trace, fixed points and region landmarks.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gjs/charfun.hpp"

namespace gjs {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Segment {
  Point from;
  Point to;
  bool vertical = true;
};

struct GuideLine {
  bool vertical = true;
  double position = 0.0;
  std::string label;
};

struct PlotWindow {
  double lo = 0.0;
  double hi = 1.0;
};

struct OrbitReport {
  std::string series;
  CharFn fn{{0.0, 1.0}, Orientation::OscillatorLike};
  double start = 0.0;
  PlotWindow window;
  std::vector<Point> fn_samples;
  std::vector<Point> diagonal_samples;
  std::vector<Segment> cobweb_segments;
  std::vector<double> iterates;  // full orbit, independent of the window
  bool diverged = false;         // orbit hit the divergence bound
  bool truncated = false;        // segments stop before the last iterate
  std::vector<FixedPointInfo> fixed_points;
  std::optional<double> boundary;
  std::vector<GuideLine> guide_lines;
  std::optional<RegionLabel> region_label;
};

struct CobwebOptions {
  std::size_t samples = 512;
  double divergence_bound = kDefaultDivergenceBound;
};

/// Traces x -> f(x) -> diagonal from (x0, x0). The orbit runs for `steps`
/// iterations or until the divergence bound; segments are emitted only
/// while the iterates stay inside the window.
OrbitReport cobweb(const CharFn& fn, double x0, std::size_t steps, PlotWindow window,
                   const CobwebOptions& options = {});

enum class Figure { Fig1, Fig2, Fig3, Fig4 };

std::string_view to_string(Figure figure);
std::optional<Figure> parse_figure(std::string_view name);

/// Orbits with the published parameters of each figure.
std::vector<OrbitReport> figure_bundle(Figure figure, const CobwebOptions& options = {});

/// Window spanning the landmarks padded by 20 % of their span on each side
/// (by 1 when all landmarks coincide).
PlotWindow padded_window(std::span<const double> landmarks);
PlotWindow padded_window(std::initializer_list<double> landmarks);

}  // namespace gjs
