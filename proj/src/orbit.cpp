#include "gjs/orbit.hpp"

#include <algorithm>

#include "gjs/errors.hpp"
#include "gjs/gsl2.hpp"

namespace gjs {

namespace {

constexpr std::size_t kFigureSteps = 200;

bool inside(const PlotWindow& w, double x) { return x >= w.lo && x <= w.hi; }

void add_landmarks(OrbitReport& r) {
  for (const FixedPointInfo& fp : r.fixed_points) {
    r.guide_lines.push_back({true, fp.location, "fixed point"});
  }
  if (r.boundary) r.guide_lines.push_back({true, *r.boundary, "invertibility boundary"});
}

OrbitReport named(OrbitReport r, std::string series) {
  r.series = std::move(series);
  return r;
}

}  // namespace

std::string_view to_string(Figure figure) {
  switch (figure) {
    case Figure::Fig1: return "fig1";
    case Figure::Fig2: return "fig2";
    case Figure::Fig3: return "fig3";
    case Figure::Fig4: return "fig4";
  }
  return "unknown";
}

std::optional<Figure> parse_figure(std::string_view name) {
  if (name == "fig1") return Figure::Fig1;
  if (name == "fig2") return Figure::Fig2;
  if (name == "fig3") return Figure::Fig3;
  if (name == "fig4") return Figure::Fig4;
  return std::nullopt;
}

PlotWindow padded_window(std::span<const double> landmarks) {
  if (landmarks.empty()) throw Error(ErrorCode::InvalidArgument, "window needs at least one landmark");
  const auto [lo, hi] = std::minmax_element(landmarks.begin(), landmarks.end());
  const double pad = *hi > *lo ? 0.2 * (*hi - *lo) : 1.0;
  return {*lo - pad, *hi + pad};
}

PlotWindow padded_window(std::initializer_list<double> landmarks) {
  return padded_window(std::span<const double>(landmarks.begin(), landmarks.size()));
}

OrbitReport cobweb(const CharFn& fn, double x0, std::size_t steps, PlotWindow window, const CobwebOptions& options) {
  if (steps == 0) throw Error(ErrorCode::InvalidArgument, "cobweb needs at least one step");
  if (!(window.lo < window.hi)) throw Error(ErrorCode::InvalidArgument, "plot window must be a finite interval");
  if (options.samples < 2) throw Error(ErrorCode::InvalidArgument, "need at least two curve samples");

  OrbitReport r;
  r.fn = fn;
  r.start = x0;
  r.window = window;

  const double span = window.hi - window.lo;
  r.fn_samples.reserve(options.samples);
  r.diagonal_samples.reserve(options.samples);
  for (std::size_t i = 0; i < options.samples; ++i) {
    const double x = i + 1 == options.samples
                         ? window.hi
                         : window.lo + span * static_cast<double>(i) / static_cast<double>(options.samples - 1);
    r.fn_samples.push_back({x, evaluate(fn, x)});
    r.diagonal_samples.push_back({x, x});
  }

  Trajectory orbit = iterate_bounded(fn, x0, steps, options.divergence_bound);
  r.iterates = std::move(orbit.points);
  r.diverged = orbit.diverged;

  for (std::size_t k = 0; k + 1 < r.iterates.size(); ++k) {
    const double x = r.iterates[k];
    const double y = r.iterates[k + 1];
    if (!inside(window, x) || !inside(window, y)) break;
    r.cobweb_segments.push_back({{x, x}, {x, y}, true});
    r.cobweb_segments.push_back({{x, y}, {y, y}, false});
  }
  r.truncated = r.diverged || r.cobweb_segments.size() / 2 + 1 < r.iterates.size();

  try {
    r.fixed_points = fixed_points(fn);
  } catch (const Error&) {
    r.fixed_points.clear();
  }
  if (fn.is_quadratic()) {
    r.boundary = invertibility_boundary(fn);
    if (has_double_fixed_point(fn)) r.region_label = classify_region(fn, x0);
  }
  return r;
}

std::vector<OrbitReport> figure_bundle(Figure figure, const CobwebOptions& options) {
  const CharFn oscillator_fig1({1.225, -2.5, 2.5}, Orientation::OscillatorLike);
  const CharFn weight({-1.0, 3.0, -1.0}, Orientation::WeightLike);
  const CharFn oscillator_fig4({1.0, 3.0, 1.0}, Orientation::OscillatorLike);

  std::vector<OrbitReport> out;
  switch (figure) {
    case Figure::Fig1: {
      const PlotWindow w = padded_window({0.5, 0.7, 0.56, 0.85});
      out.push_back(named(cobweb(oscillator_fig1, 0.56, kFigureSteps, w, options), "alpha0_a"));
      out.push_back(named(cobweb(oscillator_fig1, 0.85, kFigureSteps, w, options), "alpha0_b"));
      break;
    }
    case Figure::Fig2: {
      const PlotWindow w = padded_window({-0.05, 1.0, 1.5});
      out.push_back(named(cobweb(weight, -0.05, kFigureSteps, w, options), "alphaj_b"));
      break;
    }
    case Figure::Fig3: {
      const CutSolutions cut = cut_condition_solve(weight, 2);
      if (cut.included.empty()) throw Error(ErrorCode::InvalidArgument, "no admissible two-state cut root");
      const double root = cut.included.front();
      const double cut_line = -root - 1.0;
      const PlotWindow w = padded_window({cut_line, root, 1.0, 1.5});
      OrbitReport r = named(cobweb(weight, root, 2, w, options), "alphaj_cut");
      r.guide_lines.push_back({true, cut_line, "cut condition alpha_{j-2} = -alpha_j - 1"});
      out.push_back(std::move(r));
      break;
    }
    case Figure::Fig4: {
      const PlotWindow w = padded_window({-1.5, -1.0, -0.15, 0.15, 1.0, 1.5});
      out.push_back(named(cobweb(oscillator_fig4, -0.15, kFigureSteps, w, options), "f_alpha0"));
      out.push_back(named(cobweb(weight, 0.15, kFigureSteps, w, options), "g_alphaj"));
      break;
    }
  }
  for (OrbitReport& r : out) add_landmarks(r);
  return out;
}

}  // namespace gjs
