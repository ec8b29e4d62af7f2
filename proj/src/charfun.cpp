#include "gjs/charfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gjs/errors.hpp"

namespace gjs {

namespace {

constexpr double kNeutralTolerance = 1e-9;
constexpr double kOneSidedProbe = 1e-6;
constexpr double kOnFixedPoint = 1e-12;
constexpr double kFixedPointTol = 1e-12;

double horner(std::span<const double> c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<double> trimmed(std::span<const double> c) {
  std::vector<double> out(c.begin(), c.end());
  while (!out.empty() && out.back() == 0.0) out.pop_back();
  return out;
}

std::vector<double> poly_derivative(std::span<const double> c) {
  std::vector<double> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(static_cast<double>(i) * c[i]);
  return d;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Bisection on a sign-changing bracket down to adjacent doubles.
template <typename Fn>
double bisect(const Fn& h, double lo, double hi, double h_lo) {
  const int s_lo = sign_of(h_lo);
  for (;;) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double v = h(mid);
    if (v == 0.0) return mid;
    if (sign_of(v) == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(h(lo)) <= std::abs(h(hi)) ? lo : hi;
}

// Golden-section minimization of |h| on [a, b].
template <typename Fn>
double minimize_abs(const Fn& h, double a, double b) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = std::abs(h(c));
  double fd = std::abs(h(d));
  for (int it = 0; it < 200 && (b - a) > 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(a)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = std::abs(h(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = std::abs(h(d));
    }
  }
  return fc < fd ? c : d;
}

void sort_and_dedup(std::vector<double>& roots, double tol) {
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double r : roots) {
    if (out.empty() || std::abs(r - out.back()) > 10.0 * tol) out.push_back(r);
  }
  roots = std::move(out);
}

std::vector<double> roots_on(std::span<const double> c, double lo, double hi, double tol) {
  const std::vector<double> p = trimmed(c);
  if (p.size() <= 1 || lo > hi) return {};
  if (p.size() == 2) {
    const double r = -p[0] / p[1];
    if (r >= lo && r <= hi) return {r};
    return {};
  }
  const auto value = [&](double x) { return horner(p, x); };

  std::vector<double> breaks{lo};
  for (double crit : roots_on(poly_derivative(p), lo, hi, tol)) {
    if (crit > breaks.back() && crit < hi) breaks.push_back(crit);
  }
  breaks.push_back(hi);

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = breaks[i + 1];
    const double fa = value(a);
    const double fb = value(b);
    if (fa == 0.0) roots.push_back(a);
    if (sign_of(fa) * sign_of(fb) < 0) roots.push_back(bisect(value, a, b, fa));
  }
  if (value(hi) == 0.0) roots.push_back(hi);
  // Interior breakpoints are critical points; a tangent root touches zero there.
  for (std::size_t i = 1; i + 1 < breaks.size(); ++i) {
    if (std::abs(value(breaks[i])) <= tol) roots.push_back(breaks[i]);
  }
  sort_and_dedup(roots, tol);
  return roots;
}

FixedPointInfo describe_fixed_point(const CharFn& fn, double location) {
  FixedPointInfo info;
  info.location = location;
  info.multiplier = derivative(fn, location);
  const double m = std::abs(info.multiplier);
  if (std::abs(m - 1.0) <= kNeutralTolerance) {
    info.stability = Stability::NeutralTangent;
    const double below = evaluate(fn, location - kOneSidedProbe) - (location - kOneSidedProbe);
    const double above = evaluate(fn, location + kOneSidedProbe) - (location + kOneSidedProbe);
    if (below > 0.0 && above > 0.0) {
      info.one_sided = OneSidedBehavior::ConvergesFromBelow;
    } else if (below < 0.0 && above < 0.0) {
      info.one_sided = OneSidedBehavior::ConvergesFromAbove;
    } else if (below < 0.0 && above > 0.0) {
      info.one_sided = OneSidedBehavior::DivergesBothSides;
    } else {
      info.one_sided = OneSidedBehavior::Attracting;
    }
  } else {
    info.stability = m < 1.0 ? Stability::Attracting : Stability::Repelling;
  }
  info.in_invertible_region = in_invertible_region(fn, location);
  return info;
}

}  // namespace

CharFn::CharFn(std::vector<double> coefficients, Orientation orientation)
    : coefficients_(std::move(coefficients)), orientation_(orientation) {
  for (double c : coefficients_) {
    if (!std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "coefficients must be finite");
  }
  while (!coefficients_.empty() && coefficients_.back() == 0.0) coefficients_.pop_back();
  if (coefficients_.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "characteristic function must have degree >= 1");
  }
  if (is_quadratic()) {
    const double lead = coefficients_[2];
    if (orientation_ == Orientation::OscillatorLike && lead <= 0.0) {
      throw Error(ErrorCode::InvalidArgument, "oscillator-like quadratic needs a positive leading coefficient");
    }
    if (orientation_ == Orientation::WeightLike && lead >= 0.0) {
      throw Error(ErrorCode::InvalidArgument, "weight-like quadratic needs a negative leading coefficient");
    }
  }
}

double CharFn::operator()(double x) const { return horner(coefficients_, x); }

double evaluate(const CharFn& fn, double x) { return horner(fn.coefficients(), x); }

double derivative(const CharFn& fn, double x) {
  return horner(poly_derivative(fn.coefficients()), x);
}

Trajectory iterate_bounded(const CharFn& fn, double x0, std::size_t steps, double divergence_bound) {
  Trajectory t;
  t.points.reserve(steps + 1);
  t.points.push_back(x0);
  double x = x0;
  for (std::size_t k = 0; k < steps; ++k) {
    x = evaluate(fn, x);
    t.points.push_back(x);
    if (!std::isfinite(x) || std::abs(x) > divergence_bound) {
      t.diverged = true;
      break;
    }
  }
  return t;
}

std::vector<double> iterate(const CharFn& fn, double x0, std::size_t steps, double divergence_bound) {
  Trajectory t = iterate_bounded(fn, x0, steps, divergence_bound);
  if (t.diverged) {
    throw Error(ErrorCode::OverflowDiverged,
                "iterate " + std::to_string(t.points.size() - 1) + " exceeds the divergence bound",
                t.points.size() - 1);
  }
  return std::move(t.points);
}

double discriminant(const CharFn& fn) {
  if (!fn.is_quadratic()) throw Error(ErrorCode::NotQuadratic, "discriminant needs a quadratic");
  const double b = fn.coefficient(1) - 1.0;
  return b * b - 4.0 * fn.coefficient(2) * fn.coefficient(0);
}

bool has_double_fixed_point(const CharFn& fn) {
  const double b = fn.coefficient(1) - 1.0;
  const double scale = std::max({1.0, b * b, std::abs(4.0 * fn.coefficient(2) * fn.coefficient(0))});
  return std::abs(discriminant(fn)) <= 1e-9 * scale;
}

double invertibility_boundary(const CharFn& fn) {
  if (!fn.is_quadratic()) throw Error(ErrorCode::NotQuadratic, "invertibility boundary needs a quadratic");
  return -fn.coefficient(1) / (2.0 * fn.coefficient(2));
}

bool in_invertible_region(const CharFn& fn, double x) {
  if (fn.is_quadratic()) {
    const double boundary = invertibility_boundary(fn);
    return fn.orientation() == Orientation::OscillatorLike ? x > boundary : x < boundary;
  }
  return derivative(fn, x) > 0.0;
}

std::vector<FixedPointInfo> fixed_points(const CharFn& fn) {
  std::vector<double> p(fn.coefficients().begin(), fn.coefficients().end());
  p[1] -= 1.0;
  p = trimmed(p);

  std::vector<double> locations;
  if (p.empty()) {
    throw Error(ErrorCode::InvalidArgument, "identity map: every point is fixed");
  } else if (p.size() == 1) {
    // fn(x) - x is a nonzero constant.
  } else if (p.size() == 2) {
    locations.push_back(-p[0] / p[1]);
  } else if (p.size() == 3) {
    const double a = p[2], b = p[1], c = p[0];
    const double delta = b * b - 4.0 * a * c;
    if (has_double_fixed_point(fn)) {
      locations.push_back(-b / (2.0 * a));
    } else if (delta > 0.0) {
      const double q = -0.5 * (b + std::copysign(std::sqrt(delta), b));
      locations.push_back(q / a);
      if (q != 0.0) locations.push_back(c / q);
    }
  } else {
    locations = find_roots(p, Interval{}, kFixedPointTol);
  }
  if (locations.empty()) throw Error(ErrorCode::NoRealFixedPoint, "fn(x) - x has no real root");
  std::sort(locations.begin(), locations.end());

  std::vector<FixedPointInfo> out;
  out.reserve(locations.size());
  for (double x : locations) out.push_back(describe_fixed_point(fn, x));
  return out;
}

RegionLabel classify_region(const CharFn& fn, double x0) {
  if (!fn.is_quadratic()) throw Error(ErrorCode::NotQuadratic, "region classification needs a quadratic");
  if (!has_double_fixed_point(fn)) {
    throw Error(ErrorCode::UnsupportedDiscriminant, "region classification is defined for a double fixed point only");
  }
  const double boundary = invertibility_boundary(fn);
  const double star = -(fn.coefficient(1) - 1.0) / (2.0 * fn.coefficient(2));
  const bool oscillator = fn.orientation() == Orientation::OscillatorLike;
  if (oscillator ? x0 <= boundary : x0 >= boundary) return RegionLabel::OutsideInvertibleRegion;
  if (std::abs(x0 - star) <= kOnFixedPoint) return RegionLabel::OnFixedPoint;
  const bool between = oscillator ? x0 < star : x0 > star;
  return between ? RegionLabel::ConvergentInterval : RegionLabel::DivergentInterval;
}

std::vector<double> find_roots(std::span<const double> poly_coefficients, Interval interval, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const std::vector<double> p = trimmed(poly_coefficients);
  if (p.size() <= 1) return {};
  double bound = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) bound = std::max(bound, std::abs(p[i] / p.back()));
  bound += 1.0;
  const double lo = std::max(interval.lo, -bound);
  const double hi = std::min(interval.hi, bound);
  return roots_on(p, lo, hi, tol);
}

std::vector<double> scan_roots(const std::function<double(double)>& h, double lo, double hi,
                               const ScanOptions& options) {
  if (!(options.step > 0.0) || !(options.tol > 0.0) || !(hi >= lo)) {
    throw Error(ErrorCode::InvalidArgument, "scan needs lo <= hi and positive step and tolerance");
  }
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / options.step));
  const auto grid = [&](std::size_t i) { return i == n ? hi : lo + static_cast<double>(i) * options.step; };
  const auto finite = [](double v) { return std::isfinite(v); };

  // Streaming over the grid keeping a three-point window (prev, cur, next).
  std::vector<double> roots;
  double x_prev = 0.0, v_prev = std::numeric_limits<double>::quiet_NaN();
  double x_cur = grid(0), v_cur = h(x_cur);
  for (std::size_t i = 0; i <= n; ++i) {
    const bool has_next = i < n;
    const double x_next = has_next ? grid(i + 1) : 0.0;
    const double v_next = has_next ? h(x_next) : std::numeric_limits<double>::quiet_NaN();
    if (v_cur == 0.0) {
      roots.push_back(x_cur);
    } else {
      if (has_next && finite(v_cur) && finite(v_next) && sign_of(v_cur) * sign_of(v_next) < 0) {
        roots.push_back(bisect(h, x_cur, x_next, v_cur));
      }
      if (i > 0 && has_next && finite(v_prev) && finite(v_next) && sign_of(v_prev) == sign_of(v_cur) &&
          sign_of(v_cur) == sign_of(v_next) && std::abs(v_cur) <= std::abs(v_prev) &&
          std::abs(v_cur) <= std::abs(v_next)) {
        const double x = minimize_abs(h, x_prev, x_next);
        if (std::abs(h(x)) <= options.tol) roots.push_back(x);
      }
    }
    x_prev = x_cur;
    v_prev = v_cur;
    x_cur = x_next;
    v_cur = v_next;
  }
  sort_and_dedup(roots, options.tol);
  return roots;
}

CharFn reflection_pair(const CharFn& fn) {
  if (fn.coefficient(0) != 1.0) {
    throw Error(ErrorCode::PairingMismatch, "reflection pairing needs a constant term of exactly 1");
  }
  std::vector<double> g(fn.coefficients().begin(), fn.coefficients().end());
  g[0] = -1.0;
  for (std::size_t i = 2; i < g.size(); i += 2) g[i] = -g[i];
  const Orientation o = fn.orientation() == Orientation::OscillatorLike ? Orientation::WeightLike
                                                                         : Orientation::OscillatorLike;
  return CharFn(std::move(g), o);
}

bool is_reflection_pair(const CharFn& fn, const CharFn& gn) {
  if (fn.coefficient(0) != 1.0 || fn.degree() != gn.degree()) return false;
  const CharFn expected = reflection_pair(fn);
  return std::equal(expected.coefficients().begin(), expected.coefficients().end(),
                    gn.coefficients().begin(), gn.coefficients().end());
}

}  // namespace gjs
