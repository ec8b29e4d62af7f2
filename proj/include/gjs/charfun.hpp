#pragma once

// Polynomial characteristic functions: evaluation, iteration, fixed points,
// invertibility regions and the real-root machinery the other modules use.

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace gjs {

inline constexpr double kDefaultDivergenceBound = 1e12;

/// Which side of the vertex a quadratic is inverted on. OscillatorLike is
/// the GHA convention (leading coefficient > 0, argument above the vertex);
/// WeightLike the G-sl(2) one (leading coefficient < 0, argument below).
enum class Orientation { OscillatorLike, WeightLike };

/// Real polynomial sum_i a_i x^i of degree >= 1. Trailing zero coefficients
/// are dropped on construction, so two spellings of one polynomial compare
/// equal.
class CharFn {
 public:
  CharFn(std::vector<double> coefficients, Orientation orientation);

  std::span<const double> coefficients() const noexcept { return coefficients_; }
  std::size_t degree() const noexcept { return coefficients_.size() - 1; }
  Orientation orientation() const noexcept { return orientation_; }
  bool is_quadratic() const noexcept { return degree() == 2; }

  double coefficient(std::size_t i) const noexcept {
    return i < coefficients_.size() ? coefficients_[i] : 0.0;
  }

  double operator()(double x) const;

  friend bool operator==(const CharFn&, const CharFn&) = default;

 private:
  std::vector<double> coefficients_;
  Orientation orientation_;
};

/// Horner evaluation.
double evaluate(const CharFn& fn, double x);
double derivative(const CharFn& fn, double x);

/// x0, f(x0), ..., f^(steps)(x0). Throws OverflowDiverged as soon as an
/// iterate leaves [-bound, bound] or stops being finite.
std::vector<double> iterate(const CharFn& fn, double x0, std::size_t steps,
                            double divergence_bound = kDefaultDivergenceBound);

struct Trajectory {
  std::vector<double> points;  // starts with x0
  bool diverged = false;       // stopped early at the bound
};

/// Non-throwing variant of iterate(): stops at the first iterate beyond the
/// bound and keeps it as the last point.
Trajectory iterate_bounded(const CharFn& fn, double x0, std::size_t steps,
                           double divergence_bound = kDefaultDivergenceBound);

enum class Stability { Attracting, Repelling, NeutralTangent };
enum class OneSidedBehavior { ConvergesFromBelow, ConvergesFromAbove, DivergesBothSides, Attracting };

struct FixedPointInfo {
  double location = 0.0;
  double multiplier = 0.0;  // fn'(location)
  Stability stability = Stability::Attracting;
  std::optional<OneSidedBehavior> one_sided;  // set for NeutralTangent only
  bool in_invertible_region = true;
};

/// Real solutions of fn(x) = x, ascending. Closed form when fn(x) - x has
/// degree <= 2, bracketing + bisection otherwise. Throws NoRealFixedPoint.
std::vector<FixedPointInfo> fixed_points(const CharFn& fn);

/// (a1 - 1)^2 - 4 a2 a0 of fn(x) - x = 0. Throws NotQuadratic.
double discriminant(const CharFn& fn);

/// True when |discriminant| <= 1e-9 * max(1, (a1-1)^2, |4 a2 a0|).
bool has_double_fixed_point(const CharFn& fn);

/// Vertex -a1 / (2 a2). Throws NotQuadratic.
double invertibility_boundary(const CharFn& fn);

/// Whether x lies where fn is invertible in the direction its orientation
/// prescribes. Quadratics use the vertex half-line; other degrees accept
/// x iff fn'(x) > 0 (the increasing branch, which is what both quadratic
/// rules reduce to).
bool in_invertible_region(const CharFn& fn, double x);

enum class RegionLabel { OnFixedPoint, ConvergentInterval, DivergentInterval, OutsideInvertibleRegion };

/// Region of a starting point for a quadratic with a double fixed point.
/// Throws NotQuadratic or UnsupportedDiscriminant.
RegionLabel classify_region(const CharFn& fn, double x0);

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
};

/// All real roots of the polynomial with the given coefficients inside the
/// closed interval, ascending, deduplicated within 10 tol. Infinite ends are
/// clipped to the Cauchy root bound. Even-multiplicity roots are found at
/// critical points where |p| <= tol.
std::vector<double> find_roots(std::span<const double> poly_coefficients, Interval interval,
                               double tol);

struct ScanOptions {
  double step = 1e-4;
  double tol = 1e-12;
};

/// Roots of an arbitrary continuous function on [lo, hi] found by a
/// sign-change scan on a uniform grid plus bisection, with tangent roots
/// picked up at local minima of |h|. Used for composed maps g^(d) which are
/// never expanded symbolically.
std::vector<double> scan_roots(const std::function<double(double)>& h, double lo, double hi,
                               const ScanOptions& options = {});

/// The reflected partner of fn = sum_{i>=1} a_i x^i + 1: coefficients
/// negated for even i, constant -1, opposite orientation. It satisfies
/// g(-x) = -f(x). Throws PairingMismatch unless fn's constant term is 1.
CharFn reflection_pair(const CharFn& fn);

bool is_reflection_pair(const CharFn& fn, const CharFn& gn);

}  // namespace gjs
