#pragma once

// Seeded random representations shared by the unit and acceptance tests.
// Spectra are kept bounded so absolute tolerances stay meaningful.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gjs/charfun.hpp"
#include "gjs/errors.hpp"
#include "gjs/gha.hpp"
#include "gjs/gsl2.hpp"

namespace gjs::testing {

inline constexpr double kSpectrumBound = 50.0;

struct GhaCase {
  CharFn fn;
  double alpha0;
  std::size_t dim;
};

struct Gsl2Case {
  CharFn gn;
  double alpha_j;
  std::size_t dim;
};

struct CubicPairing {
  CharFn fn;
  CharFn gn;
  double alpha0;
};

inline bool bounded(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v) || std::abs(v) > kSpectrumBound) return false;
  }
  return true;
}

/// Linear or oscillator-like quadratic f with an increasing, bounded orbit.
inline GhaCase random_gha_case(std::mt19937_64& rng, std::size_t max_dim = 12) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> dims(2, max_dim);
  for (;;) {
    const std::size_t dim = dims(rng);
    std::vector<double> c;
    if (u(rng) < 0.3) {
      c = {0.2 + 2.0 * u(rng), 0.3 + 1.2 * u(rng)};
    } else {
      c = {0.5 * u(rng) - 0.1, 0.4 + 0.8 * u(rng), 0.01 + 0.2 * u(rng)};
    }
    const CharFn fn(c, Orientation::OscillatorLike);
    const double lo = fn.is_quadratic() ? invertibility_boundary(fn) : -2.0;
    const double alpha0 = lo + 0.05 + 2.0 * u(rng);
    try {
      const GhaRep rep = build_gha(fn, alpha0, dim);
      if (rep.eigenvalues()[1] - alpha0 < 1e-3 || !bounded(rep.eigenvalues())) continue;
      return {fn, alpha0, dim};
    } catch (const Error&) {
    }
  }
}

/// Weight-like quadratic or linear g with the largest truncated dimension
/// (2..max_dim) that still builds.
inline Gsl2Case random_gsl2_case(std::mt19937_64& rng, std::size_t max_dim = 10) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    std::vector<double> c;
    if (u(rng) < 0.3) {
      c = {-(0.2 + 1.5 * u(rng)), 0.5 + 0.6 * u(rng)};
    } else {
      c = {-(0.1 + 0.9 * u(rng)), 0.5 + 1.5 * u(rng), -(0.02 + 0.4 * u(rng))};
    }
    const CharFn gn(c, Orientation::WeightLike);
    const double hi = gn.is_quadratic() ? invertibility_boundary(gn) : 20.0;
    const double alpha_j = hi - 0.05 - 4.0 * u(rng);
    if (alpha_j < 0.0) continue;
    for (std::size_t dim = max_dim; dim >= 2; --dim) {
      try {
        const Gsl2Rep rep = build_gsl2(gn, alpha_j, dim, Gsl2Kind::TruncatedInfinite);
        if (!bounded(rep.weights())) break;
        return {gn, alpha_j, dim};
      } catch (const Error&) {
      }
    }
  }
}

/// f = a3 x^3 + a2 x^2 + a1 x + 1 with a slowly moving, bounded orbit, and
/// its partner built by the reflection rule.
inline CubicPairing random_cubic_pairing(std::mt19937_64& rng, std::size_t steps) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const CharFn fn({1.0, 0.55 + 0.25 * u(rng), 0.08 * u(rng), 0.04 * u(rng)}, Orientation::OscillatorLike);
    const double alpha0 = 1.5 * u(rng);
    if (std::abs(evaluate(fn, alpha0) - alpha0) < 1e-3) continue;
    const Trajectory t = iterate_bounded(fn, alpha0, steps, kSpectrumBound);
    if (t.diverged || !bounded(t.points)) continue;
    return {fn, reflection_pair(fn), alpha0};
  }
}

}  // namespace gjs::testing
