#include <doctest.h>

#include <cmath>
#include <random>

#include "generators.hpp"
#include "gjs/errors.hpp"
#include "gjs/gha.hpp"

using namespace gjs;

TEST_SUITE("gha") {

TEST_CASE("f = x + 1 reproduces the boson oscillator") {
  const CharFn f({1.0, 1.0}, Orientation::OscillatorLike);
  const GhaRep rep = build_gha(f, 0.0, 6);
  const OperatorMatrix adag = matrix_Adag(rep);
  for (std::size_t n = 0; n < 6; ++n) {
    CHECK(rep.eigenvalues()[n] == static_cast<double>(n));
    if (n + 1 < 6) CHECK(adag(n + 1, n) == doctest::Approx(std::sqrt(n + 1.0)).epsilon(1e-15));
  }
  CHECK(matrix_A(rep) == adag.transpose());
  CHECK(matrix_N(rep) == matrix_H(rep));
  CHECK(max_abs(casimir_gha(rep)) <= 1e-14);
  CHECK(gauss_numbers(f, 0.0, 6) == std::vector<double>{0, 1, 2, 3, 4, 5});
  CHECK(gauss_factorial(f, 0.0, 5) == 120.0);
}

TEST_CASE("q-oscillator Gauss numbers are q-numbers") {
  const double q = 1.3;
  const CharFn f({1.0, q}, Orientation::OscillatorLike);
  for (std::size_t m = 0; m < 10; ++m) {
    const double expected = (std::pow(q, static_cast<double>(m)) - 1.0) / (q - 1.0);
    CHECK(gauss_number(f, 0.0, m) == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("eigenvalues are iterates and ladders follow from them") {
  const CharFn f({1.225, -2.5, 2.5}, Orientation::OscillatorLike);
  const GhaRep rep = build_gha(f, 0.56, 8);
  double x = 0.56;
  for (std::size_t m = 0; m < 8; ++m) {
    CHECK(rep.eigenvalues()[m] == doctest::Approx(x).epsilon(1e-15));
    if (m > 0) CHECK(rep.ladder()[m - 1] == doctest::Approx(std::sqrt(x - 0.56)).epsilon(1e-15));
    x = 2.5 * x * x - 2.5 * x + 1.225;
  }
}

TEST_CASE("casimir is -alpha0 on random representations") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = testing::random_gha_case(rng);
    const GhaRep rep = build_gha(c.fn, c.alpha0, c.dim);
    const OperatorMatrix cas = casimir_gha(rep);
    const OperatorMatrix expected = OperatorMatrix::identity(c.dim) * -c.alpha0;
    CHECK(max_abs_difference(cas, expected) <= 1e-12 * std::max(1.0, std::abs(c.alpha0)));
    const OperatorMatrix alt = casimir_gha_alternate(rep);
    CHECK(max_abs_in_columns(alt - expected, c.dim - 1) <= 1e-12 * std::max(1.0, std::abs(c.alpha0)));
  }
}

TEST_CASE("relations hold on random representations and catch perturbations") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = testing::random_gha_case(rng);
    const GhaRep rep = build_gha(c.fn, c.alpha0, c.dim);
    const ResidualReport report = verify_gha_relations(rep, 1e-10);
    CHECK(report.passed());
    CHECK(report.residuals.size() == 5);
    const std::size_t m = static_cast<std::size_t>(trial) % (c.dim - 1);
    CHECK_FALSE(verify_gha_relations(rep.with_ladder_offset(m, 1e-2), 1e-10).passed());
  }
}

TEST_CASE("every single-entry perturbation is detected") {
  const CharFn f({1.0, 3.0, 1.0}, Orientation::OscillatorLike);
  const GhaRep rep = build_gha(f, -0.15, 5);
  const GhaOperators base = gha_operators(rep);
  for (int which = 0; which < 3; ++which) {
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        GhaOperators ops = base;
        OperatorMatrix& target = which == 0 ? ops.H : which == 1 ? ops.A : ops.Adag;
        target(i, j) += 1e-2;
        CHECK_FALSE(gha_relation_residuals(f, ops, 1e-10).passed());
      }
    }
  }
}

TEST_CASE("invalid vacua are rejected") {
  const CharFn f({1.225, -2.5, 2.5}, Orientation::OscillatorLike);
  CHECK_THROWS_AS(build_gha(f, 0.3, 4), Error);
  try {
    build_gha(CharFn({-1.0, 1.0}, Orientation::OscillatorLike), 0.0, 3);
    FAIL("expected NegativeNormSquared");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeNormSquared);
    CHECK(e.index() == std::optional<std::size_t>(0));
  }
  CHECK_THROWS_AS(build_gha(f, 0.6, 0), Error);
  CHECK_THROWS_AS(gauss_numbers(f, 0.7, 3), Error);
  CHECK_THROWS_AS(verify_gha_relations(build_gha(f, 0.6, 1), 1e-10), Error);
}

TEST_CASE("a single state is allowed") {
  const GhaRep rep = build_gha(CharFn({1.0, 1.0}, Orientation::OscillatorLike), 2.0, 1);
  CHECK(rep.dim() == 1);
  CHECK(rep.ladder().empty());
  CHECK(casimir_gha(rep)(0, 0) == -2.0);
}

}  // TEST_SUITE
