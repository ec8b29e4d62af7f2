#include <doctest.h>

#include <cmath>
#include <random>

#include "generators.hpp"
#include "gjs/errors.hpp"
#include "gjs/gsl2.hpp"
#include "oracles.hpp"

using namespace gjs;

namespace {

const CharFn kWeight({-1.0, 3.0, -1.0}, Orientation::WeightLike);
const CharFn kSl2({-1.0, 1.0}, Orientation::WeightLike);

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("gsl2") {

TEST_CASE("g = x - 1 reproduces spin-j matrices") {
  for (std::size_t twice_j = 1; twice_j <= 6; ++twice_j) {
    const Gsl2Rep rep = build_gsl2(kSl2, twice_j / 2.0, twice_j + 1, Gsl2Kind::FiniteCut);
    const auto spin = testing::textbook_spin(twice_j);
    const Gsl2Operators ops = gsl2_operators(rep);
    CHECK(max_abs_difference(ops.J0, spin.jz) <= 1e-12);
    CHECK(max_abs_difference(ops.Jplus, spin.jplus) <= 1e-12);
    CHECK(max_abs_difference(ops.Jminus, spin.jminus) <= 1e-12);
    CHECK(max_abs_difference(casimir_gsl2(rep), spin.jsq) <= 1e-12);
    CHECK(*rep.closure_residual() == 0.0);
    CHECK(verify_gsl2_relations(rep, 1e-12).passed());
  }
}

TEST_CASE("ladder squares agree with the factored form") {
  const Gsl2Rep rep = build_gsl2(kWeight, 0.9, 4, Gsl2Kind::TruncatedInfinite);
  for (std::size_t m = 0; m < 3; ++m) {
    CHECK(rep.ladder_sq()[m] == doctest::Approx(ladder_sq_factored(0.9, rep.weights()[m + 1])).epsilon(1e-13));
  }
  CHECK(rep.checked_columns() == 3);
  CHECK_FALSE(rep.closure_residual().has_value());
}

TEST_CASE("cut condition for d = 2 on the reference weight function") {
  const CutSolutions cut = cut_condition_solve(kWeight, 2);
  REQUIRE(cut.included.size() == 1);
  CHECK(std::abs(cut.included[0] - 0.33479) <= 1e-4);
  const double r = cut.included[0];
  CHECK(std::abs(r + compose(kWeight, r, 2) + 1.0) <= 1e-9);
  REQUIRE(cut.excluded.size() == 1);
  CHECK(std::abs(cut.excluded[0].value - 2.9228) <= 1e-3);
  CHECK(cut.excluded[0].reason == CutExclusion::OutsideInvertibleRegion);

  // The quoted root itself closes only to about 1e-4.
  CHECK_THROWS_AS(build_gsl2(kWeight, 0.33479, 2, Gsl2Kind::FiniteCut), Error);
  const Gsl2Rep loose = build_gsl2(kWeight, 0.33479, 2, Gsl2Kind::FiniteCut, 1e-4);
  CHECK(*loose.closure_residual() < 1e-4);
}

TEST_CASE("cut roots of g = x - 1 are the half-integers") {
  for (std::size_t d = 1; d <= 5; ++d) {
    const CutSolutions cut = cut_condition_solve(kSl2, d);
    REQUIRE(cut.included.size() == 1);
    CHECK(cut.included[0] == doctest::Approx((d - 1) / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("periodic condition with d = 1 returns the fixed point") {
  const auto roots = periodic_condition_solve(kWeight, 1);
  REQUIRE(roots.size() == 1);
  CHECK(std::abs(roots[0] - 1.0) <= 1e-6);
}

TEST_CASE("casimir is constant on finite representations") {
  const double r = cut_condition_solve(kWeight, 2).included[0];
  const Gsl2Rep rep = build_gsl2(kWeight, r, 2, Gsl2Kind::FiniteCut);
  const OperatorMatrix c = casimir_gsl2(rep);
  const OperatorMatrix expected = OperatorMatrix::identity(2) * (r * (r + 1.0));
  CHECK(max_abs_difference(c, expected) <= 1e-10);
}

TEST_CASE("relations on random truncated representations") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = testing::random_gsl2_case(rng);
    const Gsl2Rep rep = build_gsl2(c.gn, c.alpha_j, c.dim, Gsl2Kind::TruncatedInfinite);
    CHECK(verify_gsl2_relations(rep, 1e-10).passed());
    const std::size_t m = static_cast<std::size_t>(trial) % (c.dim - 1);
    CHECK_FALSE(verify_gsl2_relations(rep.with_ladder_sq_offset(m, 1e-2), 1e-10).passed());
    CHECK_FALSE(verify_gsl2_relations(rep.with_weight_offset(m, 1e-2), 1e-10).passed());
  }
}

TEST_CASE("every single-entry perturbation of a cut representation is detected") {
  const Gsl2Rep rep = build_gsl2(kSl2, 1.5, 4, Gsl2Kind::FiniteCut);
  const Gsl2Operators base = gsl2_operators(rep);
  for (int which = 0; which < 3; ++which) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        Gsl2Operators ops = base;
        OperatorMatrix& target = which == 0 ? ops.J0 : which == 1 ? ops.Jplus : ops.Jminus;
        target(i, j) += 1e-2;
        CHECK_FALSE(gsl2_relation_residuals(kSl2, ops, rep.checked_columns(), 1e-10).passed());
      }
    }
  }
}

TEST_CASE("construction errors carry their codes") {
  CHECK(code_of([] { build_gsl2(kWeight, 2.0, 2, Gsl2Kind::TruncatedInfinite); }) ==
        ErrorCode::OutsideInvertibleRegion);
  const CharFn climbing({1.0, 1.0}, Orientation::WeightLike);
  CHECK(code_of([&] { build_gsl2(climbing, 0.5, 3, Gsl2Kind::TruncatedInfinite); }) == ErrorCode::DescentViolation);
  CHECK(code_of([] { build_gsl2(kSl2, 1.0, 5, Gsl2Kind::TruncatedInfinite); }) == ErrorCode::NegativeLadderSquare);
  CHECK(code_of([] { build_gsl2(kSl2, 1.2, 3, Gsl2Kind::FiniteCut); }) == ErrorCode::CutResidualTooLarge);
  CHECK(code_of([] { build_gsl2(kSl2, 1.0, 0, Gsl2Kind::FiniteCut); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("kind names round trip") {
  for (Gsl2Kind k : {Gsl2Kind::FinitePeriodic, Gsl2Kind::FiniteCut, Gsl2Kind::TruncatedInfinite}) {
    CHECK(parse_gsl2_kind(to_string(k)) == k);
  }
  CHECK_FALSE(parse_gsl2_kind("infinite").has_value());
}

}  // TEST_SUITE
