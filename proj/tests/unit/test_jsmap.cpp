#include <doctest.h>

#include <cmath>
#include <random>

#include "generators.hpp"
#include "gjs/errors.hpp"
#include "gjs/jsmap.hpp"
#include "oracles.hpp"

using namespace gjs;

namespace {

const CharFn kBoson({1.0, 1.0}, Orientation::OscillatorLike);
const CharFn kSl2({-1.0, 1.0}, Orientation::WeightLike);
const CharFn kFig4({1.0, 3.0, 1.0}, Orientation::OscillatorLike);
const CharFn kWeight({-1.0, 3.0, -1.0}, Orientation::WeightLike);

double cut_root() { return cut_condition_solve(kWeight, 2).included.at(0); }

}  // namespace

TEST_SUITE("jsmap") {

TEST_CASE("fixed-j basis ordering") {
  const TwoOscillatorSpace space = TwoOscillatorSpace::fixed_j(kBoson, 0.0, 3);
  REQUIRE(space.size() == 4);
  CHECK(space.basis()[0] == OccupationPair{3, 0});
  CHECK(space.basis()[3] == OccupationPair{0, 3});
  CHECK(space.index_of(1, 2) == std::optional<std::size_t>(2));
  CHECK_FALSE(space.index_of(1, 1).has_value());
  CHECK_THROWS_AS(TwoOscillatorSpace::fixed_j(build_gha(kBoson, 0.0, 3), 3), Error);
}

TEST_CASE("standard limit: F is one and G is (n1 - n2)/2 exactly") {
  for (std::size_t twice_j = 1; twice_j <= 4; ++twice_j) {
    const double j = twice_j / 2.0;
    const JsMapRep js = build_jsmap_fixed_j(kBoson, 0.0, kSl2, j, twice_j);
    const auto spin = testing::textbook_spin(twice_j);
    for (std::size_t i = 0; i < js.space().size(); ++i) {
      const OccupationPair s = js.space().basis()[i];
      CHECK(js.S_z()(i, i) == (static_cast<double>(s.n1) - static_cast<double>(s.n2)) / 2.0);
      CHECK(js.F()(i, i) == (s.n1 == 0 ? 0.0 : 1.0));
    }
    CHECK(max_abs_difference(js.S_plus(), spin.jplus) <= 1e-12);
    CHECK(max_abs_difference(js.S_minus(), spin.jminus) <= 1e-12);
    CHECK(max_abs_difference(js.S_sq(), spin.jsq) <= 1e-12);
  }
}

TEST_CASE("paired quadratics reproduce the two-state cut representation") {
  const double r = cut_root();
  const JsMapRep js = build_jsmap_fixed_j(kFig4, -r, kWeight, r, 1);
  const Gsl2Rep rep = build_gsl2(kWeight, r, 2, Gsl2Kind::FiniteCut);
  const ResidualReport report = verify_map_equals_gsl2(js, rep, 1e-10);
  CHECK(report.passed());
  CHECK(gsl2_relation_residuals(kWeight, js.operators(), 2, 1e-10).passed());
  CHECK(js.Q2() < 0.0);
}

TEST_CASE("the reduced F agrees with the general one for paired functions") {
  const double r = cut_root();
  const TwoOscillatorSpace space = TwoOscillatorSpace::fixed_j(kFig4, -r, 1);
  const OperatorMatrix general = functional_F(space, kWeight, r);
  const OperatorMatrix reduced = functional_F_paired(space, kWeight, r);
  CHECK(max_abs_difference(general, reduced) <= 1e-12);
}

TEST_CASE("map and representation must describe the same algebra") {
  const JsMapRep js = build_jsmap_fixed_j(kBoson, 0.0, kSl2, 1.0, 2);
  CHECK_THROWS_AS(verify_map_equals_gsl2(js, build_gsl2(kSl2, 1.5, 4, Gsl2Kind::FiniteCut), 1e-10), Error);
  CHECK_THROWS_AS(verify_map_equals_gsl2(js, build_gsl2(kSl2, 1.1, 3, Gsl2Kind::TruncatedInfinite), 1e-10), Error);
  CHECK_THROWS_AS(build_jsmap_fixed_j(kBoson, 0.0, CharFn({1.0, 1.0}, Orientation::WeightLike), 1.0, 2), Error);
}

TEST_CASE("full grid: designated shell matches the fixed-j map") {
  const std::size_t d = 4;  // designated 2j = 3
  const JsMapRep grid = build_jsmap(TwoOscillatorSpace::full_grid(kBoson, 0.0, d), kSl2, 1.5);
  const JsMapRep shell = build_jsmap_fixed_j(kBoson, 0.0, kSl2, 1.5, 3);
  REQUIRE(grid.designated_twice_j() == std::optional<std::size_t>(3));
  CHECK(grid.S_minus() == grid.S_plus().transpose());
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      const OccupationPair sa = shell.space().basis()[a];
      const OccupationPair sb = shell.space().basis()[b];
      const std::size_t ga = *grid.space().index_of(sa.n1, sa.n2);
      const std::size_t gb = *grid.space().index_of(sb.n1, sb.n2);
      CHECK(grid.S_plus()(ga, gb) == doctest::Approx(shell.S_plus()(a, b)).epsilon(1e-14));
      CHECK(grid.S_z()(ga, gb) == shell.S_z()(a, b));
    }
  }
  CHECK(grid.unverified_shells().size() == 6);
  CHECK_THROWS_AS(build_jsmap(TwoOscillatorSpace::full_grid(kBoson, 0.0, d), kSl2, 1.5, 4), Error);
}

TEST_CASE("full grid: state vectors are unit basis vectors") {
  for (const auto& [fn, alpha0] : {std::pair{kBoson, 0.0}, std::pair{kFig4, -0.15}}) {
    const TwoOscillatorSpace space = TwoOscillatorSpace::full_grid(fn, alpha0, 4);
    for (const OccupationPair& s : space.basis()) {
      const auto v = build_state_vector(space, s.n1, s.n2);
      const std::size_t idx = *space.index_of(s.n1, s.n2);
      for (std::size_t k = 0; k < v.size(); ++k) CHECK(v[k] == doctest::Approx(k == idx ? 1.0 : 0.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(build_state_vector(space, 4, 0), Error);
    CHECK(mode1_creation(space) * mode2_creation(space) == mode2_creation(space) * mode1_creation(space));
  }
}

TEST_CASE("pairing identity for the reference pair and random cubics") {
  const ResidualReport fig4 = verify_pairing_identity(kFig4, -0.15, kWeight, 0.15, 10, 1e-10);
  CHECK(fig4.passed());
  REQUIRE(fig4.find("fixed point reflection") != nullptr);

  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 5; ++trial) {
    const auto pair = testing::random_cubic_pairing(rng, 10);
    CHECK(verify_pairing_identity(pair.fn, pair.alpha0, pair.gn, -pair.alpha0, 10, 1e-10).passed());
    // Oracle: iterate both maps directly and compare the unnormalized ladders.
    const std::vector<double> fc(pair.fn.coefficients().begin(), pair.fn.coefficients().end());
    const std::vector<double> gc(pair.gn.coefficients().begin(), pair.gn.coefficients().end());
    const auto fo = testing::direct_orbit(fc, pair.alpha0, 10);
    const auto go = testing::direct_orbit(gc, -pair.alpha0, 10);
    for (std::size_t m = 0; m <= 10; ++m) CHECK(go[m] == doctest::Approx(-fo[m]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(verify_pairing_identity(kFig4, -0.15, kWeight, 0.2, 10, 1e-10), Error);
  CHECK_THROWS_AS(verify_pairing_identity(kFig4, -0.15, kSl2, 0.15, 10, 1e-10), Error);
  CHECK_THROWS_AS(verify_pairing_identity(kFig4, -1.0, kWeight, 1.0, 10, 1e-10), Error);
}

}  // TEST_SUITE
