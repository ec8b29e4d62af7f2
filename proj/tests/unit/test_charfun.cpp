#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gjs/charfun.hpp"
#include "gjs/errors.hpp"

using namespace gjs;

namespace {

// Power-sum evaluation, independent of Horner.
double naive_eval(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * std::pow(x, static_cast<double>(i));
  return s;
}

// Coefficients of prod (x - r_i).
std::vector<double> from_roots(const std::vector<double>& roots) {
  std::vector<double> c{1.0};
  for (double r : roots) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = next;
  }
  return c;
}

const CharFn kFig1({1.225, -2.5, 2.5}, Orientation::OscillatorLike);
const CharFn kWeight({-1.0, 3.0, -1.0}, Orientation::WeightLike);
const CharFn kFig4({1.0, 3.0, 1.0}, Orientation::OscillatorLike);

}  // namespace

TEST_SUITE("charfun") {

TEST_CASE("construction trims trailing zeros and enforces orientation") {
  const CharFn a({1.0, 2.0, 0.0, 0.0}, Orientation::OscillatorLike);
  CHECK(a.degree() == 1);
  CHECK(a == CharFn({1.0, 2.0}, Orientation::OscillatorLike));
  CHECK_THROWS_AS(CharFn({3.0}, Orientation::OscillatorLike), Error);
  CHECK_THROWS_AS(CharFn({1.0, 0.0, 0.0}, Orientation::OscillatorLike), Error);
  CHECK_THROWS_AS(CharFn({1.0, 1.0, -1.0}, Orientation::OscillatorLike), Error);
  CHECK_THROWS_AS(CharFn({1.0, 1.0, 1.0}, Orientation::WeightLike), Error);
  CHECK_THROWS_AS(CharFn({1.0, NAN}, Orientation::WeightLike), Error);
}

TEST_CASE("evaluation and derivative against independent oracles") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> c{u(rng), u(rng), u(rng), u(rng), 1.0 + std::abs(u(rng))};
    const CharFn fn(c, Orientation::OscillatorLike);
    const double x = u(rng);
    CHECK(evaluate(fn, x) == doctest::Approx(naive_eval(c, x)).epsilon(1e-12));
    const double h = 1e-5;
    const double fd = (naive_eval(c, x + h) - naive_eval(c, x - h)) / (2 * h);
    CHECK(derivative(fn, x) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("iterate returns steps + 1 points and honours the bound") {
  const CharFn doubling({0.0, 2.0}, Orientation::OscillatorLike);
  const auto orbit = iterate(doubling, 1.0, 5);
  REQUIRE(orbit.size() == 6);
  CHECK(orbit.back() == 32.0);
  CHECK_THROWS_AS(iterate(doubling, 1.0, 50, 1e6), Error);
  try {
    iterate(doubling, 1.0, 50, 1e6);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OverflowDiverged);
  }
  const Trajectory t = iterate_bounded(doubling, 1.0, 50, 1e6);
  CHECK(t.diverged);
  CHECK(t.points.size() == 21);  // 2^20 is the first iterate past 1e6
  CHECK(t.points.back() == 1048576.0);
}

TEST_CASE("fixed points of the reference functions") {
  const auto fp1 = fixed_points(kFig1);
  REQUIRE(fp1.size() == 1);
  CHECK(fp1[0].location == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(fp1[0].stability == Stability::NeutralTangent);
  CHECK(fp1[0].one_sided == OneSidedBehavior::ConvergesFromBelow);
  CHECK(std::abs(discriminant(kFig1)) <= 1e-9);
  CHECK(invertibility_boundary(kFig1) == doctest::Approx(0.5));

  const auto fp2 = fixed_points(kWeight);
  REQUIRE(fp2.size() == 1);
  CHECK(fp2[0].location == doctest::Approx(1.0));
  CHECK(fp2[0].one_sided == OneSidedBehavior::ConvergesFromAbove);
  CHECK(invertibility_boundary(kWeight) == doctest::Approx(1.5));

  const auto fp4 = fixed_points(kFig4);
  REQUIRE(fp4.size() == 1);
  CHECK(fp4[0].location == doctest::Approx(-1.0));
  CHECK(fixed_points(reflection_pair(kFig4))[0].location == -fp4[0].location);
}

TEST_CASE("fixed points with two simple roots are classified by multiplier") {
  // f(x) = x^2 + 0.25 - 0.01 has fixed points 0.4 and 0.6.
  const CharFn fn({0.24, 0.0, 1.0}, Orientation::OscillatorLike);
  const auto fps = fixed_points(fn);
  REQUIRE(fps.size() == 2);
  CHECK(fps[0].location == doctest::Approx(0.4));
  CHECK(fps[0].stability == Stability::Attracting);
  CHECK(fps[1].location == doctest::Approx(0.6));
  CHECK(fps[1].stability == Stability::Repelling);
  CHECK_FALSE(fps[0].one_sided.has_value());
}

TEST_CASE("fixed points reject maps without real solutions and the identity") {
  CHECK_THROWS_AS(fixed_points(CharFn({1.0, 0.0, 1.0}, Orientation::OscillatorLike)), Error);
  CHECK_THROWS_AS(fixed_points(CharFn({0.0, 1.0}, Orientation::OscillatorLike)), Error);
  CHECK_THROWS_AS(discriminant(CharFn({0.0, 2.0}, Orientation::OscillatorLike)), Error);
}

TEST_CASE("fixed points of a cubic go through the root finder") {
  const CharFn fn({0.0, 0.0, 0.0, 1.0}, Orientation::OscillatorLike);  // x^3 = x
  const auto fps = fixed_points(fn);
  REQUIRE(fps.size() == 3);
  CHECK(fps[0].location == doctest::Approx(-1.0));
  CHECK(fps[1].location == doctest::Approx(0.0));
  CHECK(fps[2].location == doctest::Approx(1.0));
  CHECK(fps[1].stability == Stability::Attracting);
}

TEST_CASE("region classification for a double fixed point") {
  CHECK(classify_region(kFig1, 0.56) == RegionLabel::ConvergentInterval);
  CHECK(classify_region(kFig1, 0.85) == RegionLabel::DivergentInterval);
  CHECK(classify_region(kFig1, 0.4) == RegionLabel::OutsideInvertibleRegion);
  CHECK(classify_region(kFig1, 0.7) == RegionLabel::OnFixedPoint);
  CHECK(classify_region(kWeight, -0.05) == RegionLabel::DivergentInterval);
  CHECK(classify_region(kWeight, 1.2) == RegionLabel::ConvergentInterval);
  CHECK_THROWS_AS(classify_region(CharFn({0.24, 0.0, 1.0}, Orientation::OscillatorLike), 0.5), Error);
}

TEST_CASE("invertibility region follows orientation") {
  CHECK(in_invertible_region(kFig1, 0.6));
  CHECK_FALSE(in_invertible_region(kFig1, 0.4));
  CHECK(in_invertible_region(kWeight, 1.0));
  CHECK_FALSE(in_invertible_region(kWeight, 2.0));
  const CharFn cubic({0.0, -1.0, 0.0, 1.0}, Orientation::OscillatorLike);
  CHECK(in_invertible_region(cubic, 2.0));
  CHECK_FALSE(in_invertible_region(cubic, 0.0));
}

TEST_CASE("find_roots recovers roots of products of linear factors") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> roots{u(rng), u(rng), u(rng), u(rng)};
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end(), [](double a, double b) { return b - a < 1e-2; }) !=
        roots.end()) {
      continue;
    }
    const auto found = find_roots(from_roots(roots), {}, 1e-12);
    REQUIRE(found.size() == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) CHECK(found[i] == doctest::Approx(roots[i]).epsilon(1e-9));
  }
}

TEST_CASE("find_roots finds even-multiplicity roots") {
  const auto found = find_roots(from_roots({1.0, 1.0, -2.0}), {}, 1e-12);
  REQUIRE(found.size() == 2);
  CHECK(found[0] == doctest::Approx(-2.0));
  CHECK(found[1] == doctest::Approx(1.0));
  const auto window = find_roots(from_roots({1.0, 1.0, -2.0}), {0.0, 3.0}, 1e-12);
  REQUIRE(window.size() == 1);
}

TEST_CASE("scan_roots handles sign changes and tangencies") {
  const auto roots = scan_roots([](double x) { return std::cos(x); }, 0.0, 5.0);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == doctest::Approx(M_PI / 2).epsilon(1e-12));
  CHECK(roots[1] == doctest::Approx(3 * M_PI / 2).epsilon(1e-12));
  const auto tangent = scan_roots([](double x) { return (x - 0.3) * (x - 0.3); }, 0.0, 1.0);
  REQUIRE(tangent.size() == 1);
  CHECK(std::abs(tangent[0] - 0.3) <= 1e-6);
  CHECK(scan_roots([](double x) { return x * x + 1.0; }, -3.0, 3.0).empty());
}

TEST_CASE("reflection pairing is exact in floating point") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const CharFn f({1.0, 0.7, 0.3, -0.05}, Orientation::OscillatorLike);
  const CharFn g = reflection_pair(f);
  CHECK(g.coefficient(0) == -1.0);
  CHECK(g.coefficient(1) == 0.7);
  CHECK(g.coefficient(2) == -0.3);
  CHECK(g.coefficient(3) == -0.05);
  CHECK(g.orientation() == Orientation::WeightLike);
  CHECK(is_reflection_pair(f, g));
  CHECK_FALSE(is_reflection_pair(f, f));
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    CHECK(evaluate(g, -x) == -evaluate(f, x));
  }
  CHECK(reflection_pair(kFig4) == kWeight);
  CHECK_THROWS_AS(reflection_pair(kFig1), Error);
}

}  // TEST_SUITE
