#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "gjs/errors.hpp"
#include "gjs/io.hpp"

using namespace gjs;

TEST_SUITE("io") {

TEST_CASE("characteristic functions round trip through JSON") {
  const CharFn fn({-1.0, 3.0, -1.0}, Orientation::WeightLike);
  const Json j = to_json(fn);
  CHECK(j.dump() == R"({"coefficients":[-1.0,3.0,-1.0],"orientation":"weight"})");
  CHECK(charfn_from_json(j) == fn);
  CHECK_THROWS_AS(charfn_from_json(Json::parse(R"({"coefficients":[]})")), Error);
  CHECK_THROWS_AS(charfn_from_json(Json::parse(R"({"coefficients":[1,2],"orientation":"up"})")), Error);
  CHECK_THROWS_AS(charfn_from_json(Json::parse(R"({"coefficients":[1,"x"],"orientation":"weight"})")), Error);
  CHECK_THROWS_AS(charfn_from_json(Json::parse("[1, 2]")), Error);
}

TEST_CASE("format_double round trips") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    const std::string s = format_double(x);
    CHECK(std::stod(s) == x);
    CHECK(s.size() <= 24);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(NAN) == "nan");
}

TEST_CASE("matrix CSV layout") {
  OperatorMatrix m = OperatorMatrix::identity(2, "|m>, m=0..1");
  m(0, 1) = 0.5;
  CHECK(to_csv(m) == "\"|m>, m=0..1\",0,1\n0,1,0.5\n1,0,1\n");
  CHECK(to_csv(OperatorMatrix::zeros(1, "plain")) == "plain,0\n0,0\n");
}

TEST_CASE("representation JSON carries the documented fields") {
  const GhaRep gha = build_gha(CharFn({1.0, 1.0}, Orientation::OscillatorLike), 0.0, 3);
  const Json g = to_json(gha);
  CHECK(g["dim"] == 3);
  CHECK(g["eigenvalues"] == Json::array({0.0, 1.0, 2.0}));
  CHECK(g.contains("ladder"));
  CHECK(g.begin().key() == "fn");

  const Gsl2Rep rep = build_gsl2(CharFn({-1.0, 1.0}, Orientation::WeightLike), 1.0, 3, Gsl2Kind::FiniteCut);
  const Json s = to_json(rep);
  CHECK(s["kind"] == "cut");
  CHECK(s["cut_residual"] == 0.0);

  ResidualReport r;
  r.tolerance = 1.0;
  r.add("x", NAN);
  CHECK_FALSE(r.passed());
  CHECK(to_json(r)["passed"] == false);
}

TEST_CASE("orbit CSV pair") {
  const OrbitReport r = cobweb(CharFn({1.225, -2.5, 2.5}, Orientation::OscillatorLike), 0.56, 2, {0.4, 0.9},
                               {3, kDefaultDivergenceBound});
  const std::string samples = samples_csv(r);
  CHECK(samples.rfind("series,x,y\nfn,0.4,", 0) == 0);
  CHECK(std::count(samples.begin(), samples.end(), '\n') == 7);
  const std::string web = cobweb_csv(r);
  CHECK(web.rfind("index,kind,x1,y1,x2,y2\n0,vertical,0.56,0.56,", 0) == 0);
  CHECK(std::count(web.begin(), web.end(), '\n') == 5);
  CHECK(web.find('\r') == std::string::npos);
}

}  // TEST_SUITE
