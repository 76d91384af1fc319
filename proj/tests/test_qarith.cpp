#include <numbers>

#include "doctest.h"
#include "rtcalc/qarith.hpp"

using namespace rtcalc;

namespace {
bool near(cplx a, cplx b, double tol = 1e-12) { return std::abs(a - b) < tol; }
}  // namespace

TEST_CASE("q is a primitive 2r-th root of unity") {
  for (int r = 2; r <= 9; ++r) {
    GlobalParams p(r);
    CHECK(near(std::pow(p.q(), 2 * r), 1.0, 1e-12));
    for (int k = 1; k < 2 * r; ++k) CHECK(std::abs(std::pow(p.q(), k) - 1.0) > 1e-6);
  }
}

TEST_CASE("r below 2 and above the cap are rejected") {
  CHECK_THROWS_AS(GlobalParams(1), domain_error);
  CHECK_THROWS_AS(GlobalParams(0), domain_error);
  CHECK_THROWS_AS(GlobalParams(max_r() + 1), domain_error);
}

TEST_CASE("qpow") {
  CHECK(near(qpow(GlobalParams(2), 0.0), 1.0));
  CHECK(near(qpow(GlobalParams(2), 2.0), -1.0));
  CHECK(near(qpow(GlobalParams(3), 3.0), -1.0));
}

TEST_CASE("qbracket and qint") {
  GlobalParams p2(2), p3(3), p5(5);
  CHECK(near(qbracket(p2, 0.0), 0.0));
  CHECK(near(qbracket(p2, 1.0), cplx(0, 2)));
  CHECK(near(qbracket(p5, 5.0), 0.0));
  for (int r = 2; r < 7; ++r) CHECK(near(qint(GlobalParams(r), 1.0), 1.0));
  CHECK(near(qint(p2, 2.0), 0.0));
  CHECK(near(qint(p3, 2.0), 1.0));
}

TEST_CASE("qfact and qbinom") {
  GlobalParams p2(2), p3(3), p5(5);
  CHECK(near(qfact(p3, 0, FactorialKind::braced), 1.0));
  CHECK(near(qfact(p3, 2, FactorialKind::bracket), 1.0));
  CHECK(near(qfact(p2, 1, FactorialKind::braced), cplx(0, 2)));
  CHECK_THROWS_AS(qfact(p3, -1, FactorialKind::bracket), domain_error);
  CHECK(near(qbinom(p5, 3, 0), 1.0));
  CHECK(near(qbinom(p5, 2, 1), qint(p5, 2.0)));
  CHECK(near(qbinom(p5, 2, 1), 2 * std::cos(std::numbers::pi / 5)));
  CHECK(near(qbinom(p2, 1, 1), 1.0));
}

TEST_CASE("qexp coefficients") {
  auto c = qexp_coeffs(GlobalParams(2), +1);
  REQUIRE(c.size() == 2);
  CHECK(near(c[0], 1.0));
  CHECK(near(c[1], 1.0));
  GlobalParams p3(3);
  auto m = qexp_coeffs(p3, -1);
  REQUIRE(m.size() == 3);
  CHECK(near(m[0], 1.0));
  CHECK(near(m[1], 1.0));
  const cplx qi = 1.0 / p3.q();
  CHECK(near(m[2], qi / (qi + 1.0 / qi)));
  for (int r = 2; r < 8; ++r) CHECK(near(qexp_coeffs(GlobalParams(r), +1)[0], 1.0));
}

TEST_CASE("color guard") {
  GlobalParams p(3);
  CHECK(is_excluded_color(p, 1.0, 1e-6));
  CHECK(is_excluded_color(p, 3.0 + 1e-8, 1e-6));
  CHECK(is_excluded_color(p, -2.0, 1e-6));
  CHECK_FALSE(is_excluded_color(p, 0.4, 1e-6));
  CHECK_FALSE(is_excluded_color(p, cplx(1.0, 0.01), 1e-6));
}

TEST_CASE("parse_complex") {
  CHECK(parse_complex("0.4") == cplx(0.4, 0));
  CHECK(parse_complex("0.41+0.2i") == cplx(0.41, 0.2));
  CHECK(parse_complex("1-2i") == cplx(1, -2));
  CHECK(parse_complex("-i") == cplx(0, -1));
  CHECK(parse_complex("2.5i") == cplx(0, 2.5));
  CHECK(parse_complex("[0.3, -0.1]") == cplx(0.3, -0.1));
  CHECK(parse_complex("1e-3+2i") == cplx(1e-3, 2));
  CHECK_THROWS_AS(parse_complex("abc"), domain_error);
  CHECK_THROWS_AS(parse_complex(""), domain_error);
  CHECK_THROWS_AS(parse_complex("[1,2"), domain_error);
}
