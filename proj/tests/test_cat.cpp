#include "doctest.h"
#include "rtcalc/cat.hpp"

using namespace rtcalc;

namespace {

double dist(const Morphism& a, const Morphism& b) { return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff(); }
double dist(const Morphism& a, const Mat& b) { return (a.matrix() - b).cwiseAbs().maxCoeff(); }
cplx theta(const GlobalParams& p, cplx a) {
  const double r = p.r();
  return qpow(p, (a + r - 1.0) * (a - r + 1.0) / 2.0);
}

}  // namespace

TEST_CASE("composition with identities") {
  GlobalParams p(3);
  auto v = verma(p, 0.4), w = verma(p, cplx(1.1, 0.3));
  Morphism c = braiding(v, w);
  CHECK(dist(compose(identity(c.cod()), c), c) == 0);
  CHECK(dist(compose(c, identity(c.dom())), c) == 0);
  CHECK_THROWS_AS(compose(c, c), composition_error);
}

TEST_CASE("tensor of morphisms") {
  GlobalParams p(2);
  auto v = verma(p, 0.4), w = verma(p, 1.3);
  auto vw = tensor_module(v, w);
  CHECK(dist(tensor_mor(identity(v), identity(w)), identity(vw)) == 0);
  Morphism f = twist(v), g = twist(w);
  CHECK(dist(compose(tensor_mor(f, identity(w)), tensor_mor(identity(v), g)), tensor_mor(f, g)) < 1e-14);
  auto fg = tensor_mor(braiding(v, w), f);
  CHECK(fg.matrix().rows() == 8);
  CHECK(fg.matrix().cols() == 8);
}

TEST_CASE("braiding at r=2 on V x V") {
  GlobalParams p(2);
  const cplx a(0.3, 0.1);
  auto v = verma(p, a);
  Mat c = braiding(v, v).matrix();
  CHECK(std::abs(c(0, 0) - qpow(p, (a + 1.0) * (a + 1.0) / 2.0)) < 1e-12);
  CHECK(std::abs(c(3, 3) - qpow(p, (a - 1.0) * (a - 1.0) / 2.0)) < 1e-12);
  CHECK(std::abs(c(1, 2) - qpow(p, (a + 1.0) * (a - 1.0) / 2.0)) < 1e-12);
  CHECK(std::abs(c(2, 2) - qpow(p, (a + 1.0) * (a - 1.0) / 2.0) * qbracket(p, 1.0 - a)) < 1e-12);
}

TEST_CASE("braiding on highest weight vectors and with the unit") {
  GlobalParams p(3);
  const cplx a = 0.4, b(1.2, -0.3);
  auto v = verma(p, a), w = verma(p, b);
  Mat c = braiding(v, w).matrix();
  CHECK(std::abs(c(0, 0) - qpow(p, (a + 2.0) * (b + 2.0) / 2.0)) < 1e-12);
  auto one = unit_module(p);
  CHECK(dist(braiding(one, w), Mat::Identity(3, 3)) < 1e-14);
  CHECK(dist(braiding_inv(one, w), Mat::Identity(3, 3)) < 1e-14);
}

TEST_CASE("braiding inverse and naturality") {
  for (int r : {2, 3, 4}) {
    GlobalParams p(r);
    auto v = verma(p, cplx(0.3, 0.2)), w = verma(p, 1.45);
    auto c = braiding(v, w);
    CHECK(dist(compose(braiding_inv(v, w), c), identity(c.dom())) < 1e-9);
    CHECK(dist(compose(c, braiding_inv(v, w)), identity(c.cod())) < 1e-9);
    CHECK(linearity_residual(c) < 1e-9);
  }
}

TEST_CASE("duality maps") {
  GlobalParams p(3);
  auto v = verma(p, 0.4);
  Morphism zero = compose(ev_hat(v), coev(v));
  CHECK(std::abs(zero.matrix()(0, 0)) < 1e-12);
  auto s = simple_module(p, 1, 0);
  CHECK(std::abs(compose(ev_hat(s), coev(s)).matrix()(0, 0) + 1.0) < 1e-12);
  for (auto m : {v, s}) {
    CHECK(linearity_residual(ev(m)) < 1e-10);
    CHECK(linearity_residual(coev(m)) < 1e-10);
    CHECK(linearity_residual(ev_hat(m)) < 1e-10);
    CHECK(linearity_residual(coev_hat(m)) < 1e-10);
  }
}

TEST_CASE("twist") {
  GlobalParams p2(2);
  auto v2 = verma(p2, 2.0);
  CHECK(std::abs(scalar_of(twist(v2)).value - std::exp(cplx(0, 3 * std::acos(-1.0) / 4))) < 1e-12);
  CHECK(dist(twist(unit_module(p2)), Mat::Identity(1, 1)) < 1e-14);
  for (int r : {2, 3, 5}) {
    GlobalParams p(r);
    const cplx a(0.27, -0.4);
    auto v = verma(p, a);
    CHECK(std::abs(scalar_of(twist(v)).value - theta(p, a)) < 1e-10);
    CHECK(std::abs(scalar_of(twist(dual_module(v))).value - theta(p, a)) < 1e-10);
    CHECK(dist(compose(twist_inv(v), twist(v)), identity(v)) < 1e-10);
    CHECK(dist(ptr_right(braiding(v, v)), twist(v)) < 1e-10);
  }
}

TEST_CASE("partial traces") {
  GlobalParams p(2);
  auto v = verma(p, 0.4), w = verma(p, 1.3);
  auto vv = tensor_module(v, v);
  CHECK(ptr_right(identity(vv), v, v).matrix().cwiseAbs().maxCoeff() < 1e-12);
  auto vw = tensor_module(v, w);
  auto vwv = tensor_module(vw, v);
  Mat m = Mat::Random(vwv->dim(), vwv->dim());
  Morphism f(vwv, vwv, m);
  auto wv = tensor_module(w, v);
  Morphism a = ptr_right(ptr_left(f, v, wv), w, v);
  Morphism b = ptr_left(ptr_right(f, vw, v), v, w);
  CHECK(dist(a, b) < 1e-12);
}

TEST_CASE("scalar extraction") {
  GlobalParams p(3);
  auto v = verma(p, 0.4);
  auto s = scalar_of(identity(v));
  CHECK(std::abs(s.value - 1.0) < 1e-15);
  CHECK(s.residual == 0);
  CHECK_THROWS_AS(scalar_of(braiding(v, v)), numerical_error);
}

TEST_CASE("pivotal structure is a module map") {
  GlobalParams p(3);
  CHECK(linearity_residual(pivotal(verma(p, cplx(0.2, 0.5)))) < 1e-10);
}
