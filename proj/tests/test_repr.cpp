#include "doctest.h"
#include "rtcalc/repr.hpp"

using namespace rtcalc;

namespace {

bool near(cplx a, cplx b, double tol = 1e-10) { return std::abs(a - b) < tol; }

bool same_multiset(std::vector<cplx> a, std::vector<cplx> b) {
  if (a.size() != b.size()) return false;
  a = sorted_weights(a);
  b = sorted_weights(b);
  for (size_t i = 0; i < a.size(); ++i)
    if (!near(a[i], b[i], 1e-9)) return false;
  return true;
}

}  // namespace

TEST_CASE("verma module at r=2, alpha=2") {
  GlobalParams p(2);
  auto v = verma(p, 2.0);
  REQUIRE(v->dim() == 2);
  CHECK(near(v->weights()[0], 3.0));
  CHECK(near(v->weights()[1], 1.0));
  CHECK(near(v->E()(0, 1), -1.0));
  CHECK(check_relations(*v).max() < 1e-10);
}

TEST_CASE("verma highest weight and lowest vector") {
  for (int r : {2, 3, 5}) {
    GlobalParams p(r);
    auto v = verma(p, cplx(0.37, -0.2));
    CHECK(v->E().col(0).norm() < 1e-14);
    CHECK(v->F().col(r - 1).norm() < 1e-14);
    CHECK(check_relations(*v).max() < 1e-10);
  }
  CHECK(verma(GlobalParams(3), 0.5)->F().col(2).norm() < 1e-14);
}

TEST_CASE("simple modules") {
  GlobalParams p3(3), p2(2);
  auto s = simple_module(p3, 1, 0);
  CHECK(same_multiset(s->weights(), {1.0, -1.0}));
  auto u = simple_module(p2, 0, 0);
  REQUIRE(u->dim() == 1);
  CHECK(u->E().norm() == 0);
  CHECK(u->F().norm() == 0);
  CHECK(near(u->weights()[0], 0.0));
  auto s02 = simple_module(p3, 0, 2);
  REQUIRE(s02->dim() == 1);
  CHECK(near(s02->weights()[0], 6.0));
  CHECK(check_relations(*s).max() < 1e-10);
  CHECK_THROWS_AS(simple_module(p3, 2, 0), domain_error);
  CHECK_THROWS_AS(simple_module(p3, -1, 0), domain_error);
}

TEST_CASE("dual modules") {
  GlobalParams p(2);
  auto v = verma(p, 2.0);
  CHECK(same_multiset(dual_module(v)->weights(), {-3.0, -1.0}));
  auto one = unit_module(p);
  CHECK(same_multiset(dual_module(one)->weights(), {0.0}));
  auto w = verma(GlobalParams(4), cplx(0.3, 0.2));
  CHECK(same_multiset(dual_module(dual_module(w))->weights(), w->weights()));
  CHECK(check_relations(*dual_module(w)).max() < 1e-10);
}

TEST_CASE("tensor modules") {
  GlobalParams p(2);
  auto a = verma(p, 0.3), b = verma(p, cplx(1.2, 0.4));
  auto one = unit_module(p);
  auto ua = tensor_module(one, a);
  CHECK((ua->E() - a->E()).norm() < 1e-14);
  CHECK((ua->F() - a->F()).norm() < 1e-14);
  std::vector<cplx> sums;
  for (cplx x : a->weights())
    for (cplx y : b->weights()) sums.push_back(x + y);
  auto ab = tensor_module(a, b);
  CHECK(same_multiset(ab->weights(), sums));
  CHECK(check_relations(*ab).max() < 1e-10);
  auto aa = tensor_module(a, a);
  int top = 0;
  for (cplx w : aa->weights()) top += near(w, 2.6, 1e-9);
  CHECK(top == 1);
}

TEST_CASE("degree") {
  GlobalParams p(3);
  auto d = degree(*verma(p, 0.4));
  REQUIRE(d);
  CHECK(near(*d, 0.4));
  auto du = degree(*unit_module(p));
  REQUIRE(du);
  CHECK(near(*du, 0.0));
  WeightModule mixed(p, ModuleLabel::unit(), {0.0, 1.0}, Mat::Zero(2, 2), Mat::Zero(2, 2));
  CHECK_FALSE(degree(mixed).has_value());
}

TEST_CASE("highest weight vectors") {
  GlobalParams p2(2), p3(3);
  CHECK(highest_weight_vectors(*verma(p3, 0.4), 0.4 + 2).size() == 1);
  CHECK(highest_weight_vectors(*verma(p2, 1.0), 0.0).size() == 1);
  CHECK(highest_weight_vectors(*verma(p2, 0.4), 0.4 - 1).empty());
  auto v = verma(p3, 0.3);
  auto vv = tensor_module(v, v);
  for (int i = 0; i < 3; ++i) CHECK(highest_weight_vectors(*vv, 0.6 + 2 * i).size() == 1);
}

TEST_CASE("characters") {
  GlobalParams p(4);
  const cplx a(0.2, 0.1);
  std::vector<cplx> expect;
  for (int i = 0; i < 4; ++i) expect.push_back(a + 3.0 - 2.0 * i);
  CHECK(same_multiset(character(*verma(p, a)), expect));
  CHECK(same_multiset(character(*unit_module(p)), {0.0}));
}

TEST_CASE("module labels") {
  CHECK(ModuleLabel::verma(0.4) == ModuleLabel::verma(0.4));
  CHECK_FALSE(ModuleLabel::verma(0.4) == ModuleLabel::verma(0.5));
  auto t = ModuleLabel::tensor(ModuleLabel::unit(), ModuleLabel::verma(0.4));
  CHECK(t.factors().size() == 1);
}
