#include <numbers>

#include "doctest.h"
#include "rtcalc/invariant.hpp"

using namespace rtcalc;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }
TangleDiagram cat(const GlobalParams& p, const std::string& name, std::vector<ModuleLabel> c) {
  return catalog_braid(name, p, c);
}

}  // namespace

TEST_CASE("unknot values") {
  for (int r : {2, 3, 4}) {
    GlobalParams p(r);
    auto v = close_braid(cat(p, "unknot", {ModuleLabel::verma(0.4)}), std::nullopt);
    CHECK(std::abs(scalar_of(eval_diagram(v)).value) < 1e-10);
  }
  GlobalParams p3(3);
  auto s = close_braid(cat(p3, "unknot", {ModuleLabel::simple(1, 0)}), std::nullopt);
  CHECK(rel(scalar_of(eval_diagram(s)).value, -1.0) < 1e-10);
}

TEST_CASE("open trefoil at r=2, alpha=2") {
  GlobalParams p(2);
  auto t = close_braid(cat(p, "trefoil", {ModuleLabel::verma(2.0)}), 1);
  const cplx v = scalar_of(eval_diagram(t)).value;
  CHECK(rel(v, -3.0 * std::exp(cplx(0, std::numbers::pi / 4))) < 1e-9);
  CHECK(rel(scalar_of(eval_diagram_bruteforce(t)).value, v) < 1e-9);
  CHECK(rel(trefoil_formula(p, 2.0, TrefoilVariant::cut_example), v) < 1e-9);
}

TEST_CASE("quantum dimensions") {
  GlobalParams p3(3);
  CHECK(std::abs(qdim(p3, ModuleLabel::verma(cplx(0.3, 0.4)))) < 1e-10);
  CHECK(rel(qdim(p3, ModuleLabel::unit()), 1.0) < 1e-12);
  CHECK(rel(qdim(p3, ModuleLabel::simple(1, 0)), -1.0) < 1e-10);
}

TEST_CASE("S' values") {
  GlobalParams p(2);
  CHECK(rel(s_prime(p, 0.0, 0.0), 2.0) < 1e-12);
  CHECK(rel(s_prime(p, 0.0, 2.0), -2.0) < 1e-12);
  CHECK(rel(s_prime_engine(p, 2.0, 0.0), 2.0) < 1e-9);
  CHECK(rel(s_prime_engine(p, 0.0, 2.0), -2.0) < 1e-9);
  GlobalParams p4(4);
  const cplx b(0.3, 0.2), a = 1.37;
  CHECK(rel(s_prime_engine(p4, b, a), s_prime(p4, b, a)) < 1e-9);
}

TEST_CASE("modified dimension") {
  GlobalParams p(3);
  const cplx eta = 0.37;
  CHECK(rel(mod_qdim(p, eta, eta), 1.0) < 1e-12);
  CHECK_THROWS_AS(mod_qdim(GlobalParams(2), eta, 2.0), domain_error);
  CHECK_THROWS_AS(mod_qdim(p, 1.0, 0.4), domain_error);
  const cplx a(0.41, 0.2), e2 = 0.71;
  CHECK(rel(mod_qdim(p, eta, a) / mod_qdim(p, e2, a), eta_ratio(p, eta, e2)) < 1e-10);
}

TEST_CASE("renormalized invariants") {
  GlobalParams p(3);
  const cplx eta = 0.3;
  auto u = renormalized(cat(p, "unknot", {ModuleLabel::verma(0.4)}), eta);
  CHECK(rel(u.value, mod_qdim(p, eta, 0.4)) < 1e-10);
  CHECK(u.cut_component == 0);

  GlobalParams p2(2);
  auto hopf = cat(p2, "hopf", {ModuleLabel::verma(0.4), ModuleLabel::verma(1.7)});
  auto h0 = renormalized(hopf, eta, 0), h1 = renormalized(hopf, eta, 1);
  CHECK(rel(h0.value, h1.value) < 1e-8);
  CHECK(rel(h0.value, mod_qdim(p2, eta, 0.4) * s_prime(p2, 1.7, 0.4)) < 1e-9);
  CHECK(h0.cut_id != h1.cut_id);

  auto t = renormalized(cat(p2, "trefoil", {ModuleLabel::verma(0.4)}), eta);
  CHECK(t.scalar_residual < 1e-7);
  CHECK(std::isfinite(t.value.real()));

  CHECK_THROWS_AS(renormalized(cat(p2, "trefoil", {ModuleLabel::verma(2.0)}), eta), domain_error);
  CHECK_THROWS_AS(renormalized(hopf, eta, 5), domain_error);
}

TEST_CASE("deframing a kink") {
  GlobalParams p(3);
  ColorTable t;
  t.add("a", ModuleLabel::verma(0.4));
  auto plain = from_braid(p, t, {}, 1, {"a"});
  auto kinked = from_braid(p, t, {1}, 2, {"a", "a"});
  const cplx eta = 0.37;
  CHECK(rel(deframed(plain, eta), deframed(kinked, eta)) < 1e-9);
  CHECK(rel(renormalized(kinked, eta).value, twist_scalar(p, ModuleLabel::verma(0.4)) * renormalized(plain, eta).value) <
        1e-9);
}

TEST_CASE("ambidexterity on random tangles") {
  GlobalParams p(3);
  for (auto c : {ModuleLabel::verma(0.3), ModuleLabel::simple(1, 0)})
    for (uint64_t seed = 0; seed < 5; ++seed) CHECK(check_ambidextrous(random_two_two(p, c, c, seed)).deviation < 1e-8);
}

TEST_CASE("connected sums") {
  GlobalParams p(2);
  auto a = ModuleLabel::verma(0.4);
  auto tre = cat(p, "trefoil", {a});
  CHECK(connect_sum_check(tre, tre, 0.3).residual < 1e-8);
  CHECK(connect_sum_check(tre, cat(p, "unknot", {a}), 0.3).residual < 1e-8);
}

TEST_CASE("multiplicity-free decomposition") {
  auto r3 = decompose_check(GlobalParams(3), 0.3);
  CHECK(r3.counts == std::vector<int>{1, 1, 1});
  CHECK(r3.stray == 0);
  CHECK(decompose_check(GlobalParams(2), 0.25).counts == std::vector<int>{1, 1});
  CHECK_THROWS_AS(decompose_check(GlobalParams(2), 0.5), domain_error);
}

TEST_CASE("figure-eight cut positions agree") {
  GlobalParams p(3);
  auto b = cat(p, "figure8", {ModuleLabel::verma(cplx(0.3, 0.1))});
  const cplx v1 = scalar_of(eval_diagram(close_braid(b, 1))).value;
  for (int k : {2, 3}) CHECK(rel(scalar_of(eval_diagram(close_braid(b, k))).value, v1) < 1e-8);
}

TEST_CASE("braid word [1,-1] evaluates to the identity") {
  GlobalParams p(3);
  ColorTable t;
  t.add("a", ModuleLabel::verma(0.4));
  t.add("b", ModuleLabel::verma(1.2));
  auto d = from_braid(p, t, {1, -1}, 2, {"a", "b"});
  Mat m = eval_diagram(d).matrix();
  CHECK((m - Mat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() < 1e-9);
}
