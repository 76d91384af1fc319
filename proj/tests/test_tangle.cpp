#include "doctest.h"
#include "rtcalc/tangle.hpp"

using namespace rtcalc;

namespace {

const auto up = Orientation::up;
const auto down = Orientation::down;

TangleDiagram one_color(const GlobalParams& p, std::vector<Slice> slices, StrandState bottom) {
  TangleDiagram d{p, {}, std::move(bottom), std::move(slices), {}, std::nullopt};
  d.colors.add("a", ModuleLabel::verma(0.4));
  return d;
}

}  // namespace

TEST_CASE("a single identity slice is a (1,1)-tangle") {
  auto d = one_color(GlobalParams(2), {{{PieceKind::id, ""}}}, {{"a", up}});
  d.top = propagate(d.bottom, d.slices[0], d.colors);
  CHECK(d.top == d.bottom);
  CHECK(validate(d).empty());
  d.top = {{"a", Orientation::down}};
  CHECK_FALSE(validate(d).empty());
}

TEST_CASE("typing errors") {
  GlobalParams p(2);
  SUBCASE("cap on two up strands") {
    auto d = one_color(p, {{{PieceKind::cap_ev, ""}}}, {{"a", up}, {"a", up}});
    auto errs = validate(d);
    REQUIRE(errs.size() == 1);
    CHECK(errs[0].slice == 0);
    CHECK(errs[0].position == 0);
    CHECK(errs[0].message.find("orientation mismatch") != std::string::npos);
    CHECK_THROWS_AS(require_valid(d), domain_error);
  }
  SUBCASE("slice arity") {
    auto d = one_color(p, {{{PieceKind::id, ""}}}, {{"a", up}, {"a", up}});
    CHECK_FALSE(validate(d).empty());
  }
  SUBCASE("unknown color") {
    auto d = one_color(p, {{{PieceKind::cup_coev, "zz"}}}, {});
    CHECK_FALSE(validate(d).empty());
  }
  SUBCASE("cap joining two colors") {
    auto d = one_color(p, {{{PieceKind::cap_ev, ""}}}, {{"a", down}, {"b", up}});
    d.colors.add("b", ModuleLabel::verma(0.7));
    auto errs = validate(d);
    REQUIRE_FALSE(errs.empty());
    CHECK(errs[0].message.find("color mismatch") != std::string::npos);
  }
}

TEST_CASE("hopf closure has two components and writhe 2") {
  GlobalParams p(2);
  auto b = catalog_braid("hopf", p, {ModuleLabel::verma(0.4), ModuleLabel::verma(1.7)});
  auto link = close_braid(b, std::nullopt);
  CHECK(validate(link).empty());
  CHECK(link.bottom.empty());
  CHECK(link.top.empty());
  auto info = components(link);
  REQUIRE(info.components.size() == 2);
  CHECK(info.writhe == 2);
  CHECK(info.components[0].self_writhe == 0);
  CHECK(info.components[1].self_writhe == 0);
}

TEST_CASE("catalog writhes and components") {
  GlobalParams p(3);
  const std::vector<ModuleLabel> c = {ModuleLabel::verma(0.4)};
  auto info = [&](const std::string& name) { return components(close_braid(catalog_braid(name, p, c), std::nullopt)); };
  CHECK(info("unknot").components.size() == 1);
  CHECK(info("unknot").crossings == 0);
  CHECK(info("trefoil").components.size() == 1);
  CHECK(info("trefoil").writhe == 3);
  CHECK(info("trefoil").components[0].self_writhe == 3);
  CHECK(info("figure8").writhe == 0);
  CHECK(info("figure8").crossings == 4);
  CHECK(info("chain3").components.size() == 3);
  CHECK(info("connectsum(trefoil,figure8)").components.size() == 1);
  CHECK(info("connectsum(trefoil,figure8)").writhe == 3);
  CHECK_THROWS_AS(catalog("granny"), domain_error);
  CHECK(catalog("chain3").components == 3);
}

TEST_CASE("braids") {
  GlobalParams p(2);
  ColorTable t;
  t.add("a", ModuleLabel::verma(0.4));
  auto id = from_braid(p, t, {}, 2, {"a", "a"});
  CHECK(id.slices.empty());
  CHECK(id.top == id.bottom);
  auto tre = from_braid(p, t, {1, 1, 1}, 2, {"a", "a"});
  CHECK(tre.slices.size() == 3);
  CHECK(components(tre).crossings == 3);
  CHECK(braid_permutation({1, 1, 1}, 2) == std::vector<int>{1, 0});
  CHECK(braid_permutation({1, -1}, 2) == std::vector<int>{0, 1});
  CHECK(braid_cycles({{1, -2, 1, -2}, 3}).size() == 1);
  CHECK(braid_cycles({{1, 1, 2, 2}, 3}).size() == 3);
  CHECK_THROWS_AS(from_braid(p, t, {2}, 2, {"a", "a"}), domain_error);
  CHECK_THROWS_AS(from_braid(p, t, {0}, 2, {"a", "a"}), domain_error);
}

TEST_CASE("braids with mixed colors on one component are rejected") {
  GlobalParams p(2);
  ColorTable t;
  t.add("a", ModuleLabel::verma(0.4));
  t.add("b", ModuleLabel::verma(0.7));
  auto b = from_braid(p, t, {1}, 2, {"a", "b"});
  CHECK_THROWS_AS(components(close_braid(b, std::nullopt)), domain_error);
}

TEST_CASE("closures") {
  GlobalParams p(2);
  const std::vector<ModuleLabel> c = {ModuleLabel::verma(0.4), ModuleLabel::verma(1.7)};
  auto s = close_braid(catalog_braid("hopf", p, c), 1);
  CHECK(validate(s).empty());
  REQUIRE(s.bottom.size() == 1);
  CHECK(s.bottom == s.top);
  CHECK(s.colors.at(s.bottom[0].color) == ModuleLabel::verma(0.4));
  auto u = close_braid(catalog_braid("unknot", p, c), std::nullopt);
  CHECK(u.bottom.empty());
  CHECK(components(u).components.size() == 1);
  auto t = close_braid(catalog_braid("trefoil", p, c), 1);
  CHECK(t.bottom.size() == 1);
  CHECK(components(t).writhe == 3);
}

TEST_CASE("serialization round trip") {
  GlobalParams p(3);
  auto d = close_braid(catalog_braid("figure8", p, {ModuleLabel::verma({0.3, 0.1})}), 2);
  const std::string text = serialize(d);
  auto back = parse_diagram(text);
  CHECK(serialize(back) == text);
  CHECK(back.top == d.top);
  CHECK(back.slices.size() == d.slices.size());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_diagram("{"), domain_error);
  CHECK_THROWS_AS(parse_diagram(R"({"r":2})"), domain_error);
  CHECK_THROWS_AS(parse_diagram(R"({"r":1,"colors":[],"bottom":[],"slices":[]})"), domain_error);
  CHECK_THROWS_AS(parse_diagram(R"({"r":2,"colors":[{"id":"a","kind":"verma","alpha":[0.4,0]}],
      "bottom":[["a","up"],["a","up"]],"slices":[[{"op":"capL"}]]})"),
                  domain_error);
  CHECK_THROWS_AS(parse_diagram(R"({"r":2,"colors":[],"bottom":[],"slices":[[{"op":"bogus"}]]})"), domain_error);
}

TEST_CASE("braid input format") {
  auto in = parse_input(R"({"r":2,"braid":[1,1],"strands":2,
      "colors":[{"id":"x","kind":"verma","alpha":[0.4,0]},{"id":"y","kind":"verma","alpha":[1.7,0]}],"cut":1})");
  CHECK(in.is_braid);
  REQUIRE(in.cut);
  CHECK(*in.cut == 1);
  CHECK(in.diagram.braid->letters == std::vector<int>{1, 1});
}
