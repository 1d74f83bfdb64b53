#include <doctest.h>

#include "fixtures.hpp"
#include "setcat/family.hpp"

using namespace setcat;

TEST_CASE("the example family satisfies the transport laws") {
  Family f = fixtures::fam1();
  CHECK(check_family(f).ok());
}

TEST_CASE("broken identity transport is reported as F1") {
  Family f = fixtures::fam1();
  // swap on the diagonal of i0
  f.transports.at({0, 0}) = ExtFun(f.fibers[0], f.fibers[0], {1, 0});
  Report r = check_family(f);
  REQUIRE_FALSE(r.ok());
  bool f1 = false, f3 = false;
  for (const auto& v : r.violations) {
    if (v.law == "F1") f1 = true;
    if (v.law == "F3") f3 = true;
  }
  CHECK(f1);
  CHECK(f3);  // composing through the broken diagonal breaks paths too
}

TEST_CASE("transports stored for unrelated pairs are reported as F2") {
  Family f = fixtures::fam1();
  f.transports.emplace(std::make_pair(0, 2),
                       ExtFun(f.fibers[0], f.fibers[2], {0, 0}));
  Report r = check_family(f);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].law == "F2");
}

TEST_CASE("broken composition is reported as F3 with the witness triple") {
  Family f = fixtures::fam1();
  f.transports.at({1, 0}) = ExtFun(f.fibers[1], f.fibers[0], {1, 0});
  Report r = check_family(f);
  bool found = false;
  for (const auto& v : r.violations)
    if (v.law == "F3" && v.witness.find("(i0,i1,i0)") != std::string::npos)
      found = true;
  CHECK(found);
}

TEST_CASE("missing transports throw naming the pair") {
  Family f = fixtures::fam1();
  f.transports.erase({1, 0});
  CHECK_THROWS_WITH_AS(static_cast<void>(check_family(f)),
                       "missing transport i1->i0", incomplete_input);
}

TEST_CASE("complete_transports fills identities and composite paths") {
  Family f;
  f.index = Setoid({"i0", "i1", "i2"}, {{0, 1}, {1, 2}});
  for (int i = 0; i < 3; ++i)
    f.fibers.push_back(Setoid::discrete({"p" + std::to_string(i),
                                         "q" + std::to_string(i)}));
  f.transports.emplace(std::make_pair(0, 1),
                       ExtFun(f.fibers[0], f.fibers[1], {1, 0}));
  f.transports.emplace(std::make_pair(1, 0),
                       ExtFun(f.fibers[1], f.fibers[0], {1, 0}));
  f.transports.emplace(std::make_pair(1, 2),
                       ExtFun(f.fibers[1], f.fibers[2], {0, 1}));
  f.transports.emplace(std::make_pair(2, 1),
                       ExtFun(f.fibers[2], f.fibers[1], {0, 1}));
  complete_transports(f);
  CHECK(f.has_transport(0, 2));  // composed through i1
  CHECK(f.has_transport(2, 0));
  CHECK(check_family(f).ok());
  CHECK(ext_eq(f.transport(0, 2),
               compose(f.transport(1, 2), f.transport(0, 1))));
}

TEST_CASE("sum of the example family has 5 elements in 3 classes") {
  Family f = fixtures::fam1();
  SigmaSetoid s = sigma(f);
  CHECK(s.setoid.size() == 5);
  CHECK(s.setoid.class_count() == 3);
  // (i0,a) = (i1,a'), (i0,b) = (i1,b'), (i2,c) alone
  CHECK(s.setoid.related(s.pos(0, 0), s.pos(1, 0)));
  CHECK(s.setoid.related(s.pos(0, 1), s.pos(1, 1)));
  CHECK_FALSE(s.setoid.related(s.pos(0, 0), s.pos(0, 1)));
  CHECK_FALSE(s.setoid.related(s.pos(0, 0), s.pos(2, 0)));
  CHECK(s.setoid.name(s.pos(0, 0)) == "(i0,a)");
}

TEST_CASE("sigma rejects invalid families") {
  Family f = fixtures::fam1();
  f.transports.at({0, 0}) = ExtFun(f.fibers[0], f.fibers[0], {1, 0});
  CHECK_THROWS_AS(sigma(f), precondition_failed);
}

TEST_CASE("the sum relation is an equivalence relation by definition") {
  CHECK(check_sigma_equivalence(fixtures::fam1()).ok());
}

TEST_CASE("injections commute with transports") {
  CHECK(check_injection_property(fixtures::fam1()).ok());
}

TEST_CASE("universal map mediates a compatible cocone") {
  Family f = fixtures::fam1();
  SigmaSetoid s = sigma(f);
  Setoid target = Setoid::discrete({"t0", "t1"});
  std::vector<ExtFun> legs{ExtFun(f.fibers[0], target, {0, 1}),
                           ExtFun(f.fibers[1], target, {0, 1}),
                           ExtFun(f.fibers[2], target, {0})};
  ExtFun k = universal_map(f, s, target, legs);
  CHECK(check_extensional(k).ok());
  for (int i = 0; i < 3; ++i)
    CHECK(ext_eq(compose(k, s.injections[i]), legs[i]));
}

TEST_CASE("incompatible cocones are rejected with a witness") {
  Family f = fixtures::fam1();
  SigmaSetoid s = sigma(f);
  Setoid target = Setoid::discrete({"t0", "t1"});
  std::vector<ExtFun> legs{ExtFun(f.fibers[0], target, {0, 0}),
                           ExtFun(f.fibers[1], target, {1, 0}),
                           ExtFun(f.fibers[2], target, {0})};
  CHECK_THROWS_AS(universal_map(f, s, target, legs), incompatible_cocone);
}

TEST_CASE("subsetoid families extend to transport families") {
  Family f = fixtures::fam1();
  SigmaSetoid s = sigma(f);
  SubsetoidFamily down = check_down_family(f, s);
  CHECK(check_subsetoid_family(down).ok());
  Family up = hat_family(down);
  CHECK(check_family(up).ok());
  // the extended transports agree with the original ones
  for (const auto& [key, t] : f.transports)
    CHECK(ext_eq(up.transport(key.first, key.second), t));
}

TEST_CASE("non-extensional subsetoid assignments are rejected") {
  auto amb = Setoid({"x", "y", "z"}, {{0, 1}});
  SubsetoidFamily g;
  g.index = Setoid({"i0", "i1"}, {{0, 1}});
  g.assign.push_back(
      Subsetoid{ExtFun(Setoid::discrete({"u"}), amb, {0})});
  g.assign.push_back(
      Subsetoid{ExtFun(Setoid::discrete({"v"}), amb, {2})});
  CHECK_FALSE(check_subsetoid_family(g).ok());
  CHECK_THROWS_AS(hat_family(g), precondition_failed);
}
