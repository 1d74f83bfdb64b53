#include <doctest.h>

#include "fixtures.hpp"
#include "setcat/harness.hpp"
#include "setcat/setoid.hpp"

using namespace setcat;

TEST_CASE("setoid closure from generators") {
  Setoid s({"a", "b", "c", "d"}, {{0, 1}, {1, 2}});
  CHECK(s.related(0, 2));  // transitivity through b
  CHECK(s.related(2, 0));
  CHECK(s.related(3, 3));
  CHECK_FALSE(s.related(0, 3));
  CHECK(s.class_count() == 2);
}

TEST_CASE("check_setoid reports every missing law instance") {
  RawSetoid raw{{"x", "y", "z"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}}};
  Report r = check_setoid(raw);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.size() == 1);
  CHECK(r.violations[0].law == "symmetry");
  CHECK(r.violations[0].witness == "(y,x)");

  RawSetoid closed{{"x", "y"}, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}};
  CHECK(check_setoid(closed).ok());

  RawSetoid missing_refl{{"x"}, {}};
  Report r2 = check_setoid(missing_refl);
  REQUIRE(r2.violations.size() == 1);
  CHECK(r2.violations[0].law == "reflexivity");
}

TEST_CASE("check_setoid reports transitivity gaps") {
  RawSetoid raw{{"x", "y", "z"},
                {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}, {1, 2}, {2, 1}}};
  Report r = check_setoid(raw);
  bool has_trans = false;
  for (const auto& v : r.violations)
    if (v.law == "transitivity") has_trans = true;
  CHECK(has_trans);
}

TEST_CASE("malformed raw setoids throw") {
  CHECK_THROWS_AS(check_setoid(RawSetoid{{"a", "a"}, {}}), malformed_input);
  CHECK_THROWS_AS(check_setoid(RawSetoid{{"a"}, {{0, 3}}}), malformed_input);
  CHECK_THROWS_AS(Setoid({"a", "a"}, {}), malformed_input);
}

TEST_CASE("extensional functions") {
  Setoid src({"a", "b"}, {{0, 1}});
  Setoid dst = Setoid::discrete({"u", "v"});
  CHECK_THROWS_AS(ExtFun(src, dst, {0}), malformed_input);      // not total
  CHECK_THROWS_AS(ExtFun(src, dst, {0, 5}), malformed_input);   // range
  ExtFun bad(src, dst, {0, 1});
  CHECK_FALSE(check_extensional(bad).ok());  // a = b but images differ
  ExtFun good(src, dst, {0, 0});
  CHECK(check_extensional(good).ok());
  CHECK(ext_eq(good, good));
  CHECK_THROWS_AS(ext_eq(good, ExtFun::identity(src)), domain_mismatch);
}

TEST_CASE("composition respects tables") {
  Setoid a = Setoid::discrete({"0", "1"});
  ExtFun f(a, a, {1, 0});
  CHECK(ext_eq(compose(f, f), ExtFun::identity(a)));
}

TEST_CASE("subsetoid membership and inclusion") {
  auto s = fixtures::sub1();
  CHECK(check_subsetoid(s.u).ok());
  CHECK(check_subsetoid(s.v).ok());
  CHECK(dot_in(0, s.u));        // x
  CHECK(dot_in(1, s.u));        // y = x
  CHECK_FALSE(dot_in(2, s.u));  // z
  CHECK_THROWS_AS(dot_in(7, s.u), malformed_input);

  auto k = subsetoid_leq(s.u, s.v);
  REQUIRE(k.has_value());
  // the witness commutes with the injections
  CHECK(s.ambient.related(s.v.inj((*k)(0)), s.u.inj(0)));
  CHECK_FALSE(subsetoid_leq(s.v, s.u).has_value());
  CHECK_FALSE(subsetoid_eq(s.u, s.v));
  CHECK(subsetoid_eq(s.u, s.u));
}

TEST_CASE("subsetoid inclusion witness is deterministic") {
  auto s = fixtures::sub1();
  auto k1 = subsetoid_leq(s.u, s.v);
  auto k2 = subsetoid_leq(s.u, s.v);
  REQUIRE(k1.has_value());
  REQUIRE(k2.has_value());
  CHECK(ext_eq(*k1, *k2));
}

TEST_CASE("subsetoid order is a preorder with dot-eq its kernel") {
  // random subsetoids over random ambient setoids
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Setoid amb = gen_setoid(5, seed);
    if (amb.size() == 0) continue;
    std::vector<Subsetoid> subs;
    for (int take = 1; take <= amb.size(); ++take) {
      std::vector<std::string> names;
      std::vector<int> table;
      for (int e = 0; e < take; ++e) {
        names.push_back("p" + std::to_string(e));
        table.push_back(e);
      }
      subs.push_back(
          Subsetoid{ExtFun(Setoid::discrete(names), amb, table)});
    }
    for (const auto& a : subs) CHECK(subsetoid_leq(a, a).has_value());
    for (const auto& a : subs)
      for (const auto& b : subs)
        for (const auto& c : subs)
          if (subsetoid_leq(a, b) && subsetoid_leq(b, c))
            CHECK(subsetoid_leq(a, c).has_value());
  }
}

TEST_CASE("product setoid equality is componentwise") {
  Setoid a({"a", "b"}, {{0, 1}});
  Setoid b = Setoid::discrete({"u", "v"});
  Setoid p = product_setoid(a, b);
  CHECK(p.size() == 4);
  CHECK(p.related(0, 2));        // (a,u) = (b,u)
  CHECK_FALSE(p.related(0, 1));  // (a,u) != (a,v)
  CHECK(p.class_count() == 2);
}
