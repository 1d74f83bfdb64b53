#include <doctest.h>

#include "fixtures.hpp"
#include "setcat/harness.hpp"
#include "setcat/relation.hpp"

using namespace setcat;

TEST_CASE("saturation closes under equal replacements") {
  Family f = fixtures::fam1();
  SigmaSetoid s = sigma(f);
  Relation r = saturate(s.setoid, {{s.pos(0, 0), s.pos(2, 0)}});
  // (i0,a) = (i1,a'), so the saturated set also pairs (i1,a') with (i2,c)
  CHECK(r.pairs.size() == 2);
  CHECK(r.pairs.count({s.pos(1, 0), s.pos(2, 0)}) == 1);
  CHECK(check_saturated(r).ok());
}

TEST_CASE("saturate is idempotent and monotone") {
  Family f = fixtures::fam1();
  SigmaSetoid s = sigma(f);
  Relation r = saturate(s.setoid, {{s.pos(0, 0), s.pos(2, 0)},
                                   {s.pos(0, 1), s.pos(0, 1)}});
  std::vector<std::pair<int, int>> again(r.pairs.begin(), r.pairs.end());
  CHECK(rel_eq(saturate(s.setoid, again), r));
  Relation smaller = saturate(s.setoid, {{s.pos(0, 0), s.pos(2, 0)}});
  for (const auto& p : smaller.pairs) CHECK(r.pairs.count(p) == 1);
}

TEST_CASE("unsaturated relations are reported with the missing pair") {
  Setoid base({"x", "y", "z"}, {{0, 1}});
  Relation r;
  r.base = base;
  r.pairs.emplace(0, 2);
  Report rep = check_saturated(r);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations[0].law == "saturation");
  CHECK(rep.violations[0].witness.find("(y,z)") != std::string::npos);
  CHECK_THROWS_AS(saturate(base, {{0, 9}}), malformed_input);
}

TEST_CASE("dom and ran pick out one representative per class") {
  Family f = fixtures::fam1();
  SigmaSetoid s = sigma(f);
  Relation r = saturate(s.setoid, {{s.pos(0, 0), s.pos(2, 0)}});
  CHECK(rel_dom(r).part().size() == 1);
  CHECK(rel_ran(r).part().size() == 1);
  CHECK(dot_in(s.pos(1, 0), rel_dom(r)));
  CHECK_FALSE(dot_in(s.pos(0, 1), rel_dom(r)));
}

TEST_CASE("functionality is up to the base equality") {
  Setoid base({"x", "y", "z"}, {{1, 2}});
  Relation ok = saturate(base, {{0, 1}, {0, 2}});  // y = z, still functional
  CHECK(is_functional(ok));
  Setoid disc = Setoid::discrete({"x", "y", "z"});
  Relation bad = saturate(disc, {{0, 1}, {0, 2}});
  CHECK_FALSE(is_functional(bad));
}

TEST_CASE("relational composition is associative") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Setoid base = gen_setoid(5, seed);
    if (base.size() < 2) continue;
    std::mt19937_64 rng(seed * 977 + 3);
    auto random_rel = [&] {
      std::vector<std::pair<int, int>> raw;
      for (int k = 0; k < 4; ++k)
        raw.emplace_back(static_cast<int>(rng() % base.size()),
                         static_cast<int>(rng() % base.size()));
      return saturate(base, raw);
    };
    Relation r1 = random_rel(), r2 = random_rel(), r3 = random_rel();
    CHECK(rel_eq(rel_compose(rel_compose(r3, r2), r1),
                 rel_compose(r3, rel_compose(r2, r1))));
  }
}

TEST_CASE("composition of saturated relations stays saturated") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Setoid base = gen_setoid(5, seed);
    if (base.size() < 2) continue;
    std::mt19937_64 rng(seed + 51);
    std::vector<std::pair<int, int>> raw1, raw2;
    for (int k = 0; k < 3; ++k) {
      raw1.emplace_back(static_cast<int>(rng() % base.size()),
                        static_cast<int>(rng() % base.size()));
      raw2.emplace_back(static_cast<int>(rng() % base.size()),
                        static_cast<int>(rng() % base.size()));
    }
    CHECK(check_saturated(
              rel_compose(saturate(base, raw2), saturate(base, raw1)))
              .ok());
  }
}

TEST_CASE("graphs are saturated functional relations with the stated dom") {
  Family f = fixtures::fam1();
  SigmaSetoid s = sigma(f);
  ExtFun h(f.fibers[0], f.fibers[2], {0, 0});
  Relation g = graph_of(h, 0, 2, s);
  CHECK(check_saturated(g).ok());
  CHECK(is_functional(g));
  CHECK(subsetoid_eq(rel_dom(g), Subsetoid{s.injections[0]}));
  CHECK(subsetoid_leq(rel_ran(g), Subsetoid{s.injections[2]}).has_value());
  CHECK_THROWS_AS(graph_of(h, 1, 2, s), domain_mismatch);
}

TEST_CASE("the identity relation is the saturated diagonal") {
  Family f = fixtures::fam1();
  SigmaSetoid s = sigma(f);
  Relation idr = identity_relation(0, s);
  CHECK(idr.pairs.size() == 8);  // two 2-element classes, 4 pairs each
  CHECK(is_functional(idr));
  CHECK(rel_eq(idr, graph_of(ExtFun::identity(f.fibers[0]), 0, 0, s)));
  // neutral for composition with graphs out of i0
  ExtFun h(f.fibers[0], f.fibers[2], {0, 0});
  Relation g = graph_of(h, 0, 2, s);
  CHECK(rel_eq(rel_compose(g, idr), g));
}

TEST_CASE("membership oracle agrees with pair-set equality") {
  Family f = fixtures::fam1();
  SigmaSetoid s = sigma(f);
  std::mt19937_64 rng(12);
  std::vector<Relation> rels;
  for (int k = 0; k < 12; ++k) {
    std::vector<std::pair<int, int>> raw;
    for (int p = 0; p < 3; ++p)
      raw.emplace_back(static_cast<int>(rng() % s.setoid.size()),
                       static_cast<int>(rng() % s.setoid.size()));
    rels.push_back(saturate(s.setoid, raw));
  }
  for (const auto& a : rels)
    for (const auto& b : rels) CHECK(rel_eq(a, b) == oracle_rel_eq(a, b));
}
