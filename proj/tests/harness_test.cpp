#include <doctest.h>

#include "setcat/constructions.hpp"
#include "setcat/harness.hpp"

using namespace setcat;

TEST_CASE("generated setoids are deterministic per seed") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Setoid a = gen_setoid(6, seed);
    Setoid b = gen_setoid(6, seed);
    CHECK(a == b);
    CHECK(a.size() >= 1);
    CHECK(a.size() <= 6);
  }
  CHECK(gen_setoid(0, 3).size() == 0);
  CHECK(gen_setoid(6, 1) != gen_setoid(6, 2));
}

TEST_CASE("singleton bounds give a singleton family") {
  Family f = gen_family(1, 1, 0);
  CHECK(f.index.size() == 1);
  CHECK(f.fibers.size() == 1);
  CHECK(f.fibers[0].size() <= 1);
  CHECK(check_family(f).ok());
}

TEST_CASE("generated families are deterministic and valid") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Family f = gen_family(4, 3, seed);
    Family g = gen_family(4, 3, seed);
    CHECK(f.index == g.index);
    REQUIRE(f.fibers.size() == g.fibers.size());
    for (size_t i = 0; i < f.fibers.size(); ++i)
      CHECK(f.fibers[i] == g.fibers[i]);
    for (const auto& [key, t] : f.transports)
      CHECK(g.transport(key.first, key.second).table() == t.table());
    CHECK(check_family(f).ok());
    CHECK(check_sigma_equivalence(f).ok());
    CHECK(check_injection_property(f).ok());
  }
}

TEST_CASE("fibers of equal indices have matching class structure") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Family f = gen_family(4, 3, seed);
    for (int i = 0; i < f.index.size(); ++i)
      for (int j = 0; j < f.index.size(); ++j)
        if (f.index.related(i, j))
          CHECK(f.fibers[i].class_count() == f.fibers[j].class_count());
  }
}

TEST_CASE("the membership oracle is reflexive and symmetric") {
  Family f = gen_family(3, 3, 11);
  SigmaSetoid s = sigma(f);
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    std::vector<std::pair<int, int>> raw1, raw2;
    for (int p = 0; p < 3 && s.setoid.size() > 0; ++p) {
      raw1.emplace_back(static_cast<int>(rng() % s.setoid.size()),
                        static_cast<int>(rng() % s.setoid.size()));
      raw2.emplace_back(static_cast<int>(rng() % s.setoid.size()),
                        static_cast<int>(rng() % s.setoid.size()));
    }
    Relation a = saturate(s.setoid, raw1);
    Relation b = saturate(s.setoid, raw2);
    CHECK(oracle_rel_eq(a, a));
    CHECK(oracle_rel_eq(a, b) == oracle_rel_eq(b, a));
    CHECK(oracle_rel_eq(a, b) == rel_eq(a, b));
  }
}

TEST_CASE("a raw generator equals its saturation under the oracle") {
  Family f = gen_family(3, 3, 8);
  SigmaSetoid s = sigma(f);
  if (s.setoid.size() == 0) return;
  Relation r = saturate(s.setoid, {{0, s.setoid.size() - 1}});
  Relation again = saturate(
      s.setoid, std::vector<std::pair<int, int>>(r.pairs.begin(),
                                                 r.pairs.end()));
  CHECK(oracle_rel_eq(r, again));
}

TEST_CASE("spot check: generated families support the full pipeline") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Family f = gen_family(3, 2, seed);
    CHECK(check_iso(f).ok());
    BuiltC bc = build_C(f);
    EaToHf hf = ea_to_hf(bc.cat);
    CHECK(check_hom_identities(hf.hf).ok());
    HfToEa back = hf_to_ea(hf.hf);
    CHECK(check_ea_iso(bc.cat, back.ea,
                       roundtrip_ea_certificate(bc.cat, hf, back))
              .ok());
  }
}
