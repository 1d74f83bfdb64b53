#include <doctest.h>

#include "fixtures.hpp"
#include "setcat/constructions.hpp"

using namespace setcat;

namespace {

// Independent count of extensional maps between two setoids, up to
// pointwise equality of images, by brute force over all tables.
int count_map_classes(const Setoid& src, const Setoid& dst) {
  if (src.size() == 0) return 1;
  if (dst.size() == 0) return 0;
  std::set<std::vector<int>> classes;
  std::vector<int> t(src.size(), 0);
  while (true) {
    bool extensional = true;
    for (int x = 0; x < src.size() && extensional; ++x)
      for (int y = 0; y < src.size() && extensional; ++y)
        if (src.related(x, y) && !dst.related(t[x], t[y]))
          extensional = false;
    if (extensional) {
      std::vector<int> key;
      for (int v : t) key.push_back(dst.class_of(v));
      classes.insert(key);
    }
    int pos = src.size() - 1;
    while (pos >= 0 && t[pos] == dst.size() - 1) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  return static_cast<int>(classes.size());
}

}  // namespace

TEST_CASE("the map category of the example family has 8 arrow classes") {
  Family f = fixtures::fam1();
  BuiltC bc = build_C(f);
  CHECK(bc.cat.c0.class_count() == 2);
  CHECK(bc.cat.c1.class_count() == 8);
  CHECK(check_ea(bc.cat).ok());

  // independent derivation: one (dom class, cod class) pair contributes the
  // map classes between representative fibers
  int expected = 0;
  for (int ci = 0; ci < f.index.class_count(); ++ci)
    for (int cj = 0; cj < f.index.class_count(); ++cj)
      expected += count_map_classes(f.fibers[f.index.class_rep(ci)],
                                    f.fibers[f.index.class_rep(cj)]);
  CHECK(expected == 8);
  CHECK(bc.cat.c1.class_count() == expected);
}

TEST_CASE("arrows equal up to transport conjugation share a class") {
  Family f = fixtures::fam1();
  BuiltC bc = build_C(f);
  // (i0,i2){a->c,b->c} and (i1,i2){a'->c,b'->c} are the same arrow
  int e1 = bc.find_arrow(0, 2, {0, 0});
  int e2 = bc.find_arrow(1, 2, {0, 0});
  CHECK(bc.cat.c1.related(e1, e2));
  // different maps with the same signature are different arrows
  int e3 = bc.find_arrow(0, 0, {0, 1});
  int e4 = bc.find_arrow(0, 0, {1, 0});
  CHECK_FALSE(bc.cat.c1.related(e3, e4));
}

TEST_CASE("the relation category mirrors the map category") {
  Family f = fixtures::fam1();
  BuiltS bs = build_S(f);
  CHECK(bs.cat.c0.class_count() == 2);
  CHECK(bs.cat.c1.class_count() == 8);
  CHECK(check_ea(bs.cat).ok());
  for (const auto& [i, j, r] : bs.arrows) {
    CHECK(check_saturated(r).ok());
    CHECK(is_functional(r));
    CHECK(subsetoid_eq(rel_dom(r), Subsetoid{bs.sum.injections[i]}));
    CHECK(subsetoid_leq(rel_ran(r), Subsetoid{bs.sum.injections[j]})
              .has_value());
  }
}

TEST_CASE("graph and unique choice define mutually inverse functors") {
  Family f = fixtures::fam1();
  BuiltC bc = build_C(f);
  BuiltS bs = build_S(f);
  EAFunctor M = functor_M(bc, bs);
  EAFunctor N = functor_N(bs, bc);
  CHECK(check_ea_functor(M).ok());
  CHECK(check_ea_functor(N).ok());
  for (int e = 0; e < bc.cat.c1.size(); ++e)
    CHECK(bc.cat.c1.related(N.f1(M.f1(e)), e));
  for (int e = 0; e < bs.cat.c1.size(); ++e)
    CHECK(bs.cat.c1.related(M.f1(N.f1(e)), e));
  CHECK(check_iso(f).ok());
}

TEST_CASE("unique choice rejects non-functional and partial relations") {
  Family f = fixtures::fam1();
  BuiltS bs = build_S(f);
  Relation partial;
  partial.base = bs.sum.setoid;
  CHECK_THROWS_AS(unique_choice_table(bs, 0, 2, partial),
                  precondition_failed);
}

TEST_CASE("graphs compose and preserve identities as relations") {
  Family f = fixtures::fam1();
  BuiltC bc = build_C(f);
  CHECK(check_graph_laws(bc, sigma(f)).ok());
}

TEST_CASE("the fiber slice of setoids is an E-category") {
  Family f = fixtures::fam1();
  SetoidsECat d = setoids_ecat(f);
  CHECK(check_e(d.cat).ok());
  // Hom(i0,i0) has 4 maps, Hom(i2,i2) just the identity
  CHECK(d.cat.homs(0, 0).size() == 4);
  CHECK(d.cat.homs(2, 2).size() == 1);
}

TEST_CASE("a family is an E-functor out of its discrete index category") {
  Family f = fixtures::fam1();
  SetoidsECat d = setoids_ecat(f);
  EFunctor F = family_as_efunctor(f, d);
  CHECK(check_hf(F.src).ok());
  CHECK(check_e_functor(F).ok());
  // the unique arrow i0 -> i1 maps to the transport
  int arrow_image = F.hom_map[F.src.pidx(0, 1)](0);
  CHECK(d.tables[0 * 3 + 1][arrow_image] == f.transport(0, 1).table());
}

TEST_CASE("the full image is an HF-category with a coherent functor") {
  Family f = fixtures::fam1();
  SetoidsECat d = setoids_ecat(f);
  FullImage fi = full_image(family_as_efunctor(f, d));
  CHECK(check_hf(fi.image).ok());
  CHECK(check_hf_functor(fi.functor).ok());
}

TEST_CASE("the full image is the hom-family form of the map category") {
  Family f = fixtures::fam1();
  SetoidsECat d = setoids_ecat(f);
  FullImage fi = full_image(family_as_efunctor(f, d));
  BuiltC bc = build_C(f);
  EaToHf hf = ea_to_hf(bc.cat);
  CHECK(check_hf_iso(fi.image, hf.hf, full_image_to_hf_map(f, d, bc, hf))
            .ok());
}

TEST_CASE("builders reject invalid families up front") {
  Family f = fixtures::fam1();
  f.transports.at({0, 0}) = ExtFun(f.fibers[0], f.fibers[0], {1, 0});
  CHECK_THROWS_AS(build_C(f), precondition_failed);
  CHECK_THROWS_AS(build_S(f), precondition_failed);
}
