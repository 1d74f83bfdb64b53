#pragma once

// The headline constructions: the category C(I,F) of fiber maps, the
// category S(I,F) of functional relations on the setoid sum, the functors M
// and N between them, the isomorphism check, the discrete category of a
// setoid, a family viewed as an E-functor into setoids, and the full image
// of an E-functor.

#include "setcat/category.hpp"
#include "setcat/relation.hpp"

namespace setcat {

namespace detail {

// All extensional function tables src -> dst, in lexicographic order.
inline std::vector<std::vector<int>> enumerate_ext_tables(const Setoid& src,
                                                          const Setoid& dst) {
  std::vector<std::vector<int>> out;
  if (src.size() == 0) {
    out.push_back({});
    return out;
  }
  if (dst.size() == 0) return out;
  std::vector<int> t(src.size(), 0);
  while (true) {
    bool extensional = true;
    for (int x = 0; x < src.size() && extensional; ++x)
      for (int y = x + 1; y < src.size() && extensional; ++y)
        if (src.related(x, y) && !dst.related(t[x], t[y])) extensional = false;
    if (extensional) out.push_back(t);
    int pos = src.size() - 1;
    while (pos >= 0 && t[pos] == dst.size() - 1) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  return out;
}

inline std::string table_str(const Setoid& src, const Setoid& dst,
                             const std::vector<int>& t) {
  std::string s = "{";
  for (int x = 0; x < src.size(); ++x) {
    if (x) s += ",";
    s += src.name(x) + "->" + dst.name(t[x]);
  }
  return s + "}";
}

inline std::string pairs_str(const std::set<std::pair<int, int>>& pairs) {
  std::string s = "R{";
  bool first = true;
  for (const auto& [u, v] : pairs) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s + "}";
}

// Partition generators from canonical keys.
template <typename Key>
std::vector<std::pair<int, int>> key_generators(const std::vector<Key>& keys) {
  std::map<Key, int> first;
  std::vector<std::pair<int, int>> gens;
  for (int e = 0; e < static_cast<int>(keys.size()); ++e) {
    auto [it, inserted] = first.emplace(keys[e], e);
    if (!inserted) gens.emplace_back(it->second, e);
  }
  return gens;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// C(I,F)

struct BuiltC {
  Family fam;
  EACategory cat;
  std::vector<std::tuple<int, int, std::vector<int>>> arrows;  // (i, j, table)
  std::map<std::string, int> arrow_index;

  std::string arrow_name(int i, int j, const std::vector<int>& t) const {
    return "(" + fam.index.name(i) + "," + fam.index.name(j) + ")" +
           detail::table_str(fam.fibers[i], fam.fibers[j], t);
  }
  int find_arrow(int i, int j, const std::vector<int>& t) const {
    auto it = arrow_index.find(arrow_name(i, j, t));
    if (it == arrow_index.end())
      throw precondition_failed("C(I,F): arrow lookup failed");
    return it->second;
  }
};

// Arrows are triples (i, j, h) with h an extensional fiber map; two arrows
// are equal when conjugating with transports carries one map to the other.
inline BuiltC build_C(const Family& f) {
  if (!check_family(f).ok())
    throw precondition_failed("build_C: family fails (F1)-(F3)");
  BuiltC out;
  out.fam = f;
  const Setoid& I = f.index;
  std::vector<std::string> names;
  std::vector<std::tuple<int, int, int>> keys;  // (cls i, cls j, canon id)
  std::map<std::vector<int>, int> canon_ids;
  std::vector<int> domv, codv;
  for (int i = 0; i < I.size(); ++i)
    for (int j = 0; j < I.size(); ++j)
      for (auto& t : detail::enumerate_ext_tables(f.fibers[i], f.fibers[j])) {
        std::string name = "(" + I.name(i) + "," + I.name(j) + ")" +
                           detail::table_str(f.fibers[i], f.fibers[j], t);
        out.arrow_index.emplace(name, static_cast<int>(out.arrows.size()));
        names.push_back(std::move(name));
        domv.push_back(i);
        codv.push_back(j);
        // canonical form: conjugate to the representative indices and
        // record image classes
        int ri = I.class_rep(I.class_of(i));
        int rj = I.class_rep(I.class_of(j));
        const ExtFun& into = f.transport(ri, i);
        const ExtFun& outof = f.transport(j, rj);
        std::vector<int> canon{I.class_of(i), I.class_of(j)};
        for (int x = 0; x < f.fibers[ri].size(); ++x)
          canon.push_back(f.fibers[rj].class_of(outof(t[into(x)])));
        auto [it, inserted] =
            canon_ids.emplace(canon, static_cast<int>(canon_ids.size()));
        keys.emplace_back(I.class_of(i), I.class_of(j), it->second);
        out.arrows.emplace_back(i, j, std::move(t));
      }
  Setoid c1(std::move(names), detail::key_generators(keys));

  std::vector<int> idv;
  for (int i = 0; i < I.size(); ++i) {
    std::vector<int> ident(f.fibers[i].size());
    std::iota(ident.begin(), ident.end(), 0);
    idv.push_back(out.find_arrow(i, i, ident));
  }
  auto compose2 = [&out, &f](int e1, int e2) {
    const auto& [i, j, h] = out.arrows[e1];
    const auto& [j2, k, g] = out.arrows[e2];
    const ExtFun& tr = f.transport(j, j2);
    std::vector<int> t(f.fibers[i].size());
    for (int x = 0; x < f.fibers[i].size(); ++x) t[x] = g[tr(h[x])];
    return out.find_arrow(i, k, t);
  };
  // compose2 captures out/f by reference; arrows and index are complete here
  out.cat = assemble_ea(I, std::move(c1), std::move(domv), std::move(codv),
                        std::move(idv), compose2);
  return out;
}

// ---------------------------------------------------------------------------
// S(I,F)

struct BuiltS {
  Family fam;
  SigmaSetoid sum;
  EACategory cat;
  std::vector<std::tuple<int, int, Relation>> arrows;
  std::map<std::string, int> arrow_index;

  std::string arrow_name(int i, int j,
                         const std::set<std::pair<int, int>>& pairs) const {
    return "(" + fam.index.name(i) + "," + fam.index.name(j) + ")" +
           detail::pairs_str(pairs);
  }
  int find_arrow(int i, int j, const Relation& r) const {
    auto it = arrow_index.find(arrow_name(i, j, r.pairs));
    if (it == arrow_index.end())
      throw precondition_failed("S(I,F): arrow lookup failed");
    return it->second;
  }
};

// Arrows are triples (i, j, R) with R a saturated functional relation on the
// sum, dom(R) equal to F-check(i) and ran(R) included in F-check(j).  These
// are exactly the unions of dom-class x range-class blocks along a function
// between the member classes, which is how they are enumerated.
inline BuiltS build_S(const Family& f) {
  if (!check_family(f).ok())
    throw precondition_failed("build_S: family fails (F1)-(F3)");
  BuiltS out;
  out.fam = f;
  out.sum = sigma(f);
  const Setoid& I = f.index;
  const Setoid& S = out.sum.setoid;

  // member classes of F-check(i), sorted
  std::vector<std::vector<int>> member_cls(I.size());
  for (int i = 0; i < I.size(); ++i) {
    std::set<int> cls;
    for (int x = 0; x < f.fibers[i].size(); ++x)
      cls.insert(S.class_of(out.sum.pos(i, x)));
    member_cls[i].assign(cls.begin(), cls.end());
  }

  std::vector<std::string> names;
  std::vector<std::tuple<int, int, std::string>> keys;
  std::vector<int> domv, codv;
  for (int i = 0; i < I.size(); ++i)
    for (int j = 0; j < I.size(); ++j) {
      const auto& dcls = member_cls[i];
      const auto& rcls = member_cls[j];
      const int nd = static_cast<int>(dcls.size());
      const int nr = static_cast<int>(rcls.size());
      if (nd > 0 && nr == 0) continue;  // no relation can be total on dom
      std::vector<int> phi(nd, 0);
      while (true) {
        Relation r;
        r.base = S;
        for (int d = 0; d < nd; ++d)
          for (int u : S.class_members(dcls[d]))
            for (int v : S.class_members(rcls[phi[d]])) r.pairs.emplace(u, v);
        std::string ps = detail::pairs_str(r.pairs);
        std::string name =
            "(" + I.name(i) + "," + I.name(j) + ")" + ps;
        out.arrow_index.emplace(name, static_cast<int>(out.arrows.size()));
        names.push_back(std::move(name));
        keys.emplace_back(I.class_of(i), I.class_of(j), ps);
        domv.push_back(i);
        codv.push_back(j);
        out.arrows.emplace_back(i, j, std::move(r));
        if (nd == 0) break;
        int pos = nd - 1;
        while (pos >= 0 && phi[pos] == nr - 1) phi[pos--] = 0;
        if (pos < 0) break;
        ++phi[pos];
      }
    }
  Setoid c1(std::move(names), detail::key_generators(keys));

  std::vector<int> idv;
  for (int i = 0; i < I.size(); ++i)
    idv.push_back(out.find_arrow(i, i, identity_relation(i, out.sum)));
  auto compose2 = [&out](int e1, int e2) {
    const auto& [i, j, r] = out.arrows[e1];
    const auto& [j2, k, q] = out.arrows[e2];
    return out.find_arrow(i, k, rel_compose(q, r));
  };
  out.cat = assemble_ea(I, std::move(c1), std::move(domv), std::move(codv),
                        std::move(idv), compose2);
  return out;
}

// ---------------------------------------------------------------------------
// The functors M and N and Theorem-style isomorphism check

namespace detail {

inline std::map<std::pair<int, int>, int> pair_index_of_c2(
    const EACategory& c) {
  std::map<std::pair<int, int>, int> idx;
  for (int u = 0; u < c.c2.size(); ++u)
    idx[{c.c1.class_of(c.fst(u)), c.c1.class_of(c.snd(u))}] = u;
  return idx;
}

}  // namespace detail

// M is the identity on objects and sends a fiber map to its graph.
inline EAFunctor functor_M(const BuiltC& bc, const BuiltS& bs) {
  EAFunctor F;
  F.src = bc.cat;
  F.dst = bs.cat;
  F.f0 = ExtFun::identity(bc.cat.c0);
  std::vector<int> t1;
  for (const auto& [i, j, h] : bc.arrows) {
    ExtFun hf(bc.fam.fibers[i], bc.fam.fibers[j], h);
    t1.push_back(bs.find_arrow(i, j, graph_of(hf, i, j, bs.sum)));
  }
  auto sidx = detail::pair_index_of_c2(bs.cat);
  std::vector<int> t2;
  for (int u = 0; u < bc.cat.c2.size(); ++u) {
    int m1 = t1[bc.cat.fst(u)];
    int m2 = t1[bc.cat.snd(u)];
    t2.push_back(sidx.at({bs.cat.c1.class_of(m1), bs.cat.c1.class_of(m2)}));
  }
  F.f1 = ExtFun(bc.cat.c1, bs.cat.c1, std::move(t1));
  F.f2 = ExtFun(bc.cat.c2, bs.cat.c2, std::move(t2));
  return F;
}

// Extracts the fiber map of a relation arrow by unique choice.
inline std::vector<int> unique_choice_table(const BuiltS& bs, int i, int j,
                                            const Relation& r) {
  const Family& f = bs.fam;
  std::vector<int> t(f.fibers[i].size(), -1);
  for (int x = 0; x < f.fibers[i].size(); ++x) {
    for (int y = 0; y < f.fibers[j].size(); ++y)
      if (r.pairs.count({bs.sum.pos(i, x), bs.sum.pos(j, y)})) {
        if (t[x] >= 0 && !f.fibers[j].related(t[x], y))
          throw precondition_failed("invalid arrow: relation not functional");
        if (t[x] < 0) t[x] = y;
      }
    if (t[x] < 0)
      throw precondition_failed("invalid arrow: relation not total on dom");
  }
  return t;
}

// N is the identity on objects and sends a relation arrow to the unique
// fiber map whose graph it equals.
inline EAFunctor functor_N(const BuiltS& bs, const BuiltC& bc) {
  EAFunctor F;
  F.src = bs.cat;
  F.dst = bc.cat;
  F.f0 = ExtFun::identity(bs.cat.c0);
  std::vector<int> t1;
  for (const auto& [i, j, r] : bs.arrows)
    t1.push_back(bc.find_arrow(i, j, unique_choice_table(bs, i, j, r)));
  auto cidx = detail::pair_index_of_c2(bc.cat);
  std::vector<int> t2;
  for (int u = 0; u < bs.cat.c2.size(); ++u) {
    int m1 = t1[bs.cat.fst(u)];
    int m2 = t1[bs.cat.snd(u)];
    t2.push_back(cidx.at({bc.cat.c1.class_of(m1), bc.cat.c1.class_of(m2)}));
  }
  F.f1 = ExtFun(bs.cat.c1, bc.cat.c1, std::move(t1));
  F.f2 = ExtFun(bs.cat.c2, bc.cat.c2, std::move(t2));
  return F;
}

// S(I,F) is isomorphic to C(I,F): M.N and N.M are identities up to the
// respective arrow equalities.
inline Report check_iso(const Family& f) {
  Report report;
  BuiltC bc = build_C(f);
  BuiltS bs = build_S(f);
  for (const auto& v : check_ea(bc.cat).violations)
    report.add("C:" + v.law, v.witness);
  for (const auto& v : check_ea(bs.cat).violations)
    report.add("S:" + v.law, v.witness);
  EAFunctor M = functor_M(bc, bs);
  EAFunctor N = functor_N(bs, bc);
  for (const auto& v : check_ea_functor(M).violations)
    report.add("M:" + v.law, v.witness);
  for (const auto& v : check_ea_functor(N).violations)
    report.add("N:" + v.law, v.witness);
  for (int ce = 0; ce < bc.cat.c1.class_count(); ++ce) {
    int e = bc.cat.c1.class_rep(ce);
    if (!bc.cat.c1.related(N.f1(M.f1(e)), e))
      report.add("N.M", bc.cat.c1.name(e));
  }
  for (int ce = 0; ce < bs.cat.c1.class_count(); ++ce) {
    int e = bs.cat.c1.class_rep(ce);
    if (!bs.cat.c1.related(M.f1(N.f1(e)), e))
      report.add("M.N", bs.cat.c1.name(e));
  }
  return report;
}

// Graphs respect composition and identities: the composite of two graphs is
// the graph of the transported composite, and the graph of an identity is
// the diagonal on the member subsetoid.
inline Report check_graph_laws(const BuiltC& bc, const SigmaSetoid& s) {
  Report report;
  const Family& f = bc.fam;
  const Setoid& c1 = bc.cat.c1;
  // One representative per arrow class suffices: the law is extensional.
  for (int ce1 = 0; ce1 < c1.class_count(); ++ce1)
    for (int ce2 = 0; ce2 < c1.class_count(); ++ce2) {
      int e1 = c1.class_rep(ce1), e2 = c1.class_rep(ce2);
      const auto& [i, j, ht] = bc.arrows[e1];
      const auto& [j2, k, gt] = bc.arrows[e2];
      if (!f.index.related(j, j2)) continue;
      ExtFun h(f.fibers[i], f.fibers[j], ht);
      ExtFun g(f.fibers[j2], f.fibers[k], gt);
      ExtFun comp = compose(g, compose(f.transport(j, j2), h));
      Relation lhs = rel_compose(graph_of(g, j2, k, s), graph_of(h, i, j, s));
      Relation rhs = graph_of(comp, i, k, s);
      if (!rel_eq(lhs, rhs))
        report.add("graph-compose", c1.name(e1) + " then " + c1.name(e2));
    }
  for (int i = 0; i < f.index.size(); ++i)
    if (!rel_eq(graph_of(ExtFun::identity(f.fibers[i]), i, i, s),
                identity_relation(i, s)))
      report.add("graph-identity", f.index.name(i));
  return report;
}

// ---------------------------------------------------------------------------
// The discrete category, the E-category of setoids, families as E-functors

// Hom(x,y) is a singleton exactly when x = y.
inline HFCategory discrete_category(const Setoid& a) {
  HFCategory c;
  c.ob = a;
  const int n = a.size();
  c.hom.index = product_setoid(a, a);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      c.hom.fibers.push_back(a.related(x, y)
                                 ? Setoid::discrete({"*"})
                                 : Setoid::discrete({}));
  for (int p = 0; p < n * n; ++p)
    for (int q = 0; q < n * n; ++q)
      if (c.hom.index.related(p, q)) {
        std::vector<int> t(c.hom.fibers[p].size(), 0);
        c.hom.transports.emplace(
            std::make_pair(p, q),
            ExtFun(c.hom.fibers[p], c.hom.fibers[q], std::move(t)));
      }
  c.ids.assign(n, 0);
  c.comp.resize(n * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto& t = c.comp[(x * n + y) * n + z];
        t.resize(c.homs(y, z).size());
        for (auto& row : t) row.assign(c.homs(x, y).size(), 0);
      }
  return c;
}

// The slice of the E-category of setoids spanned by the fibers of a family.
struct SetoidsECat {
  ECategory cat;
  // per pair pidx, per hom element: the function table
  std::vector<std::vector<std::vector<int>>> tables;
  // per pair pidx: table -> hom element
  std::vector<std::map<std::vector<int>, int>> index;
};

inline SetoidsECat setoids_ecat(const Family& f) {
  SetoidsECat d;
  const int n = f.index.size();
  d.cat.nobj = n;
  d.tables.resize(n * n);
  d.index.resize(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p = i * n + j;
      d.tables[p] = detail::enumerate_ext_tables(f.fibers[i], f.fibers[j]);
      std::vector<std::string> names;
      for (int e = 0; e < static_cast<int>(d.tables[p].size()); ++e) {
        d.index[p].emplace(d.tables[p][e], e);
        names.push_back(
            detail::table_str(f.fibers[i], f.fibers[j], d.tables[p][e]));
      }
      // equality of hom elements is extensional equality of the maps
      std::vector<std::pair<int, int>> gens;
      for (int e = 0; e < static_cast<int>(d.tables[p].size()); ++e)
        for (int e2 = e + 1; e2 < static_cast<int>(d.tables[p].size()); ++e2) {
          bool eq = true;
          for (int x = 0; x < f.fibers[i].size() && eq; ++x)
            if (!f.fibers[j].related(d.tables[p][e][x], d.tables[p][e2][x]))
              eq = false;
          if (eq) gens.emplace_back(e, e2);
        }
      d.cat.hom.push_back(Setoid(std::move(names), gens));
    }
  for (int i = 0; i < n; ++i) {
    std::vector<int> ident(f.fibers[i].size());
    std::iota(ident.begin(), ident.end(), 0);
    d.cat.ids.push_back(d.index[i * n + i].at(ident));
  }
  d.cat.comp.resize(n * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto& t = d.cat.comp[(i * n + j) * n + k];
        const auto& gs = d.tables[j * n + k];
        const auto& fs = d.tables[i * n + j];
        t.resize(gs.size());
        for (size_t g = 0; g < gs.size(); ++g) {
          t[g].resize(fs.size());
          for (size_t ff = 0; ff < fs.size(); ++ff) {
            std::vector<int> comp_t(f.fibers[i].size());
            for (int x = 0; x < f.fibers[i].size(); ++x)
              comp_t[x] = gs[g][fs[ff][x]];
            t[g][ff] = d.index[i * n + k].at(comp_t);
          }
        }
      }
  return d;
}

// The family as an E-functor from its discrete index category into the
// E-category of setoids: the unique arrow x -> y goes to the transport.
inline EFunctor family_as_efunctor(const Family& f, const SetoidsECat& d) {
  EFunctor F;
  F.src = discrete_category(f.index);
  F.dst = d.cat;
  const int n = f.index.size();
  F.ob_map.resize(n);
  std::iota(F.ob_map.begin(), F.ob_map.end(), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<int> t;
      if (f.index.related(x, y))
        t.push_back(d.index[x * n + y].at(f.transport(x, y).table()));
      F.hom_map.push_back(
          ExtFun(F.src.homs(x, y), d.cat.homs(x, y), std::move(t)));
    }
  return F;
}

// ---------------------------------------------------------------------------
// Full image of an E-functor along an HF source

struct FullImage {
  HFCategory image;  // S with S(a,b) = D(F(a),F(b))
  HFFunctor functor;  // G: C -> S, identity on objects, surjective
};

inline FullImage full_image(const EFunctor& F) {
  if (!check_hf(F.src).ok())
    throw precondition_failed("full_image: source is not an HF-category");
  FullImage out;
  HFCategory& s = out.image;
  const HFCategory& c = F.src;
  const ECategory& d = F.dst;
  const int n = c.n();
  auto fo = [&](int a) { return F.ob_map.at(a); };
  s.ob = c.ob;
  s.hom.index = product_setoid(s.ob, s.ob);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) s.hom.fibers.push_back(d.homs(fo(a), fo(b)));
  for (int a = 0; a < n; ++a) s.ids.push_back(d.ids[fo(a)]);
  s.comp.resize(n * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e)
        s.comp[(a * n + b) * n + e] =
            d.comp[(fo(a) * d.nobj + fo(b)) * d.nobj + fo(e)];

  // S(p,q)(f) = F(C(r(b),q)(id_b)) . f . F(C(p,r(a))(id_a))
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < n; ++b2) {
          if (!c.ob.related(a, a2) || !c.ob.related(b, b2)) continue;
          int post = F.hom_map[c.pidx(b, b2)](
              c.htrans(b, b, b, b2)(c.ids[b]));  // in D(Fb, Fb2)
          int pre = F.hom_map[c.pidx(a2, a)](
              c.htrans(a, a, a2, a)(c.ids[a]));  // in D(Fa2, Fa)
          std::vector<int> t(s.homs(a, b).size());
          for (int f2 = 0; f2 < s.homs(a, b).size(); ++f2) {
            int s1 = d.compose(fo(a2), fo(a), fo(b), f2, pre);
            t[f2] = d.compose(fo(a2), fo(b), fo(b2), post, s1);
          }
          s.hom.transports.emplace(
              std::make_pair(s.pidx(a, b), s.pidx(a2, b2)),
              ExtFun(s.homs(a, b), s.homs(a2, b2), std::move(t)));
        }

  out.functor.src = c;
  out.functor.dst = s;
  out.functor.ob_map.resize(n);
  std::iota(out.functor.ob_map.begin(), out.functor.ob_map.end(), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const ExtFun& m = F.hom_map[c.pidx(a, b)];
      out.functor.hom_map.push_back(
          ExtFun(c.homs(a, b), s.homs(a, b), m.table()));
    }
  return out;
}

// Canonical hom bijection between the full image of a family's E-functor and
// the HF form of C(I,F): a fiber map goes to the arrow class it names.
inline std::vector<std::vector<int>> full_image_to_hf_map(
    const Family& f, const SetoidsECat& d, const BuiltC& bc,
    const EaToHf& hf) {
  const int n = f.index.size();
  std::vector<std::vector<int>> hmap(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = a * n + b;
      for (const auto& t : d.tables[p]) {
        int arrow = bc.find_arrow(a, b, t);
        int cls = bc.cat.c1.class_of(arrow);
        hmap[p].push_back(hf.pos_of_cls[p].at(cls));
      }
    }
  return hmap;
}

}  // namespace setcat
