#pragma once

// Two presentations of categories with equality on objects: the essentially
// algebraic one (three setoids, axioms A1-A9) and the hom-family one (object
// setoid plus a proof-irrelevant hom family with coherence conditions), with
// E-categories, functor checkers and the translations between the two.

#include <array>
#include <functional>

#include "setcat/family.hpp"

namespace setcat {

// ---------------------------------------------------------------------------
// Essentially algebraic categories

struct EACategory {
  Setoid c0, c1, c2;
  ExtFun id, dom, cod;   // id: c0 -> c1, dom/cod: c1 -> c0
  ExtFun cmp, fst, snd;  // c2 -> c1; fst is the arrow applied first
};

namespace detail {

struct CompEntry {
  int elem = -1;  // a c2 element with the given fst/snd classes
  int cmpcls = -1;
};

// Lookup [fst class][snd class] -> composable-pair witness and composite
// class.  Meaningful once A5 and extensionality hold.
inline std::vector<std::vector<CompEntry>> comp_class_table(
    const EACategory& c) {
  std::vector<std::vector<CompEntry>> table(
      c.c1.class_count(), std::vector<CompEntry>(c.c1.class_count()));
  for (int u = 0; u < c.c2.size(); ++u) {
    int fc = c.c1.class_of(c.fst(u));
    int sc = c.c1.class_of(c.snd(u));
    table[fc][sc] = {u, c.c1.class_of(c.cmp(u))};
  }
  return table;
}

inline bool shape_ok(const ExtFun& f, const Setoid& src, const Setoid& dst) {
  return f.src() == src && f.dst() == dst;
}

}  // namespace detail

inline Report check_ea(const EACategory& c) {
  Report report;
  struct Named {
    const char* name;
    const ExtFun* fun;
    const Setoid* src;
    const Setoid* dst;
  };
  const Named maps[] = {{"id", &c.id, &c.c0, &c.c1},
                        {"dom", &c.dom, &c.c1, &c.c0},
                        {"cod", &c.cod, &c.c1, &c.c0},
                        {"cmp", &c.cmp, &c.c2, &c.c1},
                        {"fst", &c.fst, &c.c2, &c.c1},
                        {"snd", &c.snd, &c.c2, &c.c1}};
  for (const auto& m : maps) {
    if (!detail::shape_ok(*m.fun, *m.src, *m.dst)) {
      report.add("shape", std::string(m.name) + " has the wrong source or "
                                                "target setoid");
      return report;
    }
    Report ext = check_extensional(*m.fun);
    for (const auto& v : ext.violations)
      report.add(std::string(m.name) + "-extensionality", v.witness);
  }
  if (!report.ok()) return report;  // axiom checks assume extensionality

  for (int x = 0; x < c.c0.size(); ++x) {
    if (!c.c0.related(c.dom(c.id(x)), x)) report.add("A1", c.c0.name(x));
    if (!c.c0.related(c.cod(c.id(x)), x)) report.add("A2", c.c0.name(x));
  }
  for (int u = 0; u < c.c2.size(); ++u) {
    if (!c.c0.related(c.dom(c.cmp(u)), c.dom(c.fst(u))))
      report.add("A3", c.c2.name(u));
    if (!c.c0.related(c.cod(c.cmp(u)), c.cod(c.snd(u))))
      report.add("A4", c.c2.name(u));
  }

  // A5: a composable pair is determined by its components.
  {
    std::map<std::pair<int, int>, int> seen;
    for (int u = 0; u < c.c2.size(); ++u) {
      std::pair<int, int> key{c.c1.class_of(c.fst(u)),
                              c.c1.class_of(c.snd(u))};
      auto [it, inserted] = seen.emplace(key, c.c2.class_of(u));
      if (!inserted && it->second != c.c2.class_of(u))
        report.add("A5", c.c2.name(u) + " vs " +
                             c.c2.name(c.c2.class_rep(it->second)));
    }
  }

  // A6: every matching pair of arrows has a composable-pair witness.
  {
    std::set<std::pair<int, int>> present;
    for (int u = 0; u < c.c2.size(); ++u)
      present.emplace(c.c1.class_of(c.fst(u)), c.c1.class_of(c.snd(u)));
    for (int cf = 0; cf < c.c1.class_count(); ++cf)
      for (int cg = 0; cg < c.c1.class_count(); ++cg) {
        int first = c.c1.class_rep(cf), second = c.c1.class_rep(cg);
        if (c.c0.related(c.cod(first), c.dom(second)) &&
            !present.count({cf, cg}))
          report.add("A6", c.c1.name(first) + " ; " + c.c1.name(second));
      }
  }

  for (int u = 0; u < c.c2.size(); ++u) {
    bool fst_is_id = false, snd_is_id = false;
    for (int x = 0; x < c.c0.size() && !(fst_is_id && snd_is_id); ++x) {
      if (c.c1.related(c.fst(u), c.id(x))) fst_is_id = true;
      if (c.c1.related(c.snd(u), c.id(x))) snd_is_id = true;
    }
    if (fst_is_id && !c.c1.related(c.cmp(u), c.snd(u)))
      report.add("A7", c.c2.name(u));
    if (snd_is_id && !c.c1.related(c.cmp(u), c.fst(u)))
      report.add("A8", c.c2.name(u));
  }

  if (!report.ok()) return report;

  // A9 (associativity), checked per composable class triple; sound here
  // because A5 and extensionality were verified above.
  {
    auto table = detail::comp_class_table(c);
    const int ncls = c.c1.class_count();
    for (int f = 0; f < ncls; ++f)
      for (int g = 0; g < ncls; ++g) {
        const auto& v = table[f][g];
        if (v.elem < 0) continue;
        for (int h = 0; h < ncls; ++h) {
          const auto& u = table[g][h];
          if (u.elem < 0) continue;
          const auto& w = table[f][u.cmpcls];
          const auto& z = table[v.cmpcls][h];
          if (w.elem < 0 || z.elem < 0) continue;  // already an A6 violation
          if (w.cmpcls != z.cmpcls)
            report.add("A9", c.c1.name(c.c1.class_rep(f)) + " ; " +
                                 c.c1.name(c.c1.class_rep(g)) + " ; " +
                                 c.c1.name(c.c1.class_rep(h)));
        }
      }
  }
  return report;
}

struct EAFunctor {
  EACategory src, dst;
  ExtFun f0, f1, f2;
};

inline Report check_ea_functor(const EAFunctor& F) {
  Report report;
  if (!detail::shape_ok(F.f0, F.src.c0, F.dst.c0) ||
      !detail::shape_ok(F.f1, F.src.c1, F.dst.c1) ||
      !detail::shape_ok(F.f2, F.src.c2, F.dst.c2)) {
    report.add("shape", "component maps do not match the category setoids");
    return report;
  }
  for (const auto* f : {&F.f0, &F.f1, &F.f2}) {
    Report ext = check_extensional(*f);
    for (const auto& v : ext.violations)
      report.add("functor-extensionality", v.witness);
  }
  if (!report.ok()) return report;

  const EACategory& A = F.src;
  const EACategory& B = F.dst;
  for (int cx = 0; cx < A.c0.class_count(); ++cx) {
    int x = A.c0.class_rep(cx);
    if (!B.c1.related(F.f1(A.id(x)), B.id(F.f0(x))))
      report.add("preserves-id", A.c0.name(x));
  }
  for (int ce = 0; ce < A.c1.class_count(); ++ce) {
    int e = A.c1.class_rep(ce);
    if (!B.c0.related(F.f0(A.dom(e)), B.dom(F.f1(e))))
      report.add("preserves-dom", A.c1.name(e));
    if (!B.c0.related(F.f0(A.cod(e)), B.cod(F.f1(e))))
      report.add("preserves-cod", A.c1.name(e));
  }
  for (int cu = 0; cu < A.c2.class_count(); ++cu) {
    int u = A.c2.class_rep(cu);
    if (!B.c1.related(F.f1(A.fst(u)), B.fst(F.f2(u))))
      report.add("preserves-fst", A.c2.name(u));
    if (!B.c1.related(F.f1(A.snd(u)), B.snd(F.f2(u))))
      report.add("preserves-snd", A.c2.name(u));
    if (!B.c1.related(F.f1(A.cmp(u)), B.cmp(F.f2(u))))
      report.add("preserves-cmp", A.c2.name(u));
  }
  return report;
}

// Builds an EACategory from object and arrow setoids plus the structural
// maps.  The composable-pairs setoid is generated from ordered pairs of
// arrow-class representatives; compose2(first, second) returns the
// composite arrow.
inline EACategory assemble_ea(Setoid c0, Setoid c1, std::vector<int> domv,
                              std::vector<int> codv, std::vector<int> idv,
                              const std::function<int(int, int)>& compose2) {
  EACategory c;
  c.c0 = std::move(c0);
  c.c1 = std::move(c1);
  std::vector<std::string> names2;
  std::vector<int> fstv, sndv, cmpv;
  for (int cf = 0; cf < c.c1.class_count(); ++cf)
    for (int cg = 0; cg < c.c1.class_count(); ++cg) {
      int e1 = c.c1.class_rep(cf), e2 = c.c1.class_rep(cg);
      if (!c.c0.related(codv[e1], domv[e2])) continue;
      names2.push_back("[" + c.c1.name(e1) + ";" + c.c1.name(e2) + "]");
      fstv.push_back(e1);
      sndv.push_back(e2);
      cmpv.push_back(compose2(e1, e2));
    }
  c.c2 = Setoid::discrete(std::move(names2));
  c.id = ExtFun(c.c0, c.c1, std::move(idv));
  c.dom = ExtFun(c.c1, c.c0, std::move(domv));
  c.cod = ExtFun(c.c1, c.c0, std::move(codv));
  c.fst = ExtFun(c.c2, c.c1, std::move(fstv));
  c.snd = ExtFun(c.c2, c.c1, std::move(sndv));
  c.cmp = ExtFun(c.c2, c.c1, std::move(cmpv));
  return c;
}

// ---------------------------------------------------------------------------
// Hom-family presented categories

struct HFCategory {
  Setoid ob;
  Family hom;            // index = product setoid ob x ob
  std::vector<int> ids;  // ids[a] is an element of homs(a,a)
  // comp[(a*n+b)*n+c][g][f] with g in homs(b,c), f in homs(a,b)
  std::vector<std::vector<std::vector<int>>> comp;

  int n() const { return ob.size(); }
  int pidx(int a, int b) const { return a * n() + b; }
  const Setoid& homs(int a, int b) const { return hom.fibers.at(pidx(a, b)); }
  const ExtFun& htrans(int a, int b, int a2, int b2) const {
    return hom.transport(pidx(a, b), pidx(a2, b2));
  }
  int compose(int a, int b, int c, int g, int f) const {
    return comp.at((a * n() + b) * n() + c).at(g).at(f);
  }
};

inline Report check_hf(const HFCategory& c) {
  Report report;
  const int n = c.n();
  if (c.hom.index != product_setoid(c.ob, c.ob) ||
      static_cast<int>(c.ids.size()) != n ||
      static_cast<int>(c.comp.size()) != n * n * n) {
    report.add("shape", "hom family, ids or composition tables do not match "
                        "the object setoid");
    return report;
  }
  report.merge(check_family(c.hom));  // hom transports: F1-F3, extensionality

  for (int a = 0; a < n; ++a)
    if (c.ids[a] < 0 || c.ids[a] >= c.homs(a, a).size()) {
      report.add("identity", "no identity element in Hom(" + c.ob.name(a) +
                                 "," + c.ob.name(a) + ")");
      return report;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        const auto& t = c.comp[(a * n + b) * n + d];
        if (static_cast<int>(t.size()) != c.homs(b, d).size()) {
          report.add("composition", "table (" + c.ob.name(a) + "," +
                                        c.ob.name(b) + "," + c.ob.name(d) +
                                        ") has the wrong dimensions");
          return report;
        }
        for (const auto& row : t)
          if (static_cast<int>(row.size()) != c.homs(a, b).size()) {
            report.add("composition", "table (" + c.ob.name(a) + "," +
                                          c.ob.name(b) + "," + c.ob.name(d) +
                                          ") has the wrong dimensions");
            return report;
          }
      }
  if (!report.ok()) return report;

  // Composition is extensional in each argument.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        const Setoid& gs = c.homs(b, d);
        const Setoid& fs = c.homs(a, b);
        const Setoid& hs = c.homs(a, d);
        for (int g = 0; g < gs.size(); ++g)
          for (int g2 = g + 1; g2 < gs.size(); ++g2)
            if (gs.related(g, g2))
              for (int f = 0; f < fs.size(); ++f)
                if (!hs.related(c.compose(a, b, d, g, f),
                                c.compose(a, b, d, g2, f)))
                  report.add("composition-extensionality",
                             gs.name(g) + " = " + gs.name(g2));
        for (int f = 0; f < fs.size(); ++f)
          for (int f2 = f + 1; f2 < fs.size(); ++f2)
            if (fs.related(f, f2))
              for (int g = 0; g < gs.size(); ++g)
                if (!hs.related(c.compose(a, b, d, g, f),
                                c.compose(a, b, d, g, f2)))
                  report.add("composition-extensionality",
                             fs.name(f) + " = " + fs.name(f2));
      }

  // H1, H2: identities are neutral.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int f = 0; f < c.homs(a, b).size(); ++f) {
        if (!c.homs(a, b).related(c.compose(a, b, b, c.ids[b], f), f))
          report.add("H1", c.homs(a, b).name(f));
        if (!c.homs(a, b).related(c.compose(a, a, b, f, c.ids[a]), f))
          report.add("H2", c.homs(a, b).name(f));
      }

  // H3: associativity.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        for (int e = 0; e < n; ++e)
          for (int h = 0; h < c.homs(d, e).size(); ++h)
            for (int g = 0; g < c.homs(b, d).size(); ++g)
              for (int f = 0; f < c.homs(a, b).size(); ++f) {
                int left = c.compose(a, b, e, c.compose(b, d, e, h, g), f);
                int right = c.compose(a, d, e, h, c.compose(a, b, d, g, f));
                if (!c.homs(a, e).related(left, right))
                  report.add("H3", c.homs(d, e).name(h) + " ; " +
                                       c.homs(b, d).name(g) + " ; " +
                                       c.homs(a, b).name(f));
              }

  // Coherence of identities with transport.
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2)
      if (c.ob.related(a, a2) &&
          !c.homs(a2, a2).related(c.htrans(a, a, a2, a2)(c.ids[a]),
                                  c.ids[a2]))
        report.add("coherence-id",
                   c.ob.name(a) + " = " + c.ob.name(a2));

  // Coherence of composition with transport.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        for (int a2 = 0; a2 < n; ++a2)
          for (int b2 = 0; b2 < n; ++b2)
            for (int d2 = 0; d2 < n; ++d2) {
              if (!c.ob.related(a, a2) || !c.ob.related(b, b2) ||
                  !c.ob.related(d, d2))
                continue;
              for (int g = 0; g < c.homs(b, d).size(); ++g)
                for (int f = 0; f < c.homs(a, b).size(); ++f) {
                  int left =
                      c.htrans(a, d, a2, d2)(c.compose(a, b, d, g, f));
                  int right = c.compose(a2, b2, d2,
                                        c.htrans(b, d, b2, d2)(g),
                                        c.htrans(a, b, a2, b2)(f));
                  if (!c.homs(a2, d2).related(left, right))
                    report.add("coherence-comp",
                               "(" + c.ob.name(a) + "," + c.ob.name(b) + "," +
                                   c.ob.name(d) + ") -> (" + c.ob.name(a2) +
                                   "," + c.ob.name(b2) + "," + c.ob.name(d2) +
                                   ") at " + c.homs(b, d).name(g) + " ; " +
                                   c.homs(a, b).name(f));
                }
            }
  return report;
}

// The two Hom-identities used to verify A1-A9 for the EA category obtained
// from an HF-category: composing with a transported identity equals
// transporting along the corresponding object equalities.
inline Report check_hom_identities(const HFCategory& c) {
  Report report;
  const int n = c.n();
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2)
      for (int b2 = 0; b2 < n; ++b2) {
        if (!c.ob.related(a, a2) || !c.ob.related(a, b2)) continue;
        int t = c.htrans(a, a, a2, b2)(c.ids[a]);  // in Hom(a2, b2)
        for (int d = 0; d < n; ++d) {
          for (int g = 0; g < c.homs(d, a2).size(); ++g)
            if (!c.homs(d, b2).related(c.compose(d, a2, b2, t, g),
                                       c.htrans(d, a2, d, b2)(g)))
              report.add("hom-identity-post",
                         c.homs(d, a2).name(g) + " with transported id of " +
                             c.ob.name(a));
          for (int f = 0; f < c.homs(b2, d).size(); ++f)
            if (!c.homs(a2, d).related(c.compose(a2, b2, d, f, t),
                                       c.htrans(b2, d, a2, d)(f)))
              report.add("hom-identity-pre",
                         c.homs(b2, d).name(f) + " with transported id of " +
                             c.ob.name(a));
        }
      }
  return report;
}

// Transported identities compose as in the full-image construction's two
// displayed calculations.
inline Report check_transport_identity_lemmas(const HFCategory& c) {
  Report report;
  const int n = c.n();
  for (int b = 0; b < n; ++b)
    for (int b1 = 0; b1 < n; ++b1)
      for (int b2 = 0; b2 < n; ++b2) {
        if (!c.ob.related(b, b1) || !c.ob.related(b1, b2)) continue;
        {
          int upper = c.htrans(b1, b1, b1, b2)(c.ids[b1]);  // Hom(b1,b2)
          int lower = c.htrans(b, b, b, b1)(c.ids[b]);      // Hom(b,b1)
          int lhs = c.compose(b, b1, b2, upper, lower);
          int rhs = c.htrans(b, b, b, b2)(c.ids[b]);
          if (!c.homs(b, b2).related(lhs, rhs))
            report.add("transport-id-lemma-1",
                       c.ob.name(b) + " = " + c.ob.name(b1) + " = " +
                           c.ob.name(b2));
        }
        {
          int left = c.htrans(b, b, b1, b)(c.ids[b]);     // Hom(b1,b)
          int right = c.htrans(b1, b1, b2, b1)(c.ids[b1]);  // Hom(b2,b1)
          int lhs = c.compose(b2, b1, b, left, right);
          int rhs = c.htrans(b, b, b2, b)(c.ids[b]);
          if (!c.homs(b2, b).related(lhs, rhs))
            report.add("transport-id-lemma-2",
                       c.ob.name(b) + " = " + c.ob.name(b1) + " = " +
                           c.ob.name(b2));
        }
      }
  return report;
}

// ---------------------------------------------------------------------------
// E-categories: objects form a bare collection, homs are setoids, no
// transports and no coherence conditions.

struct ECategory {
  int nobj = 0;
  std::vector<Setoid> hom;  // nobj * nobj
  std::vector<int> ids;
  std::vector<std::vector<std::vector<int>>> comp;

  int pidx(int a, int b) const { return a * nobj + b; }
  const Setoid& homs(int a, int b) const { return hom.at(pidx(a, b)); }
  int compose(int a, int b, int c, int g, int f) const {
    return comp.at((a * nobj + b) * nobj + c).at(g).at(f);
  }
};

inline Report check_e(const ECategory& c) {
  Report report;
  const int n = c.nobj;
  if (static_cast<int>(c.hom.size()) != n * n ||
      static_cast<int>(c.ids.size()) != n ||
      static_cast<int>(c.comp.size()) != n * n * n) {
    report.add("shape", "hom setoids, ids or composition tables missing");
    return report;
  }
  for (int a = 0; a < n; ++a)
    if (c.ids[a] < 0 || c.ids[a] >= c.homs(a, a).size()) {
      report.add("identity", "object " + std::to_string(a));
      return report;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int f = 0; f < c.homs(a, b).size(); ++f) {
        if (!c.homs(a, b).related(c.compose(a, b, b, c.ids[b], f), f))
          report.add("H1", c.homs(a, b).name(f));
        if (!c.homs(a, b).related(c.compose(a, a, b, f, c.ids[a]), f))
          report.add("H2", c.homs(a, b).name(f));
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        for (int e = 0; e < n; ++e)
          for (int h = 0; h < c.homs(d, e).size(); ++h)
            for (int g = 0; g < c.homs(b, d).size(); ++g)
              for (int f = 0; f < c.homs(a, b).size(); ++f)
                if (!c.homs(a, e).related(
                        c.compose(a, b, e, c.compose(b, d, e, h, g), f),
                        c.compose(a, d, e, h, c.compose(a, b, d, g, f))))
                  report.add("H3", c.homs(d, e).name(h) + " ; " +
                                       c.homs(b, d).name(g) + " ; " +
                                       c.homs(a, b).name(f));
  return report;
}

inline ECategory hf_to_e(const HFCategory& c) {
  ECategory e;
  e.nobj = c.n();
  e.hom = c.hom.fibers;
  e.ids = c.ids;
  e.comp = c.comp;
  return e;
}

// An E-functor from an HF-category (used as an E-category) into an
// E-category: object map without extensionality, per-pair hom maps.
struct EFunctor {
  HFCategory src;
  ECategory dst;
  std::vector<int> ob_map;
  std::vector<ExtFun> hom_map;  // per source pair pidx(a,b)
};

namespace detail {

template <typename Src, typename Dst, typename ObMap>
Report check_functor_core(const Src& A, const Dst& B, const ObMap& fo,
                          const std::vector<ExtFun>& hmap) {
  Report report;
  const int n = A.n();
  if (static_cast<int>(hmap.size()) != n * n) {
    report.add("shape", "one hom map required per source object pair");
    return report;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const ExtFun& m = hmap[A.pidx(a, b)];
      if (m.src() != A.homs(a, b) || m.dst() != B.homs(fo(a), fo(b))) {
        report.add("shape", "hom map (" + A.ob.name(a) + "," + A.ob.name(b) +
                                ") has the wrong source or target");
        return report;
      }
      Report ext = check_extensional(m);
      for (const auto& v : ext.violations)
        report.add("hom-map-extensionality", v.witness);
    }
  if (!report.ok()) return report;

  for (int a = 0; a < n; ++a)
    if (!B.homs(fo(a), fo(a))
             .related(hmap[A.pidx(a, a)](A.ids[a]), B.ids[fo(a)]))
      report.add("preserves-id", A.ob.name(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        for (int g = 0; g < A.homs(b, d).size(); ++g)
          for (int f = 0; f < A.homs(a, b).size(); ++f) {
            int left = hmap[A.pidx(a, d)](A.compose(a, b, d, g, f));
            int right = B.compose(fo(a), fo(b), fo(d),
                                  hmap[A.pidx(b, d)](g),
                                  hmap[A.pidx(a, b)](f));
            if (!B.homs(fo(a), fo(d)).related(left, right))
              report.add("preserves-comp", A.homs(b, d).name(g) + " ; " +
                                               A.homs(a, b).name(f));
          }
  return report;
}

}  // namespace detail

inline Report check_e_functor(const EFunctor& F) {
  for (int v : F.ob_map)
    if (v < 0 || v >= F.dst.nobj)
      throw malformed_input("e-functor: object map out of range");
  auto fo = [&](int a) { return F.ob_map.at(a); };
  struct Wrap {
    const ECategory* d;
    const Setoid& homs(int a, int b) const { return d->homs(a, b); }
    int compose(int a, int b, int c, int g, int f) const {
      return d->compose(a, b, c, g, f);
    }
    const std::vector<int>& ids;
  } wrap{&F.dst, F.dst.ids};
  return detail::check_functor_core(F.src, wrap, fo, F.hom_map);
}

// A functor between HF-categories: extensional object map, hom maps,
// preservation, and the transport coherence square.
struct HFFunctor {
  HFCategory src, dst;
  std::vector<int> ob_map;
  std::vector<ExtFun> hom_map;
};

inline Report check_hf_functor(const HFFunctor& F) {
  Report report;
  const int n = F.src.n();
  if (static_cast<int>(F.ob_map.size()) != n)
    throw malformed_input("hf-functor: object map is not total");
  for (int v : F.ob_map)
    if (v < 0 || v >= F.dst.n())
      throw malformed_input("hf-functor: object map out of range");
  auto fo = [&](int a) { return F.ob_map[a]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (F.src.ob.related(a, b) && !F.dst.ob.related(fo(a), fo(b)))
        report.add("object-extensionality",
                   F.src.ob.name(a) + " = " + F.src.ob.name(b));
  struct Wrap {
    const HFCategory* d;
    const Setoid& homs(int a, int b) const { return d->homs(a, b); }
    int compose(int a, int b, int c, int g, int f) const {
      return d->compose(a, b, c, g, f);
    }
    const std::vector<int>& ids;
  } wrap{&F.dst, F.dst.ids};
  report.merge(detail::check_functor_core(F.src, wrap, fo, F.hom_map));
  if (!report.ok()) return report;

  // Functor coherence with transports.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < n; ++b2) {
          if (!F.src.ob.related(a, a2) || !F.src.ob.related(b, b2)) continue;
          for (int f = 0; f < F.src.homs(a, b).size(); ++f) {
            int left = F.dst.htrans(fo(a), fo(b), fo(a2), fo(b2))(
                F.hom_map[F.src.pidx(a, b)](f));
            int right = F.hom_map[F.src.pidx(a2, b2)](
                F.src.htrans(a, b, a2, b2)(f));
            if (!F.dst.homs(fo(a2), fo(b2)).related(left, right))
              report.add("coherence-functor",
                         "(" + F.src.ob.name(a) + "," + F.src.ob.name(b) +
                             ") -> (" + F.src.ob.name(a2) + "," +
                             F.src.ob.name(b2) + ") at " +
                             F.src.homs(a, b).name(f));
          }
        }
  return report;
}

// ---------------------------------------------------------------------------
// The two translations of the appendix

struct EaToHf {
  HFCategory hf;
  // per object pair pidx, fiber position -> the representing c1 element
  std::vector<std::vector<int>> arrow_of;
  // per object pair pidx: c1 class -> fiber position
  std::vector<std::map<int, int>> pos_of_cls;
};

// Hom(a,b) collects the arrow classes with dom = a and cod = b (one
// representative each); transports re-tag the same arrow, identities and
// composition come from the algebraic structure.
inline EaToHf ea_to_hf(const EACategory& c) {
  if (!check_ea(c).ok())
    throw precondition_failed("ea_to_hf: category fails A1-A9");
  EaToHf out;
  const int n = c.c0.size();
  HFCategory& h = out.hf;
  h.ob = c.c0;
  h.hom.index = product_setoid(c.c0, c.c0);
  out.arrow_of.resize(n * n);
  out.pos_of_cls.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<std::string> names;
      for (int cls = 0; cls < c.c1.class_count(); ++cls) {
        int e = c.c1.class_rep(cls);
        if (c.c0.related(c.dom(e), a) && c.c0.related(c.cod(e), b)) {
          out.pos_of_cls[h.pidx(a, b)][cls] =
              static_cast<int>(out.arrow_of[h.pidx(a, b)].size());
          out.arrow_of[h.pidx(a, b)].push_back(e);
          names.push_back(c.c1.name(e));
        }
      }
      h.hom.fibers.push_back(Setoid::discrete(std::move(names)));
    }
  for (int p = 0; p < n * n; ++p)
    for (int q = 0; q < n * n; ++q)
      if (h.hom.index.related(p, q)) {
        std::vector<int> t;
        for (int e : out.arrow_of[p])
          t.push_back(out.pos_of_cls[q].at(c.c1.class_of(e)));
        h.hom.transports.emplace(std::make_pair(p, q),
                                 ExtFun(h.hom.fibers[p], h.hom.fibers[q],
                                        std::move(t)));
      }
  for (int a = 0; a < n; ++a)
    h.ids.push_back(
        out.pos_of_cls[h.pidx(a, a)].at(c.c1.class_of(c.id(a))));
  auto table = detail::comp_class_table(c);
  h.comp.resize(n * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        auto& t = h.comp[(a * n + b) * n + d];
        const auto& gs = out.arrow_of[h.pidx(b, d)];
        const auto& fs = out.arrow_of[h.pidx(a, b)];
        t.resize(gs.size());
        for (size_t g = 0; g < gs.size(); ++g) {
          t[g].resize(fs.size());
          for (size_t f = 0; f < fs.size(); ++f) {
            const auto& entry =
                table[c.c1.class_of(fs[f])][c.c1.class_of(gs[g])];
            if (entry.elem < 0)
              throw precondition_failed("ea_to_hf: missing composable pair");
            t[g][f] = out.pos_of_cls[h.pidx(a, d)].at(entry.cmpcls);
          }
        }
      }
  return out;
}

struct HfToEa {
  EACategory ea;
  // per object pair pidx, fiber position -> c1 element index
  std::vector<std::vector<int>> elem_of;
};

// Arrows are triples (a, b, f) with f in Hom(a,b); two triples are equal
// when the indices are equal and transport carries one hom element to the
// other.  Composition inserts the transported identity between the parts.
inline HfToEa hf_to_ea(const HFCategory& h) {
  if (!check_hf(h).ok())
    throw precondition_failed("hf_to_ea: category fails the HF laws");
  HfToEa out;
  const int n = h.n();
  std::vector<std::string> names;
  std::vector<std::tuple<int, int, int>> triples;  // (a, b, fiber pos)
  out.elem_of.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int f = 0; f < h.homs(a, b).size(); ++f) {
        out.elem_of[h.pidx(a, b)].push_back(
            static_cast<int>(triples.size()));
        triples.emplace_back(a, b, f);
        names.push_back("(" + h.ob.name(a) + "," + h.ob.name(b) + "," +
                        h.homs(a, b).name(f) + ")");
      }
  // Canonical form: transport to the representative object pair.
  std::map<std::tuple<int, int, int>, int> key_to_cls;
  std::vector<int> cls_of(triples.size());
  for (size_t e = 0; e < triples.size(); ++e) {
    auto [a, b, f] = triples[e];
    int ca = h.ob.class_of(a), cb = h.ob.class_of(b);
    int ra = h.ob.class_rep(ca), rb = h.ob.class_rep(cb);
    int tf = h.htrans(a, b, ra, rb)(f);
    std::tuple<int, int, int> key{ca, cb,
                                  h.homs(ra, rb).class_of(tf)};
    auto [it, inserted] =
        key_to_cls.emplace(key, static_cast<int>(key_to_cls.size()));
    cls_of[e] = it->second;
  }
  std::vector<std::pair<int, int>> gens;
  std::map<int, int> first_of_cls;
  for (size_t e = 0; e < triples.size(); ++e) {
    auto [it, inserted] =
        first_of_cls.emplace(cls_of[e], static_cast<int>(e));
    if (!inserted) gens.emplace_back(it->second, static_cast<int>(e));
  }
  Setoid c1(std::move(names), gens);

  std::vector<int> domv, codv, idv;
  for (const auto& [a, b, f] : triples) {
    domv.push_back(a);
    codv.push_back(b);
  }
  for (int a = 0; a < n; ++a)
    idv.push_back(out.elem_of[h.pidx(a, a)][h.ids[a]]);

  auto compose2 = [&, triples](int e1, int e2) {
    auto [a, b, f] = triples[e1];
    auto [cc, d, g] = triples[e2];
    // transported identity in Hom(b, cc) mediates the composition
    int t = h.htrans(b, b, b, cc)(h.ids[b]);
    int s1 = h.compose(a, b, cc, t, f);
    int s2 = h.compose(a, cc, d, g, s1);
    return out.elem_of[h.pidx(a, d)][s2];
  };
  out.ea = assemble_ea(h.ob, std::move(c1), std::move(domv), std::move(codv),
                       std::move(idv), compose2);
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism certificates

// Class-level maps A -> B; verified to be bijections commuting with the
// algebraic structure.
struct EAIso {
  std::vector<int> ob_cls_map;     // per A.c0 class -> B.c0 class
  std::vector<int> arrow_cls_map;  // per A.c1 class -> B.c1 class
};

inline Report check_ea_iso(const EACategory& A, const EACategory& B,
                           const EAIso& iso) {
  Report report;
  auto check_bijection = [&](const std::vector<int>& m, int acount,
                             int bcount, const char* what) {
    if (static_cast<int>(m.size()) != acount || acount != bcount) {
      report.add(what, "class counts differ");
      return false;
    }
    std::set<int> image(m.begin(), m.end());
    for (int v : m)
      if (v < 0 || v >= bcount) {
        report.add(what, "map out of range");
        return false;
      }
    if (static_cast<int>(image.size()) != acount) {
      report.add(what, "map is not injective");
      return false;
    }
    return true;
  };
  if (!check_bijection(iso.ob_cls_map, A.c0.class_count(),
                       B.c0.class_count(), "object-bijection") ||
      !check_bijection(iso.arrow_cls_map, A.c1.class_count(),
                       B.c1.class_count(), "arrow-bijection"))
    return report;

  for (int ca = 0; ca < A.c0.class_count(); ++ca) {
    int x = A.c0.class_rep(ca);
    int y = B.c0.class_rep(iso.ob_cls_map[ca]);
    if (iso.arrow_cls_map[A.c1.class_of(A.id(x))] !=
        B.c1.class_of(B.id(y)))
      report.add("iso-id", A.c0.name(x));
  }
  for (int ce = 0; ce < A.c1.class_count(); ++ce) {
    int e = A.c1.class_rep(ce);
    int e2 = B.c1.class_rep(iso.arrow_cls_map[ce]);
    if (iso.ob_cls_map[A.c0.class_of(A.dom(e))] != B.c0.class_of(B.dom(e2)))
      report.add("iso-dom", A.c1.name(e));
    if (iso.ob_cls_map[A.c0.class_of(A.cod(e))] != B.c0.class_of(B.cod(e2)))
      report.add("iso-cod", A.c1.name(e));
  }
  auto ta = detail::comp_class_table(A);
  auto tb = detail::comp_class_table(B);
  for (int f = 0; f < A.c1.class_count(); ++f)
    for (int g = 0; g < A.c1.class_count(); ++g) {
      if (ta[f][g].elem < 0) continue;
      const auto& entry = tb[iso.arrow_cls_map[f]][iso.arrow_cls_map[g]];
      if (entry.elem < 0 ||
          entry.cmpcls != iso.arrow_cls_map[ta[f][g].cmpcls])
        report.add("iso-cmp", A.c1.name(A.c1.class_rep(f)) + " ; " +
                                  A.c1.name(A.c1.class_rep(g)));
    }
  return report;
}

// Hom-level maps between HF-categories sharing their object setoid:
// hmap[pidx(a,b)][f] is an element of B.homs(a,b).  Verified bijective up to
// equality and commuting with ids, composition and transports.
inline Report check_hf_iso(const HFCategory& A, const HFCategory& B,
                           const std::vector<std::vector<int>>& hmap) {
  Report report;
  if (A.ob != B.ob) {
    report.add("iso-objects", "object setoids differ");
    return report;
  }
  const int n = A.n();
  if (static_cast<int>(hmap.size()) != n * n) {
    report.add("iso-shape", "one hom map required per object pair");
    return report;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& m = hmap[A.pidx(a, b)];
      const Setoid& sa = A.homs(a, b);
      const Setoid& sb = B.homs(a, b);
      if (static_cast<int>(m.size()) != sa.size()) {
        report.add("iso-shape", "hom map (" + A.ob.name(a) + "," +
                                    A.ob.name(b) + ") is not total");
        return report;
      }
      for (int v : m)
        if (v < 0 || v >= sb.size()) {
          report.add("iso-shape", "hom map value out of range");
          return report;
        }
      if (sa.class_count() != sb.class_count())
        report.add("iso-bijection", "hom class counts differ at (" +
                                        A.ob.name(a) + "," + A.ob.name(b) +
                                        ")");
      for (int f = 0; f < sa.size(); ++f)
        for (int f2 = f + 1; f2 < sa.size(); ++f2) {
          if (sa.related(f, f2) != sb.related(m[f], m[f2]))
            report.add("iso-bijection",
                       sa.name(f) + " vs " + sa.name(f2) + " at (" +
                           A.ob.name(a) + "," + A.ob.name(b) + ")");
        }
    }
  if (!report.ok()) return report;

  for (int a = 0; a < n; ++a)
    if (!B.homs(a, a).related(hmap[A.pidx(a, a)][A.ids[a]], B.ids[a]))
      report.add("iso-id", A.ob.name(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        for (int g = 0; g < A.homs(b, d).size(); ++g)
          for (int f = 0; f < A.homs(a, b).size(); ++f) {
            int left = hmap[A.pidx(a, d)][A.compose(a, b, d, g, f)];
            int right = B.compose(a, b, d, hmap[A.pidx(b, d)][g],
                                  hmap[A.pidx(a, b)][f]);
            if (!B.homs(a, d).related(left, right))
              report.add("iso-comp", A.homs(b, d).name(g) + " ; " +
                                         A.homs(a, b).name(f));
          }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < n; ++b2) {
          if (!A.ob.related(a, a2) || !A.ob.related(b, b2)) continue;
          for (int f = 0; f < A.homs(a, b).size(); ++f) {
            int left = hmap[A.pidx(a2, b2)][A.htrans(a, b, a2, b2)(f)];
            int right = B.htrans(a, b, a2, b2)(hmap[A.pidx(a, b)][f]);
            if (!B.homs(a2, b2).related(left, right))
              report.add("iso-transport", A.homs(a, b).name(f));
          }
        }
  return report;
}

// Canonical certificate for the EA -> HF -> EA round trip: objects map by
// the identity; an arrow class goes to the class of the triple
// (dom, cod, fiber position of its representative).
inline EAIso roundtrip_ea_certificate(const EACategory& c, const EaToHf& fwd,
                                      const HfToEa& back) {
  EAIso iso;
  iso.ob_cls_map.resize(c.c0.class_count());
  std::iota(iso.ob_cls_map.begin(), iso.ob_cls_map.end(), 0);
  const HFCategory& h = fwd.hf;
  for (int ce = 0; ce < c.c1.class_count(); ++ce) {
    int e = c.c1.class_rep(ce);
    int a = c.dom(e), b = c.cod(e);
    int pos = fwd.pos_of_cls[h.pidx(a, b)].at(ce);
    int elem = back.elem_of[h.pidx(a, b)].at(pos);
    iso.arrow_cls_map.push_back(back.ea.c1.class_of(elem));
  }
  return iso;
}

// Canonical certificate for the HF -> EA -> HF round trip: a hom element f
// in Hom(a,b) goes to the position of its triple's class in the rebuilt
// Hom(a,b).
inline std::vector<std::vector<int>> roundtrip_hf_certificate(
    const HFCategory& h, const HfToEa& fwd, const EaToHf& back) {
  const int n = h.n();
  std::vector<std::vector<int>> hmap(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = h.pidx(a, b);
      for (int f = 0; f < h.homs(a, b).size(); ++f) {
        int cls = fwd.ea.c1.class_of(fwd.elem_of[p].at(f));
        hmap[p].push_back(back.pos_of_cls[p].at(cls));
      }
    }
  return hmap;
}

}  // namespace setcat
