#pragma once

// Proof-irrelevant families of setoids over an index setoid, the setoid sum
// with its injections and universal property, and the two conversions between
// families and subsetoid-valued functions.

#include <functional>
#include <map>

#include "setcat/setoid.hpp"

namespace setcat {

// A fiber setoid per index element plus a transport map for every related
// ordered pair of indices.  Validity (F1)-(F3) is established by
// check_family, not by construction.
struct Family {
  Setoid index;
  std::vector<Setoid> fibers;
  std::map<std::pair<int, int>, ExtFun> transports;

  bool has_transport(int i, int j) const {
    return transports.count({i, j}) != 0;
  }
  const ExtFun& transport(int i, int j) const {
    auto it = transports.find({i, j});
    if (it == transports.end())
      throw incomplete_input("missing transport " + index.name(i) + "->" +
                             index.name(j));
    return it->second;
  }
};

inline Report check_family(const Family& f) {
  Report report;
  const Setoid& I = f.index;
  if (static_cast<int>(f.fibers.size()) != I.size())
    throw malformed_input("family: one fiber required per index element");

  // Presence and shape first; a malformed table would poison the law checks.
  for (int i = 0; i < I.size(); ++i)
    for (int j = 0; j < I.size(); ++j)
      if (I.related(i, j)) {
        const ExtFun& t = f.transport(i, j);  // throws incomplete_input
        if (t.src() != f.fibers[i] || t.dst() != f.fibers[j]) {
          report.add("transport-shape",
                     I.name(i) + "->" + I.name(j) +
                         " is not a map between the stated fibers");
          return report;
        }
      }
  for (const auto& [key, t] : f.transports)
    if (!I.related(key.first, key.second))
      report.add("F2", "transport stored for unrelated pair " +
                           I.name(key.first) + "->" + I.name(key.second));

  for (int i = 0; i < I.size(); ++i)
    for (int j = 0; j < I.size(); ++j)
      if (I.related(i, j)) {
        Report ext = check_extensional(f.transport(i, j));
        for (const auto& v : ext.violations)
          report.add("transport-extensionality",
                     I.name(i) + "->" + I.name(j) + ": " + v.witness);
      }

  for (int i = 0; i < I.size(); ++i)
    if (!ext_eq(f.transport(i, i), ExtFun::identity(f.fibers[i])))
      report.add("F1", "transport " + I.name(i) + "->" + I.name(i) +
                           " is not the identity");

  for (int i = 0; i < I.size(); ++i)
    for (int j = 0; j < I.size(); ++j)
      for (int k = 0; k < I.size(); ++k)
        if (I.related(i, j) && I.related(j, k)) {
          const ExtFun via = compose(f.transport(j, k), f.transport(i, j));
          const ExtFun& direct = f.transport(i, k);
          for (int x = 0; x < f.fibers[i].size(); ++x)
            if (!f.fibers[k].related(via(x), direct(x))) {
              report.add("F3", "(" + I.name(i) + "," + I.name(j) + "," +
                                   I.name(k) + ") at " +
                                   f.fibers[i].name(x));
              break;
            }
        }
  return report;
}

// Fills in identity transports and composes gaps along already-present
// transports.  Pairs that stay unreachable are left missing; check_family
// will flag them.
inline void complete_transports(Family& f) {
  const Setoid& I = f.index;
  for (int i = 0; i < I.size(); ++i)
    if (!f.has_transport(i, i))
      f.transports.emplace(std::make_pair(i, i),
                           ExtFun::identity(f.fibers[i]));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < I.size(); ++i)
      for (int j = 0; j < I.size(); ++j) {
        if (!I.related(i, j) || f.has_transport(i, j)) continue;
        for (int k = 0; k < I.size(); ++k)
          if (k != j && f.has_transport(i, k) && f.has_transport(k, j) &&
              f.transport(i, k).dst() == f.transport(k, j).src()) {
            f.transports.emplace(
                std::make_pair(i, j),
                compose(f.transport(k, j), f.transport(i, k)));
            changed = true;
            break;
          }
      }
  }
}

// The disjoint sum Sigma(I,F): carrier of pairs (i, x) ordered
// lexicographically, quotiented by (x,y) ~ (x',y') iff x = x' in I and the
// transported fiber component matches.
struct SigmaSetoid {
  Setoid setoid;
  std::vector<std::pair<int, int>> carrier;  // (index element, fiber element)
  std::vector<ExtFun> injections;            // per index element
  std::vector<std::vector<int>> positions;   // positions[i][x]

  int pos(int i, int x) const { return positions.at(i).at(x); }
};

inline SigmaSetoid sigma(const Family& f) {
  if (!check_family(f).ok())
    throw precondition_failed("sigma: family fails (F1)-(F3)");
  SigmaSetoid s;
  const Setoid& I = f.index;
  std::vector<std::string> elems;
  s.positions.resize(I.size());
  for (int i = 0; i < I.size(); ++i)
    for (int x = 0; x < f.fibers[i].size(); ++x) {
      s.positions[i].push_back(static_cast<int>(s.carrier.size()));
      s.carrier.emplace_back(i, x);
      elems.push_back("(" + I.name(i) + "," + f.fibers[i].name(x) + ")");
    }
  std::vector<std::pair<int, int>> gens;
  const int n = static_cast<int>(s.carrier.size());
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      auto [i, x] = s.carrier[p];
      auto [j, y] = s.carrier[q];
      if (I.related(i, j) && f.fibers[j].related(f.transport(i, j)(x), y))
        gens.emplace_back(p, q);
    }
  s.setoid = Setoid(std::move(elems), gens);
  for (int i = 0; i < I.size(); ++i) {
    std::vector<int> t;
    for (int x = 0; x < f.fibers[i].size(); ++x) t.push_back(s.pos(i, x));
    s.injections.emplace_back(f.fibers[i], s.setoid, std::move(t));
  }
  return s;
}

// Verifies directly from the definition that ~ is an equivalence relation.
// Independent of the closure performed inside sigma().
inline Report check_sigma_equivalence(const Family& f) {
  Report report;
  const Setoid& I = f.index;
  std::vector<std::pair<int, int>> carrier;
  for (int i = 0; i < I.size(); ++i)
    for (int x = 0; x < f.fibers[i].size(); ++x) carrier.emplace_back(i, x);
  const int n = static_cast<int>(carrier.size());
  auto rel = [&](int p, int q) {
    auto [i, x] = carrier[p];
    auto [j, y] = carrier[q];
    return I.related(i, j) && f.fibers[j].related(f.transport(i, j)(x), y);
  };
  auto pname = [&](int p) {
    auto [i, x] = carrier[p];
    return "(" + I.name(i) + "," + f.fibers[i].name(x) + ")";
  };
  for (int p = 0; p < n; ++p)
    if (!rel(p, p)) report.add("sigma-reflexivity", pname(p));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (rel(p, q) && !rel(q, p))
        report.add("sigma-symmetry", pname(p) + " ~ " + pname(q));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (rel(p, q))
        for (int r = 0; r < n; ++r)
          if (rel(q, r) && !rel(p, r))
            report.add("sigma-transitivity",
                       pname(p) + " ~ " + pname(q) + " ~ " + pname(r));
  return report;
}

// Equation: iota_{x'} . F(p) = iota_x for p : x = x'.
inline Report check_injection_property(const Family& f) {
  Report report;
  const SigmaSetoid s = sigma(f);
  const Setoid& I = f.index;
  for (int i = 0; i < I.size(); ++i)
    for (int j = 0; j < I.size(); ++j)
      if (I.related(i, j))
        for (int x = 0; x < f.fibers[i].size(); ++x) {
          int via = s.injections[j](f.transport(i, j)(x));
          int direct = s.injections[i](x);
          if (!s.setoid.related(via, direct))
            report.add("injection-property",
                       "(" + I.name(i) + "," + I.name(j) + ") at " +
                           f.fibers[i].name(x));
        }
  return report;
}

// The mediating map of the universal property: k(i, x) = legs[i](x).
// Throws incompatible_cocone when the legs do not commute with transports.
inline ExtFun universal_map(const Family& f, const SigmaSetoid& s,
                            const Setoid& c, const std::vector<ExtFun>& legs) {
  const Setoid& I = f.index;
  if (static_cast<int>(legs.size()) != I.size())
    throw malformed_input("universal_map: one leg required per index element");
  for (int i = 0; i < I.size(); ++i)
    if (legs[i].src() != f.fibers[i] || legs[i].dst() != c)
      throw domain_mismatch("universal_map: leg " + I.name(i) +
                            " has the wrong shape");
  for (int i = 0; i < I.size(); ++i)
    for (int j = 0; j < I.size(); ++j)
      if (I.related(i, j))
        for (int x = 0; x < f.fibers[i].size(); ++x)
          if (!c.related(legs[j](f.transport(i, j)(x)), legs[i](x)))
            throw incompatible_cocone("cocone incompatible at (" + I.name(i) +
                                      "," + f.fibers[i].name(x) + ")");
  std::vector<int> t(s.carrier.size());
  for (int p = 0; p < static_cast<int>(s.carrier.size()); ++p) {
    auto [i, x] = s.carrier[p];
    t[p] = legs[i](x);
  }
  return ExtFun(s.setoid, c, std::move(t));
}

// An extensional assignment of subsetoids of a fixed ambient setoid.
struct SubsetoidFamily {
  Setoid index;
  std::vector<Subsetoid> assign;
};

inline Report check_subsetoid_family(const SubsetoidFamily& g) {
  Report report;
  if (static_cast<int>(g.assign.size()) != g.index.size())
    throw malformed_input("subsetoid family: one subsetoid per index element");
  for (const auto& u : g.assign)
    if (u.ambient() != g.assign.front().ambient())
      throw domain_mismatch("subsetoid family: mixed ambient setoids");
  for (int i = 0; i < g.index.size(); ++i)
    for (int j = i + 1; j < g.index.size(); ++j)
      if (g.index.related(i, j) && !subsetoid_eq(g.assign[i], g.assign[j]))
        report.add("extensionality",
                   g.index.name(i) + " = " + g.index.name(j) +
                       " but the assigned subsetoids differ");
  return report;
}

// Extends a family of subsetoids to a proof-irrelevant family: the transport
// from assign(i) to assign(j) is the unique map commuting with the two
// injections into the ambient setoid.
inline Family hat_family(const SubsetoidFamily& g) {
  Report ext = check_subsetoid_family(g);
  if (!ext.ok())
    throw precondition_failed("hat_family: " + ext.violations.front().witness);
  Family f;
  f.index = g.index;
  for (const auto& u : g.assign) f.fibers.push_back(u.part());
  for (int i = 0; i < g.index.size(); ++i)
    for (int j = 0; j < g.index.size(); ++j)
      if (g.index.related(i, j)) {
        auto k = subsetoid_leq(g.assign[i], g.assign[j]);
        // Inclusion holds by extensionality; guarded anyway.
        if (!k)
          throw precondition_failed("hat_family: inclusion failed at (" +
                                    g.index.name(i) + "," + g.index.name(j) +
                                    ")");
        f.transports.emplace(std::make_pair(i, j), *k);
      }
  return f;
}

// The induced subsetoid family F-check(i) = (F(i), iota_i) over Sigma(I,F).
inline SubsetoidFamily check_down_family(const Family& f,
                                         const SigmaSetoid& s) {
  SubsetoidFamily g;
  g.index = f.index;
  for (int i = 0; i < f.index.size(); ++i)
    g.assign.push_back(Subsetoid{s.injections[i]});
  Report ext = check_subsetoid_family(g);
  if (!ext.ok())
    throw precondition_failed("check_down_family: induced family is not "
                              "extensional (family invalid?)");
  return g;
}

}  // namespace setcat
