#pragma once

// Saturated binary relations on a setoid: domains, ranges, functionality,
// relational composition, graphs of fiber maps and identity relations on the
// subsetoids F-check(i) of a setoid sum.

#include "setcat/family.hpp"

namespace setcat {

// Pairs are kept saturated: closed under replacing either component by an
// equal one.  Equality of saturated relations is plain pair-set equality;
// the membership-based comparison lives in the harness as an oracle.
struct Relation {
  Setoid base;
  std::set<std::pair<int, int>> pairs;
};

inline Relation saturate(const Setoid& base,
                         const std::vector<std::pair<int, int>>& raw) {
  Relation r;
  r.base = base;
  for (const auto& [u, v] : raw) {
    if (u < 0 || u >= base.size() || v < 0 || v >= base.size())
      throw malformed_input("saturate: pair mentions unknown element");
    for (int u2 : base.class_members(base.class_of(u)))
      for (int v2 : base.class_members(base.class_of(v)))
        r.pairs.emplace(u2, v2);
  }
  return r;
}

inline Report check_saturated(const Relation& r) {
  Report report;
  for (const auto& [u, v] : r.pairs) {
    if (u < 0 || u >= r.base.size() || v < 0 || v >= r.base.size())
      throw malformed_input("relation pair mentions unknown element");
    for (int u2 : r.base.class_members(r.base.class_of(u)))
      for (int v2 : r.base.class_members(r.base.class_of(v)))
        if (!r.pairs.count({u2, v2})) {
          report.add("saturation", "(" + r.base.name(u) + "," +
                                       r.base.name(v) + ") present but (" +
                                       r.base.name(u2) + "," +
                                       r.base.name(v2) + ") missing");
          return report;
        }
  }
  return report;
}

namespace detail {

// One least representative per class among the given elements, as a
// subsetoid of base.
inline Subsetoid class_subsetoid(const Setoid& base,
                                 const std::set<int>& elements) {
  std::set<int> reps;
  for (int e : elements) reps.insert(base.class_rep(base.class_of(e)));
  std::vector<std::string> names;
  std::vector<int> table;
  for (int rep : reps) {
    names.push_back(base.name(rep));
    table.push_back(rep);
  }
  return Subsetoid{ExtFun(Setoid::discrete(std::move(names)), base,
                          std::move(table))};
}

}  // namespace detail

inline Subsetoid rel_dom(const Relation& r) {
  std::set<int> firsts;
  for (const auto& [u, v] : r.pairs) firsts.insert(u);
  return detail::class_subsetoid(r.base, firsts);
}

inline Subsetoid rel_ran(const Relation& r) {
  std::set<int> seconds;
  for (const auto& [u, v] : r.pairs) seconds.insert(v);
  return detail::class_subsetoid(r.base, seconds);
}

inline bool is_functional(const Relation& r) {
  for (const auto& [u, v] : r.pairs)
    for (const auto& [u2, v2] : r.pairs)
      if (r.base.related(u, u2) && !r.base.related(v, v2)) return false;
  return true;
}

// q after r: (u, w) when some v has (u, v) in r and (v, w) in q.
inline Relation rel_compose(const Relation& q, const Relation& r) {
  if (q.base != r.base)
    throw domain_mismatch("rel_compose: relations on different setoids");
  Relation out;
  out.base = r.base;
  for (const auto& [u, v] : r.pairs)
    for (const auto& [v2, w] : q.pairs)
      if (r.base.related(v, v2)) out.pairs.emplace(u, w);
  // Composition of saturated relations is saturated already.
  return out;
}

inline bool rel_eq(const Relation& a, const Relation& b) {
  if (a.base != b.base)
    throw domain_mismatch("rel_eq: relations on different setoids");
  return a.pairs == b.pairs;
}

// The graph of a fiber map f : F(i) -> F(j), saturated in the sum.
inline Relation graph_of(const ExtFun& f, int i, int j,
                         const SigmaSetoid& s) {
  if (f.src() != s.injections.at(i).src() ||
      f.dst() != s.injections.at(j).src())
    throw domain_mismatch("graph_of: map does not fit the stated fibers");
  std::vector<std::pair<int, int>> raw;
  for (int x = 0; x < f.src().size(); ++x)
    raw.emplace_back(s.pos(i, x), s.pos(j, f(x)));
  return saturate(s.setoid, raw);
}

// The diagonal restricted to members of F-check(i).
inline Relation identity_relation(int i, const SigmaSetoid& s) {
  std::vector<std::pair<int, int>> raw;
  for (int x = 0; x < s.injections.at(i).src().size(); ++x)
    raw.emplace_back(s.pos(i, x), s.pos(i, x));
  return saturate(s.setoid, raw);
}

}  // namespace setcat
