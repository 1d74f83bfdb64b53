#pragma once

// Finite setoids, extensional functions and the subsetoid preorder P(A).
//
// A setoid is a finite carrier with an equivalence relation.  Internally the
// relation is kept as a canonical partition, so a constructed Setoid always
// satisfies the closure invariant; check_setoid() validates raw descriptions
// that may fail it.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace setcat {

struct malformed_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct domain_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct incomplete_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct precondition_failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct incompatible_cocone : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Violation {
  std::string law;
  std::string witness;
};

struct Report {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string law, std::string witness) {
    violations.push_back({std::move(law), std::move(witness)});
  }
  void merge(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
  std::string summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (const auto& v : violations) os << v.law << ": " << v.witness << "\n";
    return os.str();
  }
};

// A raw, possibly unclosed description of a setoid (as read from a fixture).
struct RawSetoid {
  std::vector<std::string> elems;
  std::vector<std::pair<int, int>> eq;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

inline void require_well_formed(const RawSetoid& raw) {
  std::set<std::string> seen;
  for (const auto& e : raw.elems)
    if (!seen.insert(e).second)
      throw malformed_input("duplicate element identifier: " + e);
  const int n = static_cast<int>(raw.elems.size());
  for (const auto& [a, b] : raw.eq)
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw malformed_input("eq pair mentions unknown element");
}

}  // namespace detail

class Setoid {
 public:
  Setoid() = default;

  // Builds the setoid generated by the given pairs (closure is computed).
  Setoid(std::vector<std::string> elems,
         const std::vector<std::pair<int, int>>& generators)
      : elems_(std::move(elems)) {
    detail::require_well_formed({elems_, generators});
    const int n = size();
    detail::UnionFind uf(n);
    for (const auto& [a, b] : generators) uf.unite(a, b);
    cls_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
      int root = uf.find(i);
      if (cls_[root] < 0) {
        cls_[root] = static_cast<int>(members_.size());
        members_.emplace_back();
      }
      cls_[i] = cls_[root];
      members_[cls_[i]].push_back(i);
    }
  }

  static Setoid discrete(std::vector<std::string> elems) {
    return Setoid(std::move(elems), {});
  }

  int size() const { return static_cast<int>(elems_.size()); }
  const std::string& name(int i) const { return elems_.at(i); }
  const std::vector<std::string>& names() const { return elems_; }

  int index_of(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
      if (elems_[i] == id) return i;
    return -1;
  }

  bool related(int a, int b) const { return cls_.at(a) == cls_.at(b); }
  int class_of(int a) const { return cls_.at(a); }
  int class_count() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& class_members(int c) const { return members_.at(c); }
  // Least element of the class, the canonical representative.
  int class_rep(int c) const { return members_.at(c).front(); }

  bool operator==(const Setoid& o) const {
    return elems_ == o.elems_ && cls_ == o.cls_;
  }
  bool operator!=(const Setoid& o) const { return !(*this == o); }

 private:
  std::vector<std::string> elems_;
  std::vector<int> cls_;
  std::vector<std::vector<int>> members_;
};

inline Setoid close_setoid(const RawSetoid& raw) {
  return Setoid(raw.elems, raw.eq);
}

// Validates that a raw relation is reflexive, symmetric and transitive.
// Every missing pair is reported.  Throws on duplicate identifiers or
// out-of-range pairs.
inline Report check_setoid(const RawSetoid& raw) {
  detail::require_well_formed(raw);
  Report report;
  const int n = static_cast<int>(raw.elems.size());
  std::set<std::pair<int, int>> has(raw.eq.begin(), raw.eq.end());
  auto pair_name = [&](int a, int b) {
    return "(" + raw.elems[a] + "," + raw.elems[b] + ")";
  };
  for (int i = 0; i < n; ++i)
    if (!has.count({i, i})) report.add("reflexivity", pair_name(i, i));
  for (const auto& [a, b] : has)
    if (!has.count({b, a})) report.add("symmetry", pair_name(b, a));
  for (const auto& [a, b] : has)
    for (const auto& [b2, c] : has)
      if (b == b2 && !has.count({a, c}))
        report.add("transitivity", pair_name(a, c));
  return report;
}

class ExtFun {
 public:
  ExtFun() = default;

  ExtFun(Setoid src, Setoid dst, std::vector<int> table)
      : src_(std::move(src)), dst_(std::move(dst)), table_(std::move(table)) {
    if (static_cast<int>(table_.size()) != src_.size())
      throw malformed_input("function table is not total on its source");
    for (int v : table_)
      if (v < 0 || v >= dst_.size())
        throw malformed_input("function table value out of range");
  }

  const Setoid& src() const { return src_; }
  const Setoid& dst() const { return dst_; }
  const std::vector<int>& table() const { return table_; }
  int operator()(int x) const { return table_.at(x); }

  static ExtFun identity(const Setoid& s) {
    std::vector<int> t(s.size());
    std::iota(t.begin(), t.end(), 0);
    return ExtFun(s, s, std::move(t));
  }

 private:
  Setoid src_, dst_;
  std::vector<int> table_;
};

// g after f.
inline ExtFun compose(const ExtFun& g, const ExtFun& f) {
  if (f.dst().size() != g.src().size())
    throw domain_mismatch("compose: middle setoids differ");
  std::vector<int> t(f.src().size());
  for (int x = 0; x < f.src().size(); ++x) t[x] = g(f(x));
  return ExtFun(f.src(), g.dst(), std::move(t));
}

inline Report check_extensional(const ExtFun& f) {
  Report report;
  const Setoid& s = f.src();
  for (int x = 0; x < s.size(); ++x)
    for (int y = x + 1; y < s.size(); ++y)
      if (s.related(x, y) && !f.dst().related(f(x), f(y)))
        report.add("extensionality",
                   s.name(x) + " = " + s.name(y) + " but images differ");
  return report;
}

inline bool ext_eq(const ExtFun& f, const ExtFun& g) {
  if (f.src() != g.src() || f.dst() != g.dst())
    throw domain_mismatch("ext_eq: functions have different source or target");
  for (int x = 0; x < f.src().size(); ++x)
    if (!f.dst().related(f(x), g(x))) return false;
  return true;
}

// An element (U, m) of the preorder P(A): an injection of a part setoid into
// an ambient one.
struct Subsetoid {
  ExtFun inj;  // part -> ambient

  const Setoid& part() const { return inj.src(); }
  const Setoid& ambient() const { return inj.dst(); }
};

inline Report check_subsetoid(const Subsetoid& u) {
  Report report = check_extensional(u.inj);
  const Setoid& p = u.part();
  for (int a = 0; a < p.size(); ++a)
    for (int b = a + 1; b < p.size(); ++b)
      if (u.ambient().related(u.inj(a), u.inj(b)) && !p.related(a, b))
        report.add("injectivity", p.name(a) + ", " + p.name(b) +
                                      " have equal images but are not equal");
  return report;
}

inline bool dot_in(int x, const Subsetoid& u) {
  if (x < 0 || x >= u.ambient().size())
    throw malformed_input("dot_in: element is not in the ambient setoid");
  for (int e = 0; e < u.part().size(); ++e)
    if (u.ambient().related(x, u.inj(e))) return true;
  return false;
}

// Inclusion (U,m) subset-of (V,n): returns the witness k with n . k = m, or
// absent when the inclusion fails.  The witness picks the first suitable
// element in part order, and is unique up to ext_eq.
inline std::optional<ExtFun> subsetoid_leq(const Subsetoid& u,
                                           const Subsetoid& v) {
  if (u.ambient() != v.ambient())
    throw domain_mismatch("subsetoid_leq: ambient setoids differ");
  std::vector<int> k(u.part().size());
  for (int e = 0; e < u.part().size(); ++e) {
    int found = -1;
    for (int w = 0; w < v.part().size(); ++w)
      if (u.ambient().related(v.inj(w), u.inj(e))) {
        found = w;
        break;
      }
    if (found < 0) return std::nullopt;
    k[e] = found;
  }
  return ExtFun(u.part(), v.part(), std::move(k));
}

inline bool subsetoid_eq(const Subsetoid& u, const Subsetoid& v) {
  return subsetoid_leq(u, v).has_value() && subsetoid_leq(v, u).has_value();
}

// Product setoid A x B with componentwise equality.
inline Setoid product_setoid(const Setoid& a, const Setoid& b) {
  std::vector<std::string> elems;
  std::vector<std::pair<int, int>> gens;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      elems.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  auto pos = [&](int i, int j) { return i * b.size() + j; };
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      for (int i2 = 0; i2 < a.size(); ++i2)
        for (int j2 = 0; j2 < b.size(); ++j2)
          if (a.related(i, i2) && b.related(j, j2))
            gens.emplace_back(pos(i, j), pos(i2, j2));
  return Setoid(std::move(elems), gens);
}

}  // namespace setcat
