#pragma once

// Deterministic random generation of setoids and valid families, plus an
// independently-formulated relation equality oracle for cross-checks.

#include <random>

#include "setcat/relation.hpp"

namespace setcat {

// A random setoid with between 1 and max_elems elements (empty when
// max_elems is 0).  Same seed, same setoid.
inline Setoid gen_setoid(int max_elems, std::uint64_t seed,
                         const std::string& prefix = "e") {
  std::mt19937_64 rng(seed);
  if (max_elems <= 0) return Setoid::discrete({});
  const int n = static_cast<int>(rng() % max_elems) + 1;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  // random partition: each element joins an existing block or opens one
  std::vector<std::pair<int, int>> gens;
  std::vector<int> block_head;
  for (int i = 0; i < n; ++i) {
    int pick = static_cast<int>(rng() % (block_head.size() + 1));
    if (pick == static_cast<int>(block_head.size()))
      block_head.push_back(i);
    else
      gens.emplace_back(block_head[pick], i);
  }
  return Setoid(std::move(names), gens);
}

// A random valid family: for every index class one fiber shape, renamed per
// index element, with transports tau(i,j) = sigma_j^-1 . sigma_i for random
// equality-preserving bijections sigma_i of the shape.  This construction
// guarantees the identity, structurality and composition laws.
inline Family gen_family(int max_index, int max_fiber, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Family f;
  f.index = gen_setoid(max_index, rng(), "i");
  const Setoid& I = f.index;

  // one fiber shape (partition of sizes) per index class
  std::vector<std::vector<std::pair<int, int>>> shape_gens(I.class_count());
  std::vector<int> shape_size(I.class_count(), 0);
  for (int cls = 0; cls < I.class_count(); ++cls) {
    if (max_fiber > 0) shape_size[cls] = static_cast<int>(rng() % (max_fiber + 1));
    std::vector<int> head;
    for (int x = 0; x < shape_size[cls]; ++x) {
      int pick = static_cast<int>(rng() % (head.size() + 1));
      if (pick == static_cast<int>(head.size()))
        head.push_back(x);
      else
        shape_gens[cls].emplace_back(head[pick], x);
    }
  }

  std::vector<Setoid> shapes;
  for (int cls = 0; cls < I.class_count(); ++cls) {
    std::vector<std::string> names;
    for (int x = 0; x < shape_size[cls]; ++x)
      names.push_back("s" + std::to_string(x));
    shapes.push_back(Setoid(std::move(names), shape_gens[cls]));
  }

  // per index element: a renamed copy of the shape and a random bijection
  // sigma_i of the shape that respects its classes
  std::vector<std::vector<int>> sigma(I.size());
  for (int i = 0; i < I.size(); ++i) {
    const int cls = I.class_of(i);
    const Setoid& sh = shapes[cls];
    std::vector<std::string> names;
    for (int x = 0; x < sh.size(); ++x)
      names.push_back("x" + std::to_string(i) + "_" + std::to_string(x));
    f.fibers.push_back(Setoid(std::move(names), shape_gens[cls]));
    // shuffle within each class so sigma_i is equality-preserving
    sigma[i].resize(sh.size());
    for (int b = 0; b < sh.class_count(); ++b) {
      std::vector<int> mem = sh.class_members(b);
      std::shuffle(mem.begin(), mem.end(), rng);
      const auto& orig = sh.class_members(b);
      for (size_t k = 0; k < mem.size(); ++k) sigma[i][orig[k]] = mem[k];
    }
  }

  for (int i = 0; i < I.size(); ++i)
    for (int j = 0; j < I.size(); ++j) {
      if (!I.related(i, j)) continue;
      const Setoid& sh = shapes[I.class_of(i)];
      std::vector<int> inv_j(sh.size());
      for (int x = 0; x < sh.size(); ++x) inv_j[sigma[j][x]] = x;
      std::vector<int> t(sh.size());
      for (int x = 0; x < sh.size(); ++x) t[x] = inv_j[sigma[i][x]];
      f.transports.emplace(std::make_pair(i, j),
                           ExtFun(f.fibers[i], f.fibers[j], std::move(t)));
    }
  return f;
}

// Relation equality stated via membership up to the base equality, not via
// pair-set comparison; used as an oracle against rel_eq.
inline bool oracle_rel_eq(const Relation& a, const Relation& b) {
  if (a.base != b.base)
    throw domain_mismatch("oracle_rel_eq: relations on different setoids");
  auto holds = [](const Relation& r, int u, int v) {
    for (const auto& [p, q] : r.pairs)
      if (r.base.related(p, u) && r.base.related(q, v)) return true;
    return false;
  };
  const int n = a.base.size();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (holds(a, u, v) != holds(b, u, v)) return false;
  return true;
}

}  // namespace setcat
