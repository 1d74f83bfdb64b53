#pragma once

// Hand-built example values shared across the test files.

#include "setcat/family.hpp"

namespace fixtures {

// Three indices with i0 = i1, fibers {a,b} / {a',b'} / {c}, transports
// matching primes to unprimed letters.
inline setcat::Family fam1() {
  using namespace setcat;
  Family f;
  f.index = Setoid({"i0", "i1", "i2"}, {{0, 1}});
  f.fibers.push_back(Setoid::discrete({"a", "b"}));
  f.fibers.push_back(Setoid::discrete({"a'", "b'"}));
  f.fibers.push_back(Setoid::discrete({"c"}));
  f.transports.emplace(std::make_pair(0, 1),
                       ExtFun(f.fibers[0], f.fibers[1], {0, 1}));
  f.transports.emplace(std::make_pair(1, 0),
                       ExtFun(f.fibers[1], f.fibers[0], {0, 1}));
  complete_transports(f);
  return f;
}

// Ambient {x,y,z} with x = y; (U,m) picks out x, (V,n) picks out x and z.
struct Sub1 {
  setcat::Setoid ambient;
  setcat::Subsetoid u, v;
};

inline Sub1 sub1() {
  using namespace setcat;
  Sub1 s;
  s.ambient = Setoid({"x", "y", "z"}, {{0, 1}});
  s.u = Subsetoid{ExtFun(Setoid::discrete({"u"}), s.ambient, {0})};
  s.v = Subsetoid{ExtFun(Setoid::discrete({"v0", "v1"}), s.ambient, {0, 2})};
  return s;
}

}  // namespace fixtures
