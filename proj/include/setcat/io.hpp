#pragma once

// JSON loaders and serializers for the fixture format.  All identifiers are
// element names; loaders resolve them to indices and throw malformed_input
// with the offending name on any unknown identifier or shape problem.

#include <json.hpp>

#include "setcat/category.hpp"
#include "setcat/relation.hpp"

namespace setcat::io {

using json = nlohmann::ordered_json;

inline int resolve(const Setoid& s, const std::string& id,
                   const std::string& where) {
  int i = s.index_of(id);
  if (i < 0)
    throw malformed_input(where + ": unknown identifier '" + id + "'");
  return i;
}

inline RawSetoid load_raw_setoid(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("elements"))
    throw malformed_input(where + ": expected a setoid object with elements");
  RawSetoid raw;
  for (const auto& e : j.at("elements")) raw.elems.push_back(e.get<std::string>());
  Setoid names = Setoid::discrete(raw.elems);  // validates uniqueness
  if (j.contains("eq"))
    for (const auto& p : j.at("eq")) {
      if (!p.is_array() || p.size() != 2)
        throw malformed_input(where + ": eq entries must be pairs");
      raw.eq.emplace_back(resolve(names, p.at(0).get<std::string>(), where),
                          resolve(names, p.at(1).get<std::string>(), where));
    }
  return raw;
}

// When strict_closure is set (by flag or by the fixture's own "closed"
// field), the given relation must already be an equivalence relation;
// check_setoid reports what is missing.
inline Setoid load_setoid(const json& j, const std::string& where,
                          bool strict_closure, Report* strict_report = nullptr) {
  RawSetoid raw = load_raw_setoid(j, where);
  bool strict = strict_closure ||
                (j.contains("closed") && j.at("closed").get<bool>());
  if (strict) {
    Report r = check_setoid(raw);
    if (strict_report)
      strict_report->merge(r);
    else if (!r.ok())
      throw malformed_input(where + ": relation is not closed: " +
                            r.violations.front().law + " " +
                            r.violations.front().witness);
  }
  return close_setoid(raw);
}

inline std::vector<int> load_table(const json& j, const Setoid& src,
                                   const Setoid& dst,
                                   const std::string& where) {
  if (!j.is_object())
    throw malformed_input(where + ": expected an object of id -> id");
  std::vector<int> t(src.size(), -1);
  for (const auto& [k, v] : j.items())
    t[resolve(src, k, where)] = resolve(dst, v.get<std::string>(), where);
  for (int x = 0; x < src.size(); ++x)
    if (t[x] < 0)
      throw malformed_input(where + ": no value for '" + src.name(x) + "'");
  return t;
}

inline Family load_family(const json& j, bool strict_closure,
                          bool autocomplete) {
  if (!j.is_object() || !j.contains("index") || !j.contains("fibers"))
    throw malformed_input("family: index and fibers are required");
  Family f;
  f.index = load_setoid(j.at("index"), "family.index", strict_closure);
  const json& fibers = j.at("fibers");
  for (int i = 0; i < f.index.size(); ++i) {
    const std::string& id = f.index.name(i);
    if (!fibers.contains(id))
      throw malformed_input("family.fibers: no fiber for '" + id + "'");
    f.fibers.push_back(
        load_setoid(fibers.at(id), "family.fibers." + id, strict_closure));
  }
  if (j.contains("transports"))
    for (const auto& [key, tab] : j.at("transports").items()) {
      auto arrow = key.find("->");
      if (arrow == std::string::npos)
        throw malformed_input("family.transports: key '" + key +
                              "' is not of the form i->j");
      int i = resolve(f.index, key.substr(0, arrow), "family.transports");
      int jdx = resolve(f.index, key.substr(arrow + 2), "family.transports");
      f.transports.emplace(
          std::make_pair(i, jdx),
          ExtFun(f.fibers[i], f.fibers[jdx],
                 load_table(tab, f.fibers[i], f.fibers[jdx],
                            "family.transports." + key)));
    }
  if (autocomplete ||
      (j.contains("autocomplete") && j.at("autocomplete").get<bool>()))
    complete_transports(f);
  return f;
}

inline EACategory load_ea(const json& j, bool strict_closure) {
  EACategory c;
  for (const char* k : {"c0", "c1", "c2", "id", "dom", "cod", "cmp", "fst",
                        "snd"})
    if (!j.contains(k))
      throw malformed_input(std::string("ea_category: missing '") + k + "'");
  c.c0 = load_setoid(j.at("c0"), "ea_category.c0", strict_closure);
  c.c1 = load_setoid(j.at("c1"), "ea_category.c1", strict_closure);
  c.c2 = load_setoid(j.at("c2"), "ea_category.c2", strict_closure);
  c.id = ExtFun(c.c0, c.c1, load_table(j.at("id"), c.c0, c.c1, "id"));
  c.dom = ExtFun(c.c1, c.c0, load_table(j.at("dom"), c.c1, c.c0, "dom"));
  c.cod = ExtFun(c.c1, c.c0, load_table(j.at("cod"), c.c1, c.c0, "cod"));
  c.cmp = ExtFun(c.c2, c.c1, load_table(j.at("cmp"), c.c2, c.c1, "cmp"));
  c.fst = ExtFun(c.c2, c.c1, load_table(j.at("fst"), c.c2, c.c1, "fst"));
  c.snd = ExtFun(c.c2, c.c1, load_table(j.at("snd"), c.c2, c.c1, "snd"));
  return c;
}

inline std::pair<int, int> parse_ob_pair(const Setoid& ob,
                                         const std::string& key,
                                         const std::string& where) {
  auto bar = key.find('|');
  if (bar == std::string::npos)
    throw malformed_input(where + ": key '" + key + "' is not of the form a|b");
  return {resolve(ob, key.substr(0, bar), where),
          resolve(ob, key.substr(bar + 1), where)};
}

inline HFCategory load_hf(const json& j, bool strict_closure) {
  for (const char* k : {"ob", "hom", "ids", "comp"})
    if (!j.contains(k))
      throw malformed_input(std::string("hf_category: missing '") + k + "'");
  HFCategory c;
  c.ob = load_setoid(j.at("ob"), "hf_category.ob", strict_closure);
  const int n = c.n();
  c.hom.index = product_setoid(c.ob, c.ob);
  c.hom.fibers.resize(n * n);
  std::vector<bool> have(n * n, false);
  for (const auto& [key, val] : j.at("hom").items()) {
    auto [a, b] = parse_ob_pair(c.ob, key, "hf_category.hom");
    c.hom.fibers[c.pidx(a, b)] =
        load_setoid(val, "hf_category.hom." + key, strict_closure);
    have[c.pidx(a, b)] = true;
  }
  for (int p = 0; p < n * n; ++p)
    if (!have[p])
      throw incomplete_input("hf_category.hom: missing " +
                             c.hom.index.name(p));
  if (j.contains("transports"))
    for (const auto& [key, tab] : j.at("transports").items()) {
      auto arrow = key.find("->");
      if (arrow == std::string::npos)
        throw malformed_input("hf_category.transports: key '" + key +
                              "' is not of the form a|b->a2|b2");
      auto [a, b] = parse_ob_pair(c.ob, key.substr(0, arrow),
                                  "hf_category.transports");
      auto [a2, b2] = parse_ob_pair(c.ob, key.substr(arrow + 2),
                                    "hf_category.transports");
      c.hom.transports.emplace(
          std::make_pair(c.pidx(a, b), c.pidx(a2, b2)),
          ExtFun(c.homs(a, b), c.homs(a2, b2),
                 load_table(tab, c.homs(a, b), c.homs(a2, b2),
                            "hf_category.transports." + key)));
    }
  c.ids.resize(n);
  for (int a = 0; a < n; ++a) {
    const std::string& id = c.ob.name(a);
    if (!j.at("ids").contains(id))
      throw incomplete_input("hf_category.ids: missing '" + id + "'");
    c.ids[a] = resolve(c.homs(a, a), j.at("ids").at(id).get<std::string>(),
                       "hf_category.ids." + id);
  }
  c.comp.resize(n * n * n);
  for (const auto& [key, val] : j.at("comp").items()) {
    auto bar1 = key.find('|');
    auto bar2 = key.find('|', bar1 == std::string::npos ? 0 : bar1 + 1);
    if (bar1 == std::string::npos || bar2 == std::string::npos)
      throw malformed_input("hf_category.comp: key '" + key +
                            "' is not of the form a|b|c");
    int a = resolve(c.ob, key.substr(0, bar1), "hf_category.comp");
    int b = resolve(c.ob, key.substr(bar1 + 1, bar2 - bar1 - 1),
                    "hf_category.comp");
    int d = resolve(c.ob, key.substr(bar2 + 1), "hf_category.comp");
    auto& t = c.comp[(a * n + b) * n + d];
    t.resize(c.homs(b, d).size());
    for (auto& row : t) row.assign(c.homs(a, b).size(), -1);
    for (const auto& [gid, row] : val.items()) {
      int g = resolve(c.homs(b, d), gid, "hf_category.comp." + key);
      for (const auto& [fid, hid] : row.items())
        t[g][resolve(c.homs(a, b), fid, "hf_category.comp." + key)] =
            resolve(c.homs(a, d), hid.get<std::string>(),
                    "hf_category.comp." + key);
    }
    for (const auto& row : t)
      for (int v : row)
        if (v < 0)
          throw incomplete_input("hf_category.comp." + key +
                                 ": table is not total");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        auto& t = c.comp[(a * n + b) * n + d];
        if (!t.empty()) continue;
        // an absent key is fine only when no composable pair exists
        if (c.homs(b, d).size() > 0 && c.homs(a, b).size() > 0)
          throw incomplete_input("hf_category.comp: missing table " +
                                 c.ob.name(a) + "|" + c.ob.name(b) + "|" +
                                 c.ob.name(d));
        t.resize(c.homs(b, d).size());
        for (auto& row : t) row.assign(c.homs(a, b).size(), 0);
      }
  return c;
}

inline HFFunctor load_hf_functor(const json& j, bool strict_closure) {
  for (const char* k : {"src", "dst", "ob_map", "hom_map"})
    if (!j.contains(k))
      throw malformed_input(std::string("hf_functor: missing '") + k + "'");
  HFFunctor F;
  F.src = load_hf(j.at("src"), strict_closure);
  F.dst = load_hf(j.at("dst"), strict_closure);
  const int n = F.src.n();
  F.ob_map.resize(n, -1);
  for (const auto& [k, v] : j.at("ob_map").items())
    F.ob_map[resolve(F.src.ob, k, "hf_functor.ob_map")] =
        resolve(F.dst.ob, v.get<std::string>(), "hf_functor.ob_map");
  for (int a = 0; a < n; ++a)
    if (F.ob_map[a] < 0)
      throw incomplete_input("hf_functor.ob_map: missing '" +
                             F.src.ob.name(a) + "'");
  F.hom_map.resize(n * n);
  for (const auto& [key, tab] : j.at("hom_map").items()) {
    auto [a, b] = parse_ob_pair(F.src.ob, key, "hf_functor.hom_map");
    F.hom_map[F.src.pidx(a, b)] =
        ExtFun(F.src.homs(a, b), F.dst.homs(F.ob_map[a], F.ob_map[b]),
               load_table(tab, F.src.homs(a, b),
                          F.dst.homs(F.ob_map[a], F.ob_map[b]),
                          "hf_functor.hom_map." + key));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (F.hom_map[F.src.pidx(a, b)].src().size() !=
              F.src.homs(a, b).size() &&
          F.src.homs(a, b).size() > 0)
        throw incomplete_input("hf_functor.hom_map: missing " +
                               F.src.ob.name(a) + "|" + F.src.ob.name(b));
  return F;
}

inline Relation load_relation(const json& j, const Setoid& base,
                              const std::string& where) {
  Relation r;
  r.base = base;
  if (!j.is_array())
    throw malformed_input(where + ": pairs must be an array");
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2)
      throw malformed_input(where + ": entries must be pairs");
    r.pairs.emplace(resolve(base, p.at(0).get<std::string>(), where),
                    resolve(base, p.at(1).get<std::string>(), where));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Serializers (used by round-trip tests and report emission)

inline json setoid_to_json(const Setoid& s) {
  json j;
  j["elements"] = s.names();
  json eq = json::array();
  for (int c = 0; c < s.class_count(); ++c) {
    const auto& mem = s.class_members(c);
    for (size_t k = 1; k < mem.size(); ++k)
      eq.push_back({s.name(mem[0]), s.name(mem[k])});
  }
  j["eq"] = eq;
  return j;
}

inline json table_to_json(const ExtFun& f) {
  json j = json::object();
  for (int x = 0; x < f.src().size(); ++x)
    j[f.src().name(x)] = f.dst().name(f(x));
  return j;
}

inline json family_to_json(const Family& f) {
  json j;
  j["index"] = setoid_to_json(f.index);
  json fibers = json::object();
  for (int i = 0; i < f.index.size(); ++i)
    fibers[f.index.name(i)] = setoid_to_json(f.fibers[i]);
  j["fibers"] = fibers;
  json trans = json::object();
  for (const auto& [key, t] : f.transports)
    trans[f.index.name(key.first) + "->" + f.index.name(key.second)] =
        table_to_json(t);
  j["transports"] = trans;
  return j;
}

inline json report_to_json(const Report& r) {
  json checks = json::array();
  if (r.ok())
    checks.push_back({{"law", "all"}, {"status", "pass"}, {"witness", ""}});
  for (const auto& v : r.violations)
    checks.push_back(
        {{"law", v.law}, {"status", "fail"}, {"witness", v.witness}});
  return checks;
}

}  // namespace setcat::io
