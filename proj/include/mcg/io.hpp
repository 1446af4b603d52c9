#pragma once

// JSON file formats (UTF-8 throughout):
//   relation file:      {name, surface:{g,n}, params, lhs, rhs}
//   factorization file: {surface:{g,n}, zoneA?, target, letters:[{curve,
//                        conjugator?, sign?}], trace?}
//   registry dump:      {surface:{g,n}, curves:[{name, kind, pi1_word?,
//                        crossings?, base?, conjugator?, homology}]}
// Words are serialized in the CLI DSL.

#include <fstream>
#include <string>

#include "json.hpp"
#include "mcg/dsl.hpp"
#include "mcg/factorizations.hpp"
#include "mcg/invariants.hpp"

namespace mcg {

using nlohmann::json;

inline json surfaceJson(const SurfaceSpec& s) { return json{{"g", s.g}, {"n", s.n}}; }

inline SurfaceSpec surfaceFromJson(const json& j) {
  return SurfaceSpec{j.at("g").get<int>(), j.at("n").get<int>()};
}

// --- relations ---------------------------------------------------------------

inline json relationJson(const Registry& reg, const Relation& r) {
  json p = json::object();
  for (auto& [k, v] : r.params) p[k] = v;
  return json{{"name", r.name},
              {"surface", surfaceJson(reg.model.spec)},
              {"params", p},
              {"lhs", printWord(reg, r.lhs)},
              {"rhs", printWord(reg, r.rhs)}};
}

inline Relation relationFromJson(Registry& reg, const json& j) {
  Relation r;
  r.name = j.at("name").get<std::string>();
  if (j.contains("params"))
    for (auto& [k, v] : j.at("params").items()) r.params[k] = v.get<int>();
  r.lhs = parseWord(j.at("lhs").get<std::string>(), reg);
  r.rhs = parseWord(j.at("rhs").get<std::string>(), reg);
  return r;
}

// --- factorizations ----------------------------------------------------------

inline json letterJson(const Registry& reg, const TwistLetterRef& l) {
  const Curve& c = reg.curve(l.curve);
  json out;
  if (c.basic) {
    out["curve"] = c.name;
  } else {
    out["curve"] = reg.curve(c.base).name;
    TwistWord conj;
    conj.surface = reg.model.spec;
    for (auto& [ci, s] : c.conj) conj.letters.push_back({ci, s});
    out["conjugator"] = printWord(reg, conj);
  }
  if (l.sign != +1) out["sign"] = l.sign;
  return out;
}

inline json factorizationJson(const Registry& reg, const GeneratedFactorization& f,
                              bool withTrace = false) {
  json letters = json::array();
  for (const auto& l : f.fact.word.letters) letters.push_back(letterJson(reg, l));
  json out{{"surface", surfaceJson(reg.model.spec)},
           {"zoneA", reg.model.nA},
           {"target", printWord(reg, f.target)},
           {"letters", letters}};
  if (withTrace) {
    json tr = json::array();
    for (const TraceStep& st : f.trace)
      tr.push_back(json{{"rule", st.rule},
                        {"before", printWord(reg, st.before)},
                        {"after", printWord(reg, st.after)}});
    out["trace"] = tr;
  }
  return out;
}

inline GeneratedFactorization factorizationFromJson(Registry& reg, Engine& eng, const json& j) {
  GeneratedFactorization f;
  f.target = parseWord(j.at("target").get<std::string>(), reg);
  f.fact.word.surface = reg.model.spec;
  for (const json& lj : j.at("letters")) {
    std::string curve = lj.at("curve").get<std::string>();
    int sign = lj.contains("sign") ? lj.at("sign").get<int>() : +1;
    int idx = reg.require(curve);
    if (lj.contains("conjugator")) {
      TwistWord conj = parseWord(lj.at("conjugator").get<std::string>(), reg);
      std::vector<std::pair<int, int>> cv;
      for (const auto& b : conj.letters) cv.emplace_back(b.curve, b.sign);
      idx = reg.derivedFor(idx, cv);
    }
    f.fact.word.letters.push_back({idx, sign});
  }
  if (j.contains("trace"))
    for (const json& tj : j.at("trace"))
      f.trace.push_back({tj.at("rule").get<std::string>(),
                         parseWord(tj.at("before").get<std::string>(), reg),
                         parseWord(tj.at("after").get<std::string>(), reg)});
  (void)eng;
  return f;
}

// --- registry dump/load --------------------------------------------------------

inline json registryJson(const Registry& reg) {
  json curves = json::array();
  for (const Curve& c : reg.curves) {
    json cj{{"name", c.name}, {"kind", c.basic ? "basic" : "derived"}};
    cj["homology"] = c.cls;
    cj["nonseparating"] = c.nonsepCertified;
    if (c.basic) {
      cj["pi1_word"] = reg.model.polyWord(c.geom.poly).str();
      // crossings with each pi1 generator: ordered signed lists
      json crossings = json::object();
      for (int k = 0; k < reg.model.spec.rank(); ++k) {
        json arr = json::array();
        for (const Crossing& x : polyCrossings(reg.genPolys[k], c.geom.poly))
          arr.push_back(x.sign);
        if (!arr.empty()) crossings["g" + std::to_string(k)] = arr;
      }
      cj["crossings"] = crossings;
    } else {
      cj["base"] = reg.curve(c.base).name;
      TwistWord conj;
      conj.surface = reg.model.spec;
      for (auto& [ci, s] : c.conj) conj.letters.push_back({ci, s});
      cj["conjugator"] = printWord(reg, conj);
    }
    curves.push_back(std::move(cj));
  }
  return json{{"surface", surfaceJson(reg.model.spec)},
              {"zoneA", reg.model.nA},
              {"curves", curves}};
}

inline json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline void writeJsonFile(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(1) << "\n";
}

}  // namespace mcg
