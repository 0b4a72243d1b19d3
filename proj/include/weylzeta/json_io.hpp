#pragma once

#include <chrono>
#include <cstdio>
#include <ctime>
#include <string>
#include <vector>

#include "json.hpp"

#include "bernoulli_gen.hpp"
#include "cyclotomic.hpp"
#include "lattice_zeta.hpp"
#include "poincare.hpp"
#include "relations.hpp"

namespace weylzeta {

#ifndef WEYLZETA_VERSION
#define WEYLZETA_VERSION "0.1.0"
#endif
inline const std::string kToolVersion = std::string("weylzeta ") + WEYLZETA_VERSION;

using Json = nlohmann::ordered_json;

/// Fixed 21 significant digits, so the same long double always prints the same bytes.
inline std::string format_ld(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.21Lg", v);
  return buf;
}

inline Json to_json(const Rational& q) { return q.get_str(); }

inline Json to_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

inline Json to_json(const Complex& z) { return Json{{"re", format_ld(z.real())}, {"im", format_ld(z.imag())}}; }

inline Json to_json(const CycloLaurent& c) {
  int n = c.conductor();
  Json terms = Json::array();
  for (const auto& [e, coef] : c.terms()) {
    Json coords = Json::array();
    CycloElem lifted = coef.embed(n);
    for (const auto& x : lifted.coords()) coords.push_back(x.get_str());
    terms.push_back({{"omega_pow", e}, {"coords", coords}});
  }
  return Json{{"conductor", n}, {"terms", terms}};
}

inline Json index_json(const std::vector<int>& I) {
  Json a = Json::array();
  for (int i : I) a.push_back(i + 1);
  return a;
}

inline Json to_json(const GenericVector& g) { return Json{{"phi", to_json(g.phi)}, {"provenance", g.provenance}}; }

inline Json to_json(const SumResult& r) {
  Json w = Json::array();
  for (const auto& s : r.warnings) w.push_back(s);
  return Json{{"value", to_json(r.value)},
              {"N", r.N},
              {"cauchyDiff", format_ld(r.cauchyDiff)},
              {"warnings", w},
              {"precision", r.precision}};
}

inline Json to_json(const BernoulliTable& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    Json k = Json::array();
    for (int x : e.k) k.push_back(x);
    entries.push_back({{"k", k}, {"value", to_json(e.value)}});
  }
  return Json{{"context",
               {{"system", t.system}, {"I", index_json(t.I)}, {"lambda", to_json(t.lambda)}, {"y", to_json(t.y)},
                {"phi", to_json(t.phi)}}},
              {"entries", entries}};
}

inline Json to_json(const PoincareRow& r) {
  return Json{{"delta", r.delta}, {"deltaI", r.deltaI}, {"mode", r.mode}, {"I", index_json(r.I)},
              {"expected", to_json(r.expected)}, {"computed", to_json(r.computed)}, {"pass", r.pass}};
}

inline Json to_json(const RelationCheck& c) {
  return Json{{"label", c.label},
              {"lhs", to_json(c.lhs)},
              {"rhs", to_json(c.rhs)},
              {"absErr", format_ld(c.absErr)},
              {"relErr", format_ld(c.relErr)},
              {"pass", c.pass},
              {"informational", !c.expected_pass}};
}

inline Json to_json(const RelationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json s = Json::array();
  for (const auto& z : r.s) s.push_back(to_json(z));
  Json w = Json::array();
  for (const auto& x : r.warnings) w.push_back(x);
  Json j{{"title", r.title},
         {"system", r.system},
         {"I", index_json(r.I)},
         {"tag", r.tag},
         {"s", s},
         {"y", to_json(r.y)},
         {"N", r.N},
         {"M", r.M},
         {"tolerance", format_ld(r.tol)},
         {"absFloor", format_ld(r.absFloor)},
         {"phi", to_json(r.phi)},
         {"conditionSharp", r.conditionSharp},
         {"precheck", {{"value", r.precheck.get_str()}, {"note", r.precheckNote}}}};
  if (!r.checks.empty()) {
    const auto& c = r.checks.front();
    j["lhs"] = to_json(c.lhs);
    j["rhs"] = to_json(c.rhs);
    j["absErr"] = format_ld(c.absErr);
    j["relErr"] = format_ld(c.relErr);
  }
  j["checks"] = checks;
  j["warnings"] = w;
  j["pass"] = r.pass;
  return j;
}

/// Everything that determines a run. Serialized into every report.
struct RunConfig {
  std::string command;
  std::string system;
  std::string I;
  std::vector<std::pair<std::string, std::string>> vectors;  // name -> raw text, in argument order
  long N = 0;
  long M = 0;
  std::string tolerance;
  unsigned long phi_seed = 0;
  std::string output;
  std::string precision = "extended";
  unsigned threads = 1;
};

inline Json to_json(const RunConfig& c) {
  Json v = Json::object();
  for (const auto& [k, x] : c.vectors) v[k] = x;
  return Json{{"command", c.command}, {"system", c.system},   {"I", c.I},
              {"vectors", v},         {"N", c.N},             {"M", c.M},
              {"tolerance", c.tolerance}, {"phiSeed", c.phi_seed}, {"output", c.output},
              {"precision", c.precision}, {"threads", c.threads}};
}

inline std::string utc_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Wraps a result with config, version and timestamp. Only "timestamp" varies between identical runs.
inline Json envelope(const RunConfig& cfg, const std::string& kind, Json result, bool with_timestamp = true) {
  Json j{{"tool", kToolVersion}, {"kind", kind}, {"config", to_json(cfg)}, {"result", std::move(result)}};
  if (with_timestamp) j["timestamp"] = utc_timestamp();
  return j;
}

}  // namespace weylzeta
