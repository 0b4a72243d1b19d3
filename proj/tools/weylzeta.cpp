// Command-line front end: poincare, weyl, bernoulli, zeta, verify, residue-check, lerch-check.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weylzeta.hpp"

using namespace weylzeta;

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<long double> parse_reals(const std::string& s) {
  std::vector<long double> v;
  for (const auto& t : split(s)) {
    try {
      if (t.find('/') != std::string::npos)
        v.push_back(to_long_double(parse_rational(t)));
      else
        v.push_back(std::stold(t));
    } catch (const std::logic_error&) {
      throw ParseError("bad number '" + t + "'");
    }
  }
  return v;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  for (const auto& t : split(s)) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(t, &used));
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + t + "'");
    }
  }
  return v;
}

RatVec parse_rats(const std::string& s) {
  RatVec v;
  for (const auto& t : split(s)) v.push_back(parse_rational(t));
  return v;
}

/// --I accepts 1-based indices or a Dynkin label such as D5 or A1^2.
std::vector<int> parse_I(const RootSystemData& d, const std::string& s) {
  if (s.empty()) return {};
  bool label = false;
  for (char c : s)
    if (std::isalpha(static_cast<unsigned char>(c))) label = true;
  std::vector<int> I = label ? find_subset_of_type(d, s) : parse_index_set(s);
  for (int i : I)
    if (i < 0 || i >= d.rank) throw DomainError("index " + std::to_string(i + 1) + " out of range for " + d.name());
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  return I;
}

std::string I_text(const std::vector<int>& I) {
  std::string s = "{";
  for (std::size_t i = 0; i < I.size(); ++i) s += (i ? "," : "") + std::to_string(I[i] + 1);
  return s + "}";
}

std::string complex_text(const Complex& z) {
  std::ostringstream o;
  o.precision(18);
  o << z.real();
  if (z.imag() != 0) o << (z.imag() < 0 ? " - " : " + ") << std::fabs(z.imag()) << "i";
  return o.str();
}

struct Common {
  bool json = false;
  unsigned threads = 0;
  std::string output;
  unsigned long phi_seed = 0;
  std::string phi;

  void attach(CLI::App* sub) {
    sub->add_flag("--json", json, "Print the JSON report instead of text");
    sub->add_option("--threads", threads, "Worker threads (default: hardware concurrency)");
    sub->add_option("--output", output, "Also write the JSON report to this file");
  }
  void attach_phi(CLI::App* sub) {
    sub->add_option("--phi-seed", phi_seed, "Seed for the generic-vector fallback search (0: try primes first)");
    sub->add_option("--phi", phi, "Explicit generic vector in simple-coroot coordinates");
  }
  unsigned worker_threads() const { return threads ? threads : default_threads(); }
  GenericVector generic(const RootSystemData& d) const {
    return phi.empty() ? choose_phi(d, phi_seed) : make_phi(d, parse_rats(phi));
  }
  RunConfig config(const std::string& cmd) const {
    RunConfig c;
    c.command = cmd;
    c.output = output;
    c.phi_seed = phi_seed;
    c.precision = to_string(precision_from_env());
    c.threads = worker_threads();
    if (!phi.empty()) c.vectors.emplace_back("phi", phi);
    return c;
  }
};

/// Prints text or JSON, writes --output, returns the exit code.
int emit(const Common& common, const RunConfig& cfg, const std::string& kind, const Json& result,
         const std::string& text, bool ok) {
  Json env = envelope(cfg, kind, result);
  if (!common.output.empty()) {
    std::ofstream f(common.output);
    if (!f) throw DomainError("cannot write " + common.output);
    f << env.dump(2) << "\n";
  }
  if (common.json)
    std::cout << env.dump(2) << "\n";
  else
    std::cout << text;
  return ok ? 0 : 1;
}

std::string report_text(const RelationReport& r) {
  std::ostringstream o;
  o << r.title << " on " << r.system << ", I = " << I_text(r.I) << "\n";
  o << "  Poincare pre-check: " << r.precheck.get_str() << " (" << r.precheckNote << ")\n";
  if (!r.phi.provenance.empty()) o << "  phi = " << to_string(r.phi.phi) << " [" << r.phi.provenance << "]\n";
  for (const auto& w : r.warnings) o << "  warning: " << w << "\n";
  for (const auto& c : r.checks) {
    o << "  " << (c.pass ? "PASS" : "FAIL") << (c.expected_pass ? "" : " (informational)") << "  " << c.label
      << "\n      lhs = " << complex_text(c.lhs.value) << "\n      rhs = " << complex_text(c.rhs.value)
      << "\n      relErr = " << format_ld(c.relErr) << "  absErr = " << format_ld(c.absErr) << "\n";
  }
  o << (r.pass ? "PASS" : "FAIL") << "\n";
  return o.str();
}

// ---------------------------------------------------------------- poincare

struct PoincareOpts {
  Common common;
  std::string system;
  std::string I;
  std::string eval;
  std::string mixed;
  std::string table;
};

int run_poincare(const PoincareOpts& o) {
  RunConfig cfg = o.common.config("poincare");
  cfg.system = o.system;
  cfg.I = o.I;
  if (!o.eval.empty()) cfg.vectors.emplace_back("eval", o.eval);
  if (!o.mixed.empty()) cfg.vectors.emplace_back("mixed", o.mixed);
  if (!o.table.empty()) cfg.vectors.emplace_back("table", o.table);

  if (!o.table.empty()) {
    if (o.table != "section6") throw ParseError("unknown table '" + o.table + "' (expected section6)");
    auto rows = section6_table();
    Json arr = Json::array();
    std::ostringstream t;
    bool ok = true;
    for (const auto& r : rows) {
      arr.push_back(to_json(r));
      ok = ok && r.pass;
      t << (r.pass ? "PASS " : "FAIL ") << r.delta << " / " << r.deltaI << " " << I_text(r.I) << " [" << r.mode
        << "] expected " << r.expected.get_str() << ", computed " << r.computed.get_str() << "\n";
    }
    return emit(o.common, cfg, "PoincareTable", arr, t.str(), ok);
  }

  if (o.system.empty()) throw ParseError("poincare needs a root system, e.g. A3");
  auto d = parse_root_system(o.system);
  std::vector<int> I = parse_I(d, o.I);
  Json res{{"system", d.name()}, {"I", index_json(I)}};
  std::ostringstream t;

  if (!o.mixed.empty()) {
    LengthClass cls;
    if (o.mixed == "long")
      cls = LengthClass::Long;
    else if (o.mixed == "short")
      cls = LengthClass::Short;
    else
      throw ParseError("--mixed takes long or short");
    std::vector<int> chosen = I;
    Rational v = 0;
    if (!o.I.empty()) {
      v = mixed_eval(d, I, cls);
    } else {
      // No I given: the first proper subset, largest first, with a non-zero value.
      std::vector<std::vector<int>> subsets;
      for (unsigned mask = 0; mask + 1 < (1u << d.rank); ++mask) {
        std::vector<int> J;
        for (int i = 0; i < d.rank; ++i)
          if (mask & (1u << i)) J.push_back(i);
        subsets.push_back(J);
      }
      std::stable_sort(subsets.begin(), subsets.end(),
                       [](const auto& a, const auto& b) { return a.size() > b.size(); });
      chosen.clear();
      for (const auto& J : subsets) {
        Rational x = mixed_eval(d, J, cls);
        if (sgn(x) != 0) {
          v = x;
          chosen = J;
          break;
        }
      }
    }
    res["I"] = index_json(chosen);
    res["mixed"] = o.mixed;
    res["value"] = v.get_str();
    t << v.get_str() << "\n";
    if (!o.common.json) t << "  (" << d.name() << ", I = " << I_text(chosen) << ", first class " << o.mixed << ")\n";
    return emit(o.common, cfg, "PoincareMixed", res, t.str(), true);
  }

  UniPoly w = chevalley_poly(d);
  UniPoly wI = chevalley_from_degrees(degrees_of(classify_subset(d, I)));
  UniPoly rel = relative_poly(d, I);
  Rational m1 = eval_minus_one(d, I);
  if (!o.eval.empty()) {
    if (o.eval != "-1") throw ParseError("--eval supports -1");
    res["value"] = m1.get_str();
    t << m1.get_str() << "\n";
    return emit(o.common, cfg, "PoincareEval", res, t.str(), true);
  }
  res["W"] = w.to_string();
  res["W_I"] = wI.to_string();
  res["W^I"] = rel.to_string();
  res["W^I(-1)"] = m1.get_str();
  res["deltaI"] = type_label(classify_subset(d, I));
  t << "W(u) = " << w.to_string() << "\n";
  t << "W_I(u) = " << wI.to_string() << "   [I = " << I_text(I) << ", type " << type_label(classify_subset(d, I)) << "]\n";
  t << "W^I(u) = " << rel.to_string() << "; W^I(-1)=" << m1.get_str() << "\n";
  return emit(o.common, cfg, "PoincarePolynomials", res, t.str(), true);
}

// ---------------------------------------------------------------- weyl

struct WeylOpts {
  Common common;
  std::string system;
  std::string I;
};

int run_weyl(const WeylOpts& o) {
  RunConfig cfg = o.common.config("weyl");
  cfg.system = o.system;
  cfg.I = o.I;
  auto d = parse_root_system(o.system);
  std::vector<int> I = parse_I(d, o.I);
  WeylGroup g(d);
  auto c = min_coset_reps(g, I);
  Json elems = Json::array();
  std::ostringstream t;
  t << d.name() << ": |W| = " << g.size() << ", |W_I| = " << c.W_I.size() << ", |W^I| = " << c.W_upper.size()
    << " for I = " << I_text(I) << "\n";
  t << "minimal coset representatives (word : length : inversion set of w^-1):\n";
  for (auto w : c.W_upper) {
    const auto& e = g[w];
    Json inv = Json::array();
    std::string invs;
    for (auto a : e.inversions) {
      inv.push_back(d.linear_form(a));
      invs += (invs.empty() ? "" : ", ") + d.linear_form(a);
    }
    elems.push_back({{"word", e.word_string()}, {"length", e.length()}, {"inversions", inv}});
    t << "  " << e.word_string() << " : " << e.length() << " : {" << invs << "}\n";
  }
  Json res{{"system", d.name()},
           {"I", index_json(I)},
           {"order", g.size()},
           {"W_I", c.W_I.size()},
           {"W^I", c.W_upper.size()},
           {"representatives", elems}};
  return emit(o.common, cfg, "WeylCosets", res, t.str(), true);
}

// ---------------------------------------------------------------- bernoulli

struct BernoulliOpts {
  Common common;
  std::string system;
  std::string I;
  std::string k;
  int kmax = -1;
  std::string m;
  std::string y;
  long lambda_max = 0;
  bool cross_check = false;
};

RatVec lambda_from(const RootSystemData& d, const std::vector<int>& I, const std::vector<long>& m) {
  RatVec lam(static_cast<std::size_t>(d.rank), Rational(0));
  for (std::size_t i = 0; i < I.size(); ++i) lam[static_cast<std::size_t>(I[i])] = m[i];
  return lam;
}

/// A_r with I = {2..r}: every k with |k| <= kmax at each lambda, y as given.
bool cross_check_Ar(const RootSystemData& d, const std::vector<int>& I, const GenericVector& phi, int kmax,
                    const std::vector<std::vector<long>>& ms, const RatVec& y, std::ostringstream& t, Json& rows) {
  bool ok = true;
  auto ks = multi_indices_up_to(static_cast<std::size_t>(d.rank), kmax);
  for (const auto& m : ms) {
    auto setup = make_setup(d, I, lambda_from(d, I, m), y, phi);
    auto tab = bernoulli_table(setup, ks);
    std::size_t bad = 0;
    for (const auto& e : tab.entries) {
      CycloLaurent want = closed_form_P_Ar(d.rank, e.k, y.empty() ? RatVec(static_cast<std::size_t>(d.rank), Rational(0)) : y, m);
      if (!(want == e.value)) ++bad;
    }
    ok = ok && bad == 0;
    Json mm = Json::array();
    for (long x : m) mm.push_back(x);
    rows.push_back({{"m", mm}, {"cases", tab.entries.size()}, {"mismatches", bad}});
    t << "  m = (";
    for (std::size_t i = 0; i < m.size(); ++i) t << (i ? "," : "") << m[i];
    t << "): " << tab.entries.size()
      << " multi-indices, " << bad << " mismatches\n";
  }
  return ok;
}

/// C_3 with I = {2,3}: coefficients of the five-term generating function, y = 0.
bool cross_check_C3(const RootSystemData& d, const GenericVector& phi, int kmax, const std::vector<std::vector<long>>& ms,
                    std::ostringstream& t, Json& rows) {
  bool ok = true;
  auto ks = multi_indices_up_to(5, kmax);
  for (const auto& m : ms) {
    auto setup = make_setup(d, {1, 2}, lambda_from(d, {1, 2}, m), {}, phi);
    auto tab = bernoulli_table(setup, ks);
    auto F = closed_form_F_C3(m[0], m[1], std::vector<int>(5, kmax));
    std::size_t bad = 0;
    for (const auto& e : tab.entries) {
      Rational kf = 1;
      for (int x : e.k) kf *= Rational(factorial(static_cast<unsigned long>(x)));
      if (!(F.coefficient(e.k).scaled(kf) == e.value)) ++bad;
    }
    Monomial special{1, 1, 2, 1, 1};
    bool nine = expand_P(d, {1, 2}, lambda_from(d, {1, 2}, m), {}, special, phi) == closed_form_P_C3_k21111(m[0], m[1]);
    if (!nine) ++bad;
    ok = ok && bad == 0;
    Json mm = Json::array();
    for (long x : m) mm.push_back(x);
    rows.push_back({{"m", mm}, {"cases", tab.entries.size() + 1}, {"mismatches", bad}});
    t << "  m = (" << m[0] << "," << m[1] << "): " << tab.entries.size() + 1 << " checks, " << bad << " mismatches\n";
  }
  return ok;
}

int run_bernoulli(const BernoulliOpts& o) {
  RunConfig cfg = o.common.config("bernoulli");
  cfg.system = o.system;
  cfg.I = o.I;
  if (!o.k.empty()) cfg.vectors.emplace_back("k", o.k);
  if (o.kmax >= 0) cfg.vectors.emplace_back("kmax", std::to_string(o.kmax));
  if (!o.m.empty()) cfg.vectors.emplace_back("m", o.m);
  if (!o.y.empty()) cfg.vectors.emplace_back("y", o.y);
  if (o.cross_check) cfg.vectors.emplace_back("cross-check", "true");
  cfg.M = o.lambda_max;

  auto d = parse_root_system(o.system);
  std::vector<int> I = parse_I(d, o.I);
  auto par = parabolic(d, I);
  RatVec y = o.y.empty() ? RatVec{} : parse_rats(o.y);
  if (!y.empty() && y.size() == 1 && d.rank > 1 && sgn(y[0]) == 0) y.assign(static_cast<std::size_t>(d.rank), Rational(0));
  if (!y.empty() && static_cast<int>(y.size()) != d.rank) throw DimensionMismatch("y needs " + std::to_string(d.rank) + " entries");
  GenericVector phi = o.common.generic(d);

  // lambda values: --m, or every m in [1..lambda-max]^|I|, or all ones.
  std::vector<std::vector<long>> ms;
  if (!o.m.empty()) {
    std::vector<long> m;
    for (int x : parse_ints(o.m)) m.push_back(x);
    if (m.size() != I.size()) throw DimensionMismatch("--m needs one entry per index in I");
    ms.push_back(m);
  } else if (o.lambda_max > 0) {
    std::vector<long> m(I.size(), 1);
    for (;;) {
      ms.push_back(m);
      std::size_t i = 0;
      while (i < m.size() && ++m[i] > o.lambda_max) m[i++] = 1;
      if (i == m.size()) break;
    }
  } else {
    ms.push_back(std::vector<long>(I.size(), 1));
  }

  std::ostringstream t;
  if (o.cross_check) {
    int kmax = o.kmax >= 0 ? o.kmax : 4;
    Json rows = Json::array();
    bool ok;
    bool isAr = d.family == Family::A && static_cast<int>(I.size()) == d.rank - 1 &&
                std::find(I.begin(), I.end(), 0) == I.end();
    if (isAr) {
      if (o.m.empty() && o.lambda_max == 0) {
        ms.clear();
        for (long base : {1L, 2L, 3L}) {
          std::vector<long> m;
          for (std::size_t i = 0; i < I.size(); ++i) m.push_back(base + static_cast<long>(i));
          ms.push_back(m);
        }
      }
      t << "expand_P vs explicit A_r formula, |k| <= " << kmax << "\n";
      ok = cross_check_Ar(d, I, phi, kmax, ms, y, t, rows);
    } else if (d.family == Family::C && d.rank == 3 && I == std::vector<int>{1, 2}) {
      if (!y.empty())
        for (const auto& v : y)
          if (sgn(v) != 0) throw DomainError("the C3 closed form is for y = 0");
      if (o.m.empty() && o.lambda_max == 0) ms = {{1, 1}, {1, 2}, {2, 1}};
      t << "expand_P vs C3 generating function, |k| <= " << kmax << "\n";
      ok = cross_check_C3(d, phi, kmax, ms, t, rows);
    } else {
      throw DomainError("no closed form for " + d.name() + " with I = " + I_text(I) +
                        " (available: A_r with I = {2..r}, C3 with I = {2,3})");
    }
    t << (ok ? "PASS" : "FAIL") << "\n";
    Json res{{"system", d.name()}, {"I", index_json(I)}, {"phi", to_json(phi)}, {"kmax", kmax}, {"rows", rows}, {"pass", ok}};
    return emit(o.common, cfg, "BernoulliCrossCheck", res, t.str(), ok);
  }

  std::vector<Monomial> ks;
  if (!o.k.empty()) {
    auto k = parse_ints(o.k);
    if (k.size() != par.delta_star.size())
      throw DimensionMismatch("k needs " + std::to_string(par.delta_star.size()) + " entries (one per root of Delta*)");
    ks.push_back(k);
  } else {
    ks = multi_indices_up_to(par.delta_star.size(), o.kmax >= 0 ? o.kmax : 2);
  }
  Json tables = Json::array();
  t << d.name() << ", I = " << I_text(I) << ", phi = " << to_string(phi.phi) << " [" << phi.provenance << "]\n";
  t << "Delta* order:";
  for (auto a : par.delta_star) t << " " << d.linear_form(a);
  t << "\n";
  for (const auto& m : ms) {
    auto setup = make_setup(d, I, lambda_from(d, I, m), y, phi);
    auto tab = bernoulli_table(setup, ks, o.common.worker_threads());
    tables.push_back(to_json(tab));
    t << "lambda = " << to_string(tab.lambda) << "\n";
    for (const auto& e : tab.entries) {
      t << "  P(";
      for (std::size_t i = 0; i < e.k.size(); ++i) t << (i ? "," : "") << e.k[i];
      t << ") = " << e.value.to_string() << "\n";
    }
  }
  Json res = tables.size() == 1 ? tables[0] : tables;
  if (ks.size() == 1 && tables.size() == 1) res["value"] = tables[0]["entries"][0]["value"];
  return emit(o.common, cfg, "BernoulliTable", res, t.str(), true);
}

// ---------------------------------------------------------------- zeta

struct ZetaOpts {
  Common common;
  std::string system;
  std::string s;
  std::string y;
  std::string I;
  long N = 1000;
};

int run_zeta(const ZetaOpts& o) {
  RunConfig cfg = o.common.config("zeta");
  cfg.system = o.system;
  cfg.I = o.I;
  cfg.N = o.N;
  cfg.vectors.emplace_back("s", o.s);
  if (!o.y.empty()) cfg.vectors.emplace_back("y", o.y);
  const auto& d = parse_root_system_cached(o.system);
  auto s = parse_reals(o.s);
  if (s.size() != d.num_positive())
    throw DimensionMismatch("s needs " + std::to_string(d.num_positive()) + " entries (one per positive root)");
  RatVec y = o.y.empty() ? RatVec{} : parse_rats(o.y);
  auto args = make_args(d, real_exponents(s), y, parse_I(d, o.I));
  Precision p = precision_from_env();
  SumResult r = o.I.empty() ? zeta_r(args, o.N, o.common.worker_threads(), p)
                            : S_direct(args, o.N, o.common.worker_threads(), p);
  std::ostringstream t;
  t << (o.I.empty() ? "zeta_r" : "S") << " = " << complex_text(r.value) << "  (N = " << r.N
    << ", cauchyDiff = " << format_ld(r.cauchyDiff) << ", " << r.precision << ")\n";
  for (const auto& w : r.warnings) t << "warning: " << w << "\n";
  Json res = to_json(r);
  res["system"] = d.name();
  return emit(o.common, cfg, "SumResult", res, t.str(), true);
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
  Common common;
  std::string templ;
  std::string system;
  std::string I;
  bool generic = false;
  std::string k;
  std::string s;
  std::string y;
  long N = 0;
  long M = 0;
  long N2 = 0;
  double tol = 1e-6;
};

int run_verify(const VerifyOpts& o) {
  RunConfig cfg = o.common.config("verify");
  cfg.system = o.templ.empty() ? o.system : "template:" + o.templ;
  cfg.I = o.I;
  std::ostringstream tolText;
  tolText << o.tol;
  cfg.tolerance = tolText.str();
  if (!o.k.empty()) cfg.vectors.emplace_back("k", o.k);
  if (!o.s.empty()) cfg.vectors.emplace_back("s", o.s);
  if (!o.y.empty()) cfg.vectors.emplace_back("y", o.y);
  if (o.N2) cfg.vectors.emplace_back("N2", std::to_string(o.N2));
  unsigned th = o.common.worker_threads();
  Precision p = precision_from_env();
  long double tol = o.tol;
  RelationReport rep;

  if (!o.templ.empty()) {
    auto k = o.k.empty() ? std::vector<int>{} : parse_ints(o.k);
    auto s = o.s.empty() ? std::vector<long double>{} : parse_reals(o.s);
    if (o.templ == "A2") {
      if (k.empty()) k = {2, 2};
      if (s.empty()) s = {2};
      if (k.size() != 2 || s.size() != 1) throw DimensionMismatch("A2 template takes --k k12,k13 and --s s23");
      cfg.N = o.N ? o.N : 3000;
      rep = template_A2(k[0], k[1], s[0], cfg.N, tol, th, p);
    } else if (o.templ == "A3") {
      if (k.empty()) k = {2, 2, 2};
      if (s.empty()) s = {2, 2, 2};
      if (k.size() != 3 || s.size() != 3) throw DimensionMismatch("A3 template takes --k k12,k13,k14 and --s s23,s24,s34");
      cfg.N = o.N ? o.N : 80;
      cfg.M = o.N2 ? o.N2 : 2000;
      rep = template_A3({k[0], k[1], k[2]}, {s[0], s[1], s[2]}, cfg.N, cfg.M, tol, th, p);
    } else if (o.templ == "C3") {
      if (s.empty()) s = {1, 1, 2, 1};
      if (s.size() != 4) throw DimensionMismatch("C3 template takes --s s,t,u,v");
      cfg.N = o.N ? o.N : 300;
      cfg.M = o.N2 ? o.N2 : 3000;
      rep = template_C3(s[0], s[1], s[2], s[3], cfg.N, cfg.M, tol, th, p);
    } else if (o.templ == "G2-values") {
      cfg.N = o.N ? o.N : 4000;
      rep = check_G2_values(cfg.N, tol, th, p);
    } else {
      throw ParseError("unknown template '" + o.templ + "' (A2, A3, C3, G2-values)");
    }
  } else {
    if (o.system.empty()) throw ParseError("verify needs --template or --system");
    const auto& d = parse_root_system_cached(o.system);
    std::vector<int> I = parse_I(d, o.I);
    auto par = parabolic(d, I);
    auto k = parse_ints(o.k);
    auto s = o.s.empty() ? std::vector<long double>{} : parse_reals(o.s);
    if (k.size() != par.delta_star.size())
      throw DimensionMismatch("k needs " + std::to_string(par.delta_star.size()) + " entries (one per root of Delta*)");
    if (s.size() != par.delta_I_plus.size())
      throw DimensionMismatch("s needs " + std::to_string(par.delta_I_plus.size()) + " entries (one per root of Delta_{I+})");
    std::vector<Complex> sv(d.num_positive());
    for (std::size_t j = 0; j < k.size(); ++j) sv[par.delta_star[j]] = Complex(k[j]);
    for (std::size_t j = 0; j < s.size(); ++j) sv[par.delta_I_plus[j]] = Complex(s[j]);
    RatVec y = o.y.empty() ? RatVec{} : parse_rats(o.y);
    RelationSpec spec{&d, I, sv, y, "generic"};
    cfg.N = o.N ? o.N : 2000;
    cfg.M = o.M ? o.M : 400;
    rep = verify(spec, tol, cfg.N, cfg.M, o.common.generic(d), th, p);
  }
  return emit(o.common, cfg, "RelationReport", to_json(rep), report_text(rep), rep.pass);
}

// ---------------------------------------------------------------- residue-check

struct ResidueOpts {
  Common common;
  std::string system;
  std::string I;
  std::string m;
  std::string y;
  unsigned long seed = 1;
  int nodes = 64;
  double tol = 1e-6;
};

int run_residue(const ResidueOpts& o) {
  RunConfig cfg = o.common.config("residue-check");
  cfg.system = o.system;
  cfg.I = o.I;
  std::ostringstream tolText;
  tolText << o.tol;
  cfg.tolerance = tolText.str();
  cfg.vectors.emplace_back("m", o.m);
  cfg.vectors.emplace_back("seed", std::to_string(o.seed));
  cfg.vectors.emplace_back("nodes", std::to_string(o.nodes));
  if (!o.y.empty()) cfg.vectors.emplace_back("y", o.y);
  auto d = parse_root_system(o.system);
  std::vector<int> I = parse_I(d, o.I);
  auto par = parabolic(d, I);
  std::vector<long> m;
  for (int x : parse_ints(o.m)) m.push_back(x);
  if (m.size() != I.size()) throw DimensionMismatch("--m needs one entry per index in I");
  RatVec lam = lambda_from(d, I, m);
  RatVec y = o.y.empty() ? RatVec{} : parse_rats(o.y);
  GenericVector phi = o.common.generic(d);

  // Random point: real and imaginary parts in (-0.6, 0.6).
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  std::vector<ComplexLD> tp;
  for (std::size_t i = 0; i < par.delta_star.size(); ++i) tp.emplace_back(u(rng), u(rng));

  ComplexLD direct = F_numeric(make_setup(d, I, lam, y, phi), tp);
  auto order = par.delta_I_plus;
  auto r1 = residue_project(d, I, lam, y, order, tp, phi, o.nodes);
  std::reverse(order.begin(), order.end());
  auto r2 = residue_project(d, I, lam, y, order, tp, phi, o.nodes);
  auto rel = [](ComplexLD a, ComplexLD b) {
    long double s = std::max(std::abs(a), std::abs(b));
    return s > 0 ? std::abs(a - b) / s : 0.0L;
  };
  long double e1 = rel(r1.value, direct), e2 = rel(r2.value, direct), e12 = rel(r1.value, r2.value);
  bool ok = e1 <= o.tol && e2 <= o.tol && e12 <= o.tol;
  Json pt = Json::array();
  for (const auto& z : tp) pt.push_back(to_json(Complex(z)));
  Json res{{"system", d.name()},
           {"I", index_json(I)},
           {"lambda", to_json(lam)},
           {"phi", to_json(phi)},
           {"t", pt},
           {"F_I", to_json(Complex(direct))},
           {"residue", to_json(Complex(r1.value))},
           {"residueReversed", to_json(Complex(r2.value))},
           {"relErr", format_ld(e1)},
           {"relErrReversed", format_ld(e2)},
           {"relErrOrders", format_ld(e12)},
           {"baseRadius", format_ld(r1.base_radius)},
           {"evaluations", r1.evaluations + r2.evaluations},
           {"pass", ok}};
  std::ostringstream t;
  t << "F_I at t          = " << complex_text(Complex(direct)) << "\n";
  t << "residue of F      = " << complex_text(Complex(r1.value)) << "  relErr " << format_ld(e1) << "\n";
  t << "reversed order    = " << complex_text(Complex(r2.value)) << "  relErr " << format_ld(e2) << "\n";
  t << (ok ? "PASS" : "FAIL") << "\n";
  return emit(o.common, cfg, "ResidueCheck", res, t.str(), ok);
}

// ---------------------------------------------------------------- lerch-check

struct LerchOpts {
  Common common;
  std::string system;
  int i = 1;
  std::string k;
  double s = 2;
  long N = 3000;
  double tol = 1e-6;
};

int run_lerch(const LerchOpts& o) {
  RunConfig cfg = o.common.config("lerch-check");
  cfg.system = o.system;
  cfg.I = std::to_string(o.i);
  cfg.N = o.N;
  std::ostringstream tolText;
  tolText << o.tol;
  cfg.tolerance = tolText.str();
  cfg.vectors.emplace_back("k", o.k);
  std::ostringstream st;
  st << o.s;
  cfg.vectors.emplace_back("s", st.str());
  const auto& d = parse_root_system_cached(o.system);
  if (o.i < 1 || o.i > d.rank) throw DomainError("--I must name one simple root");
  auto k = parse_ints(o.k);
  auto rep = lerch_relation_check(d, o.i - 1, k, Complex(o.s), o.N, o.common.generic(d), o.tol,
                                  o.common.worker_threads(), precision_from_env());
  Json res = to_json(rep);
  Json coeffs = Json::array();
  std::ostringstream t;
  t << "Lerch coefficients b(nu, j):\n";
  for (const auto& c : lerch_coeffs(d, o.i - 1, k, rep.phi)) {
    coeffs.push_back({{"nu", c.nu.get_str()}, {"j", c.j}, {"b", c.b.get_str()}});
    t << "  nu = " << c.nu.get_str() << ", j = " << c.j << ": " << c.b.get_str() << "\n";
  }
  res["coefficients"] = coeffs;
  return emit(o.common, cfg, "RelationReport", res, t.str() + report_text(rep), rep.pass);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta-functions of root systems: Weyl groups, Poincare polynomials, Bernoulli functions, relations"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  PoincareOpts po;
  auto* sp = app.add_subcommand("poincare", "Poincare polynomials and their values at -1");
  sp->add_option("system", po.system, "Root system, e.g. A3, E6");
  sp->add_option("--I", po.I, "Index set (1-based, e.g. 1,3) or a type label (e.g. D5)");
  sp->add_option("--eval", po.eval, "Evaluate W^I at this point (only -1)");
  sp->add_option("--mixed", po.mixed, "Two-length evaluation with this class first (long|short)");
  sp->add_option("--table", po.table, "Reproduce a table (section6)");
  po.common.attach(sp);

  WeylOpts wo;
  auto* sw = app.add_subcommand("weyl", "Weyl group and minimal coset representatives");
  sw->add_option("system", wo.system, "Root system")->required();
  sw->add_option("--I", wo.I, "Index set or type label");
  wo.common.attach(sw);

  BernoulliOpts bo;
  auto* sb = app.add_subcommand("bernoulli", "Exact Bernoulli functions P(k, y, lambda; I)");
  sb->add_option("system", bo.system, "Root system")->required();
  sb->add_option("--I", bo.I, "Index set or type label");
  sb->add_option("--k", bo.k, "Exponents on Delta* in canonical order");
  sb->add_option("--kmax", bo.kmax, "All k with |k| <= kmax");
  sb->add_option("--m", bo.m, "lambda = sum m_i lambda_i over i in I");
  sb->add_option("--y", bo.y, "y in simple-coroot coordinates");
  sb->add_option("--lambda-max", bo.lambda_max, "Tabulate every lambda with 1 <= m_i <= this");
  sb->add_flag("--cross-check", bo.cross_check, "Compare with the explicit formulas");
  bo.common.attach(sb);
  bo.common.attach_phi(sb);

  ZetaOpts zo;
  auto* sz = app.add_subcommand("zeta", "Truncated zeta_r (or S with --I)");
  sz->add_option("--system", zo.system, "Root system")->required();
  sz->add_option("--s", zo.s, "Exponents over Delta_+ in canonical order")->required();
  sz->add_option("--y", zo.y, "y in simple-coroot coordinates");
  sz->add_option("--I", zo.I, "Compute S(s, y; I) instead");
  sz->add_option("--N", zo.N, "Truncation");
  zo.common.attach(sz);

  VerifyOpts vo;
  auto* sv = app.add_subcommand("verify", "Check a functional relation numerically");
  sv->add_option("--template", vo.templ, "A2 | A3 | C3 | G2-values");
  sv->add_option("--system", vo.system, "Root system for a generic check");
  sv->add_option("--I", vo.I, "Index set");
  sv->add_flag("--generic", vo.generic, "Signed Weyl sum against the Bernoulli side");
  sv->add_option("--k", vo.k, "Integer exponents on Delta*");
  sv->add_option("--s", vo.s, "Exponents on Delta_{I+} (template: the free exponents)");
  sv->add_option("--y", vo.y, "y in simple-coroot coordinates");
  sv->add_option("--N", vo.N, "Truncation of the lattice sums");
  sv->add_option("--M", vo.M, "Truncation of the lambda sum on the Bernoulli side");
  sv->add_option("--lambda-max", vo.M, "Same as --M");
  sv->add_option("--N2", vo.N2, "Truncation of auxiliary rank-2 sums in templates");
  sv->add_option("--tol", vo.tol, "Relative tolerance");
  vo.common.attach(sv);
  vo.common.attach_phi(sv);

  ResidueOpts ro;
  auto* sr = app.add_subcommand("residue-check", "Iterated residues of F against F_I");
  sr->add_option("--system", ro.system, "Root system")->required();
  sr->add_option("--I", ro.I, "Index set")->required();
  sr->add_option("--m", ro.m, "lambda = sum m_i lambda_i over i in I")->required();
  sr->add_option("--y", ro.y, "y in simple-coroot coordinates");
  sr->add_option("--seed", ro.seed, "Seed for the random t-point");
  sr->add_option("--nodes", ro.nodes, "Quadrature nodes per circle");
  sr->add_option("--tol", ro.tol, "Relative tolerance");
  ro.common.attach(sr);
  ro.common.attach_phi(sr);

  LerchOpts lo;
  auto* sl = app.add_subcommand("lerch-check", "Signed sum against the Lerch-zeta combination (|I| = 1)");
  sl->add_option("--system", lo.system, "Root system")->required();
  sl->add_option("--I", lo.i, "The single simple root i (1-based)");
  sl->add_option("--k", lo.k, "Exponents (>= 2) on Delta_+ minus alpha_i")->required();
  sl->add_option("--s", lo.s, "Exponent on alpha_i");
  sl->add_option("--N", lo.N, "Truncation");
  sl->add_option("--tol", lo.tol, "Relative tolerance");
  lo.common.attach(sl);
  lo.common.attach_phi(sl);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sp->parsed()) return run_poincare(po);
    if (sw->parsed()) return run_weyl(wo);
    if (sb->parsed()) return run_bernoulli(bo);
    if (sz->parsed()) return run_zeta(zo);
    if (sv->parsed()) return run_verify(vo);
    if (sr->parsed()) return run_residue(ro);
    if (sl->parsed()) return run_lerch(lo);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
