#pragma once

#include <cmath>
#include <complex>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "bernoulli_gen.hpp"
#include "closed_forms.hpp"
#include "lattice_zeta.hpp"
#include "numeric.hpp"
#include "poincare.hpp"
#include "root_system.hpp"
#include "weyl.hpp"

namespace weylzeta {

/// Root systems live for the whole run so that ZetaArgs can point at them.
inline const RootSystemData& parse_root_system_cached(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<RootSystemData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<RootSystemData>(parse_root_system(name));
  return *slot;
}

/// One relation instance: exponents s over Delta_+ in canonical order (integers on Delta*).
struct RelationSpec {
  const RootSystemData* system = nullptr;
  std::vector<int> I;
  std::vector<Complex> s;
  RatVec y;
  std::string tag = "generic";
};

struct RelationCheck {
  std::string label;
  SumResult lhs;
  SumResult rhs;
  long double absErr = 0;
  long double relErr = 0;
  bool pass = false;
  bool expected_pass = true;  // false only for checks reported as informational
};

struct RelationReport {
  std::string title;
  std::string system;
  std::vector<int> I;  // 0-based
  std::string tag;
  std::vector<Complex> s;
  RatVec y;
  long N = 0;
  long M = 0;
  long double tol = 1e-6L;
  long double absFloor = 1e-12L;
  GenericVector phi;
  bool conditionSharp = true;
  Integer precheck = 0;
  std::string precheckNote;
  std::vector<RelationCheck> checks;
  std::vector<std::string> warnings;
  bool pass = false;

  void add(std::string label, const SumResult& lhs, const SumResult& rhs, bool informational = false) {
    RelationCheck c{std::move(label), lhs, rhs, 0, 0, false, !informational};
    c.absErr = std::abs(lhs.value - rhs.value);
    long double scale = std::max(std::abs(lhs.value), std::abs(rhs.value));
    c.relErr = scale > 0 ? c.absErr / scale : 0;
    c.pass = c.relErr <= tol || c.absErr <= absFloor;
    checks.push_back(std::move(c));
    finish();
  }
  void finish() {
    pass = true;
    for (const auto& c : checks)
      if (c.expected_pass && !c.pass) pass = false;
  }
};

inline SumResult exact_value(Complex v) {
  SumResult r;
  r.value = v;
  return r;
}

/// Maps exponents listed against coroot-coefficient vectors to the canonical order.
inline std::vector<Complex> to_canonical(const RootSystemData& d, const std::vector<IntCoords>& forms,
                                         const std::vector<Complex>& s) {
  if (forms.size() != s.size() || s.size() != d.num_positive()) throw DimensionMismatch("exponent list length");
  std::vector<Complex> out(s.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    auto idx = d.find_by_coroot(forms[i]);
    if (!idx) throw DomainError("not a positive coroot");
    out[*idx] = s[i];
  }
  return out;
}

namespace forms {
inline const std::vector<IntCoords> A2 = {{1, 0}, {1, 1}, {0, 1}};  // s12, s13, s23
inline const std::vector<IntCoords> A3 = {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}};
inline const std::vector<IntCoords> C2 = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
inline const std::vector<IntCoords> C3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1},
                                          {0, 1, 2}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}};
inline const std::vector<IntCoords> G2 = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
}  // namespace forms

/// zeta_r with exponents listed against the given forms.
inline SumResult zeta_listed(const RootSystemData& d, const std::vector<IntCoords>& f, const std::vector<long double>& s,
                             long N, unsigned threads, Precision p) {
  return zeta_r(make_args(d, to_canonical(d, f, real_exponents(s))), N, threads, p);
}

inline std::vector<long> integer_k(const RelationSpec& spec, bool require) {
  const auto& d = *spec.system;
  auto par = parabolic(d, spec.I);
  std::vector<long> k(d.num_positive(), 0);
  for (auto a : par.delta_star) {
    Complex v = spec.s[a];
    long r = std::lround(static_cast<double>(v.real()));
    if (v.imag() != 0 || static_cast<long double>(r) != v.real()) {
      if (require) throw SignOnNonInteger("exponent on root " + d.linear_form(a) + " must be an integer");
      continue;
    }
    k[a] = r;
  }
  return k;
}

/// A root in an A_1 component needs k >= 2. Only an A_1 system itself has such a component here.
inline bool condition_sharp(const RelationSpec& spec) {
  const auto& d = *spec.system;
  if (!(d.family == Family::A && d.rank == 1)) return true;
  auto par = parabolic(d, spec.I);
  for (auto a : par.delta_star)
    if (spec.s[a].real() < 2) return false;
  return true;
}

/// sum_{w in W^I} prod_{alpha in Delta_{w^-1}} (-1)^{k_alpha} zeta_r(w^-1 s, w^-1 y).
inline SumResult lhs_signed(const RelationSpec& spec, long N, unsigned threads = default_threads(),
                            Precision p = precision_from_env()) {
  const auto& d = *spec.system;
  WeylGroup g(d);
  auto c = min_coset_reps(g, spec.I);
  auto par = parabolic(d, spec.I);
  RatVec y = spec.y.empty() ? RatVec(static_cast<std::size_t>(d.rank), Rational(0)) : spec.y;
  SumResult total;
  total.N = N;
  for (auto w : c.W_upper) {
    int sign = 1;
    for (auto a : g[w].inversions) {
      if (std::find(par.delta_I_plus.begin(), par.delta_I_plus.end(), a) != par.delta_I_plus.end())
        throw DomainError("inversion set of a coset representative meets Delta_{I+}");
      Complex v = spec.s[a];
      long r = std::lround(static_cast<double>(v.real()));
      if (v.imag() != 0 || static_cast<long double>(r) != v.real())
        throw SignOnNonInteger("exponent on inverted root " + d.linear_form(a) + " is not an integer");
      if (r % 2 != 0) sign = -sign;
    }
    auto [ws, wy] = act_on_args(g, w, spec.s, y);
    total += zeta_r(make_args(d, ws, wy), N, threads, p).scaled(Complex(sign));
  }
  total.precision = to_string(p);
  return total;
}

/// (-1)^{|Delta*|} prod (2 pi i)^k/k! sum_{lambda, 1 <= m_i <= M} prod <alpha^vee,lambda>^{-s_alpha} P(k,y,lambda).
inline SumResult rhs_bernoulli(const RelationSpec& spec, long M, const GenericVector& phi, unsigned threads = 1) {
  const auto& d = *spec.system;
  auto par = parabolic(d, spec.I);
  auto kall = integer_k(spec, true);
  Monomial k;
  CycloLaurent pref(Rational(par.delta_star.size() % 2 ? -1 : 1));
  for (auto a : par.delta_star) {
    k.push_back(static_cast<int>(kall[a]));
    pref = pref * CycloLaurent::omega_power(static_cast<int>(kall[a]))
                      .scaled(Rational(1) / Rational(factorial(static_cast<unsigned long>(kall[a]))));
  }
  auto r = static_cast<std::size_t>(d.rank);
  RatVec lam(r, Rational(0));
  auto setup = make_setup(d, spec.I, lam, spec.y, phi);
  std::size_t nI = par.I.size();
  auto sum_upto = [&](long cap, std::vector<Complex>* cache) {
    ComplexNeumaier<long double> acc;
    std::vector<long> m(nI, 1);
    std::size_t idx = 0;
    for (;;) {
      Complex term;
      if (cache && idx < cache->size()) {
        term = (*cache)[idx];
      } else {
        for (std::size_t i = 0; i < nI; ++i) setup.lambda[static_cast<std::size_t>(par.I[i])] = m[i];
        Complex w = 1;
        for (auto a : par.delta_I_plus) {
          long double f = to_long_double(coroot_pair(d, a, setup.lambda));
          w *= std::exp(-spec.s[a] * std::log(f));
        }
        CycloLaurent P = to_laurent(expand_coefficients(setup, {k}, threads)[0]);
        term = w * (pref * P).evaluate<long double>();
      }
      acc.add(term);
      ++idx;
      if (nI == 0) break;
      std::size_t i = 0;
      while (i < nI && ++m[i] > cap) m[i++] = 1;
      if (i == nI) break;
    }
    return acc.value();
  };
  SumResult res;
  res.N = M;
  res.value = sum_upto(M, nullptr);
  if (nI > 0) res.cauchyDiff = std::abs(res.value - sum_upto(std::max(1L, M / 2), nullptr));
  return res;
}

inline Integer poincare_precheck(const RelationSpec& spec) {
  WeylGroup g(*spec.system);
  return signed_coset_count(g, min_coset_reps(g, spec.I), integer_k(spec, false));
}

inline bool nonzero_y(const RatVec& y) {
  for (const auto& v : y)
    if (sgn(v) != 0) return true;
  return false;
}

inline RelationReport new_report(const RelationSpec& spec, std::string title, long N, long M, long double tol) {
  RelationReport rep;
  rep.title = std::move(title);
  rep.system = spec.system->name();
  rep.I = spec.I;
  rep.tag = spec.tag;
  rep.s = spec.s;
  rep.y = spec.y;
  rep.N = N;
  rep.M = M;
  rep.tol = tol;
  rep.conditionSharp = condition_sharp(spec);
  rep.precheck = poincare_precheck(spec);
  bool equal = true;
  auto par = parabolic(*spec.system, spec.I);
  for (auto a : par.delta_star)
    if (spec.s[a] != spec.s[par.delta_star[0]]) equal = false;
  for (auto a : par.delta_I_plus)
    if (spec.s[a] != spec.s[par.delta_I_plus[0]]) equal = false;
  if (rep.precheck != 0)
    rep.precheckNote = "relation non-trivial";
  else
    rep.precheckNote = equal ? "LHS identically zero expected" : "signed coset count 0; LHS need not vanish for unequal exponents";
  if (nonzero_y(spec.y)) rep.warnings.push_back("nonzero y: experimental, no reference value to compare against");
  return rep;
}

/// Signed Weyl sum and the direct sum S against the Bernoulli side.
inline RelationReport verify(const RelationSpec& spec, long double tol, long N, long M, const GenericVector& phi,
                             unsigned threads = default_threads(), Precision p = precision_from_env()) {
  RelationReport rep = new_report(spec, "signed Weyl sum vs Bernoulli side", N, M, tol);
  rep.phi = phi;
  if (!rep.conditionSharp) rep.warnings.push_back("k < 2 on an A1 component; the identity need not hold");
  auto fr = std::async(std::launch::async, [&] { return rhs_bernoulli(spec, M, phi, 1); });
  SumResult lhs = lhs_signed(spec, N, threads, p);
  ZetaArgs args = make_args(*spec.system, spec.s, spec.y, spec.I);
  SumResult direct = S_direct(args, N, threads, p);
  SumResult rhs = fr.get();
  rep.add("signed Weyl sum vs Bernoulli side", lhs, rhs);
  rep.add("direct S vs Bernoulli side", direct, rhs);
  return rep;
}

/// The A2 identity with the zeta(2j) zeta(odd or even) right-hand side.
inline RelationReport template_A2(int k12, int k13, long double s23, long N, long double tol = 1e-6L,
                                  unsigned threads = default_threads(), Precision p = precision_from_env()) {
  const auto& d = parse_root_system_cached("A2");
  RelationSpec spec{&d, {1}, to_canonical(d, forms::A2, {Complex(k12), Complex(k13), Complex(s23)}), {}, "A2"};
  RelationReport rep = new_report(spec, "A2 three-term relation", N, 0, tol);
  auto z = [&](long double a, long double b, long double c) { return zeta_listed(d, forms::A2, {a, b, c}, N, threads, p); };
  auto sg = [](int e) { return e % 2 ? -1.0L : 1.0L; };
  SumResult lhs = z(k12, k13, s23);
  lhs += z(k12, s23, k13).scaled(sg(k12));
  lhs += z(s23, k12, k13).scaled(sg(k12 + k13));
  Complex rhs = 0;
  for (int j = 0; j <= k12 / 2; ++j)
    rhs += 2 * sg(k12) * to_long_double(Rational(binomial(k12 + k13 - 1 - 2 * j, k13 - 1))) *
           zeta_even_from_bernoulli(j).evaluate<long double>() * riemann_zeta<long double>(k12 + k13 + s23 - 2 * j);
  for (int j = 0; j <= k13 / 2; ++j)
    // sign (-1)^{k12} here too; (-1)^{k13} disagrees with the Bernoulli side whenever k12 + k13 is odd
    rhs += 2 * sg(k12) * to_long_double(Rational(binomial(k12 + k13 - 1 - 2 * j, k12 - 1))) *
           zeta_even_from_bernoulli(j).evaluate<long double>() * riemann_zeta<long double>(k12 + k13 + s23 - 2 * j);
  rep.add("three-term sum vs zeta products", lhs, exact_value(rhs));
  if (k12 == 2 && k13 == 2 && s23 == 2) {
    long double pi = pi_v<long double>();
    long double pi6 = std::pow(pi, 6.0L);
    rep.add("three-term sum vs pi^6/945", lhs, exact_value(pi6 / 945));
    rep.add("zeta_2(2,2,2) vs pi^6/2835", z(2, 2, 2), exact_value(pi6 / 2835));
  }
  return rep;
}

/// The four-term A3 relation and its three right-hand sides.
inline RelationReport template_A3(const std::array<int, 3>& k, const std::array<long double, 3>& s, long N,
                                  long N2 = 2000, long double tol = 1e-6L, unsigned threads = default_threads(),
                                  Precision p = precision_from_env()) {
  const auto& d = parse_root_system_cached("A3");
  const auto& a2 = parse_root_system_cached("A2");
  auto [k12, k13, k14] = k;
  auto [s23, s24, s34] = s;
  RelationSpec spec{&d, {1, 2},
                    to_canonical(d, forms::A3, {Complex(k12), Complex(k13), Complex(k14), Complex(s23), Complex(s24), Complex(s34)}),
                    {}, "A3"};
  RelationReport rep = new_report(spec, "A3 four-term relation", N, N2, tol);
  auto z3 = [&](std::vector<long double> e) { return zeta_listed(d, forms::A3, e, N, threads, p); };
  auto z2 = [&](long double a, long double b, long double c) { return zeta_listed(a2, forms::A2, {a, b, c}, N2, threads, p); };
  auto sg = [](long e) { return e % 2 ? -1.0L : 1.0L; };
  auto zeven = [](int j) { return zeta_even_from_bernoulli(j).evaluate<long double>().real(); };
  auto bin = [](long n, long r) { return to_long_double(Rational(binomial(n, r))); };

  SumResult lhs = z3({(long double)k12, (long double)k13, (long double)k14, s23, s24, s34});
  lhs += z3({(long double)k12, s23, s24, (long double)k13, (long double)k14, s34}).scaled(sg(k12));
  lhs += z3({s23, (long double)k12, s24, (long double)k13, s34, (long double)k14}).scaled(sg(k12 + k13));
  lhs += z3({s23, s24, (long double)k12, s34, (long double)k13, (long double)k14}).scaled(sg(k12 + k13 + k14));

  SumResult r1, r2, r3;
  for (int j = 0; j <= k12 / 2; ++j)
    for (int l3 = 0; l3 <= k12 - 2 * j; ++l3) {
      int l4 = k12 - 2 * j - l3;
      long double c = 2 * sg(k12) * bin(k13 + l3 - 1, l3) * bin(k14 + l4 - 1, l4) * zeven(j);
      if (c != 0) r1 += z2(s23 + k13 + l3, s24 + k14 + l4, s34).scaled(c);
    }
  for (int j = 0; j <= k13 / 2; ++j)
    for (int l2 = 0; l2 <= k13 - 2 * j; ++l2) {
      int l4 = k13 - 2 * j - l2;
      long double c = 2 * sg(k12 + l4) * bin(k12 + l2 - 1, l2) * bin(k14 + l4 - 1, l4) * zeven(j);
      if (c != 0) r2 += z2(s23 + k12 + l2, s24, s34 + k14 + l4).scaled(c);
    }
  for (int j = 0; j <= k14 / 2; ++j)
    for (int l2 = 0; l2 <= k14 - 2 * j; ++l2) {
      int l3 = k14 - 2 * j - l2;
      long double c = 2 * sg(k12 + k13) * bin(k12 + l2 - 1, l2) * bin(k13 + l3 - 1, l3) * zeven(j);
      if (c != 0) r3 += z2(s23, s24 + k12 + l2, s34 + k13 + l3).scaled(c);
    }
  // The three partial expansions add up to the four-term sum.
  SumResult rhs = r1;
  rhs += r2;
  rhs += r3;
  rep.add("four-term sum vs zeta(2j) zeta_2 expansion", lhs, rhs);

  bool all2 = k12 == 2 && k13 == 2 && k14 == 2 && s23 == 2 && s24 == 2 && s34 == 2;
  if (all2) {
    long double pi = pi_v<long double>();
    long double z2v = pi * pi / 6;
    long double target = 887.0L * std::pow(pi, 12.0L) / 3831077250.0L;
    // 2 zeta(2){2 z(4,4,2) + z(4,2,4)} - 6 z(6,4,2) - 6 z(6,2,4) - 8 z(5,5,2) + 4 z(5,2,5) - 6 z(4,6,2)
    SumResult dA = z2(4, 4, 2).scaled(4 * z2v);
    dA += z2(4, 2, 4).scaled(2 * z2v);
    dA += z2(6, 4, 2).scaled(-6);
    dA += z2(6, 2, 4).scaled(-6);
    dA += z2(5, 5, 2).scaled(-8);
    dA += z2(5, 2, 5).scaled(4);
    dA += z2(4, 6, 2).scaled(-6);
    // 8 zeta(2){z(4,4,2) + z(3,5,2)} - 12 z(6,4,2) - 12 z(5,5,2) - 6 z(4,6,2)
    SumResult dB = z2(4, 4, 2).scaled(8 * z2v);
    dB += z2(3, 5, 2).scaled(8 * z2v);
    dB += z2(6, 4, 2).scaled(-12);
    dB += z2(5, 5, 2).scaled(-12);
    dB += z2(4, 6, 2).scaled(-6);
    rep.add("4 zeta_3(2,...,2) vs 887 pi^12/3831077250", lhs, exact_value(target));
    rep.add("first decomposition vs 887 pi^12/3831077250", dA, exact_value(target));
    rep.add("second decomposition vs 887 pi^12/3831077250", dB, exact_value(target));
    rep.add("first decomposition vs direct sum", dA, lhs, true);
    rep.add("second decomposition vs direct sum", dB, lhs, true);
  }
  return rep;
}

/// C3 relation with I = {2,3}, its (s,u,v) = (1,2,1) specialization and the two odd-zeta values.
inline RelationReport template_C3(long double s, long double t, long double u, long double v, long N, long N2 = 3000,
                                  long double tol = 1e-6L, unsigned threads = default_threads(),
                                  Precision p = precision_from_env()) {
  const auto& d = parse_root_system_cached("C3");
  const auto& c2 = parse_root_system_cached("C2");
  RelationSpec spec{&d, {1, 2},
                    to_canonical(d, forms::C3, {1, s, t, 1, u, v, 2, 1, 1}), {}, "C3"};
  RelationReport rep = new_report(spec, "C3 relations", N, N2, tol);
  auto z3 = [&](std::vector<long double> e) { return zeta_listed(d, forms::C3, e, N, threads, p); };
  auto z2 = [&](long double a, long double b, long double c, long double e) {
    return zeta_listed(c2, forms::C2, {a, b, c, e}, N2, threads, p);
  };
  long double pi = pi_v<long double>();
  auto fr1_rhs = [&](long double S, long double T, long double U, long double V) {
    SumResult r = z2(S + 2, T + 3, U, V + 1);
    r += z2(S + 2, T, U + 3, V + 1);
    r += z2(S, T + 4, U + 2, V).scaled(-1);
    r += z2(S + 1, T + 4, U, V + 1).scaled(-2.5L);
    r += z2(S + 1, T + 3, U, V + 2).scaled(-1);
    r += z2(S, T + 2, U + 4, V).scaled(-1);
    r += z2(S, T + 2, U + 2, V).scaled(pi * pi / 3);
    r += z2(S + 1, T, U + 4, V + 1).scaled(2.5L);
    r += z2(S + 1, T, U + 3, V + 2);
    return r;
  };
  SumResult lhs = z3({1, s, t, 1, u, v, 2, 1, 1});
  lhs += z3({1, 1, t, s, 2, 1, u, v, 1}).scaled(-1);
  lhs += z3({s, 1, 2, 1, t, 1, u, 1, v});
  lhs = lhs.scaled(2);
  rep.add("six-term sum vs C2 combination", lhs, fr1_rhs(s, t, u, v));
  rep.add("signed Weyl sum vs six-term sum", lhs_signed(spec, N, threads, p), lhs);

  auto value = [&](long double T) { return z3({1, 1, 2, 1, T, 1, 2, 1, 1}).scaled(2); };
  SumResult v1 = value(1), v3 = value(3);
  rep.add("(s,u,v)=(1,2,1), t=1 vs C2 combination", v1, fr1_rhs(1, 1, 2, 1));
  long double z7 = riemann_zeta<long double>(7), z9 = riemann_zeta<long double>(9), z11 = riemann_zeta<long double>(11),
              z13 = riemann_zeta<long double>(13);
  long double p2 = pi * pi, p4 = p2 * p2;
  rep.add("t=1 odd zeta value", v1, exact_value(3.0L / 20 * z7 * p4 - 233.0L / 16 * z9 * p2 + 4135.0L / 32 * z11));
  rep.add("t=3 odd zeta value", v3,
          exact_value(-7.0L / 15 * z9 * p4 + 681.0L / 16 * z11 * p2 - 5995.0L / 16 * z13));
  return rep;
}

/// The three G2 values, plus the six-term signed sum that collapses to twice the zeta value.
inline RelationReport check_G2_values(long N, long double tol = 1e-6L, unsigned threads = default_threads(),
                                      Precision p = precision_from_env()) {
  const auto& d = parse_root_system_cached("G2");
  RelationSpec spec{&d, {1}, to_canonical(d, forms::G2, {2, 1, 1, 1, 2, 2}), {}, "G2-values"};
  RelationReport rep = new_report(spec, "G2 values", N, 0, tol);
  auto z = [&](std::vector<long double> e) { return zeta_listed(d, forms::G2, e, N, threads, p).scaled(2); };
  long double pi = pi_v<long double>(), p2 = pi * pi, p4 = p2 * p2;
  auto zr = [](int n) { return riemann_zeta<long double>(static_cast<long double>(n)); };
  SumResult a = z({2, 1, 1, 1, 2, 2});
  rep.add("2 zeta_2(2,1,1,1,2,2)", a, exact_value(-187.0L / 972 * zr(7) * p2 + 11149.0L / 5832 * zr(9)));
  rep.add("2 zeta_2(4,1,1,1,4,4)", z({4, 1, 1, 1, 4, 4}),
          exact_value(-15337.0L / 4723920 * zr(11) * p4 - 157303.0L / 2834352 * zr(13) * p2 +
                      14696765.0L / 17006112 * zr(15)));
  rep.add("2 zeta_2(2,3,3,3,2,2)", z({2, 3, 3, 3, 2, 2}),
          exact_value(-16171.0L / 3888 * zr(13) * p2 + 957697.0L / 23328 * zr(15)));
  rep.add("six-term signed sum vs 2 zeta_2(2,1,1,1,2,2)", lhs_signed(spec, N, threads, p), a);
  return rep;
}

/// I = {i}, y = 0: signed sum against the Lerch-zeta combination.
inline RelationReport lerch_relation_check(const RootSystemData& d, int i, const Monomial& k, Complex s, long N,
                                           const GenericVector& phi, long double tol = 1e-6L,
                                           unsigned threads = default_threads(), Precision p = precision_from_env()) {
  auto par = parabolic(d, {i});
  if (k.size() != par.delta_star.size()) throw DimensionMismatch("k must have |Delta_+| - 1 entries");
  std::vector<Complex> sv(d.num_positive());
  for (std::size_t j = 0; j < k.size(); ++j) sv[par.delta_star[j]] = Complex(k[j]);
  sv[par.delta_I_plus[0]] = s;
  RelationSpec spec{&d, {i}, sv, {}, "lerch"};
  RelationReport rep = new_report(spec, "Lerch-zeta relation", N, N, tol);
  rep.phi = phi;
  for (int x : k)
    if (x < 2) throw DomainError("Lerch relation needs k >= 2 on Delta_+ minus alpha_i");
  SumResult lhs = lhs_signed(spec, N, threads, p);
  CycloLaurent pref(Rational(d.num_positive() % 2 ? 1 : -1));  // (-1)^{|Delta_+|-1}
  for (int x : k) pref = pref * CycloLaurent::omega_power(x).scaled(Rational(1) / Rational(factorial(static_cast<unsigned long>(x))));
  SumResult rhs;
  rhs.N = N;
  for (const auto& c : lerch_coeffs(d, i, k, phi)) {
    Complex coef = (pref * CycloLaurent(CycloElem(c.b), -c.j)).evaluate<long double>();
    rhs += lerch_phi(s + Complex(c.j), c.nu, N, p).scaled(coef);
  }
  rep.add("signed Weyl sum vs Lerch combination", lhs, rhs);
  return rep;
}

}  // namespace weylzeta
