#pragma once

#include <array>
#include <functional>
#include <map>
#include <vector>

#include "bernoulli.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace weylzeta {

/// Explicit P for A_r with I = {2..r}.
/// k = (k_2..k_{r+1}) over the roots e_1 - e_i, y in coroot coordinates (y_1..y_r), m = (m_2..m_r).
inline CycloLaurent closed_form_P_Ar(int r, const std::vector<int>& k, const RatVec& y, const std::vector<long>& m) {
  if (static_cast<int>(k.size()) != r || static_cast<int>(y.size()) != r || static_cast<int>(m.size()) != r - 1)
    throw DimensionMismatch("closed_form_P_Ar expects |k| = |y| = r and |m| = r-1");
  auto K = [&](int i) { return k[static_cast<std::size_t>(i - 2)]; };
  auto Y = [&](int i) { return y[static_cast<std::size_t>(i - 1)]; };
  auto M = [&](int i) { return m[static_cast<std::size_t>(i - 2)]; };
  auto mij = [&](int i, int j) {
    long s = 0;
    if (i < j)
      for (int a = i; a < j; ++a) s += M(a);
    else
      for (int a = j; a < i; ++a) s -= M(a);
    if (s == 0) throw ZeroConstantDenominator("m_ij vanishes");
    return s;
  };
  Rational kf = 1;
  for (int e : k) kf *= Rational(factorial(static_cast<unsigned long>(e)));
  Rational fy = frac(Y(1));

  CycloLaurent total;
  for (int j = 2; j <= r + 1; ++j) {
    bool skip = false;
    for (int i = 2; i <= r + 1; ++i)
      if (i != j && K(i) == 0) skip = true;
    if (skip) continue;
    Rational arg = 0;
    for (int i = 2; i <= j - 1; ++i) arg += Rational(M(i)) * (Y(i) - Y(1));
    for (int i = j; i <= r; ++i) arg += Rational(M(i)) * Y(i);
    CycloElem phase = CycloElem::exp_2pi_i(arg);

    // Compositions l_2 + ... + l_{r+1} = k_j.
    std::vector<int> l(static_cast<std::size_t>(r), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == r + 1) {
        l[static_cast<std::size_t>(i - 2)] = left;
        Rational c = bernoulli_poly_value(l[static_cast<std::size_t>(j - 2)], fy) /
                     Rational(factorial(static_cast<unsigned long>(l[static_cast<std::size_t>(j - 2)])));
        int opow = 0;
        for (int a = 2; a <= r + 1; ++a) {
          if (a == j) continue;
          int la = l[static_cast<std::size_t>(a - 2)];
          int e = K(a) + la;
          Rational t = Rational(binomial(K(a) + la - 1, la));
          if ((K(a) - 1) % 2) t = -t;
          Rational mm = Rational(1);
          for (int p = 0; p < e; ++p) mm /= Rational(mij(a, j));
          c *= t * mm;
          opow += e;
        }
        total.add(-opow, phase.scaled(c * kf));
        return;
      }
      for (int v = 0; v <= left; ++v) {
        l[static_cast<std::size_t>(i - 2)] = v;
        rec(i + 1, left - v);
      }
    };
    rec(2, K(j));
  }
  return total;
}

/// Variables of the C_3, I = {2,3} generating function in the canonical order of Delta*:
/// e1-e2, e1-e3, e1 (the coroot of 2e1), e1+e3, e1+e2.
enum C3Var : std::size_t { kMinus2 = 0, kMinus3 = 1, kOne = 2, kPlus3 = 3, kPlus2 = 4 };

/// The five-term generating function for C_3, I = {2,3}, y = 0, expanded up to max_degrees.
inline TruncatedSeries<CycloLaurent> closed_form_F_C3(long m2, long m3, const std::vector<int>& max_degrees) {
  TruncatedSeries<CycloLaurent> shape({"t-2", "t-3", "t1", "t+3", "t+2"}, max_degrees);
  struct Fac {
    std::size_t a, b;
    long c;  // denominator t_a - t_b - 2 pi i c
  };
  auto term = [&](std::size_t bvar, std::array<Fac, 4> facs) {
    auto s = bernoulli_series(shape, bvar, Rational(0));
    for (const auto& f : facs) {
      std::map<std::size_t, CycloLaurent> lin{{f.b, CycloLaurent(1)}};
      s *= series_factor_expand(shape, f.a, lin, CycloLaurent(CycloElem(Rational(f.c)), 1));
    }
    return s;
  };
  auto sum = term(kMinus2, {{{kMinus3, kMinus2, m2}, {kPlus2, kMinus2, 2 * (m2 + m3)},
                             {kPlus3, kMinus2, m2 + 2 * m3}, {kOne, kMinus2, m2 + m3}}});
  sum += term(kMinus3, {{{kMinus2, kMinus3, -m2}, {kPlus2, kMinus3, m2 + 2 * m3},
                         {kPlus3, kMinus3, 2 * m3}, {kOne, kMinus3, m3}}});
  sum += term(kPlus2, {{{kMinus2, kPlus2, -2 * (m2 + m3)}, {kMinus3, kPlus2, -(m2 + 2 * m3)},
                        {kPlus3, kPlus2, -m2}, {kOne, kPlus2, -(m2 + m3)}}});
  sum += term(kPlus3, {{{kMinus2, kPlus3, -(m2 + 2 * m3)}, {kMinus3, kPlus3, -2 * m3},
                        {kPlus2, kPlus3, m2}, {kOne, kPlus3, -m3}}});
  sum += term(kOne, {{{kMinus2, kOne, -(m2 + m3)}, {kMinus3, kOne, -m3},
                      {kPlus2, kOne, m2 + m3}, {kPlus3, kOne, m3}}});
  return sum;
}

/// The nine-term P for C_3, I = {2,3}, y = 0, with k = 2 on the root 2e1 and 1 elsewhere.
/// Uses pi^-6 = -64 Omega^-6 and pi^-4 = 16 Omega^-4.
inline CycloLaurent closed_form_P_C3_k21111(long m2, long m3) {
  Rational a = m2, b = m3, s = a + b, t = a + 2 * b;
  auto p = [](Rational x, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
  };
  Rational pi6 = Rational(1) / (32 * p(a, 2) * p(b, 3) * t) + Rational(1) / (32 * p(a, 2) * p(s, 3) * t) -
                 Rational(1) / (32 * p(b, 4) * p(s, 2)) - Rational(5) / (64 * a * p(b, 4) * t) -
                 Rational(1) / (32 * a * p(b, 3) * p(t, 2)) - Rational(1) / (32 * p(b, 2) * p(s, 4)) +
                 Rational(5) / (64 * a * p(s, 4) * t) + Rational(1) / (32 * a * p(s, 3) * p(t, 2));
  Rational pi4 = Rational(1) / (96 * p(b, 2) * p(s, 2));
  CycloLaurent r;
  r.add(-6, CycloElem(pi6 * -64));
  r.add(-4, CycloElem(pi4 * 16));
  return r;
}

}  // namespace weylzeta
