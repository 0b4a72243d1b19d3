#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <string>

#include "bernoulli.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace weylzeta {

/// Neumaier compensated accumulator.
template <class F>
struct Neumaier {
  F sum = 0, comp = 0;
  void add(F x) {
    F t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  void add(const Neumaier& o) {
    add(o.sum);
    add(o.comp);
  }
  F value() const { return sum + comp; }
};

template <class F>
struct ComplexNeumaier {
  Neumaier<F> re, im;
  void add(const std::complex<F>& z) {
    re.add(z.real());
    im.add(z.imag());
  }
  void add(const ComplexNeumaier& o) {
    re.add(o.re);
    im.add(o.im);
  }
  std::complex<F> value() const { return {re.value(), im.value()}; }
};

enum class Precision { Double, Extended };

inline std::string to_string(Precision p) { return p == Precision::Double ? "double" : "extended"; }

inline Precision parse_precision(const std::string& s) {
  if (s == "double") return Precision::Double;
  if (s == "extended") return Precision::Extended;
  throw ParseError("precision must be 'double' or 'extended', got '" + s + "'");
}

/// WEYLZETA_PRECISION, defaulting to extended.
inline Precision precision_from_env() {
  const char* v = std::getenv("WEYLZETA_PRECISION");
  if (!v || !*v) return Precision::Extended;
  return parse_precision(v);
}

/// Hurwitz zeta sum_{n>=0} (n+a)^{-s} for Re(s) > 1, a > 0, by Euler-Maclaurin.
template <class F>
std::complex<F> hurwitz_zeta(const std::complex<F>& s, F a) {
  if (!(a > 0)) throw DomainError("hurwitz_zeta needs a > 0");
  if (!(s.real() > 1)) throw DomainError("hurwitz_zeta needs Re(s) > 1");
  const int n_direct = 24;
  const int k_terms = 14;
  std::complex<F> sum(0);
  for (int n = n_direct - 1; n >= 0; --n) sum += std::exp(-s * std::log(F(n) + a));
  F x = F(n_direct) + a;
  std::complex<F> xs = std::exp(-s * std::log(x));  // x^{-s}
  sum += xs * x / (s - F(1)) + xs / F(2);
  // sum_k B_{2k}/(2k)! s(s+1)...(s+2k-2) x^{-s-2k+1}
  std::complex<F> rising = s;
  std::complex<F> pw = xs / x;
  F fact = 1;
  for (int k = 1; k <= k_terms; ++k) {
    fact *= F(2 * k - 1) * F(2 * k);
    F b = static_cast<F>(to_long_double(bernoulli_number(2 * k)));
    sum += b / fact * rising * pw;
    rising *= (s + F(2 * k - 1)) * (s + F(2 * k));
    pw /= x * x;
  }
  return sum;
}

template <class F>
F riemann_zeta(F s) {
  return hurwitz_zeta<F>(std::complex<F>(s, 0), F(1)).real();
}

template <class F>
std::complex<F> riemann_zeta(const std::complex<F>& s) {
  return hurwitz_zeta<F>(s, F(1));
}

template <class F>
F pi_v() {
  return std::numbers::pi_v<F>;
}

}  // namespace weylzeta
