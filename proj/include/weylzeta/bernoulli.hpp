#pragma once

#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace weylzeta {

namespace detail {

/// B_0..B_n with B_1 = -1/2, from sum_{j<l} C(l,j) B_j = 0.
inline std::vector<Rational> compute_bernoulli_numbers(int n) {
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int l = 2; l <= n + 1; ++l) {
    Rational s = 0;
    for (int j = 0; j < l - 1; ++j) s += Rational(binomial(l, j)) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(l - 1)] = -s / Rational(binomial(l, l - 1));
  }
  return b;
}

}  // namespace detail

inline const Rational& bernoulli_number(int l) {
  static const std::vector<Rational> table = detail::compute_bernoulli_numbers(200);
  if (l < 0 || l > 200) throw DomainError("Bernoulli index out of range: " + std::to_string(l));
  return table[static_cast<std::size_t>(l)];
}

/// B_l(x) = sum_j C(l,j) B_j x^{l-j}. Accepts x = 1 as well, which fractional parts may produce.
inline Rational bernoulli_poly_value(int l, const Rational& x) {
  if (l < 0) throw DomainError("negative Bernoulli index");
  Rational r = 0;
  Rational xp = 1;  // x^{l-j}, built from j = l downwards
  for (int j = l; j >= 0; --j) {
    r += Rational(binomial(l, j)) * bernoulli_number(j) * xp;
    xp *= x;
  }
  return r;
}

/// zeta(2k) = -B_{2k} Omega^{2k} / (2 (2k)!).
inline CycloLaurent zeta_even_from_bernoulli(int k) {
  if (k < 0) throw DomainError("zeta_even_from_bernoulli needs k >= 0");
  Rational c = -bernoulli_number(2 * k) / (Rational(2) * Rational(factorial(static_cast<unsigned long>(2 * k))));
  return CycloLaurent(CycloElem(c), 2 * k);
}

}  // namespace weylzeta
