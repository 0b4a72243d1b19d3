#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace weylzeta {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVec = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer floor_of(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return f;
}

/// Usual fractional part, in [0,1).
inline Rational frac(const Rational& x) { return x - Rational(floor_of(x)); }

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Accepts "p", "p/q" and plain decimals such as "0.25".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw ParseError("empty rational");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    bool neg = s[0] == '-';
    std::string digits = s.substr(neg ? 1 : 0);
    dot = digits.find('.');
    std::string whole = digits.substr(0, dot);
    std::string fracpart = digits.substr(dot + 1);
    if (whole.empty()) whole = "0";
    Integer den = 1;
    for (std::size_t i = 0; i < fracpart.size(); ++i) den *= 10;
    Integer num;
    if (num.set_str(whole + fracpart, 10) != 0) throw ParseError("bad decimal '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline long long to_ll(const Integer& z) {
  if (!z.fits_slong_p()) throw DomainError("integer too large: " + z.get_str());
  return z.get_si();
}

/// Conversion keeping roughly twice double precision before rounding to long double.
inline long double to_long_double(const Rational& x) {
  if (sgn(x) == 0) return 0.0L;
  mpf_class v(0, 192);
  v = x;
  double hi = v.get_d();
  mpf_class rest(0, 192);
  rest = v - hi;
  double mid = rest.get_d();
  mpf_class rest2(0, 192);
  rest2 = rest - mid;
  return static_cast<long double>(hi) + static_cast<long double>(mid) +
         static_cast<long double>(rest2.get_d());
}

inline RatVec rat_vec(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("dot of sizes " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace weylzeta
