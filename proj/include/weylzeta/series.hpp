#pragma once

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bernoulli.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace weylzeta {

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational scale(const Rational& x, const Rational& q) { return x * q; }
  static Rational inverse(const Rational& x) {
    if (sgn(x) == 0) throw ZeroConstantDenominator("zero rational constant");
    return Rational(1) / x;
  }
};

template <>
struct RingTraits<CycloLaurent> {
  static CycloLaurent from_rational(const Rational& q) { return CycloLaurent(q); }
  static bool is_zero(const CycloLaurent& x) { return x.is_zero(); }
  static CycloLaurent scale(const CycloLaurent& x, const Rational& q) { return x.scaled(q); }
  static CycloLaurent inverse(const CycloLaurent& x) {
    if (x.is_zero()) throw ZeroConstantDenominator("zero constant term");
    return x.inverse();
  }
};

template <>
struct RingTraits<UniPoly> {
  static UniPoly from_rational(const Rational& q) { return UniPoly(q); }
  static bool is_zero(const UniPoly& x) { return x.is_zero(); }
  static UniPoly scale(const UniPoly& x, const Rational& q) { return x.scaled(q); }
  static UniPoly inverse(const UniPoly& x) {
    if (x.is_zero()) throw ZeroConstantDenominator("zero constant term");
    if (x.degree() != 0) throw DomainError("only constant polynomials are invertible");
    return UniPoly(Rational(1) / x.coeff(0));
  }
};

using Monomial = std::vector<int>;

/// Total degree first, then lexicographic on exponents in variable order.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Multivariate power series truncated per variable: exponents above max_degrees are dropped.
template <class R>
class TruncatedSeries {
 public:
  using Traits = RingTraits<R>;

  TruncatedSeries(std::vector<std::string> vars, std::vector<int> max_degrees)
      : vars_(std::move(vars)), max_(std::move(max_degrees)) {
    if (vars_.size() != max_.size()) throw DimensionMismatch("series variables vs degrees");
  }

  static TruncatedSeries constant(const TruncatedSeries& shape, const R& c) {
    TruncatedSeries s(shape.vars_, shape.max_);
    s.add_term(Monomial(shape.vars_.size(), 0), c);
    return s;
  }
  static TruncatedSeries variable(const TruncatedSeries& shape, std::size_t i) {
    TruncatedSeries s(shape.vars_, shape.max_);
    Monomial m(shape.vars_.size(), 0);
    m[i] = 1;
    s.add_term(m, Traits::from_rational(Rational(1)));
    return s;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<int>& max_degrees() const { return max_; }
  const std::map<Monomial, R, GradedLexLess>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }

  bool within(const Monomial& m) const {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > max_[i]) return false;
    return true;
  }

  void add_term(const Monomial& m, const R& c) {
    if (m.size() != vars_.size()) throw DimensionMismatch("monomial length");
    if (!within(m) || Traits::is_zero(c)) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, c);
      return;
    }
    it->second += c;
    if (Traits::is_zero(it->second)) t_.erase(it);
  }

  R coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Traits::from_rational(Rational(0)) : it->second;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    a.check_shape(b);
    for (const auto& [m, c] : b.t_) a.add_term(m, c);
    return a;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    a.check_shape(b);
    for (const auto& [m, c] : b.t_) a.add_term(m, Traits::scale(c, Rational(-1)));
    return a;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_shape(b);
    TruncatedSeries r(a.vars_, a.max_);
    Monomial m(a.vars_.size());
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        bool ok = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
          m[i] = ma[i] + mb[i];
          if (m[i] > a.max_[i]) {
            ok = false;
            break;
          }
        }
        if (ok) r.add_term(m, ca * cb);
      }
    return r;
  }
  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  TruncatedSeries scaled(const Rational& q) const {
    TruncatedSeries r(vars_, max_);
    for (const auto& [m, c] : t_) r.add_term(m, Traits::scale(c, q));
    return r;
  }
  TruncatedSeries times(const R& c) const {
    TruncatedSeries r(vars_, max_);
    for (const auto& [m, v] : t_) r.add_term(m, v * c);
    return r;
  }

  /// Coefficient ring change, e.g. Q[x] with x = 1/Omega into CycloLaurent.
  template <class S, class Fn>
  TruncatedSeries<S> map(Fn&& fn) const {
    TruncatedSeries<S> r(vars_, max_);
    for (const auto& [m, c] : t_) r.add_term(m, fn(c));
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.vars_ != b.vars_ || a.max_ != b.max_ || a.t_.size() != b.t_.size()) return false;
    auto ib = b.t_.begin();
    for (const auto& [m, c] : a.t_) {
      if (m != ib->first || !(c == ib->second)) return false;
      ++ib;
    }
    return true;
  }

 private:
  void check_shape(const TruncatedSeries& o) const {
    if (vars_ != o.vars_ || max_ != o.max_) throw DimensionMismatch("series with different variables");
  }

  std::vector<std::string> vars_;
  std::vector<int> max_;
  std::map<Monomial, R, GradedLexLess> t_;
};

inline int total_degree_bound(const std::vector<int>& max_degrees) {
  return std::accumulate(max_degrees.begin(), max_degrees.end(), 0);
}

/// Expansion of t_target / (t_target - sum_b linear_b t_b - C) given inv_constant = 1/C:
/// equals -sum_{n>=0} t_target (t_target - L)^n inv_constant^{n+1}.
template <class R>
TruncatedSeries<R> series_factor_expand_inv(const TruncatedSeries<R>& shape, std::size_t target,
                                            const std::map<std::size_t, R>& linear, const R& inv_constant) {
  TruncatedSeries<R> lin = TruncatedSeries<R>::variable(shape, target);  // t_target - L
  for (const auto& [b, c] : linear) {
    if (b == target) throw DomainError("linear part may not contain the target variable");
    TruncatedSeries<R> v = TruncatedSeries<R>::variable(shape, b);
    lin = lin - v.times(c);
  }
  TruncatedSeries<R> term = TruncatedSeries<R>::variable(shape, target).times(inv_constant);
  TruncatedSeries<R> sum = TruncatedSeries<R>(shape.variables(), shape.max_degrees());
  int bound = total_degree_bound(shape.max_degrees());
  for (int n = 0; n < bound && term.size() > 0; ++n) {
    sum = sum - term;
    term = (term * lin).times(inv_constant);
  }
  return sum;
}

/// Expansion of t_target / (t_target - sum_b linear_b t_b - constant).
template <class R>
TruncatedSeries<R> series_factor_expand(const TruncatedSeries<R>& shape, std::size_t target,
                                        const std::map<std::size_t, R>& linear, const R& constant) {
  if (RingTraits<R>::is_zero(constant))
    throw ZeroConstantDenominator("factor for variable " + shape.variables()[target] +
                                  " has no constant term and is not a power series");
  return series_factor_expand_inv(shape, target, linear, RingTraits<R>::inverse(constant));
}

/// t e^{t x} / (e^t - 1) = sum_l B_l(x) t^l / l! in the given variable.
template <class R>
TruncatedSeries<R> bernoulli_series(const TruncatedSeries<R>& shape, std::size_t var, const Rational& x) {
  TruncatedSeries<R> s(shape.variables(), shape.max_degrees());
  Monomial m(shape.variables().size(), 0);
  for (int l = 0; l <= shape.max_degrees()[var]; ++l) {
    m[var] = l;
    s.add_term(m, RingTraits<R>::from_rational(bernoulli_poly_value(l, x) /
                                               Rational(factorial(static_cast<unsigned long>(l)))));
  }
  return s;
}

}  // namespace weylzeta
