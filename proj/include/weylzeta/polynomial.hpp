#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace weylzeta {

/// Univariate polynomial over Q, constant term first, trailing zeros trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& c) : c_{c} { trim(); }  // NOLINT
  UniPoly(long c) : UniPoly(Rational(c)) {}       // NOLINT
  explicit UniPoly(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(const Rational& c, int deg) {
    RatVec v(static_cast<std::size_t>(deg) + 1, Rational(0));
    v.back() = c;
    return UniPoly(std::move(v));
  }
  /// 1 + u + ... + u^{n-1}.
  static UniPoly geometric(int n) { return UniPoly(RatVec(static_cast<std::size_t>(n), Rational(1))); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RatVec& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Rational(0);
  }

  Rational evaluate(const Rational& x) const {
    Rational r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    RatVec r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RatVec r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly scaled(const Rational& q) const {
    UniPoly r = *this;
    for (auto& x : r.c_) x *= q;
    r.trim();
    return r;
  }

  /// Quotient and remainder.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    RatVec rem = a.c_;
    if (a.degree() < b.degree()) return {UniPoly(), a};
    RatVec q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& lead = b.c_.back();
    for (int i = a.degree(); i >= b.degree(); --i) {
      Rational c = rem[static_cast<std::size_t>(i)] / lead;
      q[static_cast<std::size_t>(i - b.degree())] = c;
      if (sgn(c) == 0) continue;
      for (int j = 0; j <= b.degree(); ++j)
        rem[static_cast<std::size_t>(i - b.degree() + j)] -= c * b.c_[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
  }

  /// Text form such as "1 + 2*u + 2*u^2 + u^3".
  std::string to_string(const std::string& var = "u") const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const Rational& c = c_[i];
      if (sgn(c) == 0) continue;
      Rational a = abs(c);
      std::string term;
      if (i == 0) {
        term = a.get_str();
      } else {
        std::string mono = var + (i > 1 ? "^" + std::to_string(i) : "");
        term = (a == 1) ? mono : a.get_str() + "*" + mono;
      }
      if (s.empty())
        s = (sgn(c) < 0 ? "-" : "") + term;
      else
        s += (sgn(c) < 0 ? " - " : " + ") + term;
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  RatVec c_;
};

/// Polynomial in two variables (u_L, u_S) over Q.
class BiPoly {
 public:
  using Key = std::pair<int, int>;
  BiPoly() = default;
  BiPoly(const Rational& c) { add({0, 0}, c); }  // NOLINT

  static BiPoly monomial(const Rational& c, int a, int b) {
    BiPoly p;
    p.add({a, b}, c);
    return p;
  }

  const std::map<Key, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add(Key k, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_.emplace(k, c);
      return;
    }
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) {
    for (const auto& [k, c] : b.t_) a.add(k, c);
    return a;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_) r.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

  Rational evaluate(const Rational& x, const Rational& y) const {
    Rational s = 0;
    for (const auto& [k, c] : t_) {
      Rational m = c;
      for (int i = 0; i < k.first; ++i) m *= x;
      for (int i = 0; i < k.second; ++i) m *= y;
      s += m;
    }
    return s;
  }

  /// Substitute u_S = c (keep u_L as the variable).
  UniPoly specialize_second(const Rational& c) const {
    UniPoly r;
    for (const auto& [k, v] : t_) {
      Rational m = v;
      for (int i = 0; i < k.second; ++i) m *= c;
      r += UniPoly::monomial(m, k.first);
    }
    return r;
  }
  /// Substitute u_L = c (keep u_S as the variable).
  UniPoly specialize_first(const Rational& c) const {
    UniPoly r;
    for (const auto& [k, v] : t_) {
      Rational m = v;
      for (int i = 0; i < k.first; ++i) m *= c;
      r += UniPoly::monomial(m, k.second);
    }
    return r;
  }
  /// Set both variables equal to u.
  UniPoly diagonal() const {
    UniPoly r;
    for (const auto& [k, v] : t_) r += UniPoly::monomial(v, k.first + k.second);
    return r;
  }

  std::string to_string(const std::string& a = "uL", const std::string& b = "uS") const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : t_) {
      std::string mono;
      if (k.first) mono += a + (k.first > 1 ? "^" + std::to_string(k.first) : "");
      if (k.second) mono += (mono.empty() ? "" : "*") + b + (k.second > 1 ? "^" + std::to_string(k.second) : "");
      Rational ac = abs(c);
      std::string term = mono.empty() ? ac.get_str() : (ac == 1 ? mono : ac.get_str() + "*" + mono);
      if (s.empty())
        s = (sgn(c) < 0 ? "-" : "") + term;
      else
        s += (sgn(c) < 0 ? " - " : " + ") + term;
    }
    return s;
  }

 private:
  std::map<Key, Rational> t_;
};

}  // namespace weylzeta
