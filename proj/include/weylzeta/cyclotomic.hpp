#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <memory>
#include <numbers>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace weylzeta {

inline int moebius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  return n > 1 ? -m : m;
}

/// Integer coefficients (constant term first) of the n-th cyclotomic polynomial,
/// from the product of (x^d - 1)^mu(n/d).
inline std::vector<Integer> cyclotomic_polynomial(int n) {
  if (n < 1) throw DomainError("cyclotomic conductor must be positive");
  std::vector<Integer> p{Integer(1)};
  for (int d = 1; d <= n; ++d) {
    if (n % d || moebius(n / d) != 1) continue;
    std::vector<Integer> q(p.size() + static_cast<std::size_t>(d), Integer(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + static_cast<std::size_t>(d)] += p[i];
      q[i] -= p[i];
    }
    p = std::move(q);
  }
  for (int d = 1; d <= n; ++d) {
    if (n % d || moebius(n / d) != -1) continue;
    std::size_t du = static_cast<std::size_t>(d);
    std::vector<Integer> q(p.size() - du, Integer(0));
    for (std::size_t i = p.size(); i-- > du;) {
      q[i - du] = p[i];
      p[i - du] += p[i];
    }
    p = std::move(q);
  }
  return p;
}

struct CycloField {
  int conductor = 1;
  int degree = 1;
  std::vector<Integer> modulus;  // monic, constant term first, size degree+1
};

inline std::shared_ptr<const CycloField> make_cyclo_field(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycloField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<CycloField>();
  f->conductor = n;
  f->modulus = cyclotomic_polynomial(n);
  f->degree = static_cast<int>(f->modulus.size()) - 1;
  cache.emplace(n, f);
  return f;
}

/// Element of Q(zeta_N) stored as coordinates on 1, zeta_N, ..., zeta_N^{phi(N)-1}.
class CycloElem {
 public:
  CycloElem() : field_(rational_field()), c_(1, Rational(0)) {}
  CycloElem(const Rational& q) : field_(rational_field()), c_(1, q) {}  // NOLINT
  CycloElem(long q) : CycloElem(Rational(q)) {}                          // NOLINT

  /// zeta_n^a.
  static CycloElem root_of_unity(int n, long a) {
    long e = ((a % n) + n) % n;
    auto f = make_cyclo_field(n);
    RatVec poly(static_cast<std::size_t>(e) + 1, Rational(0));
    poly[static_cast<std::size_t>(e)] = 1;
    return CycloElem(f, reduce(*f, std::move(poly))).simplified();
  }

  /// exp(2 pi i x) for rational x.
  static CycloElem exp_2pi_i(const Rational& x) {
    Rational f = frac(x);
    if (sgn(f) == 0) return CycloElem(1);
    long n = to_ll(f.get_den());
    long a = to_ll(f.get_num());
    if (n > 100000) throw DomainError("root of unity order too large: " + std::to_string(n));
    return root_of_unity(static_cast<int>(n), a);
  }

  int conductor() const { return field_->conductor; }
  const RatVec& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (sgn(x) != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }
  const Rational& rational_part() const { return c_[0]; }

  /// Exact image in Q(zeta_m); requires conductor() | m.
  CycloElem embed(int m) const {
    int n = conductor();
    if (m % n) throw DomainError("cannot embed conductor " + std::to_string(n) + " into " + std::to_string(m));
    if (m == n) return *this;
    auto f = make_cyclo_field(m);
    int step = m / n;
    RatVec poly(static_cast<std::size_t>((c_.size() - 1) * step) + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
    return CycloElem(f, reduce(*f, std::move(poly)));
  }

  CycloElem operator-() const {
    CycloElem r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    auto [x, y] = common(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x.simplified();
  }
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b) { return a + (-b); }

  friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    if (a.conductor() == 1) return b.scaled(a.c_[0]);
    if (b.conductor() == 1) return a.scaled(b.c_[0]);
    auto [x, y] = common(a, b);
    RatVec poly(x.c_.size() + y.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (sgn(x.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) poly[i + j] += x.c_[i] * y.c_[j];
    }
    return CycloElem(x.field_, reduce(*x.field_, std::move(poly))).simplified();
  }

  CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
  CycloElem& operator-=(const CycloElem& o) { return *this = *this - o; }
  CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }

  CycloElem scaled(const Rational& q) const {
    CycloElem r = *this;
    for (auto& x : r.c_) x *= q;
    return r.simplified();
  }

  friend bool operator==(const CycloElem& a, const CycloElem& b) {
    auto [x, y] = common(a, b);
    return x.c_ == y.c_;
  }

  /// Multiplicative inverse via the regular representation; throws on zero.
  CycloElem inverse() const {
    if (is_zero()) throw DomainError("inverse of zero cyclotomic element");
    if (conductor() == 1) return CycloElem(Rational(1) / c_[0]);
    std::size_t d = c_.size();
    // Column j holds this * zeta^j.
    RatMatrix m(d, RatVec(d, Rational(0)));
    for (std::size_t j = 0; j < d; ++j) {
      RatVec bj = unit_vector(d, j);
      CycloElem prod = CycloElem(field_, bj) * *this;
      CycloElem full = prod.embed(conductor());
      for (std::size_t i = 0; i < d; ++i) m[i][j] = full.c_[i];
    }
    RatVec rhs = unit_vector(d, 0);
    RatVec sol = solve(m, rhs);
    return CycloElem(field_, std::move(sol)).simplified();
  }

  template <class F>
  std::complex<F> to_complex() const {
    std::complex<F> s(0, 0);
    const F two_pi = F(2) * std::numbers::pi_v<F>;
    int n = conductor();
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (sgn(c_[i]) == 0) continue;
      F ang = two_pi * F(static_cast<long>(i)) / F(n);
      F v = static_cast<F>(to_long_double(c_[i]));
      s += std::complex<F>(v * std::cos(ang), v * std::sin(ang));
    }
    return s;
  }

  std::string to_string() const {
    std::string s = "[N=" + std::to_string(conductor()) + ":";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + c_[i].get_str();
    return s + "]";
  }

  /// Conductor-1 representation when the element is rational.
  CycloElem simplified() const {
    if (conductor() != 1 && is_rational()) return CycloElem(c_[0]);
    return *this;
  }

 private:
  CycloElem(std::shared_ptr<const CycloField> f, RatVec c) : field_(std::move(f)), c_(std::move(c)) {
    c_.resize(static_cast<std::size_t>(field_->degree), Rational(0));
  }

  static std::shared_ptr<const CycloField> rational_field() {
    static const std::shared_ptr<const CycloField> q = make_cyclo_field(1);
    return q;
  }

  static RatVec unit_vector(std::size_t d, std::size_t j) {
    RatVec v(d, Rational(0));
    v[j] = 1;
    return v;
  }

  static RatVec reduce(const CycloField& f, RatVec poly) {
    std::size_t d = static_cast<std::size_t>(f.degree);
    for (std::size_t i = poly.size(); i-- > d;) {
      if (sgn(poly[i]) == 0) continue;
      Rational c = poly[i];
      for (std::size_t j = 0; j <= d; ++j)
        if (f.modulus[j] != 0) poly[i - d + j] -= c * Rational(f.modulus[j]);
    }
    poly.resize(d, Rational(0));
    return poly;
  }

  static std::pair<CycloElem, CycloElem> common(const CycloElem& a, const CycloElem& b) {
    if (a.conductor() == b.conductor()) return {a, b};
    int m = std::lcm(a.conductor(), b.conductor());
    return {a.embed(m), b.embed(m)};
  }

  std::shared_ptr<const CycloField> field_;
  RatVec c_;
};

/// Laurent polynomial in Omega = 2 pi i with cyclotomic coefficients.
class CycloLaurent {
 public:
  CycloLaurent() = default;
  CycloLaurent(const Rational& q) { add(0, CycloElem(q)); }  // NOLINT
  CycloLaurent(long q) : CycloLaurent(Rational(q)) {}         // NOLINT
  CycloLaurent(const CycloElem& c, int omega_pow = 0) { add(omega_pow, c); }

  static CycloLaurent omega_power(int e) { return CycloLaurent(CycloElem(1), e); }

  const std::map<int, CycloElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_monomial() const { return terms_.size() == 1; }

  CycloElem coefficient(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CycloElem() : it->second;
  }

  int conductor() const {
    int n = 1;
    for (const auto& [e, c] : terms_) n = std::lcm(n, c.conductor());
    return n;
  }

  void add(int e, const CycloElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  CycloLaurent operator-() const {
    CycloLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend CycloLaurent operator+(CycloLaurent a, const CycloLaurent& b) {
    for (const auto& [e, c] : b.terms_) a.add(e, c);
    return a;
  }
  friend CycloLaurent operator-(const CycloLaurent& a, const CycloLaurent& b) { return a + (-b); }
  friend CycloLaurent operator*(const CycloLaurent& a, const CycloLaurent& b) {
    CycloLaurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
    return r;
  }
  CycloLaurent& operator+=(const CycloLaurent& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  CycloLaurent& operator-=(const CycloLaurent& o) { return *this += -o; }
  CycloLaurent& operator*=(const CycloLaurent& o) { return *this = *this * o; }

  CycloLaurent scaled(const Rational& q) const {
    CycloLaurent r;
    if (sgn(q) == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.scaled(q));
    return r;
  }

  friend bool operator==(const CycloLaurent& a, const CycloLaurent& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (e != ib->first || !(c == ib->second)) return false;
      ++ib;
    }
    return true;
  }

  /// Only monomials c*Omega^e are units.
  CycloLaurent inverse() const {
    if (!is_monomial()) throw DomainError("only monomials in Omega are invertible");
    const auto& [e, c] = *terms_.begin();
    return CycloLaurent(c.inverse(), -e);
  }

  /// Substitutes Omega -> 2 pi i.
  template <class F>
  std::complex<F> evaluate() const {
    std::complex<F> s(0, 0);
    const std::complex<F> omega(0, F(2) * std::numbers::pi_v<F>);
    for (const auto& [e, c] : terms_) s += c.template to_complex<F>() * std::pow(omega, e);
    return s;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      std::string coef = c.conductor() == 1 ? c.rational_part().get_str() : c.to_string();
      if (s.empty())
        s = coef;
      else if (coef[0] == '-')
        s += " - " + coef.substr(1);
      else
        s += " + " + coef;
      if (e != 0) s += "*W^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::map<int, CycloElem> terms_;
};

}  // namespace weylzeta
