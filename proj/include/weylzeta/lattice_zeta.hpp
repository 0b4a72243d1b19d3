#pragma once

#include <algorithm>
#include <complex>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "rational.hpp"
#include "root_system.hpp"

namespace weylzeta {

using Complex = std::complex<long double>;

/// Arguments of a lattice sum. s is indexed by the canonical positive-root order,
/// y is in simple-coroot coordinates.
struct ZetaArgs {
  const RootSystemData* system = nullptr;
  std::vector<Complex> s;
  RatVec y;
  std::vector<int> I;

  /// Re(s) >= 2 on Delta_* and Re(s) > 1 on Delta_{I+}.
  bool convergent() const {
    ParabolicData p = parabolic(*system, I);
    for (auto a : p.delta_star)
      if (s[a].real() < 2) return false;
    for (auto a : p.delta_I_plus)
      if (s[a].real() <= 1) return false;
    return true;
  }
};

inline ZetaArgs make_args(const RootSystemData& d, std::vector<Complex> s, RatVec y = {}, std::vector<int> I = {}) {
  if (y.empty()) y.assign(static_cast<std::size_t>(d.rank), Rational(0));
  if (s.size() != d.num_positive())
    throw DimensionMismatch("expected " + std::to_string(d.num_positive()) + " exponents, got " + std::to_string(s.size()));
  if (y.size() != static_cast<std::size_t>(d.rank)) throw DimensionMismatch("y has wrong length");
  return ZetaArgs{&d, std::move(s), std::move(y), std::move(I)};
}

inline std::vector<Complex> real_exponents(const std::vector<long double>& v) {
  return std::vector<Complex>(v.begin(), v.end());
}

struct SumResult {
  Complex value{0, 0};
  long N = 0;
  long double cauchyDiff = 0;
  std::vector<std::string> warnings;
  std::string precision = "extended";

  SumResult& operator+=(const SumResult& o) {
    value += o.value;
    cauchyDiff += o.cauchyDiff;
    N = std::max(N, o.N);
    warnings.insert(warnings.end(), o.warnings.begin(), o.warnings.end());
    return *this;
  }
  SumResult scaled(const Complex& c) const {
    SumResult r = *this;
    r.value *= c;
    r.cauchyDiff *= std::abs(c);
    return r;
  }
};

inline unsigned default_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n ? n : 1;
}

namespace detail {

struct BoxRange {
  std::vector<long> lo, hi;
};

/// Sum of e^{2 pi i <y,lambda>} prod |<alpha^vee,lambda>|^{-s_alpha} (sign folded in for integer s)
/// over the box, skipping walls. Also accumulates the sub-box where every |m_i| <= half.
template <class F>
std::pair<std::complex<F>, std::complex<F>> box_sum(const ZetaArgs& args, const BoxRange& box, long half,
                                                     unsigned threads) {
  const RootSystemData& d = *args.system;
  const std::size_t r = static_cast<std::size_t>(d.rank);
  const std::size_t n = d.num_positive();
  using C = std::complex<F>;

  // Per-root power tables over |v|.
  std::vector<long> vmax(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < r; ++i)
      vmax[a] += std::abs(static_cast<long>(d.coroot_coeffs[a][i])) * std::max(std::abs(box.lo[i]), std::abs(box.hi[i]));
  bool real_powers = true;
  for (const auto& s : args.s)
    if (s.imag() != 0) real_powers = false;
  std::vector<std::vector<C>> table(n);
  std::vector<int> neg_sign(n, 1);
  std::vector<bool> integral(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    C s(static_cast<F>(args.s[a].real()), static_cast<F>(args.s[a].imag()));
    table[a].resize(static_cast<std::size_t>(vmax[a]) + 1);
    for (long v = 1; v <= vmax[a]; ++v) {
      F lv = std::log(F(v));
      table[a][static_cast<std::size_t>(v)] = real_powers ? C(std::exp(-s.real() * lv), 0) : std::exp(-s * lv);
    }
    long double re = args.s[a].real();
    if (args.s[a].imag() == 0 && re == std::floor(re)) {
      integral[a] = true;
      neg_sign[a] = (static_cast<long>(re) % 2 == 0) ? 1 : -1;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool may_be_negative = false;
    for (std::size_t i = 0; i < r; ++i)
      if (d.coroot_coeffs[a][i] != 0 && box.lo[i] < 0) may_be_negative = true;
    if (may_be_negative && !integral[a])
      throw SignOnNonInteger("exponent of root " + d.linear_form(a) + " must be an integer when its form changes sign");
  }

  // Phase table over the common denominator of y.
  Integer den = 1;
  for (const auto& q : args.y) den = lcm_of(den, q.get_den());
  long L = to_ll(den);
  if (L > 1000000) throw DomainError("denominator of y too large");
  std::vector<long> ycoef(r);
  for (std::size_t i = 0; i < r; ++i) {
    Rational t = args.y[i] * Rational(den);
    Integer rem = t.get_num() % den;
    if (rem < 0) rem += den;
    ycoef[i] = to_ll(rem);
  }
  std::vector<C> phase(static_cast<std::size_t>(L));
  for (long k = 0; k < L; ++k) {
    F ang = F(2) * pi_v<F>() * F(k) / F(L);
    phase[static_cast<std::size_t>(k)] = L == 1 ? C(1, 0) : C(std::cos(ang), std::sin(ang));
  }
  const bool trivial_phase = L == 1;

  std::vector<std::vector<long>> coef(r, std::vector<long>(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = 0; a < n; ++a) coef[i][a] = d.coroot_coeffs[a][i];

  const long first_lo = box.lo[0], first_hi = box.hi[0];
  const std::size_t slices = static_cast<std::size_t>(first_hi - first_lo + 1);
  std::vector<ComplexNeumaier<F>> full(slices), part(slices);

  auto work = [&](std::size_t slice) {
    std::vector<long> m(r), v(n, 0);
    long ph = 0;
    m[0] = first_lo + static_cast<long>(slice);
    for (std::size_t i = 1; i < r; ++i) m[i] = box.lo[i];
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t i = 0; i < r; ++i) v[a] += coef[i][a] * m[i];
    for (std::size_t i = 0; i < r; ++i) ph += ycoef[i] * (((m[i] % L) + L) % L);
    ph %= L;
    ComplexNeumaier<F> acc_full, acc_part;
    // Inner accumulation per innermost line keeps the compensated adds cheap.
    while (true) {
      bool wall = false;
      for (std::size_t a = 0; a < n; ++a)
        if (v[a] == 0) {
          wall = true;
          break;
        }
      if (!wall) {
        C term(1, 0);
        if (real_powers) {
          F t = 1;
          for (std::size_t a = 0; a < n; ++a) {
            long x = v[a];
            if (x < 0) {
              t *= table[a][static_cast<std::size_t>(-x)].real();
              if (neg_sign[a] < 0) t = -t;
            } else {
              t *= table[a][static_cast<std::size_t>(x)].real();
            }
          }
          term = C(t, 0);
        } else {
          for (std::size_t a = 0; a < n; ++a) {
            long x = v[a];
            if (x < 0) {
              term *= table[a][static_cast<std::size_t>(-x)];
              if (neg_sign[a] < 0) term = -term;
            } else {
              term *= table[a][static_cast<std::size_t>(x)];
            }
          }
        }
        if (!trivial_phase) term *= phase[static_cast<std::size_t>(ph)];
        acc_full.add(term);
        bool inside = true;
        for (std::size_t i = 0; i < r; ++i)
          if (std::abs(m[i]) > half) inside = false;
        if (inside) acc_part.add(term);
      }
      // odometer over coordinates 1..r-1, last fastest
      std::size_t i = r;
      while (i-- > 1) {
        if (m[i] < box.hi[i]) {
          ++m[i];
          for (std::size_t a = 0; a < n; ++a) v[a] += coef[i][a];
          ph = (ph + ycoef[i]) % L;
          break;
        }
        long span = box.hi[i] - box.lo[i];
        m[i] = box.lo[i];
        for (std::size_t a = 0; a < n; ++a) v[a] -= coef[i][a] * span;
        ph = ((ph - (ycoef[i] * (span % L)) % L) % L + L) % L;
      }
      if (i == 0 || r == 1) break;
    }
    full[slice] = acc_full;
    part[slice] = acc_part;
  };

  unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(slices)));
  if (t == 1) {
    for (std::size_t k = 0; k < slices; ++k) work(k);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < t; ++w)
      pool.emplace_back([&, w]() {
        for (std::size_t k = w; k < slices; k += t) work(k);
      });
    for (auto& th : pool) th.join();
  }
  // Fixed-shape pairwise reduction over slices.
  auto reduce = [](std::vector<ComplexNeumaier<F>> xs) {
    if (xs.empty()) return std::complex<F>(0, 0);
    while (xs.size() > 1) {
      std::vector<ComplexNeumaier<F>> next;
      for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
        ComplexNeumaier<F> c = xs[k];
        c.add(xs[k + 1]);
        next.push_back(c);
      }
      if (xs.size() % 2) next.push_back(xs.back());
      xs.swap(next);
    }
    return xs[0].value();
  };
  return {reduce(full), reduce(part)};
}

template <class F>
SumResult run_box(const ZetaArgs& args, const BoxRange& box, long N, unsigned threads, Precision p) {
  auto [full, part] = box_sum<F>(args, box, N / 2, threads);
  SumResult res;
  res.value = Complex(static_cast<long double>(full.real()), static_cast<long double>(full.imag()));
  res.N = N;
  res.cauchyDiff = static_cast<long double>(std::abs(full - part));
  res.precision = to_string(p);
  if (!args.convergent()) res.warnings.push_back("DivergenceWarning: exponents outside the absolutely convergent range");
  return res;
}

inline SumResult dispatch_box(const ZetaArgs& args, const BoxRange& box, long N, unsigned threads, Precision p) {
  if (p == Precision::Double) return run_box<double>(args, box, N, threads, p);
  return run_box<long double>(args, box, N, threads, p);
}

}  // namespace detail

/// zeta_r(s, y; Delta) truncated to 1 <= m_i <= N.
inline SumResult zeta_r(const ZetaArgs& args, long N, unsigned threads = default_threads(),
                        Precision p = precision_from_env()) {
  if (N < 1) throw DomainError("N must be positive");
  std::size_t r = static_cast<std::size_t>(args.system->rank);
  detail::BoxRange box{std::vector<long>(r, 1), std::vector<long>(r, N)};
  ZetaArgs a = args;
  a.I.clear();
  for (int i = 0; i < args.system->rank; ++i) a.I.push_back(i);
  return detail::dispatch_box(a, box, N, threads, p);
}

/// S(s, y; I; Delta): m_i in [1..N] for i in I, [-N..N] otherwise, walls skipped.
inline SumResult S_direct(const ZetaArgs& args, long N, unsigned threads = default_threads(),
                          Precision p = precision_from_env()) {
  if (N < 1) throw DomainError("N must be positive");
  ParabolicData par = parabolic(*args.system, args.I);
  std::size_t r = static_cast<std::size_t>(args.system->rank);
  detail::BoxRange box{std::vector<long>(r, -N), std::vector<long>(r, N)};
  for (int i : par.I) box.lo[static_cast<std::size_t>(i)] = 1;
  return detail::dispatch_box(args, box, N, threads, p);
}

/// Lerch zeta phi(s,u) = sum_{n>=1} e^{2 pi i u n} n^{-s}: partial sum to N plus the exact tail
/// through Hurwitz zeta values. cauchyDiff compares with the same evaluation at N/2.
inline SumResult lerch_phi(const Complex& s, const Rational& u, long N, Precision p = precision_from_env()) {
  if (!(s.real() > 1)) throw DomainError("lerch_phi needs Re(s) > 1");
  Rational fu = frac(u);
  long q = to_ll(fu.get_den());
  long a0 = to_ll(fu.get_num());
  auto eval = [&](long n_cut) {
    long nq = ((n_cut + q - 1) / q) * q;
    long double two_pi = 2 * pi_v<long double>();
    ComplexNeumaier<long double> acc;
    for (long n = nq; n >= 1; --n) {
      long double ang = two_pi * static_cast<long double>((a0 * (n % q)) % q) / static_cast<long double>(q);
      acc.add(Complex(std::cos(ang), std::sin(ang)) * std::exp(-s * std::log(static_cast<long double>(n))));
    }
    Complex tail(0);
    Complex qs = std::exp(-s * std::log(static_cast<long double>(q)));
    for (long a = 1; a <= q; ++a) {
      long double ang = two_pi * static_cast<long double>((a0 * (a % q)) % q) / static_cast<long double>(q);
      Complex h = hurwitz_zeta<long double>(s, static_cast<long double>(nq + a) / static_cast<long double>(q));
      tail += Complex(std::cos(ang), std::sin(ang)) * h;
    }
    return acc.value() + qs * tail;
  };
  SumResult r;
  r.value = eval(N);
  r.N = N;
  r.cauchyDiff = std::abs(r.value - eval(std::max(1L, N / 2)));
  r.precision = to_string(p);
  return r;
}

/// Euler-Zagier double sum sum m1^{-s1} (m1+m2)^{-s2}, truncated to m1 + m2 <= N.
inline SumResult euler_zagier_2(const Complex& s1, const Complex& s2, long N) {
  auto eval = [&](long n_cut) {
    ComplexNeumaier<long double> acc;
    Complex h(0);  // H_{n-1}(s1)
    for (long n = 2; n <= n_cut; ++n) {
      h += std::exp(-s1 * std::log(static_cast<long double>(n - 1)));
      acc.add(h * std::exp(-s2 * std::log(static_cast<long double>(n))));
    }
    return acc.value();
  };
  SumResult r;
  r.value = eval(N);
  r.N = N;
  r.cauchyDiff = std::abs(r.value - eval(N / 2));
  return r;
}

/// Partial Riemann zeta sum_{n<=N} n^{-s}.
inline Complex zeta_partial(const Complex& s, long N) {
  ComplexNeumaier<long double> acc;
  for (long n = N; n >= 1; --n) acc.add(std::exp(-s * std::log(static_cast<long double>(n))));
  return acc.value();
}

/// Residual of zeta_N(s1) zeta_N(s2) = EZ_N(s1,s2) + EZ_N(s2,s1) + zeta_N(s1+s2), all at the same N.
inline long double harmonic_residual(const Complex& s1, const Complex& s2, long N) {
  Complex lhs = zeta_partial(s1, N) * zeta_partial(s2, N);
  Complex rhs = euler_zagier_2(s1, s2, N).value + euler_zagier_2(s2, s1, N).value + zeta_partial(s1 + s2, N);
  return std::abs(lhs - rhs);
}

}  // namespace weylzeta
