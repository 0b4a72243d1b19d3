#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <exception>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "root_system.hpp"
#include "series.hpp"

namespace weylzeta {

/// A basis V = V_I u Psi_I together with its dual basis mu^V (weight coordinates).
struct BasisChoice {
  std::vector<std::size_t> V_I;  // positive-root indices, all in Delta*
  std::vector<std::size_t> V;    // V_I followed by Psi_I
  std::vector<RatVec> mu;        // mu[k] is dual to V[k]
  IntMatrix coroot_matrix;       // rows: coroot coordinates of V
  Integer detIndex;

  std::size_t position(std::size_t root) const {
    auto it = std::find(V.begin(), V.end(), root);
    if (it == V.end()) throw DomainError("root " + std::to_string(root) + " is not in the basis");
    return static_cast<std::size_t>(it - V.begin());
  }
  const RatVec& mu_of(std::size_t root) const { return mu[position(root)]; }
};

inline RatVec coroot_vec(const RootSystemData& d, std::size_t k) {
  RatVec v;
  for (int c : d.coroot_coeffs[k]) v.emplace_back(c);
  return v;
}

/// <gamma^vee, v> for a weight v in fundamental-weight coordinates.
inline Rational coroot_pair(const RootSystemData& d, std::size_t k, const RatVec& v) {
  return dot(coroot_vec(d, k), v);
}

/// Builds V = V_I u Psi_I; throws DomainError if the coroots are dependent.
inline BasisChoice make_basis(const RootSystemData& d, const ParabolicData& par, std::vector<std::size_t> V_I) {
  BasisChoice b;
  b.V_I = std::move(V_I);
  b.V = b.V_I;
  b.V.insert(b.V.end(), par.psi_I.begin(), par.psi_I.end());
  if (static_cast<int>(b.V.size()) != d.rank) throw DimensionMismatch("basis size differs from rank");
  RatMatrix m;
  for (std::size_t k : b.V) {
    m.push_back(coroot_vec(d, k));
    IntVec row;
    for (int c : d.coroot_coeffs[k]) row.emplace_back(c);
    b.coroot_matrix.push_back(row);
  }
  auto [rk, det] = rank_and_det(m);
  if (static_cast<int>(rk) != d.rank) throw DomainError("coroots are linearly dependent");
  b.detIndex = abs(det.get_num());
  RatMatrix inv = inverse(m);
  b.mu.assign(b.V.size(), RatVec(static_cast<std::size_t>(d.rank)));
  for (std::size_t l = 0; l < b.V.size(); ++l)
    for (std::size_t j = 0; j < static_cast<std::size_t>(d.rank); ++j) b.mu[l][j] = inv[j][l];
  return b;
}

/// Every subset V_I of Delta* of size r - |I| such that V_I u Psi_I is a basis, in lexicographic order.
inline std::vector<BasisChoice> enumerate_bases(const RootSystemData& d, const ParabolicData& par) {
  std::size_t n = par.delta_star.size();
  std::size_t need = static_cast<std::size_t>(d.rank) - par.I.size();
  std::vector<BasisChoice> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == need) {
      std::vector<std::size_t> V_I;
      for (std::size_t p : pick) V_I.push_back(par.delta_star[p]);
      try {
        out.push_back(make_basis(d, par, V_I));
      } catch (const DomainError&) {
      }
      return;
    }
    for (std::size_t p = from; p < n; ++p) {
      pick.push_back(p);
      rec(p + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

/// p(v) = v - sum_{gamma in V_I} mu_gamma <gamma^vee, v>.
inline RatVec projection_p(const RootSystemData& d, const BasisChoice& b, const RatVec& v) {
  RatVec r = v;
  for (std::size_t k = 0; k < b.V_I.size(); ++k) {
    Rational c = coroot_pair(d, b.V_I[k], v);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c * b.mu[k][j];
  }
  return r;
}

/// Same projection written as sum_{alpha in Psi_I} mu_alpha <alpha^vee, v>.
inline RatVec projection_p_psi(const RootSystemData& d, const BasisChoice& b, const RatVec& v) {
  RatVec r(v.size(), Rational(0));
  for (std::size_t k = b.V_I.size(); k < b.V.size(); ++k) {
    Rational c = coroot_pair(d, b.V[k], v);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += c * b.mu[k][j];
  }
  return r;
}

/// Projection computed from the basis U = V_I u Phi_I for an independent Phi_I in Delta_{I+}.
inline RatVec projection_p_via(const RootSystemData& d, const std::vector<std::size_t>& V_I,
                               const std::vector<std::size_t>& Phi_I, const RatVec& v) {
  RatMatrix m;
  for (std::size_t k : V_I) m.push_back(coroot_vec(d, k));
  for (std::size_t k : Phi_I) m.push_back(coroot_vec(d, k));
  if (static_cast<int>(m.size()) != d.rank || static_cast<int>(rank_of(m)) != d.rank)
    throw DomainError("U is not a basis");
  RatMatrix inv = inverse(m);
  RatVec r = v;
  for (std::size_t k = 0; k < V_I.size(); ++k) {
    Rational c = coroot_pair(d, V_I[k], v);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c * inv[j][k];
  }
  return r;
}

/// p*(u) = u - sum_{beta in V_I} <u, mu_beta> beta^vee, u in coroot coordinates.
inline RatVec transpose_projection(const RootSystemData& d, const BasisChoice& b, const RatVec& u) {
  RatVec r = u;
  for (std::size_t k = 0; k < b.V_I.size(); ++k) {
    Rational c = dot(u, b.mu[k]);
    RatVec beta = coroot_vec(d, b.V_I[k]);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c * beta[j];
  }
  return r;
}

struct LatticeQuotient {
  std::vector<RatVec> representatives;  // coroot coordinates
  Integer index;
};

/// Q^vee / L(V^vee) enumerated as the box under the triangular Hermite form.
inline LatticeQuotient lattice_quotient(const BasisChoice& b) {
  IntMatrix h = hermite_rows(b.coroot_matrix);
  std::size_t n = h.size();
  LatticeQuotient q;
  q.index = 1;
  std::vector<long> bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    q.index *= h[i][i];
    bound[i] = static_cast<long>(to_ll(h[i][i]));
  }
  std::vector<long> a(n, 0);
  for (;;) {
    RatVec v;
    for (long x : a) v.emplace_back(x);
    q.representatives.push_back(std::move(v));
    std::size_t i = 0;
    while (i < n && ++a[i] == bound[i]) a[i++] = 0;
    if (i == n) break;
  }
  return q;
}

struct GenericVector {
  RatVec phi;  // coroot coordinates
  std::string provenance;
};

inline bool phi_is_generic(const std::vector<BasisChoice>& bases, const RatVec& phi) {
  for (const auto& b : bases)
    for (const auto& m : b.mu)
      if (sgn(dot(phi, m)) == 0) return false;
  return true;
}

/// All bases of the full space (I empty); phi must avoid every mu of these.
inline std::vector<BasisChoice> all_bases(const RootSystemData& d) { return enumerate_bases(d, parabolic(d, {})); }

/// First the small primes, then seeded random rationals.
inline GenericVector choose_phi(const RootSystemData& d, const std::vector<BasisChoice>& bases, unsigned long seed = 0) {
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  auto r = static_cast<std::size_t>(d.rank);
  if (r > std::size(primes)) throw UnsupportedRank("phi search beyond rank 12");
  RatVec phi;
  for (std::size_t i = 0; i < r; ++i) phi.emplace_back(primes[i]);
  if (seed == 0 && phi_is_generic(bases, phi)) return {phi, "primes"};
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    for (auto& x : phi) x = make_rational(num(gen), den(gen));
    if (phi_is_generic(bases, phi))
      return {phi, "seed " + std::to_string(seed) + " attempt " + std::to_string(attempt)};
  }
  throw GenericSearchExhausted("no generic phi after 1000 candidates");
}

inline GenericVector choose_phi(const RootSystemData& d, unsigned long seed = 0) {
  return choose_phi(d, all_bases(d), seed);
}

/// Verifies a user-supplied phi.
inline GenericVector make_phi(const RootSystemData& d, const RatVec& phi) {
  if (static_cast<int>(phi.size()) != d.rank) throw DimensionMismatch("phi length");
  if (!phi_is_generic(all_bases(d), phi)) throw NonGenericPhi("phi " + to_string(phi) + " lies on a hyperplane");
  return {phi, "user"};
}

/// {y}_{V,beta}: the usual fractional part, or 1 - {-x} when <phi, mu_beta> < 0.
inline Rational fractional_part(const RatVec& y, const BasisChoice& b, std::size_t pos, const RatVec& phi) {
  int s = sgn(dot(phi, b.mu[pos]));
  if (s == 0) throw NonGenericPhi("phi is orthogonal to a dual basis vector");
  Rational x = dot(y, b.mu[pos]);
  return s > 0 ? frac(x) : Rational(1) - frac(-x);
}

/// Everything needed to write down F(t_I, y, lambda; I; Delta).
struct ExpansionSetup {
  const RootSystemData* system = nullptr;
  ParabolicData par;
  RatVec lambda;  // weight coordinates, zero outside I
  RatVec y;       // coroot coordinates
  GenericVector phi;
  std::vector<BasisChoice> bases;
  std::vector<LatticeQuotient> quotients;
};

inline ExpansionSetup make_setup(const RootSystemData& d, const std::vector<int>& I, RatVec lambda, RatVec y,
                                 const GenericVector& phi) {
  ExpansionSetup s;
  s.system = &d;
  s.par = parabolic(d, I);
  auto r = static_cast<std::size_t>(d.rank);
  if (lambda.empty()) lambda.assign(r, Rational(0));
  if (y.empty()) y.assign(r, Rational(0));
  if (lambda.size() != r || y.size() != r) throw DimensionMismatch("lambda or y length differs from rank");
  if (!s.par.in_P_I(lambda)) throw NonIntegralWeight("lambda " + to_string(lambda) + " is not in P_I");
  s.lambda = std::move(lambda);
  s.y = std::move(y);
  s.phi = phi;
  s.bases = enumerate_bases(d, s.par);
  for (const auto& b : s.bases) s.quotients.push_back(lattice_quotient(b));
  return s;
}

/// Coefficient of prod t^k / k! split by phase: nu -> polynomial in x = 1/(2 pi i).
using PhaseExpansion = std::map<Rational, UniPoly>;

namespace detail {

inline void add_phase(PhaseExpansion& e, const Rational& nu, const UniPoly& p) {
  if (p.is_zero()) return;
  auto& slot = e[nu];
  slot += p;
  if (slot.is_zero()) e.erase(nu);
}

inline std::string index_list(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s + "}";
}

/// Contribution of one basis to the requested coefficients.
inline std::vector<PhaseExpansion> basis_terms(const ExpansionSetup& s, std::size_t bi,
                                               const std::vector<Monomial>& ks, const std::vector<int>& maxdeg) {
  const RootSystemData& d = *s.system;
  const BasisChoice& b = s.bases[bi];
  const auto& star = s.par.delta_star;
  std::vector<std::string> names;
  for (std::size_t k : star) names.push_back("t" + std::to_string(k + 1));
  TruncatedSeries<UniPoly> G = TruncatedSeries<UniPoly>::constant(TruncatedSeries<UniPoly>(names, maxdeg), UniPoly(1));
  auto var_of = [&](std::size_t root) {
    return static_cast<std::size_t>(std::find(star.begin(), star.end(), root) - star.begin());
  };
  RatVec plam = projection_p(d, b, s.lambda);
  for (std::size_t gi = 0; gi < star.size(); ++gi) {
    std::size_t g = star[gi];
    if (std::find(b.V_I.begin(), b.V_I.end(), g) != b.V_I.end()) continue;
    Rational c = coroot_pair(d, g, plam);
    if (sgn(c) == 0)
      throw ZeroConstantDenominator("factor of root " + std::to_string(g + 1) + " for basis " + index_list(b.V) +
                                    " at lambda " + to_string(s.lambda) + " has no constant term");
    std::map<std::size_t, UniPoly> lin;
    for (std::size_t k = 0; k < b.V_I.size(); ++k) {
      Rational l = dot(coroot_vec(d, g), b.mu[k]);
      if (sgn(l) != 0) lin[var_of(b.V_I[k])] = UniPoly(l);
    }
    G *= series_factor_expand_inv(G, gi, lin, UniPoly::monomial(Rational(1) / c, 1));
  }

  // Group quotient representatives by their fractional parts; phases are kept exact.
  const LatticeQuotient& lq = s.quotients[bi];
  std::map<RatVec, std::map<Rational, Rational>> groups;
  for (const auto& q : lq.representatives) {
    RatVec u = s.y;
    for (std::size_t j = 0; j < u.size(); ++j) u[j] += q[j];
    RatVec f;
    for (std::size_t k = 0; k < b.V_I.size(); ++k) f.push_back(fractional_part(u, b, k, s.phi.phi));
    groups[f][frac(dot(u, plam))] += 1;
  }
  Rational scale = Rational(1) / Rational(lq.index);

  std::vector<PhaseExpansion> out(ks.size());
  std::vector<std::size_t> vi;
  for (std::size_t k : b.V_I) vi.push_back(var_of(k));
  for (const auto& [f, phases] : groups) {
    // Bernoulli coefficients B_l(f)/l! per V_I variable.
    std::vector<RatVec> bern(vi.size());
    for (std::size_t k = 0; k < vi.size(); ++k)
      for (int l = 0; l <= maxdeg[vi[k]]; ++l)
        bern[k].push_back(bernoulli_poly_value(l, f[k]) / Rational(factorial(static_cast<unsigned long>(l))));
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      const Monomial& kk = ks[ki];
      UniPoly coef;
      std::vector<int> j(vi.size(), 0);
      for (;;) {
        Monomial rest = kk;
        Rational w = 1;
        for (std::size_t k = 0; k < vi.size(); ++k) {
          rest[vi[k]] -= j[k];
          w *= bern[k][static_cast<std::size_t>(j[k])];
        }
        if (sgn(w) != 0) coef += G.coefficient(rest).scaled(w);
        std::size_t p = 0;
        while (p < vi.size() && ++j[p] > kk[vi[p]]) j[p++] = 0;
        if (p == vi.size()) break;
      }
      if (coef.is_zero()) continue;
      for (const auto& [nu, cnt] : phases) add_phase(out[ki], nu, coef.scaled(cnt * scale));
    }
  }
  return out;
}

}  // namespace detail

/// P-values (coefficients times prod k!) for several multi-indices over Delta*, split by phase.
/// Bases are processed in parallel; the reduction runs in basis order.
inline std::vector<PhaseExpansion> expand_coefficients(const ExpansionSetup& s, const std::vector<Monomial>& ks,
                                                       unsigned threads = 1) {
  std::size_t nv = s.par.delta_star.size();
  std::vector<int> maxdeg(nv, 0);
  for (const auto& k : ks) {
    if (k.size() != nv) throw DimensionMismatch("multi-index length must equal |Delta*| = " + std::to_string(nv));
    for (std::size_t i = 0; i < nv; ++i) {
      if (k[i] < 0) throw DomainError("negative exponent in multi-index");
      maxdeg[i] = std::max(maxdeg[i], k[i]);
    }
  }
  std::size_t nb = s.bases.size();
  std::vector<std::vector<PhaseExpansion>> parts(nb);
  std::vector<std::exception_ptr> errs(nb);
  auto work = [&](std::size_t t, std::size_t stride) {
    for (std::size_t bi = t; bi < nb; bi += stride) {
      try {
        parts[bi] = detail::basis_terms(s, bi, ks, maxdeg);
      } catch (...) {
        errs[bi] = std::current_exception();
      }
    }
  };
  std::size_t nt = std::max<std::size_t>(1, std::min<std::size_t>(threads, nb));
  if (nt == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nt; ++t) pool.emplace_back(work, t, nt);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);

  std::vector<PhaseExpansion> out(ks.size());
  for (std::size_t ki = 0; ki < ks.size(); ++ki) {
    Rational kf = 1;
    for (int e : ks[ki]) kf *= Rational(factorial(static_cast<unsigned long>(e)));
    for (std::size_t bi = 0; bi < nb; ++bi)
      for (const auto& [nu, p] : parts[bi][ki]) detail::add_phase(out[ki], nu, p.scaled(kf));
  }
  return out;
}

/// sum_nu e^{2 pi i nu} sum_j c_j Omega^{-j}.
inline CycloLaurent to_laurent(const PhaseExpansion& e) {
  CycloLaurent r;
  for (const auto& [nu, p] : e) {
    CycloElem ph = CycloElem::exp_2pi_i(nu);
    for (int j = 0; j <= p.degree(); ++j) {
      const Rational c = p.coeff(j);
      if (sgn(c) != 0) r.add(-j, ph.scaled(c));
    }
  }
  return r;
}

/// P(k, y, lambda; I; Delta).
inline CycloLaurent expand_P(const RootSystemData& d, const std::vector<int>& I, const RatVec& lambda,
                             const RatVec& y, const Monomial& k, const GenericVector& phi, unsigned threads = 1) {
  auto s = make_setup(d, I, lambda, y, phi);
  return to_laurent(expand_coefficients(s, {k}, threads)[0]);
}

struct BernoulliEntry {
  Monomial k;
  CycloLaurent value;
};

struct BernoulliTable {
  std::string system;
  std::vector<int> I;  // 0-based
  RatVec lambda;
  RatVec y;
  GenericVector phi;
  std::vector<BernoulliEntry> entries;
};

inline BernoulliTable bernoulli_table(const ExpansionSetup& s, const std::vector<Monomial>& ks, unsigned threads = 1) {
  BernoulliTable t{s.system->name(), s.par.I, s.lambda, s.y, s.phi, {}};
  auto vals = expand_coefficients(s, ks, threads);
  for (std::size_t i = 0; i < ks.size(); ++i) t.entries.push_back({ks[i], to_laurent(vals[i])});
  return t;
}

/// All multi-indices of length n with entries summing to at most total.
inline std::vector<Monomial> multi_indices_up_to(std::size_t n, int total) {
  std::vector<Monomial> out;
  Monomial m(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[i] = e;
      rec(i + 1, left - e);
    }
    m[i] = 0;
  };
  rec(0, total);
  std::sort(out.begin(), out.end(), GradedLexLess());
  return out;
}

struct LerchCoefficient {
  Rational nu;
  int j;
  Rational b;
};

/// b_{k nu j} for I = {i}: the coefficient of x^j y^nu prod t^k/k! in the expansion taken at lambda = lambda_i.
inline std::vector<LerchCoefficient> lerch_coeffs(const RootSystemData& d, int i, const Monomial& k,
                                                  const GenericVector& phi) {
  RatVec lam(static_cast<std::size_t>(d.rank), Rational(0));
  lam[static_cast<std::size_t>(i)] = 1;
  auto s = make_setup(d, {i}, lam, {}, phi);
  auto e = expand_coefficients(s, {k})[0];
  int total = 0;
  for (int x : k) total += x;
  std::vector<LerchCoefficient> out;
  for (const auto& [nu, p] : e) {
    if (p.degree() > total) throw DomainError("x-degree exceeds |k|");
    for (int j = 0; j <= p.degree(); ++j)
      if (sgn(p.coeff(j)) != 0) out.push_back({nu, j, p.coeff(j)});
  }
  return out;
}

/// X_i: the phases {<q, mu_{alpha_i}>} over all bases and quotient representatives.
inline std::vector<Rational> lerch_phases(const RootSystemData& d, int i) {
  auto par = parabolic(d, {i});
  std::vector<Rational> out;
  for (const auto& b : enumerate_bases(d, par)) {
    std::size_t pos = b.position(par.psi_I[0]);
    for (const auto& q : lattice_quotient(b).representatives) out.push_back(frac(dot(q, b.mu[pos])));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

using ComplexLD = std::complex<long double>;

/// F(t_I, y, lambda; I; Delta) with all rational data converted once, for repeated evaluation.
class NumericF {
 public:
  explicit NumericF(const ExpansionSetup& s) : nvars_(s.par.delta_star.size()) {
    const RootSystemData& d = *s.system;
    const auto& star = s.par.delta_star;
    const long double twopi = 2 * std::numbers::pi_v<long double>;
    auto var_of = [&](std::size_t root) {
      return static_cast<std::size_t>(std::find(star.begin(), star.end(), root) - star.begin());
    };
    for (std::size_t bi = 0; bi < s.bases.size(); ++bi) {
      const BasisChoice& b = s.bases[bi];
      RatVec plam = projection_p(d, b, s.lambda);
      Term term;
      term.weight = 1.0L / to_long_double(Rational(s.quotients[bi].index));
      for (std::size_t gi = 0; gi < star.size(); ++gi) {
        std::size_t g = star[gi];
        if (std::find(b.V_I.begin(), b.V_I.end(), g) != b.V_I.end()) continue;
        Factor f{gi, ComplexLD(0, twopi * to_long_double(coroot_pair(d, g, plam))), {}};
        for (std::size_t k = 0; k < b.V_I.size(); ++k) {
          Rational l = dot(coroot_vec(d, g), b.mu[k]);
          if (sgn(l) != 0) f.linear.emplace_back(var_of(b.V_I[k]), to_long_double(l));
        }
        term.factors.push_back(std::move(f));
      }
      for (std::size_t k = 0; k < b.V_I.size(); ++k) term.bvars.push_back(var_of(b.V_I[k]));
      for (const auto& q : s.quotients[bi].representatives) {
        RatVec u = s.y;
        for (std::size_t j = 0; j < u.size(); ++j) u[j] += q[j];
        QTerm qt{std::exp(ComplexLD(0, twopi * to_long_double(frac(dot(u, plam))))), {}};
        for (std::size_t k = 0; k < b.V_I.size(); ++k)
          qt.frac.push_back(to_long_double(fractional_part(u, b, k, s.phi.phi)));
        term.qterms.push_back(std::move(qt));
      }
      terms_.push_back(std::move(term));
    }
  }

  ComplexLD operator()(const std::vector<ComplexLD>& t) const {
    if (t.size() != nvars_) throw DimensionMismatch("t-point length must equal |Delta*|");
    ComplexLD total = 0;
    std::vector<ComplexLD> expm1(8), et(8);
    for (const auto& term : terms_) {
      ComplexLD v = term.weight;
      for (const auto& f : term.factors) {
        ComplexLD den = t[f.var] - f.constant;
        for (const auto& [j, l] : f.linear) den -= l * t[j];
        v *= t[f.var] / den;
      }
      expm1.resize(term.bvars.size());
      et.resize(term.bvars.size());
      for (std::size_t k = 0; k < term.bvars.size(); ++k) {
        et[k] = std::exp(t[term.bvars[k]]);
        expm1[k] = t[term.bvars[k]] / (et[k] - ComplexLD(1));
      }
      ComplexLD qs = 0;
      for (const auto& q : term.qterms) {
        ComplexLD w = q.phase;
        for (std::size_t k = 0; k < term.bvars.size(); ++k) {
          w *= expm1[k];
          if (q.frac[k] == 1)
            w *= et[k];
          else if (q.frac[k] != 0)
            w *= std::exp(t[term.bvars[k]] * q.frac[k]);
        }
        qs += w;
      }
      total += v * qs;
    }
    return total;
  }

 private:
  struct Factor {
    std::size_t var;
    ComplexLD constant;
    std::vector<std::pair<std::size_t, long double>> linear;
  };
  struct QTerm {
    ComplexLD phase;
    std::vector<long double> frac;
  };
  struct Term {
    long double weight = 1;
    std::vector<Factor> factors;
    std::vector<std::size_t> bvars;
    std::vector<QTerm> qterms;
  };
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Direct numerical value of F(t_I, y, lambda; I; Delta); t is indexed like Delta*.
inline ComplexLD F_numeric(const ExpansionSetup& s, const std::vector<ComplexLD>& t) { return NumericF(s)(t); }

struct ResidueResult {
  ComplexLD value;
  long double base_radius = 0;
  std::size_t evaluations = 0;
};

/// Iterated residues of (prod_{alpha in Delta_{I+}} 1/t_alpha) F(t, y; Delta) at t_alpha = 2 pi i <alpha^vee, lambda>,
/// taken in the given order (first entry innermost) by nested circle quadrature.
/// t_star gives the remaining variables, indexed like Delta*.
inline ResidueResult residue_project(const RootSystemData& d, const std::vector<int>& I, const RatVec& lambda,
                                     const RatVec& y, const std::vector<std::size_t>& order,
                                     const std::vector<ComplexLD>& t_star, const GenericVector& phi,
                                     int nodes = 64) {
  auto full = make_setup(d, {}, {}, y, phi);
  auto par = parabolic(d, I);
  if (!par.in_P_I(lambda)) throw NonIntegralWeight("lambda " + to_string(lambda) + " is not in P_I");
  if (t_star.size() != par.delta_star.size()) throw DimensionMismatch("t-point length must equal |Delta*|");
  {
    auto a = order, b = par.delta_I_plus;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw DomainError("order must be a permutation of Delta_{I+}");
  }
  const long double twopi = 2 * std::numbers::pi_v<long double>;
  std::size_t np = static_cast<std::size_t>(d.num_positive());
  std::vector<ComplexLD> t(np);
  for (std::size_t i = 0; i < par.delta_star.size(); ++i) t[par.delta_star[i]] = t_star[i];
  std::vector<ComplexLD> center(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    center[j] = ComplexLD(0, twopi * to_long_double(coroot_pair(d, order[j], lambda)));
    t[order[j]] = center[j];
  }

  // Nearest singular hyperplane not through the centre, measured along the residue variables.
  long double dist = twopi;
  for (const auto& b : full.bases)
    for (std::size_t g = 0; g < np; ++g) {
      if (std::find(b.V.begin(), b.V.end(), g) != b.V.end()) continue;
      ComplexLD val = t[g];
      long double norm = std::find(order.begin(), order.end(), g) != order.end() ? 1 : 0;
      for (std::size_t k = 0; k < b.V.size(); ++k) {
        long double l = to_long_double(dot(coroot_vec(d, g), b.mu[k]));
        val -= l * t[b.V[k]];
        if (std::find(order.begin(), order.end(), b.V[k]) != order.end()) norm += std::fabs(l);
      }
      if (norm == 0) continue;
      long double a = std::abs(val);
      if (a > 1e-12L) dist = std::min(dist, a / norm);
    }
  ResidueResult res;
  res.base_radius = dist / 2;
  std::size_t n = order.size();
  NumericF F(full);
  if (n == 0) {
    res.value = F(t);
    res.evaluations = 1;
    return res;
  }
  long double smallest = res.base_radius * std::pow(8.0L, -static_cast<long double>(n - 1));
  if (smallest < 1e-9L) throw ContourTooClose("contour radius " + std::to_string(static_cast<double>(smallest)) +
                                              " is too small to separate the singularities");
  std::vector<long double> radius(n);
  for (std::size_t j = 0; j < n; ++j) radius[j] = res.base_radius * std::pow(8.0L, -static_cast<long double>(n - 1 - j));
  std::vector<ComplexLD> unit(static_cast<std::size_t>(nodes));
  for (int m = 0; m < nodes; ++m) unit[static_cast<std::size_t>(m)] = std::polar(1.0L, twopi * (m + 0.5L) / nodes);

  // (1/2 pi i) contour integral of g dt = mean over nodes of (t - c) g(t).
  std::function<ComplexLD(std::size_t)> level = [&](std::size_t j) -> ComplexLD {
    if (j == static_cast<std::size_t>(-1)) {
      ++res.evaluations;
      ComplexLD v = F(t);
      for (std::size_t a : order) v /= t[a];
      return v;
    }
    ComplexLD acc = 0;
    for (const auto& e : unit) {
      ComplexLD off = radius[j] * e;
      t[order[j]] = center[j] + off;
      acc += off * level(j - 1);
    }
    t[order[j]] = center[j];
    return acc / static_cast<long double>(nodes);
  };
  res.value = level(n - 1);
  return res;
}

}  // namespace weylzeta
