#include <gtest/gtest.h>

#include <cmath>

#include "weylzeta/bernoulli_gen.hpp"
#include "weylzeta/closed_forms.hpp"

using namespace weylzeta;

namespace {

// B_l(x) from B_l(x) = sum_j C(l,j) B_j x^{l-j}, Bernoulli numbers by their recurrence.
Rational oracle_bernoulli_poly(int l, const Rational& x) {
  std::vector<Rational> b{Rational(1)};
  for (int n = 1; n <= l; ++n) {
    Rational s = 0;
    for (int j = 0; j < n; ++j) s += Rational(binomial(n + 1, j)) * b[static_cast<std::size_t>(j)];
    b.push_back(-s / Rational(n + 1));
  }
  Rational v = 0, p = 1;
  for (int j = l; j >= 0; --j) {
    v += Rational(binomial(l, j)) * b[static_cast<std::size_t>(j)] * p;
    p *= x;
  }
  return v;
}

const RootSystemData& sys(const char* name) {
  static std::map<std::string, RootSystemData> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, parse_root_system(name)).first;
  return it->second;
}

}  // namespace

TEST(Bases, A2RankOneParabolic) {
  const auto& d = sys("A2");
  EXPECT_EQ(enumerate_bases(d, parabolic(d, {1})).size(), 2u);
  EXPECT_EQ(enumerate_bases(d, parabolic(d, {})).size(), 3u);
}

TEST(Bases, CrCount) {
  for (const char* s : {"C2", "C3", "C4"}) {
    const auto& d = sys(s);
    std::vector<int> I;
    for (int i = 1; i < d.rank; ++i) I.push_back(i);
    EXPECT_EQ(enumerate_bases(d, parabolic(d, I)).size(), static_cast<std::size_t>(2 * (d.rank - 1) + 1)) << s;
  }
}

TEST(Bases, DualBasisIsExact) {
  for (const char* s : {"A3", "B3", "G2"}) {
    const auto& d = sys(s);
    for (const auto& b : all_bases(d))
      for (std::size_t k = 0; k < b.V.size(); ++k)
        for (std::size_t l = 0; l < b.V.size(); ++l)
          EXPECT_EQ(coroot_pair(d, b.V[k], b.mu[l]), Rational(k == l ? 1 : 0));
  }
}

TEST(LatticeQuotient, IndexIsDeterminant) {
  const auto& c2 = sys("C2");
  // e1+e2 and e1-e2 as coroots: coefficients (1,1) and (1,0)? use the root system's own forms.
  for (const auto& b : all_bases(c2)) {
    RatMatrix m;
    for (auto g : b.V) m.push_back(coroot_vec(c2, g));
    auto [rk, det] = rank_and_det(m);
    EXPECT_EQ(Rational(lattice_quotient(b).index), abs(det));
    EXPECT_EQ(lattice_quotient(b).representatives.size(), static_cast<std::size_t>(to_ll(lattice_quotient(b).index)));
  }
}

TEST(LatticeQuotient, C2LongShortPairHasIndexTwo) {
  const auto& d = sys("C2");
  auto par = parabolic(d, {});
  // Coroots e1+e2 and e1-e2 sit at coroot coefficients (1,1) and (1,0) in the C2 simple coroots.
  auto a = d.find_by_coroot({1, 0}), b = d.find_by_coroot({1, 2});
  ASSERT_TRUE(a && b);
  auto basis = make_basis(d, par, {*a, *b});
  EXPECT_EQ(lattice_quotient(basis).index, Integer(2));
}

TEST(Phi, A2AcceptsPrimesAndRejectsWall) {
  const auto& d = sys("A2");
  auto g = choose_phi(d);
  EXPECT_EQ(g.phi, rat_vec({2, 3}));
  EXPECT_EQ(g.provenance, "primes");
  EXPECT_THROW(make_phi(d, rat_vec({1, 0})), NonGenericPhi);
  EXPECT_NO_THROW(make_phi(d, rat_vec({2, 3})));
}

TEST(Phi, SeedIsReproducible) {
  const auto& d = sys("C3");
  EXPECT_EQ(choose_phi(d, 5).phi, choose_phi(d, 5).phi);
  EXPECT_EQ(choose_phi(d, 5).provenance, choose_phi(d, 5).provenance);
}

TEST(FractionalPart, ZeroYSides) {
  const auto& d = sys("A2");
  auto bases = all_bases(d);
  RatVec y = rat_vec({0, 0});
  bool saw0 = false, saw1 = false;
  for (const auto& b : bases)
    for (std::size_t k = 0; k < b.V.size(); ++k) {
      Rational f = fractional_part(y, b, k, rat_vec({2, 3}));
      EXPECT_TRUE(f == Rational(0) || f == Rational(1));
      saw0 |= f == 0;
      saw1 |= f == 1;
    }
  EXPECT_TRUE(saw0);
  EXPECT_TRUE(saw1);
}

TEST(Projection, EmptyIIsZero) {
  const auto& d = sys("A3");
  for (const auto& b : enumerate_bases(d, parabolic(d, {})))
    EXPECT_EQ(projection_p(d, b, rat_vec({1, -2, 3})), rat_vec({0, 0, 0}));
}

TEST(TransposeProjection, ArMapsToDifference) {
  // A3, I = {2,3}: gamma = e1-e3, beta = e1-e2 gives e2-e3 (coroot coefficients (0,1,0)).
  const auto& d = sys("A3");
  auto par = parabolic(d, {1, 2});
  auto beta = *d.find_by_coroot({1, 0, 0});
  auto gamma = *d.find_by_coroot({1, 1, 0});
  auto b = make_basis(d, par, {beta});
  EXPECT_EQ(transpose_projection(d, b, coroot_vec(d, gamma)), rat_vec({0, 1, 0}));
}

TEST(TransposeProjection, CrLongAndShort) {
  // C3, I = {2,3}, beta = e1-e2. Coroot e1 (of 2e1) maps to e2; e1+e2 maps to 2e2.
  const auto& d = sys("C3");
  auto par = parabolic(d, {1, 2});
  auto b = make_basis(d, par, {*d.find_by_coroot({1, 0, 0})});
  auto e1 = *d.find_by_coroot({1, 1, 1});
  auto e1pe2 = *d.find_by_coroot({1, 2, 2});
  auto e2 = rat_vec({0, 1, 1});
  EXPECT_EQ(transpose_projection(d, b, coroot_vec(d, e1)), e2);
  RatVec two_e2 = e2;
  for (auto& x : two_e2) x *= 2;
  EXPECT_EQ(transpose_projection(d, b, coroot_vec(d, e1pe2)), two_e2);
}

TEST(ExpandP, A1IsBernoulliPolynomial) {
  const auto& d = sys("A1");
  auto phi = choose_phi(d);
  for (auto y : {Rational(0), make_rational(1, 2), make_rational(1, 3)})
    for (int l = 0; l <= 8; ++l)
      EXPECT_EQ(expand_P(d, {}, rat_vec({0}), RatVec{y}, {l}, phi), CycloLaurent(oracle_bernoulli_poly(l, frac(y))))
          << l << " " << y;
}

TEST(ExpandP, A2HandComputedValue) {
  // P((2,2), 0, lambda_2) = -2/3 W^-2 - 24 W^-4, worked out by hand from the two-term generating function.
  const auto& d = sys("A2");
  CycloLaurent want;
  want.add(-2, CycloElem(make_rational(-2, 3)));
  want.add(-4, CycloElem(Rational(-24)));
  EXPECT_EQ(expand_P(d, {1}, rat_vec({0, 1}), {}, {2, 2}, choose_phi(d)), want);
}

TEST(ExpandP, MatchesArClosedForm) {
  for (int r : {2, 3}) {
    const auto& d = sys(r == 2 ? "A2" : "A3");
    std::vector<int> I;
    for (int i = 1; i < r; ++i) I.push_back(i);
    auto phi = choose_phi(d);
    for (auto y : {RatVec(static_cast<std::size_t>(r), Rational(0)), [&] {
                     RatVec v(static_cast<std::size_t>(r), Rational(0));
                     v[0] = make_rational(1, 2);
                     return v;
                   }()}) {
      for (long base : {1L, 2L}) {
        std::vector<long> m;
        RatVec lam(static_cast<std::size_t>(r), Rational(0));
        for (int i = 1; i < r; ++i) {
          m.push_back(base + i - 1);
          lam[static_cast<std::size_t>(i)] = base + i - 1;
        }
        auto setup = make_setup(d, I, lam, y, phi);
        auto ks = multi_indices_up_to(static_cast<std::size_t>(r), 3);
        auto tab = bernoulli_table(setup, ks);
        for (const auto& e : tab.entries) EXPECT_EQ(e.value, closed_form_P_Ar(r, e.k, y, m)) << r;
      }
    }
  }
}

TEST(ExpandP, C3NineTermValue) {
  const auto& d = sys("C3");
  auto phi = choose_phi(d);
  // Canonical Delta* order puts the root 2e1 third.
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 1}, {1, 2}, {2, 1}})
    EXPECT_EQ(expand_P(d, {1, 2}, rat_vec({0, a, b}), {}, {1, 1, 2, 1, 1}, phi), closed_form_P_C3_k21111(a, b));
}

TEST(ExpandP, C3FiveTermGeneratingFunction) {
  const auto& d = sys("C3");
  auto phi = choose_phi(d);
  auto setup = make_setup(d, {1, 2}, rat_vec({0, 1, 2}), {}, phi);
  auto ks = multi_indices_up_to(5, 3);
  auto tab = bernoulli_table(setup, ks);
  auto F = closed_form_F_C3(1, 2, std::vector<int>(5, 3));
  for (const auto& e : tab.entries) {
    Rational kf = 1;
    for (int x : e.k) kf *= Rational(factorial(static_cast<unsigned long>(x)));
    EXPECT_EQ(F.coefficient(e.k).scaled(kf), e.value);
  }
}

TEST(ExpandP, ClosedFormC3NumericAgainstSeries) {
  // The C3 five-term function near 0: degree-5 series vs the direct numeric F. F starts in degree 4.
  const auto& d = sys("C3");
  auto setup = make_setup(d, {1, 2}, rat_vec({0, 1, 1}), {}, choose_phi(d));
  std::vector<ComplexLD> t = {ComplexLD(0.011L, 0.007L), ComplexLD(-0.009L, 0.004L), ComplexLD(0.006L, -0.01L),
                              ComplexLD(0.005L, 0.002L), ComplexLD(-0.004L, -0.003L)};
  auto F = closed_form_F_C3(1, 1, std::vector<int>(5, 5));
  ComplexLD series = 0;
  for (const auto& k : multi_indices_up_to(5, 5)) {
    ComplexLD mono = F.coefficient(k).evaluate<long double>();
    for (std::size_t i = 0; i < 5; ++i) mono *= std::pow(t[i], k[i]);
    series += mono;
  }
  auto direct = F_numeric(setup, t);
  EXPECT_LT(std::abs(series - direct), 1e-5L * std::abs(direct));
}

TEST(ExpandP, PhiIndependentAtZeroY) {
  const auto& d = sys("G2");
  auto v0 = expand_P(d, {1}, rat_vec({0, 1}), {}, {2, 2, 2, 2, 2}, choose_phi(d, 0));
  for (unsigned long seed : {1UL, 2UL, 3UL})
    EXPECT_EQ(expand_P(d, {1}, rat_vec({0, 1}), {}, {2, 2, 2, 2, 2}, choose_phi(d, seed)), v0);
}

TEST(ExpandP, Errors) {
  const auto& a2 = sys("A2");
  EXPECT_THROW(make_setup(a2, {1}, rat_vec({1, 1}), {}, choose_phi(a2)), NonIntegralWeight);
  EXPECT_THROW(expand_P(a2, {}, rat_vec({0, 0}), {}, {1, 1, 1}, choose_phi(a2)), ZeroConstantDenominator);
}

TEST(Lerch, A2Coefficients) {
  const auto& d = sys("A2");
  auto c = lerch_coeffs(d, 0, {2, 2}, choose_phi(d));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].nu, Rational(0));
  EXPECT_EQ(c[0].j, 2);
  EXPECT_EQ(c[0].b, make_rational(-2, 3));
  EXPECT_EQ(c[1].j, 4);
  EXPECT_EQ(c[1].b, Rational(-24));
  EXPECT_EQ(lerch_phases(d, 0), std::vector<Rational>{Rational(0)});
}

TEST(Residue, A2MatchesFI) {
  const auto& d = sys("A2");
  auto phi = choose_phi(d);
  auto par = parabolic(d, {1});
  std::vector<ComplexLD> tp = {ComplexLD(0.37L, 0.21L), ComplexLD(-0.29L, 0.43L)};
  for (long m : {1L, 2L}) {
    auto r = residue_project(d, {1}, rat_vec({0, m}), {}, par.delta_I_plus, tp, phi);
    auto f = F_numeric(make_setup(d, {1}, rat_vec({0, m}), {}, phi), tp);
    EXPECT_LT(std::abs(r.value - f), 1e-6L * std::abs(f));
  }
}

TEST(Residue, EmptyIReturnsF) {
  const auto& d = sys("A2");
  auto phi = choose_phi(d);
  std::vector<ComplexLD> tp = {ComplexLD(0.3L, 0.1L), ComplexLD(-0.2L, 0.4L), ComplexLD(0.1L, -0.3L)};
  auto r = residue_project(d, {}, rat_vec({0, 0}), {}, {}, tp, phi);
  EXPECT_EQ(r.evaluations, 1u);
}
