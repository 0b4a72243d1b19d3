#include <gtest/gtest.h>

#include <cmath>

#include "weylzeta/lattice_zeta.hpp"

using namespace weylzeta;

namespace {

const long double kPi = std::acos(-1.0L);

const RootSystemData& sys(const char* name) {
  static std::map<std::string, RootSystemData> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, parse_root_system(name)).first;
  return it->second;
}

}  // namespace

TEST(ZetaR, A1IsRiemannZeta) {
  const auto& d = sys("A1");
  auto r = zeta_r(make_args(d, real_exponents({4})), 2000, 1);
  EXPECT_NEAR(static_cast<double>(r.value.real()), static_cast<double>(std::pow(kPi, 4) / 90), 1e-10);
  EXPECT_EQ(r.value.imag(), 0);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(ZetaR, A2AtTwos) {
  // sum 1/(m^2 n^2 (m+n)^2) = pi^6/2835
  const auto& d = sys("A2");
  auto r = zeta_r(make_args(d, real_exponents({2, 2, 2})), 1000, 1);
  // box tail is O(N^-3)
  EXPECT_NEAR(static_cast<double>(r.value.real()), static_cast<double>(std::pow(kPi, 6) / 2835), 5e-9);
  EXPECT_LT(r.cauchyDiff, 1e-7L);
}

TEST(ZetaR, A2TornheimMordellAtOnes) {
  // sum 1/(mn(m+n)) = 2 zeta(3); the tail decays like log(N)/N, so only a loose check.
  const auto& d = sys("A2");
  auto r = zeta_r(make_args(d, real_exponents({1, 1, 1})), 2000, 1);
  EXPECT_NEAR(static_cast<double>(r.value.real()), 2 * 1.2020569031595942, 1e-2);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(ZetaR, ThreadCountDoesNotChangeBits) {
  const auto& d = sys("B2");
  auto args = make_args(d, {Complex(2, 0.5L), Complex(2, 0), Complex(3, -1), Complex(2, 0)}, rat_vec({0, 1}));
  args.y = {make_rational(1, 3), make_rational(1, 2)};
  auto a = zeta_r(args, 150, 1), b = zeta_r(args, 150, 3), c = zeta_r(args, 150, 7);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.value, c.value);
}

TEST(ZetaR, YIsPeriodic) {
  const auto& d = sys("A2");
  auto a = zeta_r(make_args(d, real_exponents({2, 3, 2}), {make_rational(1, 4), make_rational(2, 3)}), 200, 1);
  auto b = zeta_r(make_args(d, real_exponents({2, 3, 2}), {make_rational(5, 4), make_rational(-1, 3)}), 200, 1);
  EXPECT_NEAR(static_cast<double>(std::abs(a.value - b.value)), 0, 1e-15);
}

TEST(ZetaR, A1WithHalfIsAlternating) {
  // sum (-1)^m m^-2 = -pi^2/12
  const auto& d = sys("A1");
  auto r = zeta_r(make_args(d, real_exponents({2}), {make_rational(1, 2)}), 20000, 1);
  EXPECT_NEAR(static_cast<double>(r.value.real()), static_cast<double>(-kPi * kPi / 12), 1e-8);
  EXPECT_NEAR(static_cast<double>(r.value.imag()), 0, 1e-12);
}

TEST(ZetaR, DoubleAndExtendedAgree) {
  const auto& d = sys("G2");
  auto args = make_args(d, real_exponents({2, 2, 2, 2, 2, 2}));
  auto a = zeta_r(args, 150, 1, Precision::Double);
  auto b = zeta_r(args, 150, 1, Precision::Extended);
  EXPECT_EQ(a.precision, "double");
  EXPECT_EQ(b.precision, "extended");
  EXPECT_NEAR(static_cast<double>(std::abs(a.value - b.value)), 0, 1e-13 * static_cast<double>(std::abs(b.value)));
}

TEST(ZetaR, Errors) {
  const auto& d = sys("A2");
  EXPECT_THROW(make_args(d, real_exponents({2, 2})), DimensionMismatch);
  EXPECT_THROW(zeta_r(make_args(d, real_exponents({2, 2, 2})), 0, 1), DomainError);
}

TEST(SDirect, FullIEqualsZetaR) {
  const auto& d = sys("C2");
  auto args = make_args(d, real_exponents({2, 2.5L, 3, 2}), {}, {0, 1});
  auto a = S_direct(args, 120, 1);
  auto b = zeta_r(args, 120, 1);
  EXPECT_EQ(a.value, b.value);
}

TEST(SDirect, A1EmptyIIsTwiceZeta) {
  const auto& d = sys("A1");
  auto r = S_direct(make_args(d, real_exponents({4}), {}, {}), 3000, 1);
  EXPECT_NEAR(static_cast<double>(r.value.real()), static_cast<double>(2 * std::pow(kPi, 4) / 90), 1e-10);
}

TEST(SDirect, OddExponentCancelsOnA1) {
  const auto& d = sys("A1");
  auto r = S_direct(make_args(d, real_exponents({3}), {}, {}), 500, 1);
  EXPECT_EQ(r.value, Complex(0, 0));
}

TEST(SDirect, NonIntegerAcrossSignThrows) {
  const auto& d = sys("A2");
  EXPECT_THROW(S_direct(make_args(d, real_exponents({2, 2.5L, 2}), {}, {0}), 50, 1), SignOnNonInteger);
  // The same exponent on a root that never changes sign is fine.
  EXPECT_NO_THROW(S_direct(make_args(d, real_exponents({2.5L, 2, 2}), {}, {0}), 50, 1));
}

TEST(Lerch, KnownValues) {
  auto z2 = lerch_phi(Complex(2, 0), Rational(0), 1000);
  EXPECT_NEAR(static_cast<double>(z2.value.real()), static_cast<double>(kPi * kPi / 6), 1e-15);
  auto h = lerch_phi(Complex(2, 0), make_rational(1, 2), 1000);
  EXPECT_NEAR(static_cast<double>(h.value.real()), static_cast<double>(-kPi * kPi / 12), 1e-15);
  EXPECT_NEAR(static_cast<double>(h.value.imag()), 0, 1e-15);
}

TEST(Lerch, ThirdAgainstDirectSum) {
  Complex direct(0);
  const long n = 400000;
  for (long k = n; k >= 1; --k) {
    long double ang = 2 * kPi * static_cast<long double>(k % 3) / 3;
    direct += Complex(std::cos(ang), std::sin(ang)) / std::pow(static_cast<long double>(k), 3.0L);
  }
  auto r = lerch_phi(Complex(3, 0), make_rational(1, 3), 100);
  EXPECT_NEAR(static_cast<double>(std::abs(r.value - direct)), 0, 1e-11);
  // u and u + 1 give the same series
  auto r2 = lerch_phi(Complex(3, 0), make_rational(4, 3), 100);
  EXPECT_NEAR(static_cast<double>(std::abs(r.value - r2.value)), 0, 1e-17);
}

TEST(Lerch, ComplexExponent) {
  // phi(s, 0) = zeta(s); compare a complex s against a long partial sum with the N^{1-s}/(s-1) tail.
  Complex s(2.5L, 1.5L);
  const long n = 200000;
  Complex direct = zeta_partial(s, n) + std::exp((Complex(1) - s) * std::log(static_cast<long double>(n))) / (s - Complex(1)) -
                   std::exp(-s * std::log(static_cast<long double>(n))) / Complex(2);
  auto r = lerch_phi(s, Rational(0), 50);
  EXPECT_NEAR(static_cast<double>(std::abs(r.value - direct)), 0, 1e-12);
  EXPECT_THROW(lerch_phi(Complex(1, 0), Rational(0), 50), DomainError);
}

TEST(Harmonic, FiniteIdentityHolds) {
  for (auto [s1, s2] : std::vector<std::pair<Complex, Complex>>{{{2, 0}, {3, 0}}, {{1.5L, 2}, {0.7L, -1}}, {{1, 0}, {1, 0}}})
    for (long n : {1L, 7L, 250L}) EXPECT_LT(harmonic_residual(s1, s2, n), 1e-14L * (1 + std::abs(zeta_partial(s1, n) * zeta_partial(s2, n))));
}

TEST(Harmonic, EulerZagierTwoOne) {
  // sum_{m<n} 1/(m n^2) = zeta(3)
  auto r = euler_zagier_2(Complex(1, 0), Complex(2, 0), 200000);
  EXPECT_NEAR(static_cast<double>(r.value.real()), 1.2020569031595942, 1e-4);
}
