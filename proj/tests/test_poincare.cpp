#include <gtest/gtest.h>

#include "weylzeta/poincare.hpp"

using namespace weylzeta;

namespace {

std::vector<std::size_t> all_of(const WeylGroup& g) {
  std::vector<std::size_t> v(g.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

std::vector<std::vector<int>> subsets(int r) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> I;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) I.push_back(i);
    out.push_back(I);
  }
  return out;
}

// (1 + u + ... + u^{d-1}) products written out by hand.
UniPoly from_coeffs(std::initializer_list<long> c) { return UniPoly(rat_vec(c)); }

}  // namespace

TEST(Poincare, A2Polynomial) {
  auto d = parse_root_system("A2");
  WeylGroup g(d);
  EXPECT_EQ(length_poincare(g, all_of(g)).to_string(), "1 + 2*u + 2*u^2 + u^3");
  EXPECT_EQ(length_poincare(g, {g.identity()}).to_string(), "1");
}

TEST(Poincare, ChevalleyProducts) {
  EXPECT_EQ(chevalley_poly(Family::A, 2), from_coeffs({1, 1}) * from_coeffs({1, 1, 1}));
  EXPECT_EQ(chevalley_poly(Family::G, 2), from_coeffs({1, 1}) * from_coeffs({1, 1, 1, 1, 1, 1}));
  for (auto s : {"A3", "B3", "C3", "D4", "F4", "E6", "E7", "E8", "G2"}) {
    auto d = parse_root_system(s);
    EXPECT_EQ(chevalley_poly(d).evaluate(1), Rational(weyl_order(degrees(d.family, d.rank)))) << s;
  }
  EXPECT_EQ(weyl_order(degrees(Family::E, 8)), Integer(696729600));
}

TEST(Poincare, ChevalleyMatchesEnumeration) {
  for (auto s : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"}) {
    auto d = parse_root_system(s);
    WeylGroup g(d);
    EXPECT_EQ(chevalley_poly(d), length_poincare(g, all_of(g))) << s;
  }
}

TEST(Poincare, ParabolicFactorization) {
  for (auto s : {"A3", "B3", "G2"}) {
    auto d = parse_root_system(s);
    WeylGroup g(d);
    BiPoly w = generalized_poincare(g);
    for (const auto& I : subsets(d.rank)) {
      auto c = min_coset_reps(g, I);
      EXPECT_EQ(generalized_poincare(g, c.W_I) * generalized_poincare(g, c.W_upper), w) << s;
      EXPECT_EQ(relative_poly(d, I), length_poincare(g, c.W_upper));
    }
  }
}

TEST(Poincare, RelativePolyExamples) {
  auto a2 = parse_root_system("A2");
  EXPECT_EQ(relative_poly(a2, {1}), from_coeffs({1, 1, 1}));
  EXPECT_EQ(relative_poly(a2, {}), chevalley_poly(a2));
  auto a3 = parse_root_system("A3");
  auto q = relative_poly(a3, {0, 2});
  EXPECT_EQ(q * from_coeffs({1, 1}) * from_coeffs({1, 1}), chevalley_poly(a3));
}

TEST(Poincare, EvalMinusOneExamples) {
  auto a3 = parse_root_system("A3");
  EXPECT_EQ(eval_minus_one(a3, {0, 2}), Rational(2));
  auto e6 = parse_root_system("E6");
  EXPECT_EQ(eval_minus_one(e6, find_subset_of_type(e6, "D5")), Rational(3));
  auto b3 = parse_root_system("B3");
  for (const auto& I : subsets(3)) {
    if (I.size() < 3) {
      EXPECT_EQ(eval_minus_one(b3, I), Rational(0));
    }
  }
}

TEST(Poincare, EvalMinusOneAgreesWithEnumeration) {
  for (auto s : {"A3", "A4", "B3", "D4", "G2"}) {
    auto d = parse_root_system(s);
    WeylGroup g(d);
    for (const auto& I : subsets(d.rank)) {
      auto c = min_coset_reps(g, I);
      EXPECT_EQ(eval_minus_one(d, I), length_poincare(g, c.W_upper).evaluate(-1)) << s;
    }
  }
}

TEST(Poincare, ArClosedFormula) {
  // [(r+1)/2]! / prod [(r_i+1)/2]! when the brackets add up, else 0.
  auto fact = [](int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  for (int r = 1; r <= 5; ++r) {
    auto d = build_root_system(Family::A, r);
    for (const auto& I : subsets(r)) {
      auto comps = classify_subset(d, I);
      int sum = 0;
      Rational den = 1;
      for (const auto& c : comps) {
        sum += (c.rank + 1) / 2;
        den *= fact((c.rank + 1) / 2);
      }
      Rational want = sum == (r + 1) / 2 ? fact((r + 1) / 2) / den : Rational(0);
      EXPECT_EQ(eval_minus_one(d, I), want);
    }
  }
}

TEST(Poincare, MixedEvalTable) {
  EXPECT_EQ(mixed_eval(parse_root_system("B3"), {1, 2}, LengthClass::Long), Rational(2));
  EXPECT_EQ(mixed_eval(parse_root_system("C3"), {1, 2}, LengthClass::Short), Rational(2));
  EXPECT_EQ(mixed_eval(parse_root_system("G2"), {1}, LengthClass::Long), Rational(2));
  EXPECT_EQ(mixed_eval(parse_root_system("G2"), {0}, LengthClass::Short), Rational(2));
  auto f4 = parse_root_system("F4");
  for (const auto& I : subsets(4)) {
    if (I.size() < 4) {
      EXPECT_EQ(mixed_eval(f4, I, LengthClass::Long), Rational(0));
      EXPECT_EQ(mixed_eval(f4, I, LengthClass::Short), Rational(0));
    }
  }
  EXPECT_THROW(mixed_eval(parse_root_system("A3"), {0}, LengthClass::Long), SimplyLaced);
}

TEST(Poincare, MixedEvalAgreesWithEnumeration) {
  for (auto s : {"B2", "B3", "C3", "G2", "B4"}) {
    auto d = parse_root_system(s);
    WeylGroup g(d);
    for (const auto& I : subsets(d.rank))
      for (auto cls : {LengthClass::Long, LengthClass::Short})
        EXPECT_EQ(mixed_eval(d, I, cls), mixed_eval_enumerated(g, I, cls)) << s;
  }
}

TEST(Poincare, TwoLengthCorollary) {
  auto wpoly = [](const char* s) {
    auto d = parse_root_system(s);
    WeylGroup g(d);
    return generalized_poincare(g);
  };
  UniPoly onePlusU = from_coeffs({1, 1});
  // W(C3)((u),(1)) = 3!(1+u)^3
  EXPECT_EQ(wpoly("C3").specialize_second(1), (onePlusU * onePlusU * onePlusU).scaled(6));
  EXPECT_EQ(wpoly("C2").specialize_second(1), (onePlusU * onePlusU).scaled(2));
  // W(B_r)((u),(1)) = 2 W(D_r)((u)); D3 = A3, D2 = A1^2
  EXPECT_EQ(wpoly("B3").specialize_second(1), chevalley_poly(Family::A, 3).scaled(2));
  EXPECT_EQ(wpoly("B2").specialize_second(1), (onePlusU * onePlusU).scaled(2));
  // B_r with (1),(u) matches C_r with (u),(1)
  EXPECT_EQ(wpoly("B3").specialize_first(1), wpoly("C3").specialize_second(1));
  EXPECT_EQ(wpoly("C3").specialize_first(1), wpoly("B3").specialize_second(1));
  // G2 both ways
  EXPECT_EQ(wpoly("G2").specialize_second(1), chevalley_poly(Family::A, 2).scaled(2));
  EXPECT_EQ(wpoly("G2").specialize_first(1), chevalley_poly(Family::A, 2).scaled(2));
}

TEST(Poincare, Section6TableAllPass) {
  auto rows = section6_table();
  EXPECT_GT(rows.size(), 20u);
  for (const auto& r : rows) EXPECT_TRUE(r.pass) << r.delta << " " << r.deltaI << " " << r.mode;
}
