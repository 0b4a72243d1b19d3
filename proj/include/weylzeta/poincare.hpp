#pragma once

#include <string>
#include <vector>

#include "dynkin.hpp"
#include "errors.hpp"
#include "polynomial.hpp"
#include "root_system.hpp"
#include "weyl.hpp"

namespace weylzeta {

/// Sum over the given elements of prod over Delta_{w^{-1}} of u_L or u_S by root length.
/// Simply-laced systems put every root in u_L.
inline BiPoly generalized_poincare(const WeylGroup& g, const std::vector<std::size_t>& elems) {
  const RootSystemData& d = g.system();
  BiPoly p;
  for (auto e : elems) {
    int nl = 0, ns = 0;
    for (auto a : g[e].inversions) (d.is_long(a) ? nl : ns)++;
    p.add({nl, ns}, Rational(1));
  }
  return p;
}

inline BiPoly generalized_poincare(const WeylGroup& g) {
  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return generalized_poincare(g, all);
}

/// Length generating polynomial over the given elements.
inline UniPoly length_poincare(const WeylGroup& g, const std::vector<std::size_t>& elems) {
  return generalized_poincare(g, elems).diagonal();
}

inline UniPoly chevalley_from_degrees(const std::vector<int>& ds) {
  UniPoly p(Rational(1));
  for (int d : ds) p = p * UniPoly::geometric(d);
  return p;
}

/// prod_i (u^{d_i} - 1)/(u - 1).
inline UniPoly chevalley_poly(Family f, int r) { return chevalley_from_degrees(degrees(f, r)); }

inline UniPoly chevalley_poly(const RootSystemData& d) { return chevalley_poly(d.family, d.rank); }

inline Integer weyl_order(const std::vector<int>& ds) {
  Integer n = 1;
  for (int d : ds) n *= d;
  return n;
}

/// W(u)/W_I(u) from the degrees of Delta and of the components of Delta_I.
inline UniPoly relative_poly(const RootSystemData& d, const std::vector<int>& I) {
  UniPoly w = chevalley_poly(d);
  UniPoly wi = chevalley_from_degrees(degrees_of(classify_subset(d, I)));
  auto [q, r] = UniPoly::divmod(w, wi);
  if (!r.is_zero()) throw NonDivisible("W(u) is not divisible by W_I(u) for " + d.name());
  return q;
}

namespace detail {

/// lim_{u -> -1} prod [d_i]_u / prod [d'_i]_u, zero when the numerator has more even degrees.
inline Rational minus_one_ratio(const std::vector<int>& num, const std::vector<int>& den) {
  Rational top = 1, bottom = 1;
  int kn = 0, kd = 0;
  for (int d : num)
    if (d % 2 == 0) {
      ++kn;
      top *= d;
    }
  for (int d : den)
    if (d % 2 == 0) {
      ++kd;
      bottom *= d;
    }
  if (kn > kd) return Rational(0);
  if (kn < kd) throw NonDivisible("subsystem has more even degrees than the whole system");
  return top / bottom;
}

}  // namespace detail

/// W^I((-1)) from the degrees table.
inline Rational eval_minus_one(const RootSystemData& d, const std::vector<int>& I) {
  return detail::minus_one_ratio(degrees(d.family, d.rank), degrees_of(classify_subset(d, I)));
}

/// Dynkin type of the length class `cls` of the positive roots listed in `roots`.
inline std::vector<DynkinComponent> class_type(const RootSystemData& d, const std::vector<std::size_t>& roots,
                                               LengthClass cls) {
  std::vector<std::size_t> keep;
  for (auto a : roots)
    if (d.is_long(a) == (cls == LengthClass::Long)) keep.push_back(a);
  return classify(indecomposable_roots(d, keep));
}

/// W^I((-1),(1)) with u = -1 on the class `first` and 1 on the other class.
inline Rational mixed_eval(const RootSystemData& d, const std::vector<int>& I, LengthClass first) {
  if (d.simply_laced()) throw SimplyLaced(d.name() + " has a single root length");
  ParabolicData p = parabolic(d, I);
  std::vector<std::size_t> all(d.num_positive());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto t1 = class_type(d, all, first);
  auto t1I = class_type(d, p.delta_I_plus, first);
  std::vector<int> J, IJ;
  for (int i = 0; i < d.rank; ++i) {
    bool second = d.is_long(d.simple_index(i)) != (first == LengthClass::Long);
    if (!second) continue;
    J.push_back(i);
    if (p.contains(i)) IJ.push_back(i);
  }
  Rational wj(weyl_order(degrees_of(classify_subset(d, J))));
  Rational wij(weyl_order(degrees_of(classify_subset(d, IJ))));
  Rational lim = detail::minus_one_ratio(degrees_of(t1), degrees_of(t1I));
  return wj / wij * lim;
}

/// Same value by direct enumeration over W^I; used as a cross-check.
inline Rational mixed_eval_enumerated(const WeylGroup& g, const std::vector<int>& I, LengthClass first) {
  auto c = min_coset_reps(g, I);
  BiPoly p = generalized_poincare(g, c.W_upper);
  return first == LengthClass::Long ? p.evaluate(Rational(-1), Rational(1)) : p.evaluate(Rational(1), Rational(-1));
}

/// Signed count sum_{w in W^I} prod_{alpha in Delta_{w^{-1}}} (-1)^{k_alpha}; k indexed by positive roots.
inline Integer signed_coset_count(const WeylGroup& g, const CosetData& c, const std::vector<long>& k) {
  Integer s = 0;
  for (auto w : c.W_upper) {
    int sign = 1;
    for (auto a : g[w].inversions)
      if (k[a] % 2 != 0) sign = -sign;
    s += sign;
  }
  return s;
}

/// One row of the non-vanishing tables.
struct PoincareRow {
  std::string delta;
  std::string deltaI;
  std::string mode;  // "minus-one" or "mixed-long" / "mixed-short"
  std::vector<int> I;
  Rational expected;
  Rational computed;
  bool pass = false;
};

/// The tabulated pairs for both non-vanishing families and the vanishing cases.
inline std::vector<PoincareRow> section6_table() {
  std::vector<PoincareRow> rows;
  auto add_minus = [&](const std::string& sys, const std::string& label, long expected) {
    auto d = parse_root_system(sys);
    PoincareRow r;
    r.delta = sys;
    r.I = find_subset_of_type(d, label);
    r.deltaI = label;
    r.mode = "minus-one";
    r.expected = expected;
    r.computed = eval_minus_one(d, r.I);
    r.pass = r.computed == r.expected;
    rows.push_back(r);
  };
  add_minus("A2", "A1", 1);
  add_minus("A4", "A3", 1);
  add_minus("A3", "A1^2", 2);
  add_minus("A4", "A1^2", 2);
  add_minus("A4", "A1xA2", 2);
  add_minus("A5", "A1^3", 6);
  add_minus("D5", "D4", 2);
  add_minus("E6", "D5", 3);
  add_minus("E6", "D4", 6);
  for (const char* sys : {"B3", "C3", "D4", "F4", "G2"}) {
    auto d = parse_root_system(sys);
    for (unsigned mask = 0; mask + 1 < (1u << d.rank); ++mask) {
      PoincareRow r;
      r.delta = sys;
      for (int i = 0; i < d.rank; ++i)
        if (mask & (1u << i)) r.I.push_back(i);
      r.deltaI = type_label(classify_subset(d, r.I));
      r.mode = "minus-one";
      r.expected = 0;
      r.computed = eval_minus_one(d, r.I);
      r.pass = r.computed == r.expected;
      rows.push_back(r);
    }
  }
  auto add_mixed = [&](const std::string& sys, std::vector<int> I, const std::string& label, LengthClass cls,
                       long expected) {
    auto d = parse_root_system(sys);
    PoincareRow r;
    r.delta = sys;
    r.I = I;
    r.deltaI = label;
    r.mode = cls == LengthClass::Long ? "mixed-long" : "mixed-short";
    r.expected = expected;
    r.computed = mixed_eval(d, I, cls);
    r.pass = r.computed == r.expected;
    rows.push_back(r);
  };
  add_mixed("B3", {1, 2}, "B2", LengthClass::Long, 2);
  add_mixed("C3", {1, 2}, "C2", LengthClass::Short, 2);
  add_mixed("G2", {1}, "A1 (long)", LengthClass::Long, 2);
  add_mixed("G2", {0}, "A1 (short)", LengthClass::Short, 2);
  {
    auto d = parse_root_system("F4");
    for (unsigned mask = 0; mask + 1 < (1u << 4); ++mask) {
      std::vector<int> I;
      for (int i = 0; i < 4; ++i)
        if (mask & (1u << i)) I.push_back(i);
      for (auto cls : {LengthClass::Long, LengthClass::Short})
        add_mixed("F4", I, type_label(classify_subset(d, I)), cls, 0);
    }
  }
  return rows;
}

}  // namespace weylzeta
