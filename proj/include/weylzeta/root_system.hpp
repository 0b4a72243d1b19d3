#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace weylzeta {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

inline Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw ParseError(std::string("unknown root system family '") + c + "'");
  }
}

using IntCoords = std::vector<int>;

/// Root system data in a rational ambient space with the standard inner product.
/// Coroot-side vectors are usually handled in simple-coroot coordinates and
/// weights in fundamental-weight coordinates, so that the pairing is a dot product.
struct RootSystemData {
  Family family = Family::A;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<RatVec> simple_roots;
  std::vector<RatVec> positive_roots;        // canonical order
  std::vector<RatVec> coroots;               // ambient, same order
  std::vector<IntCoords> root_coeffs;        // simple-root coordinates
  std::vector<IntCoords> coroot_coeffs;      // simple-coroot coordinates
  std::vector<RatVec> fundamental_weights;   // ambient
  std::vector<std::vector<int>> cartan;      // cartan[i][j] = <alpha_i^vee, alpha_j>
  RatMatrix inner_product;                   // Gram matrix of the simple roots
  std::vector<Rational> length2;             // (alpha, alpha) per positive root
  bool enumeration_supported = false;

  std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
  std::size_t num_positive() const { return positive_roots.size(); }

  /// Index of alpha_i (0-based i) among the positive roots.
  std::size_t simple_index(int i) const {
    IntCoords e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return *find_by_coroot(e);
  }

  std::optional<std::size_t> find_by_coroot(const IntCoords& c) const {
    for (std::size_t k = 0; k < coroot_coeffs.size(); ++k)
      if (coroot_coeffs[k] == c) return k;
    return std::nullopt;
  }
  std::optional<std::size_t> find_by_root(const IntCoords& c) const {
    for (std::size_t k = 0; k < root_coeffs.size(); ++k)
      if (root_coeffs[k] == c) return k;
    return std::nullopt;
  }

  bool is_long(std::size_t k) const {
    return length2[k] == *std::max_element(length2.begin(), length2.end());
  }
  bool simply_laced() const {
    return *std::max_element(length2.begin(), length2.end()) == *std::min_element(length2.begin(), length2.end());
  }

  /// The linear form <alpha^vee, sum m_i lambda_i> printed as "m1+2m2".
  std::string linear_form(std::size_t k) const {
    std::string s;
    for (int i = 0; i < rank; ++i) {
      int c = coroot_coeffs[k][static_cast<std::size_t>(i)];
      if (!c) continue;
      if (!s.empty()) s += "+";
      if (c != 1) s += std::to_string(c);
      s += "m" + std::to_string(i + 1);
    }
    return s;
  }
};

/// Simple-coroot coordinates of an ambient vector u: a_i = (u, lambda_i).
inline RatVec coroot_coords(const RootSystemData& d, const RatVec& u) {
  RatVec a(static_cast<std::size_t>(d.rank));
  for (int i = 0; i < d.rank; ++i) a[static_cast<std::size_t>(i)] = dot(u, d.fundamental_weights[static_cast<std::size_t>(i)]);
  return a;
}

/// Fundamental-weight coordinates of an ambient vector v: m_i = (alpha_i^vee, v).
inline RatVec weight_coords(const RootSystemData& d, const RatVec& v) {
  RatVec m(static_cast<std::size_t>(d.rank));
  for (int i = 0; i < d.rank; ++i) {
    const RatVec& a = d.simple_roots[static_cast<std::size_t>(i)];
    m[static_cast<std::size_t>(i)] = Rational(2) * dot(a, v) / dot(a, a);
  }
  return m;
}

/// Ambient vector from weight coordinates.
inline RatVec weight_from_coords(const RootSystemData& d, const RatVec& m) {
  if (m.size() != static_cast<std::size_t>(d.rank)) throw DimensionMismatch("weight coordinates");
  RatVec v(static_cast<std::size_t>(d.ambient_dim), Rational(0));
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.ambient_dim; ++j)
      v[static_cast<std::size_t>(j)] += m[static_cast<std::size_t>(i)] * d.fundamental_weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return v;
}

/// Ambient coroot-side vector from simple-coroot coordinates.
inline RatVec coroot_from_coords(const RootSystemData& d, const RatVec& a) {
  if (a.size() != static_cast<std::size_t>(d.rank)) throw DimensionMismatch("coroot coordinates");
  RatVec v(static_cast<std::size_t>(d.ambient_dim), Rational(0));
  for (int i = 0; i < d.rank; ++i) {
    const RatVec& al = d.simple_roots[static_cast<std::size_t>(i)];
    Rational f = Rational(2) * a[static_cast<std::size_t>(i)] / dot(al, al);
    for (int j = 0; j < d.ambient_dim; ++j) v[static_cast<std::size_t>(j)] += f * al[static_cast<std::size_t>(j)];
  }
  return v;
}

namespace detail {

inline RatVec unit(int n, int i, long c = 1) {
  RatVec v(static_cast<std::size_t>(n), Rational(0));
  v[static_cast<std::size_t>(i)] = c;
  return v;
}

inline RatVec e8_simple(int i) {
  // Bourbaki realization in R^8.
  RatVec v(8, Rational(0));
  switch (i) {
    case 0:
      v[0] = make_rational(1, 2);
      v[7] = make_rational(1, 2);
      for (int j = 1; j <= 6; ++j) v[static_cast<std::size_t>(j)] = make_rational(-1, 2);
      break;
    case 1:
      v[0] = 1;
      v[1] = 1;
      break;
    default:  // alpha_{i+1} = e_{i-1} - e_{i-2} in 1-based Bourbaki labels
      v[static_cast<std::size_t>(i - 1)] = 1;
      v[static_cast<std::size_t>(i - 2)] = -1;
      break;
  }
  return v;
}

inline std::vector<RatVec> simple_roots_for(Family f, int r, int& dim) {
  std::vector<RatVec> s;
  switch (f) {
    case Family::A:
      dim = r + 1;
      for (int i = 0; i < r; ++i) {
        RatVec v = unit(dim, i);
        v[static_cast<std::size_t>(i + 1)] = -1;
        s.push_back(v);
      }
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      dim = r;
      for (int i = 0; i + 1 < r; ++i) {
        RatVec v = unit(dim, i);
        v[static_cast<std::size_t>(i + 1)] = -1;
        s.push_back(v);
      }
      if (f == Family::B) s.push_back(unit(dim, r - 1));
      if (f == Family::C) s.push_back(unit(dim, r - 1, 2));
      if (f == Family::D) {
        RatVec v = unit(dim, r - 1);
        v[static_cast<std::size_t>(r - 2)] = 1;
        s.push_back(v);
      }
      break;
    case Family::G: {
      dim = 3;
      s.push_back(rat_vec({1, -1, 0}));
      s.push_back(rat_vec({-2, 1, 1}));
      break;
    }
    case Family::F: {
      dim = 4;
      s.push_back(rat_vec({0, 1, -1, 0}));
      s.push_back(rat_vec({0, 0, 1, -1}));
      s.push_back(rat_vec({0, 0, 0, 1}));
      RatVec v(4, make_rational(-1, 2));
      v[0] = make_rational(1, 2);
      s.push_back(v);
      break;
    }
    case Family::E:
      dim = 8;
      for (int i = 0; i < r; ++i) s.push_back(e8_simple(i));
      break;
  }
  return s;
}

inline void check_supported(Family f, int r) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = r >= 1 && r <= 8; break;
    case Family::B:
    case Family::C: ok = r >= 2 && r <= 8; break;
    case Family::D: ok = r >= 4 && r <= 8; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) throw UnsupportedRank(std::string(1, family_letter(f)) + std::to_string(r) + " is not supported");
}

inline bool enumeration_ok(Family f, int r) {
  switch (f) {
    case Family::A: return r <= 5;
    case Family::B:
    case Family::C: return r <= 4;
    case Family::D: return r == 4;
    case Family::G: return true;
    default: return false;
  }
}

}  // namespace detail

inline RootSystemData build_root_system(Family family, int rank) {
  detail::check_supported(family, rank);
  RootSystemData d;
  d.family = family;
  d.rank = rank;
  d.simple_roots = detail::simple_roots_for(family, rank, d.ambient_dim);
  d.enumeration_supported = detail::enumeration_ok(family, rank);
  std::size_t r = static_cast<std::size_t>(rank);

  d.inner_product.assign(r, RatVec(r));
  d.cartan.assign(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      d.inner_product[i][j] = dot(d.simple_roots[i], d.simple_roots[j]);
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Rational a = Rational(2) * d.inner_product[i][j] / d.inner_product[i][i];
      d.cartan[i][j] = static_cast<int>(to_ll(a.get_num()));
    }

  // Positive roots by reflection closure on simple-root coordinates.
  std::set<IntCoords> seen;
  std::vector<IntCoords> queue;
  for (std::size_t i = 0; i < r; ++i) {
    IntCoords e(r, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    IntCoords b = queue[head];
    for (std::size_t i = 0; i < r; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < r; ++j) pairing += b[j] * d.cartan[i][j];
      IntCoords c = b;
      c[i] -= pairing;
      bool positive = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
      bool nonzero = std::any_of(c.begin(), c.end(), [](int x) { return x != 0; });
      if (positive && nonzero && !seen.count(c)) {
        seen.insert(c);
        queue.push_back(c);
      }
    }
  }

  // Fundamental weights lambda_j = sum_k X_jk alpha_k with X = (A^T)^{-1}.
  RatMatrix at(r, RatVec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) at[i][j] = d.cartan[j][i];
  RatMatrix x = inverse(at);
  d.fundamental_weights.assign(r, RatVec(static_cast<std::size_t>(d.ambient_dim), Rational(0)));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t c = 0; c < static_cast<std::size_t>(d.ambient_dim); ++c)
        d.fundamental_weights[j][c] += x[j][k] * d.simple_roots[k][c];

  struct Entry {
    IntCoords root, coroot;
    RatVec amb, co;
    Rational len2;
  };
  std::vector<Entry> entries;
  for (const IntCoords& c : queue) {
    Entry e;
    e.root = c;
    e.amb.assign(static_cast<std::size_t>(d.ambient_dim), Rational(0));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < e.amb.size(); ++j) e.amb[j] += Rational(c[k]) * d.simple_roots[k][j];
    e.len2 = dot(e.amb, e.amb);
    e.co = e.amb;
    for (auto& v : e.co) v = Rational(2) * v / e.len2;
    RatVec cc = coroot_coords(d, e.co);
    for (const auto& v : cc) {
      if (!is_integer(v)) throw DomainError("non-integral coroot coordinate");
      e.coroot.push_back(static_cast<int>(to_ll(v.get_num())));
    }
    entries.push_back(std::move(e));
  }
  // Canonical order: coroot height, then coroot coordinates in descending lexicographic order.
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    int ha = 0, hb = 0;
    for (int v : a.coroot) ha += v;
    for (int v : b.coroot) hb += v;
    if (ha != hb) return ha < hb;
    return a.coroot > b.coroot;
  });
  for (auto& e : entries) {
    d.positive_roots.push_back(e.amb);
    d.coroots.push_back(e.co);
    d.root_coeffs.push_back(e.root);
    d.coroot_coeffs.push_back(e.coroot);
    d.length2.push_back(e.len2);
  }
  return d;
}

/// Parses "A2", "C3", "G2", "E6".
inline RootSystemData parse_root_system(const std::string& spec) {
  if (spec.size() < 2) throw ParseError("bad root system '" + spec + "'");
  Family f = family_from_letter(static_cast<char>(std::toupper(static_cast<unsigned char>(spec[0]))));
  int r = 0;
  try {
    r = std::stoi(spec.substr(1));
  } catch (...) {
    throw ParseError("bad root system rank in '" + spec + "'");
  }
  return build_root_system(f, r);
}

/// Pairing of ambient vectors; a coroot against an integral weight yields an integer.
inline Rational pairing(const RatVec& coroot, const RatVec& weight) {
  if (coroot.size() != weight.size())
    throw DimensionMismatch("pairing of vectors of dimensions " + std::to_string(coroot.size()) + " and " +
                            std::to_string(weight.size()));
  return dot(coroot, weight);
}

/// Pairing <alpha^vee, v> for positive root k and v in weight coordinates.
inline Rational pair_root_weight(const RootSystemData& d, std::size_t k, const RatVec& m) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += d.coroot_coeffs[k][i] * m[i];
  return s;
}

/// True iff <alpha^vee, v> = 0 for some root; v in ambient coordinates.
inline bool on_wall(const RatVec& v, const RootSystemData& d) {
  for (const auto& c : d.coroots)
    if (sgn(pairing(c, v)) == 0) return true;
  return false;
}

/// Same test with v in fundamental-weight coordinates.
inline bool on_wall_coords(const RatVec& m, const RootSystemData& d) {
  for (std::size_t k = 0; k < d.num_positive(); ++k)
    if (sgn(pair_root_weight(d, k, m)) == 0) return true;
  return false;
}

/// Parabolic subdata for I (0-based simple root indices).
struct ParabolicData {
  std::vector<int> I;
  std::vector<std::size_t> delta_I_plus;
  std::vector<std::size_t> delta_star;
  std::vector<std::size_t> psi_I;  // positive-root indices of the simple roots in I

  bool contains(int i) const { return std::find(I.begin(), I.end(), i) != I.end(); }

  /// Weight coordinates restricted to I (the map iota^*).
  RatVec restrict(const RatVec& m) const {
    RatVec r;
    for (int i : I) r.push_back(m[static_cast<std::size_t>(i)]);
    return r;
  }
  bool in_P_I(const RatVec& m) const {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!is_integer(m[i])) return false;
      if (!contains(static_cast<int>(i)) && sgn(m[i]) != 0) return false;
    }
    return true;
  }
  bool in_P_I_plus(const RatVec& m) const {
    if (!in_P_I(m)) return false;
    for (int i : I)
      if (sgn(m[static_cast<std::size_t>(i)]) < 0) return false;
    return true;
  }
  bool in_P_I_plusplus(const RatVec& m) const {
    if (!in_P_I(m)) return false;
    for (int i : I)
      if (sgn(m[static_cast<std::size_t>(i)]) <= 0) return false;
    return true;
  }
};

inline ParabolicData parabolic(const RootSystemData& d, std::vector<int> I) {
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  for (int i : I)
    if (i < 0 || i >= d.rank) throw DomainError("index " + std::to_string(i + 1) + " outside 1.." + std::to_string(d.rank));
  ParabolicData p;
  p.I = I;
  std::vector<bool> inI(static_cast<std::size_t>(d.rank), false);
  for (int i : I) inI[static_cast<std::size_t>(i)] = true;
  for (std::size_t k = 0; k < d.num_positive(); ++k) {
    bool inside = true;
    for (int i = 0; i < d.rank; ++i)
      if (!inI[static_cast<std::size_t>(i)] && d.root_coeffs[k][static_cast<std::size_t>(i)] != 0) inside = false;
    (inside ? p.delta_I_plus : p.delta_star).push_back(k);
  }
  for (int i : I) p.psi_I.push_back(d.simple_index(i));
  return p;
}

/// Parses "1,3" into 0-based indices; an empty string gives the empty set.
inline std::vector<int> parse_index_set(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    int v = 0;
    try {
      v = std::stoi(cur);
    } catch (...) {
      throw ParseError("bad index '" + cur + "'");
    }
    out.push_back(v - 1);
    cur.clear();
  };
  for (char c : s) {
    if (c == ',' || c == ' ')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

enum class LengthClass { Long, Short };

/// Partition of the positive roots by length. `J` lists the simple roots of the second class.
struct LongShortSplit {
  std::vector<std::size_t> first;   // Delta_1 (positive part)
  std::vector<std::size_t> second;  // Delta_2 (positive part)
  std::vector<int> J;
  LengthClass first_class = LengthClass::Long;
};

inline LongShortSplit long_short_split(const RootSystemData& d, LengthClass first = LengthClass::Long) {
  LongShortSplit s;
  s.first_class = first;
  for (std::size_t k = 0; k < d.num_positive(); ++k) {
    bool in_first = d.is_long(k) == (first == LengthClass::Long);
    (in_first ? s.first : s.second).push_back(k);
  }
  if (d.simply_laced()) {
    // All roots share one length; the split is trivial.
    s.first.clear();
    s.second.clear();
    for (std::size_t k = 0; k < d.num_positive(); ++k) s.first.push_back(k);
    return s;
  }
  for (int i = 0; i < d.rank; ++i)
    if (std::find(s.second.begin(), s.second.end(), d.simple_index(i)) != s.second.end()) s.J.push_back(i);
  return s;
}

}  // namespace weylzeta
