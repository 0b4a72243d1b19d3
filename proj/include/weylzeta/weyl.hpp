#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "root_system.hpp"

namespace weylzeta {

using SmallVec = std::vector<long>;
using SmallMatrix = std::vector<SmallVec>;

/// Element of W. Matrices act on column vectors of coordinates.
struct WeylElement {
  std::vector<int> word;          // reduced word, 0-based generator indices
  RatMatrix matrix;               // ambient
  SmallMatrix root_matrix;          // on simple-root coordinates
  SmallMatrix coroot_matrix;        // on simple-coroot coordinates
  std::vector<int> perm;          // perm[j]: image of positive root j; values >= n mean -(root v-n)
  std::vector<std::size_t> inversions;  // Delta_{w^{-1}} = {alpha > 0 : w^{-1} alpha < 0}

  int length() const { return static_cast<int>(word.size()); }

  std::string word_string() const {
    if (word.empty()) return "id";
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) s += (i ? " s" : "s") + std::to_string(word[i] + 1);
    return s;
  }
};

inline std::string word_to_string(const std::vector<int>& w) {
  WeylElement e;
  e.word = w;
  return e.word_string();
}

namespace detail {

inline SmallMatrix int_identity(std::size_t n) {
  SmallMatrix m(n, SmallVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline SmallMatrix int_multiply(const SmallMatrix& a, const SmallMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  SmallMatrix r(n, SmallVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (!a[i][j]) continue;
      for (std::size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
    }
  return r;
}

inline SmallVec int_apply(const SmallMatrix& a, const SmallVec& v) {
  SmallVec r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

/// sigma_i on simple-root coordinates: c -> c - <alpha_i^vee, beta> alpha_i.
inline SmallMatrix reflection_roots(const RootSystemData& d, int i) {
  std::size_t r = static_cast<std::size_t>(d.rank), ii = static_cast<std::size_t>(i);
  SmallMatrix m = int_identity(r);
  for (std::size_t j = 0; j < r; ++j) m[ii][j] -= d.cartan[ii][j];
  return m;
}

/// sigma_i on simple-coroot coordinates: a -> a - <v, alpha_i> alpha_i^vee.
inline SmallMatrix reflection_coroots(const RootSystemData& d, int i) {
  std::size_t r = static_cast<std::size_t>(d.rank), ii = static_cast<std::size_t>(i);
  SmallMatrix m = int_identity(r);
  for (std::size_t j = 0; j < r; ++j) m[ii][j] -= d.cartan[j][ii];
  return m;
}

inline RatMatrix reflection_ambient(const RootSystemData& d, int i) {
  const RatVec& a = d.simple_roots[static_cast<std::size_t>(i)];
  std::size_t n = a.size();
  Rational aa = dot(a, a);
  RatMatrix m = identity_matrix(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) m[p][q] -= Rational(2) * a[p] * a[q] / aa;
  return m;
}

inline std::vector<int> root_permutation(const RootSystemData& d, const SmallMatrix& root_matrix) {
  std::size_t n = d.num_positive();
  std::vector<int> perm(n);
  for (std::size_t j = 0; j < n; ++j) {
    SmallVec img = int_apply(root_matrix, SmallVec(d.root_coeffs[j].begin(), d.root_coeffs[j].end()));
    bool neg = std::any_of(img.begin(), img.end(), [](long x) { return x < 0; });
    if (neg)
      for (auto& x : img) x = -x;
    IntCoords c;
    for (long x : img) c.push_back(static_cast<int>(x));
    auto k = d.find_by_root(c);
    if (!k) throw DomainError("Weyl element does not permute the roots");
    perm[j] = static_cast<int>(*k + (neg ? n : 0));
  }
  return perm;
}

}  // namespace detail

/// The Weyl group with elements sorted by (length, word).
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystemData& d) : d_(&d) {
    if (!d.enumeration_supported)
      throw UnsupportedRank("Weyl group enumeration is not supported for " + d.name());
    enumerate();
  }

  const RootSystemData& system() const { return *d_; }
  const std::vector<WeylElement>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  const WeylElement& operator[](std::size_t i) const { return elems_[i]; }

  std::size_t index_of(const std::vector<int>& perm) const {
    auto it = by_perm_.find(perm);
    if (it == by_perm_.end()) throw DomainError("element not in group");
    return it->second;
  }
  std::size_t identity() const { return 0; }
  std::size_t inverse(std::size_t i) const { return inv_[i]; }
  std::size_t multiply(std::size_t a, std::size_t b) const {
    return index_of(detail::root_permutation(*d_, detail::int_multiply(elems_[a].root_matrix, elems_[b].root_matrix)));
  }

  /// Element with the given word (not necessarily reduced).
  std::size_t from_word(const std::vector<int>& w) const {
    SmallMatrix m = detail::int_identity(static_cast<std::size_t>(d_->rank));
    for (int g : w) {
      if (g < 0 || g >= d_->rank) throw DomainError("generator index out of range");
      m = detail::int_multiply(m, detail::reflection_roots(*d_, g));
    }
    return index_of(detail::root_permutation(*d_, m));
  }

  /// Index of the image of positive root j under element e, with its sign.
  std::pair<std::size_t, int> image(std::size_t e, std::size_t j) const {
    int v = elems_[e].perm[j];
    std::size_t n = d_->num_positive();
    return v >= static_cast<int>(n) ? std::pair{static_cast<std::size_t>(v) - n, -1}
                                    : std::pair{static_cast<std::size_t>(v), 1};
  }

 private:
  void enumerate() {
    const RootSystemData& d = *d_;
    std::size_t r = static_cast<std::size_t>(d.rank);
    std::size_t n = d.num_positive();
    std::vector<SmallMatrix> gr, gc;
    std::vector<RatMatrix> ga;
    for (int i = 0; i < d.rank; ++i) {
      gr.push_back(detail::reflection_roots(d, i));
      gc.push_back(detail::reflection_coroots(d, i));
      ga.push_back(detail::reflection_ambient(d, i));
    }
    WeylElement id;
    id.matrix = identity_matrix(static_cast<std::size_t>(d.ambient_dim));
    id.root_matrix = detail::int_identity(r);
    id.coroot_matrix = detail::int_identity(r);
    id.perm = detail::root_permutation(d, id.root_matrix);
    std::vector<WeylElement> found{id};
    std::map<std::vector<int>, std::size_t> seen{{id.perm, 0}};
    for (std::size_t head = 0; head < found.size(); ++head) {
      for (int i = 0; i < d.rank; ++i) {
        WeylElement w;
        w.root_matrix = detail::int_multiply(found[head].root_matrix, gr[static_cast<std::size_t>(i)]);
        w.perm = detail::root_permutation(d, w.root_matrix);
        if (seen.count(w.perm)) continue;
        w.word = found[head].word;
        w.word.push_back(i);
        w.coroot_matrix = detail::int_multiply(found[head].coroot_matrix, gc[static_cast<std::size_t>(i)]);
        w.matrix = weylzeta::multiply(found[head].matrix, ga[static_cast<std::size_t>(i)]);
        seen.emplace(w.perm, found.size());
        found.push_back(std::move(w));
      }
    }
    std::sort(found.begin(), found.end(), [](const WeylElement& a, const WeylElement& b) {
      if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
      return a.word < b.word;
    });
    for (std::size_t k = 0; k < found.size(); ++k) by_perm_[found[k].perm] = k;
    for (auto& w : found) {
      // alpha in Delta_{w^{-1}} iff alpha = -w(beta) for some positive beta with w(beta) < 0.
      for (std::size_t j = 0; j < n; ++j)
        if (w.perm[j] >= static_cast<int>(n)) w.inversions.push_back(static_cast<std::size_t>(w.perm[j]) - n);
      std::sort(w.inversions.begin(), w.inversions.end());
    }
    elems_ = std::move(found);
    inv_.resize(elems_.size());
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      std::vector<int> w = elems_[k].word;
      std::reverse(w.begin(), w.end());
      inv_[k] = from_word(w);
    }
  }

  const RootSystemData* d_;
  std::vector<WeylElement> elems_;
  std::map<std::vector<int>, std::size_t> by_perm_;
  std::vector<std::size_t> inv_;
};

inline WeylGroup enumerate_weyl(const RootSystemData& d) { return WeylGroup(d); }

/// Delta_{w^{-1}} as sorted positive-root indices.
inline const std::vector<std::size_t>& inversion_set(const WeylElement& w) { return w.inversions; }

struct CosetData {
  std::vector<int> I;
  std::vector<std::size_t> W_I;     // group indices
  std::vector<std::size_t> W_upper;  // minimal coset representatives W^I
};

inline CosetData min_coset_reps(const WeylGroup& g, const std::vector<int>& I) {
  const RootSystemData& d = g.system();
  ParabolicData p = parabolic(d, I);
  CosetData c;
  c.I = p.I;
  // W_I: closure under the generators in I.
  std::vector<bool> in(g.size(), false);
  std::vector<std::size_t> queue{g.identity()};
  in[g.identity()] = true;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (int i : p.I) {
      std::vector<int> w = g[queue[h]].word;
      w.push_back(i);
      std::size_t k = g.from_word(w);
      if (!in[k]) {
        in[k] = true;
        queue.push_back(k);
      }
    }
  for (std::size_t k = 0; k < g.size(); ++k)
    if (in[k]) c.W_I.push_back(k);
  std::vector<bool> inI(d.num_positive(), false);
  for (auto a : p.delta_I_plus) inI[a] = true;
  for (std::size_t k = 0; k < g.size(); ++k) {
    bool ok = true;
    for (auto a : g[k].inversions)
      if (inI[a]) ok = false;
    if (ok) c.W_upper.push_back(k);
  }
  return c;
}

/// w = x y with x in W_I and y in W^I.
inline std::pair<std::size_t, std::size_t> decompose(const WeylGroup& g, std::size_t w, const CosetData& c) {
  std::vector<bool> inWI(g.size(), false);
  for (auto x : c.W_I) inWI[x] = true;
  for (auto y : c.W_upper) {
    std::size_t x = g.multiply(w, g.inverse(y));
    if (inWI[x]) return {x, y};
  }
  throw DomainError("no parabolic decomposition found");
}

/// Arguments of the zeta term attached to w in the signed sum: returns (w^{-1}s, w^{-1}y),
/// where (w^{-1}s)_alpha = s_{w alpha} with s_{-beta} = s_beta, and y is in coroot coordinates.
template <class S>
std::pair<std::vector<S>, RatVec> act_on_args(const WeylGroup& g, std::size_t w, const std::vector<S>& s,
                                              const RatVec& y) {
  const RootSystemData& d = g.system();
  if (s.size() != d.num_positive()) throw DimensionMismatch("s has wrong length");
  if (y.size() != static_cast<std::size_t>(d.rank)) throw DimensionMismatch("y has wrong length");
  std::vector<S> out(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) out[j] = s[g.image(w, j).first];
  const SmallMatrix& m = g[g.inverse(w)].coroot_matrix;
  RatVec yy(y.size(), Rational(0));
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) yy[i] += Rational(m[i][j]) * y[j];
  return {out, yy};
}

}  // namespace weylzeta
