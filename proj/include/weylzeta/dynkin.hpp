#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "root_system.hpp"

namespace weylzeta {

/// One irreducible component of a Dynkin diagram.
struct DynkinComponent {
  Family family = Family::A;
  int rank = 0;
  std::vector<int> nodes;  // positions in the input list

  std::string label() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
  friend bool operator<(const DynkinComponent& a, const DynkinComponent& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.rank < b.rank;
  }
};

/// Degrees of the Weyl group of an irreducible type.
inline std::vector<int> degrees(Family f, int r) {
  std::vector<int> d;
  switch (f) {
    case Family::A:
      for (int i = 2; i <= r + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= r; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i <= r - 1; ++i) d.push_back(2 * i);
      d.push_back(r);
      break;
    case Family::E:
      if (r == 6) d = {2, 5, 6, 8, 9, 12};
      else if (r == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else if (r == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      else throw UnsupportedRank("E" + std::to_string(r));
      break;
    case Family::F:
      if (r != 4) throw UnsupportedRank("F" + std::to_string(r));
      d = {2, 6, 8, 12};
      break;
    case Family::G:
      if (r != 2) throw UnsupportedRank("G" + std::to_string(r));
      d = {2, 6};
      break;
  }
  return d;
}

/// Classifies the Dynkin diagram of a list of linearly independent roots whose pairwise
/// differences are not roots (a simple system). Components are returned sorted by type.
inline std::vector<DynkinComponent> classify(const std::vector<RatVec>& simple) {
  std::size_t n = simple.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational c = Rational(2) * dot(simple[i], simple[j]) / dot(simple[i], simple[i]);
      if (!is_integer(c)) throw DomainError("not a crystallographic system");
      a[i][j] = static_cast<int>(to_ll(c.get_num()));
    }
  std::vector<int> comp(n, -1);
  std::vector<DynkinComponent> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    DynkinComponent c;
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      c.nodes.push_back(static_cast<int>(v));
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && a[v][w] != 0 && comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(c.nodes.begin(), c.nodes.end());
    int m = static_cast<int>(c.nodes.size());
    c.rank = m;
    auto bonds = [&](int x, int y) { return a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] * a[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]; };
    auto len2 = [&](int x) { return dot(simple[static_cast<std::size_t>(x)], simple[static_cast<std::size_t>(x)]); };
    int maxbond = 0;
    std::pair<int, int> multi{-1, -1};
    std::map<int, int> degree;
    for (int x : c.nodes)
      for (int y : c.nodes)
        if (x < y && bonds(x, y)) {
          ++degree[x];
          ++degree[y];
          if (bonds(x, y) > maxbond) {
            maxbond = bonds(x, y);
            if (bonds(x, y) > 1) multi = {x, y};
          }
        }
    if (m == 1) {
      c.family = Family::A;
    } else if (maxbond == 3) {
      c.family = Family::G;
    } else if (maxbond == 2) {
      if (m == 2) {
        c.family = Family::B;
      } else if (degree[multi.first] == 2 && degree[multi.second] == 2) {
        c.family = Family::F;
      } else {
        int terminal = degree[multi.first] == 1 ? multi.first : multi.second;
        int other = terminal == multi.first ? multi.second : multi.first;
        c.family = len2(terminal) < len2(other) ? Family::B : Family::C;
      }
    } else {
      int branch = -1;
      for (int x : c.nodes)
        if (degree[x] >= 3) branch = x;
      if (branch < 0) {
        c.family = Family::A;
      } else {
        std::vector<int> arms;
        for (int y : c.nodes) {
          if (y == branch || !bonds(branch, y)) continue;
          int len = 1, prev = branch, cur = y;
          while (true) {
            int next = -1;
            for (int z : c.nodes)
              if (z != prev && z != cur && bonds(cur, z)) next = z;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms.size() != 3) throw DomainError("unrecognized Dynkin diagram");
        if (arms[0] == 1 && arms[1] == 1) c.family = Family::D;
        else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) c.family = Family::E;
        else throw DomainError("unrecognized Dynkin diagram");
      }
    }
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end());
  return out;
}

/// "A1^2xA2"; the empty diagram is "empty".
inline std::string type_label(const std::vector<DynkinComponent>& cs) {
  if (cs.empty()) return "empty";
  std::string s;
  for (std::size_t i = 0; i < cs.size();) {
    std::size_t j = i;
    while (j < cs.size() && cs[j].label() == cs[i].label()) ++j;
    if (!s.empty()) s += "x";
    s += cs[i].label();
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

/// Parses "A1^2xA2", "A1xA1xA2", "D5" into a sorted multiset of (family, rank).
inline std::vector<std::pair<Family, int>> parse_type_label(const std::string& text) {
  std::vector<std::pair<Family, int>> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    int mult = 1;
    auto caret = cur.find('^');
    std::string base = cur;
    if (caret != std::string::npos) {
      base = cur.substr(0, caret);
      mult = std::stoi(cur.substr(caret + 1));
    }
    if (base.size() < 2) throw ParseError("bad type label '" + text + "'");
    Family f = family_from_letter(static_cast<char>(std::toupper(static_cast<unsigned char>(base[0]))));
    int r = std::stoi(base.substr(1));
    for (int i = 0; i < mult; ++i) out.emplace_back(f, r);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == 'x' || ch == '*' || ch == ' ')
      flush();
    else
      cur += ch;
  }
  flush();
  // C2 and B2 are the same diagram.
  for (auto& [f, r] : out)
    if (f == Family::C && r == 2) f = Family::B;
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<DynkinComponent> classify_subset(const RootSystemData& d, const std::vector<int>& I) {
  std::vector<RatVec> s;
  for (int i : I) s.push_back(d.simple_roots[static_cast<std::size_t>(i)]);
  auto cs = classify(s);
  for (auto& c : cs)
    for (auto& v : c.nodes) v = I[static_cast<std::size_t>(v)];
  return cs;
}

/// Simple system of the root subsystem given by positive-root indices: its indecomposable members.
inline std::vector<RatVec> indecomposable_roots(const RootSystemData& d, const std::vector<std::size_t>& roots) {
  std::vector<RatVec> out;
  for (std::size_t a : roots) {
    bool decomposable = false;
    for (std::size_t b : roots) {
      if (b == a) continue;
      IntCoords diff = d.root_coeffs[a];
      bool nonneg = true;
      for (std::size_t i = 0; i < diff.size(); ++i) {
        diff[i] -= d.root_coeffs[b][i];
        if (diff[i] < 0) nonneg = false;
      }
      if (!nonneg) continue;
      auto c = d.find_by_root(diff);
      if (c && std::find(roots.begin(), roots.end(), *c) != roots.end()) decomposable = true;
    }
    if (!decomposable) out.push_back(d.positive_roots[a]);
  }
  return out;
}

/// The first I (by bitmask order) whose Dynkin type matches `label`.
inline std::vector<int> find_subset_of_type(const RootSystemData& d, const std::string& label) {
  auto want = parse_type_label(label);
  for (unsigned mask = 0; mask < (1u << d.rank); ++mask) {
    std::vector<int> I;
    for (int i = 0; i < d.rank; ++i)
      if (mask & (1u << i)) I.push_back(i);
    std::vector<std::pair<Family, int>> got;
    for (const auto& c : classify_subset(d, I)) got.emplace_back(c.family == Family::C && c.rank == 2 ? Family::B : c.family, c.rank);
    std::sort(got.begin(), got.end());
    if (got == want) return I;
  }
  throw DomainError("no parabolic subsystem of type " + label + " in " + d.name());
}

inline std::vector<int> degrees_of(const std::vector<DynkinComponent>& cs) {
  std::vector<int> out;
  for (const auto& c : cs) {
    auto d = degrees(c.family, c.rank);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

}  // namespace weylzeta
