#include <gtest/gtest.h>

#include <set>

#include "weylzeta/weyl.hpp"

using namespace weylzeta;

namespace {

// Independent oracle: closure of the simple reflections acting on ambient vectors.
std::size_t closure_size(const RootSystemData& d) {
  std::set<std::vector<std::string>> seen;
  std::vector<std::vector<RatVec>> queue;
  auto key = [](const std::vector<RatVec>& imgs) {
    std::vector<std::string> k;
    for (auto& v : imgs)
      for (auto& x : v) k.push_back(x.get_str());
    return k;
  };
  std::vector<RatVec> start = d.simple_roots;
  seen.insert(key(start));
  queue.push_back(start);
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& a : d.simple_roots) {
      std::vector<RatVec> next;
      Rational aa = dot(a, a);
      for (const auto& v : queue[h]) {
        RatVec w = v;
        Rational c = Rational(2) * dot(v, a) / aa;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * a[i];
        next.push_back(w);
      }
      if (seen.insert(key(next)).second) queue.push_back(next);
    }
  return queue.size();
}

}  // namespace

TEST(Weyl, Orders) {
  EXPECT_EQ(WeylGroup(parse_root_system("A2")).size(), 6u);
  EXPECT_EQ(WeylGroup(parse_root_system("G2")).size(), closure_size(parse_root_system("G2")));
  EXPECT_EQ(WeylGroup(parse_root_system("G2")).size(), 12u);
  EXPECT_EQ(WeylGroup(parse_root_system("C3")).size(), 48u);
  EXPECT_EQ(WeylGroup(parse_root_system("D4")).size(), closure_size(parse_root_system("D4")));
  EXPECT_EQ(WeylGroup(parse_root_system("A5")).size(), 720u);
}

TEST(Weyl, RejectsExceptionalEnumeration) {
  auto e6 = parse_root_system("E6");
  EXPECT_THROW(WeylGroup g(e6), UnsupportedRank);
}

TEST(Weyl, InversionSets) {
  auto d = parse_root_system("A2");
  WeylGroup g(d);
  EXPECT_TRUE(inversion_set(g[g.identity()]).empty());
  auto s1 = g.from_word({0});
  EXPECT_EQ(inversion_set(g[s1]), (std::vector<std::size_t>{0}));
}

TEST(Weyl, ArChainInversions) {
  auto d = parse_root_system("A4");
  WeylGroup g(d);
  for (int j = 1; j <= 4; ++j) {
    std::vector<int> w;
    for (int i = 0; i < j; ++i) w.push_back(i);
    auto e = g.from_word(w);
    std::set<std::size_t> want;
    for (int i = 1; i <= j; ++i) {
      IntCoords c(4, 0);
      for (int t = 0; t < i; ++t) c[static_cast<std::size_t>(t)] = 1;
      want.insert(*d.find_by_coroot(c));
    }
    auto got = inversion_set(g[e]);
    EXPECT_EQ(std::set<std::size_t>(got.begin(), got.end()), want);
  }
}

TEST(Weyl, LengthEqualsInversionCountAndOrthogonal) {
  for (auto s : {"B3", "G2", "A4"}) {
    auto d = parse_root_system(s);
    WeylGroup g(d);
    for (const auto& w : g.elements()) {
      EXPECT_EQ(static_cast<std::size_t>(w.length()), w.inversions.size());
      auto mt = multiply(w.matrix, transpose(w.matrix));
      EXPECT_EQ(mt, identity_matrix(mt.size()));
    }
  }
}

TEST(Weyl, WordFormat) {
  auto d = parse_root_system("A2");
  WeylGroup g(d);
  EXPECT_EQ(g[g.size() - 1].word_string(), "s1 s2 s1");
  EXPECT_EQ(g[0].word_string(), "id");
}

TEST(Cosets, A2I2) {
  auto d = parse_root_system("A2");
  WeylGroup g(d);
  auto c = min_coset_reps(g, {1});
  ASSERT_EQ(c.W_upper.size(), 3u);
  std::set<std::string> words;
  for (auto w : c.W_upper) words.insert(g[w].word_string());
  EXPECT_EQ(words, (std::set<std::string>{"id", "s1", "s1 s2"}));
}

TEST(Cosets, ArChain) {
  auto d = parse_root_system("A4");
  WeylGroup g(d);
  auto c = min_coset_reps(g, {1, 2, 3});
  std::set<std::size_t> want;
  for (int j = 0; j <= 4; ++j) {
    std::vector<int> w;
    for (int i = 0; i < j; ++i) w.push_back(i);
    want.insert(g.from_word(w));
  }
  EXPECT_EQ(std::set<std::size_t>(c.W_upper.begin(), c.W_upper.end()), want);
}

TEST(Cosets, Extremes) {
  auto d = parse_root_system("B3");
  WeylGroup g(d);
  EXPECT_EQ(min_coset_reps(g, {}).W_upper.size(), g.size());
  auto full = min_coset_reps(g, {0, 1, 2});
  EXPECT_EQ(full.W_upper, (std::vector<std::size_t>{g.identity()}));
}

TEST(Cosets, DecomposeBijection) {
  for (auto s : {"A3", "B3", "G2"}) {
    auto d = parse_root_system(s);
    WeylGroup g(d);
    for (unsigned mask = 0; mask < (1u << d.rank); ++mask) {
      std::vector<int> I;
      for (int i = 0; i < d.rank; ++i)
        if (mask & (1u << i)) I.push_back(i);
      auto c = min_coset_reps(g, I);
      EXPECT_EQ(c.W_I.size() * c.W_upper.size(), g.size());
      std::set<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t w = 0; w < g.size(); ++w) {
        auto [x, y] = decompose(g, w, c);
        EXPECT_EQ(g.multiply(x, y), w);
        EXPECT_EQ(g[w].length(), g[x].length() + g[y].length());
        pairs.insert({x, y});
        // Delta_{w^{-1}} = x Delta_{y^{-1}} disjoint-union Delta_{x^{-1}}.
        std::set<std::size_t> rhs(g[x].inversions.begin(), g[x].inversions.end());
        for (auto a : g[y].inversions) {
          auto [img, sign] = g.image(x, a);
          EXPECT_EQ(sign, 1);
          EXPECT_TRUE(rhs.insert(img).second);
        }
        EXPECT_EQ(rhs, std::set<std::size_t>(g[w].inversions.begin(), g[w].inversions.end()));
      }
      EXPECT_EQ(pairs.size(), g.size());
    }
  }
}

TEST(Cosets, DecomposeExample) {
  auto d = parse_root_system("A2");
  WeylGroup g(d);
  auto c = min_coset_reps(g, {1});
  auto [x, y] = decompose(g, g.from_word({1, 0}), c);
  EXPECT_EQ(g[x].word_string(), "s2");
  EXPECT_EQ(g[y].word_string(), "s1");
  auto [x0, y0] = decompose(g, g.identity(), c);
  EXPECT_EQ(x0, g.identity());
  EXPECT_EQ(y0, g.identity());
}

TEST(ActOnArgs, Identity) {
  auto d = parse_root_system("C3");
  WeylGroup g(d);
  std::vector<int> s{1, 2, 3, 4, 5, 6, 7, 8, 9};
  RatVec y = rat_vec({1, 2, 3});
  auto [s2, y2] = act_on_args(g, g.identity(), s, y);
  EXPECT_EQ(s2, s);
  EXPECT_EQ(y2, y);
}

TEST(ActOnArgs, A2Sigma1SwapsForms) {
  auto d = parse_root_system("A2");
  WeylGroup g(d);
  // canonical order (m1, m2, m1+m2) = (s12, s23, s13)
  std::vector<std::string> s{"s12", "s23", "s13"};
  auto [t, y] = act_on_args(g, g.from_word({0}), s, rat_vec({0, 0}));
  // in (s12, s13, s23) order the result is (s12, s23, s13)
  EXPECT_EQ(t[0], "s12");
  EXPECT_EQ(t[2], "s23");
  EXPECT_EQ(t[1], "s13");
}

TEST(ActOnArgs, ArYShift) {
  auto d = parse_root_system("A4");
  WeylGroup g(d);
  RatVec y = rat_vec({3, 5, 7, 11});
  std::vector<int> s(d.num_positive(), 0);
  for (int j = 0; j <= 4; ++j) {
    std::vector<int> w;
    for (int i = 0; i < j; ++i) w.push_back(i);
    auto [t, yy] = act_on_args(g, g.from_word(w), s, y);
    RatVec want(4);
    for (int i = 1; i <= 4; ++i)
      want[static_cast<std::size_t>(i - 1)] = i <= j ? (i < 4 ? y[static_cast<std::size_t>(i)] : Rational(0)) - y[0] : y[static_cast<std::size_t>(i - 1)];
    if (j == 4) want[3] = -y[0];
    EXPECT_EQ(yy, want) << j;
  }
}

TEST(ActOnArgs, InverseRoundTrip) {
  auto d = parse_root_system("B3");
  WeylGroup g(d);
  std::vector<int> s(d.num_positive());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<int>(i * 7 + 1);
  RatVec y = rat_vec({1, -2, 5});
  for (std::size_t w = 0; w < g.size(); ++w) {
    auto [s1, y1] = act_on_args(g, g.inverse(w), s, y);
    auto [s2, y2] = act_on_args(g, w, s1, y1);
    EXPECT_EQ(s2, s);
    EXPECT_EQ(y2, y);
  }
}
