#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "qfock/tableaux.hpp"

using namespace qfock;

namespace {

// Every filling of the boxes with 1..n, filtered by the tableau rules.
long brute_sst_count(const SkewDiagram& d, int n) {
  auto b = d.boxes();
  std::vector<int> f(b.size(), 1);
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == b.size()) {
      for (std::size_t u = 0; u < b.size(); ++u)
        for (std::size_t v = 0; v < b.size(); ++v) {
          if (b[v].x == b[u].x && b[v].y == b[u].y + 1 && f[v] <= f[u]) return;
          if (b[v].y == b[u].y && b[v].x == b[u].x + 1 && f[v] < f[u]) return;
        }
      ++count;
      return;
    }
    for (int v = 1; v <= n; ++v) {
      f[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace

TEST_CASE("strip shapes") {
  SkewDiagram d = strip_to_skew({2, 1, 3});
  CHECK(d.degree() == 6);
  CHECK(d.lambda == std::vector<int>{3, 3, 1, 1});
  CHECK(d.mu == std::vector<int>{2});
  auto b = d.boxes();
  CHECK(is_connected(b));
  CHECK_FALSE(has_2x2_block(b));
  SkewDiagram one = strip_to_skew({1});
  CHECK(one.lambda == std::vector<int>{1});
  CHECK(one.mu.empty());
  SkewDiagram sq = strip_to_skew({2, 2});
  CHECK(sq.degree() == 4);
  CHECK_FALSE(has_2x2_block(sq.boxes()));
  CHECK(has_2x2_block({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
}

TEST_CASE("semi-standard tableaux") {
  CHECK(enumerate_sst(strip_to_skew({2}), 2).size() == 1);
  CHECK(enumerate_sst(strip_to_skew({1, 1}), 2).size() == 3);
  CHECK(skew_schur(strip_to_skew({3}), 2).empty());
  CharPoly s11 = skew_schur(strip_to_skew({1, 1}), 2);
  CHECK(s11 == CharPoly{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  CharPoly row = skew_schur(strip_to_skew({1, 1, 1, 1}), 2);
  CHECK(row.size() == 5);
  for (const BorderStrip& th : std::vector<BorderStrip>{{2, 1, 3}, {1, 2}, {2, 2}, {1, 1, 2}, {3, 1}}) {
    for (int n : {2, 3, 4}) {
      SkewDiagram d = strip_to_skew(th);
      long total = 0;
      CharPoly c = skew_schur(d, n);
      for (const auto& [e, m] : c) total += m;
      CHECK(total == brute_sst_count(d, n));
      // symmetry under z1 <-> z2
      CharPoly sw;
      for (const auto& [e, m] : c) {
        auto f = e;
        std::swap(f[0], f[1]);
        sw[f] = m;
      }
      CHECK(sw == c);
    }
  }
}

TEST_CASE("t statistic") {
  CHECK(t_statistic({2, 1, 3}) == 5);
  CHECK(t_statistic({4}) == 0);
  CHECK(t_statistic({1, 1}) == 1);
}

TEST_CASE("border strip enumeration against brute force") {
  for (int n : {2, 3}) {
    for (int k = 0; k < n; ++k) {
      int bound = 3;
      std::set<BorderStrip> oracle;
      // sequences of length <= 8 with entries 1..n, trailing n's stripped
      std::vector<int> seq;
      std::function<void()> rec = [&] {
        BorderStrip th = seq;
        while (!th.empty() && th.back() == n) th.pop_back();
        int s = strip_size(th);
        if (((s - k) % n + n) % n == 0 && strip_grade(th, n, k) <= bound) oracle.insert(th);
        if (seq.size() == 8) return;
        for (int h = 1; h <= n; ++h) {
          seq.push_back(h);
          rec();
          seq.pop_back();
        }
      };
      rec();
      auto got = border_strips(n, k, bound);
      std::set<BorderStrip> gs(got.begin(), got.end());
      CHECK(gs.size() == got.size());
      CHECK(gs == oracle);
    }
  }
  auto z = border_strips(2, 0, 0);
  CHECK(std::find(z.begin(), z.end(), BorderStrip{}) != z.end());
  auto o = border_strips(2, 1, 0);
  CHECK(std::find(o.begin(), o.end(), BorderStrip{1}) != o.end());
}

TEST_CASE("padding leaves the grade unchanged") {
  for (const BorderStrip& th : std::vector<BorderStrip>{{1}, {1, 1}, {2, 1}, {1, 2, 1}}) {
    int n = 2, k = strip_size(th) % n;
    BorderStrip padded = th;
    for (int l = 0; l < 3; ++l) {
      CHECK(strip_grade(padded, n, k) == strip_grade(th, n, k));
      padded.push_back(n);
    }
  }
}

TEST_CASE("level-one characters") {
  GradedChar c0 = char_level1(2, 0, 0);
  CHECK(c0.size() == 1);
  CHECK(c0[0] == CharPoly{{{0, 0}, 1}});
  GradedChar c1 = char_level1(2, 1, 0);
  CHECK(c1[0] == CharPoly{{{1, 0}, 1}, {{0, 1}, 1}});
  // Oracle: V(Λ0) of sl2-hat is the root lattice times one free boson, so
  // its grade-d dimension is the sum over m of p(d - m^2).
  GradedChar c = char_level1(2, 0, 5);
  auto partitions = [](int d) {
    std::vector<long> p(static_cast<std::size_t>(d) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= d; ++part)
      for (int s = part; s <= d; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
    return p[static_cast<std::size_t>(d)];
  };
  for (int g = 0; g <= 5; ++g) {
    long d = 0;
    for (const auto& [e, m] : c[g]) d += m;
    long expect = 0;
    for (int m = -3; m <= 3; ++m)
      if (m * m <= g) expect += partitions(g - m * m);
    CHECK(d == expect);
  }
}

TEST_CASE("strip parsing") {
  CHECK(parse_strip("2,1,3") == BorderStrip{2, 1, 3});
  CHECK(strip_to_string({2, 1, 3}) == "<2,1,3>");
  CHECK_THROWS(parse_strip("2,x"));
}
