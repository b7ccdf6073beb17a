#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "qfock/wedge.hpp"

using namespace qfock;

namespace {

RingElem Q() { return RingElem::q(); }

WedgeVec single(const Word& w, RingElem c = RingElem(1)) { return WedgeVec{{w, c}}; }

// All three-site tensors with exponents in [lo, hi], total degree D and the
// given colour multiset, together with the kernel operator matrix at site i.
struct Block3 {
  std::vector<Word> basis;
  LinearOp op;
};

Block3 block3(int n, int i, int D, std::vector<int> colours, int lo, int hi) {
  Block3 b;
  std::sort(colours.begin(), colours.end());
  do {
    for (int a = lo; a <= hi; ++a)
      for (int c = lo; c <= hi; ++c) {
        int e = D - a - c;
        if (e < lo || e > hi) continue;
        b.basis.push_back({index_of(a, colours[0], n), index_of(c, colours[1], n), index_of(e, colours[2], n)});
      }
  } while (std::next_permutation(colours.begin(), colours.end()));
  std::sort(b.basis.begin(), b.basis.end());
  std::vector<SparseVec> cols;
  for (const Word& w : b.basis) cols.push_back(coordinates(kernel_op(i, single(w), n), b.basis));
  b.op = LinearOp::from_columns(static_cast<int>(b.basis.size()), cols);
  return b;
}

bool same_rule(const PairRule& a, const PairRule& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].a != b[i].a || a[i].b != b[i].b || a[i].c != b[i].c) return false;
  return true;
}

PairRule shifted(const PairRule& r, int t) {
  PairRule out;
  for (const auto& x : r) out.push_back({x.a + t, x.b + t, x.c});
  return out;
}

}  // namespace

TEST_CASE("index bijection") {
  for (int n = 2; n <= 4; ++n)
    for (int k = -12; k <= 12; ++k) {
      int e = color_of(k, n), m = zpow_of(k, n);
      CHECK(e >= 1);
      CHECK(e <= n);
      CHECK(index_of(m, e, n) == k);
    }
  CHECK(zpow_of(0, 2) == 1);
  CHECK(color_of(0, 2) == 2);
  CHECK(zpow_of(1, 2) == 0);
}

TEST_CASE("S satisfies the Hecke relation and S S^{-1} = 1") {
  for (int n = 2; n <= 3; ++n)
    for (const Word& w : std::vector<Word>{{1, 2}, {2, 1}, {3, -1}, {0, 0}}) {
      WedgeVec v = single(w);
      WedgeVec s = tensor_S(1, v, n), ss = tensor_S(1, s, n);
      WedgeVec rel = ss;
      add_to(rel, s, RingElem(1) - Q() * Q());
      add_to(rel, v, -(Q() * Q()));
      CHECK(rel.empty());
      CHECK(tensor_S(1, s, n, true) == v);
    }
}

TEST_CASE("pair rules: diagonal, same colour, window and translation") {
  for (int n = 2; n <= 3; ++n) {
    for (int k = -3; k <= 3; ++k) {
      CHECK(straighten(Word{k, k}, n).empty());
      WedgeVec anti = straighten(Word{k, k + n}, n);
      CHECK(anti == single({k + n, k}, RingElem(-1)));
      for (int d = 1; d <= 2 * n + 1; ++d) {
        PairRule r0 = derive_pair_rule(n, k, k + d, 0);
        CHECK(same_rule(r0, derive_pair_rule(n, k, k + d, 1)));
        CHECK(same_rule(shifted(r0, n), derive_pair_rule(n, k + n, k + n + d, 0)));
        CHECK(same_rule(shifted(r0, 1), derive_pair_rule(n, k + 1, k + 1 + d, 0)));
        for (const auto& t : r0) {
          CHECK(t.a > t.b);
          CHECK(t.a <= k + d);
          CHECK(t.b >= k);
        }
      }
    }
  }
}

TEST_CASE("normally ordered wedges are fixed points") {
  CHECK(straighten(Word{5, 3, 2, -1}, 2) == single({5, 3, 2, -1}));
  CHECK(straighten(Word{}, 3) == single({}));
}

TEST_CASE("kernel vectors map to zero, N = 2 and 3") {
  for (int n = 2; n <= 3; ++n) {
    for (int i = 1; i <= 2; ++i)
      for (auto colours : std::vector<std::vector<int>>{{1, 1, 2}, {1, 2, 2}, {1, 2, n}, {2, 2, 2}}) {
        Block3 b = block3(n, i, 1, colours, -1, 2);
        Subspace ker = kernel_basis(b.op);
        CHECK(ker.dim() > 0);
        for (const auto& v : ker.basis) CHECK(straighten(from_coordinates(v, b.basis), n).empty());
      }
  }
}

TEST_CASE("straightening is independent of the reduction order") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-3, 4);
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 30; ++trial) {
      Word w{d(rng), d(rng), d(rng)};
      WedgeVec ref = straighten(w, n);
      CHECK(straighten_random_order(w, n, rng) == ref);
      for (const auto& [x, c] : ref) {
        CHECK(is_normally_ordered(x));
        CHECK(wedge_degree(x, 0, n) == wedge_degree(w, 0, n));
      }
    }
}

TEST_CASE("Fock components and finite wedge spaces") {
  CHECK(fock_component_basis(0, 0, 2) == std::vector<Word>{{}});
  CHECK(fock_component_basis(0, 1, 2).size() == 4);
  // brute force over short strictly decreasing heads
  for (int n = 2; n <= 3; ++n)
    for (int M = -1; M <= 1; ++M)
      for (int k = 0; k <= 2; ++k) {
        std::vector<Word> brute;
        Word h;
        int L = n * (k + 1);
        std::function<void(int)> rec = [&](int hi) {
          if (fock_canonical(h, M) == h && wedge_degree(h, M, n) == k) brute.push_back(h);
          if (static_cast<int>(h.size()) == L) return;
          int pos = static_cast<int>(h.size()) + 1;
          for (int v = hi; v >= vacuum_index(M, pos); --v) {
            h.push_back(v);
            rec(v - 1);
            h.pop_back();
          }
        };
        rec(M + n * (k + 1));
        std::sort(brute.begin(), brute.end());
        CHECK(fock_component_basis(M, k, n) == brute);
        for (int l = k; l <= k + 1; ++l) {
          auto fin = wedge_space_basis(M, l, k, n);
          CHECK(fin.size() == brute.size());
          for (const Word& w : fin) {
            CHECK(is_normally_ordered(w));
            for (std::size_t i = 0; i + n < w.size(); ++i) CHECK(zpow_of(w[i], n) != zpow_of(w[i + n], n));
          }
        }
      }
  CHECK(wedge_space_basis(0, 1, 0, 2) == std::vector<Word>{{0, -1}});
}

TEST_CASE("rho bar") {
  int n = 2, M = 0;
  for (int k = 0; k <= 2; ++k) {
    auto fock = fock_component_basis(M, k, n);
    for (int l = k; l <= k + 1; ++l) {
      std::vector<Word> img;
      for (const Word& w : wedge_space_basis(M, l, k, n)) {
        WedgeVec r = rho_bar(single(w), M, l, n);
        REQUIRE(r.size() == 1);
        img.push_back(r.begin()->first);
        CHECK(wedge_degree(r.begin()->first, M, n) == k);
        CHECK(rho_bar_inv(r, M, l, n) == single(w));
        WedgeVec two = rho_bar_lm(rho_bar_lm(single(w), M, l, l + 1, n), M, l + 1, l + 2, n);
        CHECK(two == rho_bar_lm(single(w), M, l, l + 2, n));
        CHECK(rho_bar(two, M, l + 2, n) == r);
      }
      std::sort(img.begin(), img.end());
      CHECK(img == fock);
    }
  }
  CHECK_THROWS_AS(rho_bar_inv(single({5, 3, 2, 1, 0}), 0, 1, 2), TailMismatch);
}

TEST_CASE("Heisenberg action") {
  for (int n = 2; n <= 3; ++n)
    for (int M = 0; M <= 1; ++M) {
      WedgeVec vac = single({});
      for (int a = 1; a <= 2; ++a) CHECK(heisenberg_B(a, vac, M, n).empty());
      WedgeVec comm = heisenberg_B(1, heisenberg_B(-1, vac, M, n), M, n);
      CHECK(comm == single({}, (RingElem(1) - Q().pow(2 * n)) / (RingElem(1) - Q().pow(2))));
      for (const auto& [h, c] : heisenberg_B(-2, vac, M, n)) CHECK(wedge_degree(h, M, n) == 2);
    }
  CHECK(heisenberg_ideal_basis(0, 0, 2).dim() == 0);
  CHECK(heisenberg_ideal_basis(0, 1, 2).dim() == 1);
}
