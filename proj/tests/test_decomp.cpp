#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "qfock/decomp.hpp"

using namespace qfock;

namespace {

// All n-strict non-increasing sequences of length N with entries in [lo, hi].
std::vector<std::vector<int>> brute_sequences(int N, int lo, int hi, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> c;
  std::function<void(int)> rec = [&](int top) {
    if (static_cast<int>(c.size()) == N) {
      for (std::size_t i = 0; i + n < c.size(); ++i)
        if (c[i] == c[i + n]) return;
      out.push_back(c);
      return;
    }
    for (int v = top; v >= lo; --v) {
      c.push_back(v);
      rec(v);
      c.pop_back();
    }
  };
  rec(hi);
  return out;
}

std::vector<BorderStrip> sl2_strips(int N) {
  std::vector<BorderStrip> out;
  BorderStrip c;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(c);
      return;
    }
    for (int m = 1; m <= std::min(2, left); ++m) {
      c.push_back(m);
      rec(left - m);
      c.pop_back();
    }
  };
  rec(N);
  return out;
}

}  // namespace

TEST_CASE("tilde M sets against a brute-force filter") {
  CHECK(tilde_M_set(2, 0, 0) == std::vector<std::vector<int>>{{}});
  for (int n = 2; n <= 3; ++n)
    for (int s = 0; s < n; ++s)
      for (int k = 0; k <= 2; ++k) {
        const int N = s + n * k;
        if (N == 0) continue;
        std::vector<int> m0 = vacuum_exponents(s, N, n);
        long target = -k;
        for (int x : m0) target += x;
        std::vector<std::vector<int>> want;
        for (const auto& l : brute_sequences(N, m0.back() - N - k, m0.back(), n)) {
          long sum = 0;
          bool steps = true;
          for (std::size_t i = 0; i < l.size(); ++i) {
            sum += l[i];
            if (i > 0 && l[i - 1] - l[i] > 1) steps = false;
          }
          if (steps && sum == target) want.push_back(l);
        }
        std::sort(want.begin(), want.end());
        INFO(n << " " << s << " " << k);
        CHECK(tilde_M_set(n, s, k) == want);
      }
  CHECK(tilde_M_set(2, 0, 1) == std::vector<std::vector<int>>{{1, 0}});
}

TEST_CASE("Heisenberg quotient") {
  CHECK(quotient_basis(2, 0, 0).dim() == 1);
  CHECK(quotient_basis(2, 0, 0).basis == std::vector<Word>{{}});
  auto q = quotient_basis(2, 0, 1);
  CHECK(q.dim() == 3);
  CHECK(q.fock_basis.size() == 4);
  // the projection kills the ideal and fixes quotient basis words
  WedgeVec b = heisenberg_B(-1, WedgeVec{{Word{}, RingElem(1)}}, 0, 2);
  CHECK(q.project(b).is_zero());
  for (std::size_t i = 0; i < q.basis.size(); ++i)
    CHECK(q.project(WedgeVec{{q.basis[i], RingElem(1)}}) == SparseVec::unit(static_cast<int>(i)));
  // U0 at p = 1 preserves the ideal
  auto u0 = ActionContext::u0_fock(2, 0, PMode::one);
  for (int i = 0; i <= 1; ++i)
    for (GenKind g : {GenKind::E, GenKind::F}) CHECK(q.project(act({g, i}, u0, b)).is_zero());
}

TEST_CASE("psi_k at desk scale") {
  for (auto [n, M, k] : std::vector<std::tuple<int, int, int>>{{2, 0, 0}, {2, 0, 1}, {2, 0, 2}, {2, 1, 1}, {3, 0, 0},
                                                                {3, 0, 1}, {3, 1, 1}}) {
    DecompReport r = psi_k_check(n, M, k);
    INFO(n << " " << M << " " << k);
    for (const auto& d : r.details) INFO(d);
    CHECK(r.match());
    int dims = 0;
    for (const auto& e : r.entries) {
      dims += e.dim;
      CHECK(e.grade == k);
      CHECK(e.dim == static_cast<int>(enumerate_sst(strip_to_skew(e.kernel_strip), n).size()));
      CHECK(e.character == skew_schur(strip_to_skew(e.kernel_strip), n));
    }
    CHECK(dims == r.quotient_dim);
  }
  DecompReport r = psi_k_check(3, 0, 1);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].kernel_strip == BorderStrip{2, 1});
  CHECK(r.entries[0].theta == BorderStrip{1, 2});
}

TEST_CASE("character identity") {
  CHECK(character_identity_check(2, 0, 0).match);
  for (auto [n, kh, c] : std::vector<std::tuple<int, int, int>>{{2, 0, 3}, {2, 1, 3}, {3, 0, 2}, {3, 1, 2}}) {
    auto r = character_identity_check(n, kh, c);
    INFO(n << " " << kh);
    CHECK(r.match);
    CHECK(r.offset == 0);
  }
  CHECK(relative_weight({}, 1, 2) == std::vector<int>{1, 0});
}

TEST_CASE("sl2 factorization") {
  CHECK(sl2_factorize({2}).empty());
  CHECK(sl2_factorize({1, 1}) == std::vector<Sl2Factor>{{2, 1}});
  CHECK(sl2_factorize({2, 1}) == std::vector<Sl2Factor>{{1, 4}});
  CHECK(sl2_factorize({1, 2, 1}) == std::vector<Sl2Factor>{{1, 0}, {1, 6}});
  CHECK_THROWS_AS(sl2_factorize({3}), NotSl2Strip);
  for (int N = 1; N <= 4; ++N)
    for (const auto& th : sl2_strips(N)) {
      INFO(strip_to_string(th));
      auto f = sl2_factorize(th);
      Subspace im = image_basis(strip_product(decomposition_labels(th), StripVariant::R, 2));
      CHECK(sl2_dim(f) == im.dim());
      CHECK(sl2_dim(f) == static_cast<int>(enumerate_sst(strip_to_skew(th), 2).size()));
      CHECK(sl2_character(f) == reduce_weights(subspace_character(im, 2, N)));
      if (N <= 3) {
        auto r = sl2_intertwiner(th);
        CHECK(r.kernel_dim == 1);
        CHECK(r.invertible);
      }
    }
  // the literal b = 2 l + n - 3 misses <2,1>
  CHECK_FALSE(sl2_intertwiner({2, 1}, {{1, 2}}).invertible);
}

TEST_CASE("evaluation modules satisfy the sl2 relations") {
  std::vector<Sl2Factor> f{{2, 1}, {1, 4}};
  const int d = sl2_dim(f);
  LinearOp id = LinearOp::identity(d);
  RingElem q = RingElem::q();
  for (int i = 0; i <= 1; ++i) {
    LinearOp E = sl2_generator({GenKind::E, i}, f), F = sl2_generator({GenKind::F, i}, f);
    LinearOp K = sl2_generator({GenKind::K, i}, f), Ki = sl2_generator({GenKind::Kinv, i}, f);
    CHECK(K * Ki == id);
    CHECK(K * E * Ki == E.scaled(q * q));
    CHECK(E * F - F * E == (K - Ki).scaled((q - q.inv()).inv()));
  }
  LinearOp c = sl2_generator({GenKind::K, 0}, f) * sl2_generator({GenKind::K, 1}, f);
  CHECK(c == id);
}
