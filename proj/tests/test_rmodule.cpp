#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "qfock/qaffine.hpp"
#include "qfock/rmodule.hpp"

using namespace qfock;

namespace {

RingElem Q() { return RingElem::q(); }

std::vector<BorderStrip> compositions(int N) {
  std::vector<BorderStrip> out;
  BorderStrip c;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(c);
      return;
    }
    for (int m = 1; m <= left; ++m) {
      c.push_back(m);
      rec(left - m);
      c.pop_back();
    }
  };
  rec(N);
  return out;
}

LinearOp dense_product(const std::vector<Factor>& f, int n, int N) {
  LinearOp acc = LinearOp::identity(tensor_dim(n, N));
  for (const auto& x : f) {
    RingElem s = Q().pow(x.e);
    acc = acc * (x.check ? Rcheck_op(x.a, x.b, s, n, N) : R_op(x.a, x.b, s, n, N));
  }
  return acc;
}

int sst_count(const BorderStrip& th, int n) {
  return static_cast<int>(enumerate_sst(strip_to_skew(th), n).size());
}

}  // namespace

TEST_CASE("content labels") {
  CHECK(content_labels({2, 1, 3}, 0) == ContentLabels{2, 4, 6, 0, -4, -2});
  CHECK(content_labels({1}, 5) == ContentLabels{5});
  CHECK(decomposition_labels({1, 1}) == ContentLabels{2, 0});
  // box l of column j (counted from the right) carries 2(l - 1 + m_1 + ... + m_{j-1})
  for (int N = 1; N <= 5; ++N)
    for (const auto& th : compositions(N)) {
      ContentLabels want;
      const int r = static_cast<int>(th.size());
      for (int j = r; j >= 1; --j) {
        int before = 0;
        for (int i = 1; i < j; ++i) before += th[static_cast<std::size_t>(i - 1)];
        for (int l = 1; l <= th[static_cast<std::size_t>(j - 1)]; ++l) want.push_back(2 * (l - 1 + before));
      }
      CHECK(decomposition_labels(th) == want);
    }
}

TEST_CASE("basis order matches colour words") {
  auto w = colour_words(3, 3);
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(colour_word_index(w[i], 3) == static_cast<int>(i));
}

TEST_CASE("S has spectrum {q, -q^-1} and the image/kernel identity") {
  for (SNorm norm : {SNorm::minus_q_hecke_inv, SNorm::q_inv_hecke})
    for (int n = 2; n <= 3; ++n) {
      const int N = 2, d = tensor_dim(n, N);
      LinearOp S = S_op(1, 2, n, N, false, norm), Si = S_op(1, 2, n, N, true, norm);
      LinearOp id = LinearOp::identity(d);
      CHECK(S * Si == id);
      CHECK(((S - id.scaled(Q())) * (S + id.scaled(Q().inv()))).is_zero());
      Subspace im = image_basis(Si.scaled(Q() * Q()) - S);
      Subspace ker = kernel_basis(Si.scaled(Q().pow(-2)) - S);
      CHECK(subspace_equal(im, ker));
    }
  // same-colour pairs sit in the -q^-1 eigenspace under the default
  LinearOp S = S_op(1, 2, 2, 2);
  SparseVec v = SparseVec::unit(colour_word_index({2, 2}, 2));
  CHECK(S.apply(v) == v.scaled(-Q().inv()));
}

TEST_CASE("ordered products follow the stated factor order") {
  ContentLabels a{0, 2, 6};
  auto R = strip_factors(a, StripVariant::R);
  REQUIRE(R.size() == 3);
  CHECK((R[0].a == 2 && R[0].b == 3 && R[0].e == -4));
  CHECK((R[1].a == 1 && R[1].b == 3 && R[1].e == -6));
  CHECK((R[2].a == 1 && R[2].b == 2 && R[2].e == -2));
  auto Rb = strip_factors(a, StripVariant::Rbar);
  CHECK((Rb[0].a == 3 && Rb[0].b == 2 && Rb[2].a == 2 && Rb[2].b == 1));
  auto Rc = strip_factors(a, StripVariant::Rcheck);
  CHECK((Rc[0].a == 2 && Rc[0].b == 3 && Rc[0].e == -4 && Rc[0].check));
  CHECK((Rc[1].a == 1 && Rc[1].b == 2 && Rc[1].e == -6));
  CHECK((Rc[2].a == 2 && Rc[2].b == 3 && Rc[2].e == -2));
  for (int n = 2; n <= 3; ++n)
    for (auto v : {StripVariant::R, StripVariant::Rbar, StripVariant::Rcheck}) {
      auto f = strip_factors(a, v);
      CHECK(factor_product(f, n, 3) == dense_product(f, n, 3));
      // hand expansion of the three factors
      LinearOp hand = dense_product({f[0]}, n, 3) * dense_product({f[1]}, n, 3) * dense_product({f[2]}, n, 3);
      CHECK(strip_product(a, v, n) == hand);
    }
  CHECK(strip_product(BorderStrip{1}, 0, StripVariant::R, 2) == LinearOp::identity(2));
  CHECK(R_op(1, 2, Q(), 2, 2) == Rcheck_op(1, 2, Q(), 2, 2) * P_op(1, 2, 2, 2));
}

TEST_CASE("singular spectral points are rejected") {
  CHECK_THROWS_AS(R_op(1, 2, RingElem(1), 2, 2), SingularSpectralPoint);
  CHECK_THROWS_AS(strip_factors({0, 0}, StripVariant::R), SingularSpectralPoint);
}

TEST_CASE("unitarity") {
  for (int n = 2; n <= 3; ++n) {
    std::vector<RingElem> xs{RingElem::p(), RingElem::p() * Q(), Q().pow(3), Q().pow(-2)};
    for (const RingElem& x : xs) {
      RingElem xi = x.inv();
      RingElem f = (x - Q() * Q()) * (xi * Q().pow(-2) - RingElem(1)) / ((x - RingElem(1)) * (xi - RingElem(1)));
      LinearOp lhs = R_op(2, 1, x, n, 2) * R_op(1, 2, xi, n, 2);
      CHECK(lhs == LinearOp::identity(tensor_dim(n, 2)).scaled(f));
    }
  }
}

TEST_CASE("Yang-Baxter equation") {
  for (int n = 2; n <= 3; ++n) {
    RingElem x = RingElem::p();
    std::vector<RingElem> ys{Q(), Q().pow(-2), Q().pow(3), RingElem::p(), RingElem::p().inv() * Q().pow(2)};
    for (const RingElem& y : ys) {
      LinearOp lhs = R_op(1, 2, x, n, 3) * R_op(1, 3, x * y, n, 3) * R_op(2, 3, y, n, 3);
      LinearOp rhs = R_op(2, 3, y, n, 3) * R_op(1, 3, x * y, n, 3) * R_op(1, 2, x, n, 3);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("strip modules: dimension and character") {
  for (int n = 2; n <= 3; ++n)
    for (int N = 1; N <= 4; ++N)
      for (const auto& th : compositions(N)) {
        INFO(n << " " << strip_to_string(th));
        Subspace im = image_basis(strip_product(th, 0, StripVariant::R, n));
        CHECK(im.dim() == sst_count(th, n));
        CHECK(rank(strip_product(th, 0, StripVariant::Rcheck, n)) == im.dim());
        CHECK(subspace_character(im, n, N) == skew_schur(strip_to_skew(th), n));
      }
  // the other normalization produces the transposed counts
  CHECK(rank(strip_product(BorderStrip{2}, 0, StripVariant::R, 2, SNorm::q_inv_hecke)) == 3);
  CHECK(rank(strip_product(BorderStrip{1, 1}, 0, StripVariant::R, 2, SNorm::q_inv_hecke)) == 1);
}

TEST_CASE("evaluation action on strip modules") {
  for (int n = 2; n <= 3; ++n)
    for (int N = 1; N <= 3; ++N)
      for (const auto& th : compositions(N)) {
        INFO(n << " " << strip_to_string(th));
        ContentLabels a = decomposition_labels(th), ra(a.rbegin(), a.rend());
        auto words = colour_words(n, N);
        Subspace im = image_basis(strip_product(a, StripVariant::R, n));
        Echelon ech;
        for (const auto& v : im.basis) ech.insert(v);
        LinearOp rc = strip_product(a, StripVariant::Rcheck, n);
        for (int i = 0; i < n; ++i)
          for (GenKind k : {GenKind::E, GenKind::F, GenKind::K}) {
            LinearOp A = generator_matrix({k, i}, ActionContext::eval(n, a), words);
            LinearOp B = generator_matrix({k, i}, ActionContext::eval(n, ra), words);
            for (const auto& v : im.basis) CHECK(ech.contains(A.apply(v)));
            CHECK(rc * B == A * rc);
          }
      }
}

TEST_CASE("V^lambda equals the kernel of Rbar") {
  for (int n = 2; n <= 3; ++n)
    for (int N = 1; N <= 4; ++N)
      for (const auto& th : compositions(N)) {
        std::vector<int> lambda = strip_to_lambda(th, 0);
        INFO(n << " " << strip_to_string(th));
        CHECK(lambda_to_strip(lambda) == th);
        Subspace v = v_lambda_subspace(lambda, n);
        Subspace k = kernel_basis(strip_product(decomposition_labels(th), StripVariant::Rbar, n));
        CHECK(subspace_equal(v, k));
        CHECK(tensor_dim(n, N) - v.dim() == sst_count(th, n));
      }
  // single block: only the adjacent terms
  CHECK(v_lambda_subspace({3, 3}, 2).dim() == 3);
  CHECK(tensor_dim(2, 2) - v_lambda_subspace({0, 1}, 2).dim() == 3);
}

TEST_CASE("lambda and strip dictionary") {
  CHECK(lambda_to_strip({0, 1}) == BorderStrip{1, 1});
  CHECK(lambda_to_strip({4, 4, 4}) == BorderStrip{3});
  CHECK(lambda_to_strip({2, 2, 1}) == BorderStrip{2, 1});
  for (int N = 1; N <= 5; ++N)
    for (const auto& th : compositions(N))
      for (int top = -1; top <= 1; ++top) {
        auto lambda = strip_to_lambda(th, top);
        CHECK(lambda.front() == top);
        CHECK(strip_to_lambda(lambda_to_strip(lambda), top) == lambda);
      }
  CHECK_THROWS_AS(lambda_blocks({0, 2}), InvalidLambdaClass);
  CHECK_THROWS_AS(v_lambda_subspace({3, 0, 1}, 2), InvalidLambdaClass);
}
