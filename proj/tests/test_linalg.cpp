#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfock/linalg.hpp"

using namespace qfock;

namespace {

LinearOp dense(const std::vector<std::vector<RingElem>>& rows) {
  int r = static_cast<int>(rows.size()), c = static_cast<int>(rows[0].size());
  LinearOp a(r, c);
  for (int j = 0; j < c; ++j) {
    std::map<int, RingElem> m;
    for (int i = 0; i < r; ++i) m[i] = rows[i][j];
    a.column(j) = SparseVec::from_map(m);
  }
  return a;
}

}  // namespace

TEST_CASE("rank, kernel and image of a symbolic matrix") {
  RingElem q = RingElem::q();
  // rows: (1, q, q^2), (q, q^2, q^3), (1, 0, 1): rank 2
  LinearOp a = dense({{1, q, q * q}, {q, q * q, q * q * q}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  Subspace k = kernel_basis(a);
  REQUIRE(k.dim() == 1);
  CHECK(a.apply(k.basis[0]).is_zero());
  CHECK(image_basis(a).dim() == 2);
  CHECK(image_basis(LinearOp::identity(4)).dim() == 4);
}

TEST_CASE("solve and subspace equality") {
  RingElem q = RingElem::q();
  LinearOp a = dense({{1, q}, {q, 1}});
  SparseVec b = SparseVec::from_map({{0, RingElem(1)}, {1, RingElem(0)}});
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a.apply(*x) == b);
  LinearOp sing = dense({{1, q}, {q, q * q}});
  CHECK_FALSE(solve(sing, b).has_value());
  Subspace s1 = span(2, {SparseVec::from_map({{0, RingElem(1)}, {1, q}})});
  Subspace s2 = span(2, {SparseVec::from_map({{0, q.inv()}, {1, RingElem(1)}})});
  CHECK(subspace_equal(s1, s2));
  CHECK(subspace_contains(image_basis(LinearOp::identity(2)), s1));
}

TEST_CASE("transpose and products") {
  RingElem q = RingElem::q();
  LinearOp a = dense({{1, q}, {0, 1}});
  LinearOp b = dense({{1, -q}, {0, 1}});
  CHECK(a * b == LinearOp::identity(2));
  CHECK(a.transpose().transpose() == a);
  CHECK((a - a).is_zero());
}
