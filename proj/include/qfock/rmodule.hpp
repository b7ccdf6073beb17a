// Trigonometric R-matrices on the tensor power of V = C^n, ordered products
// attached to border strips, and the subspaces V^lambda.
//
// Tensors use the colour-word basis in lexicographic order (colour_words).
// Site indices are 1-based.  An operator X_{a,b} acts on sites a and b with
// site a in the first tensor slot.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qfock/linalg.hpp"
#include "qfock/tableaux.hpp"
#include "qfock/wedge.hpp"

namespace qfock {

class SingularSpectralPoint : public std::invalid_argument {
 public:
  explicit SingularSpectralPoint(const std::string& w) : std::invalid_argument(w) {}
};
class InvalidLambdaClass : public std::invalid_argument {
 public:
  explicit InvalidLambdaClass(const std::string& w) : std::invalid_argument(w) {}
};

/// Normalization of S in terms of the two-site Hecke matrix Sh.  Both have
/// spectrum {q, -q^-1}; they differ in which eigenspace carries q.
enum class SNorm {
  minus_q_hecke_inv,  // S = -q Sh^{-1}: same-colour pairs have eigenvalue -q^-1
  q_inv_hecke,        // S = q^-1 Sh
};
constexpr SNorm kDefaultSNorm = SNorm::minus_q_hecke_inv;

using ContentLabels = std::vector<int>;

/// a_l = -2 x_l + 2 y_l + a_base over the boxes in numbering order.
ContentLabels content_labels(const BorderStrip& theta, int a_base);
/// Labels whose box-by-box values are 2(l - 1 + m_1 + ... + m_{j-1}) for the
/// l-th box of column j; equals content_labels with a_base = 2(r - 1).
ContentLabels decomposition_labels(const BorderStrip& theta);

int colour_word_index(const Word& w, int n);
int tensor_dim(int n, int N);

LinearOp S_op(int a, int b, int n, int N, bool inverse = false, SNorm norm = kDefaultSNorm);
LinearOp P_op(int a, int b, int n, int N);
/// (x S^-1 - S) / (x - 1) on sites a, b.
LinearOp Rcheck_op(int a, int b, const RingElem& x, int n, int N, SNorm norm = kDefaultSNorm);
/// Rcheck_{a,b}(x) P_{a,b}.
LinearOp R_op(int a, int b, const RingElem& x, int n, int N, SNorm norm = kDefaultSNorm);

enum class StripVariant { R, Rbar, Rcheck };

/// One factor X_{a,b}(q^e) of an ordered product; check selects Rcheck.
struct Factor {
  int a = 0;
  int b = 0;
  int e = 0;
  bool check = false;
};

/// Factors listed from left to right.
std::vector<Factor> strip_factors(const ContentLabels& labels, StripVariant v);
LinearOp factor_product(const std::vector<Factor>& f, int n, int N, SNorm norm = kDefaultSNorm);
LinearOp strip_product(const BorderStrip& theta, int a_base, StripVariant v, int n, SNorm norm = kDefaultSNorm);
LinearOp strip_product(const ContentLabels& labels, StripVariant v, int n, SNorm norm = kDefaultSNorm);

/// Colour counts of a weight-homogeneous tensor (x_e exponent = count of e).
std::vector<int> tensor_weight(const SparseVec& v, int n, int N);
/// Character of a subspace whose basis vectors are weight-homogeneous.
CharPoly subspace_character(const Subspace& s, int n, int N);

/// Equal-run block data of lambda, runs listed from the smallest value.
struct LambdaBlocks {
  std::vector<int> r;  // r_1..r_J
  std::vector<int> l;  // l_j = r_1 + ... + r_{j-1}
  int N = 0;
};
/// lambda is sorted non-increasingly first; throws InvalidLambdaClass unless
/// consecutive differences are 0 or 1.
LambdaBlocks lambda_blocks(std::vector<int> lambda);

/// Factors of the cross-block product for blocks j, j+1 (j is 1-based).
std::vector<Factor> cross_block_factors(const LambdaBlocks& b, int j);
Subspace v_lambda_subspace(const std::vector<int>& lambda, int n, SNorm norm = kDefaultSNorm);

/// theta = <r_J, ..., r_1>.
BorderStrip lambda_to_strip(const std::vector<int>& lambda);
/// Non-increasing lambda with top entry `top` and runs m_1, m_2, ...
std::vector<int> strip_to_lambda(const BorderStrip& theta, int top);

}  // namespace qfock
