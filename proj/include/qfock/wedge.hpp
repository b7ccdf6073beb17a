// q-wedge products: straightening to normally ordered wedges, finite wedge
// spaces V_M^{s+nl,k}, Fock space components and the Heisenberg action.
//
// A wedge u_{k_1} ^ ... ^ u_{k_N} is stored as its index word (k_1..k_N).
// Fock vectors in F_M store only the head; position i beyond the head holds
// the vacuum index M - i + 1, and heads never end with a vacuum entry.
#pragma once

#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "qfock/linalg.hpp"
#include "qfock/ring.hpp"

namespace qfock {

using Word = std::vector<int>;
using WedgeVec = std::map<Word, RingElem>;

class RuleInconsistency : public std::logic_error {
 public:
  explicit RuleInconsistency(const std::string& w) : std::logic_error(w) {}
};
class NonTermination : public std::runtime_error {
 public:
  explicit NonTermination(const std::string& w) : std::runtime_error(w) {}
};
class TailMismatch : public std::invalid_argument {
 public:
  explicit TailMismatch(const std::string& w) : std::invalid_argument(w) {}
};
class NoStabilization : public std::runtime_error {
 public:
  explicit NoStabilization(const std::string& w) : std::runtime_error(w) {}
};

/// u_k = z^m v_eps with k = eps - n m, eps in 1..n.
int color_of(int k, int n);
int zpow_of(int k, int n);
int index_of(int m, int eps, int n);

void add_to(WedgeVec& acc, const Word& w, const RingElem& c);
void add_to(WedgeVec& acc, const WedgeVec& v, const RingElem& c = RingElem(1));
WedgeVec scaled(const WedgeVec& v, const RingElem& c);

/// Actions on tensors u_{k_1} (x) ... (x) u_{k_N}, stored like wedge words.
/// T_i acts on the polynomial part, S_i (or its inverse) on V (x) V.
WedgeVec tensor_T(int i, const WedgeVec& t, int n);
WedgeVec tensor_S(int i, const WedgeVec& t, int n, bool inverse = false);
/// T_i + q^2 S_i^{-1}; the wedge quotient kills its kernel.
WedgeVec kernel_op(int i, const WedgeVec& t, int n);

/// u_k ^ u_l = sum c u_a ^ u_b with a > b.
struct PairRuleTerm {
  int a;
  int b;
  RingElem c;
};
using PairRule = std::vector<PairRuleTerm>;

/// The kernel operator restricted to a two-site block of fixed total
/// z-degree, fixed colour multiset and exponents in [lo, degree - lo].
struct TwoSiteBlock {
  std::vector<Word> basis;
  LinearOp op;
};
TwoSiteBlock two_site_block(int n, int degree, int c1, int c2, int lo);

/// Expresses u_k (x) u_l (k < l) modulo the kernel in normally ordered pairs.
/// `extra` widens the exponent window (used to check window independence).
PairRule derive_pair_rule(int n, int k, int l, int extra = 0);

/// Cached rule table for a given n.
class StraightenRules {
 public:
  explicit StraightenRules(int n) : n_(n) {}
  int n() const { return n_; }
  /// Rule for u_k ^ u_l with k < l; translation covariance by n is used.
  const PairRule& rule(int k, int l);

 private:
  int n_;
  std::mutex mu_;
  std::map<std::pair<int, int>, PairRule> cache_;
};
StraightenRules& rules_for(int n);

/// Straighten a finite wedge word into normally ordered wedges.
WedgeVec straighten(const Word& w, int n);
WedgeVec straighten(const WedgeVec& v, int n);
/// Same, reducing at a randomly chosen violation each step (no memo).
WedgeVec straighten_random_order(const Word& w, int n, std::mt19937& rng);

bool is_normally_ordered(const Word& w);

// --- semi-infinite wedges --------------------------------------------------

int vacuum_index(int M, int position);  // position is 1-based
Word fock_canonical(Word head, int M);
/// Straightens head ^ |M - len(head)> into canonical Fock heads.
WedgeVec fock_straighten(const Word& head, int M, int n);
WedgeVec fock_straighten(const WedgeVec& v, int M, int n);
/// Degree sum_i (m^0_i - m_i) over the given positions.
int wedge_degree(const Word& w, int M, int n);
std::vector<Word> fock_component_basis(int M, int k, int n);

/// s = M mod n in 0..n-1.
int residue(int M, int n);
std::vector<Word> wedge_space_basis(int M, int l, int k, int n);
/// Finite wedge of length s+nl  ->  Fock head (appends the vacuum tail).
WedgeVec rho_bar(const WedgeVec& w, int M, int l, int n);
/// Inverse; throws TailMismatch if a term is not of the form head ^ tail.
WedgeVec rho_bar_inv(const WedgeVec& v, int M, int l, int n);
/// V_M^{s+nl} -> V_M^{s+nm} by appending u_{M-s-nl} ^ ... ^ u_{M-s-nm+1}.
WedgeVec rho_bar_lm(const WedgeVec& w, int M, int l, int m, int n);

/// B_a acting on a Fock vector, stabilized in the truncation length.
WedgeVec heisenberg_B(int a, const WedgeVec& v, int M, int n);

/// Span of B_{-a} F_M^{k-a} (1 <= a <= k) in coordinates of
/// fock_component_basis(M, k, n).
Subspace heisenberg_ideal_basis(int M, int k, int n);

/// Coordinates of a Fock vector in a given basis; throws if outside.
SparseVec coordinates(const WedgeVec& v, const std::vector<Word>& basis);
WedgeVec from_coordinates(const SparseVec& x, const std::vector<Word>& basis);

std::string word_to_string(const Word& w);

}  // namespace qfock
