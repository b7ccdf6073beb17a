// Affine Hecke algebra actions on Laurent polynomials in z_1..z_N,
// Cherednik operators and non-symmetric Macdonald polynomials.
//
// Labels use non-increasing partitions: a monomial z^m corresponds to
// lambda = m sorted non-increasingly and sigma(i) = rank of position i
// (larger exponents first, ties broken by position).  With this reading the
// Cherednik operators below are triangular with leading eigenvalue
// p^{m_i} q^{2 sigma(i) - N - 1}.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfock/ring.hpp"

namespace qfock {

using Exponent = std::vector<int>;

class UnequalDegree : public std::invalid_argument {
 public:
  UnequalDegree() : std::invalid_argument("dominance comparison needs equal degrees") {}
};

class ClosureDivergence : public std::runtime_error {
 public:
  explicit ClosureDivergence(const std::string& w) : std::runtime_error(w) {}
};

/// Laurent polynomial in z_1..z_N over Q(q, p).
class PolyVector {
 public:
  PolyVector() = default;
  explicit PolyVector(int n) : n_(n) {}
  static PolyVector monomial(const Exponent& e, RingElem c = RingElem(1));
  static PolyVector constant(int n, RingElem c = RingElem(1));

  int nvars() const { return n_; }
  const std::map<Exponent, RingElem>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  RingElem coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const RingElem& c);
  PolyVector& operator+=(const PolyVector& o);
  PolyVector& operator-=(const PolyVector& o);
  friend PolyVector operator+(PolyVector a, const PolyVector& b) { return a += b; }
  friend PolyVector operator-(PolyVector a, const PolyVector& b) { return a -= b; }
  friend PolyVector operator*(const RingElem& c, const PolyVector& f);
  friend PolyVector operator*(const PolyVector& a, const PolyVector& b);
  friend bool operator==(const PolyVector& a, const PolyVector& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
  friend bool operator!=(const PolyVector& a, const PolyVector& b) { return !(a == b); }

  /// Coefficient-wise p = 1.
  PolyVector at_p1() const;
  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<Exponent, RingElem> t_;
};

enum class PMode { generic, one };
enum class Dominance { GT, LT, EQ, INCOMPARABLE };

/// Literal dominance comparison of partial sums from the left.
Dominance dominance_cmp(const std::vector<int>& lambda, const std::vector<int>& mu);

/// S^lambda, its minimal element and the total order on it.  Permutations are
/// one-based images (sigma[i-1] = sigma(i)).
struct SLambdaOrder {
  std::vector<std::vector<int>> elements;  // sorted increasingly by the order
  std::vector<int> min;
  /// +1 if a > b, -1 if a < b, 0 if equal.
  static int cmp(const std::vector<int>& lambda, const std::vector<int>& a, const std::vector<int>& b);
};
bool in_s_lambda(const std::vector<int>& lambda, const std::vector<int>& sigma);
SLambdaOrder s_lambda_order(const std::vector<int>& lambda);

/// Composition labels (lambda non-increasing, sigma in S^lambda).
struct CompositionLabel {
  std::vector<int> lambda;
  std::vector<int> sigma;

  /// Sorts lambda non-increasingly; sigma refers to the sorted lambda.
  static CompositionLabel make(std::vector<int> lambda, std::vector<int> sigma);
  static CompositionLabel min(std::vector<int> lambda);
  static CompositionLabel of_monomial(const Exponent& e);
  Exponent monomial() const;
  int size() const { return static_cast<int>(lambda.size()); }
};

/// Joint eigenvalues xi_i = p^{lambda_sigma(i)} q^{2 sigma(i) - N - 1}.
std::vector<RingElem> xi(const CompositionLabel& l);
/// Partial order of labels: +1, -1, 0 (equal) or nullopt (incomparable).
std::optional<int> label_cmp(const Exponent& a, const Exponent& b);
/// Total order used by the triangular solve (a linear extension of the above).
bool label_total_less(const Exponent& a, const Exponent& b);

PolyVector apply_K(int i, int j, const PolyVector& f);
PolyVector apply_g(int i, int j, const PolyVector& f);
PolyVector apply_g_inv(int i, int j, const PolyVector& f);
/// T_i = -q g_{i,i+1}^{-1} and its inverse -q^{-1} g_{i,i+1}.
PolyVector hecke_T(int i, const PolyVector& f);
PolyVector hecke_T_inv(int i, const PolyVector& f);
PolyVector apply_pD(int i, int power, const PolyVector& f, PMode mode);
/// Y_i^{(N)} (unscaled) and its inverse.
PolyVector cherednik_Y(int i, const PolyVector& f, PMode mode);
PolyVector cherednik_Y_inv(int i, const PolyVector& f, PMode mode);
/// Multiplication by z_i^power.
PolyVector mul_z(int i, int power, const PolyVector& f);
PolyVector elementary_em(int k, const PolyVector& f);

struct MacdonaldOptions {
  std::size_t closure_bound = 10000;
};

PolyVector macdonald_phi(const CompositionLabel& label, const MacdonaldOptions& opt = {});
PolyVector macdonald_phi_p1(const CompositionLabel& label, const MacdonaldOptions& opt = {});

/// A_i(sigma), B_i(sigma) of the g-action on Phi (requires 1 <= i < N).
std::pair<RingElem, RingElem> g_action_coefficients(const CompositionLabel& l, int i);
/// The label sigma(i,i+1).
CompositionLabel swapped(const CompositionLabel& l, int i);

std::vector<int> parse_int_list(const std::string& text);

}  // namespace qfock
