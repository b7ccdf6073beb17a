// Decomposition of F_M / H'_- F_M into border-strip modules: the sets
// tilde M^{n,k}, the Heisenberg quotient, the map psi_k, the character
// identity and the sl_2 factorization.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfock/qaffine.hpp"
#include "qfock/rmodule.hpp"

namespace qfock {

class NotSl2Strip : public std::invalid_argument {
 public:
  explicit NotSl2Strip(const std::string& w) : std::invalid_argument(w) {}
};

/// m0_i = zpow of the vacuum index at position i, i = 1..N.
std::vector<int> vacuum_exponents(int M, int N, int n);

/// lambda (non-increasing, n-strict, steps 0 or 1) of length s + nk with
/// lambda_1 <= m0_N and |m0| - |lambda| = k.  M defaults to s.
std::vector<std::vector<int>> tilde_M_set(int n, int s, int k, std::optional<int> M = std::nullopt);

/// Complement of the Heisenberg ideal inside F_M^k.
struct Quotient {
  int M = 0;
  int k = 0;
  int n = 2;
  std::vector<Word> fock_basis;
  std::vector<Word> basis;   // fock words at non-pivot coordinates
  Echelon ideal;             // reduced ideal, pivot = 1
  std::vector<int> slots;    // fock coordinate -> quotient coordinate or -1
  int dim() const { return static_cast<int>(basis.size()); }
  /// Coordinates in the quotient of a vector of F_M^k.
  SparseVec project(const WedgeVec& v) const;
};
Quotient quotient_basis(int n, int M, int k);

/// Strip with trailing height-n columns removed.
BorderStrip strip_representative(const BorderStrip& theta, int n);

/// v (x) |M - N> for a tensor v of index words of length N.
WedgeVec append_vacuum(const WedgeVec& v, int M, int n);
/// Phi~_min^lambda (x) (colour word) as a tensor of index words.
WedgeVec min_tensor(const std::vector<int>& lambda, const Word& colours, int n);

struct DecompEntry {
  std::vector<int> lambda;
  BorderStrip theta;         // <r_1, ..., r_J> without trailing height-n columns
  BorderStrip kernel_strip;  // <r_J, ..., r_1>, V^lambda = Ker Rbar of this strip
  int grade = 0;             // strip grade of theta
  int dim = 0;        // dim of tensor space / V^lambda
  CharPoly character;
};

struct DecompReport {
  int n = 0, M = 0, k = 0;
  std::vector<DecompEntry> entries;
  int quotient_dim = 0;
  int image_rank = 0;
  bool well_defined = true;
  bool surjective = true;
  bool dimension_match = true;
  bool intertwines = true;
  bool strips_match = true;
  bool grades_match = true;
  std::vector<std::string> details;
  bool match() const {
    return well_defined && surjective && dimension_match && intertwines && strips_match && grades_match;
  }
};

struct DecompOptions {
  bool intertwining = true;
};
DecompReport psi_k_check(int n, int M, int k, const DecompOptions& opt = {});

struct CharIdentityReport {
  bool match = true;
  int offset = 0;  // lhs grade = rhs grade + offset
  GradedChar lhs;  // Fock quotient
  GradedChar rhs;  // border-strip sum
  std::optional<int> bad_grade;
};
/// Weight of a Fock head relative to |M - s> (s = M mod n), reduced.
std::vector<int> relative_weight(const Word& head, int M, int n);
GradedChar quotient_character(int n, int M, int cutoff);
CharIdentityReport character_identity_check(int n, int k_hw, int cutoff);

struct Sl2Factor {
  int n = 0;  // W_n has dimension n + 1
  int b = 0;
  friend bool operator==(const Sl2Factor&, const Sl2Factor&) = default;
};
/// One factor W_{n_i}(b_i) per maximal run of height-1 columns starting at
/// column l_i; b_i = 2(m_1 + ... + m_{l_i - 1}) + n_i - 1.
std::vector<Sl2Factor> sl2_factorize(const BorderStrip& theta);

/// Generator matrices of W_{n_1}(b_1) (x) ... on the product basis.
LinearOp sl2_generator(const Generator& g, const std::vector<Sl2Factor>& f);
int sl2_dim(const std::vector<Sl2Factor>& f);
CharPoly sl2_character(const std::vector<Sl2Factor>& f);

/// Generator matrix of the evaluation action with decomposition labels on Im R_theta.
LinearOp strip_generator(const Generator& g, const BorderStrip& theta, int n, const Subspace& image);

struct IntertwinerResult {
  int kernel_dim = 0;
  bool invertible = false;
};
/// Solves X g_B = g_A X for all generators, A = strip module, B = product of
/// evaluation modules, and tests whether a solution is invertible.
IntertwinerResult sl2_intertwiner(const BorderStrip& theta);
IntertwinerResult sl2_intertwiner(const BorderStrip& theta, const std::vector<Sl2Factor>& factors);

}  // namespace qfock
