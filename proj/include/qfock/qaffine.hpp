// Actions of U'_q(sl^_n) on tensor and wedge spaces, on Fock space
// components, evaluation modules, and a checker for the defining relations.
//
// Generator E_i (i = 0..n-1) moves colour b to colour a at one site, where
// (a, b) = (i, i+1) for i >= 1 and (n, 1) for i = 0.  With u_k = z^m v_eps the
// finite and Fock actions use index words; evaluation modules use colour
// words (eps_1..eps_N).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfock/heckepoly.hpp"
#include "qfock/tableaux.hpp"
#include "qfock/wedge.hpp"

namespace qfock {

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& w) : std::invalid_argument(w) {}
};
class NonEigenvector : public std::invalid_argument {
 public:
  explicit NonEigenvector(const std::string& w) : std::invalid_argument(w) {}
};

enum class GenKind { E, F, K, Kinv };
struct Generator {
  GenKind kind;
  int index;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};
std::string generator_name(const Generator& g);

enum class ActionKind { U0_N, U1_N, U0_Fock, U1_Fock, Eval };

struct ActionContext {
  ActionKind kind = ActionKind::U0_N;
  int n = 2;
  int N = 0;                        // U0_N, U1_N, Eval
  PMode p = PMode::generic;         // U0_N, U0_Fock
  int M = 0;                        // Fock contexts
  int l_offset = 0;                 // U0_Fock uses l = degree + l_offset
  int pad = 0;                      // U1_Fock truncates at len(head) + pad
  std::vector<int> a;               // Eval spectral parameters q^{a_j}
  bool scaled_y = true;             // U0 uses q^{1-N} Y_j^{(N)} (right action)

  static ActionContext u0_n(int n, int N, PMode p = PMode::generic);
  static ActionContext u1_n(int n, int N);
  static ActionContext u0_fock(int n, int M, PMode p = PMode::generic);
  static ActionContext u1_fock(int n, int M);
  static ActionContext eval(int n, std::vector<int> a);
  bool is_fock() const { return kind == ActionKind::U0_Fock || kind == ActionKind::U1_Fock; }
  std::string describe() const;
};

/// Action on tensors (no straightening); U0_N, U1_N and Eval only.
WedgeVec act_tensor(const Generator& g, const ActionContext& ctx, const WedgeVec& v);
/// Action on normally ordered wedges, Fock vectors or evaluation tensors.
WedgeVec act(const Generator& g, const ActionContext& ctx, const WedgeVec& v);
WedgeVec act(const std::vector<Generator>& word, const ActionContext& ctx, const WedgeVec& v);

/// a_{ij} of type A^(1)_{n-1}; n = 2 has off-diagonal -2.
int cartan(int n, int i, int j);

struct RelationResult {
  std::string family;
  bool pass = true;
  std::string detail;  // first failure
};
struct RelationReport {
  std::vector<RelationResult> families;
  std::optional<RingElem> central;  // eigenvalue of c' = K_0 ... K_{n-1}
  bool central_scalar = true;
  bool pass() const;
  std::string to_string() const;
};

/// Checks every defining relation on each vector of `basis` (applied
/// directly, so the span need not be invariant).
RelationReport verify_relations(const ActionContext& ctx, const std::vector<Word>& basis);

/// Weight/degree character of a basis of K-eigenvectors.  The weight is
/// recovered from the K_1..K_{n-1} eigenvalues and normalized by
/// reduce_weight; the grade is the wedge degree (0 for Eval).
GradedChar weight_character(const ActionContext& ctx, const std::vector<Word>& basis);

/// Matrix of a generator on a basis whose span it preserves.
LinearOp generator_matrix(const Generator& g, const ActionContext& ctx, const std::vector<Word>& basis);

/// All colour words of length N (evaluation module basis).
std::vector<Word> colour_words(int n, int N);

}  // namespace qfock
