// Skew diagrams, border strips, semi-standard tableaux and characters.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace qfock {

/// Box at column x (growing rightward) and row y (growing downward).
struct Box {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

struct SkewDiagram {
  std::vector<int> lambda;
  std::vector<int> mu;

  int degree() const;
  /// Boxes in numbering order: by x, then by y.
  std::vector<Box> boxes() const;
};

/// Column heights m_1..m_r, listed from the rightmost column leftwards.
using BorderStrip = std::vector<int>;

/// Character polynomial: exponent vector (length n) -> multiplicity.
using CharPoly = std::map<std::vector<int>, long>;
/// q-graded character: grade -> CharPoly.
using GradedChar = std::map<int, CharPoly>;

SkewDiagram strip_to_skew(const BorderStrip& theta);
int strip_size(const BorderStrip& theta);
bool has_2x2_block(const std::vector<Box>& boxes);
bool is_connected(const std::vector<Box>& boxes);

/// Fillings listed in the box order of SkewDiagram::boxes().
std::vector<std::vector<int>> enumerate_sst(const SkewDiagram& d, int n);
CharPoly skew_schur(const SkewDiagram& d, int n);

int t_statistic(const BorderStrip& theta);
/// |θ|(n-|θ|)/2n + t(θ) - k(n-k)/2n; throws if not an integer.
int strip_grade(const BorderStrip& theta, int n, int k);

/// Representatives (last column < n) with |θ| = k mod n and grade <= max_grade,
/// sorted by (grade, strip).
std::vector<BorderStrip> border_strips(int n, int k, int max_grade);

/// Border-strip sum for ch V(Λ_k) with the global prefactor dropped.
GradedChar char_level1(int n, int k, int cutoff);

/// Shifts exponents so that every monomial is taken modulo z_1...z_n,
/// i.e. subtracts the minimal exponent from each monomial.
std::vector<int> reduce_weight(std::vector<int> e);
CharPoly reduce_weights(const CharPoly& c);

std::string strip_to_string(const BorderStrip& theta);
BorderStrip parse_strip(const std::string& text);

}  // namespace qfock
