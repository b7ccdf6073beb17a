// Exact arithmetic in Z[q^{+-1}, p^{+-1}] and its fraction field Q(q, p).
//
// Every coefficient in the library lives in RingElem.  Values are kept in a
// canonical reduced form so that equality is structural.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qfock {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in Q(q,p)") {}
};

class PoleAtPOne : public std::domain_error {
 public:
  explicit PoleAtPOne(const std::string& what) : std::domain_error(what) {}
};

class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Exponent pair of the monomial q^q p^p.  Ordered lexicographically, q first.
struct Monomial {
  int q = 0;
  int p = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Laurent polynomial in q, p with integer coefficients.
///
/// Terms are stored sorted ascending by (q, p) with no zero coefficients,
/// so two equal polynomials have identical term lists.
class LaurentPoly {
 public:
  struct Term {
    Monomial m;
    mpz_class c;
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: implicit integer embedding is intended
  LaurentPoly(const mpz_class& c);  // NOLINT
  static LaurentPoly monomial(const mpz_class& c, int qe, int pe = 0);
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  bool has_p() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading() const { return terms_.back(); }
  int min_q() const;
  int max_q() const;
  int min_p() const;
  int max_p() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly shifted(int dq, int dp) const;
  LaurentPoly scaled(const mpz_class& c) const;
  /// Divide every coefficient by c; c must divide all of them.
  LaurentPoly divided_exact(const mpz_class& c) const;
  mpz_class content() const;

  /// Substitute p = 1.
  LaurentPoly at_p1() const;
  /// Substitute q -> q^a, p -> p^b.
  LaurentPoly substituted_powers(int a, int b) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
  friend class PolyBuilder;
};

/// gcd over Z[q, p] of two Laurent polynomials: the result has no monomial
/// factor, non-negative exponents and a positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b in the Laurent ring; throws InternalError if b does
/// not divide a.
LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Element of Q(q, p) in canonical form: num/den reduced over Z[q, p], den
/// with positive leading coefficient (lex q > p) and no monomial factor.
class RingElem {
 public:
  RingElem() = default;
  RingElem(long c) : num_(c), den_(1) {}  // NOLINT
  RingElem(const LaurentPoly& poly) : num_(poly), den_(1) {}  // NOLINT
  RingElem(LaurentPoly num, LaurentPoly den);
  static RingElem rational(long n, long d);

  static RingElem q() { return LaurentPoly::monomial(1, 1, 0); }
  static RingElem p() { return LaurentPoly::monomial(1, 0, 1); }
  static RingElem q_pow(int e) { return LaurentPoly::monomial(1, e, 0); }
  static RingElem p_pow(int e) { return LaurentPoly::monomial(1, 0, e); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool has_p() const { return num_.has_p() || den_.has_p(); }

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  RingElem& operator/=(const RingElem& o);
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
  friend RingElem operator/(RingElem a, const RingElem& b) { return a /= b; }

  RingElem inv() const;
  RingElem pow(int e) const;

  friend bool operator==(const RingElem& a, const RingElem& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

  /// Rough cost measure used for pivot selection.
  std::size_t weight() const { return num_.size() + den_.size(); }
  std::size_t hash() const { return num_.hash() * 1000003u ^ den_.hash(); }

  /// "(q^2+1)/(q)"-style rendering; polynomials print without a fraction bar.
  std::string to_string() const;

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_{1};
};

/// Substitutes p = 1.  Throws PoleAtPOne if the reduced denominator vanishes.
RingElem specialize_p1(const RingElem& a);

/// Substitutes q -> q^a, p -> p^b; used for q <-> q^{-1} comparisons.
RingElem substitute_powers(const RingElem& x, int a, int b);

/// Quantum integer (q^n - q^-n)/(q - q^-1).
RingElem q_int(int n);
/// Quantum binomial [n choose r]_q.
RingElem q_binomial(int n, int r);

/// Parses the output of RingElem::to_string (and simple hand-written
/// expressions of the same grammar).
RingElem parse_ring_elem(std::string_view text);

}  // namespace qfock
