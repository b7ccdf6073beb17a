// Sparse exact linear algebra over Q(q, p).
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qfock/ring.hpp"

namespace qfock {

/// Sparse vector: entries sorted by index, no zero coefficients.
class SparseVec {
 public:
  using Entry = std::pair<int, RingElem>;

  SparseVec() = default;
  static SparseVec unit(int i, RingElem c = RingElem(1));
  static SparseVec from_map(const std::map<int, RingElem>& m);

  bool is_zero() const { return e_.empty(); }
  std::size_t size() const { return e_.size(); }
  const std::vector<Entry>& entries() const { return e_; }
  RingElem at(int i) const;

  /// this += c * x
  void axpy(const RingElem& c, const SparseVec& x);
  SparseVec scaled(const RingElem& c) const;
  SparseVec map(const std::function<RingElem(const RingElem&)>& f) const;

  friend SparseVec operator+(SparseVec a, const SparseVec& b) {
    a.axpy(RingElem(1), b);
    return a;
  }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) {
    a.axpy(RingElem(-1), b);
    return a;
  }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }
  friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

  void push_back_unchecked(int i, RingElem c) { e_.emplace_back(i, std::move(c)); }

 private:
  std::vector<Entry> e_;
};

/// Sparse matrix stored by columns; the basis ordering lives with the caller.
class LinearOp {
 public:
  LinearOp() = default;
  LinearOp(int rows, int cols) : rows_(rows), cols_(cols), c_(static_cast<std::size_t>(cols)) {}
  static LinearOp identity(int n);
  static LinearOp from_columns(int rows, std::vector<SparseVec> cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const SparseVec& column(int j) const { return c_[static_cast<std::size_t>(j)]; }
  SparseVec& column(int j) { return c_[static_cast<std::size_t>(j)]; }
  const std::vector<SparseVec>& columns() const { return c_; }
  RingElem at(int i, int j) const { return column(j).at(i); }

  SparseVec apply(const SparseVec& v) const;
  LinearOp transpose() const;
  LinearOp scaled(const RingElem& c) const;
  LinearOp map(const std::function<RingElem(const RingElem&)>& f) const;
  bool is_zero() const;

  friend LinearOp operator*(const LinearOp& a, const LinearOp& b);
  friend LinearOp operator+(const LinearOp& a, const LinearOp& b);
  friend LinearOp operator-(const LinearOp& a, const LinearOp& b);
  friend bool operator==(const LinearOp& a, const LinearOp& b);
  friend bool operator!=(const LinearOp& a, const LinearOp& b) { return !(a == b); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVec> c_;
};

/// Incrementally built reduced row echelon form of a subspace.
///
/// Stored rows are fully reduced: each has pivot coefficient 1 and no other
/// stored row has a nonzero entry in its pivot column.  Optionally tracks,
/// for every stored row, the combination of inserted vectors producing it.
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track) {}

  /// Returns true if v was independent of the current span.
  bool insert(const SparseVec& v);
  /// v minus its projection onto the span along the pivot coordinates.
  SparseVec reduce(const SparseVec& v) const;
  /// Like reduce, but also reports the combination of inserted vectors
  /// that was subtracted (requires tracking).
  SparseVec reduce_tracked(const SparseVec& v, SparseVec& combination) const;
  bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool is_pivot(int i) const { return pivot_row_.count(i) != 0; }
  int inserted() const { return inserted_; }

 private:
  bool track_;
  int inserted_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> combos_;
  std::vector<int> pivots_;
  std::map<int, std::size_t> pivot_row_;
};

/// Subspace of an ambient space of dimension `ambient`, in reduced form.
struct Subspace {
  int ambient = 0;
  std::vector<SparseVec> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

int rank(const LinearOp& a);
Subspace image_basis(const LinearOp& a);
Subspace kernel_basis(const LinearOp& a);
Subspace span(int ambient, const std::vector<SparseVec>& vs);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& big, const Subspace& small);
bool subspace_equal(const Subspace& a, const Subspace& b);

/// Solves A x = b; nullopt if inconsistent.  Free variables are set to 0.
std::optional<SparseVec> solve(const LinearOp& a, const SparseVec& b);

}  // namespace qfock
