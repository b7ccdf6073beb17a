#include "qfock/linalg.hpp"

#include <algorithm>

namespace qfock {

SparseVec SparseVec::unit(int i, RingElem c) {
  SparseVec v;
  if (!c.is_zero()) v.e_.emplace_back(i, std::move(c));
  return v;
}

SparseVec SparseVec::from_map(const std::map<int, RingElem>& m) {
  SparseVec v;
  for (const auto& [i, c] : m)
    if (!c.is_zero()) v.e_.emplace_back(i, c);
  return v;
}

RingElem SparseVec::at(int i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& a, int k) { return a.first < k; });
  if (it != e_.end() && it->first == i) return it->second;
  return RingElem(0);
}

void SparseVec::axpy(const RingElem& c, const SparseVec& x) {
  if (c.is_zero() || x.e_.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + x.e_.size());
  std::size_t i = 0, j = 0;
  while (i < e_.size() || j < x.e_.size()) {
    if (j == x.e_.size() || (i < e_.size() && e_[i].first < x.e_[j].first)) {
      out.push_back(std::move(e_[i++]));
    } else if (i == e_.size() || x.e_[j].first < e_[i].first) {
      out.emplace_back(x.e_[j].first, c * x.e_[j].second);
      ++j;
    } else {
      RingElem s = e_[i].second + c * x.e_[j].second;
      if (!s.is_zero()) out.emplace_back(e_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  e_ = std::move(out);
}

SparseVec SparseVec::scaled(const RingElem& c) const {
  if (c.is_zero()) return {};
  SparseVec r = *this;
  if (c.is_one()) return r;
  for (auto& [i, x] : r.e_) x *= c;
  return r;
}

SparseVec SparseVec::map(const std::function<RingElem(const RingElem&)>& f) const {
  SparseVec r;
  for (const auto& [i, x] : e_) {
    RingElem y = f(x);
    if (!y.is_zero()) r.e_.emplace_back(i, std::move(y));
  }
  return r;
}

// ---------------------------------------------------------------------------

LinearOp LinearOp::identity(int n) {
  LinearOp a(n, n);
  for (int i = 0; i < n; ++i) a.column(i) = SparseVec::unit(i);
  return a;
}

LinearOp LinearOp::from_columns(int rows, std::vector<SparseVec> cols) {
  LinearOp a;
  a.rows_ = rows;
  a.cols_ = static_cast<int>(cols.size());
  a.c_ = std::move(cols);
  return a;
}

SparseVec LinearOp::apply(const SparseVec& v) const {
  SparseVec r;
  for (const auto& [j, c] : v.entries()) r.axpy(c, column(j));
  return r;
}

LinearOp LinearOp::transpose() const {
  std::vector<std::vector<SparseVec::Entry>> rows(static_cast<std::size_t>(rows_));
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, c] : column(j).entries()) rows[static_cast<std::size_t>(i)].emplace_back(j, c);
  LinearOp t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    SparseVec v;
    for (auto& [j, c] : rows[static_cast<std::size_t>(i)]) v.push_back_unchecked(j, std::move(c));
    t.column(i) = std::move(v);
  }
  return t;
}

LinearOp LinearOp::scaled(const RingElem& c) const {
  LinearOp r = *this;
  for (auto& col : r.c_) col = col.scaled(c);
  return r;
}

LinearOp LinearOp::map(const std::function<RingElem(const RingElem&)>& f) const {
  LinearOp r = *this;
  for (auto& col : r.c_) col = col.map(f);
  return r;
}

bool LinearOp::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const SparseVec& v) { return v.is_zero(); });
}

LinearOp operator*(const LinearOp& a, const LinearOp& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  LinearOp r(a.rows_, b.cols_);
  for (int j = 0; j < b.cols_; ++j) r.column(j) = a.apply(b.column(j));
  return r;
}

LinearOp operator+(const LinearOp& a, const LinearOp& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
  LinearOp r = a;
  for (int j = 0; j < a.cols_; ++j) r.column(j).axpy(RingElem(1), b.column(j));
  return r;
}

LinearOp operator-(const LinearOp& a, const LinearOp& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
  LinearOp r = a;
  for (int j = 0; j < a.cols_; ++j) r.column(j).axpy(RingElem(-1), b.column(j));
  return r;
}

bool operator==(const LinearOp& a, const LinearOp& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.c_ == b.c_;
}

// ---------------------------------------------------------------------------

SparseVec Echelon::reduce(const SparseVec& v) const {
  SparseVec r = v;
  for (const auto& [i, c] : v.entries()) {
    auto it = pivot_row_.find(i);
    if (it != pivot_row_.end()) r.axpy(-c, rows_[it->second]);
  }
  return r;
}

SparseVec Echelon::reduce_tracked(const SparseVec& v, SparseVec& combination) const {
  if (!track_) throw std::logic_error("echelon built without tracking");
  SparseVec r = v;
  combination = SparseVec();
  for (const auto& [i, c] : v.entries()) {
    auto it = pivot_row_.find(i);
    if (it != pivot_row_.end()) {
      r.axpy(-c, rows_[it->second]);
      combination.axpy(c, combos_[it->second]);
    }
  }
  return r;
}

bool Echelon::insert(const SparseVec& v) {
  int id = inserted_++;
  SparseVec combo;
  SparseVec r = track_ ? reduce_tracked(v, combo) : reduce(v);
  if (r.is_zero()) return false;
  if (track_) {
    // r = v - combo  (in terms of inserted vectors)
    combo = combo.scaled(RingElem(-1));
    combo.axpy(RingElem(1), SparseVec::unit(id));
  }
  // pivot: the lightest coefficient, ties broken by lowest index
  const SparseVec::Entry* best = nullptr;
  for (const auto& e : r.entries())
    if (!best || e.second.weight() < best->second.weight()) best = &e;
  int piv = best->first;
  RingElem s = best->second.inv();
  r = r.scaled(s);
  if (track_) combo = combo.scaled(s);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    RingElem c = rows_[k].at(piv);
    if (c.is_zero()) continue;
    rows_[k].axpy(-c, r);
    if (track_) combos_[k].axpy(-c, combo);
  }
  pivot_row_[piv] = rows_.size();
  pivots_.push_back(piv);
  rows_.push_back(std::move(r));
  if (track_) combos_.push_back(std::move(combo));
  return true;
}

// ---------------------------------------------------------------------------

int rank(const LinearOp& a) {
  Echelon e;
  for (const auto& c : a.columns()) e.insert(c);
  return e.rank();
}

Subspace image_basis(const LinearOp& a) { return span(a.rows(), a.columns()); }

Subspace span(int ambient, const std::vector<SparseVec>& vs) {
  Echelon e;
  for (const auto& v : vs) e.insert(v);
  return Subspace{ambient, e.rows()};
}

Subspace kernel_basis(const LinearOp& a) {
  LinearOp t = a.transpose();
  Echelon e;
  for (const auto& r : t.columns()) e.insert(r);
  std::vector<int> free;
  for (int j = 0; j < a.cols(); ++j)
    if (!e.is_pivot(j)) free.push_back(j);
  std::vector<SparseVec> basis;
  for (int f : free) {
    std::map<int, RingElem> m;
    m[f] = RingElem(1);
    for (std::size_t k = 0; k < e.rows().size(); ++k) {
      RingElem c = e.rows()[k].at(f);
      if (!c.is_zero()) m[e.pivots()[k]] = -c;
    }
    basis.push_back(SparseVec::from_map(m));
  }
  return Subspace{a.cols(), std::move(basis)};
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  std::vector<SparseVec> all = a.basis;
  all.insert(all.end(), b.basis.begin(), b.basis.end());
  return span(a.ambient, all);
}

bool subspace_contains(const Subspace& big, const Subspace& small) {
  Echelon e;
  for (const auto& v : big.basis) e.insert(v);
  return std::all_of(small.basis.begin(), small.basis.end(), [&](const SparseVec& v) { return e.contains(v); });
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  Subspace ra = span(a.ambient, a.basis), rb = span(b.ambient, b.basis);
  return ra.dim() == rb.dim() && subspace_contains(ra, rb);
}

std::optional<SparseVec> solve(const LinearOp& a, const SparseVec& b) {
  Echelon e(true);
  for (const auto& c : a.columns()) e.insert(c);
  SparseVec combo;
  SparseVec r = e.reduce_tracked(b, combo);
  if (!r.is_zero()) return std::nullopt;
  return combo;
}

}  // namespace qfock
