#include "qfock/heckepoly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace qfock {

namespace {

void check_var(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
}

const RingElem& qq() {
  static const RingElem v = RingElem::q();
  return v;
}
const RingElem& qinv() {
  static const RingElem v = RingElem::q_pow(-1);
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// PolyVector
// ---------------------------------------------------------------------------

PolyVector PolyVector::monomial(const Exponent& e, RingElem c) {
  PolyVector f(static_cast<int>(e.size()));
  f.add_term(e, c);
  return f;
}

PolyVector PolyVector::constant(int n, RingElem c) { return monomial(Exponent(static_cast<std::size_t>(n), 0), c); }

RingElem PolyVector::coeff(const Exponent& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? RingElem(0) : it->second;
}

void PolyVector::add_term(const Exponent& e, const RingElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

PolyVector& PolyVector::operator+=(const PolyVector& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

PolyVector& PolyVector::operator-=(const PolyVector& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

PolyVector operator*(const RingElem& c, const PolyVector& f) {
  PolyVector r(f.n_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : f.t_) r.t_.emplace(e, c * x);
  return r;
}

PolyVector operator*(const PolyVector& a, const PolyVector& b) {
  PolyVector r(std::max(a.n_, b.n_));
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      Exponent e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

PolyVector PolyVector::at_p1() const {
  PolyVector r(n_);
  for (const auto& [e, c] : t_) r.add_term(e, specialize_p1(c));
  return r;
}

std::string PolyVector::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      int x = it->first[i];
      if (x == 0) continue;
      os << "*z" << (i + 1);
      if (x != 1) os << "^" << x;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Orders
// ---------------------------------------------------------------------------

Dominance dominance_cmp(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("dominance comparison needs equal lengths");
  long sl = 0, sm = 0;
  bool ge = true, le = true;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    sl += lambda[i];
    sm += mu[i];
    if (sl < sm) ge = false;
    if (sl > sm) le = false;
  }
  if (sl != sm) throw UnequalDegree();
  if (ge && le) return Dominance::EQ;
  if (ge) return Dominance::GT;
  if (le) return Dominance::LT;
  return Dominance::INCOMPARABLE;
}

bool in_s_lambda(const std::vector<int>& lambda, const std::vector<int>& sigma) {
  std::size_t n = lambda.size();
  if (sigma.size() != n) return false;
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i)
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int si = sigma[i], sj = sigma[j];
      if (lambda[static_cast<std::size_t>(si - 1)] == lambda[static_cast<std::size_t>(sj - 1)] && si < sj && !(i < j))
        return false;
    }
  return true;
}

int SLambdaOrder::cmp(const std::vector<int>& lambda, const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    int d = lambda[static_cast<std::size_t>(a[i] - 1)] - lambda[static_cast<std::size_t>(b[i] - 1)];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

SLambdaOrder s_lambda_order(const std::vector<int>& lambda) {
  std::size_t n = lambda.size();
  // Distinct arrangements of the multiset; equal values take the indices of
  // lambda in increasing order, which is exactly the S^lambda condition.
  std::vector<int> w = lambda;
  std::sort(w.begin(), w.end());
  SLambdaOrder out;
  do {
    std::map<int, std::vector<int>> slots;
    for (std::size_t j = 0; j < n; ++j) slots[lambda[j]].push_back(static_cast<int>(j) + 1);
    std::map<int, std::size_t> used;
    std::vector<int> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = slots[w[i]][used[w[i]]++];
    out.elements.push_back(sigma);
  } while (std::next_permutation(w.begin(), w.end()));
  std::sort(out.elements.begin(), out.elements.end(),
            [&](const auto& a, const auto& b) { return SLambdaOrder::cmp(lambda, a, b) < 0; });
  out.min = out.elements.front();
  return out;
}

CompositionLabel CompositionLabel::make(std::vector<int> lambda, std::vector<int> sigma) {
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  if (!in_s_lambda(lambda, sigma)) throw std::invalid_argument("sigma is not in S^lambda");
  return {std::move(lambda), std::move(sigma)};
}

CompositionLabel CompositionLabel::min(std::vector<int> lambda) {
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  auto ord = s_lambda_order(lambda);
  return {lambda, ord.min};
}

CompositionLabel CompositionLabel::of_monomial(const Exponent& e) {
  std::size_t n = e.size();
  CompositionLabel l;
  l.lambda = e;
  std::sort(l.lambda.begin(), l.lambda.end(), std::greater<>());
  l.sigma.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    int r = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (e[j] > e[i] || (e[j] == e[i] && j < i)) ++r;
    l.sigma[i] = r;
  }
  return l;
}

Exponent CompositionLabel::monomial() const {
  Exponent e(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) e[i] = lambda[static_cast<std::size_t>(sigma[i] - 1)];
  return e;
}

std::vector<RingElem> xi(const CompositionLabel& l) {
  int n = l.size();
  std::vector<RingElem> out;
  for (int i = 0; i < n; ++i) {
    int s = l.sigma[static_cast<std::size_t>(i)];
    out.push_back(RingElem(LaurentPoly::monomial(1, 2 * s - n - 1, l.lambda[static_cast<std::size_t>(s - 1)])));
  }
  return out;
}

namespace {

std::vector<long> partial_sums_sorted(const Exponent& e) {
  std::vector<int> s = e;
  std::sort(s.begin(), s.end(), std::greater<>());
  std::vector<long> ps(s.size());
  long acc = 0;
  for (std::size_t i = 0; i < s.size(); ++i) ps[i] = acc += s[i];
  return ps;
}

// +1 if a is higher in the S^lambda order than b (same lambda), -1, 0.
int sord_cmp(const Exponent& a, const Exponent& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace

std::optional<int> label_cmp(const Exponent& a, const Exponent& b) {
  auto pa = partial_sums_sorted(a), pb = partial_sums_sorted(b);
  if (pa.back() != pb.back()) return std::nullopt;
  if (pa == pb) return sord_cmp(a, b);
  bool ge = true, le = true;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (pa[i] < pb[i]) ge = false;
    if (pa[i] > pb[i]) le = false;
  }
  if (ge) return 1;
  if (le) return -1;
  return std::nullopt;
}

bool label_total_less(const Exponent& a, const Exponent& b) {
  auto pa = partial_sums_sorted(a), pb = partial_sums_sorted(b);
  if (pa.back() != pb.back()) return pa.back() < pb.back();
  if (pa != pb) return pa < pb;
  int s = sord_cmp(a, b);
  if (s != 0) return s < 0;
  return a < b;
}

// ---------------------------------------------------------------------------
// Operators
// ---------------------------------------------------------------------------

PolyVector apply_K(int i, int j, const PolyVector& f) {
  int n = f.nvars();
  check_var(i, n);
  check_var(j, n);
  PolyVector r(n);
  for (const auto& [e, c] : f.terms()) {
    Exponent x = e;
    std::swap(x[static_cast<std::size_t>(i - 1)], x[static_cast<std::size_t>(j - 1)]);
    r.add_term(x, c);
  }
  return r;
}

PolyVector apply_g(int i, int j, const PolyVector& f) {
  int n = f.nvars();
  check_var(i, n);
  check_var(j, n);
  if (i == j) throw std::invalid_argument("g_{i,j} needs i != j");
  std::size_t ii = static_cast<std::size_t>(i - 1), jj = static_cast<std::size_t>(j - 1);
  PolyVector r(n);
  for (const auto& [e, c] : f.terms()) {
    r.add_term(e, qq() * c);
    int a = e[ii], b = e[jj];
    if (a == b) continue;
    // (K - 1) z^e / (z_i - z_j) as a sum of monomials with sign s
    int lo = std::min(a, b), len = std::abs(a - b);
    int hi1 = std::max(a, b) - 1;
    RingElem s = a > b ? RingElem(-1) : RingElem(1);
    RingElem ci = s * qinv() * c, cj = -(s * qq() * c);
    for (int t = 0; t < len; ++t) {
      Exponent x = e;
      x[ii] = lo + t + 1;
      x[jj] = hi1 - t;
      r.add_term(x, ci);
      x[ii] = lo + t;
      x[jj] = hi1 - t + 1;
      r.add_term(x, cj);
    }
  }
  return r;
}

PolyVector apply_g_inv(int i, int j, const PolyVector& f) {
  return apply_g(i, j, f) - (qq() - qinv()) * f;
}

PolyVector hecke_T(int i, const PolyVector& f) { return (-qq()) * apply_g_inv(i, i + 1, f); }

PolyVector hecke_T_inv(int i, const PolyVector& f) { return (-qinv()) * apply_g(i, i + 1, f); }

PolyVector apply_pD(int i, int power, const PolyVector& f, PMode mode) {
  check_var(i, f.nvars());
  if (mode == PMode::one) return f;
  PolyVector r(f.nvars());
  for (const auto& [e, c] : f.terms())
    r.add_term(e, c * RingElem::p_pow(power * e[static_cast<std::size_t>(i - 1)]));
  return r;
}

PolyVector cherednik_Y(int i, const PolyVector& f, PMode mode) {
  int n = f.nvars();
  check_var(i, n);
  PolyVector h = f;
  // rightmost factors first: K_{1,i} g_{1,i} ... K_{i-1,i} g_{i-1,i}
  for (int j = i - 1; j >= 1; --j) h = apply_K(j, i, apply_g(j, i, h));
  h = apply_pD(i, 1, h, mode);
  // then g^{-1}_{i,i+1} K_{i,i+1} ... g^{-1}_{i,N} K_{i,N}
  for (int j = n; j > i; --j) h = apply_g_inv(i, j, apply_K(i, j, h));
  return h;
}

PolyVector cherednik_Y_inv(int i, const PolyVector& f, PMode mode) {
  int n = f.nvars();
  check_var(i, n);
  PolyVector h = f;
  for (int j = i + 1; j <= n; ++j) h = apply_K(i, j, apply_g(i, j, h));
  h = apply_pD(i, -1, h, mode);
  for (int j = 1; j < i; ++j) h = apply_g_inv(j, i, apply_K(j, i, h));
  return h;
}

PolyVector mul_z(int i, int power, const PolyVector& f) {
  check_var(i, f.nvars());
  PolyVector r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Exponent x = e;
    x[static_cast<std::size_t>(i - 1)] += power;
    r.add_term(x, c);
  }
  return r;
}

PolyVector elementary_em(int k, const PolyVector& f) {
  int n = f.nvars();
  if (k < 1 || k > n) throw std::invalid_argument("elementary_em needs 1 <= k <= N");
  PolyVector e(n);
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.begin(), pick.begin() + k, -1);
  do {
    e.add_term(pick, RingElem(1));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return e * f;
}

// ---------------------------------------------------------------------------
// Macdonald polynomials
// ---------------------------------------------------------------------------

namespace {

std::mutex memo_mutex;
std::map<Exponent, PolyVector>& memo() {
  static std::map<Exponent, PolyVector> m;
  return m;
}

}  // namespace

PolyVector macdonald_phi(const CompositionLabel& label, const MacdonaldOptions& opt) {
  Exponent top = label.monomial();
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo().find(top);
    if (it != memo().end()) return it->second;
  }
  int n = label.size();
  // Closure of the monomial span under all Y_i.
  std::map<Exponent, std::vector<PolyVector>> images;
  std::deque<Exponent> queue{top};
  std::set<Exponent> seen{top};
  while (!queue.empty()) {
    Exponent m = queue.front();
    queue.pop_front();
    auto& img = images[m];
    for (int i = 1; i <= n; ++i) {
      img.push_back(cherednik_Y(i, PolyVector::monomial(m), PMode::generic));
      for (const auto& [e, c] : img.back().terms())
        if (seen.insert(e).second) {
          if (seen.size() > opt.closure_bound)
            throw ClosureDivergence("monomial closure exceeded " + std::to_string(opt.closure_bound));
          queue.push_back(e);
        }
    }
  }
  std::vector<Exponent> order(seen.begin(), seen.end());
  std::sort(order.begin(), order.end(), [](const Exponent& a, const Exponent& b) { return label_total_less(b, a); });
  if (order.front() != top) throw InternalError("leading monomial is not maximal in its Y-closure");
  // rows[i][m] = list of (m', Y_i[m, m'])
  std::vector<std::map<Exponent, std::vector<std::pair<Exponent, RingElem>>>> rows(static_cast<std::size_t>(n));
  for (const auto& [src, img] : images)
    for (int i = 0; i < n; ++i)
      for (const auto& [e, c] : img[static_cast<std::size_t>(i)].terms()) {
        if (e != src && !label_total_less(e, src))
          throw InternalError("Cherednik operator is not triangular on the label order");
        rows[static_cast<std::size_t>(i)][e].push_back({src, c});
      }
  std::vector<RingElem> ev = xi(label);
  std::map<Exponent, RingElem> coef;
  coef[top] = RingElem(1);
  for (std::size_t k = 1; k < order.size(); ++k) {
    const Exponent& m = order[k];
    bool done = false;
    for (int i = 0; i < n && !done; ++i) {
      RingElem diag(0), rhs(0);
      for (const auto& [src, c] : rows[static_cast<std::size_t>(i)][m]) {
        if (src == m) {
          diag = c;
        } else {
          auto it = coef.find(src);
          if (it != coef.end()) rhs -= c * it->second;
        }
      }
      RingElem d = diag - ev[static_cast<std::size_t>(i)];
      if (d.is_zero()) continue;
      RingElem v = rhs / d;
      if (!v.is_zero()) coef[m] = v;
      done = true;
    }
    if (!done) throw InternalError("degenerate joint spectrum in Macdonald solve");
  }
  PolyVector phi(n);
  for (const auto& [e, c] : coef) phi.add_term(e, c);
  // eigen-residual
  for (int i = 1; i <= n; ++i) {
    PolyVector res(n);
    for (const auto& [e, c] : phi.terms())
      for (const auto& [e2, c2] : images[e][static_cast<std::size_t>(i - 1)].terms()) res.add_term(e2, c * c2);
    res -= ev[static_cast<std::size_t>(i - 1)] * phi;
    if (!res.is_zero()) throw InternalError("Macdonald eigen-residual is nonzero");
  }
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo().emplace(top, phi);
  return phi;
}

PolyVector macdonald_phi_p1(const CompositionLabel& label, const MacdonaldOptions& opt) {
  return macdonald_phi(label, opt).at_p1();
}

CompositionLabel swapped(const CompositionLabel& l, int i) {
  Exponent e = l.monomial();
  std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(i)]);
  return CompositionLabel::of_monomial(e);
}

std::pair<RingElem, RingElem> g_action_coefficients(const CompositionLabel& l, int i) {
  if (i < 1 || i >= l.size()) throw std::invalid_argument("g-action index out of range");
  auto ev = xi(l);
  RingElem x = ev[static_cast<std::size_t>(i)] / ev[static_cast<std::size_t>(i - 1)];
  const RingElem& q = qq();
  RingElem A = (q - qinv()) * x / (x - 1);
  Exponent e = l.monomial();
  int a = e[static_cast<std::size_t>(i - 1)], b = e[static_cast<std::size_t>(i)];
  RingElem B(0);
  if (a > b) {
    RingElem q2 = q * q;
    B = qinv() * (x - q2) * (q2 * x - 1) / ((x - 1) * (x - 1));
  } else if (a < b) {
    B = qinv();
  }
  return {A, B};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
              tok.end());
    if (tok.empty()) continue;
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace qfock
