#include "qfock/wedge.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <sstream>

#include "qfock/heckepoly.hpp"

namespace qfock {

namespace {

int floor_div(int a, int b) {
  int d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

RingElem Q() { return RingElem::q(); }

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
}

}  // namespace

int color_of(int k, int n) { return k - 1 - n * floor_div(k - 1, n) + 1; }
int zpow_of(int k, int n) { return -floor_div(k - 1, n); }
int index_of(int m, int eps, int n) { return eps - n * m; }

void add_to(WedgeVec& acc, const Word& w, const RingElem& c) {
  if (c.is_zero()) return;
  auto it = acc.find(w);
  if (it == acc.end()) {
    acc.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

void add_to(WedgeVec& acc, const WedgeVec& v, const RingElem& c) {
  if (c.is_zero()) return;
  for (const auto& [w, x] : v) add_to(acc, w, c.is_one() ? x : c * x);
}

WedgeVec scaled(const WedgeVec& v, const RingElem& c) {
  WedgeVec r;
  add_to(r, v, c);
  return r;
}

std::string word_to_string(const Word& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

bool is_normally_ordered(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] <= w[i + 1]) return false;
  return true;
}

// --- tensor actions --------------------------------------------------------

WedgeVec tensor_T(int i, const WedgeVec& t, int n) {
  check_n(n);
  WedgeVec out;
  for (const auto& [w, c] : t) {
    int N = static_cast<int>(w.size());
    if (i < 1 || i >= N) throw std::invalid_argument("tensor_T: index out of range");
    Exponent m(w.size());
    std::vector<int> e(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
      m[j] = zpow_of(w[j], n);
      e[j] = color_of(w[j], n);
    }
    PolyVector img = hecke_T(i, PolyVector::monomial(m));
    for (const auto& [m2, c2] : img.terms()) {
      Word w2(w.size());
      for (std::size_t j = 0; j < w.size(); ++j) w2[j] = index_of(m2[j], e[j], n);
      add_to(out, w2, c * c2);
    }
  }
  return out;
}

WedgeVec tensor_S(int i, const WedgeVec& t, int n, bool inverse) {
  check_n(n);
  WedgeVec out;
  RingElem q = Q(), q2 = q * q;
  for (const auto& [w, c] : t) {
    if (i < 1 || i >= static_cast<int>(w.size())) throw std::invalid_argument("tensor_S: index out of range");
    std::size_t a = static_cast<std::size_t>(i - 1), b = a + 1;
    int ma = zpow_of(w[a], n), mb = zpow_of(w[b], n);
    int ea = color_of(w[a], n), eb = color_of(w[b], n);
    Word sw = w;
    sw[a] = index_of(ma, eb, n);
    sw[b] = index_of(mb, ea, n);
    // S on v_ea (x) v_eb
    WedgeVec img;
    if (ea == eb) {
      add_to(img, w, q2);
    } else if (ea < eb) {
      add_to(img, sw, q);
    } else {
      add_to(img, sw, q);
      add_to(img, w, q2 - RingElem(1));
    }
    if (inverse) {
      // S^{-1} = q^{-2} (S - (q^2 - 1)) from (S + 1)(S - q^2) = 0
      add_to(img, w, RingElem(1) - q2);
      img = scaled(img, q2.inv());
    }
    add_to(out, img, c);
  }
  return out;
}

WedgeVec kernel_op(int i, const WedgeVec& t, int n) {
  WedgeVec r = tensor_T(i, t, n);
  add_to(r, tensor_S(i, t, n, true), Q() * Q());
  return r;
}

// --- rule derivation -------------------------------------------------------

TwoSiteBlock two_site_block(int n, int degree, int c1, int c2, int lo) {
  check_n(n);
  if (2 * lo > degree) throw std::invalid_argument("two_site_block: empty window");
  TwoSiteBlock blk;
  std::vector<std::pair<int, int>> colours{{c1, c2}};
  if (c1 != c2) colours.push_back({c2, c1});
  for (int a = lo; a <= degree - lo; ++a)
    for (auto [e1, e2] : colours) blk.basis.push_back({index_of(a, e1, n), index_of(degree - a, e2, n)});
  std::sort(blk.basis.begin(), blk.basis.end());
  std::map<Word, int> pos;
  for (std::size_t j = 0; j < blk.basis.size(); ++j) pos[blk.basis[j]] = static_cast<int>(j);
  std::vector<SparseVec> cols;
  for (const Word& w : blk.basis) {
    std::map<int, RingElem> col;
    for (const auto& [w2, c] : kernel_op(1, WedgeVec{{w, RingElem(1)}}, n)) {
      auto it = pos.find(w2);
      if (it == pos.end()) throw RuleInconsistency("kernel operator leaves the two-site block");
      col[it->second] = c;
    }
    cols.push_back(SparseVec::from_map(col));
  }
  int dim = static_cast<int>(blk.basis.size());
  blk.op = LinearOp::from_columns(dim, std::move(cols));
  return blk;
}

PairRule derive_pair_rule(int n, int k, int l, int extra) {
  check_n(n);
  if (k >= l) throw std::invalid_argument("derive_pair_rule needs k < l");
  int mk = zpow_of(k, n), ml = zpow_of(l, n);
  int lo = std::min(mk, ml) - extra;
  TwoSiteBlock blk = two_site_block(n, mk + ml, color_of(k, n), color_of(l, n), lo);
  int dim = static_cast<int>(blk.basis.size());
  Subspace ker = kernel_basis(blk.op);
  std::vector<SparseVec> cols;
  std::vector<Word> no;
  for (int j = 0; j < dim; ++j) {
    const Word& w = blk.basis[static_cast<std::size_t>(j)];
    if (w[0] > w[1]) {
      no.push_back(w);
      cols.push_back(SparseVec::unit(j));
    }
  }
  for (const auto& v : ker.basis) cols.push_back(v);
  if (static_cast<int>(cols.size()) != dim)
    throw RuleInconsistency("normally ordered pairs and kernel do not complement: " + std::to_string(no.size()) +
                            " + " + std::to_string(ker.dim()) + " != " + std::to_string(dim));
  LinearOp A = LinearOp::from_columns(dim, cols);
  if (rank(A) != dim) throw RuleInconsistency("normally ordered pairs meet the kernel");
  int target = static_cast<int>(std::find(blk.basis.begin(), blk.basis.end(), Word{k, l}) - blk.basis.begin());
  auto x = solve(A, SparseVec::unit(target));
  if (!x) throw RuleInconsistency("pair is not expressible");
  PairRule rule;
  for (const auto& [j, c] : x->entries()) {
    if (j >= static_cast<int>(no.size())) continue;
    const Word& w = no[static_cast<std::size_t>(j)];
    if (!(l >= w[0] && w[1] >= k))
      throw RuleInconsistency("rule for " + word_to_string({k, l}) + " leaves the range: " + word_to_string(w));
    rule.push_back({w[0], w[1], c});
  }
  return rule;
}

const PairRule& StraightenRules::rule(int k, int l) {
  int k0 = color_of(k, n_);
  std::pair<int, int> key{k0, l - k};
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, derive_pair_rule(n_, k0, k0 + (l - k))).first;
  if (k == k0) return it->second;
  // translation by a multiple of n: u_k -> u_{k+n} multiplies by z^{-1}
  thread_local PairRule shifted;
  shifted.clear();
  int t = k - k0;
  for (const auto& term : it->second) shifted.push_back({term.a + t, term.b + t, term.c});
  return shifted;
}

StraightenRules& rules_for(int n) {
  check_n(n);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<StraightenRules>> table;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = table[n];
  if (!slot) slot = std::make_unique<StraightenRules>(n);
  return *slot;
}

// --- straightening ---------------------------------------------------------

namespace {

constexpr int kMaxDepth = 100000;

struct StraightenMemo {
  std::mutex mu;
  std::map<std::pair<int, Word>, WedgeVec> table;
};

StraightenMemo& memo() {
  static StraightenMemo m;
  return m;
}

PairRule rule_copy(int n, int k, int l) { return rules_for(n).rule(k, l); }

WedgeVec straighten_rec(const Word& w, int n, int depth) {
  if (depth > kMaxDepth) throw NonTermination("straightening exceeded the rewrite bound at " + word_to_string(w));
  std::size_t i = 0;
  while (i + 1 < w.size() && w[i] > w[i + 1]) ++i;
  if (i + 1 >= w.size()) return WedgeVec{{w, RingElem(1)}};
  if (w[i] == w[i + 1]) return {};
  auto key = std::make_pair(n, w);
  {
    std::lock_guard<std::mutex> lock(memo().mu);
    auto it = memo().table.find(key);
    if (it != memo().table.end()) return it->second;
  }
  WedgeVec out;
  for (const auto& term : rule_copy(n, w[i], w[i + 1])) {
    Word w2 = w;
    w2[i] = term.a;
    w2[i + 1] = term.b;
    add_to(out, straighten_rec(w2, n, depth + 1), term.c);
  }
  std::lock_guard<std::mutex> lock(memo().mu);
  memo().table.emplace(key, out);
  return out;
}

}  // namespace

WedgeVec straighten(const Word& w, int n) {
  check_n(n);
  return straighten_rec(w, n, 0);
}

WedgeVec straighten(const WedgeVec& v, int n) {
  WedgeVec out;
  for (const auto& [w, c] : v) add_to(out, straighten(w, n), c);
  return out;
}

WedgeVec straighten_random_order(const Word& w, int n, std::mt19937& rng) {
  check_n(n);
  WedgeVec out, cur{{w, RingElem(1)}};
  for (int step = 0; !cur.empty(); ++step) {
    if (step > kMaxDepth) throw NonTermination("randomized straightening exceeded the rewrite bound");
    WedgeVec next;
    for (const auto& [x, c] : cur) {
      std::vector<std::size_t> bad;
      for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (x[i] <= x[i + 1]) bad.push_back(i);
      if (bad.empty()) {
        add_to(out, x, c);
        continue;
      }
      std::size_t i = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)];
      if (x[i] == x[i + 1]) continue;
      for (const auto& term : rule_copy(n, x[i], x[i + 1])) {
        Word x2 = x;
        x2[i] = term.a;
        x2[i + 1] = term.b;
        add_to(next, x2, c * term.c);
      }
    }
    cur = std::move(next);
  }
  return out;
}

// --- semi-infinite wedges --------------------------------------------------

int vacuum_index(int M, int position) { return M - position + 1; }

Word fock_canonical(Word head, int M) {
  while (!head.empty() && head.back() == vacuum_index(M, static_cast<int>(head.size()))) head.pop_back();
  return head;
}

WedgeVec fock_straighten(const Word& head, int M, int n) {
  if (head.empty()) return WedgeVec{{head, RingElem(1)}};
  Word w = head;
  int lo = *std::min_element(w.begin(), w.end());
  // rules keep indices inside [min, max], so a tail below the minimum is inert
  while (vacuum_index(M, static_cast<int>(w.size()) + 1) >= lo) {
    w.push_back(vacuum_index(M, static_cast<int>(w.size()) + 1));
    lo = std::min(lo, w.back());
  }
  WedgeVec out;
  for (const auto& [x, c] : straighten(w, n)) add_to(out, fock_canonical(x, M), c);
  return out;
}

WedgeVec fock_straighten(const WedgeVec& v, int M, int n) {
  WedgeVec out;
  for (const auto& [w, c] : v) add_to(out, fock_straighten(w, M, n), c);
  return out;
}

int wedge_degree(const Word& w, int M, int n) {
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    d += zpow_of(vacuum_index(M, static_cast<int>(i) + 1), n) - zpow_of(w[i], n);
  return d;
}

std::vector<Word> fock_component_basis(int M, int k, int n) {
  check_n(n);
  if (k < 0) throw std::invalid_argument("degree must be non-negative");
  // k_i = k^0_i + d_i with d a partition; every position contributes >= 0
  int max_parts = n * (k + 1), max_part = n * (k + 1);
  std::vector<Word> out;
  Word head;
  std::function<void(int, int)> rec = [&](int prev, int deg) {
    if (deg == k) out.push_back(head);
    int i = static_cast<int>(head.size()) + 1;
    if (i > max_parts) return;
    int k0 = vacuum_index(M, i), m0 = zpow_of(k0, n);
    for (int d = 1; d <= prev; ++d) {
      int c = m0 - zpow_of(k0 + d, n);
      if (deg + c > k) break;
      head.push_back(k0 + d);
      rec(d, deg + c);
      head.pop_back();
    }
  };
  rec(max_part, 0);
  std::sort(out.begin(), out.end());
  return out;
}

int residue(int M, int n) { return ((M % n) + n) % n; }

std::vector<Word> wedge_space_basis(int M, int l, int k, int n) {
  check_n(n);
  if (l < 0 || k < 0) throw std::invalid_argument("wedge_space_basis: negative l or k");
  int N = residue(M, n) + n * l;
  std::vector<int> m0(static_cast<std::size_t>(N));
  for (int i = 1; i <= N; ++i) m0[static_cast<std::size_t>(i - 1)] = zpow_of(vacuum_index(M, i), n);
  std::vector<Word> out;
  std::vector<int> m(static_cast<std::size_t>(N));
  // colourings: inside a run of equal m, colours strictly decrease
  std::function<void(std::size_t, Word&)> colour = [&](std::size_t i, Word& w) {
    if (i == w.size()) {
      out.push_back(w);
      return;
    }
    bool run = i > 0 && m[i] == m[i - 1];
    int hi = run ? color_of(w[i - 1], n) - 1 : n;
    for (int e = hi; e >= 1; --e) {
      w[i] = index_of(m[i], e, n);
      colour(i + 1, w);
    }
  };
  // choose m from the right: non-decreasing, at most n equal, m_N <= m0_N
  std::function<void(int, int, int, int)> rec = [&](int i, int deg, int upper, int run) {
    if (i == 0) {
      if (deg == k) {
        Word w(static_cast<std::size_t>(N));
        colour(0, w);
      }
      return;
    }
    std::size_t ix = static_cast<std::size_t>(i - 1);
    int cap = std::min(upper, m0[ix]);
    for (int v = cap; v >= m0[ix] - (k - deg); --v) {
      int r = (i < N && v == upper) ? run + 1 : 1;
      if (r > n) continue;
      m[ix] = v;
      rec(i - 1, deg + m0[ix] - v, v, r);
    }
  };
  if (N == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  rec(N, 0, m0[static_cast<std::size_t>(N - 1)], 0);
  std::sort(out.begin(), out.end());
  return out;
}

WedgeVec rho_bar(const WedgeVec& w, int M, int l, int n) {
  int N = residue(M, n) + n * l;
  WedgeVec out;
  for (const auto& [x, c] : w) {
    if (static_cast<int>(x.size()) != N) throw std::invalid_argument("rho_bar: wedge length must be s + n l");
    if (!is_normally_ordered(x) || (N > 0 && x.back() <= vacuum_index(M, N + 1)))
      throw std::invalid_argument("rho_bar: input must be a normally ordered wedge of V_M^{s+nl}");
    add_to(out, fock_canonical(x, M), c);
  }
  return out;
}

WedgeVec rho_bar_inv(const WedgeVec& v, int M, int l, int n) {
  int N = residue(M, n) + n * l;
  WedgeVec out;
  for (const auto& [h, c] : v) {
    if (static_cast<int>(h.size()) > N)
      throw TailMismatch("head " + word_to_string(h) + " differs from the vacuum beyond position " +
                         std::to_string(N));
    Word x = h;
    while (static_cast<int>(x.size()) < N) x.push_back(vacuum_index(M, static_cast<int>(x.size()) + 1));
    add_to(out, x, c);
  }
  return out;
}

WedgeVec rho_bar_lm(const WedgeVec& w, int M, int l, int m, int n) {
  if (m < l) throw std::invalid_argument("rho_bar_lm needs m >= l");
  int s = residue(M, n), N1 = s + n * m;
  WedgeVec out;
  for (const auto& [x, c] : w) {
    if (static_cast<int>(x.size()) != s + n * l) throw std::invalid_argument("rho_bar_lm: wedge length must be s + n l");
    Word y = x;
    while (static_cast<int>(y.size()) < N1) y.push_back(vacuum_index(M, static_cast<int>(y.size()) + 1));
    add_to(out, y, c);
  }
  return out;
}

// --- Heisenberg ------------------------------------------------------------

namespace {

WedgeVec power_sum_truncated(int a, const Word& head, int N, int M, int n) {
  Word w = head;
  while (static_cast<int>(w.size()) < N) w.push_back(vacuum_index(M, static_cast<int>(w.size()) + 1));
  WedgeVec out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word x = w;
    x[i] -= n * a;
    add_to(out, fock_straighten(x, M, n), RingElem(1));
  }
  return out;
}

}  // namespace

WedgeVec heisenberg_B(int a, const WedgeVec& v, int M, int n) {
  check_n(n);
  if (a == 0) throw std::invalid_argument("heisenberg_B needs a != 0");
  constexpr int kMaxSteps = 24;
  WedgeVec out;
  for (const auto& [h, c] : v) {
    int k = wedge_degree(h, M, n);
    int N = std::max(static_cast<int>(h.size()), residue(M, n) + n * (k + 1));
    WedgeVec prev = power_sum_truncated(a, h, N, M, n);
    bool stable = false;
    for (int step = 0; step < kMaxSteps && !stable; ++step) {
      N += n;
      WedgeVec cur = power_sum_truncated(a, h, N, M, n);
      stable = cur == prev;
      prev = std::move(cur);
    }
    if (!stable) throw NoStabilization("B_" + std::to_string(a) + " did not stabilize on " + word_to_string(h));
    add_to(out, prev, c);
  }
  return out;
}

SparseVec coordinates(const WedgeVec& v, const std::vector<Word>& basis) {
  std::map<int, RingElem> m;
  if (std::is_sorted(basis.begin(), basis.end())) {
    for (const auto& [w, c] : v) {
      auto it = std::lower_bound(basis.begin(), basis.end(), w);
      if (it == basis.end() || *it != w) throw std::invalid_argument("vector leaves the basis: " + word_to_string(w));
      m[static_cast<int>(it - basis.begin())] = c;
    }
    return SparseVec::from_map(m);
  }
  for (const auto& [w, c] : v) {
    auto it = std::find(basis.begin(), basis.end(), w);
    if (it == basis.end()) throw std::invalid_argument("vector leaves the basis: " + word_to_string(w));
    m[static_cast<int>(it - basis.begin())] = c;
  }
  return SparseVec::from_map(m);
}

WedgeVec from_coordinates(const SparseVec& x, const std::vector<Word>& basis) {
  WedgeVec out;
  for (const auto& [j, c] : x.entries()) add_to(out, basis.at(static_cast<std::size_t>(j)), c);
  return out;
}

Subspace heisenberg_ideal_basis(int M, int k, int n) {
  std::vector<Word> basis = fock_component_basis(M, k, n);
  std::vector<SparseVec> gens;
  for (int a = 1; a <= k; ++a)
    for (const Word& w : fock_component_basis(M, k - a, n))
      gens.push_back(coordinates(heisenberg_B(-a, WedgeVec{{w, RingElem(1)}}, M, n), basis));
  return span(static_cast<int>(basis.size()), gens);
}

}  // namespace qfock
