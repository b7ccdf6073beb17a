#include "qfock/decomp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace qfock {

namespace {

RingElem Q() { return RingElem::q(); }

void check_n(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
}

std::string lambda_string(const std::vector<int>& l) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
  os << ")";
  return os.str();
}

LinearOp kron(const LinearOp& a, const LinearOp& b) {
  const int rb = b.rows(), cb = b.cols();
  std::vector<SparseVec> cols;
  cols.reserve(static_cast<std::size_t>(a.cols() * cb));
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < cb; ++j) {
      SparseVec v;
      for (const auto& [r, x] : a.column(i).entries())
        for (const auto& [s, y] : b.column(j).entries()) v.push_back_unchecked(r * rb + s, x * y);
      cols.push_back(std::move(v));
    }
  return LinearOp::from_columns(a.rows() * rb, std::move(cols));
}

// W_m(b) on the basis w_0..w_m with K_1 w_j = q^{m-2j} w_j.
LinearOp w_generator(const Generator& g, const Sl2Factor& f) {
  const int d = f.n + 1;
  std::vector<SparseVec> cols(static_cast<std::size_t>(d));
  auto raise = [&](int j) { return j >= 1 ? SparseVec::unit(j - 1, q_int(f.n - j + 1)) : SparseVec(); };
  auto lower = [&](int j) { return j < f.n ? SparseVec::unit(j + 1, q_int(j + 1)) : SparseVec(); };
  for (int j = 0; j < d; ++j) {
    int h = f.n - 2 * j;
    SparseVec c;
    switch (g.kind) {
      case GenKind::K: c = SparseVec::unit(j, Q().pow(g.index == 1 ? h : -h)); break;
      case GenKind::Kinv: c = SparseVec::unit(j, Q().pow(g.index == 1 ? -h : h)); break;
      case GenKind::E: c = g.index == 1 ? raise(j) : lower(j).scaled(Q().pow(f.b)); break;
      case GenKind::F: c = g.index == 1 ? lower(j) : raise(j).scaled(Q().pow(-f.b)); break;
    }
    cols[static_cast<std::size_t>(j)] = std::move(c);
  }
  return LinearOp::from_columns(d, std::move(cols));
}

}  // namespace

std::vector<int> vacuum_exponents(int M, int N, int n) {
  std::vector<int> m0;
  for (int i = 1; i <= N; ++i) m0.push_back(zpow_of(vacuum_index(M, i), n));
  return m0;
}

std::vector<std::vector<int>> tilde_M_set(int n, int s, int k, std::optional<int> M) {
  check_n(n);
  if (s < 0 || s >= n || k < 0) throw std::invalid_argument("tilde_M_set requires 0 <= s < n and k >= 0");
  const int m = M.value_or(s);
  if (residue(m, n) != s) throw std::invalid_argument("M does not have residue s");
  const int N = s + n * k;
  std::vector<std::vector<int>> out;
  if (N == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  std::vector<int> m0 = vacuum_exponents(m, N, n);
  long target = 0;
  for (int x : m0) target += x;
  target -= k;
  // runs of length 1..n with values top, top - 1, ...
  std::vector<int> lam;
  std::function<void(int, int)> rec = [&](int left, int value) {
    if (left == 0) {
      long sum = 0;
      for (int x : lam) sum += x;
      if (sum == target) out.push_back(lam);
      return;
    }
    for (int r = 1; r <= std::min(n, left); ++r) {
      lam.insert(lam.end(), static_cast<std::size_t>(r), value);
      rec(left - r, value - 1);
      lam.resize(lam.size() - static_cast<std::size_t>(r));
    }
  };
  const int hi = m0.back();
  for (int top = hi; static_cast<long>(top) * N >= target; --top) rec(N, top);
  std::sort(out.begin(), out.end());
  return out;
}

SparseVec Quotient::project(const WedgeVec& v) const {
  SparseVec r = ideal.reduce(coordinates(v, fock_basis));
  std::map<int, RingElem> m;
  for (const auto& [i, c] : r.entries()) {
    int slot = slots[static_cast<std::size_t>(i)];
    if (slot < 0) throw std::logic_error("reduced vector has a pivot coordinate");
    m[slot] = c;
  }
  return SparseVec::from_map(m);
}

Quotient quotient_basis(int n, int M, int k) {
  check_n(n);
  Quotient q;
  q.n = n;
  q.M = M;
  q.k = k;
  q.fock_basis = fock_component_basis(M, k, n);
  for (const auto& v : heisenberg_ideal_basis(M, k, n).basis) q.ideal.insert(v);
  int next = 0;
  for (std::size_t i = 0; i < q.fock_basis.size(); ++i) {
    if (q.ideal.is_pivot(static_cast<int>(i))) {
      q.slots.push_back(-1);
    } else {
      q.slots.push_back(next++);
      q.basis.push_back(q.fock_basis[i]);
    }
  }
  return q;
}

BorderStrip strip_representative(const BorderStrip& theta, int n) {
  BorderStrip t = theta;
  while (!t.empty() && t.back() == n) t.pop_back();
  return t;
}

WedgeVec append_vacuum(const WedgeVec& v, int M, int n) { return fock_straighten(v, M, n); }

WedgeVec min_tensor(const std::vector<int>& lambda, const Word& colours, int n) {
  WedgeVec t;
  if (lambda.empty()) return WedgeVec{{Word{}, RingElem(1)}};
  PolyVector phi = macdonald_phi_p1(CompositionLabel::min(lambda));
  for (const auto& [m, c] : phi.terms()) {
    Word w(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) w[j] = index_of(m[j], colours[j], n);
    add_to(t, w, c);
  }
  return t;
}

DecompReport psi_k_check(int n, int M, int k, const DecompOptions& opt) {
  check_n(n);
  DecompReport rep;
  rep.n = n;
  rep.M = M;
  rep.k = k;
  const int s = residue(M, n), N = s + n * k;
  Quotient quo = quotient_basis(n, M, k);
  rep.quotient_dim = quo.dim();
  const auto words = colour_words(n, N);
  CharPoly full;
  for (const Word& w : words) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int c : w) ++e[static_cast<std::size_t>(c - 1)];
    ++full[e];
  }
  Echelon image;
  int dim_sum = 0;
  const auto u0f = ActionContext::u0_fock(n, M, PMode::one);
  const auto u0n = ActionContext::u0_n(n, N, PMode::one);
  std::vector<Generator> gens;
  for (int i = 0; i < n; ++i)
    for (GenKind g : {GenKind::E, GenKind::F, GenKind::K}) gens.push_back({g, i});

  for (const auto& lambda : tilde_M_set(n, s, k, M)) {
    DecompEntry e;
    e.lambda = lambda;
    e.kernel_strip = lambda_to_strip(lambda);
    e.theta = strip_representative(BorderStrip(e.kernel_strip.rbegin(), e.kernel_strip.rend()), n);
    e.grade = strip_grade(e.theta, n, s);
    Subspace v = v_lambda_subspace(lambda, n);
    e.dim = static_cast<int>(words.size()) - v.dim();
    e.character = full;
    for (const auto& x : v.basis) --e.character[tensor_weight(x, n, N)];
    for (auto it = e.character.begin(); it != e.character.end();)
      it = it->second == 0 ? e.character.erase(it) : std::next(it);
    dim_sum += e.dim;
    if (e.grade != k) {
      rep.grades_match = false;
      rep.details.push_back("strip " + strip_to_string(e.theta) + " has grade " + std::to_string(e.grade));
    }

    std::vector<WedgeVec> tensors;
    std::vector<SparseVec> images;
    for (const Word& w : words) {
      tensors.push_back(min_tensor(lambda, w, n));
      images.push_back(quo.project(append_vacuum(tensors.back(), M, n)));
      image.insert(images.back());
    }
    for (const auto& x : v.basis) {
      SparseVec acc;
      for (const auto& [i, c] : x.entries()) acc.axpy(c, images[static_cast<std::size_t>(i)]);
      if (!acc.is_zero()) {
        rep.well_defined = false;
        rep.details.push_back("V^lambda vector survives for lambda = " + lambda_string(lambda));
        break;
      }
    }
    if (opt.intertwining)
      for (std::size_t i = 0; i < words.size() && rep.intertwines; ++i)
        for (const auto& g : gens) {
          SparseVec lhs = quo.project(act(g, u0f, append_vacuum(tensors[i], M, n)));
          SparseVec rhs = quo.project(append_vacuum(act_tensor(g, u0n, tensors[i]), M, n));
          if (lhs != rhs) {
            rep.intertwines = false;
            rep.details.push_back(generator_name(g) + " fails to commute with psi_k at lambda = " +
                                  lambda_string(lambda) + ", word " + word_to_string(words[i]));
            break;
          }
        }
    rep.entries.push_back(std::move(e));
  }
  rep.image_rank = image.rank();
  rep.surjective = rep.image_rank == rep.quotient_dim;
  if (!rep.surjective)
    rep.details.push_back("image rank " + std::to_string(rep.image_rank) + " < quotient dim " +
                          std::to_string(rep.quotient_dim));
  rep.dimension_match = dim_sum == rep.quotient_dim;
  if (!rep.dimension_match)
    rep.details.push_back("domain dim " + std::to_string(dim_sum) + " != quotient dim " +
                          std::to_string(rep.quotient_dim));

  std::vector<BorderStrip> want, got;
  for (const auto& th : border_strips(n, s, k))
    if (strip_grade(th, n, s) == k) want.push_back(th);
  for (const auto& e : rep.entries) got.push_back(e.theta);
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  rep.strips_match = want == got;
  if (!rep.strips_match) rep.details.push_back("strip multiset differs from the border-strip list");
  return rep;
}

std::vector<int> relative_weight(const Word& head, int M, int n) {
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  // |M> = u_M ^ ... ^ u_{M-s+1} ^ |M - s>
  for (int i = M - residue(M, n) + 1; i <= M; ++i) ++x[static_cast<std::size_t>(color_of(i, n) - 1)];
  for (std::size_t i = 0; i < head.size(); ++i) {
    ++x[static_cast<std::size_t>(color_of(head[i], n) - 1)];
    --x[static_cast<std::size_t>(color_of(vacuum_index(M, static_cast<int>(i) + 1), n) - 1)];
  }
  return reduce_weight(x);
}

GradedChar quotient_character(int n, int M, int cutoff) {
  GradedChar g;
  for (int d = 0; d <= cutoff; ++d) {
    Quotient quo = quotient_basis(n, M, d);
    for (const Word& w : quo.basis) ++g[d][relative_weight(w, M, n)];
  }
  return g;
}

CharIdentityReport character_identity_check(int n, int k_hw, int cutoff) {
  check_n(n);
  if (k_hw < 0 || k_hw >= n) throw std::invalid_argument("k_hw must lie in [0, n)");
  CharIdentityReport r;
  r.lhs = quotient_character(n, k_hw, cutoff);
  for (const auto& [grade, c] : char_level1(n, k_hw, cutoff)) r.rhs[grade] = reduce_weights(c);
  if (r.lhs.empty() || r.rhs.empty()) {
    r.match = r.lhs.empty() && r.rhs.empty();
    return r;
  }
  r.offset = r.lhs.begin()->first - r.rhs.begin()->first;
  for (int d = r.lhs.begin()->first; d <= cutoff; ++d) {
    auto l = r.lhs.find(d);
    auto h = r.rhs.find(d - r.offset);
    CharPoly a = l == r.lhs.end() ? CharPoly{} : l->second;
    CharPoly b = h == r.rhs.end() ? CharPoly{} : h->second;
    if (a != b) {
      r.match = false;
      r.bad_grade = d;
      break;
    }
  }
  return r;
}

std::vector<Sl2Factor> sl2_factorize(const BorderStrip& theta) {
  for (int m : theta)
    if (m != 1 && m != 2) throw NotSl2Strip("strip " + strip_to_string(theta) + " has a column of height " +
                                            std::to_string(m));
  const int r = static_cast<int>(theta.size());
  auto m = [&](int i) { return i <= 0 || i > r ? 2 : theta[static_cast<std::size_t>(i - 1)]; };
  std::vector<Sl2Factor> out;
  for (int i = 1; i <= r; ++i) {
    if (m(i) != 1 || m(i - 1) != 2) continue;
    int len = 0, before = 0;
    while (m(i + len) == 1) ++len;
    for (int j = 1; j < i; ++j) before += m(j);
    // the run carries labels 2 before, ..., 2 before + 2 (len - 1)
    out.push_back({len, 2 * before + len - 1});
  }
  return out;
}

LinearOp sl2_generator(const Generator& g, const std::vector<Sl2Factor>& f) {
  if (g.index < 0 || g.index > 1) throw std::invalid_argument("sl2 generators have index 0 or 1");
  if (f.empty()) {
    bool k = g.kind == GenKind::K || g.kind == GenKind::Kinv;
    return k ? LinearOp::identity(1) : LinearOp(1, 1);
  }
  LinearOp a = w_generator(g, f.front());
  if (f.size() == 1) return a;
  std::vector<Sl2Factor> rest(f.begin() + 1, f.end());
  LinearOp b = sl2_generator(g, rest);
  LinearOp ia = LinearOp::identity(a.rows()), ib = LinearOp::identity(b.rows());
  switch (g.kind) {
    case GenKind::K:
    case GenKind::Kinv: return kron(a, b);
    case GenKind::E: return kron(a, sl2_generator({GenKind::K, g.index}, rest)) + kron(ia, b);
    case GenKind::F: return kron(a, ib) + kron(w_generator({GenKind::Kinv, g.index}, f.front()), b);
  }
  return a;
}

int sl2_dim(const std::vector<Sl2Factor>& f) {
  int d = 1;
  for (const auto& x : f) d *= x.n + 1;
  return d;
}

CharPoly sl2_character(const std::vector<Sl2Factor>& f) {
  CharPoly c{{{0, 0}, 1}};
  for (const auto& x : f) {
    CharPoly next;
    for (const auto& [e, m] : c)
      for (int j = 0; j <= x.n; ++j) next[{e[0] + x.n - j, e[1] + j}] += m;
    c = next;
  }
  return reduce_weights(c);
}

LinearOp strip_generator(const Generator& g, const BorderStrip& theta, int n, const Subspace& image) {
  const int N = strip_size(theta);
  LinearOp a = generator_matrix(g, ActionContext::eval(n, decomposition_labels(theta)), colour_words(n, N));
  Echelon ech(true);
  for (const auto& v : image.basis) ech.insert(v);
  std::vector<SparseVec> cols;
  for (const auto& v : image.basis) {
    SparseVec combo;
    if (!ech.reduce_tracked(a.apply(v), combo).is_zero())
      throw std::logic_error("image of the strip product is not invariant under " + generator_name(g));
    cols.push_back(combo);
  }
  return LinearOp::from_columns(image.dim(), std::move(cols));
}

IntertwinerResult sl2_intertwiner(const BorderStrip& theta) { return sl2_intertwiner(theta, sl2_factorize(theta)); }

IntertwinerResult sl2_intertwiner(const BorderStrip& theta, const std::vector<Sl2Factor>& factors) {
  Subspace image = image_basis(strip_product(decomposition_labels(theta), StripVariant::R, 2));
  const int dA = image.dim(), dB = sl2_dim(factors);
  std::vector<Generator> gens;
  for (int i = 0; i <= 1; ++i)
    for (GenKind k : {GenKind::E, GenKind::F, GenKind::K}) gens.push_back({k, i});
  // unknown X_{ij} (X maps B to A) has index i dB + j; equation rows (g, i, j)
  std::vector<std::map<int, RingElem>> cols(static_cast<std::size_t>(dA * dB));
  int g_off = 0;
  for (const auto& g : gens) {
    LinearOp ga = strip_generator(g, theta, 2, image), gb = sl2_generator(g, factors);
    auto row = [&](int i, int j) { return g_off + i * dB + j; };
    for (int j = 0; j < dB; ++j)
      for (const auto& [k, val] : gb.column(j).entries())
        for (int i = 0; i < dA; ++i) cols[static_cast<std::size_t>(i * dB + k)][row(i, j)] += val;
    for (int k = 0; k < dA; ++k)
      for (const auto& [i, val] : ga.column(k).entries())
        for (int j = 0; j < dB; ++j) cols[static_cast<std::size_t>(k * dB + j)][row(i, j)] -= val;
    g_off += dA * dB;
  }
  std::vector<SparseVec> sv;
  for (auto& c : cols) {
    for (auto it = c.begin(); it != c.end();) it = it->second.is_zero() ? c.erase(it) : std::next(it);
    sv.push_back(SparseVec::from_map(c));
  }
  Subspace ker = kernel_basis(LinearOp::from_columns(g_off, std::move(sv)));
  IntertwinerResult res;
  res.kernel_dim = ker.dim();
  if (ker.dim() == 0 || dA != dB) return res;
  SparseVec x;
  for (int t = 0; t < ker.dim(); ++t) x.axpy(RingElem(t + 1), ker.basis[static_cast<std::size_t>(t)]);
  std::vector<std::map<int, RingElem>> xc(static_cast<std::size_t>(dB));
  for (const auto& [u, c] : x.entries()) xc[static_cast<std::size_t>(u % dB)][u / dB] = c;
  std::vector<SparseVec> xs;
  for (const auto& c : xc) xs.push_back(SparseVec::from_map(c));
  res.invertible = rank(LinearOp::from_columns(dA, std::move(xs))) == dA;
  return res;
}

}  // namespace qfock
