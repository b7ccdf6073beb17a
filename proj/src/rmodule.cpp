#include "qfock/rmodule.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace qfock {

namespace {

RingElem Q() { return RingElem::q(); }

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_sites(int a, int b, int N) {
  if (a < 1 || b < 1 || a > N || b > N || a == b)
    throw std::invalid_argument("bad site pair (" + std::to_string(a) + "," + std::to_string(b) + ") for N = " +
                                std::to_string(N));
}

// Two-site matrices on C^n (x) C^n, pair index (e1 - 1) n + (e2 - 1).
LinearOp hecke_local(int n) {
  const int d = n * n;
  std::vector<SparseVec> cols(static_cast<std::size_t>(d));
  for (int e1 = 1; e1 <= n; ++e1)
    for (int e2 = 1; e2 <= n; ++e2) {
      int i = (e1 - 1) * n + (e2 - 1), sw = (e2 - 1) * n + (e1 - 1);
      std::map<int, RingElem> m;
      if (e1 == e2) {
        m[i] = Q() * Q();
      } else {
        m[sw] = Q();
        if (e1 > e2) m[i] = Q() * Q() - RingElem(1);
      }
      cols[static_cast<std::size_t>(i)] = SparseVec::from_map(m);
    }
  return LinearOp::from_columns(d, std::move(cols));
}

LinearOp S_local(int n, bool inverse, SNorm norm) {
  LinearOp h = hecke_local(n);
  LinearOp id = LinearOp::identity(n * n);
  // Sh^{-1} = q^-2 (Sh - (q^2 - 1))
  LinearOp hinv = (h - id.scaled(Q() * Q() - RingElem(1))).scaled(Q().pow(-2));
  if (norm == SNorm::minus_q_hecke_inv) return inverse ? h.scaled(-Q().inv()) : hinv.scaled(-Q());
  return inverse ? hinv.scaled(Q()) : h.scaled(Q().inv());
}

LinearOp P_local(int n) {
  std::vector<SparseVec> cols;
  for (int e1 = 0; e1 < n; ++e1)
    for (int e2 = 0; e2 < n; ++e2) cols.push_back(SparseVec::unit(e2 * n + e1));
  return LinearOp::from_columns(n * n, std::move(cols));
}

LinearOp Rcheck_local(const RingElem& x, int n, SNorm norm) {
  if (x == RingElem(1)) throw SingularSpectralPoint("R-matrix evaluated at x = 1");
  return (S_local(n, true, norm).scaled(x) - S_local(n, false, norm)).scaled((x - RingElem(1)).inv());
}

// Cached local matrices for Rcheck(q^e) and R(q^e) = Rcheck(q^e) P.
const LinearOp& cached_local(int n, int e, bool check, SNorm norm) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, bool, int>, LinearOp> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, e, check, static_cast<int>(norm));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (e == 0) throw SingularSpectralPoint("R-matrix evaluated at x = q^0 = 1");
  LinearOp r = Rcheck_local(Q().pow(e), n, norm);
  if (!check) r = r * P_local(n);
  return cache.emplace(key, std::move(r)).first->second;
}

// Applies a two-site matrix to sites a, b of a vector in (C^n)^{(x) N}.
SparseVec apply_local(const LinearOp& loc, int a, int b, int n, int N, const SparseVec& v) {
  const int pa = ipow(n, N - a), pb = ipow(n, N - b);
  std::map<int, RingElem> out;
  for (const auto& [idx, c] : v.entries()) {
    int da = (idx / pa) % n, db = (idx / pb) % n;
    int base = idx - da * pa - db * pb;
    for (const auto& [j, m] : loc.column(da * n + db).entries()) {
      int t = base + (j / n) * pa + (j % n) * pb;
      RingElem& slot = out[t];
      slot += c * m;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return SparseVec::from_map(out);
}

LinearOp embed(const LinearOp& loc, int a, int b, int n, int N) {
  check_sites(a, b, N);
  const int d = tensor_dim(n, N);
  std::vector<SparseVec> cols;
  cols.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) cols.push_back(apply_local(loc, a, b, n, N, SparseVec::unit(i)));
  return LinearOp::from_columns(d, std::move(cols));
}

}  // namespace

ContentLabels content_labels(const BorderStrip& theta, int a_base) {
  ContentLabels a;
  for (const Box& b : strip_to_skew(theta).boxes()) a.push_back(-2 * b.x + 2 * b.y + a_base);
  return a;
}

ContentLabels decomposition_labels(const BorderStrip& theta) {
  return content_labels(theta, 2 * (static_cast<int>(theta.size()) - 1));
}

int colour_word_index(const Word& w, int n) {
  int idx = 0;
  for (int e : w) {
    if (e < 1 || e > n) throw std::invalid_argument("colour out of range in " + word_to_string(w));
    idx = idx * n + (e - 1);
  }
  return idx;
}

int tensor_dim(int n, int N) { return ipow(n, N); }

LinearOp S_op(int a, int b, int n, int N, bool inverse, SNorm norm) {
  return embed(S_local(n, inverse, norm), a, b, n, N);
}

LinearOp P_op(int a, int b, int n, int N) { return embed(P_local(n), a, b, n, N); }

LinearOp Rcheck_op(int a, int b, const RingElem& x, int n, int N, SNorm norm) {
  return embed(Rcheck_local(x, n, norm), a, b, n, N);
}

LinearOp R_op(int a, int b, const RingElem& x, int n, int N, SNorm norm) {
  return embed(Rcheck_local(x, n, norm) * P_local(n), a, b, n, N);
}

std::vector<Factor> strip_factors(const ContentLabels& labels, StripVariant v) {
  const int N = static_cast<int>(labels.size());
  // (i, j) stands to the right of (i', j') if i < i' or (i = i' and j < j')
  std::vector<Factor> f;
  for (int i = N - 1; i >= 1; --i)
    for (int j = N; j > i; --j) {
      int e = labels[static_cast<std::size_t>(i - 1)] - labels[static_cast<std::size_t>(j - 1)];
      if (e == 0)
        throw SingularSpectralPoint("equal labels at boxes " + std::to_string(i) + " and " + std::to_string(j));
      switch (v) {
        case StripVariant::R: f.push_back({i, j, e, false}); break;
        case StripVariant::Rbar: f.push_back({j, i, e, false}); break;
        case StripVariant::Rcheck: f.push_back({N + i - j, N + i - j + 1, e, true}); break;
      }
    }
  return f;
}

LinearOp factor_product(const std::vector<Factor>& f, int n, int N, SNorm norm) {
  const int d = tensor_dim(n, N);
  std::vector<SparseVec> cols;
  cols.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    SparseVec v = SparseVec::unit(i);
    for (auto it = f.rbegin(); it != f.rend() && !v.is_zero(); ++it) {
      check_sites(it->a, it->b, N);
      v = apply_local(cached_local(n, it->e, it->check, norm), it->a, it->b, n, N, v);
    }
    cols.push_back(std::move(v));
  }
  return LinearOp::from_columns(d, std::move(cols));
}

LinearOp strip_product(const BorderStrip& theta, int a_base, StripVariant v, int n, SNorm norm) {
  return strip_product(content_labels(theta, a_base), v, n, norm);
}

LinearOp strip_product(const ContentLabels& labels, StripVariant v, int n, SNorm norm) {
  return factor_product(strip_factors(labels, v), n, static_cast<int>(labels.size()), norm);
}

std::vector<int> tensor_weight(const SparseVec& v, int n, int N) {
  if (v.is_zero()) throw std::invalid_argument("zero vector has no weight");
  auto counts = [&](int idx) {
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < N; ++s, idx /= n) ++w[static_cast<std::size_t>(idx % n)];
    return w;
  };
  std::vector<int> w = counts(v.entries().front().first);
  for (const auto& [i, c] : v.entries())
    if (counts(i) != w) throw std::invalid_argument("vector is not weight-homogeneous");
  return w;
}

CharPoly subspace_character(const Subspace& s, int n, int N) {
  CharPoly c;
  for (const auto& v : s.basis) ++c[tensor_weight(v, n, N)];
  return c;
}

LambdaBlocks lambda_blocks(std::vector<int> lambda) {
  std::sort(lambda.begin(), lambda.end());
  LambdaBlocks b;
  b.N = static_cast<int>(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i > 0 && lambda[i] - lambda[i - 1] > 1)
      throw InvalidLambdaClass("consecutive entries of lambda differ by more than 1");
    if (i == 0 || lambda[i] != lambda[i - 1]) {
      b.l.push_back(static_cast<int>(i));
      b.r.push_back(0);
    }
    ++b.r.back();
  }
  return b;
}

std::vector<Factor> cross_block_factors(const LambdaBlocks& b, int j) {
  const int rj = b.r[static_cast<std::size_t>(j - 1)], rn = b.r[static_cast<std::size_t>(j)];
  const int lj = b.l[static_cast<std::size_t>(j - 1)];
  // (a, b) stands to the right of (a', b') if a < a' or (a = a' and b < b')
  std::vector<Factor> f;
  for (int a = rj; a >= 1; --a)
    for (int c = rn - 1; c >= 0; --c) f.push_back({lj + a, lj + rj + rn - c, -2 * (a + c), false});
  return f;
}

Subspace v_lambda_subspace(const std::vector<int>& lambda, int n, SNorm norm) {
  LambdaBlocks b = lambda_blocks(lambda);
  const int N = b.N, d = tensor_dim(n, N);
  std::vector<SparseVec> gens;
  auto add_image = [&](const std::vector<Factor>& f) {
    for (const auto& v : image_basis(factor_product(f, n, N, norm)).basis) gens.push_back(v);
  };
  for (std::size_t j = 0; j < b.r.size(); ++j)
    for (int i = b.l[j] + 1; i < b.l[j] + b.r[j]; ++i) add_image({{i, i + 1, 2, false}});
  for (int j = 1; j < static_cast<int>(b.r.size()); ++j) add_image(cross_block_factors(b, j));
  return span(d, gens);
}

BorderStrip lambda_to_strip(const std::vector<int>& lambda) {
  LambdaBlocks b = lambda_blocks(lambda);
  return BorderStrip(b.r.rbegin(), b.r.rend());
}

std::vector<int> strip_to_lambda(const BorderStrip& theta, int top) {
  std::vector<int> lambda;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (theta[i] < 1) throw InvalidLambdaClass("strip columns must be positive");
    lambda.insert(lambda.end(), static_cast<std::size_t>(theta[i]), top - static_cast<int>(i));
  }
  return lambda;
}

}  // namespace qfock
