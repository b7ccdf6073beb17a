#include "qfock/qaffine.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace qfock {

namespace {

RingElem Q() { return RingElem::q(); }

// E_i moves colour b to colour a.
std::pair<int, int> colour_pair(int i, int n) { return i == 0 ? std::make_pair(n, 1) : std::make_pair(i, i + 1); }

// Exponent of q in K^i on a single site of colour e.
int k_exponent(int i, int e, int n) {
  auto [a, b] = colour_pair(i, n);
  return (e == a ? 1 : 0) - (e == b ? 1 : 0);
}

void check_generator(const Generator& g, int n) {
  if (g.index < 0 || g.index >= n) throw std::invalid_argument("generator index out of range: " + generator_name(g));
}

// Cherednik operators on monomials, cached.
const PolyVector& cherednik_monomial(int j, bool inverse, PMode mode, const Exponent& m) {
  static std::mutex mu;
  static std::map<std::tuple<int, bool, int, Exponent>, PolyVector> cache;
  auto key = std::make_tuple(j, inverse, static_cast<int>(mode), m);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  PolyVector f = PolyVector::monomial(m);
  PolyVector r = inverse ? cherednik_Y_inv(j, f, mode) : cherednik_Y(j, f, mode);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(r)).first->second;
}

bool residue_matches(int i, int Mp, int n) { return residue(Mp, n) == i; }

}  // namespace

std::string generator_name(const Generator& g) {
  switch (g.kind) {
    case GenKind::E:
      return "E" + std::to_string(g.index);
    case GenKind::F:
      return "F" + std::to_string(g.index);
    case GenKind::K:
      return "K" + std::to_string(g.index);
    case GenKind::Kinv:
      return "K" + std::to_string(g.index) + "^-1";
  }
  return "?";
}

ActionContext ActionContext::u0_n(int n, int N, PMode p) {
  ActionContext c;
  c.kind = ActionKind::U0_N;
  c.n = n;
  c.N = N;
  c.p = p;
  return c;
}

ActionContext ActionContext::u1_n(int n, int N) {
  ActionContext c;
  c.kind = ActionKind::U1_N;
  c.n = n;
  c.N = N;
  return c;
}

ActionContext ActionContext::u0_fock(int n, int M, PMode p) {
  ActionContext c;
  c.kind = ActionKind::U0_Fock;
  c.n = n;
  c.M = M;
  c.p = p;
  return c;
}

ActionContext ActionContext::u1_fock(int n, int M) {
  ActionContext c;
  c.kind = ActionKind::U1_Fock;
  c.n = n;
  c.M = M;
  return c;
}

ActionContext ActionContext::eval(int n, std::vector<int> a) {
  ActionContext c;
  c.kind = ActionKind::Eval;
  c.n = n;
  c.N = static_cast<int>(a.size());
  c.a = std::move(a);
  return c;
}

std::string ActionContext::describe() const {
  std::ostringstream os;
  switch (kind) {
    case ActionKind::U0_N:
      os << "U0 on wedge^" << N << " (p " << (p == PMode::one ? "= 1" : "generic") << ")";
      break;
    case ActionKind::U1_N:
      os << "U1 on wedge^" << N;
      break;
    case ActionKind::U0_Fock:
      os << "U0 on F_" << M << " (p " << (p == PMode::one ? "= 1" : "generic") << ")";
      break;
    case ActionKind::U1_Fock:
      os << "U1 on F_" << M;
      break;
    case ActionKind::Eval:
      os << "evaluation module a=(";
      for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
      os << ")";
      break;
  }
  os << ", n=" << n;
  return os.str();
}

WedgeVec act_tensor(const Generator& g, const ActionContext& ctx, const WedgeVec& v) {
  const int n = ctx.n;
  check_generator(g, n);
  if (ctx.is_fock()) throw std::invalid_argument("act_tensor needs a finite context");
  const bool colour_words = ctx.kind == ActionKind::Eval;
  if (colour_words && static_cast<int>(ctx.a.size()) != ctx.N)
    throw DimensionMismatch("evaluation parameters must have length N");
  auto [ca, cb] = colour_pair(g.index, n);
  WedgeVec out;
  for (const auto& [w, c] : v) {
    if (static_cast<int>(w.size()) != ctx.N)
      throw DimensionMismatch("word " + word_to_string(w) + " does not have length " + std::to_string(ctx.N));
    const std::size_t N = w.size();
    std::vector<int> e(N), m(N);
    for (std::size_t j = 0; j < N; ++j) {
      e[j] = colour_words ? w[j] : color_of(w[j], n);
      m[j] = colour_words ? 0 : zpow_of(w[j], n);
      if (e[j] < 1 || e[j] > n) throw DimensionMismatch("colour out of range in " + word_to_string(w));
    }
    auto emit = [&](const std::vector<int>& e2, const Exponent& m2, const RingElem& coef) {
      Word x(N);
      for (std::size_t j = 0; j < N; ++j) x[j] = colour_words ? e2[j] : index_of(m2[j], e2[j], n);
      add_to(out, x, coef);
    };
    if (g.kind == GenKind::K || g.kind == GenKind::Kinv) {
      int h = 0;
      for (int x : e) h += k_exponent(g.index, x, n);
      add_to(out, w, c * Q().pow(g.kind == GenKind::K ? h : -h));
      continue;
    }
    const bool isE = g.kind == GenKind::E;
    const int from = isE ? cb : ca, to = isE ? ca : cb;
    for (std::size_t j = 0; j < N; ++j) {
      if (e[j] != from) continue;
      int h = 0;
      if (isE)
        for (std::size_t t = j + 1; t < N; ++t) h += k_exponent(g.index, e[t], n);
      else
        for (std::size_t t = 0; t < j; ++t) h -= k_exponent(g.index, e[t], n);
      RingElem coef = c * Q().pow(h);
      std::vector<int> e2 = e;
      e2[j] = to;
      if (g.index != 0) {
        emit(e2, m, coef);
        continue;
      }
      switch (ctx.kind) {
        case ActionKind::Eval:
          emit(e2, m, coef * Q().pow(isE ? ctx.a[j] : -ctx.a[j]));
          break;
        case ActionKind::U1_N: {
          Exponent m2 = m;
          m2[j] += isE ? 1 : -1;
          emit(e2, m2, coef);
          break;
        }
        case ActionKind::U0_N: {
          // E_0 uses Y_j^{-1}, F_0 uses Y_j, with Y_j -> q^{1-N} Y_j^{(N)}
          const PolyVector& img = cherednik_monomial(static_cast<int>(j) + 1, isE, ctx.p, m);
          RingElem scale = ctx.scaled_y ? Q().pow(isE ? static_cast<int>(N) - 1 : 1 - static_cast<int>(N)) : RingElem(1);
          for (const auto& [m2, c2] : img.terms()) emit(e2, m2, coef * scale * c2);
          break;
        }
        default:
          break;
      }
    }
  }
  return out;
}

namespace {

WedgeVec act_u0_fock(const Generator& g, const ActionContext& ctx, const WedgeVec& v) {
  WedgeVec out;
  const int n = ctx.n, M = ctx.M;
  for (const auto& [h, c] : v) {
    int k = wedge_degree(h, M, n);
    int l = k + ctx.l_offset;
    int N = residue(M, n) + n * l;
    ActionContext fin = ActionContext::u0_n(n, N, ctx.p);
    fin.scaled_y = ctx.scaled_y;
    WedgeVec x = rho_bar_inv(WedgeVec{{h, RingElem(1)}}, M, l, n);
    add_to(out, rho_bar(straighten(act_tensor(g, fin, x), n), M, l, n), c);
  }
  return out;
}

WedgeVec act_u1_fock(const Generator& g, const ActionContext& ctx, const WedgeVec& v) {
  WedgeVec out;
  const int n = ctx.n, M = ctx.M;
  for (const auto& [h, c] : v) {
    int N = static_cast<int>(h.size()) + ctx.pad;
    Word w = h;
    while (static_cast<int>(w.size()) < N) w.push_back(vacuum_index(M, static_cast<int>(w.size()) + 1));
    int Mp = M - N;  // the tail is |M - N>
    bool hit = residue_matches(g.index, Mp, n);
    ActionContext fin = ActionContext::u1_n(n, N);
    WedgeVec single{{w, RingElem(1)}};
    switch (g.kind) {
      case GenKind::E:
        add_to(out, fock_straighten(act_tensor(g, fin, single), M, n), c * (hit ? Q() : RingElem(1)));
        break;
      case GenKind::F: {
        add_to(out, fock_straighten(act_tensor(g, fin, single), M, n), c);
        if (hit) {
          RingElem kinv = act_tensor({GenKind::Kinv, g.index}, fin, single).begin()->second;
          Word x = w;
          x.push_back(Mp + 1);
          add_to(out, fock_straighten(x, M, n), c * kinv);
        }
        break;
      }
      case GenKind::K:
      case GenKind::Kinv: {
        RingElem kv = act_tensor(g, fin, single).begin()->second;
        if (hit) kv *= g.kind == GenKind::K ? Q() : Q().inv();
        add_to(out, fock_canonical(w, M), c * kv);
        break;
      }
    }
  }
  return out;
}

}  // namespace

WedgeVec act(const Generator& g, const ActionContext& ctx, const WedgeVec& v) {
  check_generator(g, ctx.n);
  switch (ctx.kind) {
    case ActionKind::Eval:
      return act_tensor(g, ctx, v);
    case ActionKind::U0_N:
    case ActionKind::U1_N:
      return straighten(act_tensor(g, ctx, v), ctx.n);
    case ActionKind::U0_Fock:
      return act_u0_fock(g, ctx, v);
    case ActionKind::U1_Fock:
      return act_u1_fock(g, ctx, v);
  }
  return {};
}

WedgeVec act(const std::vector<Generator>& word, const ActionContext& ctx, const WedgeVec& v) {
  WedgeVec r = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = act(*it, ctx, r);
  return r;
}

int cartan(int n, int i, int j) {
  if (i == j) return 2;
  if (n == 2) return -2;
  int d = ((i - j) % n + n) % n;
  return (d == 1 || d == n - 1) ? -1 : 0;
}

bool RelationReport::pass() const {
  for (const auto& f : families)
    if (!f.pass) return false;
  return central_scalar;
}

std::string RelationReport::to_string() const {
  std::ostringstream os;
  for (const auto& f : families) {
    os << (f.pass ? "PASS " : "FAIL ") << f.family;
    if (!f.pass) os << ": " << f.detail;
    os << "\n";
  }
  os << (central_scalar ? "PASS " : "FAIL ") << "c' = K_0...K_{n-1} acts by "
     << (central ? central->to_string() : std::string("(no vectors)")) << "\n";
  return os.str();
}

namespace {

// Applies generators with a per-run memo on single words.
class Applier {
 public:
  explicit Applier(const ActionContext& ctx) : ctx_(ctx) {}
  WedgeVec apply(const Generator& g, const WedgeVec& v) {
    WedgeVec out;
    for (const auto& [w, c] : v) {
      auto key = std::make_pair(g, w);
      auto it = memo_.find(key);
      if (it == memo_.end()) it = memo_.emplace(key, act(g, ctx_, WedgeVec{{w, RingElem(1)}})).first;
      add_to(out, it->second, c);
    }
    return out;
  }
  WedgeVec apply(const std::vector<Generator>& word, const WedgeVec& v) {
    WedgeVec r = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = apply(*it, r);
    return r;
  }

 private:
  const ActionContext& ctx_;
  std::map<std::pair<Generator, Word>, WedgeVec> memo_;
};

WedgeVec difference(WedgeVec a, const WedgeVec& b) {
  add_to(a, b, RingElem(-1));
  return a;
}

}  // namespace

RelationReport verify_relations(const ActionContext& ctx, const std::vector<Word>& basis) {
  const int n = ctx.n;
  Applier ap(ctx);
  RelationReport rep;
  std::map<std::string, RelationResult> fam;
  std::vector<std::string> order{"K K^-1 = 1", "K_i K_j = K_j K_i", "K_i E_j K_i^-1 = q^a E_j",
                                 "K_i F_j K_i^-1 = q^-a F_j", "[E_i, F_j] = delta (K - K^-1)/(q - q^-1)",
                                 "Serre (E)", "Serre (F)"};
  for (const auto& name : order) fam[name].family = name;
  auto record = [&](const std::string& name, bool ok, const std::string& what) {
    auto& r = fam[name];
    if (!ok && r.pass) {
      r.pass = false;
      r.detail = what;
    }
  };
  auto E = [](int i) { return Generator{GenKind::E, i}; };
  auto F = [](int i) { return Generator{GenKind::F, i}; };
  auto K = [](int i) { return Generator{GenKind::K, i}; };
  auto Ki = [](int i) { return Generator{GenKind::Kinv, i}; };
  RingElem qq = Q() - Q().inv();
  for (const Word& b : basis) {
    WedgeVec v{{b, RingElem(1)}};
    std::string at = " on " + word_to_string(b);
    for (int i = 0; i < n; ++i) {
      std::string si = std::to_string(i);
      record("K K^-1 = 1", ap.apply({K(i), Ki(i)}, v) == v && ap.apply({Ki(i), K(i)}, v) == v, "i=" + si + at);
      for (int j = 0; j < n; ++j) {
        std::string ij = "i=" + si + ", j=" + std::to_string(j) + at;
        record("K_i K_j = K_j K_i", ap.apply({K(i), K(j)}, v) == ap.apply({K(j), K(i)}, v), ij);
        RingElem qa = Q().pow(cartan(n, i, j));
        record("K_i E_j K_i^-1 = q^a E_j", ap.apply({K(i), E(j), Ki(i)}, v) == scaled(ap.apply(E(j), v), qa), ij);
        record("K_i F_j K_i^-1 = q^-a F_j", ap.apply({K(i), F(j), Ki(i)}, v) == scaled(ap.apply(F(j), v), qa.inv()),
               ij);
        WedgeVec comm = difference(ap.apply({E(i), F(j)}, v), ap.apply({F(j), E(i)}, v));
        WedgeVec rhs;
        if (i == j) rhs = scaled(difference(ap.apply(K(i), v), ap.apply(Ki(i), v)), qq.inv());
        record("[E_i, F_j] = delta (K - K^-1)/(q - q^-1)", comm == rhs, ij);
        if (i == j) continue;
        int deg = 1 - cartan(n, i, j);
        for (GenKind kind : {GenKind::E, GenKind::F}) {
          WedgeVec total;
          for (int r = 0; r <= deg; ++r) {
            std::vector<Generator> word(static_cast<std::size_t>(r), Generator{kind, i});
            word.push_back({kind, j});
            for (int t = 0; t < deg - r; ++t) word.push_back({kind, i});
            RingElem coef = q_binomial(deg, r) * RingElem(r % 2 ? -1 : 1);
            add_to(total, ap.apply(word, v), coef);
          }
          record(kind == GenKind::E ? "Serre (E)" : "Serre (F)", total.empty(), ij);
        }
      }
    }
    std::vector<Generator> cword;
    for (int i = 0; i < n; ++i) cword.push_back(K(i));
    WedgeVec cv = ap.apply(cword, v);
    if (cv.size() != 1 || cv.begin()->first != b) {
      rep.central_scalar = false;
    } else if (!rep.central) {
      rep.central = cv.begin()->second;
    } else if (*rep.central != cv.begin()->second) {
      rep.central_scalar = false;
    }
  }
  for (const auto& name : order) rep.families.push_back(fam[name]);
  return rep;
}

GradedChar weight_character(const ActionContext& ctx, const std::vector<Word>& basis) {
  const int n = ctx.n;
  GradedChar out;
  for (const Word& b : basis) {
    WedgeVec v{{b, RingElem(1)}};
    std::vector<int> h(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) {
      WedgeVec kv = act({GenKind::K, i}, ctx, v);
      if (kv.size() != 1 || kv.begin()->first != b) throw NonEigenvector(word_to_string(b) + " is not a K-eigenvector");
      const RingElem& c = kv.begin()->second;
      if (!c.is_laurent() || !c.num().is_monomial() || c.num().has_p())
        throw NonEigenvector("K eigenvalue is not a power of q on " + word_to_string(b));
      int e = c.num().min_q();
      if (c != Q().pow(e)) throw NonEigenvector("K eigenvalue is not a power of q on " + word_to_string(b));
      h[static_cast<std::size_t>(i - 1)] = e;
    }
    // x_i - x_{i+1} = h_i, then shift so the minimum is 0
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    for (int i = n - 2; i >= 0; --i)
      x[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i + 1)] + h[static_cast<std::size_t>(i)];
    int grade = 0;
    if (ctx.is_fock()) grade = wedge_degree(b, ctx.M, n);
    ++out[grade][reduce_weight(x)];
  }
  return out;
}

LinearOp generator_matrix(const Generator& g, const ActionContext& ctx, const std::vector<Word>& basis) {
  std::vector<SparseVec> cols;
  cols.reserve(basis.size());
  for (const Word& b : basis) cols.push_back(coordinates(act(g, ctx, WedgeVec{{b, RingElem(1)}}), basis));
  return LinearOp::from_columns(static_cast<int>(basis.size()), std::move(cols));
}

std::vector<Word> colour_words(int n, int N) {
  std::vector<Word> out;
  Word w(static_cast<std::size_t>(N), 1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == w.size()) {
      out.push_back(w);
      return;
    }
    for (int e = 1; e <= n; ++e) {
      w[i] = e;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace qfock
