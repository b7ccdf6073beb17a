#include "qfock/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace qfock {

namespace {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z (index = exponent) and dense bivariate
// polynomials in q with coefficients in Z[p].  Only used inside gcd/division.
// ---------------------------------------------------------------------------

using ZPoly = std::vector<mpz_class>;
using BPoly = std::vector<ZPoly>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

mpz_class zcontent(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly zscale(const ZPoly& a, const mpz_class& c) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  ztrim(r);
  return r;
}

ZPoly zdiv_scalar(const ZPoly& a, const mpz_class& c) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
  return r;
}

ZPoly zprimitive(const ZPoly& a) {
  if (a.empty()) return a;
  mpz_class c = zcontent(a);
  if (a.back() < 0) c = -c;
  if (c == 1) return a;
  return zdiv_scalar(a, c);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

void zsub_inplace(ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
}

// Exact division; returns false if b does not divide a over Z.
bool zdiv_exact(const ZPoly& a, const ZPoly& b, ZPoly& out) {
  if (b.empty()) throw DivisionByZero();
  if (a.empty()) {
    out.clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  ZPoly r = a;
  out.assign(a.size() - b.size() + 1, 0);
  const mpz_class& lb = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    if (!mpz_divisible_p(r.back().get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
    out[shift] = t;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= t * b[i];
    ztrim(r);
  }
  ztrim(out);
  return r.empty();
}

// Pseudo-remainder of a by b.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    ztrim(a);
  }
  return a;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
  ztrim(a);
  ztrim(b);
  if (a.empty()) std::swap(a, b);
  if (b.empty()) {
    if (a.back() < 0) for (auto& c : a) c = -c;
    return a;
  }
  mpz_class ca = zcontent(a), cb = zcontent(b);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = zprimitive(a);
  b = zprimitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) {
      a = ZPoly{1};
      break;
    }
    ZPoly r = zprem(a, b);
    a = std::move(b);
    b = zprimitive(r);
  }
  a = zprimitive(a);
  return zscale(a, g);
}

// --- bivariate -------------------------------------------------------------

void btrim(BPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

ZPoly bcontent(const BPoly& a) {
  ZPoly g;
  for (const auto& c : a) {
    if (c.empty()) continue;
    g = g.empty() ? c : zgcd(g, c);
    if (g.size() == 1 && (g[0] == 1 || g[0] == -1)) return ZPoly{1};
  }
  if (!g.empty() && g.back() < 0) for (auto& c : g) c = -c;
  return g;
}

BPoly bdiv_z(const BPoly& a, const ZPoly& c) {
  BPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!zdiv_exact(a[i], c, r[i])) throw InternalError("bivariate content division not exact");
  }
  btrim(r);
  return r;
}

BPoly bmul_z(const BPoly& a, const ZPoly& c) {
  BPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = zmul(a[i], c);
  btrim(r);
  return r;
}

BPoly bprimitive(const BPoly& a) {
  if (a.empty()) return a;
  ZPoly c = bcontent(a);
  BPoly r = (c.size() == 1 && c[0] == 1) ? a : bdiv_z(a, c);
  // sign: leading coefficient (highest q, then highest p) positive
  if (r.back().back() < 0)
    for (auto& z : r)
      for (auto& x : z) x = -x;
  return r;
}

BPoly bprem(BPoly a, const BPoly& b) {
  const ZPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    ZPoly la = a.back();
    for (auto& c : a) c = zmul(c, lb);
    for (std::size_t i = 0; i < b.size(); ++i) zsub_inplace(a[i + shift], zmul(la, b[i]));
    btrim(a);
  }
  return a;
}

BPoly bgcd(BPoly a, BPoly b) {
  ZPoly ca = bcontent(a), cb = bcontent(b);
  ZPoly g = zgcd(ca, cb);
  a = bdiv_z(a, ca);
  b = bdiv_z(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) {
      a = BPoly{ZPoly{1}};
      break;
    }
    BPoly r = bprem(a, b);
    a = std::move(b);
    b = r.empty() ? r : bprimitive(r);
  }
  a = bprimitive(a);
  return bmul_z(a, g);
}

bool bdiv_exact(const BPoly& a, const BPoly& b, BPoly& out) {
  if (a.empty()) {
    out.clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  BPoly r = a;
  out.assign(a.size() - b.size() + 1, ZPoly{});
  const ZPoly& lb = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    ZPoly t;
    if (!zdiv_exact(r.back(), lb, t)) return false;
    for (std::size_t i = 0; i < b.size(); ++i) zsub_inplace(r[i + shift], zmul(t, b[i]));
    out[shift] = std::move(t);
    btrim(r);
  }
  btrim(out);
  return r.empty();
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly
// ---------------------------------------------------------------------------

class PolyBuilder {
 public:
  static LaurentPoly make(std::vector<LaurentPoly::Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.m < b.m; });
    std::vector<LaurentPoly::Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().m == t.m) {
        out.back().c += t.c;
      } else {
        if (!out.empty() && out.back().c == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().c == 0) out.pop_back();
    LaurentPoly r;
    r.terms_ = std::move(out);
    return r;
  }
  static LaurentPoly raw(std::vector<LaurentPoly::Term> sorted) {
    LaurentPoly r;
    r.terms_ = std::move(sorted);
    return r;
  }
};

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({Monomial{0, 0}, mpz_class(c)});
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0) terms_.push_back({Monomial{0, 0}, c});
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int qe, int pe) {
  LaurentPoly r;
  if (c != 0) r.terms_.push_back({Monomial{qe, pe}, c});
  return r;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) { return PolyBuilder::make(std::move(terms)); }

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].m == Monomial{0, 0} && terms_[0].c == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m == Monomial{0, 0});
}

bool LaurentPoly::has_p() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.m.p != 0; });
}

int LaurentPoly::min_q() const { return terms_.empty() ? 0 : terms_.front().m.q; }
int LaurentPoly::max_q() const { return terms_.empty() ? 0 : terms_.back().m.q; }
int LaurentPoly::min_p() const {
  int r = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.m.p < r) r = t.m.p;
    first = false;
  }
  return r;
}
int LaurentPoly::max_p() const {
  int r = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.m.p > r) r = t.m.p;
    first = false;
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].m < o.terms_[j].m)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].m < terms_[i].m) {
      out.push_back(o.terms_[j++]);
    } else {
      mpz_class c = terms_[i].c + o.terms_[j].c;
      if (c != 0) out.push_back({terms_[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (b.terms_.size() == 1) {
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size());
    const auto& tb = b.terms_[0];
    for (const auto& ta : a.terms_) r.terms_.push_back({Monomial{ta.m.q + tb.m.q, ta.m.p + tb.m.p}, ta.c * tb.c});
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) prod.push_back({Monomial{ta.m.q + tb.m.q, ta.m.p + tb.m.p}, ta.c * tb.c});
  return PolyBuilder::make(std::move(prod));
}

LaurentPoly LaurentPoly::shifted(int dq, int dp) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) {
    t.m.q += dq;
    t.m.p += dp;
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

LaurentPoly LaurentPoly::divided_exact(const mpz_class& c) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) {
    if (!mpz_divisible_p(t.c.get_mpz_t(), c.get_mpz_t())) throw InternalError("inexact integer division");
    mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
  return g;
}

LaurentPoly LaurentPoly::at_p1() const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back({Monomial{x.m.q, 0}, x.c});
  return PolyBuilder::make(std::move(t));
}

LaurentPoly LaurentPoly::substituted_powers(int a, int b) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back({Monomial{x.m.q * a, x.m.p * b}, x.c});
  return PolyBuilder::make(std::move(t));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 31 + static_cast<std::size_t>(t.m.q * 7919 + t.m.p);
    h = h * 131 + static_cast<std::size_t>(mpz_get_si(t.c.get_mpz_t()));
  }
  return h;
}

namespace {

std::string format_term(const mpz_class& c, const Monomial& m, bool first) {
  std::string out;
  mpz_class a = abs(c);
  if (c < 0)
    out += "-";
  else if (!first)
    out += "+";
  std::vector<std::string> parts;
  bool unit = (m.q == 0 && m.p == 0);
  if (unit || a != 1) parts.push_back(a.get_str());
  if (m.q != 0) parts.push_back(m.q == 1 ? std::string("q") : "q^" + std::to_string(m.q));
  if (m.p != 0) parts.push_back(m.p == 1 ? std::string("p") : "p^" + std::to_string(m.p));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "*";
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    out += format_term(it->c, it->m, first);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// gcd and exact division
// ---------------------------------------------------------------------------

namespace {

// Polynomial with all exponents >= 0 and no monomial factor.
LaurentPoly strip_monomial(const LaurentPoly& a) {
  if (a.is_zero()) return a;
  return a.shifted(-a.min_q(), -a.min_p());
}

BPoly to_dense(const LaurentPoly& a) {
  // assumes exponents already non-negative
  BPoly r(static_cast<std::size_t>(a.max_q()) + 1);
  for (const auto& t : a.terms()) {
    auto& z = r[static_cast<std::size_t>(t.m.q)];
    if (z.size() <= static_cast<std::size_t>(t.m.p)) z.resize(static_cast<std::size_t>(t.m.p) + 1, 0);
    z[static_cast<std::size_t>(t.m.p)] = t.c;
  }
  for (auto& z : r) ztrim(z);
  btrim(r);
  return r;
}

LaurentPoly from_dense(const BPoly& b) {
  std::vector<LaurentPoly::Term> t;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].size(); ++j)
      if (b[i][j] != 0) t.push_back({Monomial{static_cast<int>(i), static_cast<int>(j)}, b[i][j]});
  return PolyBuilder::raw(std::move(t));
}

ZPoly to_dense_q(const LaurentPoly& a) {
  ZPoly r(static_cast<std::size_t>(a.max_q()) + 1, 0);
  for (const auto& t : a.terms()) r[static_cast<std::size_t>(t.m.q)] = t.c;
  ztrim(r);
  return r;
}

LaurentPoly from_dense_q(const ZPoly& z) {
  std::vector<LaurentPoly::Term> t;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] != 0) t.push_back({Monomial{static_cast<int>(i), 0}, z[i]});
  return PolyBuilder::raw(std::move(t));
}

LaurentPoly positive_lead(LaurentPoly a) {
  if (!a.is_zero() && a.leading().c < 0) return -a;
  return a;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
  if (a0.is_zero() && b0.is_zero()) return LaurentPoly(0);
  if (a0.is_zero()) return positive_lead(strip_monomial(b0));
  if (b0.is_zero()) return positive_lead(strip_monomial(a0));
  LaurentPoly a = strip_monomial(a0);
  LaurentPoly b = strip_monomial(b0);
  if (a.is_monomial() || b.is_monomial()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    return LaurentPoly(g);
  }
  if (a == b || a == -b) return positive_lead(a);
  if (!a.has_p() && !b.has_p()) {
    return from_dense_q(zgcd(to_dense_q(a), to_dense_q(b)));
  }
  if (a.max_q() == 0 && b.max_q() == 0) {
    // univariate in p: swap roles of the variables
    LaurentPoly as = LaurentPoly::from_terms([&] {
      std::vector<LaurentPoly::Term> t;
      for (const auto& x : a.terms()) t.push_back({Monomial{x.m.p, 0}, x.c});
      return t;
    }());
    LaurentPoly bs = LaurentPoly::from_terms([&] {
      std::vector<LaurentPoly::Term> t;
      for (const auto& x : b.terms()) t.push_back({Monomial{x.m.p, 0}, x.c});
      return t;
    }());
    LaurentPoly g = from_dense_q(zgcd(to_dense_q(as), to_dense_q(bs)));
    std::vector<LaurentPoly::Term> t;
    for (const auto& x : g.terms()) t.push_back({Monomial{0, x.m.q}, x.c});
    return LaurentPoly::from_terms(std::move(t));
  }
  return from_dense(bgcd(to_dense(a), to_dense(b)));
}

LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return a;
  if (b.is_monomial()) {
    const auto& t = b.terms()[0];
    return a.divided_exact(t.c).shifted(-t.m.q, -t.m.p);
  }
  int aq = a.min_q(), ap = a.min_p(), bq = b.min_q(), bp = b.min_p();
  LaurentPoly as = a.shifted(-aq, -ap), bs = b.shifted(-bq, -bp);
  LaurentPoly quotient;
  if (!as.has_p() && !bs.has_p()) {
    ZPoly out;
    if (!zdiv_exact(to_dense_q(as), to_dense_q(bs), out)) throw InternalError("polynomial division not exact");
    quotient = from_dense_q(out);
  } else {
    BPoly out;
    if (!bdiv_exact(to_dense(as), to_dense(bs), out)) throw InternalError("polynomial division not exact");
    quotient = from_dense(out);
  }
  return quotient.shifted(aq - bq, ap - bp);
}

// ---------------------------------------------------------------------------
// RingElem
// ---------------------------------------------------------------------------

RingElem::RingElem(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

RingElem RingElem::rational(long n, long d) { return RingElem(LaurentPoly(n), LaurentPoly(d)); }

void RingElem::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_monomial()) {
    const auto& t = den_.terms()[0];
    mpz_class c = t.c;
    int dq = t.m.q, dp = t.m.p;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.content().get_mpz_t(), c.get_mpz_t());
    if (c < 0) g = -g;
    num_ = num_.divided_exact(g).shifted(-dq, -dp);
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    den_ = LaurentPoly(c);
    return;
  }
  LaurentPoly g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = poly_div_exact(num_, g);
    den_ = poly_div_exact(den_, g);
  }
  int dq = den_.min_q(), dp = den_.min_p();
  if (dq != 0 || dp != 0) {
    den_ = den_.shifted(-dq, -dp);
    num_ = num_.shifted(-dq, -dp);
  }
  if (den_.leading().c < 0) {
    den_ = -den_;
    num_ = -num_;
  }
}

RingElem RingElem::operator-() const {
  RingElem r = *this;
  r.num_ = -r.num_;
  return r;
}

RingElem& RingElem::operator+=(const RingElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return *this;
    }
    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = poly_div_exact(num_, g);
      den_ = poly_div_exact(den_, g);
    }
    return *this;
  }
  LaurentPoly g = poly_gcd(den_, o.den_);
  LaurentPoly d1 = g.is_one() ? den_ : poly_div_exact(den_, g);
  LaurentPoly d2 = g.is_one() ? o.den_ : poly_div_exact(o.den_, g);
  LaurentPoly t = num_ * d2 + o.num_ * d1;
  if (t.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly(1);
    return *this;
  }
  LaurentPoly g2 = g.is_one() ? g : poly_gcd(t, g);
  if (!g2.is_one()) {
    t = poly_div_exact(t, g2);
    d2 = poly_div_exact(o.den_, g2);
  } else {
    d2 = o.den_;
  }
  num_ = std::move(t);
  den_ = d1 * d2;
  if (den_.leading().c < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) { return *this += -o; }

RingElem& RingElem::operator*=(const RingElem& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RingElem();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  LaurentPoly g1 = o.den_.is_one() ? LaurentPoly(1) : poly_gcd(num_, o.den_);
  LaurentPoly g2 = den_.is_one() ? LaurentPoly(1) : poly_gcd(o.num_, den_);
  LaurentPoly n1 = g1.is_one() ? num_ : poly_div_exact(num_, g1);
  LaurentPoly d2 = g1.is_one() ? o.den_ : poly_div_exact(o.den_, g1);
  LaurentPoly n2 = g2.is_one() ? o.num_ : poly_div_exact(o.num_, g2);
  LaurentPoly d1 = g2.is_one() ? den_ : poly_div_exact(den_, g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (den_.leading().c < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  return *this;
}

RingElem RingElem::inv() const {
  if (is_zero()) throw DivisionByZero();
  RingElem r;
  r.num_ = den_;
  r.den_ = num_;
  int dq = r.den_.min_q(), dp = r.den_.min_p();
  r.den_ = r.den_.shifted(-dq, -dp);
  r.num_ = r.num_.shifted(-dq, -dp);
  if (r.den_.leading().c < 0) {
    r.den_ = -r.den_;
    r.num_ = -r.num_;
  }
  return r;
}

RingElem& RingElem::operator/=(const RingElem& o) { return *this *= o.inv(); }

RingElem RingElem::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  RingElem r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string RingElem::to_string() const {
  if (is_zero()) return "0";
  int sq = std::max(0, -num_.min_q());
  int sp = std::max(0, -num_.min_p());
  if (den_.is_one() && sq == 0 && sp == 0) return num_.to_string();
  return "(" + num_.shifted(sq, sp).to_string() + ")/(" + den_.shifted(sq, sp).to_string() + ")";
}

RingElem specialize_p1(const RingElem& a) {
  LaurentPoly d = a.den().at_p1();
  if (d.is_zero()) throw PoleAtPOne("pole at p=1 in " + a.to_string());
  return RingElem(a.num().at_p1(), d);
}

RingElem substitute_powers(const RingElem& x, int a, int b) {
  return RingElem(x.num().substituted_powers(a, b), x.den().substituted_powers(a, b));
}

RingElem q_int(int n) {
  RingElem qq = RingElem::q();
  return (qq.pow(n) - qq.pow(-n)) / (qq - qq.inv());
}

RingElem q_binomial(int n, int r) {
  if (r < 0 || r > n) return RingElem(0);
  RingElem num(1), den(1);
  for (int i = 0; i < r; ++i) {
    num *= q_int(n - i);
    den *= q_int(i + 1);
  }
  return num / den;
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over + - * / ^ ( ) integers, q, p.
// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RingElem parse() {
    RingElem r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("cannot parse ring element '" + std::string(s_) + "': " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  RingElem expr() {
    RingElem r;
    bool first = true;
    for (;;) {
      skip();
      bool neg = false;
      if (accept('-')) {
        neg = true;
      } else if (!first && !accept('+')) {
        break;
      }
      RingElem t = term();
      r += neg ? -t : t;
      first = false;
    }
    return r;
  }
  RingElem term() {
    RingElem r = factor();
    for (;;) {
      if (accept('*'))
        r *= factor();
      else if (accept('/'))
        r /= factor();
      else
        break;
    }
    return r;
  }
  long integer() {
    skip();
    bool neg = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }
  RingElem factor() {
    skip();
    RingElem base;
    if (accept('(')) {
      base = expr();
      if (!accept(')')) fail("expected ')'");
    } else if (accept('q')) {
      base = RingElem::q();
    } else if (accept('p')) {
      base = RingElem::p();
    } else if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      base = RingElem(LaurentPoly(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    } else {
      fail("unexpected character");
    }
    if (accept('^')) base = base.pow(static_cast<int>(integer()));
    return base;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElem parse_ring_elem(std::string_view text) { return Parser(text).parse(); }

}  // namespace qfock
