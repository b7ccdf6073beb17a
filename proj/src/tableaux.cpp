#include "qfock/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qfock {

int SkewDiagram::degree() const {
  int d = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) d += lambda[i] - (i < mu.size() ? mu[i] : 0);
  return d;
}

std::vector<Box> SkewDiagram::boxes() const {
  std::vector<Box> b;
  for (std::size_t y = 0; y < lambda.size(); ++y) {
    int lo = y < mu.size() ? mu[y] : 0;
    for (int x = lo; x < lambda[y]; ++x) b.push_back({x, static_cast<int>(y)});
  }
  std::sort(b.begin(), b.end());
  return b;
}

int strip_size(const BorderStrip& theta) {
  int s = 0;
  for (int m : theta) s += m;
  return s;
}

SkewDiagram strip_to_skew(const BorderStrip& theta) {
  for (int m : theta)
    if (m < 1) throw std::invalid_argument("border strip columns must be positive");
  if (theta.empty()) return {};
  int r = static_cast<int>(theta.size());
  std::map<int, std::pair<int, int>> rows;  // y -> [min x, max x]
  int top = 0;
  for (int i = 0; i < r; ++i) {
    int x = r - 1 - i;
    for (int y = top; y < top + theta[static_cast<std::size_t>(i)]; ++y) {
      auto it = rows.find(y);
      if (it == rows.end())
        rows[y] = {x, x};
      else
        it->second = {std::min(it->second.first, x), std::max(it->second.second, x)};
    }
    top += theta[static_cast<std::size_t>(i)] - 1;
  }
  SkewDiagram d;
  for (const auto& [y, span] : rows) {
    d.lambda.push_back(span.second + 1);
    d.mu.push_back(span.first);
  }
  while (!d.mu.empty() && d.mu.back() == 0) d.mu.pop_back();
  return d;
}

bool has_2x2_block(const std::vector<Box>& boxes) {
  std::set<Box> s(boxes.begin(), boxes.end());
  for (const Box& b : boxes)
    if (s.count({b.x + 1, b.y}) && s.count({b.x, b.y + 1}) && s.count({b.x + 1, b.y + 1})) return true;
  return false;
}

bool is_connected(const std::vector<Box>& boxes) {
  if (boxes.empty()) return true;
  std::set<Box> s(boxes.begin(), boxes.end()), seen;
  std::vector<Box> stack{boxes.front()};
  seen.insert(boxes.front());
  while (!stack.empty()) {
    Box b = stack.back();
    stack.pop_back();
    for (Box nb : {Box{b.x + 1, b.y}, Box{b.x - 1, b.y}, Box{b.x, b.y + 1}, Box{b.x, b.y - 1}})
      if (s.count(nb) && !seen.count(nb)) {
        seen.insert(nb);
        stack.push_back(nb);
      }
  }
  return seen.size() == s.size();
}

std::vector<std::vector<int>> enumerate_sst(const SkewDiagram& d, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<Box> b = d.boxes();
  std::map<Box, std::size_t> index;
  for (std::size_t i = 0; i < b.size(); ++i) index[b[i]] = i;
  std::vector<long> above(b.size(), -1), left(b.size(), -1);
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto a = index.find({b[i].x, b[i].y - 1});
    if (a != index.end()) above[i] = static_cast<long>(a->second);
    auto l = index.find({b[i].x - 1, b[i].y});
    if (l != index.end()) left[i] = static_cast<long>(l->second);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> fill(b.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == b.size()) {
      out.push_back(fill);
      return;
    }
    int lo = 1;
    if (above[i] >= 0) lo = std::max(lo, fill[static_cast<std::size_t>(above[i])] + 1);
    if (left[i] >= 0) lo = std::max(lo, fill[static_cast<std::size_t>(left[i])]);
    for (int v = lo; v <= n; ++v) {
      fill[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

CharPoly skew_schur(const SkewDiagram& d, int n) {
  CharPoly c;
  for (const auto& t : enumerate_sst(d, n)) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int v : t) ++e[static_cast<std::size_t>(v - 1)];
    ++c[e];
  }
  return c;
}

int t_statistic(const BorderStrip& theta) {
  int r = static_cast<int>(theta.size()), t = 0;
  for (int i = 1; i <= r - 1; ++i) t += (r - i) * theta[static_cast<std::size_t>(i - 1)];
  return t;
}

int strip_grade(const BorderStrip& theta, int n, int k) {
  long s = strip_size(theta);
  long num = s * (n - s) + 2L * n * t_statistic(theta) - static_cast<long>(k) * (n - k);
  if (num % (2L * n) != 0) throw std::logic_error("non-integral strip grade for " + strip_to_string(theta));
  return static_cast<int>(num / (2L * n));
}

std::vector<BorderStrip> border_strips(int n, int k, int max_grade) {
  if (n < 2 || k < 0 || k >= n) throw std::invalid_argument("border_strips requires 0 <= k < n, n >= 2");
  std::vector<std::pair<int, BorderStrip>> found;
  if (k == 0 && max_grade >= 0) found.push_back({0, {}});
  // Grow from the leftmost column (m_r < n) by adding columns on the right;
  // each added column of height h raises the grade by at least h/n, so the
  // rational grade below is monotone and pruning is exact.
  auto rational_grade = [&](const std::vector<int>& left_to_right) {
    BorderStrip th(left_to_right.rbegin(), left_to_right.rend());
    long s = strip_size(th);
    return static_cast<double>(s * (n - s) + 2L * n * t_statistic(th) - static_cast<long>(k) * (n - k)) /
           (2.0 * n);
  };
  std::vector<int> cols;
  std::function<void()> rec = [&] {
    if (rational_grade(cols) > max_grade + 1e-9) return;
    BorderStrip th(cols.rbegin(), cols.rend());
    if (((strip_size(th) - k) % n + n) % n == 0) {
      int g = strip_grade(th, n, k);
      if (g <= max_grade) found.push_back({g, th});
    }
    for (int h = 1; h <= n; ++h) {
      cols.push_back(h);
      rec();
      cols.pop_back();
    }
  };
  for (int h = 1; h < n; ++h) {
    cols = {h};
    rec();
  }
  std::sort(found.begin(), found.end());
  std::vector<BorderStrip> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

GradedChar char_level1(int n, int k, int cutoff) {
  GradedChar g;
  for (const auto& th : border_strips(n, k, cutoff)) {
    CharPoly s = th.empty() ? CharPoly{{std::vector<int>(static_cast<std::size_t>(n), 0), 1}}
                            : skew_schur(strip_to_skew(th), n);
    auto& slot = g[strip_grade(th, n, k)];
    for (const auto& [e, c] : s) slot[e] += c;
  }
  return g;
}

std::vector<int> reduce_weight(std::vector<int> e) {
  if (e.empty()) return e;
  int m = *std::min_element(e.begin(), e.end());
  for (int& x : e) x -= m;
  return e;
}

CharPoly reduce_weights(const CharPoly& c) {
  CharPoly r;
  for (const auto& [e, m] : c) r[reduce_weight(e)] += m;
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

std::string strip_to_string(const BorderStrip& theta) {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < theta.size(); ++i) os << (i ? "," : "") << theta[i];
  os << ">";
  return os.str();
}

BorderStrip parse_strip(const std::string& text) {
  BorderStrip th;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' ' || c == '<' || c == '>'; }),
              tok.end());
    if (tok.empty()) continue;
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 1) throw std::invalid_argument("bad strip column '" + tok + "'");
    th.push_back(v);
  }
  return th;
}

}  // namespace qfock
