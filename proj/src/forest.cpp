// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "osforest/forest.hpp"

#include <algorithm>
#include <cctype>

namespace osforest {

DecoratedForest::DecoratedForest(int r, int n) : r_(r), n_(n) {
  if (r < 1 || r > 127) throw std::invalid_argument("r out of range");
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("n must be between 0 and " + std::to_string(kMaxVertices));
  }
  parent_.fill(-1);
}

DecoratedForest DecoratedForest::chain(int r, int n) {
  DecoratedForest f(r, n);
  for (int i = 0; i + 1 < n; ++i) f.set_edge(i, i + 1, 0);
  return f;
}

void DecoratedForest::set_edge(int i, int j, int label) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_ || i == j) {
    throw std::invalid_argument("edge endpoints out of range");
  }
  parent_[i] = static_cast<std::int8_t>(j);
  label_[i] = static_cast<std::int8_t>(mod_positive(label, r_));
  closed_[i] = false;
}

void DecoratedForest::set_root(int i, bool closed) {
  parent_[i] = -1;
  label_[i] = 0;
  closed_[i] = closed;
}

int DecoratedForest::num_edges() const {
  int k = 0;
  for (int i = 0; i < n_; ++i) k += parent_[i] >= 0;
  return k;
}

int DecoratedForest::num_closed() const {
  int l = 0;
  for (int i = 0; i < n_; ++i) l += is_closed_root(i);
  return l;
}

bool DecoratedForest::is_rectified() const {
  for (int i = 0; i < n_; ++i) {
    if (parent_[i] >= 0 && parent_[i] < i) return false;
  }
  return true;
}

bool DecoratedForest::is_acyclic() const {
  for (int i = 0; i < n_; ++i) {
    int j = i;
    for (int steps = 0; steps <= n_; ++steps) {
      if (parent_[j] < 0) break;
      j = parent_[j];
      if (steps == n_) return false;
    }
    if (parent_[j] >= 0) return false;
  }
  return true;
}

int DecoratedForest::root_of(int i) const {
  int j = i;
  for (int steps = 0; parent_[j] >= 0; ++steps) {
    if (steps > n_) throw std::logic_error("cycle in forest");
    j = parent_[j];
  }
  return j;
}

std::vector<std::vector<int>> DecoratedForest::components() const {
  std::vector<std::vector<int>> by_root(n_);
  for (int i = 0; i < n_; ++i) by_root[root_of(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& c : by_root) {
    if (!c.empty()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> DecoratedForest::children(int j) const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if (parent_[i] == j) out.push_back(i);
  }
  return out;
}

bool operator<(const DecoratedForest& a, const DecoratedForest& b) {
  if (a.r_ != b.r_) return a.r_ < b.r_;
  if (a.n_ != b.n_) return a.n_ < b.n_;
  int ka = a.num_edges(), kb = b.num_edges();
  if (ka != kb) return ka < kb;
  int la = a.num_closed(), lb = b.num_closed();
  if (la != lb) return la < lb;
  if (a.parent_ != b.parent_) return a.parent_ < b.parent_;
  if (a.label_ != b.label_) return a.label_ < b.label_;
  return a.closed_ < b.closed_;
}

std::size_t DecoratedForest::hash() const {
  std::size_t h = static_cast<std::size_t>(r_) * 1315423911u + static_cast<std::size_t>(n_);
  for (int i = 0; i < n_; ++i) {
    std::size_t v = static_cast<std::size_t>(parent_[i] + 1) |
                    (static_cast<std::size_t>(label_[i]) << 5) |
                    (static_cast<std::size_t>(closed_[i]) << 13);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

[[noreturn]] void bad_forest(std::string_view text, const std::string& why) {
  throw ParseError("malformed forest '" + std::string(text) + "': " + why);
}

int parse_vertex(std::string_view& s, std::string_view text, int n) {
  std::size_t pos = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == 0) bad_forest(text, "expected a vertex number");
  int v = std::stoi(std::string(s.substr(0, pos)));
  if (v < 1 || v > n) bad_forest(text, "vertex " + std::to_string(v) + " out of range");
  s.remove_prefix(pos);
  return v - 1;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

DecoratedForest DecoratedForest::parse(std::string_view text, int r, int n) {
  DecoratedForest f(r, n);
  std::vector<bool> marked_closed(n, false), has_edge(n, false);
  std::string_view rest = text;
  while (!trim(rest).empty()) {
    auto semi = rest.find(';');
    std::string_view item = trim(rest.substr(0, semi));
    rest = semi == std::string_view::npos ? std::string_view() : rest.substr(semi + 1);
    if (item.empty()) continue;
    int i = parse_vertex(item, text, n);
    item = trim(item);
    if (item.empty() || item == "*") {
      if (item == "*") marked_closed[i] = true;
      continue;
    }
    if (item.substr(0, 2) != "->") bad_forest(text, "expected '->'");
    item = trim(item.substr(2));
    int j = parse_vertex(item, text, n);
    if (i == j) bad_forest(text, "self-loop");
    if (has_edge[i]) bad_forest(text, "vertex " + std::to_string(i + 1) + " has two out-edges");
    long label = 0;
    while (!(item = trim(item)).empty()) {
      if (item[0] == '*') {
        marked_closed[j] = true;
        item.remove_prefix(1);
      } else if (item.substr(0, 2) == "[e") {
        auto close = item.find(']');
        if (close == std::string_view::npos) bad_forest(text, "unterminated label");
        std::string digits(item.substr(2, close - 2));
        std::size_t used = 0;
        try {
          label = std::stol(digits, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || used != digits.size()) {
          bad_forest(text, "bad label exponent '" + digits + "'");
        }
        item.remove_prefix(close + 1);
      } else {
        bad_forest(text, "unexpected '" + std::string(item) + "'");
      }
    }
    f.set_edge(i, j, static_cast<int>(label));
    has_edge[i] = true;
  }
  if (!f.is_acyclic()) bad_forest(text, "edges form a cycle");
  for (int v = 0; v < n; ++v) {
    if (!marked_closed[v]) continue;
    if (has_edge[v]) bad_forest(text, "closed mark on non-root " + std::to_string(v + 1));
    f.closed_[v] = true;
  }
  return f;
}

std::string DecoratedForest::to_string() const {
  std::vector<bool> has_child(n_, false);
  for (int i = 0; i < n_; ++i) {
    if (parent_[i] >= 0) has_child[parent_[i]] = true;
  }
  std::string out;
  auto append = [&out](const std::string& item) {
    if (!out.empty()) out += ";";
    out += item;
  };
  for (int i = 0; i < n_; ++i) {
    if (parent_[i] >= 0) {
      int j = parent_[i];
      std::string item = std::to_string(i + 1) + "->" + std::to_string(j + 1);
      if (label_[i] != 0) item += "[e" + std::to_string(label_[i]) + "]";
      if (is_closed_root(j)) item += "*";
      append(item);
    } else if (!has_child[i]) {
      append(std::to_string(i + 1) + (closed_[i] ? "*" : ""));
    }
  }
  return out;
}

namespace {

struct ForestEnumerator {
  int r, n, k, l;
  bool rectified;
  const ForestVisitor& visit;
  DecoratedForest f;
  std::vector<int> non_roots;
  std::vector<int> roots;

  void parents(int v, int edges) {
    if (edges > k || (v - edges) > n - k) return;
    if (v == n) {
      if (edges != k || !f.is_acyclic()) return;
      non_roots.clear();
      roots.clear();
      for (int i = 0; i < n; ++i) (f.is_root(i) ? roots : non_roots).push_back(i);
      labels(0);
      return;
    }
    f.set_root(v, false);
    parents(v + 1, edges);
    for (int p = rectified ? v + 1 : 0; p < n; ++p) {
      if (p == v) continue;
      f.set_edge(v, p, 0);
      parents(v + 1, edges + 1);
    }
    f.set_root(v, false);
  }

  void labels(std::size_t idx) {
    if (idx == non_roots.size()) {
      closures(0, 0);
      return;
    }
    int v = non_roots[idx];
    for (int e = 0; e < r; ++e) {
      f.set_edge(v, f.parent(v), e);
      labels(idx + 1);
    }
    f.set_edge(v, f.parent(v), 0);
  }

  void closures(std::size_t idx, int closed) {
    int remaining = static_cast<int>(roots.size() - idx);
    if (closed > l || closed + remaining < l) return;
    if (idx == roots.size()) {
      visit(f);
      return;
    }
    int v = roots[idx];
    f.set_root(v, false);
    closures(idx + 1, closed);
    f.set_root(v, true);
    closures(idx + 1, closed + 1);
    f.set_root(v, false);
  }
};

}  // namespace

void for_each_forest(int r, int n, int k, int l, bool rectified_only,
                     const ForestVisitor& visit) {
  if (k < 0 || l < 0 || k + l > n) return;
  ForestEnumerator e{r, n, k, l, rectified_only, visit, DecoratedForest(r, n), {}, {}};
  e.parents(0, 0);
}

void for_each_forest(int r, int n, bool rectified_only, const ForestVisitor& visit) {
  for (int k = 0; k < n; ++k) {
    for (int l = 0; k + l <= n; ++l) for_each_forest(r, n, k, l, rectified_only, visit);
  }
}

void for_each_tree(int r, int n, bool rectified_only, const ForestVisitor& visit) {
  for_each_forest(r, n, n - 1, 0, rectified_only, visit);
}

std::vector<DecoratedForest> enumerate_forests(int r, int n, int k, int l,
                                               bool rectified_only) {
  std::vector<DecoratedForest> out;
  for_each_forest(r, n, k, l, rectified_only,
                  [&out](const DecoratedForest& f) { out.push_back(f); });
  return out;
}

std::vector<DecoratedForest> enumerate_trees(int r, int n, bool rectified_only) {
  return enumerate_forests(r, n, n - 1, 0, rectified_only);
}

DecoratedForest act_forest(const GroupElement& g, const DecoratedForest& f) {
  if (g.n() != f.n() || g.r() != f.r()) {
    throw std::invalid_argument("group element and forest differ in (r, n)");
  }
  DecoratedForest out(f.r(), f.n());
  for (int i = 0; i < f.n(); ++i) {
    int wi = g.perm(i);
    if (f.is_root(i)) {
      out.set_root(wi, f.is_closed_root(i));
    } else {
      int wj = g.perm(f.parent(i));
      out.set_edge(wi, wj, f.label(i) + g.zeta(wi) - g.zeta(wj));
    }
  }
  return out;
}

int sign_epsilon_i(const DecoratedForest& f, int i) {
  int open_below = 0;
  for (int j = 0; j < i; ++j) open_below += f.is_open_root(j);
  return (i - open_below) % 2 == 0 ? 1 : -1;
}

int sign_epsilon_w(std::span<const int> perm, const DecoratedForest& f) {
  int inversions = 0;
  for (int i = 0; i < f.n(); ++i) {
    if (!f.is_open_root(i)) continue;
    for (int j = i + 1; j < f.n(); ++j) {
      if (f.is_open_root(j) && perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

int sign_epsilon_w(const GroupElement& g, const DecoratedForest& f) {
  std::vector<int> perm(g.n());
  for (int i = 0; i < g.n(); ++i) perm[i] = g.perm(i);
  return sign_epsilon_w(perm, f);
}

ForestWeights forest_queries(const DecoratedForest& f, std::span<const Rational> a) {
  int n = f.n();
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("weight vector length");
  ForestWeights q;
  q.components = f.components();
  q.component_of.assign(n, -1);
  for (std::size_t c = 0; c < q.components.size(); ++c) {
    for (int v : q.components[c]) q.component_of[v] = static_cast<int>(c);
  }
  q.precedes.assign(n, std::vector<bool>(n, false));
  q.subtree_sum.assign(n, Rational(0));
  for (int k = 0; k < n; ++k) {
    for (int j = k;; j = f.parent(j)) {
      q.precedes[k][j] = true;
      q.subtree_sum[j] += a[k];
      if (f.is_root(j)) break;
    }
  }
  q.component_sum.assign(n, Rational(0));
  for (const auto& comp : q.components) {
    Rational s = 0;
    for (int v : comp) s += a[v];
    for (int v : comp) q.component_sum[v] = s;
  }
  return q;
}

}  // namespace osforest
