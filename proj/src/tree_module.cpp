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

#include "osforest/tree_module.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace osforest {

namespace {

void add_scaled(ForestCombination& out, const ForestCombination& c, long sign) {
  for (const auto& [f, v] : c) {
    long& slot = out[f];
    slot += sign * v;
    if (slot == 0) out.erase(f);
  }
}

// The child of the root on the path from the largest vertex, for the first
// component whose root is not its largest vertex; -1 if none.
int root_shift_vertex(const DecoratedForest& f) {
  for (const auto& comp : f.components()) {
    int m = comp.back();
    if (f.is_root(m)) continue;
    int root = f.root_of(m);
    int v = m;
    while (f.parent(v) != root) v = f.parent(v);
    return v;
  }
  return -1;
}

}  // namespace

int open_flip_coefficient(const DecoratedForest& f, const DecoratedForest& fp, int i, int j) {
  // alpha = (product of eps over open roots) * (wedge of the degree-one
  // factors in vertex order); the edge factor moves from slot i to slot j.
  int sign = 1;
  for (int v = 0; v < f.n(); ++v) {
    if (f.is_open_root(v)) sign *= sign_epsilon_i(f, v);
    if (fp.is_open_root(v)) sign *= sign_epsilon_i(fp, v);
    if (v > std::min(i, j) && v < std::max(i, j) && !f.is_open_root(v)) sign = -sign;
  }
  return sign;
}

const ForestCombination& Rectifier::rectify(const DecoratedForest& f) {
  if (auto it = cache_.find(f); it != cache_.end()) return it->second;
  ForestCombination out;
  if (f.is_rectified()) {
    out[f] = 1;
  } else if (int u = root_shift_vertex(f); u >= 0) {
    int root = f.parent(u);
    bool closed = f.is_closed_root(root);
    DecoratedForest flipped = f;
    flipped.set_root(u, closed);
    flipped.set_edge(root, u, -f.label(u));
    add_scaled(out, rectify(flipped), closed ? -1 : open_flip_coefficient(f, flipped, u, root));
    if (closed) {
      DecoratedForest cut = f;
      cut.set_root(u, true);
      add_scaled(out, rectify(cut), 1);
    }
  } else {
    int a = -1;
    for (int i = 0; i < f.n(); ++i) {
      if (!f.is_root(i) && f.parent(i) < i) a = i;
    }
    int j = f.parent(a);
    if (f.is_root(j)) throw std::logic_error("descending edge into a root after root shift");
    int k = f.parent(j);
    int x = f.label(a), y = f.label(j);
    DecoratedForest t3 = f;
    t3.set_edge(a, k, x + y);
    DecoratedForest t2 = f;
    t2.set_edge(j, a, -x);
    t2.set_edge(a, k, x + y);
    add_scaled(out, rectify(t3), 1);
    add_scaled(out, rectify(t2), -1);
  }
  return cache_.emplace(f, std::move(out)).first->second;
}

std::vector<TripleRelation> triple_relations(const DecoratedForest& f1) {
  std::vector<TripleRelation> out;
  for (int i = 0; i < f1.n(); ++i) {
    if (f1.is_root(i)) continue;
    int j = f1.parent(i);
    if (f1.is_root(j)) continue;
    int k = f1.parent(j);
    int x = f1.label(i), y = f1.label(j);
    DecoratedForest f3 = f1;
    f3.set_edge(i, k, x + y);
    DecoratedForest f2 = f1;
    f2.set_edge(j, i, -x);
    f2.set_edge(i, k, x + y);
    out.push_back({f1, f2, f3});
  }
  return out;
}

std::vector<FlipRelation> flip_relations(const DecoratedForest& f) {
  std::vector<FlipRelation> out;
  for (int i = 0; i < f.n(); ++i) {
    if (f.is_root(i)) continue;
    int j = f.parent(i);
    if (!f.is_root(j)) continue;
    bool closed = f.is_closed_root(j);
    DecoratedForest fp = f;
    fp.set_root(i, closed);
    fp.set_edge(j, i, -f.label(i));
    FlipRelation rel{f, fp, std::nullopt, closed ? 1 : -open_flip_coefficient(f, fp, i, j)};
    if (closed) {
      DecoratedForest fpp = f;
      fpp.set_root(i, true);
      rel.f_double_prime = fpp;
    }
    out.push_back(std::move(rel));
  }
  return out;
}

void ModuleVector::add(const DecoratedForest& t, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

std::vector<std::pair<std::string, std::string>> ModuleVector::serialize() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [t, c] : terms_) out.emplace_back(t.to_string(), c.get_str());
  return out;
}

ModuleVector rectify_tree(const LabelledTree& t, Rectifier* cache) {
  if (!t.is_tree()) throw std::invalid_argument("rectify_tree needs a spanning tree");
  Rectifier local;
  Rectifier& rect = cache ? *cache : local;
  ModuleVector v(t.r(), t.n());
  for (const auto& [f, c] : rect.rectify(t)) v.add(f, Rational(c));
  return v;
}

std::pair<std::vector<int>, LabelledTree> decompose_by_Z(const LabelledTree& t) {
  int n = t.n();
  if (!t.is_tree()) throw std::invalid_argument("decompose_by_Z needs a spanning tree");
  std::vector<int> zeta(n, 0);
  std::vector<bool> known(n, false);
  known[n - 1] = true;
  // Propagate eta = zeta_i zeta_j^{-1} along edges from vertex n.
  for (int round = 0; round < n; ++round) {
    for (int i = 0; i < n; ++i) {
      if (t.is_root(i)) continue;
      int j = t.parent(i);
      if (known[j] && !known[i]) {
        zeta[i] = static_cast<int>(mod_positive(t.label(i) + zeta[j], t.r()));
        known[i] = true;
      } else if (known[i] && !known[j]) {
        zeta[j] = static_cast<int>(mod_positive(zeta[i] - t.label(i), t.r()));
        known[j] = true;
      }
    }
  }
  LabelledTree base = t;
  for (int i = 0; i < n; ++i) {
    if (!t.is_root(i)) base.set_edge(i, t.parent(i), 0);
  }
  return {zeta, base};
}

ChainVector chain_expand(const LabelledTree& t) {
  auto [zeta, base] = decompose_by_Z(t);
  ChainVector out;
  for (const auto& w : all_permutations(t.n())) {
    std::vector<int> pos(t.n());
    for (int i = 0; i < t.n(); ++i) pos[w[i]] = i;
    bool refines = true;
    for (int i = 0; i < t.n() && refines; ++i) {
      if (!t.is_root(i) && pos[i] >= pos[t.parent(i)]) refines = false;
    }
    if (refines) out.emplace(GroupElement(t.r(), zeta, w), Rational(1));
  }
  return out;
}

ModuleVector chain_to_module(const ChainVector& c, int r, int n, Rectifier* cache) {
  Rectifier local;
  Rectifier& rect = cache ? *cache : local;
  DecoratedForest t0 = DecoratedForest::chain(r, n);
  ModuleVector v(r, n);
  for (const auto& [g, coeff] : c) {
    for (const auto& [f, x] : rect.rectify(act_forest(g, t0))) v.add(f, coeff * x);
  }
  return v;
}

ModuleVector act_module(const GroupElement& g, const ModuleVector& v, Rectifier* cache) {
  Rectifier local;
  Rectifier& rect = cache ? *cache : local;
  ModuleVector out(v.r(), v.n());
  for (const auto& [t, c] : v.terms()) {
    for (const auto& [f, x] : rect.rectify(act_forest(g, t))) out.add(f, c * x);
  }
  return out;
}

RationalFunction realize_r1(const ModuleVector& v) {
  if (v.r() != 1) throw std::invalid_argument("the realization is defined for r = 1 only");
  RationalFunction total(v.n());
  for (const auto& [t, c] : v.terms()) {
    RationalFunction term(v.n(), Cyclotomic(c));
    for (int i = 0; i < t.n(); ++i) {
      if (!t.is_root(i)) {
        term *= RationalFunction::inverse_difference(v.n(), i, t.parent(i), RootOfUnity());
      }
    }
    total += term;
  }
  return total;
}

GroupAlgebraElement group_algebra_product(const GroupAlgebraElement& a,
                                          const GroupAlgebraElement& b) {
  GroupAlgebraElement out;
  for (const auto& [g, x] : a) {
    for (const auto& [h, y] : b) {
      Integer& slot = out[g * h];
      slot += x * y;
      if (slot == 0) out.erase(g * h);
    }
  }
  return out;
}

ModuleVector act_group_algebra(const GroupAlgebraElement& x, const LabelledTree& t,
                               Rectifier* cache) {
  Rectifier local;
  Rectifier& rect = cache ? *cache : local;
  ModuleVector out(t.r(), t.n());
  for (const auto& [g, c] : x) {
    for (const auto& [f, v] : rect.rectify(act_forest(g, t))) out.add(f, Rational(c * v));
  }
  return out;
}

GroupElement cycle_element(int n, int i) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int k = 0; k + 1 < i; ++k) perm[k] = k + 1;
  if (i >= 1) perm[i - 1] = 0;
  return GroupElement::permutation(1, perm);
}

GroupAlgebraElement ls_coefficient(int n, int p) {
  // Coefficients of t^0..t^{n-1}, built left to right.
  std::vector<GroupAlgebraElement> poly(n);
  poly[0][GroupElement::identity(1, n)] = 1;
  for (int i = n - 1; i >= 1; --i) {
    GroupAlgebraElement factor{{cycle_element(n, i), Integer(-1)}};
    std::vector<GroupAlgebraElement> next = poly;
    for (int d = 0; d + 1 < n; ++d) {
      for (const auto& [g, c] : group_algebra_product(poly[d], factor)) {
        Integer& slot = next[d + 1][g];
        slot += c;
        if (slot == 0) next[d + 1].erase(g);
      }
    }
    poly = std::move(next);
  }
  if (p < 0 || p >= n) throw std::invalid_argument("p out of range");
  return poly[p];
}

bool verify_ls_identity(int n, int p, Rectifier* cache) {
  Rectifier local;
  Rectifier& rect = cache ? *cache : local;
  DecoratedForest t0 = DecoratedForest::chain(1, n);
  GroupElement cn = cycle_element(n, n);
  GroupElement power = GroupElement::identity(1, n);
  for (int k = 0; k < p; ++k) power = cn * power;
  ModuleVector lhs = act_group_algebra({{power, Integer(1)}}, t0, &rect);
  ModuleVector rhs = act_group_algebra(ls_coefficient(n, p), t0, &rect);
  return lhs == rhs;
}

std::vector<GroupElement> shuffle_representatives(int r, int n, int d) {
  std::vector<GroupElement> out;
  for (const auto& w : all_permutations(n)) {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[w[i]] = i;
    bool ok = true;
    for (int v = 0; v + 1 < n && ok; ++v) {
      if (v + 1 != d && pos[v] > pos[v + 1]) ok = false;
    }
    if (ok) out.push_back(GroupElement::permutation(r, w));
  }
  return out;
}

bool annihilator_check(int r, int n, Rectifier* cache) {
  Rectifier local;
  Rectifier& rect = cache ? *cache : local;
  DecoratedForest t0 = DecoratedForest::chain(r, n);
  for (int z = 0; z < r; ++z) {
    std::vector<int> zeta(n, z);
    GroupAlgebraElement x{{GroupElement::diagonal(r, zeta), Integer(1)}};
    x[GroupElement::identity(r, n)] -= 1;
    if (!act_group_algebra(x, t0, &rect).is_zero()) return false;
  }
  for (int d = 1; d < n; ++d) {
    GroupAlgebraElement x;
    for (const auto& w : shuffle_representatives(r, n, d)) x[w] += 1;
    if (!act_group_algebra(x, t0, &rect).is_zero()) return false;
  }
  return true;
}

}  // namespace osforest
