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

#include "osforest/local_system.hpp"

#include <stdexcept>

namespace osforest {

WeightVector::WeightVector(std::vector<Rational> a, int r) : a_(std::move(a)), r_(r) {
  if (r < 1) throw ValidationError("r must be positive");
  if (static_cast<int>(a_.size()) > kMaxVertices) throw ValidationError("too many weights");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!is_integer(a_[i] * r)) {
      throw ValidationError("r*a_" + std::to_string(i + 1) + " = " + to_string(a_[i] * r) +
                            " is not an integer");
    }
  }
}

WeightVector WeightVector::with_minimal_r(std::vector<Rational> a) {
  long r = 1;
  for (const auto& q : a) r = lcm_long(r, q.get_den().get_si());
  return WeightVector(std::move(a), static_cast<int>(r));
}

WeightVector WeightVector::uniform(int n, long s, int r) {
  return WeightVector(std::vector<Rational>(n, make_rational(s, r)), r);
}

long WeightVector::scaled(int i) const { return to_long(a_[i] * r_); }

bool WeightVector::is_stabilized_by(const GroupElement& w) const {
  for (int i = 0; i < n(); ++i) {
    if (a_[w.perm(i)] != a_[i]) return false;
  }
  return true;
}

bool is_admissible(const DecoratedForest& f, const std::vector<Rational>& a) {
  if (static_cast<int>(a.size()) != f.n()) throw std::invalid_argument("weight vector length");
  for (const auto& comp : f.components()) {
    Rational s = 0;
    for (int v : comp) s += a[v];
    if (!is_integer(s)) return false;
  }
  return true;
}

std::vector<DecoratedForest> admissible_forests(const std::vector<Rational>& a, int k, int l,
                                                bool rectified_only) {
  std::vector<DecoratedForest> out;
  int n = static_cast<int>(a.size());
  if (k < 0 || l < 0 || k + l > n) return out;
  for_each_forest(1, n, k, l, rectified_only, [&](const DecoratedForest& f) {
    if (is_admissible(f, a)) out.push_back(f);
  });
  return out;
}

std::map<std::pair<int, int>, long> admissible_counts(const std::vector<Rational>& a) {
  std::map<std::pair<int, int>, long> out;
  int n = static_cast<int>(a.size());
  for_each_forest(1, n, true, [&](const DecoratedForest& f) {
    if (is_admissible(f, a)) ++out[{f.num_edges(), f.num_closed()}];
  });
  return out;
}

std::map<int, long> betti_numbers(const std::vector<Rational>& a) {
  std::map<int, long> out;
  for (const auto& [kl, count] : admissible_counts(a)) out[kl.first + kl.second] += count;
  return out;
}

std::vector<Integer> b_exponents(const DecoratedForest& f, const std::vector<Rational>& a) {
  ForestWeights q = forest_queries(f, a);
  std::vector<Integer> b(f.n());
  for (int j = 0; j < f.n(); ++j) {
    b[j] = -osforest::floor(q.subtree_sum[j]);
    for (int i : f.children(j)) b[j] += osforest::ceil(q.subtree_sum[i]);
  }
  return b;
}

std::vector<Integer> b_exponents_unoriented(const DecoratedForest& f,
                                            const std::vector<Rational>& a) {
  ForestWeights q = forest_queries(f, a);
  std::vector<Integer> b(f.n());
  for (int j = 0; j < f.n(); ++j) {
    Rational outside = 0;
    for (int k : q.components[q.component_of[j]]) {
      if (!q.precedes[k][j]) outside += a[k];
    }
    Rational total = -q.component_sum[j] + Rational(osforest::ceil(outside));
    for (int i : f.children(j)) total += Rational(osforest::ceil(q.subtree_sum[i]));
    if (!is_integer(total)) throw std::domain_error("b_j is not an integer: forest inadmissible");
    b[j] = total.get_num();
  }
  return b;
}

bool is_breakable(const DecoratedForest& f, const std::vector<Rational>& a, int i) {
  if (f.is_root(i)) throw std::invalid_argument("vertex has no outgoing edge");
  return is_integer(forest_queries(f, a).subtree_sum[i]);
}

namespace {

DecoratedForest lift(const DecoratedForest& f, int r) {
  DecoratedForest g(r, f.n());
  for (int i = 0; i < f.n(); ++i) {
    if (f.is_root(i)) {
      g.set_root(i, f.is_closed_root(i));
    } else {
      if (f.label(i) != 0) {
        throw std::invalid_argument("beta(F) needs trivial edge labels");
      }
      g.set_edge(i, f.parent(i), 0);
    }
  }
  return g;
}

Cyclotomic weight_character(const std::vector<int>& zeta, const WeightVector& w) {
  long e = 0;
  for (int i = 0; i < w.n(); ++i) e += static_cast<long>(zeta[i]) * w.scaled(i);
  return Cyclotomic::root(RootOfUnity(mod_positive(e, w.r()), w.r()));
}

// Calls visit for every vector in (Z/r)^free with zeros elsewhere.
template <typename Visit>
void for_each_assignment(int r, int n, const std::vector<int>& free, Visit visit) {
  std::vector<int> zeta(n, 0);
  while (true) {
    visit(zeta);
    std::size_t pos = 0;
    while (pos < free.size()) {
      int& z = zeta[free[pos]];
      if (++z < r) break;
      z = 0;
      ++pos;
    }
    if (pos == free.size()) return;
  }
}

}  // namespace

OSElement beta_element(const DecoratedForest& f, const WeightVector& w, Rectifier* cache) {
  if (f.n() != w.n()) throw std::invalid_argument("weight vector length");
  Rectifier local;
  Rectifier& rect = cache ? *cache : local;
  int r = w.r(), n = f.n();
  DecoratedForest base = lift(f, r);
  OSElement out(r, n);
  Rational stabilizer_sum = 1;
  for (const auto& comp : f.components()) {
    long s = 0;
    for (int v : comp) s += w.scaled(v);
    stabilizer_sum *= root_of_unity_sum(r, s);
  }
  if (sgn(stabilizer_sum) == 0) return out;
  std::vector<int> free;
  for (int i = 0; i < n; ++i) {
    if (!f.is_root(i)) free.push_back(i);
  }
  Cyclotomic factor(stabilizer_sum);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for_each_assignment(r, n, free, [&](const std::vector<int>& zeta) {
    DecoratedForest g = act_forest(GroupElement(r, zeta, perm), base);
    add_reduced(out, g, factor * weight_character(zeta, w), rect);
  });
  return out;
}

OSElement beta_element_direct(const DecoratedForest& f, const WeightVector& w,
                              Rectifier* cache) {
  if (f.n() != w.n()) throw std::invalid_argument("weight vector length");
  Rectifier local;
  Rectifier& rect = cache ? *cache : local;
  int r = w.r(), n = f.n();
  DecoratedForest base = lift(f, r);
  OSElement out(r, n);
  std::vector<int> all(n), perm(n);
  for (int i = 0; i < n; ++i) all[i] = perm[i] = i;
  for_each_assignment(r, n, all, [&](const std::vector<int>& zeta) {
    DecoratedForest g = act_forest(GroupElement(r, zeta, perm), base);
    add_reduced(out, g, weight_character(zeta, w), rect);
  });
  return out;
}

Resonance is_resonant(const std::vector<Rational>& a,
                      const std::vector<std::vector<Rational>>& pairs) {
  int n = static_cast<int>(a.size());
  if (n > 20) throw SizeGuardError("resonance subset scan is limited to n <= 20");
  auto pair = [&](int i, int j) -> Rational {
    if (pairs.empty()) return 0;
    return pairs.at(i).at(j);
  };
  auto members = [n](unsigned mask) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1U) v.push_back(i);
    }
    return v;
  };
  auto pair_sum = [&](const std::vector<int>& s) {
    Rational t = 0;
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = x + 1; y < s.size(); ++y) t += pair(s[x], s[y]);
    }
    return t;
  };
  auto single_sum = [&](const std::vector<int>& s) {
    Rational t = 0;
    for (int i : s) t += a[i];
    return t;
  };
  unsigned full = n == 0 ? 0U : (1U << n) - 1U;
  std::vector<int> everything = members(full);
  Rational total = single_sum(everything) + pair_sum(everything);
  if (is_integer(total) && sgn(total) != 0) return {true, 1, everything};

  // Subsets by size, then by mask within a size.
  std::vector<std::vector<unsigned>> by_size(n + 1);
  for (unsigned mask = 0; mask <= full; ++mask) {
    by_size[__builtin_popcount(mask)].push_back(mask);
    if (mask == full) break;
  }
  for (int size = 2; size <= n; ++size) {
    for (unsigned mask : by_size[size]) {
      auto s = members(mask);
      Rational t = pair_sum(s);
      if (is_integer(t) && sgn(t) > 0) return {true, 2, s};
    }
  }
  for (int size = 1; size < n; ++size) {
    for (unsigned mask : by_size[size]) {
      auto s = members(mask);
      Rational t = single_sum(s) + pair_sum(s);
      if (is_integer(t) && sgn(t) > 0) return {true, 3, s};
    }
  }
  return {};
}

std::vector<DecoratedForest> module_generators(const std::vector<Rational>& a) {
  std::vector<DecoratedForest> out;
  int n = static_cast<int>(a.size());
  for (int k = 0; k < n; ++k) {
    for (const auto& f : admissible_forests(a, k, 0, true)) {
      bool breakable = false;
      for (int i = 0; i < n && !breakable; ++i) {
        if (!f.is_root(i) && is_breakable(f, a, i)) breakable = true;
      }
      if (!breakable) out.push_back(f);
    }
  }
  return out;
}

Cyclotomic isotypic_trace(const GroupElement& w, const std::vector<Rational>& a, int k, int l,
                          Rectifier& cache) {
  if (w.r() != 1) throw std::invalid_argument("isotypic traces take permutations");
  for (int i = 0; i < w.n(); ++i) {
    if (a[w.perm(i)] != a[i]) throw std::invalid_argument("permutation does not fix the weights");
  }
  long trace = 0;
  for (const auto& f : admissible_forests(a, k, l, true)) {
    const auto& image = cache.rectify(act_forest(w, f));
    auto it = image.find(f);
    if (it != image.end()) trace += action_sign(w, f) * it->second;
  }
  return Cyclotomic(trace);
}

ClassFunction isotypic_character(const std::vector<Rational>& a, int k, int l) {
  for (const auto& q : a) {
    if (q != a.front()) {
      throw std::invalid_argument("isotypic_character needs equal weights; use isotypic_trace");
    }
  }
  Rectifier cache;
  return ClassFunction::from_function(1, static_cast<int>(a.size()), [&](const GroupElement& g) {
    return isotypic_trace(g, a, k, l, cache);
  });
}

}  // namespace osforest
