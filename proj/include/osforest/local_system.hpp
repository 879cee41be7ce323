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

#ifndef OSFOREST_LOCAL_SYSTEM_HPP_
#define OSFOREST_LOCAL_SYSTEM_HPP_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "osforest/class_function.hpp"
#include "osforest/forest.hpp"
#include "osforest/os_algebra.hpp"
#include "osforest/rational.hpp"

namespace osforest {

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Weights a_1..a_n with a chosen r such that every r a_i is an integer.
class WeightVector {
 public:
  WeightVector() = default;
  // Throws ValidationError unless r >= 1 and r a_i is integral for all i.
  WeightVector(std::vector<Rational> a, int r);
  // The smallest valid r (lcm of the denominators).
  static WeightVector with_minimal_r(std::vector<Rational> a);
  // n copies of s/r.
  static WeightVector uniform(int n, long s, int r);

  int n() const { return static_cast<int>(a_.size()); }
  int r() const { return r_; }
  const std::vector<Rational>& a() const { return a_; }
  const Rational& operator[](int i) const { return a_[i]; }
  // r a_i as a machine integer.
  long scaled(int i) const;
  // w lies in Z_{(a_i)}: a_{w(i)} = a_i for all i.
  bool is_stabilized_by(const GroupElement& w) const;

 private:
  std::vector<Rational> a_;
  int r_ = 1;
};

// Every tree of f has an integral weight sum.
bool is_admissible(const DecoratedForest& f, const std::vector<Rational>& a);
std::vector<DecoratedForest> admissible_forests(const std::vector<Rational>& a, int k, int l,
                                                bool rectified_only);
// |F(1,n;a)^{o,k,l}| keyed by (k, l); only nonzero entries.
std::map<std::pair<int, int>, long> admissible_counts(const std::vector<Rational>& a);
// p -> dim H^p(T(1,n), L); only nonzero degrees.
std::map<int, long> betti_numbers(const std::vector<Rational>& a);

// b_j(F) = -floor(sum_{k <= j} a_k) + sum_{i -> j} ceil(sum_{k <= i} a_k).
std::vector<Integer> b_exponents(const DecoratedForest& f, const std::vector<Rational>& a);
// The orientation-free form: -sum_{k ~ j} a_k + ceil(sum_{k ~ j, k !<= j} a_k)
// + sum_{i -> j} ceil(sum_{k <= i} a_k).
std::vector<Integer> b_exponents_unoriented(const DecoratedForest& f,
                                            const std::vector<Rational>& a);
// The edge out of i is breakable: sum_{k <= i} a_k is an integer.
bool is_breakable(const DecoratedForest& f, const std::vector<Rational>& a, int i);

// beta(F) = sum_{zeta in mu_r^n} zeta^{r a} alpha(zeta.F) for F with trivial
// labels, computed tree by tree: the stabilizer of F contributes
// prod_T sum_{zeta in mu_r} zeta^{sum_T r a_i}, and the remaining sum runs over
// zeta with zeta = 1 on every root.
OSElement beta_element(const DecoratedForest& f, const WeightVector& w,
                       Rectifier* cache = nullptr);
// The same element from the full r^n-term sum.
OSElement beta_element_direct(const DecoratedForest& f, const WeightVector& w,
                              Rectifier* cache = nullptr);

struct Resonance {
  bool resonant = false;
  int bullet = 0;            // 1, 2 or 3; 0 when not resonant
  std::vector<int> witness;  // 0-based subset
};
// pairs[i][j] for i < j holds a_{i,j}; other entries are ignored. An empty
// pairs matrix means all a_{i,j} = 0. Throws SizeGuardError for n > 20.
Resonance is_resonant(const std::vector<Rational>& a,
                      const std::vector<std::vector<Rational>>& pairs = {});

// Rectified admissible forests without closed roots or breakable edges.
std::vector<DecoratedForest> module_generators(const std::vector<Rational>& a);

// Trace of w in Z_{(a_i)} on A^{k,l}(T(r,n))_{(a_i)} in the basis of
// rectified admissible forests.
Cyclotomic isotypic_trace(const GroupElement& w, const std::vector<Rational>& a, int k, int l,
                          Rectifier& cache);
// The S_n character for weights that are all equal.
ClassFunction isotypic_character(const std::vector<Rational>& a, int k, int l);

}  // namespace osforest

#endif  // OSFOREST_LOCAL_SYSTEM_HPP_
