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

#ifndef OSFOREST_TREE_MODULE_HPP_
#define OSFOREST_TREE_MODULE_HPP_

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "osforest/forest.hpp"
#include "osforest/group.hpp"
#include "osforest/rational.hpp"
#include "osforest/rational_function.hpp"

namespace osforest {

using ForestCombination = std::map<DecoratedForest, long>;

// Rewrites forests into rectified ones using the three-term edge relation
// and the root flips. For a tree this is the rectification of [T]; for a
// forest with closed roots, flipping an edge into a closed root produces a
// correction forest with one more closed root. Results are cached per
// instance.
class Rectifier {
 public:
  const ForestCombination& rectify(const DecoratedForest& f);
  std::size_t cache_size() const { return cache_.size(); }

 private:
  std::unordered_map<DecoratedForest, ForestCombination, ForestHash> cache_;
};

// [F1] + [F2] = [F3] where F1 has i -(x)-> j -(y)-> k, F3 has i -(x+y)-> k,
// j -(y)-> k and F2 has j -(-x)-> i, i -(x+y)-> k.
struct TripleRelation {
  DecoratedForest f1, f2, f3;
};
// F has i -(e)-> j with j a root; F' has j -(-e)-> i with i a root of the same
// status. For open roots [F] + sign [F'] = 0, where sign = +1 for trees but
// depends on the open roots between i and j in a general forest; for closed
// roots [F] + [F'] = [F''] with F'' the forest without the edge, both roots
// closed, and sign = +1.
struct FlipRelation {
  DecoratedForest f, f_prime;
  std::optional<DecoratedForest> f_double_prime;
  int sign = 1;
};

// c with alpha(F) = c alpha(F') for an open-root flip of the edge i -> j.
int open_flip_coefficient(const DecoratedForest& f, const DecoratedForest& fp, int i, int j);

// Every triple relation whose F1 is f (one per path i -> j -> k).
std::vector<TripleRelation> triple_relations(const DecoratedForest& f1);
// Every flip relation whose F is f (one per edge into a root).
std::vector<FlipRelation> flip_relations(const DecoratedForest& f);

// A linear combination of rectified trees with rational coefficients.
class ModuleVector {
 public:
  ModuleVector() = default;
  ModuleVector(int r, int n) : r_(r), n_(n) {}

  int r() const { return r_; }
  int n() const { return n_; }
  const std::map<DecoratedForest, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const DecoratedForest& t, const Rational& c);
  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  ModuleVector& operator*=(const Rational& c);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    return a.terms_ == b.terms_;
  }

  // "[[\"1->2\",\"1\"],...]"-style pairs in basis order.
  std::vector<std::pair<std::string, std::string>> serialize() const;

 private:
  int r_ = 1;
  int n_ = 0;
  std::map<DecoratedForest, Rational> terms_;
};

ModuleVector rectify_tree(const LabelledTree& t, Rectifier* cache = nullptr);

// The unique zeta with zeta_n = 1 and the all-ones-labelled tree base such
// that zeta.base == t. zeta is returned as exponents.
std::pair<std::vector<int>, LabelledTree> decompose_by_Z(const LabelledTree& t);

// [T] = sum over refining (zeta, w) of [zeta w . T_0]; keys are the group
// elements zeta w.
using ChainVector = std::map<GroupElement, Rational>;
ChainVector chain_expand(const LabelledTree& t);
ModuleVector chain_to_module(const ChainVector& c, int r, int n, Rectifier* cache = nullptr);

ModuleVector act_module(const GroupElement& g, const ModuleVector& v,
                        Rectifier* cache = nullptr);

// sum c_T / p_T with p_T = prod over edges (z_i - z_j). Requires r = 1.
RationalFunction realize_r1(const ModuleVector& v);

// Group algebra elements of Z[W(r, n)].
using GroupAlgebraElement = std::map<GroupElement, Integer>;
GroupAlgebraElement group_algebra_product(const GroupAlgebraElement& a,
                                          const GroupAlgebraElement& b);
ModuleVector act_group_algebra(const GroupAlgebraElement& x, const LabelledTree& t,
                               Rectifier* cache = nullptr);

// The i-cycle (1, 2, ..., i) in S_n (as a W(1, n) element).
GroupElement cycle_element(int n, int i);
// b_{n,p}: coefficient of t^p in (1 - c_{n-1} t)(1 - c_{n-2} t)...(1 - c_1 t).
GroupAlgebraElement ls_coefficient(int n, int p);
bool verify_ls_identity(int n, int p, Rectifier* cache = nullptr);

// Permutations w whose sequence (w(1), ..., w(n)) is a shuffle of (1..d) and
// (d+1..n).
std::vector<GroupElement> shuffle_representatives(int r, int n, int d);
bool annihilator_check(int r, int n, Rectifier* cache = nullptr);

}  // namespace osforest

#endif  // OSFOREST_TREE_MODULE_HPP_
