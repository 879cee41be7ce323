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

#ifndef OSFOREST_CHARACTERS_HPP_
#define OSFOREST_CHARACTERS_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "osforest/class_function.hpp"
#include "osforest/group.hpp"
#include "osforest/rational.hpp"
#include "osforest/tree_module.hpp"

namespace osforest {

long moebius(long d);
long euler_phi(long d);

// sum over h in mu_n (generated by the n-cycle) of cycle type (d^{n/d}) of
// psi_n(h): the sum of the primitive d-th roots of unity. Throws unless d | n.
Rational cyclic_induction_value(long n, long d);

struct MysterySides {
  Rational lhs;     // mu(d)
  Rational rhs;     // sum over e | r, f | m, lcm(e, f) = d of the closed form
  Rational direct;  // the same double sum by summing roots of unity
};
// Throws unless d | r m.
MysterySides mystery_identity_sides(long r, long m, long d);

// chi^lambda(mu) by the Murnaghan-Nakayama rule.
Integer mn_character(const Partition& lambda, const Partition& mu);
ClassFunction irreducible_character(const Partition& lambda);
// Multiplicity of every V^lambda in an S_n class function.
std::map<Partition, Integer> decompose_sn(const ClassFunction& chi);

// A subgroup H of W(r, n) given with a one-dimensional character, as a list
// of its elements.
using SubgroupCharacter = std::vector<std::pair<GroupElement, Cyclotomic>>;

// Ind_H^{W(r, n)} by summing over H: chi(g) = |C(g)| / |H| sum_{h ~ g} chi(h).
ClassFunction induce(const SubgroupCharacter& h, int r, int n);

// The block subgroups of the induction corollaries. Consecutive blocks of
// the given sizes (open blocks first); on each block mu_r acts diagonally and
// mu_size by the block cycle; equal-size blocks of the same kind are
// permuted. The character is psi (product of the block-cycle components)
// times the sign of the permutation of open blocks.
struct SubgroupSpec {
  int r = 1;
  int n = 0;
  std::vector<int> open_blocks;
  std::vector<int> closed_blocks;

  std::string describe() const;
};
SubgroupCharacter subgroup_character(const SubgroupSpec& spec);
ClassFunction induced_character(const SubgroupSpec& spec, long max_order = 100000);

// The character of V(r, n) from the action on rectified trees.
ClassFunction module_character(int r, int n, long max_order = 100000);

// W(r, m) inside S_{rm} as the centralizer of m disjoint r-cycles.
GroupElement embed_wreath(const GroupElement& g);

// The right-hand sides of the corollaries as class functions.
ClassFunction bigindcor_rhs(int r, int n, int k, int l);
ClassFunction otherbigindcor_rhs(int r, int n, int k, int l);
// Ind_{W(r, n/r)}^{S_n}(det (x) A^{k - n + n/r, l}(T(r, n/r))).
ClassFunction mysterycor_rhs(int r, int n, int k, int l);
// Ind_{mu_r x mu_{n/r}}^{S_n}(psi_r^{n/r} x psi_{n/r}).
ClassFunction mysterythm_middle(int r, int m);
// Ind_{W(r, m)}^{S_{rm}}(prod (x) V(r, m)).
ClassFunction mysterythm_right(int r, int m);

enum class CorollaryCase { kBigInd, kOtherBigInd, kMystery, kComb, kLehrerSolomon, kMysteryThm };

struct CorollaryArgs {
  int r = 1, n = 1, k = 0, l = 0;
  long s = 1;
  int m = 1;
};
// Compares the two sides exactly. Throws SizeGuardError beyond max_order.
bool verify_corollary(CorollaryCase which, const CorollaryArgs& args, long max_order = 100000);

}  // namespace osforest

#endif  // OSFOREST_CHARACTERS_HPP_
