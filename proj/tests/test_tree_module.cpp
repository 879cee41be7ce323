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

#include "doctest.h"
#include "osforest/tree_module.hpp"

using namespace osforest;

namespace {

ModuleVector unit(const DecoratedForest& t, long c = 1) {
  ModuleVector v(t.r(), t.n());
  v.add(t, Rational(c));
  return v;
}

RationalFunction inverse_p(const DecoratedForest& t) {
  RationalFunction out(t.n(), Cyclotomic(1));
  for (int i = 0; i < t.n(); ++i) {
    if (!t.is_root(i)) out *= RationalFunction::inverse_difference(t.n(), i, t.parent(i), {});
  }
  return out;
}

}  // namespace

TEST_CASE("rectification of small trees") {
  auto t0 = DecoratedForest::chain(1, 2);
  CHECK(rectify_tree(t0) == unit(t0));
  auto back = DecoratedForest::parse("2->1", 1, 2);
  CHECK(rectify_tree(back) == unit(t0, -1));
  // Every rectified tree is its own image.
  for (const auto& t : enumerate_trees(2, 3, true)) CHECK(rectify_tree(t) == unit(t));
}

TEST_CASE("rectification agrees with the 1/p_T realization") {
  Rectifier cache;
  for (const auto& t : enumerate_trees(1, 4, false)) {
    CHECK(realize_r1(rectify_tree(t, &cache)) == inverse_p(t));
  }
  CHECK(realize_r1(unit(DecoratedForest::chain(1, 2))) ==
        RationalFunction::inverse_difference(2, 0, 1, {}));
  CHECK(realize_r1(ModuleVector(1, 3)).is_zero());
}

TEST_CASE("rectified images only involve rectified trees") {
  Rectifier cache;
  for (const auto& t : enumerate_trees(2, 4, false)) {
    for (const auto& [f, c] : cache.rectify(t)) {
      CHECK(f.is_rectified());
      CHECK(c != 0);
    }
  }
}

TEST_CASE("decomposition by the diagonal subgroup") {
  auto t = DecoratedForest::parse("1->2[e1]", 2, 2);
  auto [zeta, base] = decompose_by_Z(t);
  CHECK(zeta == std::vector<int>{1, 0});
  CHECK(base == DecoratedForest::parse("1->2", 2, 2));
  std::vector<int> perm{0, 1, 2};
  for (const auto& tree : enumerate_trees(2, 3, false)) {
    auto [z, b] = decompose_by_Z(tree);
    CHECK(z.back() == 0);
    CHECK(act_forest(GroupElement(2, z, perm), b) == tree);
  }
  auto [z1, b1] = decompose_by_Z(DecoratedForest::chain(3, 3));
  CHECK(z1 == std::vector<int>{0, 0, 0});
}

TEST_CASE("chain expansion") {
  auto t0 = DecoratedForest::chain(1, 3);
  auto c0 = chain_expand(t0);
  REQUIRE(c0.size() == 1);
  CHECK(c0.begin()->first == GroupElement::identity(1, 3));
  // {1->3, 2->3} refines into the two chains 1->2->3 and 2->1->3.
  auto star = DecoratedForest::parse("1->3;2->3", 1, 3);
  auto c = chain_expand(star);
  CHECK(c.size() == 2);
  for (const auto& [g, coeff] : c) {
    CHECK(coeff == 1);
    CHECK(g.perm(2) == 2);
  }
  // The expansion is another way to rectify.
  for (int r = 1; r <= 2; ++r) {
    for (const auto& t : enumerate_trees(r, 3, true)) {
      CHECK(chain_to_module(chain_expand(t), r, 3) == rectify_tree(t));
      for (const auto& [g, coeff] : chain_expand(t)) CHECK(g.perm(2) == 2);
    }
  }
}

TEST_CASE("module action") {
  auto t0 = DecoratedForest::chain(1, 2);
  std::vector<int> sw{1, 0};
  CHECK(act_module(GroupElement::permutation(1, sw), unit(t0)) == unit(t0, -1));
  // w0 [T0] = (-1)^{n-1} [T0].
  std::vector<int> w0{2, 1, 0};
  auto t3 = DecoratedForest::chain(1, 3);
  CHECK(act_module(GroupElement::permutation(1, w0), unit(t3)) == unit(t3));
  std::vector<int> w04{3, 2, 1, 0};
  auto t4 = DecoratedForest::chain(1, 4);
  CHECK(act_module(GroupElement::permutation(1, w04), unit(t4)) == unit(t4, -1));
}

TEST_CASE("Lehrer-Solomon identity") {
  for (int n = 1; n <= 5; ++n) CHECK(verify_ls_identity(n, 0));
  CHECK(verify_ls_identity(2, 1));
  CHECK(verify_ls_identity(4, 2));
  CHECK(ls_coefficient(4, 2).size() == 3);
  // Negative control: c_4 against the wrong coefficient.
  Rectifier cache;
  auto t4 = DecoratedForest::chain(1, 4);
  auto lhs = act_group_algebra({{cycle_element(4, 4), Integer(1)}}, t4, &cache);
  CHECK_FALSE(lhs == act_group_algebra(ls_coefficient(4, 2), t4, &cache));
}

TEST_CASE("annihilators") {
  CHECK(annihilator_check(1, 2));
  CHECK(annihilator_check(3, 2));
  CHECK(annihilator_check(1, 4));
  CHECK(annihilator_check(2, 3));
  CHECK(shuffle_representatives(1, 4, 2).size() == 6);
  CHECK(shuffle_representatives(1, 3, 1).size() == 3);
}

TEST_CASE("relation generators") {
  auto f = DecoratedForest::parse("1->2[e1];2->3", 2, 3);
  auto triples = triple_relations(f);
  REQUIRE(triples.size() == 1);
  CHECK(triples[0].f3 == DecoratedForest::parse("1->3[e1];2->3", 2, 3));
  CHECK(triples[0].f2 == DecoratedForest::parse("2->1[e1];1->3[e1]", 2, 3));
  auto flips = flip_relations(DecoratedForest::parse("2->1*", 1, 2));
  REQUIRE(flips.size() == 1);
  CHECK(flips[0].f_prime == DecoratedForest::parse("1->2*", 1, 2));
  REQUIRE(flips[0].f_double_prime.has_value());
  CHECK(*flips[0].f_double_prime == DecoratedForest::parse("1*;2*", 1, 2));
  // Trees flip with sign +1; an open root in between changes it.
  CHECK(flip_relations(DecoratedForest::parse("2->1", 1, 2))[0].sign == 1);
  CHECK(flip_relations(DecoratedForest::parse("3->1", 1, 3))[0].sign == -1);
}
