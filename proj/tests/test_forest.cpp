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

#include <map>
#include <set>

#include "doctest.h"
#include "osforest/forest.hpp"
#include "osforest/group.hpp"

using namespace osforest;

namespace {

long count_trees(int r, int n, bool rect) {
  long c = 0;
  for_each_tree(r, n, rect, [&](const DecoratedForest&) { ++c; });
  return c;
}

}  // namespace

TEST_CASE("tree counts") {
  CHECK(count_trees(1, 3, false) == 9);
  CHECK(count_trees(2, 2, true) == 2);
  CHECK(count_trees(5, 1, false) == 1);
  CHECK(count_trees(3, 4, false) == 12 * 12 * 12);
  CHECK(count_trees(3, 4, true) == 27 * 6);
}

TEST_CASE("the twelve forests of F(2,2)") {
  std::map<std::pair<int, int>, int> counts;
  long total = 0;
  for_each_forest(2, 2, false, [&](const DecoratedForest& f) {
    ++counts[{f.num_edges(), f.num_closed()}];
    ++total;
  });
  CHECK(total == 12);
  std::map<std::pair<int, int>, int> want{{{0, 0}, 1}, {{1, 0}, 4}, {{0, 1}, 2}, {{1, 1}, 4},
                                          {{0, 2}, 1}};
  CHECK(counts == want);
  auto rect = enumerate_forests(2, 2, 1, 0, true);
  REQUIRE(rect.size() == 2);
  for (const auto& f : rect) CHECK(f.parent(0) == 1);
  CHECK(enumerate_forests(1, 1, 0, 1, false).size() == 1);
}

TEST_CASE("forest text round trip") {
  for (const char* text : {"1->2[e1];3*", "2->1;3->1*", "1*;2*;3"}) {
    auto f = DecoratedForest::parse(text, 2, 3);
    CHECK(DecoratedForest::parse(f.to_string(), 2, 3) == f);
  }
  auto f = DecoratedForest::parse("1->2;2->3;3->4*", 1, 4);
  CHECK(f.is_closed_root(3));
  CHECK(f.is_tree() == false);  // a closed root is not an open-rooted tree
  CHECK(f.num_edges() == 3);
  CHECK_THROWS_AS(DecoratedForest::parse("1->1", 1, 2), ParseError);
  CHECK_THROWS_AS(DecoratedForest::parse("1->5", 1, 4), ParseError);
  CHECK_THROWS_AS(DecoratedForest::parse("1->2;1->3", 1, 3), ParseError);
  CHECK_THROWS_AS(DecoratedForest::parse("1=>2", 1, 3), ParseError);
}

TEST_CASE("group action on forests") {
  auto f = DecoratedForest::parse("1->2", 2, 2);
  GroupElement id = GroupElement::identity(2, 2);
  CHECK(act_forest(id, f) == f);
  std::vector<int> zeta{1, 0};
  auto g = act_forest(GroupElement::diagonal(2, zeta), f);
  CHECK(g == DecoratedForest::parse("1->2[e1]", 2, 2));
  std::vector<int> swap{1, 0};
  auto h = act_forest(GroupElement::permutation(2, swap), DecoratedForest::parse("1->2[e1]", 2, 2));
  CHECK(h == DecoratedForest::parse("2->1[e1]", 2, 2));
}

TEST_CASE("the action is a left action") {
  auto group = enumerate_group(2, 3);
  std::vector<DecoratedForest> sample = {DecoratedForest::parse("1->2[e1];3*", 2, 3),
                                         DecoratedForest::parse("3->1;2->1*", 2, 3),
                                         DecoratedForest::parse("1->3[e1];2->3", 2, 3)};
  for (const auto& f : sample) {
    for (std::size_t a = 0; a < group.size(); a += 5) {
      for (std::size_t b = 0; b < group.size(); b += 7) {
        CHECK(act_forest(group[a], act_forest(group[b], f)) == act_forest(group[a] * group[b], f));
      }
    }
  }
}

TEST_CASE("group elements") {
  CHECK(wreath_order(2, 3) == 48);
  CHECK(enumerate_group(2, 3).size() == 48);
  std::vector<int> t{1, 0, 2};
  CHECK(GroupElement::permutation(1, t).perm_sign() == -1);
  std::vector<int> zeta{1, 1}, id{0, 1}, sw{1, 0};
  CHECK(linear_character(LinearCharacter::kProd, GroupElement::diagonal(2, zeta)) == Cyclotomic(1));
  std::vector<int> z10{1, 0};
  GroupElement g = GroupElement::diagonal(2, z10) * GroupElement::permutation(2, sw);
  CHECK(linear_character(LinearCharacter::kDet, g) == Cyclotomic(1));
  for (const auto& x : enumerate_group(2, 2)) CHECK(x * x.inverse() == GroupElement::identity(2, 2));
  CHECK_THROWS_AS(enumerate_group(3, 8, 1000), SizeGuardError);
}

TEST_CASE("sign conventions") {
  DecoratedForest two_open(1, 2);
  CHECK(sign_epsilon_i(two_open, 0) == 1);
  CHECK(sign_epsilon_i(two_open, 1) == 1);
  auto edge = DecoratedForest::parse("1->2", 1, 2);
  CHECK(sign_epsilon_i(edge, 1) == -1);
  auto closed = DecoratedForest::parse("2*", 1, 2);
  CHECK(sign_epsilon_i(closed, 0) == 1);
  std::vector<int> id{0, 1}, sw{1, 0};
  CHECK(sign_epsilon_w(id, two_open) == 1);
  CHECK(sign_epsilon_w(sw, two_open) == -1);
  CHECK(sign_epsilon_w(sw, edge) == 1);
}

TEST_CASE("forest weight queries") {
  std::vector<Rational> half(3, make_rational(1, 2));
  auto chain = DecoratedForest::parse("1->2;2->3", 1, 3);
  auto q = forest_queries(chain, half);
  CHECK(q.subtree_sum[1] == 1);
  CHECK(q.subtree_sum[0] == make_rational(1, 2));
  std::vector<Rational> neg(4, make_rational(-1, 2));
  auto f = DecoratedForest::parse("1->2;2->3;3->4*", 1, 4);
  CHECK(forest_queries(f, neg).component_sum[0] == -2);
  CHECK(forest_queries(DecoratedForest(1, 1), std::vector<Rational>{make_rational(3, 7)}).subtree_sum[0] ==
        make_rational(3, 7));
}

TEST_CASE("partitions") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_with_length(5, 2).size() == 2);
  CHECK(Partition({3, 1}).to_string() == "(3,1)");
}
