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
#include "osforest/forms.hpp"
#include "osforest/os_algebra.hpp"

using namespace osforest;

namespace {

OSElement unit(const DecoratedForest& f, const Cyclotomic& c = Cyclotomic(1)) {
  OSElement x(f.r(), f.n());
  x.add(f, c);
  return x;
}

}  // namespace

TEST_CASE("reduction of non-rectified forests") {
  auto f = DecoratedForest::parse("1->2", 2, 2);
  CHECK(reduce_alpha(f) == unit(f));
  // 2 -(eta)-> 1 reduces to -alpha(1 -(eta^-1)-> 2).
  auto g = DecoratedForest::parse("2->1[e1]", 2, 2);
  CHECK(reduce_alpha(g) == unit(DecoratedForest::parse("1->2[e1]", 2, 2), Cyclotomic(-1)));
  // A closed-root flip leaves a correction with two closed roots.
  auto h = DecoratedForest::parse("2->1*", 1, 2);
  OSElement want = unit(DecoratedForest::parse("1*;2*", 1, 2)) -
                   unit(DecoratedForest::parse("1->2*", 1, 2));
  CHECK(reduce_alpha(h) == want);
}

TEST_CASE("reduction agrees with the symbolic forms") {
  Rectifier cache;
  for (int r = 1; r <= 2; ++r) {
    for (int n = 1; n <= 3; ++n) {
      for_each_forest(r, n, false, [&](const DecoratedForest& f) {
        CHECK(realize_os(reduce_alpha(f, &cache)) == alpha_form(f));
      });
    }
  }
  for_each_forest(1, 4, false, [&](const DecoratedForest& f) {
    if (f.num_edges() == 2) CHECK(realize_os(reduce_alpha(f, &cache)) == alpha_form(f));
  });
}

TEST_CASE("action signs match substitution in forms") {
  Rectifier cache;
  for (int r = 1; r <= 2; ++r) {
    const int n = r == 1 ? 3 : 2;
    auto group = enumerate_group(r, n);
    for_each_forest(r, n, true, [&](const DecoratedForest& f) {
      for (const auto& g : group) {
        CHECK(realize_os(act_os(g, unit(f), &cache)) == act_form(g, alpha_form(f)));
      }
    });
  }
  std::vector<int> sw{1, 0};
  auto f = DecoratedForest::parse("2*", 1, 2);
  CHECK(action_sign(GroupElement::permutation(1, sw), f) == -1);
  CHECK(act_os(GroupElement::permutation(1, sw), unit(f)) ==
        unit(DecoratedForest::parse("1*", 1, 2), Cyclotomic(-1)));
}

TEST_CASE("graded dimensions") {
  CHECK(graded_dimension(2, 2, 0, 0) == 1);
  CHECK(graded_dimension(2, 2, 1, 0) == 2);
  CHECK(graded_dimension(2, 2, 0, 1) == 2);
  CHECK(graded_dimension(2, 2, 1, 1) == 2);
  CHECK(graded_dimension(2, 2, 0, 2) == 1);
  CHECK(graded_dimension(3, 1, 0, 0) == 1);
  CHECK(graded_dimension(3, 1, 0, 1) == 1);
  // Poincare polynomial prod_{i=0}^{n-1} (1 + (r i + 1) t).
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 4; ++n) {
      std::vector<long> poly{1};
      for (int i = 0; i < n; ++i) {
        std::vector<long> next(poly.size() + 1, 0);
        for (std::size_t p = 0; p < poly.size(); ++p) {
          next[p] += poly[p];
          next[p + 1] += poly[p] * (static_cast<long>(r) * i + 1);
        }
        poly = next;
      }
      for (int p = 0; p <= n; ++p) {
        long sum = 0;
        for (int k = 0; k <= p; ++k) sum += graded_dimension(r, n, k, p - k);
        CHECK(sum == poly[p]);
      }
    }
  }
  long p3[] = {1, 6, 11, 6};
  for (int p = 0; p <= 3; ++p) {
    long sum = 0;
    for (int k = 0; k <= p; ++k) sum += graded_dimension(1, 3, k, p - k);
    CHECK(sum == p3[p]);
  }
}

TEST_CASE("OS characters") {
  auto triv = ClassFunction::trivial(2, 2);
  auto prod = ClassFunction::linear(2, 2, LinearCharacter::kProd);
  auto sign = ClassFunction::linear(2, 2, LinearCharacter::kSign);
  CHECK(os_character(2, 2, 1, 0) == triv + prod);
  CHECK(os_character(2, 2, 0, 2) == sign);
  for (int r = 1; r <= 3; ++r) CHECK(os_character(r, 2, 0, 0) == ClassFunction::trivial(r, 2));
  // Degrees are the graded dimensions.
  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; k + l <= 3; ++l) {
      CHECK(os_character(2, 3, k, l).degree() == Cyclotomic(graded_dimension(2, 3, k, l)));
    }
  }
  CHECK_THROWS_AS(os_character(4, 6, 1, 0, 1000), SizeGuardError);
}

TEST_CASE("induction decomposition index sets") {
  auto one = induction_decomposition(2, 2, 1, 0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].open_sizes == Partition({2}));
  CHECK(one[0].closed_sizes == Partition());
  auto two = induction_decomposition(2, 2, 0, 1);
  REQUIRE(two.size() == 1);
  CHECK(two[0].open_sizes == Partition({1}));
  CHECK(two[0].closed_sizes == Partition({1}));
  auto three = induction_decomposition(1, 3, 2, 0);
  REQUIRE(three.size() == 1);
  CHECK(three[0].open_sizes == Partition({3}));
}
