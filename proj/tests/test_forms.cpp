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

using namespace osforest;
using DF = DifferentialForm;

namespace {

std::vector<Rational> repeat(int n, long num, long den) {
  return std::vector<Rational>(n, make_rational(num, den));
}

}  // namespace

TEST_CASE("wedge and exterior derivative") {
  const RootOfUnity one;
  auto w12 = DF::omega(3, 0, 1, one);
  CHECK(wedge(w12, w12).is_zero());
  CHECK(wedge(DF::dz(2, 0), DF::dz(2, 1)) == -wedge(DF::dz(2, 1), DF::dz(2, 0)));
  // d(z1 dz2) = dz1 ^ dz2.
  auto z1dz2 = DF::function(RationalFunction::variable(2, 0)) * RationalFunction(2, Cyclotomic(1));
  z1dz2 = wedge(z1dz2, DF::dz(2, 1));
  CHECK(exterior_derivative(z1dz2) == DF::volume(2));
  // d of a logarithmic form vanishes, and d o d = 0.
  CHECK(exterior_derivative(w12).is_zero());
  auto f = DF::function(RationalFunction::inverse_difference(3, 0, 2, one) *
                        RationalFunction::variable(3, 1));
  CHECK(exterior_derivative(exterior_derivative(f)).is_zero());
  auto g = wedge(f, DF::omega(3, 1));
  CHECK(exterior_derivative(exterior_derivative(g)).is_zero());
}

TEST_CASE("Arnold relation") {
  const RootOfUnity one;
  auto w12 = DF::omega(3, 0, 1, one);
  auto w23 = DF::omega(3, 1, 2, one);
  auto w31 = DF::omega(3, 2, 0, one);
  CHECK((wedge(w12, w23) + wedge(w23, w31) + wedge(w31, w12)).is_zero());
  // The sum with a wrong sign is not zero.
  CHECK_FALSE((wedge(w12, w23) - wedge(w23, w31) + wedge(w31, w12)).is_zero());
}

TEST_CASE("alpha forms of small forests") {
  // With r = 1 the two orientations of an edge cancel.
  auto a = alpha_form(DecoratedForest::parse("1->2", 1, 2));
  auto b = alpha_form(DecoratedForest::parse("2->1", 1, 2));
  CHECK((a + b).is_zero());
  CHECK(a == -DF::omega(2, 0, 1, RootOfUnity()));
  CHECK(alpha_form(DecoratedForest(1, 3)) == DF::constant(3, Cyclotomic(1)));
  CHECK(alpha_form(DecoratedForest::parse("1*;2*", 2, 2)) ==
        wedge(DF::omega(2, 0), DF::omega(2, 1)));
}

TEST_CASE("pullback along z -> z^r") {
  for (int r = 1; r <= 3; ++r) {
    CHECK(pullback_power(DF::omega(2, 0), r) == DF::omega(2, 0) * Cyclotomic(r));
  }
  // (dz1 - dz2)/(z1 - z2) pulls back to the sum over mu_2 of the atoms.
  auto w = pullback_power(DF::omega(2, 0, 1, RootOfUnity()), 2);
  CHECK(w == DF::omega(2, 0, 1, RootOfUnity()) + DF::omega(2, 0, 1, RootOfUnity(1, 2)));
}

TEST_CASE("beta-bar of an isolated open root") {
  WeightVector w({make_rational(2)}, 1);
  std::vector<long> e{-2};
  CHECK(beta_bar_form(DecoratedForest(1, 1), w) ==
        DF::function(RationalFunction::coordinate_monomial(1, e)));
  WeightVector half(repeat(2, 1, 2), 2);
  CHECK_THROWS_AS(beta_bar_form(DecoratedForest(1, 2), half), ValidationError);
}

TEST_CASE("beta-bar forms are twisted-closed") {
  for (const auto& a : {repeat(4, -1, 2), repeat(3, 1, 3)}) {
    WeightVector w = WeightVector::with_minimal_r(a);
    int n = w.n();
    long seen = 0;
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; k + l <= n; ++l) {
        for (const auto& f : admissible_forests(a, k, l, true)) {
          CHECK(twisted_differential(a, beta_bar_form(f, w)).is_zero());
          ++seen;
        }
      }
    }
    CHECK(seen > 0);
  }
}

TEST_CASE("pullback identity for beta") {
  Rectifier cache;
  for (const auto& a : {repeat(2, 1, 2), repeat(3, -1, 3), repeat(3, 2, 3)}) {
    WeightVector w = WeightVector::with_minimal_r(a);
    int n = w.n();
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; k + l <= n; ++l) {
        for (const auto& f : admissible_forests(a, k, l, true)) {
          CHECK(verify_pullback_identity(f, w, &cache));
        }
      }
    }
  }
}

TEST_CASE("NBC chain identity") {
  for (int n = 1; n <= 4; ++n) {
    for_each_tree(1, n, true, [](const DecoratedForest& t) {
      CHECK(verify_nbc_chain_identity(t));
    });
  }
  CHECK_THROWS(verify_nbc_chain_identity(DecoratedForest(1, 2)));
}

TEST_CASE("the group acts on forms by substitution") {
  std::vector<int> sw{1, 0};
  auto g = GroupElement::permutation(1, sw);
  CHECK(act_form(g, DF::omega(2, 1)) == DF::omega(2, 0));
  CHECK(act_form(g, DF::volume(2)) == -DF::volume(2));
}

TEST_CASE("text and LaTeX output") {
  auto w = DF::omega(2, 0, 1, RootOfUnity());
  CHECK(w.to_string().find("dz1") != std::string::npos);
  CHECK(w.to_latex().find("dz_1") != std::string::npos);
  CHECK(DF(2).to_string() == "0");
}
