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

#include <vector>

#include "doctest.h"
#include "osforest/cyclotomic.hpp"
#include "osforest/rational.hpp"
#include "osforest/rational_function.hpp"

using namespace osforest;

TEST_CASE("rational arithmetic") {
  CHECK(make_rational(1, 2) + make_rational(1, 3) == make_rational(5, 6));
  CHECK(make_rational(-1, 2) * 4 == make_rational(-2));
  CHECK(make_rational(3, 4) / make_rational(3, 4) == make_rational(1));
  CHECK(osforest::floor(make_rational(-3, 2)) == -2);
  CHECK(osforest::ceil(make_rational(-3, 2)) == -1);
  CHECK(osforest::floor(make_rational(4)) == 4);
}

TEST_CASE("rational parsing accepts only exact fractions") {
  CHECK(parse_rational("-1/2") == make_rational(-1, 2));
  CHECK(parse_rational("3") == make_rational(3));
  CHECK(parse_rational(" 6/4 ") == make_rational(3, 2));
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZero);
  auto list = parse_rational_list("-1/2,1,2/3");
  REQUIRE(list.size() == 3);
  CHECK(list[2] == make_rational(2, 3));
}

TEST_CASE("roots of unity") {
  Cyclotomic i = Cyclotomic::root(RootOfUnity(1, 4));
  CHECK(i * i == Cyclotomic(-1));
  Cyclotomic w = Cyclotomic::root(RootOfUnity(1, 3));
  CHECK((Cyclotomic(1) + w + w * w).is_zero());
  CHECK(Cyclotomic::root(RootOfUnity(1, 2)) == Cyclotomic(-1));
  CHECK(w.conj() == w * w);
  CHECK((w + w.conj()).simplified().rational_value() == -1);
  // A value written over a larger conductor compares equal.
  CHECK(Cyclotomic::root(RootOfUnity(2, 6)) == w);
}

TEST_CASE("sums over mu_r") {
  CHECK(root_of_unity_sum(4, 8) == 4);
  CHECK(root_of_unity_sum(4, 6) == 0);
  CHECK(root_of_unity_sum(2, -3) == 0);
  CHECK(root_of_unity_sum(3, 0) == 3);
  // The primitive square root of unity sums to mu(2) = -1.
  std::vector<long> counts{0, 1};
  CHECK(Cyclotomic::from_root_counts(2, counts) == Cyclotomic(-1));
}

TEST_CASE("rational function evaluation") {
  auto p = RationalFunction::difference(2, 0, 1, {});
  std::vector<Rational> pt{Rational(3), Rational(1)};
  auto [num, den] = p.evaluate(pt);
  CHECK(num == Cyclotomic(2));
  CHECK(den == Cyclotomic(1));
  auto m = RationalFunction::variable(3, 0) * RationalFunction::variable(3, 1) *
           RationalFunction::variable(3, 2);
  std::vector<Rational> pt3{Rational(2), Rational(3), Rational(5)};
  CHECK(m.evaluate(pt3).first == Cyclotomic(30));
  CHECK(RationalFunction(2).evaluate(pt).first.is_zero());
}

TEST_CASE("rational function identities") {
  const int n = 3;
  RootOfUnity one;
  auto inv12 = RationalFunction::inverse_difference(n, 0, 1, one);
  auto inv23 = RationalFunction::inverse_difference(n, 1, 2, one);
  auto inv13 = RationalFunction::inverse_difference(n, 0, 2, one);
  // Partial fractions: 1/((z1-z2)(z2-z3)) = (1/(z1-z3)) (1/(z1-z2) + 1/(z2-z3)).
  CHECK(inv12 * inv23 == inv13 * (inv12 + inv23));
  CHECK(equal_by_evaluation(inv12 * inv23, inv13 * (inv12 + inv23)));
  CHECK_FALSE(inv12 == inv13);
  // 1/(z2 - z1) = -1/(z1 - z2).
  CHECK(RationalFunction::inverse_difference(n, 1, 0, one) == -inv12);
  // d/dz1 of 1/(z1 - z2) = -1/(z1 - z2)^2.
  CHECK(inv12.derivative(0) == -RationalFunction::inverse_difference(n, 0, 1, one, 2));
}

TEST_CASE("power pullback refactors atoms") {
  // z1^2 - z2^2 = (z1 - z2)(z1 + z2).
  const int n = 2;
  auto f = RationalFunction::inverse_difference(n, 0, 1, {});
  auto pulled = f.power_pullback(2);
  auto want = RationalFunction::inverse_difference(n, 0, 1, {}) *
              RationalFunction::inverse_difference(n, 0, 1, RootOfUnity(1, 2));
  CHECK(pulled == want);
}

TEST_CASE("text output names roots of unity") {
  auto f = RationalFunction::inverse_difference(2, 0, 1, RootOfUnity(1, 2));
  CHECK(f.to_string().find("z1") != std::string::npos);
  CHECK(Cyclotomic(make_rational(1, 2)).to_string() == "1/2");
}
