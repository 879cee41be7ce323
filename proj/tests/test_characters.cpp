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
#include "osforest/characters.hpp"
#include "osforest/os_algebra.hpp"

using namespace osforest;

TEST_CASE("arithmetic functions") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(8) == 0);
  CHECK(moebius(30) == -1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(1) == 1);
}

TEST_CASE("Murnaghan-Nakayama") {
  CHECK(mn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(mn_character(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK(mn_character(Partition({2, 1}), Partition({3})) == -1);
  CHECK(mn_character(Partition({2, 2}), Partition({2, 2})) == 2);
  CHECK(mn_character(Partition({2, 2}), Partition({3, 1})) == -1);
  CHECK(mn_character(Partition({3, 1}), Partition({2, 2})) == -1);
  CHECK(mn_character(Partition({1, 1, 1, 1}), Partition({4})) == -1);
  // Degrees are hook-length counts: f^(3,2) = 5, f^(3,2,1) = 16.
  CHECK(mn_character(Partition({3, 2}), Partition({1, 1, 1, 1, 1})) == 5);
  CHECK(mn_character(Partition({3, 2, 1}), Partition({1, 1, 1, 1, 1, 1})) == 16);
}

TEST_CASE("irreducible characters are orthonormal") {
  for (int n = 1; n <= 6; ++n) {
    auto parts = partitions_of(n);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        auto ip = inner_product(irreducible_character(a), irreducible_character(b));
        CHECK(ip == Cyclotomic(a == b ? 1 : 0));
      }
    }
  }
  auto d = decompose_sn(ClassFunction::trivial(1, 4));
  CHECK(d == std::map<Partition, Integer>{{Partition({4}), Integer(1)}});
}

TEST_CASE("induction from small subgroups") {
  // Ind from the subgroup generated by a transposition, faithful character.
  std::vector<int> sw{1, 0};
  SubgroupCharacter psi{{GroupElement::identity(1, 2), Cyclotomic(1)},
                        {GroupElement::permutation(1, sw), Cyclotomic(-1)}};
  auto ind = induce(psi, 1, 2);
  CHECK(ind == ClassFunction::linear(1, 2, LinearCharacter::kSign));
  // Frobenius reciprocity against the trivial character: <Ind 1_H, 1> = 1.
  SubgroupCharacter trivial_h{{GroupElement::identity(1, 3), Cyclotomic(1)}};
  auto regular = induce(trivial_h, 1, 3);
  CHECK(regular.degree() == Cyclotomic(6));
  CHECK(inner_product(regular, ClassFunction::trivial(1, 3)) == Cyclotomic(1));
  CHECK(inner_product(regular, irreducible_character(Partition({2, 1}))) == Cyclotomic(2));
}

TEST_CASE("cyclic induction values") {
  CHECK(cyclic_induction_value(4, 2) == -1);
  CHECK(cyclic_induction_value(4, 1) == 1);
  CHECK(cyclic_induction_value(6, 6) == 1);  // zeta_6 + zeta_6^5
  CHECK_THROWS(cyclic_induction_value(4, 3));
}

TEST_CASE("both sides of the root-of-unity identity") {
  auto s = mystery_identity_sides(2, 2, 2);
  CHECK(s.lhs == -1);
  CHECK(s.rhs == -1);
  CHECK(s.direct == -1);
  auto z = mystery_identity_sides(4, 2, 8);
  CHECK(z.lhs == 0);
  CHECK(z.rhs == 0);
  for (long r = 1; r <= 6; ++r) {
    for (long m = 1; m <= 6; ++m) {
      for (long d = 1; d <= r * m; ++d) {
        if ((r * m) % d) continue;
        auto t = mystery_identity_sides(r, m, d);
        CHECK(t.lhs == t.rhs);
        CHECK(t.lhs == t.direct);
      }
    }
  }
}

TEST_CASE("the wreath embedding is a homomorphism") {
  auto group = enumerate_group(2, 2);
  for (const auto& g : group) {
    for (const auto& h : group) CHECK(embed_wreath(g * h) == embed_wreath(g) * embed_wreath(h));
  }
  CHECK(embed_wreath(GroupElement::identity(3, 2)) == GroupElement::identity(1, 6));
}

TEST_CASE("module characters") {
  // Dimension r^{n-1} (n-1)!.
  CHECK(module_character(2, 3).degree() == Cyclotomic(8));
  CHECK(module_character(1, 4).degree() == Cyclotomic(6));
  CorollaryArgs comb;
  comb.r = 2;
  comb.n = 2;
  CHECK(verify_corollary(CorollaryCase::kComb, comb));
  CorollaryArgs ls;
  ls.n = 4;
  CHECK(verify_corollary(CorollaryCase::kLehrerSolomon, ls));
}

TEST_CASE("character corollaries") {
  CorollaryArgs big;
  big.r = 2;
  big.n = 2;
  for (int k = 0; k <= 2; ++k) {
    for (int l = 0; k + l <= 2; ++l) {
      big.k = k;
      big.l = l;
      CHECK(verify_corollary(CorollaryCase::kBigInd, big));
    }
  }
  CorollaryArgs mystery;
  mystery.r = 2;
  mystery.n = 4;
  mystery.k = 3;
  mystery.l = 1;
  mystery.s = 1;
  CHECK(verify_corollary(CorollaryCase::kMystery, mystery));
  CHECK(verify_corollary(CorollaryCase::kOtherBigInd, mystery));
  CorollaryArgs thm;
  thm.r = 2;
  thm.m = 2;
  CHECK(verify_corollary(CorollaryCase::kMysteryThm, thm));
  mystery.s = 2;
  CHECK_THROWS(verify_corollary(CorollaryCase::kMystery, mystery));
}

TEST_CASE("negative controls") {
  // The module is not the trivial module.
  CHECK_FALSE(module_character(1, 3) == ClassFunction::trivial(1, 3) +
                                            ClassFunction::trivial(1, 3));
  // Inducing from the wrong block sizes changes the character.
  CHECK_FALSE(induced_character({1, 4, {4}, {}}) == induced_character({1, 4, {2, 2}, {}}));
  CHECK_THROWS_AS(module_character(3, 6, 1000), SizeGuardError);
}
