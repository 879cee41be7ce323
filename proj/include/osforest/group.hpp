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

#ifndef OSFOREST_GROUP_HPP_
#define OSFOREST_GROUP_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "osforest/cyclotomic.hpp"

namespace osforest {

inline constexpr int kMaxVertices = 12;

class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int multiplicity(int i) const;
  int operator[](int i) const { return parts_[i]; }
  std::string to_string() const;  // "(3,1)", "()" for the empty partition

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// All partitions of m in reverse lexicographic order ((m) first).
std::vector<Partition> partitions_of(int m);
// All partitions of m with exactly len parts.
std::vector<Partition> partitions_with_length(int m, int len);

// The element (zeta_1, ..., zeta_n) w of mu_r^n x| S_n, with zeta_i stored as
// exponents of exp(2 pi i / r) and w as a 0-based image array. It acts on
// vertices by i -> w(i) and then rescales by zeta.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(int r, std::span<const int> zeta, std::span<const int> perm);
  static GroupElement identity(int r, int n);
  static GroupElement permutation(int r, std::span<const int> perm);
  static GroupElement diagonal(int r, std::span<const int> zeta);

  int r() const { return r_; }
  int n() const { return n_; }
  int zeta(int i) const { return zeta_[i]; }
  int perm(int i) const { return perm_[i]; }
  std::span<const std::int8_t> zeta_span() const { return {zeta_.data(), std::size_t(n_)}; }

  // (zeta w)(zeta' w') = (zeta . w(zeta'))(w w') with w(zeta')_{w(i)} = zeta'_i.
  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  bool is_identity() const;
  int perm_sign() const;
  // sum of zeta exponents modulo r.
  int zeta_sum() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

  // "[z0,1,0](2,1,3)" style: zeta exponents then one-line permutation, 1-based.
  std::string to_string() const;

 private:
  int r_ = 1;
  int n_ = 0;
  std::array<std::int8_t, kMaxVertices> zeta_{};
  std::array<std::int8_t, kMaxVertices> perm_{};
};

// Permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);
// Every element of W(r, n); refuses more than max_order elements.
std::vector<GroupElement> enumerate_group(int r, int n, long max_order = 100000);
long wreath_order(int r, int n);

// Conjugacy class label of W(r, n): entry c is the partition formed by the
// lengths of cycles whose zeta-exponent sum is c modulo r. For r = 1 this is
// the cycle type.
std::vector<Partition> class_label(const GroupElement& g);

enum class LinearCharacter { kSign, kProd, kDet };
Cyclotomic linear_character(LinearCharacter which, const GroupElement& g);

}  // namespace osforest

#endif  // OSFOREST_GROUP_HPP_
