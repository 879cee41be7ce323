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

#ifndef OSFOREST_CYCLOTOMIC_HPP_
#define OSFOREST_CYCLOTOMIC_HPP_

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "osforest/rational.hpp"

namespace osforest {

// The root of unity exp(2 pi i num/den), kept with 0 <= num < den and
// gcd(num, den) = 1, so den is its multiplicative order.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(long num, long den);

  // zeta_r^k for the primitive r-th root zeta_r = exp(2 pi i / r).
  static RootOfUnity power_of_primitive(long k, long r) { return {k, r}; }

  long num() const { return num_; }
  long order() const { return den_; }
  bool is_one() const { return num_ == 0; }

  // The exponent k with this == zeta_r^k; requires order() | r.
  long exponent_in(long r) const;

  RootOfUnity operator*(const RootOfUnity& other) const;
  RootOfUnity inverse() const { return {-num_, den_}; }
  RootOfUnity pow(long e) const { return {num_ * e, den_}; }

  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  long num_ = 0;
  long den_ = 1;
};

// Coefficients (low degree first) of the m-th cyclotomic polynomial.
const std::vector<long>& cyclotomic_polynomial(int m);
int euler_phi_int(int m);

// An element of Q(zeta_m) in the power basis 1, zeta_m, ..., zeta_m^{phi(m)-1},
// reduced modulo the m-th cyclotomic polynomial. Values with different
// conductors are compared inside Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
  Cyclotomic(long v) : conductor_(1), coeffs_{Rational(v)} {}
  Cyclotomic(const Rational& q) : conductor_(1), coeffs_{q} {}

  static Cyclotomic root(const RootOfUnity& eta);
  // sum_k counts[k] zeta_m^k, counts.size() == m.
  static Cyclotomic from_root_counts(int m, std::span<const long> counts);

  int conductor() const { return conductor_; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws std::domain_error unless is_rational().
  Rational rational_value() const;

  // The same number written over conductor m; m must be a multiple of
  // conductor().
  Cyclotomic embed(int m) const;
  // Complex conjugate.
  Cyclotomic conj() const;
  // Rewritten over conductor 1 when the value is rational.
  Cyclotomic simplified() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  // GAP-style text, e.g. "-1", "1/2", "E(4)", "2*E(3)-E(3)^2".
  std::string to_string() const;

 private:
  Cyclotomic(int m, std::vector<Rational> coeffs);
  static void reduce_in_place(int m, std::vector<Rational>& v);

  int conductor_;
  std::vector<Rational> coeffs_;
};

enum class CyclotomicOp { kAdd, kSub, kMul };
Cyclotomic cyclotomic_arith(const Cyclotomic& a, const Cyclotomic& b, CyclotomicOp op);

// sum over zeta in mu_r of zeta^a: r when r | a, else 0.
Rational root_of_unity_sum(long r, long a);

}  // namespace osforest

#endif  // OSFOREST_CYCLOTOMIC_HPP_
