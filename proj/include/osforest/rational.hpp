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

#ifndef OSFOREST_RATIONAL_HPP_
#define OSFOREST_RATIONAL_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace osforest {

// Arbitrary-precision integers and rationals. gmpxx keeps mpq_class values
// canonical (reduced, positive denominator) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };

// Exact a op b. Throws DivisionByZero for a / 0.
Rational rational_arith(const Rational& a, const Rational& b, ArithOp op);

Rational make_rational(long num, long den = 1);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Strict "p" or "p/q" decimal syntax with optional sign. Decimal points and
// exponents are rejected so that weights are never silently rounded.
Rational parse_rational(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Value as a machine integer; throws if q is not an integer or overflows.
long to_long(const Rational& q);

long gcd_long(long a, long b);
long lcm_long(long a, long b);
// Positive remainder of a modulo m (m > 0).
inline long mod_positive(long a, long m) {
  long x = a % m;
  return x < 0 ? x + m : x;
}

}  // namespace osforest

#endif  // OSFOREST_RATIONAL_HPP_
