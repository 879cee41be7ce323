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

#include "osforest/rational.hpp"

#include <cctype>
#include <numeric>

namespace osforest {

Rational rational_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd:
      return a + b;
    case ArithOp::kSub:
      return a - b;
    case ArithOp::kMul:
      return a * b;
    case ArithOp::kDiv:
      if (sgn(b) == 0) throw DivisionByZero();
      return a / b;
  }
  throw std::logic_error("unknown arithmetic op");
}

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  if (pos == s.size()) {
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("malformed rational '" + std::string(whole) +
                       "' (only p or p/q is accepted)");
    }
  }
  Integer z(std::string(s.substr(pos)));
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  Integer num = parse_integer(s.substr(0, slash), text);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    std::string_view d = s.substr(slash + 1);
    if (!d.empty() && (d.front() == '+' || d.front() == '-')) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    den = parse_integer(d, text);
    if (den == 0) throw DivisionByZero();
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    throw std::range_error("rational " + q.get_str() + " is not a machine integer");
  }
  return q.get_num().get_si();
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace osforest
