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

#include "osforest/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace osforest {

RootOfUnity::RootOfUnity(long num, long den) {
  if (den <= 0) throw std::invalid_argument("root of unity needs positive order");
  num = mod_positive(num, den);
  long g = std::gcd(num, den);
  if (num == 0) g = den;
  num_ = num / g;
  den_ = den / g;
}

long RootOfUnity::exponent_in(long r) const {
  if (r % den_ != 0) {
    throw std::invalid_argument("root of unity is not an r-th root");
  }
  return num_ * (r / den_);
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const {
  long l = std::lcm(den_, other.den_);
  return {num_ * (l / den_) + other.num_ * (l / other.den_), l};
}

namespace {

std::vector<long> divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // Both monic with integer coefficients, low degree first.
  std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    long c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int m) {
  static std::mutex mutex;
  static std::map<int, std::vector<long>> cache;
  if (m <= 0) throw std::invalid_argument("conductor must be positive");
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) poly = divide_exact(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(poly)).first->second;
}

int euler_phi_int(int m) {
  return static_cast<int>(cyclotomic_polynomial(m).size()) - 1;
}

Cyclotomic::Cyclotomic(int m, std::vector<Rational> coeffs)
    : conductor_(m), coeffs_(std::move(coeffs)) {
  reduce_in_place(conductor_, coeffs_);
}

void Cyclotomic::reduce_in_place(int m, std::vector<Rational>& v) {
  const auto& phi = cyclotomic_polynomial(m);
  std::size_t deg = phi.size() - 1;
  for (std::size_t k = v.size(); k-- > deg;) {
    if (sgn(v[k]) == 0) continue;
    Rational c = v[k];
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi[j] != 0) v[k - deg + j] -= c * phi[j];
    }
  }
  v.resize(deg, Rational(0));
}

Cyclotomic Cyclotomic::root(const RootOfUnity& eta) {
  int m = static_cast<int>(eta.order());
  std::vector<Rational> v(static_cast<std::size_t>(m), Rational(0));
  v[static_cast<std::size_t>(eta.num())] = 1;
  return {m, std::move(v)};
}

Cyclotomic Cyclotomic::from_root_counts(int m, std::span<const long> counts) {
  if (counts.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("root counts must have length m");
  }
  std::vector<Rational> v(counts.begin(), counts.end());
  return {m, std::move(v)};
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return false;
  }
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Cyclotomic Cyclotomic::embed(int m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0) {
    throw std::invalid_argument("embedding target must be a multiple of the conductor");
  }
  int step = m / conductor_;
  std::vector<Rational> v(static_cast<std::size_t>(m), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    v[k * static_cast<std::size_t>(step)] = coeffs_[k];
  }
  return {m, std::move(v)};
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> v(static_cast<std::size_t>(conductor_), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    v[(conductor_ - k) % conductor_] += coeffs_[k];
  }
  return {conductor_, std::move(v)};
}

Cyclotomic Cyclotomic::simplified() const {
  if (conductor_ != 1 && is_rational()) return Cyclotomic(rational_value());
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  int m = std::lcm(conductor_, other.conductor_);
  if (m != conductor_) *this = embed(m);
  if (other.conductor_ == m) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  } else {
    Cyclotomic rhs = other.embed(m);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.conductor_ == 1) {
    for (auto& c : coeffs_) c *= other.coeffs_[0];
    return *this;
  }
  if (conductor_ == 1) {
    Rational q = coeffs_[0];
    *this = other;
    for (auto& c : coeffs_) c *= q;
    return *this;
  }
  int m = std::lcm(conductor_, other.conductor_);
  Cyclotomic a = embed(m);
  Cyclotomic b = other.embed(m);
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) != 0) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  *this = Cyclotomic(m, std::move(v));
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  int m = std::lcm(a.conductor_, b.conductor_);
  return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

std::string Cyclotomic::to_string() const {
  Cyclotomic s = simplified();
  if (s.conductor_ == 1) return s.coeffs_[0].get_str();
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < s.coeffs_.size(); ++k) {
    const Rational& c = s.coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (sgn(c) < 0) {
      out << "-";
    } else if (!first) {
      out << "+";
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "E(" << s.conductor_ << ")";
    if (k > 1) out << "^" << k;
  }
  return first ? "0" : out.str();
}

Cyclotomic cyclotomic_arith(const Cyclotomic& a, const Cyclotomic& b, CyclotomicOp op) {
  switch (op) {
    case CyclotomicOp::kAdd:
      return a + b;
    case CyclotomicOp::kSub:
      return a - b;
    case CyclotomicOp::kMul:
      return a * b;
  }
  throw std::logic_error("unknown cyclotomic op");
}

Rational root_of_unity_sum(long r, long a) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  std::vector<long> counts(static_cast<std::size_t>(r), 0);
  for (long k = 0; k < r; ++k) counts[static_cast<std::size_t>(mod_positive(k * a, r))] += 1;
  return Cyclotomic::from_root_counts(static_cast<int>(r), counts).rational_value();
}

}  // namespace osforest
