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

#ifndef OSFOREST_POLYNOMIAL_HPP_
#define OSFOREST_POLYNOMIAL_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "osforest/cyclotomic.hpp"
#include "osforest/rational.hpp"

namespace osforest {

inline constexpr int kMaxVars = 12;

inline bool scalar_is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool scalar_is_zero(const Cyclotomic& c) { return c.is_zero(); }

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exps{};

  int degree() const {
    int d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.exps[i] = exps[i] + o.exps[i];
    return m;
  }
  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order: total degree first, then exponent vectors
// compared from z_1 onwards.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exps < b.exps;
  }
};

// Sparse polynomial in z_1..z_n over a commutative Scalar ring.
template <typename Scalar>
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) { check_nvars(nvars); }
  Polynomial(int nvars, const Scalar& c) : nvars_(nvars) {
    check_nvars(nvars);
    if (!scalar_is_zero(c)) terms_.emplace(Monomial{}, c);
  }

  static Polynomial variable(int nvars, int i) {
    Polynomial p(nvars);
    Monomial m;
    m.exps[i] = 1;
    p.terms_.emplace(m, Scalar(1));
    return p;
  }
  static Polynomial monomial(int nvars, const Monomial& m, const Scalar& c) {
    Polynomial p(nvars);
    if (!scalar_is_zero(c)) p.terms_.emplace(m, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
  }
  Scalar constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (scalar_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (scalar_is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial p(nvars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
  }
  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    if (scalar_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial p(std::max(a.nvars_, b.nvars_));
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
    }
    return p;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

  Polynomial pow(int e) const {
    Polynomial out(nvars_, Scalar(1));
    for (int k = 0; k < e; ++k) out = out * *this;
    return out;
  }

  Polynomial derivative(int i) const {
    Polynomial p(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m.exps[i] == 0) continue;
      Monomial d = m;
      d.exps[i] -= 1;
      p.add_term(d, c * Scalar(static_cast<long>(m.exps[i])));
    }
    return p;
  }

  // z_i -> z_i^r for every variable.
  Polynomial power_substitute(int r) const {
    Polynomial p(nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial s;
      for (int i = 0; i < kMaxVars; ++i) s.exps[i] = m.exps[i] * r;
      p.add_term(s, c);
    }
    return p;
  }

  // z_i -> scale[i] * z_{target[i]}; target must be a permutation.
  Polynomial substitute_scaled(std::span<const int> target,
                               std::span<const Scalar> scale) const {
    Polynomial p(nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial s;
      Scalar coeff = c;
      for (int i = 0; i < nvars_; ++i) {
        if (m.exps[i] == 0) continue;
        s.exps[target[i]] = m.exps[i];
        for (int k = 0; k < m.exps[i]; ++k) coeff *= scale[i];
      }
      p.add_term(s, coeff);
    }
    return p;
  }

  Scalar evaluate(std::span<const Scalar> point) const {
    if (static_cast<int>(point.size()) != nvars_) {
      throw std::invalid_argument("evaluation point has wrong length");
    }
    Scalar total(0);
    for (const auto& [m, c] : terms_) {
      Scalar t = c;
      for (int i = 0; i < nvars_; ++i) {
        for (int k = 0; k < m.exps[i]; ++k) t *= point[i];
      }
      total += t;
    }
    return total;
  }

  // Exact quotient by z_i - eta*z_j (j >= 0) or by z_i (j < 0); empty when
  // the division leaves a remainder.
  std::optional<Polynomial> divide_linear(int i, int j, const Scalar& eta) const {
    Polynomial rem = *this;
    Polynomial quot(nvars_);
    while (true) {
      auto it = rem.terms_.end();
      for (auto t = rem.terms_.begin(); t != rem.terms_.end(); ++t) {
        if (t->first.exps[i] > 0) {
          it = t;
          break;
        }
      }
      if (it == rem.terms_.end()) break;
      Monomial q = it->first;
      Scalar c = it->second;
      q.exps[i] -= 1;
      quot.add_term(q, c);
      rem.terms_.erase(it);
      if (j >= 0) {
        Monomial s = q;
        s.exps[j] += 1;
        rem.add_term(s, c * eta);
      }
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
  }

  template <typename Other, typename F>
  Polynomial<Other> map_coefficients(F&& f) const {
    Polynomial<Other> p(nvars_);
    for (const auto& [m, c] : terms_) p.add_term(m, f(c));
    return p;
  }

  // Plain text such as "3*z1^2*z2-z3+1/2"; coefficient rendering supplied.
  std::string to_string(const std::function<std::string(const Scalar&)>& coeff) const;

 private:
  static void check_nvars(int nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("too many variables");
  }

  int nvars_ = 0;
  Terms terms_;
};

template <typename Scalar>
std::string Polynomial<Scalar>::to_string(
    const std::function<std::string(const Scalar&)>& coeff) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = coeff(c);
    bool negative = !cs.empty() && cs[0] == '-';
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (m.exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "z" + std::to_string(i + 1);
      if (m.exps[i] > 1) mono += "^" + std::to_string(m.exps[i]);
    }
    std::string mag = negative ? cs.substr(1) : cs;
    std::string term;
    if (mono.empty()) {
      term = mag;
    } else if (mag == "1") {
      term = mono;
    } else {
      term = mag + "*" + mono;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? "-" : "+") + term;
    }
  }
  return out;
}

using MultiPoly = Polynomial<Rational>;

// Exact evaluation of a rational polynomial.
Rational poly_eval(const MultiPoly& p, std::span<const Rational> point);

}  // namespace osforest

#endif  // OSFOREST_POLYNOMIAL_HPP_
