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

#include "osforest/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace osforest {

Rational poly_eval(const MultiPoly& p, std::span<const Rational> point) {
  return p.evaluate(point);
}

std::pair<RootOfUnity, Atom> make_difference_atom(int i, int j, const RootOfUnity& eta) {
  if (i == j || i < 0 || j < 0) throw std::invalid_argument("bad hyperplane indices");
  if (i < j) return {RootOfUnity(), Atom{i, j, eta}};
  // z_i - eta z_j = -eta (z_j - eta^{-1} z_i)
  return {eta * RootOfUnity(1, 2), Atom{j, i, eta.inverse()}};
}

Atom coordinate_atom(int i) { return Atom{i, -1, RootOfUnity()}; }

CyclotomicPoly atom_polynomial(int nvars, const Atom& a) {
  CyclotomicPoly p = CyclotomicPoly::variable(nvars, a.i);
  if (!a.is_coordinate()) {
    p -= CyclotomicPoly::variable(nvars, a.j) * Cyclotomic::root(a.eta);
  }
  return p;
}

RationalFunction::RationalFunction(CyclotomicPoly num, std::map<Atom, int> den)
    : nvars_(num.nvars()), num_(std::move(num)), den_(std::move(den)) {
  std::erase_if(den_, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [a, m] : den_) {
    if (m < 0) throw std::invalid_argument("negative denominator multiplicity");
  }
  drop_zero_denominator();
}

void RationalFunction::drop_zero_denominator() {
  if (num_.is_zero()) den_.clear();
}

RationalFunction RationalFunction::variable(int nvars, int i) {
  return RationalFunction(CyclotomicPoly::variable(nvars, i));
}

RationalFunction RationalFunction::difference(int nvars, int i, int j, const RootOfUnity& eta) {
  return RationalFunction(CyclotomicPoly::variable(nvars, i) -
                          CyclotomicPoly::variable(nvars, j) * Cyclotomic::root(eta));
}

RationalFunction RationalFunction::coordinate_monomial(int nvars, std::span<const long> exps) {
  Monomial m;
  std::map<Atom, int> den;
  for (int i = 0; i < static_cast<int>(exps.size()); ++i) {
    if (exps[i] > 0) m.exps[i] = static_cast<std::uint16_t>(exps[i]);
    if (exps[i] < 0) den[coordinate_atom(i)] = static_cast<int>(-exps[i]);
  }
  return RationalFunction(CyclotomicPoly::monomial(nvars, m, Cyclotomic(1)), std::move(den));
}

RationalFunction RationalFunction::inverse_difference(int nvars, int i, int j,
                                                      const RootOfUnity& eta, int mult) {
  auto [scale, atom] = make_difference_atom(i, j, eta);
  Cyclotomic c = Cyclotomic::root(scale.inverse().pow(mult));
  return RationalFunction(CyclotomicPoly(nvars, c), {{atom, mult}});
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -num_;
  return out;
}

namespace {

CyclotomicPoly atom_power_product(int nvars, const std::map<Atom, int>& atoms) {
  CyclotomicPoly p(nvars, Cyclotomic(1));
  for (const auto& [a, m] : atoms) {
    if (m > 0) p = p * atom_polynomial(nvars, a).pow(m);
  }
  return p;
}

}  // namespace

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    int n = std::max(nvars_, o.nvars_);
    *this = o;
    nvars_ = n;
    return *this;
  }
  int n = std::max(nvars_, o.nvars_);
  std::map<Atom, int> common = den_;
  for (const auto& [a, m] : o.den_) common[a] = std::max(common[a], m);
  std::map<Atom, int> mine, theirs;
  for (const auto& [a, m] : common) {
    auto it = den_.find(a);
    int ma = it == den_.end() ? 0 : it->second;
    auto jt = o.den_.find(a);
    int mb = jt == o.den_.end() ? 0 : jt->second;
    if (m > ma) mine[a] = m - ma;
    if (m > mb) theirs[a] = m - mb;
  }
  CyclotomicPoly lhs = mine.empty() ? num_ : num_ * atom_power_product(n, mine);
  CyclotomicPoly rhs = theirs.empty() ? o.num_ : o.num_ * atom_power_product(n, theirs);
  nvars_ = n;
  num_ = lhs + rhs;
  den_ = std::move(common);
  drop_zero_denominator();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  num_ = num_ * o.num_;
  for (const auto& [a, m] : o.den_) den_[a] += m;
  drop_zero_denominator();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const Cyclotomic& c) {
  num_ *= c;
  drop_zero_denominator();
  return *this;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return (a - b).is_zero();
}

RationalFunction RationalFunction::derivative(int k) const {
  // d/dz_k (N / prod A^m) = (N' P - N sum_A m A' P/A) / (D P) where P is the
  // product of the distinct atoms involving z_k.
  std::vector<std::pair<Atom, int>> involved;
  for (const auto& [a, m] : den_) {
    if (a.i == k || a.j == k) involved.emplace_back(a, m);
  }
  CyclotomicPoly result = num_.derivative(k);
  if (involved.empty()) return RationalFunction(result, den_);
  std::vector<CyclotomicPoly> polys;
  CyclotomicPoly all(nvars_, Cyclotomic(1));
  for (const auto& [a, m] : involved) {
    polys.push_back(atom_polynomial(nvars_, a));
    all = all * polys.back();
  }
  result = result * all;
  for (std::size_t t = 0; t < involved.size(); ++t) {
    CyclotomicPoly others(nvars_, Cyclotomic(1));
    for (std::size_t u = 0; u < involved.size(); ++u) {
      if (u != t) others = others * polys[u];
    }
    Cyclotomic dk = polys[t].derivative(k).constant_term();
    result -= num_ * others * (dk * Cyclotomic(static_cast<long>(involved[t].second)));
  }
  std::map<Atom, int> den = den_;
  for (const auto& [a, m] : involved) den[a] += 1;
  return RationalFunction(result, std::move(den));
}

RationalFunction RationalFunction::power_pullback(int r) const {
  if (r < 1) throw std::invalid_argument("pullback exponent must be positive");
  std::map<Atom, int> den;
  for (const auto& [a, m] : den_) {
    if (a.is_coordinate()) {
      den[a] += m * r;
      continue;
    }
    // z_i^r - eta z_j^r = prod over theta^r = eta of (z_i - theta z_j)
    long num = a.eta.num(), ord = a.eta.order();
    for (long k = 0; k < r; ++k) {
      den[Atom{a.i, a.j, RootOfUnity(num + k * ord, ord * r)}] += m;
    }
  }
  return RationalFunction(num_.power_substitute(r), std::move(den));
}

RationalFunction RationalFunction::substitute(std::span<const int> target,
                                              std::span<const RootOfUnity> scale) const {
  std::vector<Cyclotomic> cscale;
  for (const auto& s : scale) cscale.push_back(Cyclotomic::root(s));
  CyclotomicPoly num = num_.substitute_scaled(target, cscale);
  RootOfUnity factor;
  std::map<Atom, int> den;
  for (const auto& [a, m] : den_) {
    if (a.is_coordinate()) {
      den[coordinate_atom(target[a.i])] += m;
      factor = factor * scale[a.i].pow(m);
      continue;
    }
    // c_i z_{s(i)} - eta c_j z_{s(j)} = c_i (z_{s(i)} - eta c_j c_i^{-1} z_{s(j)})
    RootOfUnity ci = scale[a.i], cj = scale[a.j];
    auto [s, atom] = make_difference_atom(target[a.i], target[a.j], a.eta * cj * ci.inverse());
    den[atom] += m;
    factor = factor * (ci * s).pow(m);
  }
  num *= Cyclotomic::root(factor.inverse());
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction RationalFunction::cancelled() const {
  RationalFunction out = *this;
  for (auto& [a, m] : out.den_) {
    Cyclotomic eta = Cyclotomic::root(a.eta);
    while (m > 0) {
      auto q = out.num_.divide_linear(a.i, a.j, eta);
      if (!q) break;
      out.num_ = std::move(*q);
      --m;
    }
  }
  std::erase_if(out.den_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::pair<Cyclotomic, Cyclotomic> RationalFunction::evaluate(
    std::span<const Rational> point) const {
  std::vector<Cyclotomic> pt(point.begin(), point.end());
  while (static_cast<int>(pt.size()) < num_.nvars()) pt.emplace_back(0);
  Cyclotomic n = num_.evaluate(std::span<const Cyclotomic>(pt.data(), num_.nvars()));
  Cyclotomic d(1);
  for (const auto& [a, m] : den_) {
    Cyclotomic v = pt[a.i];
    if (!a.is_coordinate()) v -= Cyclotomic::root(a.eta) * pt[a.j];
    if (v.is_zero()) throw std::domain_error("denominator vanishes at evaluation point");
    for (int k = 0; k < m; ++k) d *= v;
  }
  return {n, d};
}

bool equal_by_evaluation(const RationalFunction& a, const RationalFunction& b, int points) {
  static const long kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
                                 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
                                 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241,
                                 251, 257, 263, 269, 271, 277, 281};
  int n = std::max(a.nvars(), b.nvars());
  std::size_t next = 0;
  for (int p = 0; p < points; ++p) {
    std::vector<Rational> pt;
    for (int i = 0; i < n; ++i) {
      if (next >= std::size(kPrimes)) throw std::out_of_range("ran out of evaluation primes");
      pt.emplace_back(kPrimes[next++]);
    }
    auto [na, da] = a.evaluate(pt);
    auto [nb, db] = b.evaluate(pt);
    if (!(na * db == nb * da)) return false;
  }
  return true;
}

std::string atom_text(const Atom& a) {
  std::string s = "z" + std::to_string(a.i + 1);
  if (a.is_coordinate()) return s;
  s += "-";
  if (!a.eta.is_one()) {
    s += "w(" + std::to_string(a.eta.num()) + "/" + std::to_string(a.eta.order()) + ")*";
  }
  return s + "z" + std::to_string(a.j + 1);
}

std::string cyclotomic_latex(const Cyclotomic& c) {
  Cyclotomic s = c.simplified();
  if (s.is_rational()) {
    Rational q = s.rational_value();
    if (q.get_den() == 1) return q.get_num().get_str();
    std::string sign = sgn(q) < 0 ? "-" : "";
    Integer num = abs(q.get_num());
    return sign + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
  }
  std::string out;
  auto coeffs = s.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& q = coeffs[k];
    if (sgn(q) == 0) continue;
    std::string mag = cyclotomic_latex(Cyclotomic(Rational(abs(q))));
    if (sgn(q) < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    std::string root = "\\zeta_{" + std::to_string(s.conductor()) + "}";
    if (k > 1) root += "^{" + std::to_string(k) + "}";
    if (k == 0) {
      out += mag;
    } else {
      out += (mag == "1" ? "" : mag) + root;
    }
  }
  return out;
}

std::string atom_latex(const Atom& a) {
  std::string s = "z_" + std::to_string(a.i + 1);
  if (a.is_coordinate()) return s;
  std::string zj = "z_" + std::to_string(a.j + 1);
  if (a.eta.is_one()) return s + "-" + zj;
  if (a.eta.order() == 2) return s + "+" + zj;
  return s + "-" + cyclotomic_latex(Cyclotomic::root(a.eta)) + zj;
}

namespace {

bool needs_parens(const std::string& s) {
  return s.find_first_of("+-", 1) != std::string::npos;
}

std::string coefficient_text(const Cyclotomic& c) {
  std::string s = c.to_string();
  return c.simplified().is_rational() ? s : "(" + s + ")";
}

std::string numerator_latex(const CyclotomicPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (int i = 0; i < p.nvars(); ++i) {
      if (m.exps[i] == 0) continue;
      mono += "z_" + std::to_string(i + 1);
      if (m.exps[i] > 1) mono += "^{" + std::to_string(m.exps[i]) + "}";
    }
    std::string cs = cyclotomic_latex(c);
    bool negative = c.simplified().is_rational() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    if (!c.simplified().is_rational() && needs_parens(cs)) cs = "(" + cs + ")";
    std::string term = mono.empty() ? cs : (cs == "1" ? mono : cs + mono);
    if (negative) {
      out += "-" + term;
    } else {
      out += (out.empty() ? "" : "+") + term;
    }
  }
  return out;
}

}  // namespace

std::string RationalFunction::to_string() const {
  std::string num = num_.to_string(coefficient_text);
  if (den_.empty()) return num;
  std::string den;
  for (const auto& [a, m] : den_) {
    if (!den.empty()) den += "*";
    den += "(" + atom_text(a) + ")";
    if (m > 1) den += "^" + std::to_string(m);
  }
  return "(" + num + ")/(" + den + ")";
}

std::string RationalFunction::to_latex() const {
  std::string num = numerator_latex(num_);
  if (den_.empty()) return num;
  std::string den;
  // Coordinate monomials first, then hyperplane factors in (i, j) order.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& [a, m] : den_) {
      if (a.is_coordinate() != (pass == 0)) continue;
      std::string f = a.is_coordinate() ? atom_latex(a) : "(" + atom_latex(a) + ")";
      if (m > 1) f += "^{" + std::to_string(m) + "}";
      den += f;
    }
  }
  return "\\frac{" + num + "}{" + den + "}";
}

}  // namespace osforest
