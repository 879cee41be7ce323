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

#ifndef OSFOREST_RATIONAL_FUNCTION_HPP_
#define OSFOREST_RATIONAL_FUNCTION_HPP_

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "osforest/cyclotomic.hpp"
#include "osforest/polynomial.hpp"

namespace osforest {

using CyclotomicPoly = Polynomial<Cyclotomic>;

// A denominator factor: the coordinate z_i (j == -1) or the hyperplane form
// z_i - eta z_j with i < j. Indices are 0-based.
struct Atom {
  int i = 0;
  int j = -1;
  RootOfUnity eta;

  bool is_coordinate() const { return j < 0; }
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

// Writes z_i - eta z_j (i != j) as scale * atom with atom.i < atom.j.
std::pair<RootOfUnity, Atom> make_difference_atom(int i, int j, const RootOfUnity& eta);
Atom coordinate_atom(int i);
CyclotomicPoly atom_polynomial(int nvars, const Atom& a);

// numerator / prod(atom^mult). Denominators are never expanded; sums bring
// both operands over the atom-wise maximum multiplicity.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(int nvars) : nvars_(nvars), num_(nvars) {}
  RationalFunction(int nvars, const Cyclotomic& c) : nvars_(nvars), num_(nvars, c) {}
  RationalFunction(CyclotomicPoly num) : nvars_(num.nvars()), num_(std::move(num)) {}
  RationalFunction(CyclotomicPoly num, std::map<Atom, int> den);

  static RationalFunction variable(int nvars, int i);
  // z_i - eta z_j as a numerator polynomial.
  static RationalFunction difference(int nvars, int i, int j, const RootOfUnity& eta);
  // prod z_i^{e_i}; negative exponents become coordinate atoms.
  static RationalFunction coordinate_monomial(int nvars, std::span<const long> exps);
  // 1 / (z_i - eta z_j)^mult, normalized.
  static RationalFunction inverse_difference(int nvars, int i, int j, const RootOfUnity& eta,
                                             int mult = 1);

  int nvars() const { return nvars_; }
  const CyclotomicPoly& numerator() const { return num_; }
  const std::map<Atom, int>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator*=(const Cyclotomic& c);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
    return a += b;
  }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) {
    return a -= b;
  }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) {
    return a *= b;
  }
  friend RationalFunction operator*(RationalFunction a, const Cyclotomic& c) { return a *= c; }
  // Exact equality by cross-multiplication.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  RationalFunction derivative(int k) const;
  // z_i -> z_i^r; each z_i^r - eta z_j^r is refactored into r atoms.
  RationalFunction power_pullback(int r) const;
  // z_i -> scale[i] z_{target[i]} with target a permutation.
  RationalFunction substitute(std::span<const int> target,
                              std::span<const RootOfUnity> scale) const;
  // Removes atoms that divide the numerator (trial division only).
  RationalFunction cancelled() const;

  // (numerator, denominator) values at a point where no atom vanishes.
  std::pair<Cyclotomic, Cyclotomic> evaluate(std::span<const Rational> point) const;

  // "(z2)/((z1-z2)*(z2-z3))"; atoms with eta != 1 print as "z1-w(k/m)*z2".
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void drop_zero_denominator();

  int nvars_ = 0;
  CyclotomicPoly num_;
  std::map<Atom, int> den_;
};

// Equality by comparing cross-multiplied values at deterministic prime points.
bool equal_by_evaluation(const RationalFunction& a, const RationalFunction& b, int points = 5);

std::string cyclotomic_latex(const Cyclotomic& c);
std::string atom_text(const Atom& a);
std::string atom_latex(const Atom& a);

}  // namespace osforest

#endif  // OSFOREST_RATIONAL_FUNCTION_HPP_
