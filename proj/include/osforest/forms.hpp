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

#ifndef OSFOREST_FORMS_HPP_
#define OSFOREST_FORMS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "osforest/forest.hpp"
#include "osforest/local_system.hpp"
#include "osforest/os_algebra.hpp"
#include "osforest/rational_function.hpp"

namespace osforest {

// sum_S f_S dz_S with S a set of coordinates (bit mask) and dz_S the wedge of
// its dz_i in increasing order.
class DifferentialForm {
 public:
  using Mask = std::uint32_t;

  DifferentialForm() = default;
  explicit DifferentialForm(int n) : n_(n) {}

  static DifferentialForm function(const RationalFunction& f);
  static DifferentialForm constant(int n, const Cyclotomic& c);
  static DifferentialForm dz(int n, int i);
  // dz_i / z_i.
  static DifferentialForm omega(int n, int i);
  // (dz_i - eta dz_j) / (z_i - eta z_j).
  static DifferentialForm omega(int n, int i, int j, const RootOfUnity& eta);
  // dz_1 ^ ... ^ dz_n.
  static DifferentialForm volume(int n);

  int n() const { return n_; }
  const std::map<Mask, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Degree of the first term; -1 for the zero form.
  int degree() const;

  void add(Mask s, const RationalFunction& f);
  DifferentialForm operator-() const;
  DifferentialForm& operator+=(const DifferentialForm& o);
  DifferentialForm& operator-=(const DifferentialForm& o);
  DifferentialForm& operator*=(const RationalFunction& f);
  friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) {
    return a += b;
  }
  friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) {
    return a -= b;
  }
  friend DifferentialForm operator*(DifferentialForm a, const RationalFunction& f) {
    return a *= f;
  }
  friend DifferentialForm operator*(DifferentialForm a, const Cyclotomic& c) {
    return a *= RationalFunction(a.n(), c);
  }
  // Exact coefficient-wise equality.
  friend bool operator==(const DifferentialForm& a, const DifferentialForm& b);

  // Cancels atoms that divide each coefficient.
  DifferentialForm cancelled() const;

  // "(z2)/((z1-z2)*(z2-z3))*dz1^dz2 + ..."
  std::string to_string() const;
  // "\frac{z_2}{(z_1-z_2)}\,dz_1\wedge dz_2"
  std::string to_latex() const;

 private:
  int n_ = 0;
  std::map<Mask, RationalFunction> terms_;
};

DifferentialForm wedge(const DifferentialForm& f, const DifferentialForm& g);
DifferentialForm exterior_derivative(const DifferentialForm& f);
// d f + (sum a_i omega_i) ^ f.
DifferentialForm twisted_differential(const std::vector<Rational>& a, const DifferentialForm& f);
// phi^*: z_i -> z_i^r, dz_i -> r z_i^{r-1} dz_i.
DifferentialForm pullback_power(const DifferentialForm& f, int r);
// g.f with zeta.z_i = zeta_i^{-1} z_i and w.z_i = z_{w(i)}, w.dz_i = dz_{w(i)}.
DifferentialForm act_form(const GroupElement& g, const DifferentialForm& f);

// alpha_1(F) ^ ... ^ alpha_n(F).
DifferentialForm alpha_form(const DecoratedForest& f);
DifferentialForm realize_os(const OSElement& x);

// (prod z_j^{b_j(F)}) betabar_1(F) ^ ... ^ betabar_n(F), with common atoms
// cancelled. Throws ValidationError for an inadmissible forest.
DifferentialForm beta_bar_form(const DecoratedForest& f, const WeightVector& w);

// realize_os(beta(F)) == z^{r a} phi^*(betabar(F)).
bool verify_pullback_identity(const DecoratedForest& f, const WeightVector& w,
                              Rectifier* cache = nullptr);
// For a tree with r = 1: the wedge of omega_{i,j} over edges in increasing i
// equals (1/p_T) sum_i (-1)^{n-i} dz_1 ^ .. (dz_i omitted) .. ^ dz_n.
bool verify_nbc_chain_identity(const LabelledTree& t);

}  // namespace osforest

#endif  // OSFOREST_FORMS_HPP_
