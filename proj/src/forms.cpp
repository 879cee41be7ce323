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

#include "osforest/forms.hpp"

#include <bit>
#include <stdexcept>

namespace osforest {

namespace {

using Mask = DifferentialForm::Mask;

// Sign of dz_A ^ dz_B relative to dz_{A u B}; 0 when A and B overlap.
int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int swaps = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

std::string dz_text(Mask s, const std::string& sep, const std::string& prefix) {
  std::string out;
  for (Mask rest = s; rest; rest &= rest - 1) {
    if (!out.empty()) out += sep;
    out += prefix + std::to_string(std::countr_zero(rest) + 1);
  }
  return out;
}

}  // namespace

DifferentialForm DifferentialForm::function(const RationalFunction& f) {
  DifferentialForm out(f.nvars());
  out.add(0, f);
  return out;
}

DifferentialForm DifferentialForm::constant(int n, const Cyclotomic& c) {
  return function(RationalFunction(n, c));
}

DifferentialForm DifferentialForm::dz(int n, int i) {
  DifferentialForm out(n);
  out.add(Mask(1) << i, RationalFunction(n, Cyclotomic(1)));
  return out;
}

DifferentialForm DifferentialForm::omega(int n, int i) {
  std::vector<long> e(n, 0);
  e[i] = -1;
  DifferentialForm out(n);
  out.add(Mask(1) << i, RationalFunction::coordinate_monomial(n, e));
  return out;
}

DifferentialForm DifferentialForm::omega(int n, int i, int j, const RootOfUnity& eta) {
  RationalFunction inv = RationalFunction::inverse_difference(n, i, j, eta);
  DifferentialForm out(n);
  out.add(Mask(1) << i, inv);
  out.add(Mask(1) << j, inv * -Cyclotomic::root(eta));
  return out;
}

DifferentialForm DifferentialForm::volume(int n) {
  DifferentialForm out(n);
  out.add((Mask(1) << n) - 1, RationalFunction(n, Cyclotomic(1)));
  return out;
}

int DifferentialForm::degree() const {
  if (terms_.empty()) return -1;
  return std::popcount(terms_.begin()->first);
}

void DifferentialForm::add(Mask s, const RationalFunction& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.emplace(s, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DifferentialForm DifferentialForm::operator-() const {
  DifferentialForm out(n_);
  for (const auto& [s, f] : terms_) out.terms_.emplace(s, -f);
  return out;
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o) {
  for (const auto& [s, f] : o.terms_) add(s, f);
  return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& o) {
  for (const auto& [s, f] : o.terms_) add(s, -f);
  return *this;
}

DifferentialForm& DifferentialForm::operator*=(const RationalFunction& f) {
  if (f.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= f;
  return *this;
}

bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      if (!ia->second.is_zero()) return false;
      ++ia;
    } else if (ia == a.terms_.end() || ib->first < ia->first) {
      if (!ib->second.is_zero()) return false;
      ++ib;
    } else {
      if (!(ia->second == ib->second)) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

DifferentialForm DifferentialForm::cancelled() const {
  DifferentialForm out(n_);
  for (const auto& [s, f] : terms_) out.terms_.emplace(s, f.cancelled());
  return out;
}

std::string DifferentialForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, f] : terms_) {
    if (!out.empty()) out += " + ";
    out += f.to_string();
    if (s) out += "*" + dz_text(s, "^", "dz");
  }
  return out;
}

std::string DifferentialForm::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, f] : terms_) {
    std::string c = f.to_latex();
    if (!out.empty()) out += (c.rfind('-', 0) == 0) ? "" : "+";
    out += c;
    if (s) out += "\\," + dz_text(s, "\\wedge ", "dz_");
  }
  return out;
}

DifferentialForm wedge(const DifferentialForm& f, const DifferentialForm& g) {
  if (f.n() != g.n()) throw std::invalid_argument("forms on different spaces");
  DifferentialForm out(f.n());
  for (const auto& [a, x] : f.terms()) {
    for (const auto& [b, y] : g.terms()) {
      int sign = merge_sign(a, b);
      if (sign == 0) continue;
      out.add(a | b, x * y * Cyclotomic(static_cast<long>(sign)));
    }
  }
  return out;
}

DifferentialForm exterior_derivative(const DifferentialForm& f) {
  DifferentialForm out(f.n());
  for (const auto& [s, c] : f.terms()) {
    for (int k = 0; k < f.n(); ++k) {
      Mask bit = Mask(1) << k;
      int sign = merge_sign(bit, s);
      if (sign == 0) continue;
      RationalFunction dc = c.derivative(k);
      if (dc.is_zero()) continue;
      out.add(s | bit, dc * Cyclotomic(static_cast<long>(sign)));
    }
  }
  return out;
}

DifferentialForm twisted_differential(const std::vector<Rational>& a, const DifferentialForm& f) {
  if (static_cast<int>(a.size()) != f.n()) throw std::invalid_argument("weight vector length");
  DifferentialForm connection(f.n());
  for (int i = 0; i < f.n(); ++i) {
    if (sgn(a[i]) != 0) connection += DifferentialForm::omega(f.n(), i) * Cyclotomic(a[i]);
  }
  return exterior_derivative(f) + wedge(connection, f);
}

DifferentialForm pullback_power(const DifferentialForm& f, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  int n = f.n();
  DifferentialForm out(n);
  for (const auto& [s, c] : f.terms()) {
    std::vector<long> e(n, 0);
    long scale = 1;
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1U) {
        e[i] = r - 1;
        scale *= r;
      }
    }
    RationalFunction jac = RationalFunction::coordinate_monomial(n, e) * Cyclotomic(scale);
    out.add(s, c.power_pullback(r) * jac);
  }
  return out;
}

DifferentialForm act_form(const GroupElement& g, const DifferentialForm& f) {
  int n = f.n();
  if (g.n() != n) throw std::invalid_argument("group element acts on a different n");
  std::vector<int> target(n);
  std::vector<RootOfUnity> scale(n);
  for (int i = 0; i < n; ++i) {
    target[i] = g.perm(i);
    scale[i] = RootOfUnity(-g.zeta(g.perm(i)), g.r());
  }
  DifferentialForm out(n);
  for (const auto& [s, c] : f.terms()) {
    RationalFunction image = c.substitute(target, scale);
    // dz_{i1} ^ ... ^ dz_{ip} -> prod scale * dz_{w(i1)} ^ ... ^ dz_{w(ip)}.
    std::vector<int> seq;
    RootOfUnity factor;
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1U) {
        seq.push_back(target[i]);
        factor = factor * scale[i];
      }
    }
    int inversions = 0;
    Mask t = 0;
    for (std::size_t x = 0; x < seq.size(); ++x) {
      t |= Mask(1) << seq[x];
      for (std::size_t y = x + 1; y < seq.size(); ++y) inversions += seq[x] > seq[y];
    }
    Cyclotomic k = Cyclotomic::root(factor) * Cyclotomic(inversions % 2 == 0 ? 1L : -1L);
    out.add(t, image * k);
  }
  return out;
}

DifferentialForm alpha_form(const DecoratedForest& f) {
  int n = f.n();
  DifferentialForm out = DifferentialForm::constant(n, Cyclotomic(1));
  for (int i = 0; i < n; ++i) {
    if (f.is_open_root(i)) {
      out *= RationalFunction(n, Cyclotomic(static_cast<long>(sign_epsilon_i(f, i))));
    } else if (f.is_closed_root(i)) {
      out = wedge(out, DifferentialForm::omega(n, i));
    } else {
      out = wedge(out, DifferentialForm::omega(n, i, f.parent(i), RootOfUnity(f.label(i), f.r())));
    }
  }
  return out;
}

DifferentialForm realize_os(const OSElement& x) {
  DifferentialForm out(x.n());
  for (const auto& [f, c] : x.terms()) out += alpha_form(f) * c;
  return out;
}

DifferentialForm beta_bar_form(const DecoratedForest& f, const WeightVector& w) {
  int n = f.n();
  if (w.n() != n) throw std::invalid_argument("weight vector length");
  if (!is_admissible(f, w.a())) {
    throw ValidationError("beta-bar is defined for admissible forests only: " + f.to_string());
  }
  std::vector<Integer> b = b_exponents(f, w.a());
  std::vector<long> e(n);
  for (int j = 0; j < n; ++j) e[j] = b[j].get_si();
  DifferentialForm out = DifferentialForm::function(RationalFunction::coordinate_monomial(n, e));
  RootOfUnity one;
  for (int i = 0; i < n; ++i) {
    if (f.is_open_root(i)) {
      out *= RationalFunction(n, Cyclotomic(static_cast<long>(sign_epsilon_i(f, i) * w.r())));
    } else if (f.is_closed_root(i)) {
      out = wedge(out, DifferentialForm::omega(n, i));
    } else if (is_breakable(f, w.a(), i)) {
      out = wedge(out, DifferentialForm::omega(n, i, f.parent(i), one));
    } else {
      int j = f.parent(i);
      DifferentialForm factor = (DifferentialForm::omega(n, i) - DifferentialForm::omega(n, j)) *
                                RationalFunction::inverse_difference(n, i, j, one);
      out = wedge(out, factor);
    }
  }
  return out.cancelled();
}

bool verify_pullback_identity(const DecoratedForest& f, const WeightVector& w,
                              Rectifier* cache) {
  DifferentialForm lhs = realize_os(beta_element(f, w, cache));
  std::vector<long> ra(w.n());
  for (int i = 0; i < w.n(); ++i) ra[i] = w.scaled(i);
  DifferentialForm rhs = pullback_power(beta_bar_form(f, w), w.r()) *
                         RationalFunction::coordinate_monomial(w.n(), ra);
  return lhs == rhs;
}

bool verify_nbc_chain_identity(const LabelledTree& t) {
  if (t.r() != 1 || !t.is_tree()) throw std::invalid_argument("needs a tree with r = 1");
  int n = t.n();
  DifferentialForm lhs = DifferentialForm::constant(n, Cyclotomic(1));
  RationalFunction inv_p(n, Cyclotomic(1));
  RootOfUnity one;
  for (int i = 0; i < n; ++i) {
    if (t.is_root(i)) continue;
    lhs = wedge(lhs, DifferentialForm::omega(n, i, t.parent(i), one));
    inv_p *= RationalFunction::inverse_difference(n, i, t.parent(i), one);
  }
  DifferentialForm alpha(n);
  Mask all = (Mask(1) << n) - 1;
  for (int i = 0; i < n; ++i) {
    long sign = (n - 1 - i) % 2 == 0 ? 1 : -1;
    alpha.add(all & ~(Mask(1) << i), RationalFunction(n, Cyclotomic(sign)));
  }
  return lhs == alpha * inv_p;
}

}  // namespace osforest
