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

#include "osforest/os_algebra.hpp"

#include <stdexcept>

namespace osforest {

Cyclotomic OSElement::coefficient(const DecoratedForest& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? Cyclotomic(0) : it->second;
}

void OSElement::add(const DecoratedForest& f, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OSElement& OSElement::operator+=(const OSElement& o) {
  for (const auto& [f, c] : o.terms_) add(f, c);
  return *this;
}

OSElement& OSElement::operator-=(const OSElement& o) {
  for (const auto& [f, c] : o.terms_) add(f, -c);
  return *this;
}

OSElement& OSElement::operator*=(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [f, v] : terms_) v *= c;
  return *this;
}

bool operator==(const OSElement& a, const OSElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [f, c] : a.terms_) {
    auto it = b.terms_.find(f);
    if (it == b.terms_.end() || !(it->second == c)) return false;
  }
  return true;
}

void add_reduced(OSElement& out, const DecoratedForest& f, const Cyclotomic& c,
                 Rectifier& cache) {
  if (c.is_zero()) return;
  for (const auto& [g, x] : cache.rectify(f)) out.add(g, c * Cyclotomic(x));
}

OSElement reduce_alpha(const DecoratedForest& f, Rectifier* cache) {
  Rectifier local;
  Rectifier& rect = cache ? *cache : local;
  OSElement out(f.r(), f.n());
  add_reduced(out, f, Cyclotomic(1), rect);
  return out;
}

int action_sign(const GroupElement& g, const DecoratedForest& f) {
  return g.perm_sign() * sign_epsilon_w(g, f);
}

OSElement act_os(const GroupElement& g, const OSElement& x, Rectifier* cache) {
  Rectifier local;
  Rectifier& rect = cache ? *cache : local;
  OSElement out(x.r(), x.n());
  for (const auto& [f, c] : x.terms()) {
    add_reduced(out, act_forest(g, f), c * Cyclotomic(static_cast<long>(action_sign(g, f))),
                rect);
  }
  return out;
}

long graded_dimension(int r, int n, int k, int l) {
  long count = 0;
  for_each_forest(r, n, k, l, true, [&](const DecoratedForest&) { ++count; });
  return count;
}

Cyclotomic os_trace(const GroupElement& g, int k, int l, Rectifier& cache) {
  long trace = 0;
  for (const auto& f : enumerate_forests(g.r(), g.n(), k, l, true)) {
    const auto& image = cache.rectify(act_forest(g, f));
    auto it = image.find(f);
    if (it != image.end()) trace += action_sign(g, f) * it->second;
  }
  return Cyclotomic(trace);
}

ClassFunction os_character(int r, int n, int k, int l, long max_order) {
  if (wreath_order(r, n) > max_order) {
    throw SizeGuardError("group W(" + std::to_string(r) + "," + std::to_string(n) +
                         ") exceeds the order guard");
  }
  Rectifier cache;
  return ClassFunction::from_function(
      r, n, [&](const GroupElement& g) { return os_trace(g, k, l, cache); });
}

namespace {

std::string factor_list(int r, const Partition& p, bool wreath_factor) {
  std::string s;
  for (int part : p.parts()) {
    if (!s.empty()) s += " x ";
    s += wreath_factor ? "W(" + std::to_string(r) + "," + std::to_string(part) + ")"
                       : "V(" + std::to_string(r) + "," + std::to_string(part) + ")";
  }
  return s;
}

std::string permuting_factors(const Partition& p) {
  std::string s;
  for (int i = 1; i <= p.size(); ++i) {
    int m = p.multiplicity(i);
    if (m < 2) continue;
    if (!s.empty()) s += " x ";
    s += "S_" + std::to_string(m);
  }
  return s;
}

std::string stabilizer(int r, const Partition& p) {
  std::string s = factor_list(r, p, true);
  std::string perms = permuting_factors(p);
  if (perms.empty()) return s;
  return "(" + s + ") x| (" + perms + ")";
}

}  // namespace

std::vector<InductionSummand> induction_decomposition(int r, int n, int k, int l) {
  std::vector<InductionSummand> out;
  int open = n - k - l;
  if (k < 0 || l < 0 || open < 0) return out;
  for (int m1 = 0; m1 <= n; ++m1) {
    for (const auto& p1 : partitions_with_length(m1, open)) {
      for (const auto& p2 : partitions_with_length(n - m1, l)) {
        InductionSummand s{p1, p2, "", ""};
        std::string a = p1.length() ? stabilizer(r, p1) : "";
        std::string b = p2.length() ? stabilizer(r, p2) : "";
        s.subgroup = a.empty() ? b : (b.empty() ? a : "(" + a + ") x (" + b + ")");
        std::string factors = factor_list(r, p1, false);
        std::string closed = factor_list(r, p2, false);
        if (!closed.empty()) factors += factors.empty() ? closed : " x " + closed;
        s.character = permuting_factors(p1).empty() ? factors : "eps (x) " + factors;
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

}  // namespace osforest
