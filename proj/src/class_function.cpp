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

#include "osforest/class_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace osforest {

namespace {

// All r-tuples of partitions with total size n.
void label_tuples(int r, int remaining, int color, ClassLabel& current,
                  std::vector<ClassLabel>& out) {
  if (color == r - 1) {
    for (const auto& p : partitions_of(remaining)) {
      current.push_back(p);
      out.push_back(current);
      current.pop_back();
    }
    return;
  }
  for (int m = 0; m <= remaining; ++m) {
    for (const auto& p : partitions_of(m)) {
      current.push_back(p);
      label_tuples(r, remaining - m, color + 1, current, out);
      current.pop_back();
    }
  }
}

GroupElement class_representative(int r, int n, const ClassLabel& label) {
  std::vector<int> zeta(n, 0), perm(n, 0);
  int p = 0;
  for (int c = 0; c < r; ++c) {
    for (int part : label[c].parts()) {
      for (int t = 0; t < part; ++t) perm[p + t] = p + (t + 1) % part;
      zeta[p] = c;
      p += part;
    }
  }
  return GroupElement(r, zeta, perm);
}

}  // namespace

std::string class_label_string(const ClassLabel& label) {
  if (label.size() == 1) return label[0].to_string();
  std::string s = "[";
  for (std::size_t c = 0; c < label.size(); ++c) {
    if (c) s += ",";
    s += label[c].to_string();
  }
  return s + "]";
}

Integer centralizer_order(int r, const ClassLabel& label) {
  Integer z = 1;
  for (const auto& p : label) {
    for (int i = 1; i <= p.size(); ++i) {
      int m = p.multiplicity(i);
      for (int k = 1; k <= m; ++k) z *= Integer(i) * r * k;
    }
  }
  return z;
}

std::vector<ConjugacyClass> conjugacy_classes(int r, int n) {
  if (r < 1 || n < 0 || n > kMaxVertices) throw std::invalid_argument("bad (r, n)");
  std::vector<ClassLabel> labels;
  ClassLabel current;
  label_tuples(r, n, 0, current, labels);
  Integer order = 1;
  for (int i = 1; i <= n; ++i) order *= Integer(i) * r;
  std::vector<ConjugacyClass> out;
  out.reserve(labels.size());
  for (auto& label : labels) {
    Integer size = order / centralizer_order(r, label);
    GroupElement rep = class_representative(r, n, label);
    out.push_back({std::move(label), rep, size});
  }
  std::sort(out.begin(), out.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) { return a.label < b.label; });
  return out;
}

ClassFunction::ClassFunction(int r, int n) : r_(r), n_(n) {
  for (const auto& c : conjugacy_classes(r, n)) values_.emplace(c.label, Cyclotomic(0));
}

ClassFunction ClassFunction::from_function(
    int r, int n, const std::function<Cyclotomic(const GroupElement&)>& f) {
  ClassFunction out(r, n);
  for (const auto& c : conjugacy_classes(r, n)) out.values_[c.label] = f(c.representative);
  return out;
}

ClassFunction ClassFunction::linear(int r, int n, LinearCharacter which) {
  return from_function(r, n, [which](const GroupElement& g) { return linear_character(which, g); });
}

ClassFunction ClassFunction::trivial(int r, int n) {
  return from_function(r, n, [](const GroupElement&) { return Cyclotomic(1); });
}

const Cyclotomic& ClassFunction::at(const ClassLabel& label) const {
  auto it = values_.find(label);
  if (it == values_.end()) throw std::out_of_range("unknown class " + class_label_string(label));
  return it->second;
}

void ClassFunction::set(const ClassLabel& label, const Cyclotomic& v) {
  auto it = values_.find(label);
  if (it == values_.end()) throw std::out_of_range("unknown class " + class_label_string(label));
  it->second = v;
}

Cyclotomic ClassFunction::degree() const {
  return at(class_label(GroupElement::identity(r_, n_)));
}

void ClassFunction::check_same_group(const ClassFunction& o) const {
  if (r_ != o.r_ || n_ != o.n_) throw std::invalid_argument("class functions on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  check_same_group(o);
  for (auto& [label, v] : values_) v += o.at(label);
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  check_same_group(o);
  for (auto& [label, v] : values_) v -= o.at(label);
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  a.check_same_group(b);
  ClassFunction out = a;
  for (auto& [label, v] : out.values_) v *= b.at(label);
  return out;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  if (a.r_ != b.r_ || a.n_ != b.n_) return false;
  for (const auto& [label, v] : a.values_) {
    if (!(v == b.at(label))) return false;
  }
  return true;
}

std::string ClassFunction::to_string() const {
  std::string s;
  for (const auto& [label, v] : values_) {
    if (!s.empty()) s += "; ";
    s += class_label_string(label) + ": " + v.to_string();
  }
  return s;
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.r() != b.r() || a.n() != b.n()) {
    throw std::invalid_argument("class functions on different groups");
  }
  Integer order = 1;
  for (int i = 1; i <= a.n(); ++i) order *= Integer(i) * a.r();
  Cyclotomic total(0);
  for (const auto& c : conjugacy_classes(a.r(), a.n())) {
    total += Cyclotomic(Rational(c.size)) * a.at(c.label) * b.at(c.label).conj();
  }
  return total * Cyclotomic(Rational(Integer(1), order));
}

}  // namespace osforest
