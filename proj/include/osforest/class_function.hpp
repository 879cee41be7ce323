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

#ifndef OSFOREST_CLASS_FUNCTION_HPP_
#define OSFOREST_CLASS_FUNCTION_HPP_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "osforest/cyclotomic.hpp"
#include "osforest/group.hpp"

namespace osforest {

// An r-tuple of partitions (one per zeta color); a plain cycle type for r = 1.
using ClassLabel = std::vector<Partition>;

std::string class_label_string(const ClassLabel& label);

struct ConjugacyClass {
  ClassLabel label;
  GroupElement representative;
  Integer size;
};

// Every conjugacy class of W(r, n), ordered by label. Sizes come from the
// centralizer order prod_{c,i} (i r)^{m_i} m_i!.
std::vector<ConjugacyClass> conjugacy_classes(int r, int n);
Integer centralizer_order(int r, const ClassLabel& label);

// A cyclotomic-valued function on the classes of W(r, n) (S_n when r = 1).
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(int r, int n);

  // Evaluates f on one representative per class.
  static ClassFunction from_function(int r, int n,
                                     const std::function<Cyclotomic(const GroupElement&)>& f);
  static ClassFunction linear(int r, int n, LinearCharacter which);
  static ClassFunction trivial(int r, int n);

  int r() const { return r_; }
  int n() const { return n_; }
  const std::map<ClassLabel, Cyclotomic>& values() const { return values_; }
  const Cyclotomic& at(const ClassLabel& label) const;
  const Cyclotomic& operator()(const GroupElement& g) const { return at(class_label(g)); }
  void set(const ClassLabel& label, const Cyclotomic& v);
  // Value at the identity class.
  Cyclotomic degree() const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  // Pointwise product (tensor product of representations).
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

  std::string to_string() const;

 private:
  void check_same_group(const ClassFunction& o) const;

  int r_ = 1;
  int n_ = 0;
  std::map<ClassLabel, Cyclotomic> values_;
};

// <a, b> = |G|^{-1} sum_g a(g) conj(b(g)).
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

}  // namespace osforest

#endif  // OSFOREST_CLASS_FUNCTION_HPP_
