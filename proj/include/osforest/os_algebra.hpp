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

#ifndef OSFOREST_OS_ALGEBRA_HPP_
#define OSFOREST_OS_ALGEBRA_HPP_

#include <map>
#include <string>
#include <vector>

#include "osforest/class_function.hpp"
#include "osforest/cyclotomic.hpp"
#include "osforest/forest.hpp"
#include "osforest/group.hpp"
#include "osforest/tree_module.hpp"

namespace osforest {

// A combination of alpha(F) over rectified decorated forests F.
class OSElement {
 public:
  OSElement() = default;
  OSElement(int r, int n) : r_(r), n_(n) {}

  int r() const { return r_; }
  int n() const { return n_; }
  const std::map<DecoratedForest, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Cyclotomic coefficient(const DecoratedForest& f) const;

  void add(const DecoratedForest& f, const Cyclotomic& c);
  OSElement& operator+=(const OSElement& o);
  OSElement& operator-=(const OSElement& o);
  OSElement& operator*=(const Cyclotomic& c);
  friend OSElement operator+(OSElement a, const OSElement& b) { return a += b; }
  friend OSElement operator-(OSElement a, const OSElement& b) { return a -= b; }
  friend OSElement operator*(OSElement a, const Cyclotomic& c) { return a *= c; }
  friend bool operator==(const OSElement& a, const OSElement& b);

 private:
  int r_ = 1;
  int n_ = 0;
  std::map<DecoratedForest, Cyclotomic> terms_;
};

// Coordinates of alpha(F) in the rectified forest basis.
OSElement reduce_alpha(const DecoratedForest& f, Rectifier* cache = nullptr);
// The same for c * alpha(F), accumulated into out.
void add_reduced(OSElement& out, const DecoratedForest& f, const Cyclotomic& c,
                 Rectifier& cache);

// eps_n(w) eps(w, F) for g = zeta w.
int action_sign(const GroupElement& g, const DecoratedForest& f);
// g.alpha(F) = eps_n(w) eps(w, F) alpha(g.F), extended linearly.
OSElement act_os(const GroupElement& g, const OSElement& x, Rectifier* cache = nullptr);

long graded_dimension(int r, int n, int k, int l);

// Trace of g on A^{k,l}(T(r, n)) in the basis of rectified forests with k
// edges and l closed roots; terms with more closed roots are dropped.
Cyclotomic os_trace(const GroupElement& g, int k, int l, Rectifier& cache);
ClassFunction os_character(int r, int n, int k, int l, long max_order = 100000);

// One summand of the induction decomposition: the open-root trees have sizes
// open_sizes, the closed-root trees closed_sizes.
struct InductionSummand {
  Partition open_sizes;
  Partition closed_sizes;
  // e.g. "(W(2,1) x W(2,1)) x| S_2"
  std::string subgroup;
  // e.g. "eps (x) V(2,1) (x) V(2,1)"
  std::string character;
};
std::vector<InductionSummand> induction_decomposition(int r, int n, int k, int l);

}  // namespace osforest

#endif  // OSFOREST_OS_ALGEBRA_HPP_
