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

#ifndef OSFOREST_LINEAR_ALGEBRA_HPP_
#define OSFOREST_LINEAR_ALGEBRA_HPP_

#include <map>
#include <optional>
#include <vector>

#include "osforest/rational.hpp"

namespace osforest {

// Incremental row echelon form over Q for sparse vectors indexed by Key.
template <typename Key>
class SparseEchelon {
 public:
  using Vector = std::map<Key, Rational>;

  // Reduces v against the stored pivots; returns true (and stores it) when v
  // is independent of the rows seen so far.
  bool insert(Vector v) {
    reduce(v);
    if (v.empty()) return false;
    auto lead = v.begin();
    Rational inv = 1 / lead->second;
    for (auto& [k, c] : v) c *= inv;
    rows_.emplace(lead->first, std::move(v));
    return true;
  }

  // True when v lies in the span of the stored rows.
  bool contains(Vector v) const {
    reduce(v);
    return v.empty();
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  void reduce(Vector& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      Rational c = it->second;
      Key key = it->first;
      for (const auto& [k, x] : row->second) {
        auto [pos, inserted] = v.emplace(k, Rational(0));
        pos->second -= c * x;
        if (sgn(pos->second) == 0) v.erase(pos);
      }
      it = v.upper_bound(key);
    }
  }

  std::map<Key, Vector> rows_;
};

template <typename Key>
int sparse_rank(const std::vector<std::map<Key, Rational>>& rows) {
  SparseEchelon<Key> e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace osforest

#endif  // OSFOREST_LINEAR_ALGEBRA_HPP_
