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

#include "osforest/group.hpp"

#include <algorithm>
#include <numeric>

namespace osforest {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::erase(parts_, 0);
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(m, m, cur, out);
  return out;
}

std::vector<Partition> partitions_with_length(int m, int len) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(m)) {
    if (p.length() == len) out.push_back(std::move(p));
  }
  return out;
}

GroupElement::GroupElement(int r, std::span<const int> zeta, std::span<const int> perm)
    : r_(r), n_(static_cast<int>(perm.size())) {
  if (r < 1 || r > 127) throw std::invalid_argument("r out of range");
  if (n_ > kMaxVertices) throw std::invalid_argument("too many points");
  if (zeta.size() != perm.size()) throw std::invalid_argument("zeta and perm lengths differ");
  std::array<bool, kMaxVertices> seen{};
  for (int i = 0; i < n_; ++i) {
    if (perm[i] < 0 || perm[i] >= n_ || seen[perm[i]]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[perm[i]] = true;
    perm_[i] = static_cast<std::int8_t>(perm[i]);
    zeta_[i] = static_cast<std::int8_t>(mod_positive(zeta[i], r));
  }
}

GroupElement GroupElement::identity(int r, int n) {
  std::vector<int> z(n, 0), p(n);
  std::iota(p.begin(), p.end(), 0);
  return {r, z, p};
}

GroupElement GroupElement::permutation(int r, std::span<const int> perm) {
  std::vector<int> z(perm.size(), 0);
  return {r, z, perm};
}

GroupElement GroupElement::diagonal(int r, std::span<const int> zeta) {
  std::vector<int> p(zeta.size());
  std::iota(p.begin(), p.end(), 0);
  return {r, zeta, p};
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (o.n_ != n_ || o.r_ != r_) throw std::invalid_argument("group elements differ in (r, n)");
  GroupElement g = *this;
  for (int i = 0; i < n_; ++i) {
    g.perm_[i] = perm_[o.perm_[i]];
    g.zeta_[perm_[i]] = static_cast<std::int8_t>((zeta_[perm_[i]] + o.zeta_[i]) % r_);
  }
  return g;
}

GroupElement GroupElement::inverse() const {
  // (zeta w)^{-1} = w^{-1} zeta^{-1} = (w^{-1}(zeta^{-1})) w^{-1}.
  GroupElement g = *this;
  for (int i = 0; i < n_; ++i) {
    g.perm_[perm_[i]] = static_cast<std::int8_t>(i);
  }
  for (int i = 0; i < n_; ++i) {
    // w^{-1}(zeta^{-1})_{w^{-1}(j)} = zeta_j^{-1}
    g.zeta_[g.perm_[i]] = static_cast<std::int8_t>((r_ - zeta_[i]) % r_);
  }
  return g;
}

bool GroupElement::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (perm_[i] != i || zeta_[i] != 0) return false;
  }
  return true;
}

int GroupElement::perm_sign() const {
  int sign = 1;
  std::array<bool, kMaxVertices> seen{};
  for (int i = 0; i < n_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

int GroupElement::zeta_sum() const {
  int s = 0;
  for (int i = 0; i < n_; ++i) s += zeta_[i];
  return s % r_;
}

std::string GroupElement::to_string() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += std::to_string(zeta_[i]);
  }
  s += "](";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += std::to_string(perm_[i] + 1);
  }
  return s + ")";
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

long wreath_order(int r, int n) {
  long order = 1;
  for (int i = 1; i <= n; ++i) order *= static_cast<long>(r) * i;
  return order;
}

std::vector<GroupElement> enumerate_group(int r, int n, long max_order) {
  if (wreath_order(r, n) > max_order) {
    throw SizeGuardError("W(" + std::to_string(r) + "," + std::to_string(n) +
                         ") has more than " + std::to_string(max_order) + " elements");
  }
  std::vector<GroupElement> out;
  std::vector<int> zeta(n, 0);
  for (const auto& p : all_permutations(n)) {
    std::fill(zeta.begin(), zeta.end(), 0);
    while (true) {
      out.emplace_back(r, zeta, p);
      int i = n - 1;
      while (i >= 0 && zeta[i] == r - 1) zeta[i--] = 0;
      if (i < 0) break;
      ++zeta[i];
    }
  }
  return out;
}

std::vector<Partition> class_label(const GroupElement& g) {
  std::vector<std::vector<int>> by_color(g.r());
  std::array<bool, kMaxVertices> seen{};
  for (int i = 0; i < g.n(); ++i) {
    if (seen[i]) continue;
    int len = 0, color = 0;
    for (int j = i; !seen[j]; j = g.perm(j)) {
      seen[j] = true;
      ++len;
      color += g.zeta(j);
    }
    by_color[color % g.r()].push_back(len);
  }
  std::vector<Partition> label;
  for (auto& parts : by_color) label.emplace_back(std::move(parts));
  return label;
}

Cyclotomic linear_character(LinearCharacter which, const GroupElement& g) {
  Cyclotomic sign(static_cast<long>(g.perm_sign()));
  Cyclotomic prod = Cyclotomic::root(RootOfUnity(g.zeta_sum(), g.r()));
  switch (which) {
    case LinearCharacter::kSign:
      return sign;
    case LinearCharacter::kProd:
      return prod;
    case LinearCharacter::kDet:
      return sign * prod;
  }
  throw std::logic_error("unknown linear character");
}

}  // namespace osforest
