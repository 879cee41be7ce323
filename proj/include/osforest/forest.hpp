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

#ifndef OSFOREST_FOREST_HPP_
#define OSFOREST_FOREST_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "osforest/group.hpp"
#include "osforest/rational.hpp"

namespace osforest {

// A directed forest on {0..n-1} with mu_r edge labels and open/closed roots.
// Each non-root vertex i has one outgoing edge i -> parent(i) labelled by
// zeta_r^label(i). A labelled tree is the special case with n - 1 edges and
// an open root.
class DecoratedForest {
 public:
  DecoratedForest() = default;
  // n isolated open roots.
  DecoratedForest(int r, int n);

  // Text such as "1->2[e1];3*;4". Edges "i->j", optional "[eK]" label
  // exponent, '*' after a vertex marks it a closed root. Vertices that are
  // not mentioned are isolated open roots.
  static DecoratedForest parse(std::string_view text, int r, int n);
  // The chain 1 -> 2 -> ... -> n with trivial labels and open root.
  static DecoratedForest chain(int r, int n);

  int r() const { return r_; }
  int n() const { return n_; }
  int parent(int i) const { return parent_[i]; }
  int label(int i) const { return label_[i]; }
  bool is_root(int i) const { return parent_[i] < 0; }
  bool is_closed_root(int i) const { return parent_[i] < 0 && closed_[i]; }
  bool is_open_root(int i) const { return parent_[i] < 0 && !closed_[i]; }

  void set_edge(int i, int j, int label);
  void set_root(int i, bool closed);

  int num_edges() const;
  int num_closed() const;
  int num_open() const { return n_ - num_edges() - num_closed(); }
  bool is_rectified() const;
  bool is_tree() const { return num_edges() == n_ - 1 && num_closed() == 0; }
  // False when the parent map has a cycle.
  bool is_acyclic() const;
  int root_of(int i) const;
  // Vertex sets of the trees, each sorted, ordered by smallest vertex.
  std::vector<std::vector<int>> components() const;
  // Direct predecessors: all i with i -> j.
  std::vector<int> children(int j) const;

  std::string to_string() const;

  friend bool operator==(const DecoratedForest& a, const DecoratedForest& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.parent_ == b.parent_ && a.label_ == b.label_ &&
           a.closed_ == b.closed_;
  }
  // (k, l, parent map, labels, root status) lexicographically.
  friend bool operator<(const DecoratedForest& a, const DecoratedForest& b);
  std::size_t hash() const;

 private:
  int r_ = 1;
  int n_ = 0;
  std::array<std::int8_t, kMaxVertices> parent_{};
  std::array<std::int8_t, kMaxVertices> label_{};
  std::array<bool, kMaxVertices> closed_{};
};

using LabelledTree = DecoratedForest;

struct ForestHash {
  std::size_t operator()(const DecoratedForest& f) const { return f.hash(); }
};

using ForestVisitor = std::function<void(const DecoratedForest&)>;

// Every forest with k edges and l closed roots, in (parent map, labels, root
// status) lexicographic order.
void for_each_forest(int r, int n, int k, int l, bool rectified_only,
                     const ForestVisitor& visit);
// All (k, l) with k + l <= n, k ascending then l ascending.
void for_each_forest(int r, int n, bool rectified_only, const ForestVisitor& visit);
void for_each_tree(int r, int n, bool rectified_only, const ForestVisitor& visit);
std::vector<DecoratedForest> enumerate_forests(int r, int n, int k, int l,
                                               bool rectified_only);
std::vector<DecoratedForest> enumerate_trees(int r, int n, bool rectified_only);

// g.F: the edge i -> j with label e becomes w(i) -> w(j) with label
// e + zeta_{w(i)} - zeta_{w(j)}; root status is carried along.
DecoratedForest act_forest(const GroupElement& g, const DecoratedForest& f);

// (-1)^{i - #open roots below i} for 0-based i.
int sign_epsilon_i(const DecoratedForest& f, int i);
// (-1)^{number of inversions of w among open roots}.
int sign_epsilon_w(std::span<const int> perm, const DecoratedForest& f);
int sign_epsilon_w(const GroupElement& g, const DecoratedForest& f);

struct ForestWeights {
  std::vector<int> component_of;   // index into components
  std::vector<std::vector<int>> components;
  std::vector<Rational> subtree_sum;    // sum of a_k over k below or equal to i
  std::vector<Rational> component_sum;  // per vertex: sum over its tree
  // precedes[k][i]: k is connected to i by a directed path (k <= i).
  std::vector<std::vector<bool>> precedes;
};
ForestWeights forest_queries(const DecoratedForest& f, std::span<const Rational> a);

}  // namespace osforest

#endif  // OSFOREST_FOREST_HPP_
