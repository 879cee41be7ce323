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

#include "osforest/verify.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "osforest/characters.hpp"
#include "osforest/forms.hpp"
#include "osforest/linear_algebra.hpp"
#include "osforest/local_system.hpp"
#include "osforest/os_algebra.hpp"
#include "osforest/tree_module.hpp"

namespace osforest {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a failed sub-check; only the first few are spelled out.
  void fail(const std::string& what) {
    if (pass || failures < 3) detail << (pass ? "" : "; ") << "FAILED " << what;
    pass = false;
    ++failures;
  }
  int failures = 0;
};

long power(long b, int e) {
  long out = 1;
  while (e-- > 0) out *= b;
  return out;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<Rational> repeat(int n, long num, long den) {
  return std::vector<Rational>(n, make_rational(num, den));
}

// 1 / p_T as a product over the edges of T.
RationalFunction inverse_tree_product(const DecoratedForest& t) {
  RationalFunction out(t.n(), Cyclotomic(1));
  for (int i = 0; i < t.n(); ++i) {
    if (!t.is_root(i)) out *= RationalFunction::inverse_difference(t.n(), i, t.parent(i), {});
  }
  return out;
}

void counting(Outcome& o) {
  for (int r = 1; r <= 4; ++r) {
    for (int n = 1; n <= 6; ++n) {
      long all = 0, rect = 0;
      for_each_tree(r, n, false, [&](const DecoratedForest& t) {
        ++all;
        rect += t.is_rectified();
      });
      long want_all = power(static_cast<long>(r) * n, n - 1);
      long want_rect = power(r, n - 1) * factorial(n - 1);
      if (all != want_all || rect != want_rect) {
        o.fail("r=" + std::to_string(r) + " n=" + std::to_string(n) + ": " + std::to_string(all) +
               "/" + std::to_string(rect));
      }
    }
  }
  if (o.pass) o.detail << "tree counts match for r<=4, n<=6";
}

void catalog(Outcome& o) {
  const int r = 2, n = 2;
  using DF = DifferentialForm;
  long count = 0;
  for_each_forest(r, n, false, [&](const DecoratedForest&) { ++count; });
  if (count != 12) o.fail("|F(2,2)| = " + std::to_string(count));

  struct Row {
    DecoratedForest f;
    DifferentialForm form;
  };
  std::vector<Row> rows;
  DecoratedForest open(r, n);
  rows.push_back({open, DF::constant(n, Cyclotomic(1))});
  for (int e = 0; e < r; ++e) {
    RootOfUnity eta(e, r);
    DecoratedForest f(r, n), g(r, n), fc(r, n), gc(r, n);
    f.set_edge(0, 1, e);
    rows.push_back({f, -DF::omega(n, 0, 1, eta)});
    g.set_edge(1, 0, e);
    rows.push_back({g, DF::omega(n, 1, 0, eta)});
    fc.set_edge(0, 1, e);
    fc.set_root(1, true);
    rows.push_back({fc, wedge(DF::omega(n, 0, 1, eta), DF::omega(n, 1))});
    gc.set_edge(1, 0, e);
    gc.set_root(0, true);
    rows.push_back({gc, wedge(DF::omega(n, 0), DF::omega(n, 1, 0, eta))});
  }
  DecoratedForest c2(r, n), c1(r, n), c12(r, n);
  c2.set_root(1, true);
  rows.push_back({c2, DF::omega(n, 1)});
  c1.set_root(0, true);
  rows.push_back({c1, -DF::omega(n, 0)});
  c12.set_root(0, true);
  c12.set_root(1, true);
  rows.push_back({c12, wedge(DF::omega(n, 0), DF::omega(n, 1))});

  std::set<DecoratedForest> seen;
  for (const auto& row : rows) {
    seen.insert(row.f);
    if (!(alpha_form(row.f) == row.form)) o.fail("alpha(" + row.f.to_string() + ")");
    // The reduced coordinates must realize to the same form.
    if (!(realize_os(reduce_alpha(row.f)) == row.form)) o.fail("reduced " + row.f.to_string());
  }
  if (seen.size() != 12) o.fail("table rows are not 12 distinct forests");
  if (o.pass) o.detail << "12 forests, alpha and reduced forms match the table";
}

void rectification(Outcome& o) {
  Rectifier cache;
  for (int n = 2; n <= 4; ++n) {
    long count = 0;
    for_each_tree(1, n, false, [&](const DecoratedForest& t) {
      ++count;
      if (!(realize_r1(rectify_tree(t, &cache)) == inverse_tree_product(t))) {
        o.fail("tree " + t.to_string());
      }
    });
    if (count != power(n, n - 1)) o.fail("n=" + std::to_string(n) + " tree count");
  }
  if (o.pass) o.detail << "1 + 9 + 64 trees realize to 1/p_T";
}

void dimension(Outcome& o) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 5; ++n) {
      Rectifier cache;
      SparseEchelon<DecoratedForest> echelon;
      bool outside = false;
      for_each_tree(r, n, false, [&](const DecoratedForest& t) {
        std::map<DecoratedForest, Rational> v;
        for (const auto& [f, c] : cache.rectify(t)) {
          if (!f.is_rectified()) outside = true;
          v.emplace(f, Rational(c));
        }
        echelon.insert(std::move(v));
      });
      long want = power(r, n - 1) * factorial(n - 1);
      if (outside || echelon.rank() != want) {
        o.fail("r=" + std::to_string(r) + " n=" + std::to_string(n) + " rank " +
               std::to_string(echelon.rank()));
      }
    }
  }
  if (o.pass) o.detail << "rank = r^(n-1)(n-1)! for r<=3, n<=5";
}

void lehrer_solomon(Outcome& o) {
  for (int n = 1; n <= 6; ++n) {
    Rectifier cache;
    for (int p = 0; p < n; ++p) {
      if (!verify_ls_identity(n, p, &cache)) {
        o.fail("c_n^p = b_{n,p} at n=" + std::to_string(n) + " p=" + std::to_string(p));
      }
    }
  }
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 5; ++n) {
      Rectifier cache;
      if (!annihilator_check(r, n, &cache)) {
        o.fail("annihilator r=" + std::to_string(r) + " n=" + std::to_string(n));
      }
    }
  }
  if (o.pass) o.detail << "n<=6 all p; annihilators r<=3, n<=5";
}

void betti(Outcome& o) {
  std::map<int, long> b = betti_numbers(repeat(4, -1, 2));
  std::map<int, long> want{{2, 3}, {3, 12}, {4, 9}};
  std::erase_if(b, [](const auto& kv) { return kv.second == 0; });
  if (b != want) o.fail("(-1/2)^4 Betti numbers");
  for (int n = 1; n <= 6; ++n) {
    for (int s = 0; s < n; ++s) {
      std::map<int, long> bs = betti_numbers(repeat(n, s, n));
      long g = gcd_long(s, n);
      for (int p = 0; p <= n; ++p) {
        bool nonzero = bs.count(p) && bs[p] > 0;
        if (nonzero != (n - g <= p)) {
          o.fail("window at n=" + std::to_string(n) + " s=" + std::to_string(s) +
                 " p=" + std::to_string(p));
        }
      }
    }
  }
  if (o.pass) o.detail << "H^2,H^3,H^4 = 3,12,9; windows hold for n<=6";
}

std::vector<std::vector<Rational>> closedness_weights() {
  return {repeat(4, -1, 2), repeat(4, 1, 2), repeat(3, 1, 3), repeat(4, 1, 4),
          {make_rational(1, 2), make_rational(1, 2), make_rational(-1), make_rational(0)}};
}

void closedness(Outcome& o) {
  long checked = 0;
  for (const auto& a : closedness_weights()) {
    WeightVector w = WeightVector::with_minimal_r(a);
    int n = w.n();
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; k + l <= n; ++l) {
        for (const auto& f : admissible_forests(a, k, l, true)) {
          ++checked;
          if (!twisted_differential(a, beta_bar_form(f, w)).is_zero()) {
            o.fail("beta-bar(" + f.to_string() + ") not closed");
          }
        }
      }
    }
  }
  if (o.pass) o.detail << checked << " forms closed over 5 weight vectors";
}

// All a with r a_i in [-r, r).
void for_each_weight(int r, int n, const std::function<void(const WeightVector&)>& visit) {
  std::vector<long> k(n, -r);
  while (true) {
    std::vector<Rational> a(n);
    for (int i = 0; i < n; ++i) a[i] = make_rational(k[i], r);
    visit(WeightVector(a, r));
    int i = 0;
    for (; i < n; ++i) {
      if (++k[i] < r) break;
      k[i] = -r;
    }
    if (i == n) return;
  }
}

void pullback(Outcome& o) {
  long checked = 0;
  for (int r = 1; r <= 4; ++r) {
    Rectifier cache;
    for (int n = 1; n <= 3; ++n) {
      for_each_weight(r, n, [&](const WeightVector& w) {
        for (int k = 0; k <= n; ++k) {
          for (int l = 0; k + l <= n; ++l) {
            for (const auto& f : admissible_forests(w.a(), k, l, true)) {
              ++checked;
              if (!verify_pullback_identity(f, w, &cache)) {
                o.fail("r=" + std::to_string(r) + " " + f.to_string());
              }
            }
          }
        }
      });
    }
  }
  if (o.pass) o.detail << checked << " (F, a, r) instances with r a_i in [-r, r)";
}

void nbc(Outcome& o) {
  long checked = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_trees(1, n, true)) {
      ++checked;
      if (!verify_nbc_chain_identity(t)) o.fail(t.to_string());
    }
  }
  if (o.pass) o.detail << checked << " rectified trees, n<=4";
}

Partition part(std::vector<int> p) { return Partition(std::move(p)); }

void characters(Outcome& o) {
  // (a)
  for (int n = 1; n <= 5; ++n) {
    if (!verify_corollary(CorollaryCase::kLehrerSolomon, {1, n})) {
      o.fail("(a) n=" + std::to_string(n));
    }
  }
  // (b)
  for (int r = 1; r <= 6; ++r) {
    for (int m = 1; m <= 6; ++m) {
      CorollaryArgs args;
      args.r = r;
      args.m = m;
      if (!verify_corollary(CorollaryCase::kMysteryThm, args)) {
        o.fail("(b) r=" + std::to_string(r) + " m=" + std::to_string(m));
      }
    }
  }
  // (c)
  using Decomp = std::map<Partition, Integer>;
  const std::vector<std::pair<std::pair<int, int>, Decomp>> finalex = {
      {{2, 0}, {{part({3, 1}), 1}}},
      {{3, 0}, {{part({3, 1}), 1}, {part({2, 1, 1}), 1}}},
      {{2, 1}, {{part({4}), 1}, {part({3, 1}), 1}, {part({2, 2}), 1}}},
      {{3, 1}, {{part({3, 1}), 1}, {part({2, 1, 1}), 1}}},
      {{2, 2}, {{part({4}), 1}, {part({2, 2}), 1}}},
  };
  for (const auto& [kl, want] : finalex) {
    if (decompose_sn(isotypic_character(repeat(4, 1, 2), kl.first, kl.second)) != want) {
      o.fail("(c) A^{" + std::to_string(kl.first) + "," + std::to_string(kl.second) + "}");
    }
  }
  // (d)
  for (int k = 0; k <= 4; ++k) {
    for (int l = 0; k + l <= 4; ++l) {
      CorollaryArgs args{2, 4, k, l, 1, 1};
      if (!verify_corollary(CorollaryCase::kMystery, args)) {
        o.fail("(d) k=" + std::to_string(k) + " l=" + std::to_string(l));
      }
    }
  }
  // (e)
  auto triv = ClassFunction::trivial(2, 2);
  auto sign = ClassFunction::linear(2, 2, LinearCharacter::kSign);
  auto prod = ClassFunction::linear(2, 2, LinearCharacter::kProd);
  auto det = ClassFunction::linear(2, 2, LinearCharacter::kDet);
  const std::vector<std::pair<std::pair<int, int>, ClassFunction>> t22 = {
      {{0, 0}, triv},        {{1, 0}, triv + prod}, {{0, 1}, triv + sign},
      {{1, 1}, triv + prod}, {{0, 2}, sign},
  };
  for (const auto& [kl, want] : t22) {
    if (!(os_character(2, 2, kl.first, kl.second) == want)) {
      o.fail("(e) A^{" + std::to_string(kl.first) + "," + std::to_string(kl.second) + "}");
    }
  }
  if (!(module_character(2, 2) == sign + det)) o.fail("(e) V(2,2)");
  if (o.pass) o.detail << "(a)-(e) exact";
}

void generators(Outcome& o) {
  auto gens = module_generators(repeat(4, 1, 2));
  std::map<int, int> by_degree;
  for (const auto& f : gens) ++by_degree[f.num_edges()];
  std::map<int, int> want{{2, 3}};
  if (by_degree != want) {
    std::ostringstream got;
    for (const auto& [d, c] : by_degree) got << " deg" << d << ":" << c;
    o.fail("(1/2)^4 generators by degree" + got.str() + " (expected deg2:3)");
  }
  for (int n = 1; n <= 6; ++n) {
    for (int s = 1; s < n; ++s) {
      if (gcd_long(s, n) != 1) continue;
      auto g = module_generators(repeat(n, s, n));
      if (g.empty()) o.fail("no generators for s/n=" + std::to_string(s) + "/" + std::to_string(n));
      for (const auto& f : g) {
        if (f.num_edges() != n - 1) o.fail("non-tree generator " + f.to_string());
      }
    }
  }
  if (o.pass) o.detail << "(1/2)^4: 3 generators in degree 2; coprime cases are trees";
}

// sum over zeta in mu_r^n of zeta^{r a} alpha(zeta.F), built from honest forms.
DifferentialForm beta_form_direct(const DecoratedForest& f, const WeightVector& w) {
  int r = w.r(), n = f.n();
  DecoratedForest base(r, n);
  for (int i = 0; i < n; ++i) {
    if (f.is_root(i)) {
      base.set_root(i, f.is_closed_root(i));
    } else {
      base.set_edge(i, f.parent(i), 0);
    }
  }
  std::vector<int> perm(n), zeta(n, 0);
  for (int i = 0; i < n; ++i) perm[i] = i;
  DifferentialForm out(n);
  while (true) {
    long e = 0;
    for (int i = 0; i < n; ++i) e += zeta[i] * w.scaled(i);
    Cyclotomic chi = Cyclotomic::root(RootOfUnity(mod_positive(e, r), r));
    out += alpha_form(act_forest(GroupElement(r, zeta, perm), base)) * chi;
    int i = 0;
    for (; i < n; ++i) {
      if (++zeta[i] < r) break;
      zeta[i] = 0;
    }
    if (i == n) return out;
  }
}

void relations(Outcome& o) {
  long relprop = 0, newrel = 0;
  for (int r = 1; r <= 2; ++r) {
    for (int n = 1; n <= 3; ++n) {
      for_each_forest(r, n, false, [&](const DecoratedForest& f) {
        for (const auto& t : triple_relations(f)) {
          ++relprop;
          if (!(alpha_form(t.f1) + alpha_form(t.f2) == alpha_form(t.f3))) {
            o.fail("relation (1) at " + f.to_string());
          }
        }
        for (const auto& fl : flip_relations(f)) {
          ++relprop;
          DifferentialForm rhs =
              fl.f_double_prime ? alpha_form(*fl.f_double_prime) : DifferentialForm(n);
          DifferentialForm lhs = alpha_form(fl.f) + alpha_form(fl.f_prime) * Cyclotomic(fl.sign);
          if (!(lhs == rhs)) {
            o.fail("relation (2)/(3) at " + f.to_string());
          }
        }
      });
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for_each_weight(2, n, [&](const WeightVector& w) {
      const auto& a = w.a();
      for_each_forest(1, n, false, [&](const DecoratedForest& f) {
        if (!is_admissible(f, a)) return;
        for (const auto& t : triple_relations(f)) {
          ++newrel;
          if (!(beta_form_direct(t.f1, w) + beta_form_direct(t.f2, w) ==
                beta_form_direct(t.f3, w))) {
            o.fail("beta relation (1) at " + f.to_string());
          }
        }
        for (const auto& fl : flip_relations(f)) {
          ++newrel;
          DifferentialForm rhs(n);
          // Type (4) when F'' is inadmissible: the right side vanishes.
          if (fl.f_double_prime && is_admissible(*fl.f_double_prime, a)) {
            rhs = beta_form_direct(*fl.f_double_prime, w);
          }
          DifferentialForm lhs =
              beta_form_direct(fl.f, w) + beta_form_direct(fl.f_prime, w) * Cyclotomic(fl.sign);
          if (!(lhs == rhs)) {
            o.fail("beta relation (2)-(4) at " + f.to_string());
          }
        }
      });
    });
  }
  if (o.pass) o.detail << relprop << " alpha and " << newrel << " beta relation instances";
}

using CheckFn = void (*)(Outcome&);

const std::vector<CheckFn>& check_functions() {
  static const std::vector<CheckFn> fns = {counting,   catalog,  rectification, dimension,
                                           lehrer_solomon, betti, closedness,   pullback,
                                           nbc,        characters, generators, relations};
  return fns;
}

}  // namespace

const std::vector<CheckInfo>& acceptance_checks() {
  static const std::vector<CheckInfo> checks = {
      {1, "counting", 60},       {2, "catalog", 1},     {3, "rectification", 60},
      {4, "dimension", 300},     {5, "lehrer-solomon", 600}, {6, "betti", 60},
      {7, "closedness", 600},    {8, "pullback", 600},  {9, "nbc", 600},
      {10, "characters", 600},   {11, "generators", 60}, {12, "relations", 600},
  };
  return checks;
}

CheckReport run_check(int id) {
  const auto& checks = acceptance_checks();
  if (id < 1 || id > static_cast<int>(checks.size())) {
    throw std::invalid_argument("unknown check " + std::to_string(id));
  }
  const CheckInfo& info = checks[id - 1];
  Outcome outcome;
  auto start = std::chrono::steady_clock::now();
  try {
    check_functions()[id - 1](outcome);
  } catch (const std::exception& e) {
    outcome.fail(std::string("exception: ") + e.what());
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CheckReport report{info.id, info.name, outcome.pass, outcome.detail.str(), seconds,
                     info.limit_seconds};
  if (seconds > info.limit_seconds) {
    report.pass = false;
    report.detail += "; exceeded time limit";
  }
  return report;
}

CheckReport run_check(const std::string& name) {
  for (const auto& c : acceptance_checks()) {
    if (name == c.name) return run_check(c.id);
  }
  throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace osforest
