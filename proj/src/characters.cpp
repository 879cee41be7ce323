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

#include "osforest/characters.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "osforest/local_system.hpp"
#include "osforest/os_algebra.hpp"

namespace osforest {

long moebius(long d) {
  if (d < 1) throw std::invalid_argument("moebius needs d >= 1");
  long result = 1;
  for (long p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    d /= p;
    if (d % p == 0) return 0;
    result = -result;
  }
  if (d > 1) result = -result;
  return result;
}

long euler_phi(long d) {
  if (d < 1) throw std::invalid_argument("euler_phi needs d >= 1");
  long result = d;
  for (long p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

namespace {

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// sum over primitive e-th roots eta of eta^power, by summation in Q(zeta_e).
Cyclotomic primitive_power_sum(long e, long power) {
  std::vector<long> counts(e, 0);
  for (long k = 0; k < e; ++k) {
    if (gcd_long(k, e) == 1) ++counts[mod_positive(k * power, e)];
  }
  return Cyclotomic::from_root_counts(static_cast<int>(e), counts);
}

Rational as_rational(const Cyclotomic& c) { return c.simplified().rational_value(); }

}  // namespace

Rational cyclic_induction_value(long n, long d) {
  if (n < 1 || d < 1 || n % d) throw std::invalid_argument("cyclic_induction_value needs d | n");
  // c^k has cycle type (d^{n/d}) exactly when gcd(k, n) = n/d, and then
  // psi_n(c^k) = exp(2 pi i k / n) is a primitive d-th root of unity.
  std::vector<long> counts(n, 0);
  for (long k = 0; k < n; ++k) {
    if (gcd_long(k, n) == n / d) ++counts[k];
  }
  return as_rational(Cyclotomic::from_root_counts(static_cast<int>(n), counts));
}

MysterySides mystery_identity_sides(long r, long m, long d) {
  if (r < 1 || m < 1 || d < 1 || (r * m) % d) {
    throw std::invalid_argument("mystery_identity_sides needs d | r m");
  }
  MysterySides out{Rational(moebius(d)), Rational(0), Rational(0)};
  Cyclotomic direct(0);
  for (long e : divisors(r)) {
    for (long f : divisors(m)) {
      if (lcm_long(e, f) != d) continue;
      long g = e / gcd_long(m, e);
      out.rhs += Rational(moebius(f) * moebius(g) * euler_phi(e)) / euler_phi(g);
      direct += primitive_power_sum(e, m) * primitive_power_sum(f, 1);
    }
  }
  out.direct = as_rational(direct);
  return out;
}

namespace {

// Beta-set recursion: remove rim hooks of the lengths in mu[idx..].
Integer mn_rec(std::vector<int> beta, const Partition& mu, int idx,
               std::map<std::pair<std::vector<int>, int>, Integer>& memo) {
  if (idx == mu.length()) return 1;
  auto key = std::make_pair(beta, idx);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int k = mu[idx];
  std::set<int> beads(beta.begin(), beta.end());
  Integer total = 0;
  for (int b : beta) {
    int target = b - k;
    if (target < 0 || beads.count(target)) continue;
    int between = 0;
    for (int x : beta) between += (x > target && x < b);
    std::vector<int> next;
    for (int x : beta) next.push_back(x == b ? target : x);
    std::sort(next.begin(), next.end(), std::greater<>());
    Integer v = mn_rec(next, mu, idx + 1, memo);
    total += between % 2 == 0 ? v : Integer(-v);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("|lambda| != |mu|");
  int len = lambda.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  std::map<std::pair<std::vector<int>, int>, Integer> memo;
  return mn_rec(beta, mu, 0, memo);
}

ClassFunction irreducible_character(const Partition& lambda) {
  return ClassFunction::from_function(1, lambda.size(), [&](const GroupElement& g) {
    return Cyclotomic(Rational(mn_character(lambda, class_label(g)[0])));
  });
}

std::map<Partition, Integer> decompose_sn(const ClassFunction& chi) {
  if (chi.r() != 1) throw std::invalid_argument("decomposition is offered for S_n only");
  std::map<Partition, Integer> out;
  for (const auto& lambda : partitions_of(chi.n())) {
    Cyclotomic m = inner_product(chi, irreducible_character(lambda));
    if (!m.simplified().is_rational()) throw std::domain_error("non-rational multiplicity");
    Rational q = m.simplified().rational_value();
    if (!is_integer(q)) throw std::domain_error("non-integral multiplicity " + to_string(q));
    if (sgn(q) != 0) out.emplace(lambda, q.get_num());
  }
  return out;
}

ClassFunction induce(const SubgroupCharacter& h, int r, int n) {
  std::map<ClassLabel, Cyclotomic> sums;
  for (const auto& [g, v] : h) {
    if (g.r() != r || g.n() != n) throw std::invalid_argument("subgroup element outside W(r, n)");
    sums[class_label(g)] += v;
  }
  ClassFunction out(r, n);
  Integer order = static_cast<long>(h.size());
  for (const auto& [label, s] : sums) {
    Rational scale(centralizer_order(r, label), order);
    scale.canonicalize();
    out.set(label, s * Cyclotomic(scale));
  }
  return out;
}

std::string SubgroupSpec::describe() const {
  auto part = [this](const std::vector<int>& blocks) {
    std::string s;
    for (int b : blocks) {
      if (!s.empty()) s += " x ";
      s += r > 1 ? "(mu_" + std::to_string(r) + " x mu_" + std::to_string(b) + ")"
                 : "mu_" + std::to_string(b);
    }
    std::map<int, int> mult;
    for (int b : blocks) ++mult[b];
    std::string perms;
    for (const auto& [size, m] : mult) {
      if (m < 2) continue;
      if (!perms.empty()) perms += " x ";
      perms += "S_" + std::to_string(m);
    }
    return perms.empty() ? s : "(" + s + ") x| (" + perms + ")";
  };
  std::string a = part(open_blocks), b = part(closed_blocks);
  std::string sub = a.empty() ? b : (b.empty() ? a : "(" + a + ") x (" + b + ")");
  return "Ind_{" + sub + "}^{" + (r > 1 ? "W(" + std::to_string(r) + "," : "S_(") +
         std::to_string(n) + ")}(eps psi)";
}

namespace {

// All permutations of {0..count-1} with their signs.
std::vector<std::pair<std::vector<int>, int>> signed_permutations(int count) {
  std::vector<std::pair<std::vector<int>, int>> out;
  for (auto& p : all_permutations(count)) {
    int inv = 0;
    for (int i = 0; i < count; ++i) {
      for (int j = i + 1; j < count; ++j) inv += p[i] > p[j];
    }
    out.emplace_back(std::move(p), inv % 2 == 0 ? 1 : -1);
  }
  return out;
}

}  // namespace

SubgroupCharacter subgroup_character(const SubgroupSpec& spec) {
  struct Block {
    int size, start;
    bool open;
  };
  std::vector<Block> blocks;
  int pos = 0;
  for (int b : spec.open_blocks) {
    blocks.push_back({b, pos, true});
    pos += b;
  }
  for (int b : spec.closed_blocks) {
    blocks.push_back({b, pos, false});
    pos += b;
  }
  if (pos != spec.n) throw std::invalid_argument("block sizes do not sum to n");
  int nb = static_cast<int>(blocks.size());

  // Groups of interchangeable blocks.
  std::vector<std::vector<int>> groups;
  {
    std::map<std::pair<bool, int>, std::vector<int>> by_kind;
    for (int b = 0; b < nb; ++b) by_kind[{blocks[b].open, blocks[b].size}].push_back(b);
    for (auto& [kind, members] : by_kind) groups.push_back(members);
  }
  // Block permutations as products over groups, with the open-block sign.
  std::vector<std::pair<std::vector<int>, int>> block_perms{{std::vector<int>(nb), 1}};
  for (int b = 0; b < nb; ++b) block_perms[0].first[b] = b;
  for (const auto& members : groups) {
    std::vector<std::pair<std::vector<int>, int>> next;
    bool open = blocks[members[0]].open;
    for (const auto& [sigma, sign] : block_perms) {
      for (const auto& [p, s] : signed_permutations(static_cast<int>(members.size()))) {
        std::vector<int> tau = sigma;
        for (std::size_t x = 0; x < members.size(); ++x) tau[members[x]] = members[p[x]];
        next.emplace_back(std::move(tau), open ? sign * s : sign);
      }
    }
    block_perms = std::move(next);
  }

  int r = spec.r, n = spec.n;
  std::vector<int> zero(n, 0);
  SubgroupCharacter out;
  for (const auto& [sigma, sign] : block_perms) {
    std::vector<int> p(n);
    for (int b = 0; b < nb; ++b) {
      for (int t = 0; t < blocks[b].size; ++t) p[blocks[b].start + t] = blocks[sigma[b]].start + t;
    }
    GroupElement perm_part(r, zero, p);
    // Odometer over (diagonal exponent, cycle exponent) per block.
    std::vector<int> c(nb, 0), k(nb, 0);
    while (true) {
      std::vector<int> zeta(n), q(n);
      RootOfUnity psi;
      for (int b = 0; b < nb; ++b) {
        const Block& bl = blocks[b];
        for (int t = 0; t < bl.size; ++t) {
          zeta[bl.start + t] = c[b];
          q[bl.start + t] = bl.start + (t + k[b]) % bl.size;
        }
        psi = psi * RootOfUnity(k[b], bl.size);
      }
      GroupElement g = GroupElement(r, zeta, q) * perm_part;
      out.emplace_back(g, Cyclotomic::root(psi) * Cyclotomic(static_cast<long>(sign)));
      int b = 0;
      for (; b < nb; ++b) {
        if (++k[b] < blocks[b].size) break;
        k[b] = 0;
        if (++c[b] < r) break;
        c[b] = 0;
      }
      if (b == nb) break;
    }
  }
  return out;
}

ClassFunction induced_character(const SubgroupSpec& spec, long max_order) {
  if (wreath_order(spec.r, spec.n) > max_order) {
    throw SizeGuardError("ambient group exceeds the order guard");
  }
  return induce(subgroup_character(spec), spec.r, spec.n);
}

ClassFunction module_character(int r, int n, long max_order) {
  if (wreath_order(r, n) > max_order) throw SizeGuardError("ambient group exceeds the order guard");
  Rectifier cache;
  std::vector<DecoratedForest> basis = enumerate_trees(r, n, true);
  return ClassFunction::from_function(r, n, [&](const GroupElement& g) {
    long trace = 0;
    for (const auto& t : basis) {
      const auto& image = cache.rectify(act_forest(g, t));
      auto it = image.find(t);
      if (it != image.end()) trace += it->second;
    }
    return Cyclotomic(trace);
  });
}

GroupElement embed_wreath(const GroupElement& g) {
  int r = g.r(), m = g.n(), n = r * m;
  std::vector<int> zero(n, 0), p(n);
  for (int t = 0; t < m; ++t) {
    int wt = g.perm(t);
    for (int u = 0; u < r; ++u) p[t * r + u] = wt * r + (u + g.zeta(wt)) % r;
  }
  return GroupElement(1, zero, p);
}

ClassFunction bigindcor_rhs(int r, int n, int k, int l) {
  ClassFunction out(r, n);
  int open = n - k - l;
  if (open < 0 || k < 0 || l < 0) return out;
  for (int m1 = 0; m1 <= n; ++m1) {
    for (const auto& p1 : partitions_with_length(m1, open)) {
      for (const auto& p2 : partitions_with_length(n - m1, l)) {
        SubgroupSpec spec{r, n, {p1.parts().begin(), p1.parts().end()},
                          {p2.parts().begin(), p2.parts().end()}};
        out += induced_character(spec);
      }
    }
  }
  return out;
}

ClassFunction otherbigindcor_rhs(int r, int n, int k, int l) {
  if (n % r) throw std::invalid_argument("needs r | n");
  ClassFunction out(1, n);
  int open = n - k - l;
  if (open < 0 || k < 0 || l < 0) return out;
  int m = n / r;
  for (int m1 = 0; m1 <= m; ++m1) {
    for (const auto& p1 : partitions_with_length(m1, open)) {
      for (const auto& p2 : partitions_with_length(m - m1, l)) {
        SubgroupSpec spec{1, n, {}, {}};
        for (int x : p1.parts()) spec.open_blocks.push_back(r * x);
        for (int x : p2.parts()) spec.closed_blocks.push_back(r * x);
        out += induced_character(spec);
      }
    }
  }
  return out;
}

ClassFunction mysterycor_rhs(int r, int n, int k, int l) {
  if (n % r) throw std::invalid_argument("needs r | n");
  int m = n / r;
  int kk = k - n + m;
  if (kk < 0 || l < 0 || kk + l > m) return ClassFunction(1, n);
  ClassFunction inner = os_character(r, m, kk, l) * ClassFunction::linear(r, m, LinearCharacter::kDet);
  SubgroupCharacter h;
  for (const auto& g : enumerate_group(r, m)) h.emplace_back(embed_wreath(g), inner(g));
  return induce(h, 1, n);
}

ClassFunction mysterythm_middle(int r, int m) {
  int n = r * m;
  std::vector<int> zero(m, 0), ones(m, 1), cycle(m), id(m);
  for (int t = 0; t < m; ++t) {
    cycle[t] = (t + 1) % m;
    id[t] = t;
  }
  GroupElement diag(r, ones, id), shift(r, zero, cycle);
  SubgroupCharacter h;
  GroupElement x = GroupElement::identity(r, m);
  for (int a = 0; a < r; ++a) {
    GroupElement y = x;
    for (int b = 0; b < m; ++b) {
      RootOfUnity v = RootOfUnity(static_cast<long>(a) * m, r) * RootOfUnity(b, m);
      h.emplace_back(embed_wreath(y), Cyclotomic::root(v));
      y = y * shift;
    }
    x = x * diag;
  }
  return induce(h, 1, n);
}

ClassFunction mysterythm_right(int r, int m) {
  ClassFunction inner =
      module_character(r, m) * ClassFunction::linear(r, m, LinearCharacter::kProd);
  SubgroupCharacter h;
  for (const auto& g : enumerate_group(r, m)) h.emplace_back(embed_wreath(g), inner(g));
  return induce(h, 1, r * m);
}

bool verify_corollary(CorollaryCase which, const CorollaryArgs& a, long max_order) {
  auto guard = [max_order](int r, int n) {
    if (wreath_order(r, n) > max_order) throw SizeGuardError("group exceeds the order guard");
  };
  switch (which) {
    case CorollaryCase::kBigInd: {
      guard(a.r, a.n);
      ClassFunction lhs = ClassFunction::linear(a.r, a.n, LinearCharacter::kSign) *
                          os_character(a.r, a.n, a.k, a.l, max_order);
      return lhs == bigindcor_rhs(a.r, a.n, a.k, a.l);
    }
    case CorollaryCase::kOtherBigInd:
    case CorollaryCase::kMystery: {
      guard(1, a.n);
      if (a.n % a.r || gcd_long(a.s, a.r) != 1) {
        throw std::invalid_argument("needs r | n and gcd(s, r) = 1");
      }
      std::vector<Rational> w(a.n, make_rational(a.s, a.r));
      ClassFunction lhs = ClassFunction::linear(1, a.n, LinearCharacter::kSign) *
                          isotypic_character(w, a.k, a.l);
      ClassFunction rhs = which == CorollaryCase::kMystery ? mysterycor_rhs(a.r, a.n, a.k, a.l)
                                                           : otherbigindcor_rhs(a.r, a.n, a.k, a.l);
      return lhs == rhs;
    }
    case CorollaryCase::kComb:
      guard(a.r, a.n);
      return module_character(a.r, a.n) == induced_character({a.r, a.n, {a.n}, {}});
    case CorollaryCase::kLehrerSolomon:
      guard(1, a.n);
      return module_character(1, a.n) == induced_character({1, a.n, {a.n}, {}});
    case CorollaryCase::kMysteryThm: {
      long n = static_cast<long>(a.r) * a.m;
      for (long d : divisors(n)) {
        MysterySides s = mystery_identity_sides(a.r, a.m, d);
        if (s.lhs != s.rhs || s.lhs != s.direct) return false;
      }
      // The full character identity where the symmetric group is small.
      if (n <= kMaxVertices && wreath_order(1, static_cast<int>(n)) <= max_order) {
        ClassFunction left = induced_character({1, static_cast<int>(n), {static_cast<int>(n)}, {}});
        if (!(left == mysterythm_middle(a.r, a.m))) return false;
        if (!(left == mysterythm_right(a.r, a.m))) return false;
      }
      return true;
    }
  }
  throw std::logic_error("unknown corollary case");
}

}  // namespace osforest
