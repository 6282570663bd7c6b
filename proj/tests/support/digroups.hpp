/*
 *   Copyright 2026 The ua Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Small digroups by enumeration: pairs of group tables on {0..n-1} sharing
// the identity 0, one per simultaneous isomorphism class.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "support/oracles.hpp"
#include "ua/catalog.hpp"
#include "ua/digroup.hpp"

namespace oracle {

using Table = std::vector<Element>;

inline std::vector<FiniteAlgebra> groups_of_order(std::size_t n) {
  using namespace ua::catalog;
  switch (n) {
    case 4:
      return {cyclic(4), klein()};
    case 6:
      return {cyclic(6), symmetric3()};
    case 8:
      return {cyclic(8), product(cyclic(4), cyclic(2)), product(klein(), cyclic(2)), dihedral(4), quaternion()};
    default:
      return {cyclic(n)};
  }
}

inline std::vector<Map> perms_fixing_zero(std::size_t n) {
  std::vector<Map> out;
  Map p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  do {
    out.push_back(p);
  } while (n > 1 && std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

inline Table permute(const Table& t, const Map& p, std::size_t n) {
  Table out(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) out[p[a] * n + p[b]] = p[t[a * n + b]];
  }
  return out;
}

/// Every group table on {0..n-1} with identity 0.
inline std::vector<Table> group_tables(std::size_t n) {
  std::set<Table> out;
  for (const auto& g : groups_of_order(n)) {
    const auto m = g.symbol("m", 2);
    const Element e = g.constant(g.symbol("e", 0));
    // move the identity to 0
    Map base(n);
    for (std::size_t i = 0; i < n; ++i) base[i] = i;
    std::swap(base[0], base[e]);
    Table t = permute(g.table(m), base, n);
    for (const auto& p : perms_fixing_zero(n)) out.insert(permute(t, p, n));
  }
  return {out.begin(), out.end()};
}

inline std::vector<FiniteAlgebra> digroups(std::size_t n) {
  auto tables = group_tables(n);
  auto perms = perms_fixing_zero(n);
  std::set<std::pair<Table, Table>> seen;
  std::vector<FiniteAlgebra> out;
  for (const auto& s : tables) {
    for (const auto& c : tables) {
      if (seen.count({s, c})) continue;
      for (const auto& p : perms) seen.insert({permute(s, p, n), permute(c, p, n)});
      out.push_back(ua::make_digroup("d" + std::to_string(n) + "_" + std::to_string(out.size()), n, s, c));
    }
  }
  return out;
}

/// Ideal by the coset definition: normal in both groups and a*I = a o I.
inline bool is_ideal(const FiniteAlgebra& d, const std::vector<bool>& in) {
  const auto s = d.symbol("star", 2), c = d.symbol("circ", 2);
  const std::size_t n = d.size();
  if (!in[0]) return false;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (in[a] && in[b] && (!in[d.binary(s, a, b)] || !in[d.binary(c, a, b)])) return false;
    }
  }
  for (Element a = 0; a < n; ++a) {
    std::set<Element> ls, lc, rs, rc;
    for (Element i = 0; i < n; ++i) {
      if (!in[i]) continue;
      ls.insert(d.binary(s, a, i));
      rs.insert(d.binary(s, i, a));
      lc.insert(d.binary(c, a, i));
      rc.insert(d.binary(c, i, a));
    }
    if (ls != rs || lc != rc || ls != lc) return false;
  }
  return true;
}

inline std::vector<std::vector<Element>> ideals(const FiniteAlgebra& d) {
  std::vector<std::vector<Element>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d.size()); ++mask) {
    std::vector<bool> in(d.size());
    std::vector<Element> s;
    for (Element a = 0; a < d.size(); ++a) {
      in[a] = mask >> a & 1;
      if (in[a]) s.push_back(a);
    }
    if (is_ideal(d, in)) out.push_back(s);
  }
  return out;
}

}  // namespace oracle
