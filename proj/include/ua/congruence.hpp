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

/**
 * @file
 *
 * Congruences: testing, generation from pairs, full enumeration of the
 * congruence lattice, kernels, and quotient algebras.
 */

#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/homomorphism.hpp"
#include "ua/partition.hpp"

namespace ua {

/// Default cap for exhaustive enumerations; overridable per call.
inline constexpr std::size_t kDefaultEnumerationCap = 8;

inline void require_size(const FiniteAlgebra& alg, const Partition& p) {
  if (p.size() != alg.size()) {
    throw Error(Errc::SizeMismatch, "partition on " + std::to_string(p.size()) +
                                        " elements, algebra has " + std::to_string(alg.size()));
  }
}

namespace detail {

/// Calls fn(f(..a..), f(..b..)) for every basic translation of the pair (a,b):
/// every symbol, argument position and choice of the remaining arguments.
template <typename Fn>
void for_each_translation(const FiniteAlgebra& alg, Element a, Element b, Fn&& fn) {
  std::vector<Element> args;
  for (std::size_t s = 0; s < alg.signature().size(); ++s) {
    const std::size_t k = alg.arity(s);
    if (k == 0) continue;
    args.resize(k);
    for (std::size_t pos = 0; pos < k; ++pos) {
      for_each_tuple(alg.size(), k - 1, [&](std::span<const Element> rest) {
        for (std::size_t i = 0, j = 0; i < k; ++i) {
          if (i != pos) args[i] = rest[j++];
        }
        args[pos] = a;
        Element x = alg.apply(s, args);
        args[pos] = b;
        Element y = alg.apply(s, args);
        fn(x, y);
      });
    }
  }
}

}  // namespace detail

/// Exhaustive compatibility test. Changing one argument at a time suffices
/// because the relation is transitive.
inline bool is_congruence(const FiniteAlgebra& alg, const Partition& p) {
  require_size(alg, p);
  for (Element a = 0; a < alg.size(); ++a) {
    Element r = p.rep(a);
    if (r == a) continue;
    bool ok = true;
    detail::for_each_translation(alg, r, a, [&](Element x, Element y) {
      if (!p.same(x, y)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

/// Least congruence containing `pairs`: union-find merging interleaved with
/// one-step propagation through every operation until no class changes.
inline Partition congruence_generated(const FiniteAlgebra& alg,
                                      const std::vector<std::pair<Element, Element>>& pairs) {
  detail::UnionFind uf(alg.size());
  std::vector<std::pair<Element, Element>> work;
  for (auto [a, b] : pairs) {
    if (a >= alg.size() || b >= alg.size()) {
      throw Error(Errc::TableRangeError, "pair element outside carrier");
    }
    if (uf.unite(a, b)) work.emplace_back(a, b);
  }
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    detail::for_each_translation(alg, a, b, [&](Element x, Element y) {
      if (uf.unite(x, y)) work.emplace_back(x, y);
    });
  }
  return Partition::from_union_find(uf);
}

/// Least congruence containing `seed`.
inline Partition congruence_closure(const FiniteAlgebra& alg, const Partition& seed) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < seed.size(); ++a) {
    if (seed.rep(a) != a) pairs.emplace_back(seed.rep(a), a);
  }
  return congruence_generated(alg, pairs);
}

/// Every congruence, as the join-closure of the principal congruences.
/// Sorted canonically: identity first, total relation last.
inline std::vector<Partition> all_congruences(const FiniteAlgebra& alg,
                                              std::size_t size_cap = kDefaultEnumerationCap) {
  if (alg.size() > size_cap) {
    throw Error(Errc::SizeLimitExceeded, "congruence enumeration capped at " +
                                             std::to_string(size_cap) + " elements, '" +
                                             alg.name() + "' has " + std::to_string(alg.size()));
  }
  std::set<std::vector<Element>> seen;
  std::vector<Partition> found;
  auto add = [&](Partition p) {
    if (seen.insert(p.reps()).second) found.push_back(std::move(p));
  };
  add(Partition::identity(alg.size()));
  std::vector<Partition> principal;
  for (Element a = 0; a < alg.size(); ++a) {
    for (Element b = a + 1; b < alg.size(); ++b) {
      Partition p = congruence_generated(alg, {{a, b}});
      if (seen.insert(p.reps()).second) {
        found.push_back(p);
        principal.push_back(std::move(p));
      }
    }
  }
  // Every congruence is a join of principal ones, so joining the found set
  // with principal congruences until stable reaches all of them.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& pc : principal) {
      Partition j = found[i].join(pc);
      if (!seen.count(j.reps())) add(std::move(j));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

inline Partition kernel(const Homomorphism& h) { return Partition::from_labels(h.map()); }

inline Partition kernel(std::span<const Element> map) {
  return Partition::from_labels(std::vector<Element>(map.begin(), map.end()));
}

struct Quotient {
  FiniteAlgebra algebra;
  Homomorphism projection;
};

/// Blocks of `p` in order of least element become 0, 1, ...
inline Quotient quotient(const FiniteAlgebra& alg, const Partition& p) {
  require_size(alg, p);
  if (!is_congruence(alg, p)) {
    throw Error(Errc::NotACongruence, to_string(p) + " is not a congruence of '" + alg.name() + "'");
  }
  auto blocks = p.blocks();
  auto index = p.block_indices();
  std::vector<std::vector<Element>> tables;
  for (std::size_t s = 0; s < alg.signature().size(); ++s) {
    const std::size_t k = alg.arity(s);
    std::vector<Element> table;
    std::vector<Element> args(k);
    detail::for_each_tuple(blocks.size(), k, [&](std::span<const Element> t) {
      for (std::size_t i = 0; i < k; ++i) args[i] = blocks[t[i]][0];
      table.push_back(index[alg.apply(s, args)]);
    });
    tables.push_back(std::move(table));
  }
  FiniteAlgebra q(alg.name() + "_quot", alg.signature(), blocks.size(), std::move(tables));
  Homomorphism proj(alg, q, index);
  return {std::move(q), std::move(proj)};
}

}  // namespace ua
