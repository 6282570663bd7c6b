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
 * Isomorphism search between small algebras and homomorphism enumeration.
 */

#pragma once

#include <optional>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/detail/hom_search.hpp"
#include "ua/homomorphism.hpp"

namespace ua {

inline constexpr std::size_t kDefaultIsomorphismCap = 12;

namespace detail {

/// Per-element invariants preserved by every isomorphism.
inline std::vector<std::vector<std::size_t>> element_invariants(const FiniteAlgebra& alg) {
  std::vector<std::vector<std::size_t>> inv(alg.size());
  for (Element a = 0; a < alg.size(); ++a) {
    inv[a].push_back(generated_subalgebra(alg, {a}).size());
    for (std::size_t s = 0; s < alg.signature().size(); ++s) {
      std::vector<Element> diag(alg.arity(s), a);
      inv[a].push_back(alg.apply(s, diag) == a);
    }
  }
  return inv;
}

}  // namespace detail

/// Lexicographically least isomorphism A -> B, or nullopt.
inline std::optional<std::vector<Element>> find_isomorphism(const FiniteAlgebra& a,
                                                            const FiniteAlgebra& b,
                                                            std::size_t size_cap = kDefaultIsomorphismCap) {
  require_same_signature(a, b);
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() > size_cap) {
    throw Error(Errc::SizeLimitExceeded, "isomorphism search capped at " + std::to_string(size_cap) +
                                             " elements, got " + std::to_string(a.size()));
  }
  auto ia = detail::element_invariants(a);
  auto ib = detail::element_invariants(b);
  auto sorted_a = ia, sorted_b = ib;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;

  detail::HomSearchOptions opts;
  opts.injective = true;
  opts.allowed = [&](Element x, Element v) { return ia[x] == ib[v]; };
  std::optional<std::vector<Element>> found;
  detail::HomSearch(a, b, std::move(opts)).run([&](const std::vector<Element>& m) {
    found = m;
    return false;
  });
  return found;
}

inline bool is_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b,
                          std::size_t size_cap = kDefaultIsomorphismCap) {
  return find_isomorphism(a, b, size_cap).has_value();
}

/// True iff `map` is a bijective homomorphism.
inline bool is_isomorphism(std::span<const Element> map, const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  if (make_set(std::vector<Element>(map.begin(), map.end())).size() != b.size()) return false;
  return is_homomorphism(map, a, b);
}

/// Every homomorphism A -> B in lexicographic order.
inline std::vector<std::vector<Element>> all_homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  require_same_signature(a, b);
  std::vector<std::vector<Element>> out;
  detail::HomSearch(a, b, {}).run([&](const std::vector<Element>& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace ua
