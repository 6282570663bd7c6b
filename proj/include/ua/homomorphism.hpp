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
 * Homomorphisms, subalgebras and direct products.
 */

#pragma once

#include <algorithm>
#include <deque>
#include <span>
#include <string>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/detail/tuples.hpp"

namespace ua {

inline ElementSet make_set(std::vector<Element> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

inline bool contains(const ElementSet& s, Element a) {
  return std::binary_search(s.begin(), s.end(), a);
}

inline ElementSet full_set(std::size_t n) {
  ElementSet s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i;
  return s;
}

inline ElementSet intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool is_subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// True iff map(f(a1..ak)) = f(map(a1)..map(ak)) for every symbol and tuple.
inline bool is_homomorphism(std::span<const Element> map, const FiniteAlgebra& source,
                            const FiniteAlgebra& target) {
  require_same_signature(source, target);
  if (map.size() != source.size()) {
    throw Error(Errc::SizeMismatch, "map has " + std::to_string(map.size()) +
                                        " entries, source has " + std::to_string(source.size()));
  }
  for (Element v : map) {
    if (v >= target.size()) throw Error(Errc::TableRangeError, "map value outside target");
  }
  std::vector<Element> image_args;
  for (std::size_t s = 0; s < source.signature().size(); ++s) {
    const std::size_t k = source.arity(s);
    image_args.resize(k);
    bool ok = detail::for_each_tuple(source.size(), k, [&](std::span<const Element> t) {
      for (std::size_t i = 0; i < k; ++i) image_args[i] = map[t[i]];
      return map[source.apply(s, t)] == target.apply(s, image_args);
    });
    if (!ok) return false;
  }
  return true;
}

/// A verified homomorphism, stored as its value table.
class Homomorphism {
 public:
  Homomorphism(const FiniteAlgebra& source, const FiniteAlgebra& target, std::vector<Element> map)
      : map_(std::move(map)), target_size_(target.size()) {
    if (!is_homomorphism(map_, source, target)) {
      throw Error(Errc::NotAHomomorphism,
                  "map is not a homomorphism " + source.name() + " -> " + target.name());
    }
  }

  static Homomorphism identity(const FiniteAlgebra& alg) {
    return Homomorphism(alg, alg, full_set(alg.size()));
  }

  Element operator()(Element a) const { return map_[a]; }
  const std::vector<Element>& map() const noexcept { return map_; }
  std::size_t source_size() const noexcept { return map_.size(); }
  std::size_t target_size() const noexcept { return target_size_; }

  ElementSet image() const { return make_set(map_); }

  bool is_injective() const { return image().size() == map_.size(); }
  bool is_surjective() const { return image().size() == target_size_; }

  /// Meaningful for endomorphisms only: map o map == map.
  bool is_idempotent() const {
    if (target_size_ != map_.size()) return false;
    return std::all_of(map_.begin(), map_.end(), [&](Element b) { return map_[b] == b; });
  }

  bool is_constant() const {
    return std::all_of(map_.begin(), map_.end(), [&](Element b) { return b == map_[0]; });
  }

  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;
  friend bool operator<(const Homomorphism& a, const Homomorphism& b) { return a.map_ < b.map_; }

 private:
  std::vector<Element> map_;
  std::size_t target_size_ = 0;
};

inline std::string to_string(const Homomorphism& h) {
  std::string out;
  for (std::size_t i = 0; i < h.map().size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(h.map()[i]);
  }
  return out;
}

/// Least superset of `seed` closed under every operation (constants included).
inline ElementSet generated_subalgebra(const FiniteAlgebra& alg, const ElementSet& seed) {
  std::vector<char> in(alg.size(), 0);
  std::vector<Element> members;
  auto add = [&](Element a) {
    if (!in[a]) {
      in[a] = 1;
      members.push_back(a);
    }
  };
  for (Element a : seed) {
    if (a >= alg.size()) throw Error(Errc::TableRangeError, "seed element outside carrier");
    add(a);
  }
  for (std::size_t s = 0; s < alg.signature().size(); ++s) {
    if (alg.arity(s) == 0) add(alg.constant(s));
  }
  // Fixpoint: re-apply every operation to tuples over the current members
  // until nothing new appears.
  std::size_t before = 0;
  while (before != members.size()) {
    before = members.size();
    for (std::size_t s = 0; s < alg.signature().size(); ++s) {
      const std::size_t k = alg.arity(s);
      if (k == 0) continue;
      std::vector<Element> snapshot = members;
      std::vector<Element> args(k);
      detail::for_each_tuple(snapshot.size(), k, [&](std::span<const Element> t) {
        for (std::size_t i = 0; i < k; ++i) args[i] = snapshot[t[i]];
        add(alg.apply(s, args));
      });
    }
  }
  return make_set(std::move(members));
}

/// True iff `set` is closed under all operations. The empty set counts as a
/// subalgebra exactly when the signature has no constants.
inline bool is_subalgebra(const FiniteAlgebra& alg, const ElementSet& set) {
  for (std::size_t s = 0; s < alg.signature().size(); ++s) {
    const std::size_t k = alg.arity(s);
    std::vector<Element> args(k);
    bool ok = detail::for_each_tuple(set.size(), k, [&](std::span<const Element> t) {
      for (std::size_t i = 0; i < k; ++i) args[i] = set[t[i]];
      return contains(set, alg.apply(s, args));
    });
    if (!ok) return false;
  }
  return true;
}

/// All subalgebras, found by exhaustive subset scan (n <= 20).
inline std::vector<ElementSet> all_subalgebras(const FiniteAlgebra& alg, bool include_empty = false) {
  if (alg.size() > 20) throw Error(Errc::SizeLimitExceeded, "subset scan above 20 elements");
  std::vector<ElementSet> out;
  for (std::size_t mask = include_empty ? 0 : 1; mask < (std::size_t{1} << alg.size()); ++mask) {
    ElementSet s;
    for (std::size_t a = 0; a < alg.size(); ++a) {
      if (mask >> a & 1) s.push_back(a);
    }
    if (is_subalgebra(alg, s)) out.push_back(std::move(s));
  }
  return out;
}

/// The subalgebra on `set` as a standalone algebra; element i of the result
/// is set[i].
inline FiniteAlgebra subalgebra(const FiniteAlgebra& alg, const ElementSet& set, std::string name = {}) {
  if (set.empty() || !is_subalgebra(alg, set)) {
    throw Error(Errc::NotASubalgebra, "subset of '" + alg.name() + "' is not a subalgebra");
  }
  std::vector<Element> index(alg.size(), 0);
  for (std::size_t i = 0; i < set.size(); ++i) index[set[i]] = i;
  std::vector<std::vector<Element>> tables;
  for (std::size_t s = 0; s < alg.signature().size(); ++s) {
    const std::size_t k = alg.arity(s);
    std::vector<Element> table;
    std::vector<Element> args(k);
    detail::for_each_tuple(set.size(), k, [&](std::span<const Element> t) {
      for (std::size_t i = 0; i < k; ++i) args[i] = set[t[i]];
      table.push_back(index[alg.apply(s, args)]);
    });
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(name.empty() ? alg.name() + "_sub" : std::move(name), alg.signature(),
                       set.size(), std::move(tables));
}

/// Direct product; the pair (a,b) is encoded as a*|B| + b.
inline FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b, std::string name = {}) {
  require_same_signature(a, b);
  const std::size_t n = a.size() * b.size();
  std::vector<std::vector<Element>> tables;
  for (std::size_t s = 0; s < a.signature().size(); ++s) {
    const std::size_t k = a.arity(s);
    std::vector<Element> table;
    table.reserve(detail::checked_power(n, k));
    std::vector<Element> left(k), right(k);
    detail::for_each_tuple(n, k, [&](std::span<const Element> t) {
      for (std::size_t i = 0; i < k; ++i) {
        left[i] = t[i] / b.size();
        right[i] = t[i] % b.size();
      }
      table.push_back(a.apply(s, left) * b.size() + b.apply(s, right));
    });
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(name.empty() ? a.name() + "x" + b.name() : std::move(name), a.signature(),
                       n, std::move(tables));
}

/// Relabels `alg` along the bijection `perm` (old element a becomes perm[a]).
inline FiniteAlgebra relabel(const FiniteAlgebra& alg, std::span<const Element> perm) {
  const std::size_t n = alg.size();
  std::vector<Element> inverse(n);
  for (std::size_t a = 0; a < n; ++a) inverse[perm[a]] = a;
  std::vector<std::vector<Element>> tables;
  for (std::size_t s = 0; s < alg.signature().size(); ++s) {
    const std::size_t k = alg.arity(s);
    std::vector<Element> table;
    std::vector<Element> args(k);
    detail::for_each_tuple(n, k, [&](std::span<const Element> t) {
      for (std::size_t i = 0; i < k; ++i) args[i] = inverse[t[i]];
      table.push_back(perm[alg.apply(s, args)]);
    });
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(alg.name(), alg.signature(), n, std::move(tables));
}

/// Keeps only the listed operations (a reduct), in the given order.
inline FiniteAlgebra reduct(const FiniteAlgebra& alg, const Signature& keep, std::string name = {}) {
  std::vector<std::vector<Element>> tables;
  for (const auto& sym : keep) tables.push_back(alg.table(alg.symbol(sym.name, sym.arity)));
  return FiniteAlgebra(name.empty() ? alg.name() : std::move(name), keep, alg.size(),
                       std::move(tables));
}

}  // namespace ua
