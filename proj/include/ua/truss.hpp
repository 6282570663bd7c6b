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
 * Near-trusses: a heap t with an associative m distributing over t on the
 * left, x(t(y,z,w)) = t(xy,xz,xw), or on the right.
 */

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ua/heap.hpp"

namespace ua {

enum class TrussSide { Left, Right };

inline const Signature& truss_signature() { return variety("left_near_truss").signature; }

struct NearTrussAxioms {
  bool heap = false;
  bool semigroup = false;
  bool left = false;
  bool right = false;
  /// First (x,y,z,w) breaking the respective distributivity.
  std::optional<std::vector<Element>> left_witness;
  std::optional<std::vector<Element>> right_witness;
};

inline NearTrussAxioms near_truss_axioms(const FiniteAlgebra& X) {
  if (X.signature() != truss_signature()) {
    throw Error(Errc::SignatureMismatch, "'" + X.name() + "' does not have the signature t/3, m/2");
  }
  NearTrussAxioms r;
  const auto t = X.symbol("t", 3), m = X.symbol("m", 2);
  r.heap = satisfies(reduct(X, heap_signature()), variety("heap"));
  r.semigroup = true;
  detail::for_each_tuple(X.size(), 3, [&](std::span<const Element> v) {
    r.semigroup = X.binary(m, X.binary(m, v[0], v[1]), v[2]) == X.binary(m, v[0], X.binary(m, v[1], v[2]));
    return r.semigroup;
  });
  detail::for_each_tuple(X.size(), 4, [&](std::span<const Element> v) {
    const Element x = v[0], y = v[1], z = v[2], w = v[3];
    if (!r.left_witness &&
        X.binary(m, x, X.ternary(t, y, z, w)) != X.ternary(t, X.binary(m, x, y), X.binary(m, x, z), X.binary(m, x, w))) {
      r.left_witness = std::vector<Element>(v.begin(), v.end());
    }
    if (!r.right_witness &&
        X.binary(m, X.ternary(t, y, z, w), x) != X.ternary(t, X.binary(m, y, x), X.binary(m, z, x), X.binary(m, w, x))) {
      r.right_witness = std::vector<Element>(v.begin(), v.end());
    }
    return !(r.left_witness && r.right_witness);
  });
  r.left = !r.left_witness;
  r.right = !r.right_witness;
  return r;
}

inline bool is_near_truss(const FiniteAlgebra& X, TrussSide side) {
  if (X.signature() != truss_signature()) return false;
  auto a = near_truss_axioms(X);
  return a.heap && a.semigroup && (side == TrussSide::Left ? a.left : a.right);
}

/// Same heap, m transposed.
inline FiniteAlgebra opposite_truss(const FiniteAlgebra& X) {
  const auto t = X.symbol("t", 3), m = X.symbol("m", 2);
  const std::size_t n = X.size();
  std::vector<std::vector<Element>> tables(2);
  tables[t] = X.table(t);
  tables[m].resize(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) tables[m][a * n + b] = X.binary(m, b, a);
  }
  return FiniteAlgebra(X.name() + "_op", X.signature(), n, std::move(tables));
}

inline void require_near_truss(const FiniteAlgebra& X, TrussSide side) {
  auto a = near_truss_axioms(X);
  const char* name = side == TrussSide::Left ? "left" : "right";
  if (!a.heap) throw Error(Errc::AxiomFailure, "'" + X.name() + "' is not a heap under t");
  if (!a.semigroup) throw Error(Errc::AxiomFailure, "'" + X.name() + "' is not a semigroup under m");
  const auto& w = side == TrussSide::Left ? a.left_witness : a.right_witness;
  if (w) throw Error(Errc::AxiomFailure, "'" + X.name() + "' fails " + name + " distributivity at " + tuple_string(*w), *w);
}

/// t(x,y,z) = x - y + z with the ring multiplication.
inline FiniteAlgebra truss_from_ring(const FiniteAlgebra& R) {
  require_variety(R, variety("ring"));
  RingOps o(R);
  const std::size_t n = R.size();
  std::vector<Element> t;
  detail::for_each_tuple(n, 3, [&](std::span<const Element> v) {
    t.push_back(R.binary(o.add, R.binary(o.add, v[0], R.unary(o.neg, v[1])), v[2]));
  });
  return FiniteAlgebra(R.name() + "_truss", truss_signature(), n, {std::move(t), R.table(o.mul)});
}

struct NearTrussReport {
  /// (a) transversal, (b) idempotent endomorphism, (c) t(d,c,b) factorization,
  /// (d) Y -> X/omega isomorphism.
  std::array<bool, 4> conditions{};
  bool all() const { return conditions[0]; }
};

inline NearTrussReport near_truss_report(const FiniteAlgebra& X, const ElementSet& Y, const Partition& omega,
                                         TrussSide side = TrussSide::Left) {
  require_near_truss(X, side);
  require_size(X, omega);
  for (Element y : Y) {
    if (y >= X.size()) throw Error(Errc::TableRangeError, "element outside carrier");
  }
  if (Y.empty()) throw Error(Errc::EmptySet, "Y must be nonempty");
  if (!is_subalgebra(X, Y)) throw Error(Errc::NotASubalgebra, "Y is not closed under t and m");
  if (!is_congruence(X, omega)) throw Error(Errc::NotACongruence, to_string(omega) + " is not a congruence");

  NearTrussReport r;
  auto& c = r.conditions;
  c[0] = true;
  for (const auto& block : omega.blocks()) c[0] = c[0] && intersection(block, Y).size() == 1;

  detail::HomSearchOptions opts;
  opts.idempotent = true;
  opts.allowed = [&](Element, Element v) { return contains(Y, v); };
  detail::HomSearch(X, X, std::move(opts)).run([&](const std::vector<Element>& m) {
    c[1] = make_set(m) == Y && kernel(m) == omega;
    return !c[1];
  });

  c[2] = detail::unique_heap_factorization(X, Y, omega, true);

  Quotient q = quotient(X, omega);
  std::vector<Element> g;
  for (Element y : Y) g.push_back(q.projection(y));
  c[3] = is_isomorphism(g, subalgebra(X, Y), q.algebra);

  for (bool v : c) require_agreement(v == c[0], "near-truss decomposition conditions disagree for '" + X.name() + "'");
  return r;
}

}  // namespace ua
