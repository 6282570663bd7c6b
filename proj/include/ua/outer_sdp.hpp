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
 * Outer semidirect products. A base algebra B, a pointed set (A_b, a_b) for
 * every b, and for every symbol f and base tuple (b1..bk) a pointed map
 * A_b1 x .. x A_bk -> A_f(b1..bk) define an algebra on the disjoint union
 * of the fibers.
 */

#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ua/inner_sdp.hpp"
#include "ua/isomorphism.hpp"
#include "ua/variety.hpp"

namespace ua {

struct Fiber {
  std::size_t size = 1;
  Element basepoint = 0;
  friend bool operator==(const Fiber&, const Fiber&) = default;
};

struct PointedFamily {
  FiniteAlgebra base;
  std::vector<Fiber> fibers;

  static PointedFamily constant(FiniteAlgebra base, std::size_t size, Element basepoint) {
    std::vector<Fiber> f(base.size(), Fiber{size, basepoint});
    return {std::move(base), std::move(f)};
  }

  void validate() const {
    if (fibers.size() != base.size()) {
      throw Error(Errc::ShapeMismatch, "family lists " + std::to_string(fibers.size()) +
                                           " fibers for a base of size " + std::to_string(base.size()));
    }
    for (std::size_t b = 0; b < fibers.size(); ++b) {
      if (fibers[b].size == 0 || fibers[b].basepoint >= fibers[b].size) {
        throw Error(Errc::ShapeMismatch, "fiber " + std::to_string(b) + " is empty or its basepoint is outside it");
      }
    }
  }

  std::vector<std::size_t> radix(std::span<const Element> base_tuple) const {
    std::vector<std::size_t> r(base_tuple.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fibers[base_tuple[i]].size;
    return r;
  }
};

/// tables[s][j] is the map for symbol s at the j-th base tuple (mixed-radix
/// over the base); it is a flat table over the product of the fibers, with
/// values local indices in the fiber of f(b1..bk).
struct ActionFamily {
  std::vector<std::vector<std::vector<Element>>> tables;

  const std::vector<Element>& at(std::size_t s, std::span<const Element> base_tuple, std::size_t base_size) const {
    std::size_t j = 0;
    for (Element b : base_tuple) j = j * base_size + b;
    return tables[s][j];
  }
  friend bool operator==(const ActionFamily&, const ActionFamily&) = default;
};

/// Fills every action table from `fn(symbol, base tuple, fiber tuple)`.
inline ActionFamily make_action_family(
    const PointedFamily& fam,
    const std::function<Element(std::size_t, std::span<const Element>, std::span<const Element>)>& fn) {
  fam.validate();
  const auto& B = fam.base;
  ActionFamily act;
  for (std::size_t s = 0; s < B.signature().size(); ++s) {
    const std::size_t k = B.arity(s);
    std::vector<std::vector<Element>> per_tuple;
    detail::for_each_tuple(B.size(), k, [&](std::span<const Element> bt) {
      std::vector<Element> table;
      auto radix = fam.radix(bt);
      detail::for_each_mixed_tuple(radix, [&](std::span<const Element> xt) { table.push_back(fn(s, bt, xt)); });
      per_tuple.push_back(std::move(table));
    });
    act.tables.push_back(std::move(per_tuple));
  }
  return act;
}

struct OuterProduct {
  FiniteAlgebra algebra;
  PointedFamily family;
  ActionFamily actions;
  /// Offset of each fiber in the union; element offset[b] + x is (x, b).
  std::vector<std::size_t> offset;
  /// element -> (local index, base element)
  std::vector<std::pair<Element, Element>> labeling;

  Element encode(Element local, Element b) const { return offset[b] + local; }
  const FiniteAlgebra& base() const { return family.base; }
};

inline void validate_actions(const PointedFamily& fam, const ActionFamily& act) {
  fam.validate();
  const auto& B = fam.base;
  if (act.tables.size() != B.signature().size()) throw Error(Errc::ShapeMismatch, "one action list per symbol expected");
  for (std::size_t s = 0; s < B.signature().size(); ++s) {
    const std::size_t k = B.arity(s);
    const auto& name = B.signature()[s].name;
    if (act.tables[s].size() != detail::checked_power(B.size(), k)) {
      throw Error(Errc::ShapeMismatch, "symbol " + name + " needs one table per base tuple");
    }
    std::size_t j = 0;
    detail::for_each_tuple(B.size(), k, [&](std::span<const Element> bt) {
      const auto& table = act.tables[s][j++];
      auto radix = fam.radix(bt);
      Element fb = B.apply(s, bt);
      std::vector<Element> bt_vec(bt.begin(), bt.end());
      if (table.size() != detail::product_of(radix)) {
        throw Error(Errc::ShapeMismatch, "table of " + name + " at " + tuple_string(bt_vec) + " has wrong length");
      }
      for (Element v : table) {
        if (v >= fam.fibers[fb].size) {
          throw Error(Errc::ShapeMismatch, "table of " + name + " at " + tuple_string(bt_vec) +
                                               " leaves the fiber of " + std::to_string(fb));
        }
      }
      std::vector<Element> bases(k);
      for (std::size_t i = 0; i < k; ++i) bases[i] = fam.fibers[bt[i]].basepoint;
      if (table[detail::mixed_index(bases, radix)] != fam.fibers[fb].basepoint) {
        throw Error(Errc::PointednessViolation,
                    "map of " + name + " at " + tuple_string(bt_vec) + " does not send basepoints to the basepoint",
                    bt_vec);
      }
    });
  }
}

/// Builds the union algebra. With a variety, its identities are checked and
/// a failure is reported as IdentityFailure carrying the witness.
inline OuterProduct build_outer_product(const PointedFamily& fam, const ActionFamily& act,
                                        const VarietySpec* v = nullptr) {
  validate_actions(fam, act);
  const auto& B = fam.base;
  if (v) require_variety(B, *v);

  OuterProduct out{FiniteAlgebra{}, fam, act, {}, {}};
  std::size_t n = 0;
  for (std::size_t b = 0; b < B.size(); ++b) {
    out.offset.push_back(n);
    for (std::size_t x = 0; x < fam.fibers[b].size; ++x) out.labeling.emplace_back(x, b);
    n += fam.fibers[b].size;
  }

  std::vector<std::vector<Element>> tables;
  for (std::size_t s = 0; s < B.signature().size(); ++s) {
    const std::size_t k = B.arity(s);
    std::vector<Element> table;
    table.reserve(detail::checked_power(n, k));
    std::vector<Element> bt(k), xt(k);
    detail::for_each_tuple(n, k, [&](std::span<const Element> t) {
      for (std::size_t i = 0; i < k; ++i) {
        xt[i] = out.labeling[t[i]].first;
        bt[i] = out.labeling[t[i]].second;
      }
      Element fb = B.apply(s, bt);
      const auto& map = act.at(s, bt, B.size());
      table.push_back(out.offset[fb] + map[detail::mixed_index(xt, fam.radix(bt))]);
    });
    tables.push_back(std::move(table));
  }
  out.algebra = FiniteAlgebra(B.name() + "_sdp", B.signature(), n, std::move(tables));
  if (v) require_variety(out.algebra, *v);
  return out;
}

inline OuterProduct build_outer_product(const PointedFamily& fam, const ActionFamily& act, const VarietySpec& v) {
  return build_outer_product(fam, act, &v);
}

struct InnerToOuter {
  PointedFamily family;
  ActionFamily actions;
  OuterProduct product;
  /// a -> encoded (position of a in its class, its basepoint)
  std::vector<Element> iso;
};

/// Fibers are the omega-classes, pointed at their B-element; actions are
/// the restrictions of the operations of A. Base element i is B[i].
inline InnerToOuter inner_to_outer(const InnerDecomposition& dec) {
  const auto& A = dec.algebra;
  FiniteAlgebra base = subalgebra(A, dec.B, A.name() + "_base");
  std::vector<const ElementSet*> block(dec.B.size());
  std::vector<Element> local(A.size()), base_of(A.size());
  for (std::size_t i = 0; i < dec.B.size(); ++i) {
    const auto& pb = dec.block_of_basepoint(dec.B[i]);
    block[i] = &pb.block;
    for (std::size_t x = 0; x < pb.block.size(); ++x) {
      local[pb.block[x]] = x;
      base_of[pb.block[x]] = i;
    }
  }
  PointedFamily fam{base, {}};
  for (std::size_t i = 0; i < dec.B.size(); ++i) {
    fam.fibers.push_back({block[i]->size(), local[dec.B[i]]});
  }
  std::vector<Element> args;
  auto act = make_action_family(fam, [&](std::size_t s, std::span<const Element> bt, std::span<const Element> xt) {
    args.resize(bt.size());
    for (std::size_t i = 0; i < bt.size(); ++i) args[i] = (*block[bt[i]])[xt[i]];
    return local[A.apply(s, args)];
  });
  OuterProduct prod = build_outer_product(fam, act);
  std::vector<Element> iso(A.size());
  for (Element a = 0; a < A.size(); ++a) iso[a] = prod.encode(local[a], base_of[a]);
  require_agreement(is_isomorphism(iso, A, prod.algebra), "inner-to-outer relabeling is not an isomorphism");
  return {std::move(fam), std::move(act), std::move(prod), std::move(iso)};
}

/// Per-fiber pointed maps F(b) -> F'(b). True iff basepoints are preserved
/// and every square commutes. Square commutation is cross-checked against
/// the induced map of unions being a homomorphism.
inline bool sdp_morphism_check(const OuterProduct& F, const OuterProduct& G,
                               const std::vector<std::vector<Element>>& maps) {
  const auto& B = F.base();
  if (!B.same_structure(G.base()) || maps.size() != B.size()) {
    throw Error(Errc::ShapeMismatch, "semidirect products over different bases");
  }
  for (std::size_t b = 0; b < B.size(); ++b) {
    if (maps[b].size() != F.family.fibers[b].size) throw Error(Errc::ShapeMismatch, "map size differs from fiber");
    for (Element v : maps[b]) {
      if (v >= G.family.fibers[b].size) throw Error(Errc::ShapeMismatch, "map leaves the target fiber");
    }
  }
  bool pointed = true;
  for (std::size_t b = 0; b < B.size(); ++b) {
    if (maps[b][F.family.fibers[b].basepoint] != G.family.fibers[b].basepoint) pointed = false;
  }
  bool squares = true;
  for (std::size_t s = 0; s < B.signature().size() && squares; ++s) {
    const std::size_t k = B.arity(s);
    detail::for_each_tuple(B.size(), k, [&](std::span<const Element> bt) {
      Element fb = B.apply(s, bt);
      const auto& f = F.actions.at(s, bt, B.size());
      const auto& g = G.actions.at(s, bt, B.size());
      auto rf = F.family.radix(bt), rg = G.family.radix(bt);
      std::vector<Element> img(k);
      return detail::for_each_mixed_tuple(rf, [&](std::span<const Element> xt) {
        for (std::size_t i = 0; i < k; ++i) img[i] = maps[bt[i]][xt[i]];
        bool ok = maps[fb][f[detail::mixed_index(xt, rf)]] == g[detail::mixed_index(img, rg)];
        if (!ok) squares = false;
        return ok;
      });
    });
  }
  std::vector<Element> total(F.algebra.size());
  for (Element a = 0; a < total.size(); ++a) {
    auto [x, b] = F.labeling[a];
    total[a] = G.encode(maps[b][x], b);
  }
  require_agreement(squares == is_homomorphism(total, F.algebra, G.algebra),
                    "commuting squares disagree with the induced homomorphism");
  return pointed && squares;
}

/// Fibers beta^-1(b) pointed at alpha(b); operations restricted from A.
/// Requires beta o alpha = id.
inline OuterProduct pointed_object_to_sdp(const FiniteAlgebra& A, const FiniteAlgebra& B, const Homomorphism& alpha,
                                          const Homomorphism& beta, const VarietySpec* v = nullptr) {
  if (alpha.source_size() != B.size() || beta.source_size() != A.size()) {
    throw Error(Errc::ShapeMismatch, "section and projection do not match the algebras");
  }
  for (Element b = 0; b < B.size(); ++b) {
    if (beta(alpha(b)) != b) {
      throw Error(Errc::SectionViolation, "beta(alpha(" + std::to_string(b) + ")) != " + std::to_string(b),
                  std::vector<Element>{b});
    }
  }
  std::vector<ElementSet> fiber(B.size());
  for (Element a = 0; a < A.size(); ++a) fiber[beta(a)].push_back(a);
  std::vector<Element> local(A.size());
  PointedFamily fam{B, {}};
  for (Element b = 0; b < B.size(); ++b) {
    for (std::size_t x = 0; x < fiber[b].size(); ++x) local[fiber[b][x]] = x;
    fam.fibers.push_back({fiber[b].size(), local[alpha(b)]});
  }
  std::vector<Element> args;
  auto act = make_action_family(fam, [&](std::size_t s, std::span<const Element> bt, std::span<const Element> xt) {
    args.resize(bt.size());
    for (std::size_t i = 0; i < bt.size(); ++i) args[i] = fiber[bt[i]][xt[i]];
    return local[A.apply(s, args)];
  });
  OuterProduct prod = build_outer_product(fam, act, v);
  std::vector<Element> iso(A.size());
  for (Element a = 0; a < A.size(); ++a) iso[a] = prod.encode(local[a], beta(a));
  require_agreement(is_isomorphism(iso, A, prod.algebra), "pointed object is not isomorphic to its product");
  return prod;
}

struct PointedObject {
  Homomorphism alpha;  // B -> union, b -> (a_b, b)
  Homomorphism beta;   // union -> B
};

inline PointedObject sdp_to_pointed_object(const OuterProduct& F) {
  const auto& B = F.base();
  std::vector<Element> alpha(B.size()), beta(F.algebra.size());
  for (Element b = 0; b < B.size(); ++b) alpha[b] = F.encode(F.family.fibers[b].basepoint, b);
  for (Element a = 0; a < beta.size(); ++a) beta[a] = F.labeling[a].second;
  return {Homomorphism(B, F.algebra, alpha), Homomorphism(F.algebra, B, beta)};
}

/// Constant fiber K with a totally idempotent basepoint: the product is the
/// direct product K x B iff every action table is K's own table. Checked
/// against the canonical pairing (k, b) -> encoded (k, b) being an
/// isomorphism from product(K, B).
inline bool direct_product_check(const PointedFamily& fam, const ActionFamily& act, const FiniteAlgebra& K) {
  const auto& B = fam.base;
  require_same_signature(K, B);
  for (const auto& f : fam.fibers) {
    if (f.size != K.size() || f.basepoint != fam.fibers[0].basepoint) {
      throw Error(Errc::ShapeMismatch, "fibers are not all the carrier of '" + K.name() + "'");
    }
  }
  if (!is_totally_idempotent(K, fam.fibers[0].basepoint)) {
    throw Error(Errc::ShapeMismatch, "basepoint of '" + K.name() + "' is not totally idempotent");
  }
  validate_actions(fam, act);
  bool direct = true;
  for (std::size_t s = 0; s < B.signature().size(); ++s) {
    for (const auto& t : act.tables[s]) {
      if (t != K.table(s)) direct = false;
    }
  }
  OuterProduct prod = build_outer_product(fam, act);
  FiniteAlgebra kb = product(K, B);
  std::vector<Element> pairing(kb.size());
  for (Element k = 0; k < K.size(); ++k) {
    for (Element b = 0; b < B.size(); ++b) pairing[k * B.size() + b] = prod.encode(k, b);
  }
  require_agreement(direct == is_isomorphism(pairing, kb, prod.algebra),
                    "direct-product criterion disagrees with the canonical pairing");
  return direct;
}

}  // namespace ua
