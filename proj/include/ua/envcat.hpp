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
 * The enveloping category of an algebra: objects are tuples of elements,
 * a morphism (a1..an) -> (b1..bm) is a tuple of n-ary terms p_j with
 * p_j(a1..an) = b_j. An outer semidirect product over B extends to a functor
 * on the enveloping category of B, sending (b1..bn) to the product of fibers.
 */

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ua/outer_sdp.hpp"

namespace ua {

struct TupleObject {
  std::vector<Element> elements;

  std::size_t size() const noexcept { return elements.size(); }
  friend bool operator==(const TupleObject&, const TupleObject&) = default;
};

inline std::string to_string(const TupleObject& o) { return tuple_string(o.elements); }

namespace detail {

inline void check_tuple_shape(const FiniteAlgebra& A, const TupleObject& src, const TupleObject& dst,
                              const std::vector<Term>& terms) {
  for (const auto* o : {&src, &dst}) {
    for (Element a : o->elements) {
      if (a >= A.size()) throw Error(Errc::ShapeMismatch, "tuple entry " + std::to_string(a) + " outside carrier");
    }
  }
  if (terms.size() != dst.size()) {
    throw Error(Errc::ShapeMismatch, std::to_string(terms.size()) + " terms for a target of length " +
                                         std::to_string(dst.size()));
  }
  for (const auto& t : terms) {
    check_term(t, A.signature());
    if (t.variable_bound() > src.size()) {
      throw Error(Errc::ShapeMismatch, "term " + to_string(t) + " uses a variable beyond the source length " +
                                           std::to_string(src.size()));
    }
  }
}

}  // namespace detail

inline bool is_cat_morphism(const FiniteAlgebra& A, const TupleObject& src, const TupleObject& dst,
                            const std::vector<Term>& terms) {
  detail::check_tuple_shape(A, src, dst, terms);
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (eval_term(terms[j], A, src.elements) != dst.elements[j]) return false;
  }
  return true;
}

class TermTupleMorphism {
 public:
  TermTupleMorphism(FiniteAlgebra alg, TupleObject src, TupleObject dst, std::vector<Term> terms)
      : alg_(std::move(alg)), src_(std::move(src)), dst_(std::move(dst)), terms_(std::move(terms)) {
    if (!is_cat_morphism(alg_, src_, dst_, terms_)) {
      throw Error(Errc::EndpointMismatch, "terms do not send " + to_string(src_) + " to " + to_string(dst_));
    }
  }

  static TermTupleMorphism identity(FiniteAlgebra alg, TupleObject obj) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < obj.size(); ++i) terms.push_back(var(i));
    TupleObject dst = obj;
    return TermTupleMorphism(std::move(alg), std::move(obj), std::move(dst), std::move(terms));
  }

  const FiniteAlgebra& algebra() const noexcept { return alg_; }
  const TupleObject& source() const noexcept { return src_; }
  const TupleObject& target() const noexcept { return dst_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  friend bool operator==(const TermTupleMorphism& a, const TermTupleMorphism& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.terms_ == b.terms_;
  }

 private:
  FiniteAlgebra alg_;
  TupleObject src_, dst_;
  std::vector<Term> terms_;
};

inline std::string to_string(const TermTupleMorphism& m) {
  std::string s = "(";
  for (std::size_t j = 0; j < m.terms().size(); ++j) {
    if (j) s += ",";
    s += to_string(m.terms()[j]);
  }
  return s + "): " + to_string(m.source()) + " -> " + to_string(m.target());
}

/// q o p, component i is q_i(p_1..p_m).
inline TermTupleMorphism compose_morphisms(const TermTupleMorphism& q, const TermTupleMorphism& p) {
  if (!(p.target() == q.source()) || !p.algebra().same_structure(q.algebra())) {
    throw Error(Errc::EndpointMismatch, "target " + to_string(p.target()) + " differs from source " +
                                            to_string(q.source()));
  }
  std::vector<Term> terms;
  for (const auto& t : q.terms()) terms.push_back(substitute(t, p.terms()));
  return TermTupleMorphism(q.algebra(), p.source(), q.target(), std::move(terms));
}

/// Product of pointed fibers, entries in mixed radix.
struct PointedProduct {
  std::vector<std::size_t> radix;
  std::vector<Element> basepoint;

  std::size_t size() const { return detail::product_of(radix); }
  Element basepoint_index() const { return detail::mixed_index(basepoint, radix); }
  friend bool operator==(const PointedProduct&, const PointedProduct&) = default;
};

/// Table over a source product with values mixed indices into the target.
struct ProductMap {
  PointedProduct source, target;
  std::vector<Element> table;
  friend bool operator==(const ProductMap&, const ProductMap&) = default;
};

namespace detail {

inline void require_over_base(const OuterProduct& F, const TupleObject& obj) {
  for (Element b : obj.elements) {
    if (b >= F.base().size()) throw Error(Errc::ShapeMismatch, "tuple entry outside the base");
  }
}

/// F(p) for a term p at the base tuple obj: table over the fibers of obj
/// into the fiber of p(obj), by recursion on p.
inline std::vector<Element> term_map(const OuterProduct& F, const Term& t, const TupleObject& obj,
                                     Element& value) {
  const auto& B = F.base();
  const auto radix = F.family.radix(obj.elements);
  std::vector<Element> out;
  if (t.is_variable()) {
    const std::size_t i = t.variable_index();
    value = obj.elements[i];
    for_each_mixed_tuple(radix, [&](std::span<const Element> xt) { out.push_back(xt[i]); });
    return out;
  }
  const std::size_t s = B.symbol(t.symbol(), t.args().size());
  std::vector<Element> bt;
  std::vector<std::vector<Element>> sub;
  for (const auto& a : t.args()) {
    Element v = 0;
    sub.push_back(term_map(F, a, obj, v));
    bt.push_back(v);
  }
  value = B.apply(s, bt);
  const auto& act = F.actions.at(s, bt, B.size());
  const auto arg_radix = F.family.radix(bt);
  std::vector<Element> xs(bt.size());
  std::size_t row = 0;
  for_each_mixed_tuple(radix, [&](std::span<const Element>) {
    for (std::size_t j = 0; j < bt.size(); ++j) xs[j] = sub[j][row];
    out.push_back(act[mixed_index(xs, arg_radix)]);
    ++row;
  });
  return out;
}

}  // namespace detail

inline PointedProduct functor_extension(const OuterProduct& F, const TupleObject& obj) {
  detail::require_over_base(F, obj);
  PointedProduct p;
  for (Element b : obj.elements) {
    p.radix.push_back(F.family.fibers[b].size);
    p.basepoint.push_back(F.family.fibers[b].basepoint);
  }
  return p;
}

/// Single term at an object: table into the fiber of t(obj).
inline std::vector<Element> functor_extension(const OuterProduct& F, const Term& t, const TupleObject& obj) {
  detail::require_over_base(F, obj);
  check_term(t, F.base().signature());
  if (t.variable_bound() > obj.size()) throw Error(Errc::ShapeMismatch, "term uses a variable beyond the object");
  Element v = 0;
  return detail::term_map(F, t, obj, v);
}

inline ProductMap functor_extension(const OuterProduct& F, const TermTupleMorphism& m) {
  if (!F.base().same_structure(m.algebra())) {
    throw Error(Errc::ShapeMismatch, "morphism is not over the base of the product");
  }
  ProductMap out{functor_extension(F, m.source()), functor_extension(F, m.target()), {}};
  std::vector<std::vector<Element>> comps;
  for (const auto& t : m.terms()) comps.push_back(functor_extension(F, t, m.source()));
  std::vector<Element> ys(comps.size());
  for (std::size_t row = 0; row < out.source.size(); ++row) {
    for (std::size_t j = 0; j < comps.size(); ++j) ys[j] = comps[j][row];
    out.table.push_back(detail::mixed_index(ys, out.target.radix));
  }
  return out;
}

/// g o f as tables.
inline ProductMap compose(const ProductMap& g, const ProductMap& f) {
  if (!(f.target == g.source)) throw Error(Errc::ShapeMismatch, "product maps are not composable");
  ProductMap out{f.source, g.target, {}};
  for (Element x : f.table) out.table.push_back(g.table[x]);
  return out;
}

inline bool is_identity_map(const ProductMap& m) {
  for (std::size_t i = 0; i < m.table.size(); ++i) {
    if (m.table[i] != i) return false;
  }
  return m.source == m.target;
}

/// G(q o p) = G(q) G(p) for every supplied composable pair, identities sent
/// to identities, basepoints preserved.
inline bool check_functoriality(const OuterProduct& F,
                                const std::vector<std::pair<TermTupleMorphism, TermTupleMorphism>>& pairs) {
  for (const auto& [q, p] : pairs) {
    ProductMap gp = functor_extension(F, p), gq = functor_extension(F, q);
    ProductMap gqp = functor_extension(F, compose_morphisms(q, p));
    if (!(gqp == compose(gq, gp))) return false;
    for (const auto* g : {&gp, &gq}) {
      if (g->table[g->source.basepoint_index()] != g->target.basepoint_index()) return false;
    }
    for (const auto* o : {&p.source(), &p.target()}) {
      if (!is_identity_map(functor_extension(F, TermTupleMorphism::identity(p.algebra(), *o)))) return false;
    }
  }
  return true;
}

}  // namespace ua
