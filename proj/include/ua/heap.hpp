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
 * Heaps: a ternary t with t(x,x,y) = y = t(y,x,x) and
 * t(t(x,y,z),w,u) = t(x,y,t(z,w,u)). Conversion to and from groups, normal
 * subheaps and their congruences, inner and outer semidirect products, and
 * the direct-product criterion.
 */

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ua/catalog.hpp"
#include "ua/congruence.hpp"
#include "ua/detail/hom_search.hpp"
#include "ua/digroup.hpp"
#include "ua/groups.hpp"
#include "ua/isomorphism.hpp"

namespace ua {

inline const Signature& heap_signature() { return variety("heap").signature; }

/// Fails with AxiomFailure carrying the identity witness.
inline void require_heap(const FiniteAlgebra& X) {
  if (X.signature() != heap_signature()) {
    throw Error(Errc::SignatureMismatch, "'" + X.name() + "' does not have the heap signature t/3");
  }
  try {
    require_variety(X, variety("heap"));
  } catch (const Error& e) {
    throw Error(Errc::AxiomFailure, e.what(), e.witness().value_or(std::vector<Element>{}));
  }
}

inline bool is_heap(const FiniteAlgebra& X) {
  return X.signature() == heap_signature() && satisfies(X, variety("heap"));
}

class HeapView {
 public:
  explicit HeapView(const FiniteAlgebra& X) : x_(&X), t_(X.symbol("t", 3)) {}
  Element operator()(Element a, Element b, Element c) const { return x_->ternary(t_, a, b, c); }
  std::size_t size() const { return x_->size(); }

 private:
  const FiniteAlgebra* x_;
  std::size_t t_;
};

/// t(x,y,z) = x y^-1 z.
inline FiniteAlgebra heap_group_convert(const FiniteAlgebra& G) {
  try {
    require_group(G);
  } catch (const Error& e) {
    throw Error(Errc::AxiomFailure, e.what(), e.witness().value_or(std::vector<Element>{}));
  }
  GroupOps o(G);
  const std::size_t n = G.size();
  std::vector<Element> t;
  t.reserve(n * n * n);
  detail::for_each_tuple(n, 3, [&](std::span<const Element> x) {
    t.push_back(G.binary(o.m, G.binary(o.m, x[0], G.unary(o.i, x[1])), x[2]));
  });
  FiniteAlgebra X(G.name() + "_heap", heap_signature(), n, {std::move(t)});
  require_heap(X);
  return X;
}

/// Product t(x,e,y), identity e, inverse t(e,x,e).
inline FiniteAlgebra heap_group_convert(const FiniteAlgebra& X, Element e) {
  require_heap(X);
  const std::size_t n = X.size();
  if (e >= n) throw Error(Errc::TableRangeError, "basepoint outside carrier");
  HeapView t(X);
  std::vector<Element> m(n * n), inv(n);
  for (Element a = 0; a < n; ++a) {
    inv[a] = t(e, a, e);
    for (Element b = 0; b < n; ++b) m[a * n + b] = t(a, e, b);
  }
  FiniteAlgebra G(X.name() + "_grp" + std::to_string(e), catalog::group_signature(), n,
                  {std::move(m), std::move(inv), {e}});
  try {
    require_group(G);
  } catch (const Error& err) {
    throw Error(Errc::AxiomFailure, err.what(), err.witness().value_or(std::vector<Element>{}));
  }
  return G;
}

inline bool is_subheap(const FiniteAlgebra& X, const ElementSet& S) { return !S.empty() && is_subalgebra(X, S); }

/// t(t(x,e,s),x,e) in S for all x and e, s in S.
inline bool is_normal_subheap(const FiniteAlgebra& X, const ElementSet& S) {
  if (!is_subheap(X, S)) return false;
  HeapView t(X);
  for (Element x = 0; x < X.size(); ++x) {
    for (Element e : S) {
      for (Element s : S) {
        if (!contains(S, t(t(x, e, s), x, e))) return false;
      }
    }
  }
  return true;
}

/// M <= N iff whenever t(x,y,s) is in M for some s in M, t(x,y,u) is in N for some u in N.
inline bool subheap_preceq(const FiniteAlgebra& X, const ElementSet& M, const ElementSet& N) {
  HeapView t(X);
  for (Element x = 0; x < X.size(); ++x) {
    for (Element y = 0; y < X.size(); ++y) {
      bool hit = false;
      for (Element s : M) hit = hit || contains(M, t(x, y, s));
      if (!hit) continue;
      bool found = false;
      for (Element u : N) found = found || contains(N, t(x, y, u));
      if (!found) return false;
    }
  }
  return true;
}

namespace detail {

inline void require_subheap(const FiniteAlgebra& X, const ElementSet& S) {
  for (Element s : S) {
    if (s >= X.size()) throw Error(Errc::TableRangeError, "element outside carrier");
  }
  if (S.empty()) throw Error(Errc::EmptySet, "subheap must be nonempty");
  if (!is_subalgebra(X, S)) throw Error(Errc::NotASubheap, "set is not closed under t");
}

}  // namespace detail

/// Congruence generated by S x S.
inline Partition subheap_relation(const FiniteAlgebra& X, const ElementSet& S) {
  require_heap(X);
  detail::require_subheap(X, S);
  std::vector<std::pair<Element, Element>> pairs;
  for (Element s : S) pairs.emplace_back(S[0], s);
  return congruence_generated(X, pairs);
}

/// Every normal subheap, ordered by bitmask.
inline std::vector<ElementSet> all_normal_subheaps(const FiniteAlgebra& X,
                                                   std::size_t size_cap = kDefaultEnumerationCap) {
  if (X.size() > size_cap) {
    throw Error(Errc::SizeLimitExceeded, "normal subheap enumeration capped at " + std::to_string(size_cap));
  }
  std::vector<ElementSet> out;
  for (const auto& S : all_subalgebras(X)) {
    if (is_normal_subheap(X, S)) out.push_back(S);
  }
  return out;
}

struct NormalSubheapReport {
  bool normal = false;
  Partition congruence;
  /// S <= N for each N of the comparison list.
  std::vector<bool> preorder_row;
};

/// When `compare` is empty and |X| <= 6, the row runs over all normal subheaps.
inline NormalSubheapReport normal_subheap_ops(const FiniteAlgebra& X, const ElementSet& S,
                                              std::vector<ElementSet> compare = {}) {
  NormalSubheapReport r;
  r.congruence = subheap_relation(X, S);
  r.normal = is_normal_subheap(X, S);
  if (!r.normal) return r;

  // x ~ y iff t(x,y,s) in S
  HeapView t(X);
  for (Element x = 0; x < X.size(); ++x) {
    for (Element y = 0; y < X.size(); ++y) {
      require_agreement(r.congruence.same(x, y) == contains(S, t(x, y, S[0])),
                        "generated congruence differs from the coset relation");
    }
  }
  if (compare.empty() && X.size() <= 6) compare = all_normal_subheaps(X);
  for (const auto& N : compare) {
    if (!is_normal_subheap(X, N)) throw Error(Errc::NotASubheap, "comparison set is not a normal subheap");
    const bool le = subheap_preceq(X, S, N);
    require_agreement(le == r.congruence.refines(subheap_relation(X, N)), "preorder disagrees with congruence order");
    r.preorder_row.push_back(le);
  }
  return r;
}

struct HeapCorrespondence {
  std::vector<ElementSet> subheaps;
  /// Index of the congruence of each subheap in `congruences`.
  std::vector<std::size_t> image;
  std::vector<Partition> congruences;
  std::size_t classes = 0;
};

/// N(X)/~ -> C(X): verifies that the preorder matches inclusion of relations,
/// equivalent subheaps give equal relations and every congruence is hit.
inline HeapCorrespondence heap_correspondence(const FiniteAlgebra& X, std::size_t size_cap = 6) {
  require_heap(X);
  HeapCorrespondence r;
  r.subheaps = all_normal_subheaps(X, size_cap);
  r.congruences = all_congruences(X, size_cap);
  std::vector<Partition> rel;
  for (const auto& S : r.subheaps) {
    rel.push_back(subheap_relation(X, S));
    auto it = std::find(r.congruences.begin(), r.congruences.end(), rel.back());
    require_agreement(it != r.congruences.end(), "subheap relation is not a congruence");
    r.image.push_back(static_cast<std::size_t>(it - r.congruences.begin()));
  }
  const std::size_t m = r.subheaps.size();
  std::vector<std::size_t> cls(m);
  for (std::size_t i = 0; i < m; ++i) {
    cls[i] = i;
    for (std::size_t j = 0; j < m; ++j) {
      const bool le = subheap_preceq(X, r.subheaps[i], r.subheaps[j]);
      require_agreement(le == rel[i].refines(rel[j]), "preorder disagrees with congruence order");
      if (j < i && le && subheap_preceq(X, r.subheaps[j], r.subheaps[i]) && cls[i] == i) cls[i] = cls[j];
    }
    if (cls[i] == i) ++r.classes;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      require_agreement((cls[i] == cls[j]) == (r.image[i] == r.image[j]), "equivalent subheaps differ in relation");
    }
  }
  require_agreement(r.classes == r.congruences.size(), "subheap relations miss a congruence");
  return r;
}

struct HeapAction {
  FiniteAlgebra Y;
  FiniteAlgebra K;
  /// alpha[y] is a permutation of K.
  std::vector<std::vector<Element>> alpha;
  Element y0 = 0;
};

/// Automorphism tables of K under t(f,g,h) = f g^-1 h.
inline void validate_heap_action(const HeapAction& a) {
  auto hyp = [](bool ok, const std::string& what, std::vector<Element> w = {}) {
    if (!ok) throw Error(Errc::HypothesisViolation, what, std::move(w));
  };
  require_heap(a.Y);
  require_heap(a.K);
  const std::size_t ny = a.Y.size(), nk = a.K.size();
  hyp(a.alpha.size() == ny, "one automorphism per element of Y expected");
  hyp(a.y0 < ny, "distinguished element outside Y");
  for (Element y = 0; y < ny; ++y) {
    hyp(a.alpha[y].size() == nk, "automorphism table has the wrong length", {y});
    for (Element v : a.alpha[y]) hyp(v < nk, "automorphism value outside K", {y});
    hyp(is_isomorphism(a.alpha[y], a.K, a.K), "alpha_y is not an automorphism of K", {y});
  }
  for (Element k = 0; k < nk; ++k) hyp(a.alpha[a.y0][k] == k, "alpha is not the identity at the distinguished element", {a.y0});
  HeapView ty(a.Y);
  std::vector<std::vector<Element>> inv;
  for (const auto& f : a.alpha) inv.push_back(detail::inverse_permutation(f));
  detail::for_each_tuple(ny, 3, [&](std::span<const Element> y) {
    const auto& lhs = a.alpha[ty(y[0], y[1], y[2])];
    for (Element k = 0; k < nk; ++k) {
      hyp(lhs[k] == a.alpha[y[0]][inv[y[1]][a.alpha[y[2]][k]]], "alpha is not a heap morphism into Aut(K)",
          {y[0], y[1], y[2]});
    }
  });
}

struct HeapOuter {
  /// Carrier K x Y, (k,y) encoded k*|Y| + y.
  FiniteAlgebra algebra;
  /// retractions[k] is f(a,b) = (k,b).
  std::vector<std::vector<Element>> retractions;
};

/// t((k1,y1),(k2,y2),(k3,y3)) = (t(k1, a(k2), a(k3)), t(y1,y2,y3)) with a = alpha_{t(y1,y2,y0)}.
inline HeapOuter heap_outer(const HeapAction& a) {
  validate_heap_action(a);
  const std::size_t ny = a.Y.size(), nk = a.K.size(), n = nk * ny;
  HeapView ty(a.Y), tk(a.K);
  std::vector<Element> table;
  table.reserve(n * n * n);
  detail::for_each_tuple(n, 3, [&](std::span<const Element> p) {
    const Element k1 = p[0] / ny, y1 = p[0] % ny, k2 = p[1] / ny, y2 = p[1] % ny, k3 = p[2] / ny, y3 = p[2] % ny;
    const auto& f = a.alpha[ty(y1, y2, a.y0)];
    table.push_back(tk(k1, f[k2], f[k3]) * ny + ty(y1, y2, y3));
  });
  HeapOuter out{FiniteAlgebra(a.K.name() + "x|" + a.Y.name(), heap_signature(), n, {std::move(table)}), {}};
  require_heap(out.algebra);

  ElementSet fiber;
  for (Element k = 0; k < nk; ++k) fiber.push_back(k * ny + a.y0);
  require_agreement(is_normal_subheap(out.algebra, fiber), "K x {y0} is not a normal subheap");
  std::vector<Element> inc(nk);
  for (Element k = 0; k < nk; ++k) inc[k] = k;
  require_agreement(is_isomorphism(inc, a.K, subalgebra(out.algebra, fiber)), "K x {y0} is not isomorphic to K");
  for (Element k = 0; k < nk; ++k) {
    ElementSet row;
    std::vector<Element> f(n);
    for (Element y = 0; y < ny; ++y) row.push_back(k * ny + y);
    for (Element p = 0; p < n; ++p) f[p] = k * ny + p % ny;
    require_agreement(is_subheap(out.algebra, row), "{k} x Y is not a subheap");
    std::vector<Element> idy(ny);
    for (Element y = 0; y < ny; ++y) idy[y] = y;
    require_agreement(is_isomorphism(idy, a.Y, subalgebra(out.algebra, row)), "{k} x Y is not isomorphic to Y");
    require_agreement(is_homomorphism(f, out.algebra, out.algebra), "f(a,b) = (k,b) is not an endomorphism");
    out.retractions.push_back(std::move(f));
  }
  return out;
}

struct HeapInnerReport {
  /// (a) transversal, (b) idempotent endomorphism, (c) t(b,c,d) factorization,
  /// (d) t(d,c,b) factorization, (e) Y -> X/omega isomorphism.
  std::array<bool, 5> conditions{};
  Element e = 0;
  /// [e]_omega.
  ElementSet K;
  /// alpha_y(k) = t(y,e,t(k,y,e)) as an action of Y on K (positions in Y and K).
  std::optional<HeapAction> action;

  bool all() const { return conditions[0]; }
};

namespace detail {

/// Number of (b,d) in X x Y with a = t(b,c,d) (or t(d,c,b)) and b omega c is
/// exactly one for all a in X, c in Y.
inline bool unique_heap_factorization(const FiniteAlgebra& X, const ElementSet& Y, const Partition& omega,
                                      bool d_first) {
  HeapView t(X);
  for (Element a = 0; a < X.size(); ++a) {
    for (Element c : Y) {
      std::size_t count = 0;
      for (Element b = 0; b < X.size(); ++b) {
        if (!omega.same(b, c)) continue;
        for (Element d : Y) count += (d_first ? t(d, c, b) : t(b, c, d)) == a;
      }
      if (count != 1) return false;
    }
  }
  return true;
}

inline std::size_t position(const ElementSet& s, Element x) {
  return static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), x) - s.begin());
}

}  // namespace detail

/// `e` defaults to the least element of Y.
inline HeapInnerReport heap_inner_report(const FiniteAlgebra& X, const ElementSet& Y, const Partition& omega,
                                         std::optional<Element> e = std::nullopt) {
  require_heap(X);
  require_size(X, omega);
  detail::require_subheap(X, Y);
  if (!is_congruence(X, omega)) throw Error(Errc::NotACongruence, to_string(omega) + " is not a congruence");
  if (e && !contains(Y, *e)) throw Error(Errc::NotASubheap, "basepoint is not in Y");

  HeapInnerReport r;
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

  c[2] = detail::unique_heap_factorization(X, Y, omega, false);
  c[3] = detail::unique_heap_factorization(X, Y, omega, true);

  Quotient q = quotient(X, omega);
  std::vector<Element> g;
  for (Element y : Y) g.push_back(q.projection(y));
  c[4] = is_isomorphism(g, subalgebra(X, Y), q.algebra);

  for (bool v : c) require_agreement(v == c[0], "heap decomposition conditions disagree for '" + X.name() + "'");
  if (!c[0]) return r;

  r.e = e.value_or(Y[0]);
  r.K = omega.block_of(r.e);
  HeapView t(X);
  // f^-1(e) is the class of e
  for (Element x = 0; x < X.size(); ++x) {
    require_agreement(contains(r.K, x) == (intersection(omega.block_of(x), Y)[0] == r.e), "f^-1(e) is not [e]");
  }
  HeapAction act{subalgebra(X, Y, X.name() + "_Y"), subalgebra(X, r.K, X.name() + "_K"), {}, detail::position(Y, r.e)};
  for (Element y : Y) {
    std::vector<Element> f;
    for (Element k : r.K) {
      const Element v = t(y, r.e, t(k, y, r.e));
      require_agreement(contains(r.K, v), "alpha_y leaves [e]");
      f.push_back(detail::position(r.K, v));
    }
    act.alpha.push_back(std::move(f));
  }
  try {
    validate_heap_action(act);
  } catch (const Error& err) {
    throw Error(Errc::Inconsistent, std::string("induced action: ") + err.what());
  }
  r.action = std::move(act);
  return r;
}

struct HeapDirectReport {
  /// (a) Y normal, (b) canonical pairing K x Y -> X an isomorphism,
  /// (c) t(y,e,k) = t(k,e,y), (d) idempotent g with image K and g^-1(e) = Y,
  /// (e) alpha trivial.
  std::array<bool, 5> conditions{};
  /// First (y,k) breaking (c).
  std::optional<std::vector<Element>> witness;
  /// X and K x Y are isomorphic as heaps by any map (not asserted).
  bool abstractly_isomorphic = false;
};

/// Pairing (k,y) -> t(k,e,y).
inline HeapDirectReport heap_direct_criterion(const FiniteAlgebra& X, const Partition& omega, const ElementSet& Y,
                                              Element e) {
  HeapInnerReport inner;
  try {
    inner = heap_inner_report(X, Y, omega, e);
  } catch (const Error& err) {
    if (err.code() == Errc::Inconsistent) throw;
    throw Error(Errc::DecompositionInvalid, err.what());
  }
  if (!inner.all()) throw Error(Errc::DecompositionInvalid, "Y is not a transversal of omega");
  const ElementSet& K = inner.K;
  HeapView t(X);
  HeapDirectReport r;
  auto& c = r.conditions;
  c[0] = is_normal_subheap(X, Y);

  FiniteAlgebra Ka = subalgebra(X, K), Ya = subalgebra(X, Y);
  FiniteAlgebra P = product(Ka, Ya);
  std::vector<Element> pair;
  for (Element k : K) {
    for (Element y : Y) pair.push_back(t(k, e, y));
  }
  c[1] = is_isomorphism(pair, P, X);
  r.abstractly_isomorphic = is_isomorphic(P, X);

  c[2] = true;
  for (Element y : Y) {
    for (Element k : K) {
      if (c[2] && t(y, e, k) != t(k, e, y)) {
        c[2] = false;
        r.witness = std::vector<Element>{y, k};
      }
    }
  }

  detail::HomSearchOptions opts;
  opts.idempotent = true;
  opts.allowed = [&](Element, Element v) { return contains(K, v); };
  detail::HomSearch(X, X, std::move(opts)).run([&](const std::vector<Element>& m) {
    ElementSet fib;
    for (Element x = 0; x < X.size(); ++x) {
      if (m[x] == e) fib.push_back(x);
    }
    c[3] = make_set(m) == K && fib == Y;
    return !c[3];
  });

  c[4] = is_identity_constant(inner.action->alpha);
  for (bool v : c) require_agreement(v == c[0], "direct product conditions disagree for '" + X.name() + "'");
  return r;
}

}  // namespace ua
