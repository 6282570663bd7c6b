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
 * Semidirect products of groups (left action, (k,y)(k',y') = (k phi_y(k'), yy')),
 * the six equivalent inner conditions, the correspondence between actions and
 * coset data {g, h, 1}, and semidirect products of rings.
 *
 * Pairs (k, y) are encoded as y*|N| + k throughout, matching outer products
 * with a constant fiber.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ua/catalog.hpp"
#include "ua/outer_sdp.hpp"

namespace ua {

/// Symbol indices of a group-signature algebra.
struct GroupOps {
  std::size_t m, i, e;
  explicit GroupOps(const FiniteAlgebra& g)
      : m(g.symbol("m", 2)), i(g.symbol("i", 1)), e(g.symbol("e", 0)) {}
};

inline void require_group(const FiniteAlgebra& g) { require_variety(g, variety("group")); }

inline bool is_automorphism(std::span<const Element> map, const FiniteAlgebra& g) {
  return is_isomorphism(map, g, g);
}

/// phi must be a homomorphism B -> Aut(N): every phi_b an automorphism,
/// phi_{b1 b2} = phi_b1 o phi_b2.
inline void require_group_action(const FiniteAlgebra& N, const FiniteAlgebra& B,
                                 const std::vector<std::vector<Element>>& phi) {
  require_group(N);
  require_group(B);
  GroupOps ob(B);
  if (phi.size() != B.size()) throw Error(Errc::ShapeMismatch, "one automorphism per element of B expected");
  for (Element b = 0; b < B.size(); ++b) {
    if (phi[b].size() != N.size() || !is_automorphism(phi[b], N)) {
      throw Error(Errc::NotAutomorphism, "phi_" + std::to_string(b) + " is not an automorphism", {b});
    }
  }
  for (Element b1 = 0; b1 < B.size(); ++b1) {
    for (Element b2 = 0; b2 < B.size(); ++b2) {
      const auto& p12 = phi[B.binary(ob.m, b1, b2)];
      for (Element k = 0; k < N.size(); ++k) {
        if (p12[k] != phi[b1][phi[b2][k]]) {
          throw Error(Errc::NotAnAction, "phi is not multiplicative at " + tuple_string({b1, b2, k}), {b1, b2, k});
        }
      }
    }
  }
}

inline std::vector<std::vector<Element>> trivial_action(const FiniteAlgebra& N, const FiniteAlgebra& B) {
  return std::vector<std::vector<Element>>(B.size(), full_set(N.size()));
}

/// Constant family (N, 1_N) over B with the semidirect-product maps.
inline std::pair<PointedFamily, ActionFamily> group_action_family(const FiniteAlgebra& N, const FiniteAlgebra& B,
                                                                  const std::vector<std::vector<Element>>& phi) {
  GroupOps on(N), ob(B);
  auto fam = PointedFamily::constant(B, N.size(), N.constant(on.e));
  auto act = make_action_family(fam, [&](std::size_t s, std::span<const Element> bt, std::span<const Element> xt) {
    if (s == ob.m) return N.binary(on.m, xt[0], phi[bt[0]][xt[1]]);
    if (s == ob.i) return phi[B.unary(ob.i, bt[0])][N.unary(on.i, xt[0])];
    return N.constant(on.e);
  });
  return {std::move(fam), std::move(act)};
}

inline FiniteAlgebra group_semidirect(const FiniteAlgebra& N, const FiniteAlgebra& B,
                                      const std::vector<std::vector<Element>>& phi) {
  require_group_action(N, B, phi);
  auto [fam, act] = group_action_family(N, B, phi);
  auto prod = build_outer_product(fam, act, variety("group"));
  prod.algebra.set_name(N.name() + "x|" + B.name());
  return prod.algebra;
}

/// Conjugation phi_y(k) = y k y^-1 restricted to a normal subgroup K, indexed
/// by positions in the sorted sets.
inline std::vector<std::vector<Element>> conjugation_action(const FiniteAlgebra& G, const ElementSet& K,
                                                            const ElementSet& Y) {
  GroupOps o(G);
  std::vector<std::vector<Element>> phi;
  for (Element y : Y) {
    std::vector<Element> row;
    for (Element k : K) {
      Element c = G.binary(o.m, G.binary(o.m, y, k), G.unary(o.i, y));
      row.push_back(static_cast<Element>(std::lower_bound(K.begin(), K.end(), c) - K.begin()));
    }
    phi.push_back(std::move(row));
  }
  return phi;
}

struct GroupInnerReport {
  bool a = false, b = false, c = false, d = false, e = false, f = false;
  bool all() const { return a && b && c && d && e && f; }
};

inline bool is_normal_subgroup(const FiniteAlgebra& G, const ElementSet& K) {
  GroupOps o(G);
  if (K.empty() || !is_subalgebra(G, K)) return false;
  for (Element g = 0; g < G.size(); ++g) {
    for (Element k : K) {
      if (!contains(K, G.binary(o.m, G.binary(o.m, g, k), G.unary(o.i, g)))) return false;
    }
  }
  return true;
}

/// Cosets gK as a partition.
inline Partition coset_partition(const FiniteAlgebra& G, const ElementSet& K) {
  GroupOps o(G);
  std::vector<std::pair<Element, Element>> pairs;
  for (Element g = 0; g < G.size(); ++g) {
    for (Element k : K) pairs.emplace_back(g, G.binary(o.m, g, k));
  }
  detail::UnionFind uf(G.size());
  for (auto [x, y] : pairs) uf.unite(x, y);
  return Partition::from_union_find(uf);
}

inline GroupInnerReport group_inner_equivalences(const FiniteAlgebra& G, const ElementSet& K, const ElementSet& Y) {
  require_group(G);
  GroupOps o(G);
  const Element one = G.constant(o.e);
  if (K.empty() || !is_subalgebra(G, K)) throw Error(Errc::NotSubgroup, "K is not a subgroup");
  if (Y.empty() || !is_subalgebra(G, Y)) throw Error(Errc::NotSubgroup, "Y is not a subgroup");
  if (!is_normal_subgroup(G, K)) throw Error(Errc::NotNormal, "K is not normal");

  GroupInnerReport r;
  {
    ElementSet ky;
    for (Element k : K) {
      for (Element y : Y) ky.push_back(G.binary(o.m, k, y));
    }
    r.a = make_set(ky).size() == G.size() && intersection(K, Y) == ElementSet{one};
  }
  auto unique_factor = [&](bool k_first) {
    std::vector<std::size_t> count(G.size(), 0);
    for (Element k : K) {
      for (Element y : Y) ++count[k_first ? G.binary(o.m, k, y) : G.binary(o.m, y, k)];
    }
    return std::all_of(count.begin(), count.end(), [](std::size_t c) { return c == 1; });
  };
  r.b = unique_factor(true);
  r.c = unique_factor(false);
  {
    detail::HomSearchOptions opts;
    opts.idempotent = true;
    opts.allowed = [&](Element, Element v) { return contains(Y, v); };
    detail::HomSearch(G, G, std::move(opts)).run([&](const std::vector<Element>& m) {
      ElementSet ker;
      for (Element g = 0; g < G.size(); ++g) {
        if (m[g] == one) ker.push_back(g);
      }
      r.d = make_set(m) == Y && ker == K;
      return !r.d;
    });
  }
  FiniteAlgebra ysub = subalgebra(G, Y);
  {
    detail::HomSearchOptions opts;
    opts.fixed.assign(G.size(), std::nullopt);
    for (std::size_t j = 0; j < Y.size(); ++j) opts.fixed[Y[j]] = j;
    const Element yone = static_cast<Element>(std::lower_bound(Y.begin(), Y.end(), one) - Y.begin());
    detail::HomSearch(G, ysub, std::move(opts)).run([&](const std::vector<Element>& m) {
      ElementSet ker;
      for (Element g = 0; g < G.size(); ++g) {
        if (m[g] == yone) ker.push_back(g);
      }
      r.e = ker == K;
      return !r.e;
    });
  }
  {
    Quotient q = quotient(G, coset_partition(G, K));
    std::vector<Element> map;
    for (Element y : Y) map.push_back(q.projection(y));
    r.f = is_isomorphism(map, ysub, q.algebra);
  }
  require_agreement(r.a == r.b && r.b == r.c && r.c == r.d && r.d == r.e && r.e == r.f,
                    "group semidirect conditions disagree");
  return r;
}

/// Coset data: g[b1*|B|+b2] is a flat |N|x|N| table, h[b] a unary table.
struct GroupSDPData {
  FiniteAlgebra N, B;
  std::vector<std::vector<Element>> g;
  std::vector<std::vector<Element>> h;
  Element unit = 0;

  Element gv(Element b1, Element b2, Element n1, Element n2) const {
    return g[b1 * B.size() + b2][n1 * N.size() + n2];
  }
  friend bool operator==(const GroupSDPData&, const GroupSDPData&) = default;
};

struct GroupDataConditions {
  bool c1 = true, c2 = true, c3 = true;
  std::optional<std::vector<Element>> witness;
  std::string failed;
  bool all() const { return c1 && c2 && c3; }
};

/// (1) associativity of g, (2) g_(1,b)(1,n) = n, (3) g_(b^-1,b)(h_b(n), n) = 1.
inline GroupDataConditions group_data_conditions(const GroupSDPData& d) {
  GroupOps ob(d.B);
  const auto& B = d.B;
  const Element bone = B.constant(ob.e);
  const std::size_t nb = B.size(), nn = d.N.size();
  GroupDataConditions r;
  auto fail = [&](bool& flag, const char* name, std::vector<Element> w) {
    if (flag) {
      flag = false;
      if (!r.witness) {
        r.witness = std::move(w);
        r.failed = name;
      }
    }
  };
  detail::for_each_tuple(nb, 3, [&](std::span<const Element> bs) {
    Element b1 = bs[0], b2 = bs[1], b3 = bs[2];
    Element b12 = B.binary(ob.m, b1, b2), b23 = B.binary(ob.m, b2, b3);
    return detail::for_each_tuple(nn, 3, [&](std::span<const Element> ns) {
      Element l = d.gv(b12, b3, d.gv(b1, b2, ns[0], ns[1]), ns[2]);
      Element rr = d.gv(b1, b23, ns[0], d.gv(b2, b3, ns[1], ns[2]));
      if (l != rr) fail(r.c1, "(1)", {b1, b2, b3, ns[0], ns[1], ns[2]});
      return l == rr;
    });
  });
  for (Element b = 0; b < nb; ++b) {
    for (Element n = 0; n < nn; ++n) {
      if (d.gv(bone, b, d.unit, n) != n) fail(r.c2, "(2)", {b, n});
      if (d.gv(B.unary(ob.i, b), b, d.h[b][n], n) != d.unit) fail(r.c3, "(3)", {b, n});
    }
  }
  return r;
}

inline void require_group_data(const GroupSDPData& d) {
  auto r = group_data_conditions(d);
  if (!r.all()) {
    throw Error(Errc::ConditionViolation, "group data violates condition " + r.failed + " at " +
                                              tuple_string(*r.witness), *r.witness);
  }
}

/// g_(b1,b2)(n1,n2) = n1 gamma_b1(n2), h_b(n) = gamma_{b^-1}(n^-1).
inline GroupSDPData group_data_from_action(const FiniteAlgebra& N, const FiniteAlgebra& B,
                                           const std::vector<std::vector<Element>>& gamma) {
  require_group_action(N, B, gamma);
  GroupOps on(N), ob(B);
  GroupSDPData d{N, B, {}, {}, N.constant(on.e)};
  for (Element b1 = 0; b1 < B.size(); ++b1) {
    for (Element b2 = 0; b2 < B.size(); ++b2) {
      std::vector<Element> t;
      for (Element n1 = 0; n1 < N.size(); ++n1) {
        for (Element n2 = 0; n2 < N.size(); ++n2) t.push_back(N.binary(on.m, n1, gamma[b1][n2]));
      }
      d.g.push_back(std::move(t));
    }
  }
  for (Element b = 0; b < B.size(); ++b) {
    std::vector<Element> t;
    for (Element n = 0; n < N.size(); ++n) t.push_back(gamma[B.unary(ob.i, b)][N.unary(on.i, n)]);
    d.h.push_back(std::move(t));
  }
  return d;
}

/// gamma_b = g_(b,1)(1, -).
inline std::vector<std::vector<Element>> action_from_group_data(const GroupSDPData& d) {
  GroupOps ob(d.B);
  const Element bone = d.B.constant(ob.e);
  std::vector<std::vector<Element>> gamma;
  for (Element b = 0; b < d.B.size(); ++b) {
    std::vector<Element> row;
    for (Element n = 0; n < d.N.size(); ++n) row.push_back(d.gv(b, bone, d.unit, n));
    gamma.push_back(std::move(row));
  }
  return gamma;
}

/// Group on pairs with (n1,b1)(n2,b2) = (g_(b1,b2)(n1,n2), b1 b2).
inline FiniteAlgebra group_from_data(const GroupSDPData& d) {
  GroupOps ob(d.B);
  auto fam = PointedFamily::constant(d.B, d.N.size(), d.unit);
  auto act = make_action_family(fam, [&](std::size_t s, std::span<const Element> bt, std::span<const Element> xt) {
    if (s == ob.m) return d.gv(bt[0], bt[1], xt[0], xt[1]);
    if (s == ob.i) return d.h[bt[0]][xt[0]];
    return d.unit;
  });
  return build_outer_product(fam, act, variety("group")).algebra;
}

struct GroupDataRoundtrip {
  GroupSDPData data;
  std::vector<std::vector<Element>> gamma;
  GroupDataConditions conditions;
  /// gamma is a homomorphism B -> Aut(N).
  bool gamma_is_action = false;
  /// data -> gamma -> data (or gamma -> data -> gamma) returns the input.
  bool roundtrip_exact = false;
};

/// Action to data; conditions (1)-(3) must hold.
inline GroupDataRoundtrip group_data_bijection(const FiniteAlgebra& N, const FiniteAlgebra& B,
                                               const std::vector<std::vector<Element>>& gamma) {
  GroupDataRoundtrip r{group_data_from_action(N, B, gamma), gamma, {}, true, false};
  r.conditions = group_data_conditions(r.data);
  require_group_data(r.data);
  r.roundtrip_exact = action_from_group_data(r.data) == gamma;
  require_agreement(r.roundtrip_exact, "action -> data -> action is not the identity");
  return r;
}

/// Data to action; conditions (1)-(3) must hold. The reverse trip is exact
/// precisely when g has the form n1 gamma_b1(n2).
inline GroupDataRoundtrip group_data_bijection(const GroupSDPData& d) {
  GroupDataRoundtrip r{d, action_from_group_data(d), group_data_conditions(d), false, false};
  require_group_data(d);
  try {
    require_group_action(d.N, d.B, r.gamma);
    r.gamma_is_action = true;
  } catch (const Error&) {
    r.gamma_is_action = false;
  }
  r.roundtrip_exact = r.gamma_is_action && group_data_from_action(d.N, d.B, r.gamma) == d;
  return r;
}

/// Coset data of an inner decomposition G = N B with N normal:
/// g_(b1,b2)(n1,n2) = (n1 b1)(n2 b2)(b1 b2)^-1, h_b(n) = (n b)^-1 b.
/// N and B are relabeled by position in the sorted sets.
inline GroupSDPData group_data_from_decomposition(const FiniteAlgebra& G, const ElementSet& Nset,
                                                  const ElementSet& Bset) {
  GroupOps o(G);
  auto pos = [](const ElementSet& s, Element x) -> Element {
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it == s.end() || *it != x) throw Error(Errc::DecompositionInvalid, "element left the subgroup");
    return static_cast<Element>(it - s.begin());
  };
  auto mul = [&](Element a, Element b) { return G.binary(o.m, a, b); };
  auto inv = [&](Element a) { return G.unary(o.i, a); };
  GroupSDPData d{subalgebra(G, Nset, G.name() + "_N"), subalgebra(G, Bset, G.name() + "_B"), {}, {},
                 pos(Nset, G.constant(o.e))};
  for (Element b1 : Bset) {
    for (Element b2 : Bset) {
      std::vector<Element> t;
      for (Element n1 : Nset) {
        for (Element n2 : Nset) t.push_back(pos(Nset, mul(mul(mul(n1, b1), mul(n2, b2)), inv(mul(b1, b2)))));
      }
      d.g.push_back(std::move(t));
    }
  }
  for (Element b : Bset) {
    std::vector<Element> t;
    for (Element n : Nset) t.push_back(pos(Nset, mul(inv(mul(n, b)), b)));
    d.h.push_back(std::move(t));
  }
  return d;
}

/// Ring operations: add, neg, zero, mul.
struct RingOps {
  std::size_t add, neg, zero, mul;
  explicit RingOps(const FiniteAlgebra& r)
      : add(r.symbol("add", 2)), neg(r.symbol("neg", 1)), zero(r.symbol("zero", 0)), mul(r.symbol("mul", 2)) {}
};

struct RingActionPair {
  FiniteAlgebra K, S;
  std::vector<std::vector<Element>> lambda;  // per s, a map K -> K
  std::vector<std::vector<Element>> rho;
};

/// First failed compatibility condition as (name, witness), if any.
inline std::optional<std::pair<std::string, std::vector<Element>>> ring_pair_violation(const RingActionPair& p) {
  const auto &K = p.K, &S = p.S;
  RingOps k(K), s(S);
  auto kadd = [&](Element a, Element b) { return K.binary(k.add, a, b); };
  auto kmul = [&](Element a, Element b) { return K.binary(k.mul, a, b); };
  auto L = [&](Element x, Element a) { return p.lambda[x][a]; };
  auto R = [&](Element x, Element a) { return p.rho[x][a]; };
  using V = std::vector<Element>;
  for (Element x = 0; x < S.size(); ++x) {
    for (Element a = 0; a < K.size(); ++a) {
      for (Element b = 0; b < K.size(); ++b) {
        if (L(x, kadd(a, b)) != kadd(L(x, a), L(x, b))) return {{"lambda additive", V{x, a, b}}};
        if (L(x, kmul(a, b)) != kmul(L(x, a), b)) return {{"lambda right-linear", V{x, a, b}}};
        if (R(x, kadd(a, b)) != kadd(R(x, a), R(x, b))) return {{"rho additive", V{x, a, b}}};
        if (R(x, kmul(a, b)) != kmul(a, R(x, b))) return {{"rho left-linear", V{x, a, b}}};
        if (kmul(R(x, a), b) != kmul(a, L(x, b))) return {{"rho(s)(x)y = x lambda(s)(y)", V{x, a, b}}};
      }
    }
  }
  for (Element x = 0; x < S.size(); ++x) {
    for (Element y = 0; y < S.size(); ++y) {
      Element sum = S.binary(s.add, x, y), prod = S.binary(s.mul, x, y);
      for (Element a = 0; a < K.size(); ++a) {
        if (L(sum, a) != kadd(L(x, a), L(y, a))) return {{"lambda preserves addition", V{x, y, a}}};
        if (L(prod, a) != L(x, L(y, a))) return {{"lambda multiplicative", V{x, y, a}}};
        if (R(sum, a) != kadd(R(x, a), R(y, a))) return {{"rho preserves addition", V{x, y, a}}};
        if (R(prod, a) != R(y, R(x, a))) return {{"rho antimultiplicative", V{x, y, a}}};
        if (L(x, R(y, a)) != R(y, L(x, a))) return {{"lambda(s) rho(t) = rho(t) lambda(s)", V{x, y, a}}};
      }
    }
  }
  return std::nullopt;
}

/// Ring on pairs (k, s) with componentwise addition and
/// (k,s)(k',s') = (kk' + lambda(s)(k') + rho(s')(k), ss').
inline FiniteAlgebra ring_semidirect(const RingActionPair& p) {
  const auto& ring = variety("ring");
  require_variety(p.K, ring);
  require_variety(p.S, ring);
  if (p.lambda.size() != p.S.size() || p.rho.size() != p.S.size()) {
    throw Error(Errc::ShapeMismatch, "one lambda and one rho map per element of S expected");
  }
  for (std::size_t x = 0; x < p.S.size(); ++x) {
    if (p.lambda[x].size() != p.K.size() || p.rho[x].size() != p.K.size()) {
      throw Error(Errc::ShapeMismatch, "lambda/rho maps must be tables on K");
    }
    for (std::size_t a = 0; a < p.K.size(); ++a) {
      if (p.lambda[x][a] >= p.K.size() || p.rho[x][a] >= p.K.size()) {
        throw Error(Errc::TableRangeError, "lambda/rho value outside K");
      }
    }
  }
  if (auto v = ring_pair_violation(p)) {
    throw Error(Errc::CompatibilityViolation, v->first + " fails at " + tuple_string(v->second), v->second);
  }
  RingOps k(p.K), s(p.S);
  const auto& K = p.K;
  auto fam = PointedFamily::constant(p.S, K.size(), K.constant(k.zero));
  auto act = make_action_family(fam, [&](std::size_t sym, std::span<const Element> bt, std::span<const Element> xt) {
    if (sym == s.add) return K.binary(k.add, xt[0], xt[1]);
    if (sym == s.neg) return K.unary(k.neg, xt[0]);
    if (sym == s.zero) return K.constant(k.zero);
    Element t = K.binary(k.mul, xt[0], xt[1]);
    t = K.binary(k.add, t, p.lambda[bt[0]][xt[1]]);
    return K.binary(k.add, t, p.rho[bt[1]][xt[0]]);
  });
  auto out = build_outer_product(fam, act, ring).algebra;
  out.set_name(K.name() + "x|" + p.S.name());
  return out;
}

}  // namespace ua
