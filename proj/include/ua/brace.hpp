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
 * Left skew braces: digroups with a o (b * c) = (a o b) * a^-* * (a o c).
 * Brace check, the outer condition for semidirect products, ideals, the
 * reflection of a digroup, commutators and the center.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ua/digroup.hpp"

namespace ua {

struct SkewBraceReport {
  bool lsb = false;
  /// lambda: (A,o) -> Aut(A,*) is a group morphism.
  bool lambda_morphism = false;
  /// Lexicographically first (a,b,c) breaking the brace identity.
  std::optional<std::vector<Element>> witness;
};

inline SkewBraceReport skew_brace_check(const FiniteAlgebra& D) {
  require_variety(D, variety("digroup"));
  DigroupView v(D);
  const std::size_t n = D.size();
  SkewBraceReport r;
  detail::for_each_tuple(n, 3, [&](std::span<const Element> t) {
    Element a = t[0], b = t[1], c = t[2];
    if (v.circ(a, v.star(b, c)) != v.star(v.star(v.circ(a, b), v.sinv(a)), v.circ(a, c))) {
      r.witness.emplace(t.begin(), t.end());
      return false;
    }
    return true;
  });
  r.lsb = !r.witness;

  std::vector<std::vector<Element>> lam(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) lam[a][b] = v.lambda(a, b);
  }
  r.lambda_morphism = true;
  for (Element a = 0; a < n && r.lambda_morphism; ++a) r.lambda_morphism = detail::is_group_automorphism(D, v.ops().star, lam[a]);
  for (Element a = 0; a < n && r.lambda_morphism; ++a) {
    for (Element b = 0; b < n && r.lambda_morphism; ++b) {
      const auto& ab = lam[v.circ(a, b)];
      for (Element x = 0; x < n; ++x) {
        if (ab[x] != lam[a][lam[b][x]]) {
          r.lambda_morphism = false;
          break;
        }
      }
    }
  }
  require_agreement(r.lsb == r.lambda_morphism, "brace identity disagrees with lambda being a morphism");
  return r;
}

inline bool is_skew_brace(const FiniteAlgebra& D) { return skew_brace_check(D).lsb; }

struct OuterBraceCondition {
  /// The equation with Lambda_{yoy''}(...) inside Lambda_{yo(y'*y'')}^-1.
  bool holds = false;
  /// The equation with that factor outside the inverse.
  bool printed_holds = false;
  /// First (y,y',y'',k,k',k'') where `holds` fails.
  std::optional<std::vector<Element>> witness;
};

/// For skew braces Y, K and Lambda a homomorphism (Y,o) -> Aut(K,*), the
/// semidirect product is a skew brace iff for all y,y',y'',k,k',k'':
///   phi_{o(y'*y'')}(k) o Lambda_{y'*y''}^-1(phi_{*y''}(Lambda_{y'}(k')) * Lambda_{y''}(k''))
///   = Lambda_{yo(y'*y'')}^-1(phi_{*lambda_y(y'')}(X) * Lambda_{yoy''}(phi_{oy''}(k) o k''))
/// with X = Lambda_{yoy'}(phi_{oy'}(k) o k') * Lambda_y(k)^-*.
inline OuterBraceCondition skew_brace_outer_condition(const DigroupActionTriple& t) {
  validate_triple(t);
  auto hyp = [](bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::HypothesisViolation, what);
  };
  hyp(is_skew_brace(t.Y), "Y is not a skew brace");
  hyp(is_skew_brace(t.K), "K is not a skew brace");
  DigroupView y(t.Y), k(t.K);
  const std::size_t ny = t.Y.size(), nk = t.K.size();
  for (Element a = 0; a < ny; ++a) {
    hyp(detail::is_group_automorphism(t.K, k.ops().star, t.Lambda[a]), "Lambda_y is not an automorphism of (K,*)");
    for (Element b = 0; b < ny; ++b) {
      for (Element x = 0; x < nk; ++x) {
        hyp(t.Lambda[y.circ(a, b)][x] == t.Lambda[a][t.Lambda[b][x]], "Lambda is not a homomorphism from (Y,o)");
      }
    }
  }
  std::vector<std::vector<Element>> Linv;
  for (const auto& l : t.Lambda) Linv.push_back(detail::inverse_permutation(l));
  const auto &L = t.Lambda, &ps = t.phi_star, &pc = t.phi_circ;

  OuterBraceCondition r;
  r.holds = r.printed_holds = true;
  std::array<Element, 6> v{};
  detail::for_each_tuple(ny, 3, [&](std::span<const Element> ys) {
    const Element a = ys[0], b = ys[1], c = ys[2];
    const Element bc = y.star(b, c), abc = y.circ(a, bc), ab = y.circ(a, b), ac = y.circ(a, c);
    const Element lac = y.lambda(a, c);
    detail::for_each_tuple(nk, 3, [&](std::span<const Element> ks) {
      const Element x = ks[0], x1 = ks[1], x2 = ks[2];
      const Element lhs = k.circ(pc[bc][x], Linv[bc][k.star(ps[c][L[b][x1]], L[c][x2])]);
      const Element X = k.star(L[ab][k.circ(pc[b][x], x1)], k.sinv(L[a][x]));
      const Element tail = L[ac][k.circ(pc[c][x], x2)];
      const Element derived = Linv[abc][k.star(ps[lac][X], tail)];
      const Element printed = k.star(Linv[abc][ps[lac][X]], tail);
      if (lhs != derived && r.holds) {
        r.holds = false;
        v = {a, b, c, x, x1, x2};
        r.witness = std::vector<Element>(v.begin(), v.end());
      }
      if (lhs != printed) r.printed_holds = false;
    });
    return true;
  });
  require_agreement(r.holds == is_skew_brace(digroup_outer(t).algebra),
                    "outer brace condition disagrees with the brace check of the product");
  return r;
}

/// Smallest ideal containing X: closed under both group operations and
/// inverses, conjugation in both groups and every lambda_a.
inline ElementSet brace_ideal_generated(const FiniteAlgebra& D, const ElementSet& X) {
  DigroupView v(D);
  const std::size_t n = D.size();
  std::vector<bool> in(n, false);
  std::vector<Element> queue;
  auto add = [&](Element a) {
    if (!in[a]) {
      in[a] = true;
      queue.push_back(a);
    }
  };
  add(v.one());
  for (Element x : X) {
    if (x >= n) throw Error(Errc::TableRangeError, "element outside carrier");
    add(x);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Element s = queue[q];
    add(v.sinv(s));
    add(v.cinv(s));
    for (Element g = 0; g < n; ++g) {
      add(v.star(v.star(g, s), v.sinv(g)));
      add(v.circ(v.circ(g, s), v.cinv(g)));
      add(v.lambda(g, s));
    }
    for (std::size_t p = 0; p <= q; ++p) {
      const Element t = queue[p];
      add(v.star(s, t));
      add(v.star(t, s));
      add(v.circ(s, t));
      add(v.circ(t, s));
    }
  }
  ElementSet out;
  for (Element a = 0; a < n; ++a) {
    if (in[a]) out.push_back(a);
  }
  require_agreement(is_digroup_ideal(D, out), "closure is not an ideal");
  return out;
}

inline ElementSet brace_ideal_join(const FiniteAlgebra& D, const ElementSet& I, const ElementSet& J) {
  ElementSet u = I;
  u.insert(u.end(), J.begin(), J.end());
  return brace_ideal_generated(D, make_set(std::move(u)));
}

struct Reflection {
  ElementSet ideal;
  Quotient quotient;
};

/// Quotient by the ideal generated by (a o b) * a^-* * (a o c) * (a o (b*c))^-*.
inline Reflection skew_brace_reflection(const FiniteAlgebra& D) {
  require_variety(D, variety("digroup"));
  DigroupView v(D);
  ElementSet defects;
  detail::for_each_tuple(D.size(), 3, [&](std::span<const Element> t) {
    Element a = t[0], b = t[1], c = t[2];
    defects.push_back(
        v.star(v.star(v.star(v.circ(a, b), v.sinv(a)), v.circ(a, c)), v.sinv(v.circ(a, v.star(b, c)))));
  });
  ElementSet I = brace_ideal_generated(D, make_set(std::move(defects)));
  Reflection r{I, quotient(D, ideal_partition(D, I))};
  r.quotient.algebra.set_name(D.name() + "_brace");
  require_agreement(is_skew_brace(r.quotient.algebra), "reflection is not a skew brace");
  return r;
}

/// Generated by [i,j]_*, [i,j]_o and (i o j)^-* * i * j for i in I, j in J.
inline ElementSet brace_commutator(const FiniteAlgebra& A, const ElementSet& I, const ElementSet& J) {
  if (!is_digroup_ideal(A, I)) throw Error(Errc::NotIdeal, "first argument is not an ideal");
  if (!is_digroup_ideal(A, J)) throw Error(Errc::NotIdeal, "second argument is not an ideal");
  DigroupView v(A);
  ElementSet gens;
  for (Element i : I) {
    for (Element j : J) {
      gens.push_back(v.star(v.star(v.sinv(i), v.sinv(j)), v.star(i, j)));
      gens.push_back(v.circ(v.circ(v.cinv(i), v.cinv(j)), v.circ(i, j)));
      gens.push_back(v.star(v.star(v.sinv(v.circ(i, j)), i), j));
    }
  }
  return brace_ideal_generated(A, make_set(std::move(gens)));
}

/// {z : a*z = z*a, a o z = z o a, a*z = a o z for all a}. Verified to be an
/// ideal with [Z,A] = 1 containing every ideal J with [J,A] = 1.
inline ElementSet brace_center(const FiniteAlgebra& A, std::size_t size_cap = kDefaultEnumerationCap) {
  DigroupView v(A);
  const std::size_t n = A.size();
  ElementSet Z;
  for (Element z = 0; z < n; ++z) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) {
      ok = v.star(a, z) == v.star(z, a) && v.circ(a, z) == v.circ(z, a) && v.star(a, z) == v.circ(a, z);
    }
    if (ok) Z.push_back(z);
  }
  const ElementSet all = full_set(n), unit{v.one()};
  require_agreement(is_digroup_ideal(A, Z), "center is not an ideal");
  require_agreement(brace_commutator(A, Z, all) == unit, "center does not commute with A");
  if (n <= size_cap) {
    for (const auto& p : all_congruences(A, size_cap)) {
      ElementSet J = p.block_of(v.one());
      if (brace_commutator(A, J, all) == unit) require_agreement(is_subset(J, Z), "center is not the greatest");
    }
  }
  return Z;
}

}  // namespace ua
