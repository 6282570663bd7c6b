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
 * Small standard algebras: cyclic and symmetric groups, Klein, dihedral and
 * quaternion groups, chains and the diamond lattice, a few semigroups and
 * the rings Z/n.
 */

#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/variety.hpp"

namespace ua::catalog {

inline const Signature& group_signature() {
  static const Signature sig{{"m", 2}, {"i", 1}, {"e", 0}};
  return sig;
}

/// Group from a multiplication rule; identity and inverses are looked up.
inline FiniteAlgebra group_from_mul(std::string name, std::size_t n,
                                    const std::function<Element(Element, Element)>& mul) {
  std::vector<Element> m(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) m[a * n + b] = mul(a, b);
  }
  FiniteAlgebra semi(name, Signature{{"m", 2}}, n, {m});
  auto e = detail::find_identity_element(semi, 0);
  if (!e) throw Error(Errc::AxiomFailure, "'" + name + "' has no identity element");
  std::vector<Element> inv(n, n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (m[a * n + b] == *e && m[b * n + a] == *e) inv[a] = b;
    }
    if (inv[a] == n) throw Error(Errc::AxiomFailure, "'" + name + "' element without inverse");
  }
  FiniteAlgebra g(std::move(name), group_signature(), n, {std::move(m), std::move(inv), {*e}});
  require_variety(g, variety("group"));
  return g;
}

inline FiniteAlgebra cyclic(std::size_t n) {
  return group_from_mul("z" + std::to_string(n), n, [n](Element a, Element b) { return (a + b) % n; });
}

/// Permutations of {0,1,2} in lexicographic order; product is composition
/// (p q)(x) = p(q(x)). Element 0 is the identity, 1 = (1 2), 2 = (0 1).
inline FiniteAlgebra symmetric3() {
  std::vector<std::array<Element, 3>> perms;
  std::array<Element, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return group_from_mul("s3", 6, [perms](Element a, Element b) {
    std::array<Element, 3> r{};
    for (Element x = 0; x < 3; ++x) r[x] = perms[a][perms[b][x]];
    return static_cast<Element>(std::find(perms.begin(), perms.end(), r) - perms.begin());
  });
}

inline FiniteAlgebra klein() {
  return group_from_mul("klein", 4, [](Element a, Element b) { return a ^ b; });
}

/// Dihedral group of order 2n: r^k is k, s r^k is n + k.
inline FiniteAlgebra dihedral(std::size_t n) {
  return group_from_mul("d" + std::to_string(n), 2 * n, [n](Element a, Element b) -> Element {
    std::size_t fa = a / n, ka = a % n, fb = b / n, kb = b % n;
    // (s^fa r^ka)(s^fb r^kb) = s^(fa+fb) r^(kb + (fb ? -ka : ka))
    std::size_t k = fb ? (kb + n - ka) % n : (ka + kb) % n;
    return ((fa + fb) % 2) * n + k;
  });
}

/// Quaternion group: elements 0..7 are 1,-1,i,-i,j,-j,k,-k.
inline FiniteAlgebra quaternion() {
  // Unit products among 1,i,j,k as (sign, index).
  static const int unit[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}};
  return group_from_mul("q8", 8, [](Element a, Element b) -> Element {
    int sa = a % 2 ? -1 : 1, sb = b % 2 ? -1 : 1;
    const int* u = unit[a / 2][b / 2];
    int sign = sa * sb * u[0];
    return static_cast<Element>(u[1] * 2 + (sign < 0 ? 1 : 0));
  });
}

inline const Signature& lattice_signature() {
  static const Signature sig{{"join", 2}, {"meet", 2}};
  return sig;
}

/// Lattice from its order relation leq(a,b).
inline FiniteAlgebra lattice_from_order(std::string name, std::size_t n,
                                        const std::function<bool(Element, Element)>& leq) {
  std::vector<Element> join(n * n), meet(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      std::optional<Element> lub, glb;
      for (Element c = 0; c < n; ++c) {
        if (leq(a, c) && leq(b, c) && (!lub || leq(c, *lub))) lub = c;
        if (leq(c, a) && leq(c, b) && (!glb || leq(*glb, c))) glb = c;
      }
      if (!lub || !glb) throw Error(Errc::AxiomFailure, "'" + name + "' is not a lattice order");
      join[a * n + b] = *lub;
      meet[a * n + b] = *glb;
    }
  }
  FiniteAlgebra l(std::move(name), lattice_signature(), n, {std::move(join), std::move(meet)});
  require_variety(l, variety("lattice"));
  return l;
}

inline FiniteAlgebra chain(std::size_t n) {
  return lattice_from_order("chain" + std::to_string(n), n, [](Element a, Element b) { return a <= b; });
}

/// Bottom 0, top 4, three pairwise incomparable atoms.
inline FiniteAlgebra diamond() {
  return lattice_from_order("m3", 5, [](Element a, Element b) {
    return a == b || a == 0 || b == 4;
  });
}

/// Bottom 0, top 4, chain 0<1<2<4 and atom 3.
inline FiniteAlgebra pentagon() {
  return lattice_from_order("n5", 5, [](Element a, Element b) {
    if (a == b || a == 0 || b == 4) return true;
    return (a == 1 && b == 2);
  });
}

inline FiniteAlgebra semigroup(std::string name, std::size_t n,
                               const std::function<Element(Element, Element)>& mul) {
  std::vector<Element> m(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) m[a * n + b] = mul(a, b);
  }
  FiniteAlgebra s(std::move(name), Signature{{"m", 2}}, n, {std::move(m)});
  require_variety(s, variety("semigroup"));
  return s;
}

/// Z/n under multiplication.
inline FiniteAlgebra multiplicative(std::size_t n) {
  return semigroup("mul" + std::to_string(n), n, [n](Element a, Element b) { return a * b % n; });
}

inline FiniteAlgebra left_zero(std::size_t n) {
  return semigroup("lz" + std::to_string(n), n, [](Element a, Element) { return a; });
}

/// Z/n as a ring in the signature add, neg, zero, mul.
inline FiniteAlgebra ring_zn(std::size_t n) {
  std::vector<Element> add(n * n), neg(n), mul(n * n);
  for (Element a = 0; a < n; ++a) {
    neg[a] = (n - a) % n;
    for (Element b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = a * b % n;
    }
  }
  return FiniteAlgebra("r" + std::to_string(n), variety("ring").signature, n,
                       {std::move(add), std::move(neg), {0}, std::move(mul)});
}

}  // namespace ua::catalog
