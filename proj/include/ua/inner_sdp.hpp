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
 * Inner semidirect decompositions A = B x| omega: a subalgebra B meeting
 * every class of the congruence omega exactly once. They correspond to
 * idempotent endomorphisms.
 */

#pragma once

#include <optional>
#include <vector>

#include "ua/congruence.hpp"
#include "ua/detail/hom_search.hpp"
#include "ua/homomorphism.hpp"
#include "ua/isomorphism.hpp"

namespace ua {

struct PointedBlock {
  ElementSet block;
  Element basepoint = 0;
  friend bool operator==(const PointedBlock&, const PointedBlock&) = default;
};

struct InnerDecomposition {
  FiniteAlgebra algebra;
  ElementSet B;
  Partition omega;
  Homomorphism e;
  /// One entry per omega-class, ordered by least element.
  std::vector<PointedBlock> pointed_partition;

  /// Block containing the basepoint b.
  const PointedBlock& block_of_basepoint(Element b) const {
    for (const auto& pb : pointed_partition) {
      if (pb.basepoint == b) return pb;
    }
    throw Error(Errc::DecompositionInvalid, std::to_string(b) + " is not a basepoint");
  }
};

/// All idempotent endomorphisms in lexicographic order of their tables.
inline std::vector<Homomorphism> idempotent_endomorphisms(const FiniteAlgebra& alg,
                                                          std::size_t size_cap = kDefaultEnumerationCap) {
  if (alg.size() > size_cap) {
    throw Error(Errc::SizeLimitExceeded, "endomorphism enumeration capped at " +
                                             std::to_string(size_cap) + " elements, '" + alg.name() +
                                             "' has " + std::to_string(alg.size()));
  }
  detail::HomSearchOptions opts;
  opts.idempotent = true;
  std::vector<Homomorphism> out;
  detail::HomSearch(alg, alg, std::move(opts)).run([&](const std::vector<Element>& m) {
    out.emplace_back(alg, alg, m);
    return true;
  });
  return out;
}

inline InnerDecomposition decomposition_from_idempotent(const FiniteAlgebra& alg, const Homomorphism& e) {
  if (e.source_size() != alg.size() || !e.is_idempotent()) {
    throw Error(Errc::NotIdempotent, "map " + to_string(e) + " is not an idempotent endomorphism");
  }
  if (!is_homomorphism(e.map(), alg, alg)) {
    throw Error(Errc::NotIdempotent, "map " + to_string(e) + " is not an endomorphism of '" + alg.name() + "'");
  }
  InnerDecomposition dec{alg, e.image(), kernel(e), e, {}};
  for (auto& block : dec.omega.blocks()) {
    auto meet = intersection(block, dec.B);
    require_agreement(meet.size() == 1 && meet[0] == e(block[0]),
                      "class of " + std::to_string(block[0]) + " does not meet the image once");
    dec.pointed_partition.push_back({std::move(block), meet[0]});
  }
  return dec;
}

struct InnerSdpReport {
  bool subalgebra = false;
  bool congruence = false;
  /// B meets every omega-class in exactly one element.
  bool a = false;
  /// Some idempotent endomorphism has image B and kernel omega.
  bool b = false;
  /// Some surjection A -> B fixing B pointwise has kernel omega.
  bool c = false;
  /// b -> [b] is an isomorphism B -> A/omega.
  bool d = false;
  std::optional<InnerDecomposition> decomposition;

  bool holds() const { return subalgebra && congruence && a; }
};

inline InnerSdpReport verify_inner_sdp(const FiniteAlgebra& alg, const ElementSet& B, const Partition& omega) {
  require_size(alg, omega);
  for (Element b : B) {
    if (b >= alg.size()) throw Error(Errc::TableRangeError, "element of B outside carrier");
  }
  InnerSdpReport r;
  r.subalgebra = !B.empty() && is_subalgebra(alg, B);
  r.congruence = is_congruence(alg, omega);

  r.a = true;
  for (const auto& block : omega.blocks()) {
    if (intersection(block, B).size() != 1) r.a = false;
  }
  if (!r.subalgebra || !r.congruence) {
    r.a = false;
    return r;
  }

  {
    detail::HomSearchOptions opts;
    opts.idempotent = true;
    opts.allowed = [&](Element, Element v) { return contains(B, v); };
    detail::HomSearch(alg, alg, std::move(opts)).run([&](const std::vector<Element>& m) {
      if (make_set(m) == B && kernel(m) == omega) r.b = true;
      return !r.b;
    });
  }

  FiniteAlgebra sub = subalgebra(alg, B);
  {
    detail::HomSearchOptions opts;
    opts.fixed.assign(alg.size(), std::nullopt);
    for (std::size_t i = 0; i < B.size(); ++i) opts.fixed[B[i]] = i;
    detail::HomSearch(alg, sub, std::move(opts)).run([&](const std::vector<Element>& m) {
      if (kernel(m) == omega) r.c = true;
      return !r.c;
    });
  }

  {
    Quotient q = quotient(alg, omega);
    std::vector<Element> canonical(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) canonical[i] = q.projection(B[i]);
    r.d = is_isomorphism(canonical, sub, q.algebra);
  }

  require_agreement(r.a == r.b && r.b == r.c && r.c == r.d,
                    "inner decomposition conditions disagree for '" + alg.name() + "'");
  if (r.a) {
    std::vector<Element> e(alg.size());
    for (Element x = 0; x < alg.size(); ++x) {
      e[x] = intersection(omega.block_of(x), B)[0];
    }
    r.decomposition = decomposition_from_idempotent(alg, Homomorphism(alg, alg, std::move(e)));
  }
  return r;
}

/// Checks that each operation maps products of blocks into the block of the
/// operation applied to the basepoints.
inline bool is_graded(const InnerDecomposition& dec) {
  const auto& A = dec.algebra;
  std::vector<std::size_t> block_index(A.size());
  for (std::size_t i = 0; i < dec.pointed_partition.size(); ++i) {
    for (Element x : dec.pointed_partition[i].block) block_index[x] = i;
  }
  std::vector<Element> bases;
  for (const auto& pb : dec.pointed_partition) bases.push_back(pb.basepoint);
  for (std::size_t s = 0; s < A.signature().size(); ++s) {
    const std::size_t k = A.arity(s);
    std::vector<Element> base_args(k);
    bool ok = detail::for_each_tuple(A.size(), k, [&](std::span<const Element> t) {
      for (std::size_t i = 0; i < k; ++i) base_args[i] = bases[block_index[t[i]]];
      Element fb = A.apply(s, base_args);
      return contains(dec.B, fb) && dec.pointed_partition[block_index[A.apply(s, t)]].basepoint == fb;
    });
    if (!ok) return false;
  }
  return true;
}

inline bool is_totally_idempotent(const FiniteAlgebra& alg, Element a) {
  for (std::size_t s = 0; s < alg.signature().size(); ++s) {
    std::vector<Element> diag(alg.arity(s), a);
    if (alg.apply(s, diag) != a) return false;
  }
  return true;
}

inline ElementSet totally_idempotent_elements(const FiniteAlgebra& alg) {
  ElementSet out;
  for (Element a = 0; a < alg.size(); ++a) {
    if (is_totally_idempotent(alg, a)) out.push_back(a);
  }
  return out;
}

/// One constant endomorphism per totally idempotent element. Cross-checked
/// against singleton subalgebras and a direct scan of constant maps.
inline std::vector<Homomorphism> constant_endomorphisms(const FiniteAlgebra& alg) {
  ElementSet ti = totally_idempotent_elements(alg);
  ElementSet singletons, constants;
  for (Element a = 0; a < alg.size(); ++a) {
    if (is_subalgebra(alg, {a})) singletons.push_back(a);
    std::vector<Element> c(alg.size(), a);
    if (is_homomorphism(c, alg, alg)) constants.push_back(a);
  }
  require_agreement(ti == singletons && ti == constants,
                    "constant endomorphisms, singleton subalgebras and totally idempotent elements differ");
  std::vector<Homomorphism> out;
  for (Element a : ti) out.emplace_back(alg, alg, std::vector<Element>(alg.size(), a));
  return out;
}

/// e <= f iff e(A) is inside f(A) and kernel(f) refines kernel(e).
inline bool idempotent_leq(const Homomorphism& e, const Homomorphism& f) {
  return is_subset(e.image(), f.image()) && kernel(f).refines(kernel(e));
}

struct ClassReport {
  ElementSet block;
  Element basepoint = 0;
  bool subalgebra = false;
  bool totally_idempotent = false;
  bool dominated_constant = false;
};

struct IdempotentPoset {
  std::vector<Homomorphism> elements;
  std::vector<std::vector<bool>> leq;
  std::size_t greatest = 0;
  /// classes[i] describes the omega-classes of elements[i].
  std::vector<std::vector<ClassReport>> classes;
};

inline IdempotentPoset idempotent_poset(const FiniteAlgebra& alg, std::vector<Homomorphism> elems) {
  IdempotentPoset P;
  P.elements = std::move(elems);
  const std::size_t m = P.elements.size();
  P.leq.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) P.leq[i][j] = idempotent_leq(P.elements[i], P.elements[j]);
  }
  auto id = Homomorphism::identity(alg);
  auto it = std::find(P.elements.begin(), P.elements.end(), id);
  require_agreement(it != P.elements.end(), "identity missing from idempotent list");
  P.greatest = static_cast<std::size_t>(it - P.elements.begin());
  for (std::size_t i = 0; i < m; ++i) {
    require_agreement(P.leq[i][P.greatest], "identity is not the greatest idempotent");
  }
  std::vector<std::size_t> constant_idx;
  for (std::size_t i = 0; i < m; ++i) {
    if (!P.elements[i].is_constant()) continue;
    constant_idx.push_back(i);
    for (std::size_t j = 0; j < m; ++j) {
      require_agreement(!P.leq[j][i] || j == i, "a constant endomorphism is not minimal");
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    auto dec = decomposition_from_idempotent(alg, P.elements[i]);
    std::vector<ClassReport> reports;
    std::size_t ti_in_b = 0, sub_classes = 0;
    for (Element b : dec.B) ti_in_b += is_totally_idempotent(alg, b);
    for (const auto& pb : dec.pointed_partition) {
      ClassReport cr{pb.block, pb.basepoint, is_subalgebra(alg, pb.block),
                     is_totally_idempotent(alg, pb.basepoint), false};
      for (std::size_t c : constant_idx) {
        if (P.leq[c][i] && P.elements[c](0) == pb.basepoint) cr.dominated_constant = true;
      }
      require_agreement(cr.subalgebra == cr.totally_idempotent &&
                            cr.totally_idempotent == cr.dominated_constant,
                        "class conditions disagree in '" + alg.name() + "'");
      sub_classes += cr.subalgebra;
      reports.push_back(std::move(cr));
    }
    require_agreement(ti_in_b == sub_classes, "totally idempotent count differs from subalgebra classes");
    P.classes.push_back(std::move(reports));
  }
  return P;
}

inline IdempotentPoset idempotent_poset(const FiniteAlgebra& alg, std::size_t size_cap = kDefaultEnumerationCap) {
  return idempotent_poset(alg, idempotent_endomorphisms(alg, size_cap));
}

}  // namespace ua
