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

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "ua/catalog.hpp"
#include "ua/heap.hpp"
#include "ua/truss.hpp"

using namespace ua;

namespace {

using oracle::Map;

Element T(const FiniteAlgebra& X, Element a, Element b, Element c) { return X.ternary(0, a, b, c); }

// Mal'tsev laws and associativity by five nested loops.
bool heap_laws(const FiniteAlgebra& X) {
  const std::size_t n = X.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (T(X, x, x, y) != y || T(X, x, y, y) != x) return false;
    }
  }
  bool ok = true;
  oracle::tuples(n, 5, [&](const Map& v) {
    ok = ok && T(X, T(X, v[0], v[1], v[2]), v[3], v[4]) == T(X, v[0], v[1], T(X, v[2], v[3], v[4]));
  });
  return ok;
}

std::vector<FiniteAlgebra> small_heaps() {
  using namespace catalog;
  std::vector<FiniteAlgebra> out;
  for (std::size_t n = 1; n <= 6; ++n) out.push_back(heap_group_convert(cyclic(n)));
  out.push_back(heap_group_convert(klein()));
  out.push_back(heap_group_convert(symmetric3()));
  return out;
}

ElementSet set_of(const std::vector<bool>& in) {
  ElementSet s;
  for (Element a = 0; a < in.size(); ++a) {
    if (in[a]) s.push_back(a);
  }
  return s;
}

bool transversal(const ElementSet& Y, const Map& label) {
  std::vector<std::size_t> hits(label.size(), 0);
  for (Element y : Y) ++hits[label[y]];
  for (Element a = 0; a < label.size(); ++a) {
    if (hits[label[a]] != 1) return false;
  }
  return true;
}

Partition labels(const Map& m) { return Partition::from_labels(m); }

// Every heap morphism alpha: Y -> Aut(K) with alpha[y0] = id, by brute force.
std::vector<std::vector<Map>> heap_actions(const FiniteAlgebra& Y, const FiniteAlgebra& K, Element y0) {
  std::vector<Map> autos;
  Map p(K.size());
  for (Element i = 0; i < K.size(); ++i) p[i] = i;
  do {
    if (oracle::is_hom(p, K, K)) autos.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto inv = [](const Map& f) {
    Map g(f.size());
    for (Element i = 0; i < f.size(); ++i) g[f[i]] = i;
    return g;
  };
  std::vector<std::vector<Map>> out;
  oracle::tuples(autos.size(), Y.size(), [&](const Map& pick) {
    std::vector<Map> a;
    for (Element y = 0; y < Y.size(); ++y) a.push_back(autos[pick[y]]);
    for (Element k = 0; k < K.size(); ++k) {
      if (a[y0][k] != k) return;
    }
    for (Element x = 0; x < Y.size(); ++x) {
      for (Element y = 0; y < Y.size(); ++y) {
        const Map iy = inv(a[y]);
        for (Element z = 0; z < Y.size(); ++z) {
          for (Element k = 0; k < K.size(); ++k) {
            if (a[T(Y, x, y, z)][k] != a[x][iy[a[z][k]]]) return;
          }
        }
      }
    }
    out.push_back(a);
  });
  return out;
}

}  // namespace

TEST(HeapConvert, CyclicTwo) {
  auto X = heap_group_convert(catalog::cyclic(2));
  oracle::tuples(2, 3, [&](const Map& v) { EXPECT_EQ(T(X, v[0], v[1], v[2]), (v[0] + v[1] + v[2]) % 2); });
  EXPECT_TRUE(heap_laws(X));
}

TEST(HeapConvert, RoundtripAtIdentity) {
  for (const auto& G : {catalog::cyclic(5), catalog::klein(), catalog::symmetric3(), catalog::dihedral(4)}) {
    auto X = heap_group_convert(G);
    EXPECT_TRUE(heap_laws(X)) << G.name();
    auto H = heap_group_convert(X, G.constant(2));
    EXPECT_EQ(H.tables(), G.tables()) << G.name();
  }
}

TEST(HeapConvert, ShiftedBasepoint) {
  auto X = heap_group_convert(catalog::cyclic(4));
  auto G = heap_group_convert(X, 1);
  EXPECT_EQ(G.constant(2), 1u);
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) EXPECT_EQ(G.binary(0, a, b), (a + b + 3) % 4);
  }
  EXPECT_TRUE(oracle::isomorphic(G, catalog::cyclic(4)));
  EXPECT_THROW(heap_group_convert(X, 4), Error);
}

TEST(HeapConvert, RejectsNonHeap) {
  // t(x,y,z) = x fails t(x,x,y) = y
  std::vector<Element> t(27);
  for (Element i = 0; i < 27; ++i) t[i] = i / 9;
  FiniteAlgebra bad("proj", heap_signature(), 3, {t});
  try {
    heap_group_convert(bad, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AxiomFailure);
    EXPECT_EQ(e.witness(), (std::vector<Element>{0, 1}));
  }
  EXPECT_FALSE(is_heap(bad));
  auto lz = catalog::left_zero(3);
  EXPECT_THROW(heap_group_convert(lz), Error);
}

TEST(NormalSubheap, Examples) {
  auto X = heap_group_convert(catalog::cyclic(4));
  auto single = normal_subheap_ops(X, {3});
  EXPECT_TRUE(single.normal);
  EXPECT_TRUE(single.congruence.is_identity());
  auto half = normal_subheap_ops(X, {0, 2});
  EXPECT_TRUE(half.normal);
  EXPECT_EQ(half.congruence, parse_partition("{{0,2},{1,3}}"));
  auto full = normal_subheap_ops(X, full_set(4));
  EXPECT_TRUE(full.normal);
  EXPECT_TRUE(full.congruence.is_all());
  // {1,3} is a coset, also normal and giving the same relation
  EXPECT_EQ(normal_subheap_ops(X, {1, 3}).congruence, half.congruence);
  EXPECT_EQ(half.preorder_row.size(), all_normal_subheaps(X).size());
}

TEST(NormalSubheap, Errors) {
  auto X = heap_group_convert(catalog::cyclic(4));
  try {
    normal_subheap_ops(X, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptySet);
  }
  try {
    normal_subheap_ops(X, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotASubheap);
  }
}

TEST(NormalSubheap, NonNormalInS3) {
  auto X = heap_group_convert(catalog::symmetric3());
  auto r = normal_subheap_ops(X, {0, 1});
  EXPECT_FALSE(r.normal);
  EXPECT_TRUE(r.preorder_row.empty());
  EXPECT_TRUE(normal_subheap_ops(X, {0, 3, 4}).normal);
}

TEST(NormalSubheap, RelationIsLeastCongruenceAboveSquare) {
  for (const auto& X : small_heaps()) {
    auto cons = oracle::congruences(X);
    for (const auto& in : oracle::subalgebras(X)) {
      ElementSet S = set_of(in);
      // least oracle congruence relating all of S
      const Map* best = nullptr;
      std::size_t best_blocks = 0;
      for (const auto& c : cons) {
        bool ok = true;
        for (Element s : S) ok = ok && c[s] == c[S[0]];
        const std::size_t blocks = std::set<Element>(c.begin(), c.end()).size();
        if (ok && blocks > best_blocks) {
          best = &c;
          best_blocks = blocks;
        }
      }
      ASSERT_NE(best, nullptr);
      EXPECT_EQ(subheap_relation(X, S), labels(*best)) << X.name() << " " << tuple_string(S);
    }
  }
}

TEST(NormalSubheap, CorrespondenceOntoCongruences) {
  std::size_t non_injective = 0;
  for (const auto& X : small_heaps()) {
    auto r = heap_correspondence(X);
    EXPECT_EQ(r.classes, oracle::congruences(X).size()) << X.name();
    std::set<std::size_t> hit(r.image.begin(), r.image.end());
    EXPECT_EQ(hit.size(), r.congruences.size()) << X.name();
    if (r.subheaps.size() > r.classes) ++non_injective;
    // normality against a direct scan
    std::size_t normal = 0;
    for (const auto& in : oracle::subalgebras(X)) {
      bool ok = true;
      auto S = set_of(in);
      oracle::tuples(X.size(), 1, [&](const Map& x) {
        for (Element e : S) {
          for (Element s : S) ok = ok && in[T(X, T(X, x[0], e, s), x[0], e)];
        }
      });
      normal += ok;
    }
    EXPECT_EQ(r.subheaps.size(), normal) << X.name();
  }
  EXPECT_EQ(non_injective, small_heaps().size() - 1);
}

TEST(HeapInner, Examples) {
  // no subheap of the Z4-heap meets both classes of {{0,2},{1,3}} once
  auto Z4 = heap_group_convert(catalog::cyclic(4));
  EXPECT_THROW(heap_inner_report(Z4, {0, 1}, parse_partition("{{0,2},{1,3}}")), Error);
  for (const auto& Y : {ElementSet{0, 2}, ElementSet{1, 3}, ElementSet{0}, full_set(4)}) {
    EXPECT_FALSE(heap_inner_report(Z4, Y, parse_partition("{{0,2},{1,3}}")).all());
  }

  auto X = heap_group_convert(catalog::klein());
  auto r = heap_inner_report(X, {0, 1}, parse_partition("{{0,2},{1,3}}"));
  EXPECT_EQ(r.conditions, (std::array<bool, 5>{true, true, true, true, true}));
  EXPECT_EQ(r.K, (ElementSet{0, 2}));
  ASSERT_TRUE(r.action);
  EXPECT_EQ(r.action->alpha.size(), 2u);

  auto whole = heap_inner_report(X, full_set(4), Partition::identity(4), 2);
  EXPECT_TRUE(whole.all());
  EXPECT_EQ(whole.K, ElementSet{2});
  for (const auto& f : whole.action->alpha) EXPECT_EQ(f, std::vector<Element>{0});

  auto missing = heap_inner_report(X, {0, 2}, parse_partition("{{0,2},{1,3}}"));
  EXPECT_EQ(missing.conditions, (std::array<bool, 5>{}));
  EXPECT_FALSE(missing.action);
}

TEST(HeapInner, Errors) {
  auto X = heap_group_convert(catalog::cyclic(4));
  try {
    heap_inner_report(X, {0, 2}, parse_partition("{{0,1},{2,3}}"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotACongruence);
  }
  // t(0,1,0) = 3
  try {
    heap_inner_report(X, {0, 1, 2}, Partition::identity(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotASubheap);
  }
}

TEST(HeapInner, AgreesWithTransversalScan) {
  for (const auto& X : small_heaps()) {
    auto cons = oracle::congruences(X);
    auto idem = oracle::idempotent_endomorphisms(X);
    std::size_t pairs = 0;
    for (const auto& in : oracle::subalgebras(X)) {
      ElementSet Y = set_of(in);
      for (const auto& c : cons) {
        auto r = heap_inner_report(X, Y, labels(c));
        const bool expect = transversal(Y, c);
        EXPECT_EQ(r.all(), expect) << X.name();
        bool retract = false;
        for (const auto& f : idem) retract = retract || (Y == make_set(f) && labels(f) == labels(c));
        EXPECT_EQ(r.conditions[1], retract);
        if (!expect) continue;
        ++pairs;
        // alpha_y(k) = t(y,e,t(k,y,e)) against the action tables
        const Element e = Y[0];
        const auto& act = *r.action;
        for (std::size_t yi = 0; yi < Y.size(); ++yi) {
          for (std::size_t ki = 0; ki < r.K.size(); ++ki) {
            const Element v = T(X, Y[yi], e, T(X, r.K[ki], Y[yi], e));
            EXPECT_EQ(r.K[act.alpha[yi][ki]], v);
          }
        }
      }
    }
    EXPECT_EQ(pairs, oracle::inner_pair_count(X)) << X.name();
  }
}

TEST(HeapOuter, TrivialActionIsProduct) {
  auto K = heap_group_convert(catalog::cyclic(3)), Y = heap_group_convert(catalog::klein());
  std::vector<std::vector<Element>> id(4, {0, 1, 2});
  auto out = heap_outer({Y, K, id, 2});
  EXPECT_TRUE(out.algebra.same_structure(product(K, Y)));
  EXPECT_EQ(out.retractions.size(), 3u);
}

TEST(HeapOuter, InversionOnZ3) {
  auto K = heap_group_convert(catalog::cyclic(3)), Y = heap_group_convert(catalog::cyclic(2));
  auto out = heap_outer({Y, K, {{0, 1, 2}, {0, 2, 1}}, 0});
  EXPECT_EQ(out.algebra.size(), 6u);
  EXPECT_TRUE(heap_laws(out.algebra));
  EXPECT_TRUE(oracle::isomorphic(out.algebra, heap_group_convert(catalog::symmetric3())));
  EXPECT_FALSE(oracle::isomorphic(out.algebra, heap_group_convert(catalog::cyclic(6))));
  for (const auto& f : out.retractions) {
    EXPECT_TRUE(oracle::is_hom(f, out.algebra, out.algebra));
    for (Element a = 0; a < 6; ++a) EXPECT_EQ(f[f[a]], f[a]);
  }
}

TEST(HeapOuter, Hypotheses) {
  auto K = heap_group_convert(catalog::cyclic(3)), Y = heap_group_convert(catalog::cyclic(2));
  try {
    heap_outer({Y, K, {{0, 1, 2}, {0, 2, 1}}, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HypothesisViolation);
  }
  // translation k -> k+1 is a heap automorphism, but not a morphism at y0
  EXPECT_THROW(heap_outer({Y, K, {{0, 1, 2}, {1, 2, 0}}, 0}), Error);
  EXPECT_THROW(heap_outer({Y, K, {{0, 1, 2}, {0, 0, 1}}, 0}), Error);
}

TEST(HeapOuter, EveryActionGivesHeap) {
  using namespace catalog;
  std::size_t built = 0, nontrivial = 0;
  const std::vector<FiniteAlgebra> hs{heap_group_convert(cyclic(2)), heap_group_convert(cyclic(3)),
                                      heap_group_convert(klein())};
  for (const auto& K : hs) {
    for (const auto& Y : hs) {
      if (K.size() * Y.size() > 12) continue;
      for (Element y0 = 0; y0 < Y.size(); ++y0) {
        for (const auto& a : heap_actions(Y, K, y0)) {
          auto out = heap_outer({Y, K, a, y0});
          EXPECT_TRUE(heap_laws(out.algebra));
          // the fibre over y0 and the retraction onto {0} x Y decompose it back
          ElementSet R;
          Map lab(out.algebra.size());
          for (Element y = 0; y < Y.size(); ++y) R.push_back(y);
          for (Element p = 0; p < lab.size(); ++p) lab[p] = p % Y.size();
          auto inner = heap_inner_report(out.algebra, R, labels(lab), y0);
          EXPECT_TRUE(inner.all());
          ++built;
          bool trivial = true;
          for (const auto& f : a) {
            for (Element k = 0; k < f.size(); ++k) trivial = trivial && f[k] == k;
          }
          nontrivial += !trivial;
        }
      }
    }
  }
  EXPECT_GT(built, 50u);
  EXPECT_GT(nontrivial, 0u);
}

TEST(HeapDirect, AbelianAlwaysDirect) {
  for (const auto& G : {catalog::cyclic(4), catalog::cyclic(6), catalog::klein()}) {
    auto X = heap_group_convert(G);
    std::size_t seen = 0;
    for (const auto& in : oracle::subalgebras(X)) {
      ElementSet Y = set_of(in);
      for (const auto& c : oracle::congruences(X)) {
        if (!transversal(Y, c)) continue;
        for (Element e : Y) {
          auto r = heap_direct_criterion(X, labels(c), Y, e);
          EXPECT_EQ(r.conditions, (std::array<bool, 5>{true, true, true, true, true}));
          EXPECT_TRUE(r.abstractly_isomorphic);
          ++seen;
        }
      }
    }
    EXPECT_GT(seen, 0u);
  }
}

TEST(HeapDirect, SignDecompositionOfS3) {
  auto X = heap_group_convert(catalog::symmetric3());
  auto r = heap_direct_criterion(X, parse_partition("{{0,3,4},{1,2,5}}"), {0, 1}, 0);
  EXPECT_EQ(r.conditions, (std::array<bool, 5>{}));
  ASSERT_TRUE(r.witness);
  const Element y = (*r.witness)[0], k = (*r.witness)[1];
  EXPECT_NE(T(X, y, 0, k), T(X, k, 0, y));
  EXPECT_FALSE(r.abstractly_isomorphic);

  auto whole = heap_direct_criterion(X, Partition::identity(6), full_set(6), 3);
  EXPECT_EQ(whole.conditions, (std::array<bool, 5>{true, true, true, true, true}));
}

TEST(HeapDirect, Errors) {
  auto X = heap_group_convert(catalog::symmetric3());
  try {
    heap_direct_criterion(X, parse_partition("{{0,3,4},{1,2,5}}"), {0}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DecompositionInvalid);
  }
  EXPECT_THROW(heap_direct_criterion(X, Partition::identity(6), full_set(6), 9), Error);
}

TEST(HeapDirect, AgreesOnEveryDecomposition) {
  std::size_t direct = 0, twisted = 0;
  for (const auto& X : small_heaps()) {
    for (const auto& in : oracle::subalgebras(X)) {
      ElementSet Y = set_of(in);
      for (const auto& c : oracle::congruences(X)) {
        if (!transversal(Y, c)) continue;
        auto r = heap_direct_criterion(X, labels(c), Y, Y.back());
        (r.conditions[0] ? direct : twisted) += 1;
      }
    }
  }
  EXPECT_GT(direct, 0u);
  EXPECT_GT(twisted, 0u);
}

namespace {

FiniteAlgebra truss(const FiniteAlgebra& heap, std::vector<Element> m, std::string name) {
  return FiniteAlgebra(std::move(name), truss_signature(), heap.size(), {heap.table(0), std::move(m)});
}

}  // namespace

TEST(NearTruss, Projections) {
  auto Z2 = heap_group_convert(catalog::cyclic(2));
  auto left = truss(Z2, {0, 0, 1, 1}, "lp");
  auto a = near_truss_axioms(left);
  EXPECT_TRUE(a.heap && a.semigroup && a.left);
  // x([y,z,w]) = x = [x,x,x] and [y,z,w]x = [y,z,w]: both sides distribute
  EXPECT_TRUE(a.right);
}

TEST(NearTruss, LeftNotRight) {
  // x.y = g(x) with g = (0,0,2): idempotent, not a heap endomorphism of Z3
  auto Z3 = heap_group_convert(catalog::cyclic(3));
  auto X = truss(Z3, {0, 0, 0, 0, 0, 0, 2, 2, 2}, "g");
  auto a = near_truss_axioms(X);
  EXPECT_TRUE(a.heap && a.semigroup && a.left);
  EXPECT_FALSE(a.right);
  ASSERT_TRUE(a.right_witness);
  const auto& w = *a.right_witness;
  const auto m = [&](Element p, Element q) { return X.binary(1, p, q); };
  EXPECT_NE(m(T(X, w[1], w[2], w[3]), w[0]), T(X, m(w[1], w[0]), m(w[2], w[0]), m(w[3], w[0])));
  EXPECT_TRUE(is_near_truss(X, TrussSide::Left));
  EXPECT_FALSE(is_near_truss(X, TrussSide::Right));
  EXPECT_TRUE(is_near_truss(opposite_truss(X), TrussSide::Right));
  try {
    require_near_truss(X, TrussSide::Right);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AxiomFailure);
    EXPECT_EQ(e.witness(), w);
  }
}

TEST(NearTruss, OppositeDuality) {
  auto Z3 = heap_group_convert(catalog::cyclic(3));
  std::size_t left = 0;
  oracle::tuples(3, 9, [&](const Map& m) {
    auto X = truss(Z3, m, "x");
    auto a = near_truss_axioms(X), b = near_truss_axioms(opposite_truss(X));
    EXPECT_EQ(a.left, b.right);
    EXPECT_EQ(a.right, b.left);
    EXPECT_EQ(a.semigroup, b.semigroup);
    left += a.left && a.semigroup;
  });
  EXPECT_GT(left, 0u);
}

TEST(NearTruss, RingTrussDecompositions) {
  for (std::size_t n : {4, 6}) {
    auto X = truss_from_ring(catalog::ring_zn(n));
    EXPECT_TRUE(is_near_truss(X, TrussSide::Left));
    EXPECT_TRUE(is_near_truss(X, TrussSide::Right));
    auto idem = oracle::idempotent_endomorphisms(X);
    std::size_t pairs = 0;
    for (const auto& in : oracle::subalgebras(X)) {
      ElementSet Y = set_of(in);
      for (const auto& c : oracle::congruences(X)) {
        auto r = near_truss_report(X, Y, labels(c));
        EXPECT_EQ(r.all(), transversal(Y, c));
        pairs += r.all();
      }
    }
    EXPECT_EQ(pairs, oracle::inner_pair_count(X));
    EXPECT_EQ(pairs, idem.size());
  }
  auto X = truss_from_ring(catalog::ring_zn(4));
  EXPECT_TRUE(near_truss_report(X, full_set(4), Partition::identity(4)).all());
  EXPECT_FALSE(near_truss_report(X, {0, 2}, parse_partition("{{0,2},{1,3}}")).all());
  EXPECT_TRUE(near_truss_report(X, {0}, Partition::all(4)).all());
  try {
    near_truss_report(X, {3}, Partition::all(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotASubalgebra);
  }
}
