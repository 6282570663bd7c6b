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
#include "ua/inner_sdp.hpp"

using namespace ua;

namespace {

std::vector<std::vector<Element>> maps_of(const std::vector<Homomorphism>& hs) {
  std::vector<std::vector<Element>> out;
  for (const auto& h : hs) out.push_back(h.map());
  return out;
}

// Transposition (1 2) is element 1 in the catalog labeling.
const ElementSet kS3Pair{0, 1};
const char* kSignKernel = "{{0,3,4},{1,2,5}}";

}  // namespace

TEST(Idempotents, Counts) {
  EXPECT_EQ(idempotent_endomorphisms(catalog::cyclic(4)).size(), 2u);
  EXPECT_EQ(idempotent_endomorphisms(catalog::cyclic(6)).size(), 4u);
  EXPECT_EQ(idempotent_endomorphisms(catalog::symmetric3()).size(), 5u);
  EXPECT_EQ(idempotent_endomorphisms(catalog::klein()).size(), 8u);
  EXPECT_THROW(idempotent_endomorphisms(catalog::dihedral(5)), Error);
}

TEST(Idempotents, MatchOracleExactly) {
  for (const auto& A : {catalog::cyclic(4), catalog::klein(), catalog::symmetric3(), catalog::chain(3),
                        catalog::diamond(), catalog::multiplicative(4), catalog::left_zero(3)}) {
    EXPECT_EQ(maps_of(idempotent_endomorphisms(A)), oracle::idempotent_endomorphisms(A)) << A.name();
  }
}

TEST(Idempotents, CyclicSixMultipliers) {
  auto maps = maps_of(idempotent_endomorphisms(catalog::cyclic(6)));
  std::vector<std::vector<Element>> expected;
  for (Element k : {0, 1, 3, 4}) {
    std::vector<Element> m(6);
    for (Element x = 0; x < 6; ++x) m[x] = k * x % 6;
    expected.push_back(m);
  }
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(maps, expected);
}

TEST(Decomposition, FromIdempotent) {
  auto z4 = catalog::cyclic(4);
  auto id = decomposition_from_idempotent(z4, Homomorphism::identity(z4));
  EXPECT_EQ(id.B, full_set(4));
  EXPECT_TRUE(id.omega.is_identity());
  auto zero = decomposition_from_idempotent(z4, Homomorphism(z4, z4, {0, 0, 0, 0}));
  EXPECT_EQ(zero.B, ElementSet{0});
  EXPECT_TRUE(zero.omega.is_all());

  auto s3 = catalog::symmetric3();
  Homomorphism retract(s3, s3, {0, 1, 1, 0, 0, 1});
  auto dec = decomposition_from_idempotent(s3, retract);
  EXPECT_EQ(dec.B, kS3Pair);
  EXPECT_EQ(dec.omega, parse_partition(kSignKernel));
  ASSERT_EQ(dec.pointed_partition.size(), 2u);
  EXPECT_EQ(dec.pointed_partition[0].basepoint, 0u);
  EXPECT_EQ(dec.pointed_partition[1].basepoint, 1u);
  EXPECT_TRUE(is_graded(dec));
}

TEST(Decomposition, RejectsNonIdempotent) {
  auto z4 = catalog::cyclic(4);
  try {
    decomposition_from_idempotent(z4, Homomorphism(z4, z4, {0, 3, 2, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotIdempotent);
  }
}

TEST(VerifyInner, Examples) {
  auto s3 = catalog::symmetric3();
  auto r = verify_inner_sdp(s3, kS3Pair, parse_partition(kSignKernel));
  EXPECT_TRUE(r.a && r.b && r.c && r.d);
  ASSERT_TRUE(r.decomposition);

  auto z4 = catalog::cyclic(4);
  auto f = verify_inner_sdp(z4, {0, 2}, parse_partition("{{0,2},{1,3}}"));
  EXPECT_TRUE(f.subalgebra && f.congruence);
  EXPECT_FALSE(f.a || f.b || f.c || f.d);
  EXPECT_FALSE(f.decomposition);

  auto t = verify_inner_sdp(z4, full_set(4), Partition::identity(4));
  EXPECT_TRUE(t.a && t.b && t.c && t.d);
}

TEST(VerifyInner, PremisesReportedNotThrown) {
  auto z4 = catalog::cyclic(4);
  auto r = verify_inner_sdp(z4, {0, 1}, Partition::identity(4));
  EXPECT_FALSE(r.subalgebra);
  EXPECT_FALSE(r.a);
  auto q = verify_inner_sdp(z4, {0}, parse_partition("{{0,1},{2,3}}"));
  EXPECT_FALSE(q.congruence);
}

TEST(VerifyInner, BijectionWithIdempotents) {
  for (const auto& A : {catalog::cyclic(4), catalog::klein(), catalog::symmetric3(), catalog::chain(3),
                        catalog::diamond(), catalog::multiplicative(4), catalog::left_zero(3)}) {
    std::size_t holds = 0;
    for (const auto& B : all_subalgebras(A)) {
      for (const auto& w : all_congruences(A)) {
        auto r = verify_inner_sdp(A, B, w);
        if (r.a) {
          ++holds;
          EXPECT_TRUE(is_graded(*r.decomposition));
        }
      }
    }
    EXPECT_EQ(holds, idempotent_endomorphisms(A).size()) << A.name();
    EXPECT_EQ(holds, oracle::inner_pair_count(A)) << A.name();
  }
}

TEST(TotallyIdempotent, Examples) {
  EXPECT_EQ(totally_idempotent_elements(catalog::symmetric3()), ElementSet{0});
  EXPECT_EQ(totally_idempotent_elements(catalog::diamond()), full_set(5));
  EXPECT_EQ(totally_idempotent_elements(catalog::multiplicative(2)), (ElementSet{0, 1}));
}

TEST(ConstantEndomorphisms, Examples) {
  EXPECT_EQ(constant_endomorphisms(catalog::cyclic(5)).size(), 1u);
  EXPECT_EQ(constant_endomorphisms(catalog::chain(2)).size(), 2u);
  // Every finite semigroup has an idempotent; a fixed-point-free unary
  // operation is the smallest algebra with none.
  auto swap = catalog::semigroup("z2add", 2, [](Element a, Element b) { return (a + b) % 2; });
  EXPECT_EQ(constant_endomorphisms(swap).size(), 1u);
  auto shift = FiniteAlgebra("shift", Signature{{"s", 1}}, 2, {{1, 0}});
  EXPECT_EQ(constant_endomorphisms(shift).size(), 0u);
}

TEST(Poset, CyclicFourIsChain) {
  auto P = idempotent_poset(catalog::cyclic(4));
  ASSERT_EQ(P.elements.size(), 2u);
  EXPECT_EQ(P.elements[P.greatest], Homomorphism::identity(catalog::cyclic(4)));
  EXPECT_TRUE(P.leq[0][1]);
  EXPECT_FALSE(P.leq[1][0]);
}

TEST(Poset, SymmetricThree) {
  auto s3 = catalog::symmetric3();
  auto P = idempotent_poset(s3);
  ASSERT_EQ(P.elements.size(), 5u);
  std::size_t trivial = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    if (P.elements[i].is_constant()) trivial = i;
  }
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_TRUE(P.leq[trivial][i]);
    EXPECT_TRUE(P.leq[i][P.greatest]);
  }
  for (std::size_t i = 0; i < 5; ++i) {
    if (P.elements[i].map() != std::vector<Element>{0, 1, 1, 0, 0, 1}) continue;
    ASSERT_EQ(P.classes[i].size(), 2u);
    EXPECT_TRUE(P.classes[i][0].subalgebra);
    EXPECT_FALSE(P.classes[i][1].subalgebra);
  }
}

TEST(Poset, LatticesAndSemigroups) {
  for (const auto& A : {catalog::chain(3), catalog::diamond(), catalog::multiplicative(4), catalog::left_zero(3)}) {
    EXPECT_NO_THROW(idempotent_poset(A)) << A.name();
  }
}
