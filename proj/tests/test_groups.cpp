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
#include "ua/groups.hpp"

using namespace ua;

namespace {

using Action = std::vector<std::vector<Element>>;

std::size_t commuting_pairs(const FiniteAlgebra& g) {
  std::size_t m = g.symbol("m", 2), c = 0;
  for (Element a = 0; a < g.size(); ++a) {
    for (Element b = 0; b < g.size(); ++b) c += g.binary(m, a, b) == g.binary(m, b, a);
  }
  return c;
}

// Product table on pairs y*|N| + k, written out directly.
std::vector<Element> semidirect_table(const FiniteAlgebra& N, const FiniteAlgebra& B, const Action& phi) {
  std::size_t nm = N.symbol("m", 2), bm = B.symbol("m", 2), n = N.size(), total = n * B.size();
  std::vector<Element> t;
  for (Element a = 0; a < total; ++a) {
    for (Element b = 0; b < total; ++b) {
      Element k = a % n, y = a / n, k2 = b % n, y2 = b / n;
      t.push_back(B.binary(bm, y, y2) * n + N.binary(nm, k, phi[y][k2]));
    }
  }
  return t;
}

std::vector<oracle::Map> subgroups(const FiniteAlgebra& G) {
  std::vector<oracle::Map> out;
  for (const auto& mask : oracle::subalgebras(G)) {
    oracle::Map s;
    for (Element a = 0; a < G.size(); ++a) {
      if (mask[a]) s.push_back(a);
    }
    if (!s.empty()) out.push_back(s);
  }
  return out;
}

bool oracle_complement(const FiniteAlgebra& G, const oracle::Map& K, const oracle::Map& Y) {
  std::size_t m = G.symbol("m", 2);
  std::set<Element> prods;
  for (Element k : K) {
    for (Element y : Y) prods.insert(G.binary(m, k, y));
  }
  return prods.size() == G.size() && K.size() * Y.size() == G.size();
}

}  // namespace

TEST(GroupSemidirect, Examples) {
  auto z2 = catalog::cyclic(2), z3 = catalog::cyclic(3), z4 = catalog::cyclic(4), v = catalog::klein();
  auto s3 = group_semidirect(z3, z2, {{0, 1, 2}, {0, 2, 1}});
  EXPECT_TRUE(oracle::isomorphic(s3, catalog::symmetric3()));
  EXPECT_TRUE(oracle::isomorphic(group_semidirect(z3, z2, trivial_action(z3, z2)), catalog::cyclic(6)));
  EXPECT_TRUE(oracle::isomorphic(group_semidirect(z4, z2, {{0, 1, 2, 3}, {0, 3, 2, 1}}), catalog::dihedral(4)));
  auto a4 = group_semidirect(v, z3, {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}});
  EXPECT_EQ(a4.size(), 12u);
  EXPECT_EQ(commuting_pairs(a4), 48u);
}

TEST(GroupSemidirect, MatchesDirectFormula) {
  auto z2 = catalog::cyclic(2), z3 = catalog::cyclic(3), z4 = catalog::cyclic(4), v = catalog::klein();
  struct Case {
    FiniteAlgebra N, B;
    Action phi;
  };
  std::vector<Case> cases{{z3, z2, {{0, 1, 2}, {0, 2, 1}}},
                          {z4, z2, {{0, 1, 2, 3}, {0, 3, 2, 1}}},
                          {v, z2, {{0, 1, 2, 3}, {0, 2, 1, 3}}},
                          {v, z3, {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}}};
  for (const auto& c : cases) {
    auto g = group_semidirect(c.N, c.B, c.phi);
    EXPECT_EQ(g.table(g.symbol("m", 2)), semidirect_table(c.N, c.B, c.phi));
  }
}

TEST(GroupSemidirect, RejectsBadActions) {
  auto z2 = catalog::cyclic(2), z3 = catalog::cyclic(3);
  try {
    group_semidirect(z3, z2, {{0, 1, 2}, {0, 0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAutomorphism);
  }
  try {
    group_semidirect(z3, z3, {{0, 1, 2}, {0, 2, 1}, {0, 1, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAnAction);
  }
}

TEST(GroupInner, Examples) {
  auto s3 = catalog::symmetric3();
  EXPECT_TRUE(group_inner_equivalences(s3, {0, 3, 4}, {0, 1}).all());
  EXPECT_TRUE(group_inner_equivalences(s3, {0, 3, 4}, {0, 5}).all());
  auto z4 = catalog::cyclic(4);
  auto r = group_inner_equivalences(z4, {0, 2}, {0, 2});
  EXPECT_FALSE(r.a || r.b || r.c || r.d || r.e || r.f);
  EXPECT_FALSE(group_inner_equivalences(z4, {0, 2}, {0}).all());
  EXPECT_TRUE(group_inner_equivalences(z4, {0}, {0, 1, 2, 3}).all());
  try {
    group_inner_equivalences(s3, {0, 1}, {0, 3, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotNormal);
  }
  try {
    group_inner_equivalences(s3, {0, 3, 4}, {0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSubgroup);
  }
}

TEST(GroupInner, AgreesWithComplementScan) {
  for (const auto& G : {catalog::symmetric3(), catalog::cyclic(4), catalog::klein(), catalog::cyclic(6),
                        catalog::dihedral(4), catalog::quaternion()}) {
    auto subs = subgroups(G);
    std::size_t found = 0;
    for (const auto& K : subs) {
      if (!is_normal_subgroup(G, K)) continue;
      for (const auto& Y : subs) {
        bool r = group_inner_equivalences(G, K, Y).all();
        EXPECT_EQ(r, oracle_complement(G, K, Y)) << G.name();
        found += r;
      }
    }
    if (G.name() == "q8") {
      EXPECT_EQ(found, 2u);
    }
  }
}

TEST(GroupData, FromDecompositionOfS3) {
  auto s3 = catalog::symmetric3();
  auto d = group_data_from_decomposition(s3, {0, 3, 4}, {0, 1});
  EXPECT_TRUE(group_data_conditions(d).all());
  auto r = group_data_bijection(d);
  EXPECT_TRUE(r.gamma_is_action);
  EXPECT_TRUE(r.roundtrip_exact);
  EXPECT_NE(r.gamma[1], (std::vector<Element>{0, 1, 2}));
  EXPECT_TRUE(oracle::isomorphic(group_from_data(d), s3));
}

TEST(GroupData, ActionRoundTrip) {
  auto z2 = catalog::cyclic(2), z3 = catalog::cyclic(3), v = catalog::klein();
  for (const auto& [N, B, phi] : std::vector<std::tuple<FiniteAlgebra, FiniteAlgebra, Action>>{
           {z3, z2, {{0, 1, 2}, {0, 2, 1}}}, {z3, z2, {{0, 1, 2}, {0, 1, 2}}},
           {v, z3, {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}}}) {
    auto r = group_data_bijection(N, B, phi);
    EXPECT_TRUE(r.conditions.all());
    auto back = group_data_bijection(r.data);
    EXPECT_TRUE(back.roundtrip_exact);
    EXPECT_EQ(back.gamma, phi);
    EXPECT_EQ(group_from_data(r.data).table(0), semidirect_table(N, B, phi));
  }
}

TEST(GroupData, ViolationsCarryWitness) {
  auto d = group_data_bijection(catalog::cyclic(3), catalog::cyclic(2), {{0, 1, 2}, {0, 2, 1}}).data;
  auto broken = d;
  broken.g[1][0 * 3 + 1] = 2;  // g_(1,b=1)(1, 1)
  auto c = group_data_conditions(broken);
  EXPECT_FALSE(c.c2);
  try {
    group_data_bijection(broken);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ConditionViolation);
    EXPECT_TRUE(e.witness().has_value());
  }
  broken = d;
  broken.h[1][1] = 0;
  c = group_data_conditions(broken);
  EXPECT_TRUE(c.c1 && c.c2);
  EXPECT_FALSE(c.c3);
  EXPECT_EQ(c.failed, "(3)");
}

TEST(GroupData, NotEveryDataComesFromAnAction) {
  // Trivial base, N = Z4 but g is the Klein law: (1)-(3) hold, the
  // recovered action is trivial and does not reproduce g.
  auto z4 = catalog::cyclic(4), one = catalog::cyclic(1);
  GroupSDPData d{z4, one, {{}}, {{0, 1, 2, 3}}, 0};
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) d.g[0].push_back(a ^ b);
  }
  auto r = group_data_bijection(d);
  EXPECT_TRUE(r.conditions.all());
  EXPECT_TRUE(r.gamma_is_action);
  EXPECT_FALSE(r.roundtrip_exact);
  EXPECT_TRUE(oracle::isomorphic(group_from_data(d), catalog::klein()));
}

TEST(RingSemidirect, Example) {
  auto z2 = catalog::ring_zn(2);
  RingActionPair p{z2, z2, {{0, 0}, {0, 1}}, {{0, 0}, {0, 1}}};
  auto r = ring_semidirect(p);
  EXPECT_EQ(r.size(), 4u);
  std::size_t mul = r.symbol("mul", 2);
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) {
      Element k = a % 2, s = a / 2, k2 = b % 2, s2 = b / 2;
      Element kk = ((k * k2) + p.lambda[s][k2] + p.rho[s2][k]) % 2;
      EXPECT_EQ(r.binary(mul, a, b), (s * s2) * 2 + kk);
    }
  }
  RingActionPair zero{z2, z2, {{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}};
  EXPECT_TRUE(oracle::isomorphic(ring_semidirect(zero), product(z2, z2)));
}

TEST(RingSemidirect, BrokenRho) {
  auto z2 = catalog::ring_zn(2);
  RingActionPair p{z2, z2, {{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}};
  try {
    ring_semidirect(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CompatibilityViolation);
    EXPECT_NE(std::string(e.what()).find("rho"), std::string::npos);
  }
}

TEST(RingSemidirect, AcceptedPairsGiveRings) {
  auto z2 = catalog::ring_zn(2), z3 = catalog::ring_zn(3);
  std::size_t accepted = 0;
  for (const auto& [K, S] : std::vector<std::pair<FiniteAlgebra, FiniteAlgebra>>{{z2, z2}, {z2, z3}}) {
    const std::size_t n = K.size();
    const std::size_t m = S.size();
    oracle::tuples(oracle::ipow(n, n), 2 * m, [&](const oracle::Map& code) {
      auto decode = [&](Element c) {
        std::vector<Element> f(n);
        for (std::size_t i = 0; i < n; ++i, c /= n) f[i] = c % n;
        return f;
      };
      RingActionPair p{K, S, {}, {}};
      for (std::size_t x = 0; x < m; ++x) {
        p.lambda.push_back(decode(code[x]));
        p.rho.push_back(decode(code[m + x]));
      }
      try {
        auto r = ring_semidirect(p);
        ++accepted;
        for (const auto& id : variety("ring").identities) {
          EXPECT_FALSE(oracle::identity_witness(r, id.lhs, id.rhs, id.var_count));
        }
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::CompatibilityViolation);
      }
    });
  }
  EXPECT_GT(accepted, 1u);
}
