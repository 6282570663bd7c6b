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

// Acceptance run: one PASS/FAIL line per criterion with wall time and the
// time budget. Every expected value comes from the brute-force oracles in
// tests/support, never from the library under test.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "support/digroups.hpp"
#include "support/oracles.hpp"
#include "ua/ua.hpp"

using namespace ua;
using oracle::Map;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates checks; the first few failures are kept for the report.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << summary << ", " << checks_ << " checks";
    if (failures_) s << ", " << failures_ << " failed: " << notes_;
    return {failures_ == 0, s.str()};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string notes_;
};

ElementSet set_of(const std::vector<bool>& in) {
  ElementSet s;
  for (Element a = 0; a < in.size(); ++a) {
    if (in[a]) s.push_back(a);
  }
  return s;
}

bool transversal(const ElementSet& B, const Map& label) {
  std::vector<std::size_t> hits(label.size(), 0);
  for (Element b : B) ++hits[label[b]];
  for (Element a = 0; a < label.size(); ++a) {
    if (hits[label[a]] != 1) return false;
  }
  return true;
}

std::vector<FiniteAlgebra> decomposition_corpus() {
  using namespace catalog;
  return {cyclic(4),
          cyclic(6),
          klein(),
          symmetric3(),
          chain(3),
          chain(4),
          diamond(),
          pentagon(),
          multiplicative(4),
          left_zero(3),
          heap_group_convert(cyclic(4)),
          heap_group_convert(klein()),
          heap_group_convert(symmetric3())};
}

std::vector<FiniteAlgebra> digroups_up_to(std::size_t n) {
  std::vector<FiniteAlgebra> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& d : oracle::digroups(k)) out.push_back(std::move(d));
  }
  return out;
}

std::vector<FiniteAlgebra> groups_up_to(std::size_t n) {
  std::vector<FiniteAlgebra> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& g : oracle::groups_of_order(k)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Map> permutations(std::size_t n) {
  std::vector<Map> out;
  Map p(n);
  for (Element i = 0; i < n; ++i) p[i] = i;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool preserves(const FiniteAlgebra& K, std::size_t op, const Map& p) {
  for (Element a = 0; a < K.size(); ++a) {
    for (Element b = 0; b < K.size(); ++b) {
      if (p[K.binary(op, a, b)] != K.binary(op, p[a], p[b])) return false;
    }
  }
  return true;
}

// Maps f: Y -> Aut(K, kop) with f(a yop b) = f(b) after f(a) (right action), or
// f(a) after f(b) when left is set.
std::vector<std::vector<Map>> actions(const FiniteAlgebra& Y, const char* yop, const FiniteAlgebra& K,
                                      const char* kop, bool left) {
  const auto ym = Y.symbol(yop, 2), km = K.symbol(kop, 2);
  std::vector<Map> auts;
  for (const auto& p : permutations(K.size())) {
    if (preserves(K, km, p)) auts.push_back(p);
  }
  std::vector<std::vector<Map>> out;
  oracle::tuples(auts.size(), Y.size(), [&](const Map& pick) {
    std::vector<Map> f;
    for (Element y : pick) f.push_back(auts[y]);
    for (Element a = 0; a < Y.size(); ++a) {
      for (Element b = 0; b < Y.size(); ++b) {
        for (Element x = 0; x < K.size(); ++x) {
          const Element composed = left ? f[a][f[b][x]] : f[b][f[a][x]];
          if (f[Y.binary(ym, a, b)][x] != composed) return;
        }
      }
    }
    out.push_back(f);
  });
  return out;
}

// ---------------------------------------------------------------- criteria

Outcome idempotent_counts() {
  using namespace catalog;
  Tally t;
  std::ostringstream s;
  const std::vector<std::pair<FiniteAlgebra, std::size_t>> fixed{
      {cyclic(4), 2}, {cyclic(6), 4}, {symmetric3(), 5}, {klein(), 0}};
  for (const auto& [A, stated] : fixed) {
    const auto oracle_maps = oracle::idempotent_endomorphisms(A);
    std::vector<Map> lib;
    for (const auto& h : idempotent_endomorphisms(A)) lib.push_back(h.map());
    if (stated) t.check(oracle_maps.size() == stated, A.name() + " oracle count");
    t.check(lib == oracle_maps, A.name() + " maps differ from oracle");
    s << (s.str().empty() ? "" : " ") << A.name() << "=" << lib.size();
  }
  return t.outcome(s.str());
}

Outcome pair_bijection() {
  Tally t;
  std::size_t total = 0;
  const auto corpus = decomposition_corpus();
  for (const auto& A : corpus) {
    const std::size_t lib = idempotent_endomorphisms(A).size();
    const std::size_t pairs = oracle::inner_pair_count(A);
    t.check(lib == pairs, A.name() + " idempotents vs pairs");
    t.check(oracle::idempotent_endomorphisms(A).size() == pairs, A.name() + " oracle idempotents vs pairs");
    total += pairs;
  }
  return t.outcome(std::to_string(corpus.size()) + " algebras, " + std::to_string(total) + " decompositions");
}

Outcome equivalences() {
  Tally t;
  std::size_t inner = 0, digroup = 0;
  for (const auto& A : decomposition_corpus()) {
    const auto cons = oracle::congruences(A);
    for (const auto& in : oracle::subalgebras(A)) {
      const ElementSet B = set_of(in);
      if (B.empty()) continue;
      for (const auto& c : cons) {
        const auto r = verify_inner_sdp(A, B, Partition::from_labels(c));
        const bool expect = transversal(B, c);
        t.check(r.a == expect && r.b == expect && r.c == expect && r.d == expect, A.name() + " four-way");
        ++inner;
      }
    }
  }
  for (const auto& D : digroups_up_to(4)) {
    const auto ideals = oracle::ideals(D);
    const auto circ = D.symbol("circ", 2);
    for (const auto& in : oracle::subalgebras(D)) {
      const ElementSet B = set_of(in);
      if (B.empty()) continue;
      for (const auto& I : ideals) {
        std::vector<std::size_t> count(D.size(), 0);
        for (Element b : B) {
          for (Element i : I) ++count[D.binary(circ, b, i)];
        }
        const bool expect = std::all_of(count.begin(), count.end(), [](std::size_t c) { return c == 1; });
        const auto r = digroup_inner_report(D, B, I);
        for (bool c : r.conditions) t.check(c == expect, D.name() + " seven-way");
        ++digroup;
      }
    }
  }
  return t.outcome(std::to_string(inner) + " (B,omega) pairs, " + std::to_string(digroup) + " (B,I) pairs");
}

Outcome roundtrip() {
  Tally t;
  std::size_t n = 0;
  for (const auto& A : decomposition_corpus()) {
    for (const auto& e : idempotent_endomorphisms(A)) {
      const auto r = inner_to_outer(decomposition_from_idempotent(A, e));
      const auto rebuilt = build_outer_product(r.family, r.actions);
      t.check(oracle::is_hom(r.iso, A, rebuilt.algebra) && make_set(r.iso).size() == A.size(),
              A.name() + " roundtrip map");
      t.check(oracle::isomorphic(A, rebuilt.algebra), A.name() + " roundtrip isomorphism");
      ++n;
    }
  }
  return t.outcome(std::to_string(n) + " decompositions rebuilt");
}

Outcome group_instantiation() {
  Tally t;
  const auto z2 = catalog::cyclic(2), z3 = catalog::cyclic(3);
  t.check(oracle::isomorphic(group_semidirect(z3, z2, {{0, 1, 2}, {0, 2, 1}}), catalog::symmetric3()), "S3");
  t.check(oracle::isomorphic(group_semidirect(z3, z2, trivial_action(z3, z2)), catalog::cyclic(6)), "Z6");
  std::size_t data = 0;
  for (const auto& N : groups_up_to(4)) {
    for (const auto& B : groups_up_to(4)) {
      for (const auto& phi : actions(B, "m", N, "m", true)) {
        const auto r = group_data_bijection(N, B, phi);
        t.check(r.conditions.all(), N.name() + " by " + B.name() + " conditions");
        const auto back = group_data_bijection(r.data);
        t.check(back.roundtrip_exact && back.gamma == phi, N.name() + " by " + B.name() + " roundtrip");
        // direct table: (y,k)(y',k') = (yy', k phi_y(k'))
        const auto G = group_from_data(r.data);
        const std::size_t nn = N.size(), nb = B.size(), nm = N.symbol("m", 2), bm = B.symbol("m", 2);
        bool table = G.size() == nn * nb;
        for (Element a = 0; table && a < G.size(); ++a) {
          for (Element b = 0; b < G.size(); ++b) {
            const Element want = B.binary(bm, a / nn, b / nn) * nn + N.binary(nm, a % nn, phi[a / nn][b % nn]);
            table = table && G.binary(G.symbol("m", 2), a, b) == want;
          }
        }
        t.check(table, N.name() + " by " + B.name() + " product table");
        ++data;
      }
    }
  }
  return t.outcome(std::to_string(data) + " actions");
}

Outcome random_digroup_triples() {
  Tally t;
  std::mt19937 rng(20261015);
  const auto pool = digroups_up_to(4);
  const Signature& sig = digroup_signature();
  std::vector<std::pair<Term, Term>> laws;
  for (const auto& v : {"star", "circ"}) {
    const std::string o(v);
    laws.emplace_back(parse_term(o + "(" + o + "(x0,x1),x2)", sig), parse_term(o + "(x0," + o + "(x1,x2))", sig));
  }
  std::size_t direct = 0, twisted = 0;
  for (int round = 0; round < 200; ++round) {
    const auto& Y = pool[rng() % pool.size()];
    const auto& K = pool[rng() % pool.size()];
    const auto ps = actions(Y, "star", K, "star", false);
    const auto pc = actions(Y, "circ", K, "circ", false);
    DigroupActionTriple tr{Y, K, ps[rng() % ps.size()], pc[rng() % pc.size()], {}};
    const bool constant = round % 5 == 0;
    for (Element y = 0; y < Y.size(); ++y) {
      Map p(K.size());
      for (Element i = 0; i < p.size(); ++i) p[i] = i;
      if (y != 0 && !constant) std::shuffle(p.begin() + 1, p.end(), rng);
      tr.Lambda.push_back(p);
    }
    if (constant) {
      for (auto& f : tr.phi_star) f = tr.Lambda[0];
      for (auto& f : tr.phi_circ) f = tr.Lambda[0];
    }
    try {
      const auto out = digroup_outer(tr);
      const auto& D = out.algebra;
      for (const auto& [l, r] : laws) t.check(!oracle::identity_witness(D, l, r, 3), "associativity");
      t.check(satisfies(D, variety("digroup")), "digroup identities");
      // the four pair identities, encoding (y,k) -> y|K| + k
      const std::size_t nk = K.size(), s = D.symbol("star", 2), c = D.symbol("circ", 2);
      auto inv = [](const Map& f) {
        Map g(f.size());
        for (Element i = 0; i < f.size(); ++i) g[f[i]] = i;
        return g;
      };
      bool ppp = true;
      for (Element y = 0; y < Y.size(); ++y) {
        const Map li = inv(tr.Lambda[y]);
        for (Element k = 0; k < nk; ++k) {
          ppp = ppp && D.binary(c, y * nk, k) == y * nk + k;
          ppp = ppp && D.binary(c, k, y * nk) == y * nk + tr.phi_circ[y][k];
          ppp = ppp && D.binary(s, y * nk, k) == y * nk + li[k];
          ppp = ppp && D.binary(s, k, y * nk) == y * nk + li[tr.phi_star[y][k]];
        }
      }
      t.check(ppp, "pair identities");
      // direct iff the three maps are identity-constant, against the componentwise tables
      const FiniteAlgebra P = product(Y, K);
      const bool is_direct = D.tables() == P.tables();
      const bool maps_constant = is_identity_constant(tr.phi_star) && is_identity_constant(tr.phi_circ) &&
                                 is_identity_constant(tr.Lambda);
      t.check(is_direct == maps_constant, "direct criterion");
      t.check(digroup_direct_criterion(tr) == is_direct, "library direct criterion");
      (is_direct ? direct : twisted) += 1;
    } catch (const Error& e) {
      t.check(false, e.what());
    }
  }
  return t.outcome("200 triples, " + std::to_string(direct) + " direct, " + std::to_string(twisted) + " twisted");
}

Outcome lsb_lambda_morphism() {
  Tally t;
  std::size_t braces = 0;
  const auto corpus = digroups_up_to(4);
  for (const auto& D : corpus) {
    const auto s = D.symbol("star", 2), c = D.symbol("circ", 2), si = D.symbol("star_inv", 1);
    bool lsb = true;
    oracle::tuples(D.size(), 3, [&](const Map& v) {
      const Element l = D.binary(c, v[0], D.binary(s, v[1], v[2]));
      const Element r = D.binary(s, D.binary(s, D.binary(c, v[0], v[1]), D.unary(si, v[0])), D.binary(c, v[0], v[2]));
      lsb = lsb && l == r;
    });
    const auto rep = skew_brace_check(D);
    t.check(rep.lsb == lsb, D.name() + " lsb");
    t.check(rep.lambda_morphism == lsb, D.name() + " lambda-morphism flag");
    braces += lsb;
  }
  return t.outcome(std::to_string(corpus.size()) + " digroups, " + std::to_string(braces) + " braces");
}

Outcome commutator_laws() {
  Tally t;
  std::size_t braces = 0, triples = 0;
  for (const auto& A : digroups_up_to(6)) {
    if (!is_skew_brace(A)) continue;
    ++braces;
    const auto ideals = oracle::ideals(A);
    for (const auto& I : ideals) {
      for (const auto& J : ideals) {
        const auto ij = brace_commutator(A, I, J);
        t.check(ij == brace_commutator(A, J, I), A.name() + " symmetry");
        for (const auto& K : ideals) {
          t.check(brace_commutator(A, I, brace_ideal_join(A, J, K)) ==
                      brace_ideal_join(A, ij, brace_commutator(A, I, K)),
                  A.name() + " distributivity");
          ++triples;
        }
      }
    }
  }
  return t.outcome(std::to_string(braces) + " braces, " + std::to_string(triples) + " ideal triples");
}

Outcome heap_suite() {
  Tally t;
  std::size_t groups = 0, decompositions = 0, heaps = 0;
  for (const auto& G : groups_up_to(8)) {
    const auto X = heap_group_convert(G);
    const std::size_t m = G.symbol("m", 2), i = G.symbol("i", 1), n = G.size();
    bool formula = true;
    oracle::tuples(n, 3, [&](const Map& v) {
      formula = formula && X.ternary(0, v[0], v[1], v[2]) == G.binary(m, G.binary(m, v[0], G.unary(i, v[1])), v[2]);
    });
    t.check(formula, G.name() + " heap formula");
    const Element e = G.constant(G.symbol("e", 0));
    t.check(heap_group_convert(X, e).tables() == G.tables(), G.name() + " group roundtrip");
    for (Element b = 0; b < n; ++b) {
      t.check(heap_group_convert(heap_group_convert(X, b)).tables() == X.tables(), G.name() + " heap roundtrip");
    }
    ++groups;
  }
  std::vector<FiniteAlgebra> small;
  for (const auto& G : groups_up_to(6)) small.push_back(heap_group_convert(G));
  for (const auto& X : small) {
    const auto cons = oracle::congruences(X);
    for (const auto& in : oracle::subalgebras(X)) {
      const ElementSet Y = set_of(in);
      if (Y.empty()) continue;
      for (const auto& c : cons) {
        const bool expect = transversal(Y, c);
        const auto r = heap_inner_report(X, Y, Partition::from_labels(c));
        for (bool v : r.conditions) t.check(v == expect, X.name() + " inner conditions");
        if (!expect) continue;
        ++decompositions;
        for (Element e : Y) {
          const auto d = heap_direct_criterion(X, Partition::from_labels(c), Y, e);
          for (bool v : d.conditions) t.check(v == d.conditions[0], X.name() + " direct conditions");
        }
      }
    }
    const auto corr = heap_correspondence(X);
    std::set<std::size_t> hit(corr.image.begin(), corr.image.end());
    t.check(corr.congruences.size() == cons.size() && hit.size() == cons.size(), X.name() + " surjectivity");
    ++heaps;
  }
  return t.outcome(std::to_string(groups) + " groups, " + std::to_string(heaps) + " heaps, " +
                   std::to_string(decompositions) + " decompositions");
}

std::vector<Term> small_terms(std::size_t n) {
  std::vector<Term> leaves{app("e")};
  for (std::size_t i = 0; i < n; ++i) leaves.push_back(var(i));
  std::vector<Term> out = leaves;
  for (const auto& a : leaves) out.push_back(app("i", a));
  for (const auto& a : leaves) {
    for (const auto& b : leaves) out.push_back(app("m", a, b));
  }
  return out;
}

std::vector<std::vector<Term>> small_tuples(std::size_t n) {
  const auto ts = small_terms(n);
  std::vector<std::vector<Term>> out{{}};
  for (const auto& a : ts) out.push_back({a});
  for (const auto& a : ts) {
    for (const auto& b : ts) out.push_back({a, b});
  }
  return out;
}

TupleObject image(const FiniteAlgebra& A, const TupleObject& src, const std::vector<Term>& terms) {
  TupleObject o;
  for (const auto& t : terms) o.elements.push_back(oracle::eval(t, A, src.elements));
  return o;
}

Outcome functoriality() {
  Tally t;
  auto [fam, act] = group_action_family(catalog::cyclic(3), catalog::cyclic(2), {{0, 1, 2}, {0, 2, 1}});
  const auto F = build_outer_product(fam, act, variety("group"));
  const auto& B = F.base();
  std::vector<TupleObject> objects{{{}}};
  for (Element a = 0; a < B.size(); ++a) objects.push_back({{a}});
  for (Element a = 0; a < B.size(); ++a) {
    for (Element b = 0; b < B.size(); ++b) objects.push_back({{a, b}});
  }
  std::size_t pairs = 0;
  for (const auto& src : objects) {
    const auto id = functor_extension(F, TermTupleMorphism::identity(B, src));
    bool is_id = id.source == id.target;
    for (Element x = 0; x < id.table.size(); ++x) is_id = is_id && id.table[x] == x;
    t.check(is_id, "G(id) at " + to_string(src));
    for (const auto& pt : small_tuples(src.size())) {
      const TermTupleMorphism p(B, src, image(B, src, pt), pt);
      const auto gp = functor_extension(F, p);
      for (const auto& qt : small_tuples(p.target().size())) {
        const TermTupleMorphism q(B, p.target(), image(B, p.target(), qt), qt);
        const auto gq = functor_extension(F, q);
        const auto gqp = functor_extension(F, compose_morphisms(q, p));
        bool ok = gqp.source == gp.source && gqp.target == gq.target && gqp.table.size() == gp.table.size();
        for (Element x = 0; ok && x < gp.table.size(); ++x) ok = gqp.table[x] == gq.table[gp.table[x]];
        t.check(ok, "G(q p) at " + to_string(src));
        ++pairs;
      }
    }
  }
  return t.outcome(std::to_string(pairs) + " composable pairs");
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"idempotent counts", 5, idempotent_counts},
      {"idempotents equal transversal pairs", 30, pair_bijection},
      {"decomposition equivalences", 60, equivalences},
      {"inner to outer roundtrip", 30, roundtrip},
      {"group instantiation", 10, group_instantiation},
      {"random digroup triples", 60, random_digroup_triples},
      {"lsb equals lambda-morphism flag", 60, lsb_lambda_morphism},
      {"brace commutator laws", 60, commutator_laws},
      {"heap suite", 60, heap_suite},
      {"enveloping functoriality", 10, functoriality},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget) {
      o.pass = false;
      o.detail += ", over time budget";
    }
    failed += !o.pass;
    std::printf("criterion %zu %s: %s (%s) [%.2fs of %.0fs]\n", i + 1, c.name.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs, c.budget);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
