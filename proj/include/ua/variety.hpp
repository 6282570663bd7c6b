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
 * Varieties as lists of identities, exhaustive identity checking, and the
 * built-in registry (groups, rings, lattices, semigroups, monoids,
 * digroups, skew braces, heaps, near-trusses).
 */

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/detail/tuples.hpp"
#include "ua/term.hpp"

namespace ua {

/// A named predicate that is not an identity over the signature.
/// `find_violation` returns the first offending tuple, or nullopt.
struct QuasiCondition {
  std::string name;
  std::function<std::optional<std::vector<Element>>(const FiniteAlgebra&)> find_violation;
};

struct VarietySpec {
  std::string name;
  Signature signature;
  std::vector<Identity> identities;
  std::vector<QuasiCondition> quasi_conditions;

  void validate() const {
    for (const auto& id : identities) {
      check_term(id.lhs, signature);
      check_term(id.rhs, signature);
    }
  }
};

struct IdentityWitness {
  /// Index into identities, or into quasi_conditions when `quasi`.
  std::size_t index = 0;
  bool quasi = false;
  std::string condition;
  std::vector<Element> assignment;
};

struct IdentityReport {
  bool passes = true;
  std::optional<IdentityWitness> witness;
};

/// Lexicographically first assignment violating `id`, if any.
inline std::optional<std::vector<Element>> find_identity_violation(const FiniteAlgebra& alg,
                                                                   const Identity& id) {
  CompiledTerm lhs(id.lhs, alg);
  CompiledTerm rhs(id.rhs, alg);
  std::optional<std::vector<Element>> found;
  detail::for_each_tuple(alg.size(), id.var_count, [&](std::span<const Element> t) {
    if (lhs.eval(t) != rhs.eval(t)) {
      found.emplace(t.begin(), t.end());
      return false;
    }
    return true;
  });
  return found;
}

/// Exhaustive check: identities in order, then quasi-conditions. The witness
/// is the first failing condition and, within it, the lexicographically
/// first failing assignment.
inline IdentityReport check_identities(const FiniteAlgebra& alg, const VarietySpec& v) {
  if (!alg.signature().contains(v.signature)) {
    throw Error(Errc::SignatureMismatch,
                "algebra '" + alg.name() + "' lacks operations of variety '" + v.name + "'");
  }
  for (std::size_t i = 0; i < v.identities.size(); ++i) {
    if (auto w = find_identity_violation(alg, v.identities[i])) {
      return {false, IdentityWitness{i, false, to_string(v.identities[i]), std::move(*w)}};
    }
  }
  for (std::size_t i = 0; i < v.quasi_conditions.size(); ++i) {
    if (auto w = v.quasi_conditions[i].find_violation(alg)) {
      return {false, IdentityWitness{i, true, v.quasi_conditions[i].name, std::move(*w)}};
    }
  }
  return {};
}

inline bool satisfies(const FiniteAlgebra& alg, const VarietySpec& v) {
  return check_identities(alg, v).passes;
}

namespace detail {

inline Identity parse_identity(std::string_view lhs, std::string_view rhs,
                               const Signature& sig) {
  return Identity(parse_term(lhs, sig), parse_term(rhs, sig));
}

inline VarietySpec make_variety(std::string name, Signature sig,
                                std::initializer_list<std::pair<std::string_view, std::string_view>> ids) {
  VarietySpec v{std::move(name), std::move(sig), {}, {}};
  for (auto [l, r] : ids) v.identities.push_back(parse_identity(l, r, v.signature));
  return v;
}

inline std::optional<Element> find_identity_element(const FiniteAlgebra& alg, std::size_t op) {
  for (Element e = 0; e < alg.size(); ++e) {
    bool ok = true;
    for (Element x = 0; x < alg.size() && ok; ++x) {
      ok = alg.binary(op, e, x) == x && alg.binary(op, x, e) == x;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

inline QuasiCondition shared_identity_condition() {
  return {"shared identity", [](const FiniteAlgebra& a) -> std::optional<std::vector<Element>> {
            auto star = find_identity_element(a, a.symbol("star", 2));
            auto circ = find_identity_element(a, a.symbol("circ", 2));
            Element one = a.constant(a.symbol("one", 0));
            if (star && circ && *star == one && *circ == one) return std::nullopt;
            return std::vector<Element>{one};
          }};
}

inline QuasiCondition left_skew_brace_condition() {
  return {"lsb", [](const FiniteAlgebra& A) -> std::optional<std::vector<Element>> {
            const auto star = A.symbol("star", 2), circ = A.symbol("circ", 2),
                       sinv = A.symbol("star_inv", 1);
            std::optional<std::vector<Element>> found;
            for_each_tuple(A.size(), 3, [&](std::span<const Element> t) {
              Element a = t[0], b = t[1], c = t[2];
              Element lhs = A.binary(circ, a, A.binary(star, b, c));
              Element rhs = A.binary(star, A.binary(star, A.binary(circ, a, b), A.unary(sinv, a)),
                                     A.binary(circ, a, c));
              if (lhs != rhs) {
                found.emplace(t.begin(), t.end());
                return false;
              }
              return true;
            });
            return found;
          }};
}

inline std::map<std::string, VarietySpec, std::less<>> build_registry() {
  std::map<std::string, VarietySpec, std::less<>> reg;
  auto add = [&](VarietySpec v) {
    v.validate();
    std::string key = v.name;
    reg.emplace(std::move(key), std::move(v));
  };

  const Signature group_sig{{"m", 2}, {"i", 1}, {"e", 0}};
  add(make_variety("group", group_sig,
                   {{"m(m(x0,x1),x2)", "m(x0,m(x1,x2))"},
                    {"m(x0,e)", "x0"},
                    {"m(x0,i(x0))", "e"}}));
  add(make_variety("abelian_group", group_sig,
                   {{"m(m(x0,x1),x2)", "m(x0,m(x1,x2))"},
                    {"m(x0,e)", "x0"},
                    {"m(x0,i(x0))", "e"},
                    {"m(x0,x1)", "m(x1,x0)"}}));
  add(make_variety("semigroup", Signature{{"m", 2}}, {{"m(m(x0,x1),x2)", "m(x0,m(x1,x2))"}}));
  add(make_variety("monoid", Signature{{"m", 2}, {"e", 0}},
                   {{"m(m(x0,x1),x2)", "m(x0,m(x1,x2))"},
                    {"m(e,x0)", "x0"},
                    {"m(x0,e)", "x0"}}));
  add(make_variety("ring", Signature{{"add", 2}, {"neg", 1}, {"zero", 0}, {"mul", 2}},
                   {{"add(add(x0,x1),x2)", "add(x0,add(x1,x2))"},
                    {"add(x0,zero)", "x0"},
                    {"add(x0,neg(x0))", "zero"},
                    {"add(x0,x1)", "add(x1,x0)"},
                    {"mul(mul(x0,x1),x2)", "mul(x0,mul(x1,x2))"},
                    {"mul(x0,add(x1,x2))", "add(mul(x0,x1),mul(x0,x2))"},
                    {"mul(add(x0,x1),x2)", "add(mul(x0,x2),mul(x1,x2))"}}));
  add(make_variety("lattice", Signature{{"join", 2}, {"meet", 2}},
                   {{"join(join(x0,x1),x2)", "join(x0,join(x1,x2))"},
                    {"meet(meet(x0,x1),x2)", "meet(x0,meet(x1,x2))"},
                    {"join(x0,x1)", "join(x1,x0)"},
                    {"meet(x0,x1)", "meet(x1,x0)"},
                    {"join(x0,meet(x0,x1))", "x0"},
                    {"meet(x0,join(x0,x1))", "x0"}}));

  const Signature digroup_sig{
      {"star", 2}, {"circ", 2}, {"star_inv", 1}, {"circ_inv", 1}, {"one", 0}};
  auto digroup = make_variety("digroup", digroup_sig,
                              {{"star(star(x0,x1),x2)", "star(x0,star(x1,x2))"},
                               {"star(x0,one)", "x0"},
                               {"star(x0,star_inv(x0))", "one"},
                               {"circ(circ(x0,x1),x2)", "circ(x0,circ(x1,x2))"},
                               {"circ(x0,one)", "x0"},
                               {"circ(x0,circ_inv(x0))", "one"}});
  digroup.quasi_conditions.push_back(shared_identity_condition());
  auto brace = digroup;
  brace.name = "skew_brace";
  brace.quasi_conditions.push_back(left_skew_brace_condition());
  add(std::move(digroup));
  add(std::move(brace));

  std::initializer_list<std::pair<std::string_view, std::string_view>> heap_ids = {
      {"t(x0,x0,x1)", "x1"},
      {"t(x0,x1,x1)", "x0"},
      {"t(t(x0,x1,x2),x3,x4)", "t(x0,x1,t(x2,x3,x4))"}};
  add(make_variety("heap", Signature{{"t", 3}}, heap_ids));

  const Signature truss_sig{{"t", 3}, {"m", 2}};
  auto left = make_variety("left_near_truss", truss_sig, heap_ids);
  auto right = make_variety("right_near_truss", truss_sig, heap_ids);
  for (auto* v : {&left, &right}) {
    v->identities.push_back(parse_identity("m(m(x0,x1),x2)", "m(x0,m(x1,x2))", truss_sig));
  }
  left.identities.push_back(
      parse_identity("m(x0,t(x1,x2,x3))", "t(m(x0,x1),m(x0,x2),m(x0,x3))", truss_sig));
  right.identities.push_back(
      parse_identity("m(t(x1,x2,x3),x0)", "t(m(x1,x0),m(x2,x0),m(x3,x0))", truss_sig));
  add(std::move(left));
  add(std::move(right));
  return reg;
}

}  // namespace detail

inline const std::map<std::string, VarietySpec, std::less<>>& variety_registry() {
  static const auto reg = detail::build_registry();
  return reg;
}

/// Built-in variety by name; throws UnknownSymbol for unknown names.
inline const VarietySpec& variety(std::string_view name) {
  const auto& reg = variety_registry();
  auto it = reg.find(name);
  if (it == reg.end()) {
    throw Error(Errc::UnknownSymbol, "no built-in variety named '" + std::string(name) + "'");
  }
  return it->second;
}

/// Fails with IdentityFailure carrying the witness.
inline void require_variety(const FiniteAlgebra& alg, const VarietySpec& v) {
  auto r = check_identities(alg, v);
  if (!r.passes) {
    throw Error(Errc::IdentityFailure,
                "'" + alg.name() + "' violates " + r.witness->condition + " of " + v.name +
                    " at " + tuple_string(r.witness->assignment),
                r.witness->assignment);
  }
}

}  // namespace ua
