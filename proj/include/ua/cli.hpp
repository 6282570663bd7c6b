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
 * The `ua` command line. Exit status: 0 when the computed property holds or a
 * construction succeeds, 1 when it is false (a witness is printed), 2 on bad
 * input.
 */

#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ua/brace.hpp"
#include "ua/congruence.hpp"
#include "ua/envcat.hpp"
#include "ua/groups.hpp"
#include "ua/heap.hpp"
#include "ua/inner_sdp.hpp"
#include "ua/io.hpp"
#include "ua/truss.hpp"

namespace ua::cli {

inline const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v{"check",       "congruences", "idempotents", "decompose",
                                          "outer",       "group-sdp",   "ring-sdp",    "digroup-sdp",
                                          "brace",       "heap",        "truss",       "envcat"};
  return v;
}

/// 1 for computed falsity carrying a witness, 2 for everything else.
inline int exit_code(Errc code) {
  switch (code) {
    case Errc::IdentityFailure:
    case Errc::AxiomFailure:
    case Errc::SectionViolation:
    case Errc::ConditionViolation:
    case Errc::CompatibilityViolation:
      return 1;
    default:
      return 2;
  }
}

namespace detail {

inline const char* yes(bool b) { return b ? "true" : "false"; }

inline std::string join(const std::vector<Element>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

inline std::string set_string(const ElementSet& s) { return "{" + join(s, ",") + "}"; }

class Session {
 public:
  Session(std::ostream& out, std::size_t cap, const std::optional<std::size_t>& cap_flag)
      : out_(out), cap_(cap), flag_(cap_flag) {}

  std::ostream& out() { return out_; }
  /// --size-cap wins over UA_SIZE_CAP.
  std::size_t cap() const { return flag_.value_or(cap_); }
  Workspace& ws() { return ws_; }

  const FiniteAlgebra& algebra(const std::string& ref) { return ws_.algebra(ref); }

  /// Built-in name, or `<file>#<name>` of a variety block.
  VarietySpec variety_spec(const std::string& ref) {
    if (ref.find('#') == std::string::npos && !std::filesystem::exists(ref)) return variety(ref);
    auto v = ws_.variety_spec(ref);
    v.validate();
    return v;
  }

  std::vector<std::vector<Element>> maps(const std::string& ref) { return ws_.map_list(ref).tables; }

 private:
  std::ostream& out_;
  std::size_t cap_;
  const std::optional<std::size_t>& flag_;
  Workspace ws_;
};

inline int report_identities(Session& s, const FiniteAlgebra& A, const VarietySpec& v) {
  auto r = check_identities(A, v);
  if (r.passes) {
    s.out() << A.name() << " satisfies " << v.name << "\n";
    return 0;
  }
  s.out() << A.name() << " fails " << r.witness->condition << "\n" << tuple_string(r.witness->assignment) << "\n";
  return 1;
}

inline int flags(Session& s, const std::vector<std::pair<std::string, bool>>& rows, bool result) {
  for (const auto& [name, v] : rows) s.out() << name << ": " << yes(v) << "\n";
  return result ? 0 : 1;
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using detail::yes;
  std::size_t cap = kDefaultEnumerationCap;
  if (const char* env = std::getenv("UA_SIZE_CAP")) {
    try {
      cap = std::stoul(env);
    } catch (const std::exception&) {
      err << "ParseError: UA_SIZE_CAP is not a number\n";
      return 2;
    }
  }

  // the verb is the first argument that is neither an option nor its value
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--size-cap") {
      ++i;
      continue;
    }
    if (args[i].rfind("-", 0) == 0) continue;
    if (std::find(verbs().begin(), verbs().end(), args[i]) == verbs().end()) {
      err << "UnknownVerb: '" << args[i] << "'\n";
      return 2;
    }
    break;
  }

  CLI::App app{"Finite universal algebra: decompositions and semidirect products", "ua"};
  app.fallthrough();
  app.require_subcommand(1);
  std::optional<std::size_t> cap_opt;
  app.add_option("--size-cap", cap_opt, "Enumeration size cap (also UA_SIZE_CAP)");

  detail::Session* session = nullptr;
  int code = 0;
  std::string ref, variety_ref, b_text, omega_text, action_ref, phi_ref, n_ref, lam_ref, rho_ref, y_ref, k_ref,
      pstar_ref, pcirc_ref, i_text, j_text, y_text, term_text, object_text, side = "left";
  std::optional<Element> e_opt;

  auto* check = app.add_subcommand("check", "Check the identities of a variety");
  check->add_option("algebra", ref, "<file>#<name>")->required();
  check->add_option("--variety", variety_ref, "Built-in name or <file>#<name>")->required();
  check->callback([&] {
    auto& s = *session;
    code = detail::report_identities(s, s.algebra(ref), s.variety_spec(variety_ref));
  });

  auto* cong = app.add_subcommand("congruences", "List all congruences");
  cong->add_option("algebra", ref)->required();
  cong->callback([&] {
    auto& s = *session;
    auto all = all_congruences(s.algebra(ref), s.cap());
    s.out() << all.size() << "\n";
    for (const auto& p : all) s.out() << to_string(p) << "\n";
  });

  auto* idem = app.add_subcommand("idempotents", "List idempotent endomorphisms");
  idem->add_option("algebra", ref)->required();
  idem->callback([&] {
    auto& s = *session;
    auto all = idempotent_endomorphisms(s.algebra(ref), s.cap());
    s.out() << all.size() << "\n";
    for (const auto& h : all) s.out() << to_string(h) << "\n";
  });

  auto* dec = app.add_subcommand("decompose", "Inner semidirect product report for (B, omega)");
  dec->add_option("algebra", ref)->required();
  dec->add_option("--B", b_text, "Subalgebra, e.g. 0,3")->required();
  dec->add_option("--omega", omega_text, "Partition, e.g. {{0,3},{1,2}}")->required();
  dec->callback([&] {
    auto& s = *session;
    const auto& A = s.algebra(ref);
    auto r = verify_inner_sdp(A, parse_element_set(b_text), parse_partition(omega_text, A.size()));
    code = detail::flags(s,
                         {{"subalgebra", r.subalgebra},
                          {"congruence", r.congruence},
                          {"a", r.a},
                          {"b", r.b},
                          {"c", r.c},
                          {"d", r.d}},
                         r.holds());
  });

  auto* outer = app.add_subcommand("outer", "Build the outer semidirect product of an action file");
  outer->add_option("--action", action_ref, "Action file")->required();
  outer->add_option("--variety", variety_ref, "Variety the product must satisfy");
  outer->callback([&] {
    auto& s = *session;
    const auto& a = s.ws().action(action_ref);
    std::optional<VarietySpec> v;
    if (!variety_ref.empty()) v = s.variety_spec(variety_ref);
    auto F = build_outer_product(a.family, a.actions, v ? &*v : nullptr);
    F.algebra.set_name(a.name);
    s.out() << emit_algebra(F.algebra);
  });

  auto* gsdp = app.add_subcommand("group-sdp", "Semidirect product N x| B of groups");
  gsdp->add_option("--N", n_ref)->required();
  gsdp->add_option("--B", b_text)->required();
  gsdp->add_option("--phi", phi_ref, "Maps file, one automorphism of N per element of B")->required();
  gsdp->callback([&] {
    auto& s = *session;
    s.out() << emit_algebra(group_semidirect(s.algebra(n_ref), s.algebra(b_text), s.maps(phi_ref)));
  });

  auto* rsdp = app.add_subcommand("ring-sdp", "Semidirect product of rings from a pair (lambda, rho)");
  rsdp->add_option("--K", k_ref)->required();
  rsdp->add_option("--S", y_ref)->required();
  rsdp->add_option("--lambda", lam_ref)->required();
  rsdp->add_option("--rho", rho_ref)->required();
  rsdp->callback([&] {
    auto& s = *session;
    RingActionPair p{s.algebra(k_ref), s.algebra(y_ref), s.maps(lam_ref), s.maps(rho_ref)};
    s.out() << emit_algebra(ring_semidirect(p));
  });

  auto* dsdp = app.add_subcommand("digroup-sdp", "Semidirect product of digroups");
  dsdp->add_option("--Y", y_ref)->required();
  dsdp->add_option("--K", k_ref)->required();
  dsdp->add_option("--phi-star", pstar_ref)->required();
  dsdp->add_option("--phi-circ", pcirc_ref)->required();
  dsdp->add_option("--Lambda", lam_ref)->required();
  dsdp->callback([&] {
    auto& s = *session;
    DigroupActionTriple t{s.algebra(y_ref), s.algebra(k_ref), s.maps(pstar_ref), s.maps(pcirc_ref), s.maps(lam_ref)};
    auto d = digroup_outer(t);
    s.out() << emit_algebra(d.algebra);
    s.out() << "# pair identities: " << yes(d.ppp[0]) << " " << yes(d.ppp[1]) << " " << yes(d.ppp[2]) << " "
            << yes(d.ppp[3]) << "\n";
    s.out() << "# direct: " << yes(digroup_is_canonically_direct(t)) << "\n";
  });

  auto* brace = app.add_subcommand("brace", "Skew brace checks");
  brace->require_subcommand(1);
  auto* bcheck = brace->add_subcommand("check", "Brace identity");
  bcheck->add_option("algebra", ref)->required();
  bcheck->callback([&] {
    auto& s = *session;
    auto r = skew_brace_check(s.algebra(ref));
    s.out() << "skew brace: " << yes(r.lsb) << "\n";
    if (r.witness) s.out() << tuple_string(*r.witness) << "\n";
    code = r.lsb ? 0 : 1;
  });
  auto* bcomm = brace->add_subcommand("commutator", "Commutator of two ideals");
  bcomm->add_option("algebra", ref)->required();
  bcomm->add_option("--I", i_text)->required();
  bcomm->add_option("--J", j_text)->required();
  bcomm->callback([&] {
    auto& s = *session;
    s.out() << detail::set_string(brace_commutator(s.algebra(ref), parse_element_set(i_text), parse_element_set(j_text)))
            << "\n";
  });
  auto* bcenter = brace->add_subcommand("center", "Center");
  bcenter->add_option("algebra", ref)->required();
  bcenter->callback([&] {
    auto& s = *session;
    s.out() << detail::set_string(brace_center(s.algebra(ref), s.cap())) << "\n";
  });
  auto* brefl = brace->add_subcommand("reflection", "Largest skew brace quotient");
  brefl->add_option("algebra", ref)->required();
  brefl->callback([&] {
    auto& s = *session;
    auto r = skew_brace_reflection(s.algebra(ref));
    s.out() << "# ideal " << detail::set_string(r.ideal) << "\n" << emit_algebra(r.quotient.algebra);
  });

  auto* heap = app.add_subcommand("heap", "Heaps");
  heap->require_subcommand(1);
  auto* hcheck = heap->add_subcommand("check", "Heap axioms");
  hcheck->add_option("algebra", ref)->required();
  hcheck->callback([&] { code = detail::report_identities(*session, session->algebra(ref), variety("heap")); });
  auto* hconv = heap->add_subcommand("convert", "Group to heap, or heap to group at --base");
  hconv->add_option("algebra", ref)->required();
  hconv->add_option("--base", e_opt, "Identity of the group built from a heap");
  hconv->callback([&] {
    auto& s = *session;
    const auto& A = s.algebra(ref);
    if (A.signature() == heap_signature()) {
      s.out() << emit_algebra(heap_group_convert(A, e_opt.value_or(0)));
    } else {
      s.out() << emit_algebra(heap_group_convert(A));
    }
  });
  auto* hdec = heap->add_subcommand("decompose", "Decomposition report for (Y, omega)");
  hdec->add_option("algebra", ref)->required();
  hdec->add_option("--Y", y_text)->required();
  hdec->add_option("--omega", omega_text)->required();
  hdec->add_option("--e", e_opt, "Base element of Y");
  hdec->callback([&] {
    auto& s = *session;
    const auto& X = s.algebra(ref);
    const auto Y = parse_element_set(y_text);
    const auto omega = parse_partition(omega_text, X.size());
    auto r = heap_inner_report(X, Y, omega, e_opt);
    const char* names[] = {"a", "b", "c", "d", "e"};
    for (std::size_t i = 0; i < 5; ++i) s.out() << names[i] << ": " << yes(r.conditions[i]) << "\n";
    code = r.all() ? 0 : 1;
    if (!r.all()) return;
    s.out() << "K: " << detail::set_string(r.K) << "\n";
    for (std::size_t i = 0; i < Y.size(); ++i) {
      std::vector<Element> f;
      for (Element k : r.action->alpha[i]) f.push_back(r.K[k]);
      s.out() << "alpha " << Y[i] << ": " << detail::join(f) << "\n";
    }
    auto d = heap_direct_criterion(X, omega, Y, r.e);
    s.out() << "direct: " << yes(d.conditions[0]) << "\n";
    if (d.witness) s.out() << "commutation fails at " << tuple_string(*d.witness) << "\n";
  });

  auto* truss = app.add_subcommand("truss", "Near-trusses");
  truss->require_subcommand(1);
  auto* tcheck = truss->add_subcommand("check", "Near-truss axioms");
  tcheck->add_option("algebra", ref)->required();
  tcheck->callback([&] {
    auto& s = *session;
    auto a = near_truss_axioms(s.algebra(ref));
    s.out() << "heap: " << yes(a.heap) << "\nsemigroup: " << yes(a.semigroup) << "\nleft: " << yes(a.left)
            << "\nright: " << yes(a.right) << "\n";
    if (a.left_witness) s.out() << "left fails at " << tuple_string(*a.left_witness) << "\n";
    if (a.right_witness) s.out() << "right fails at " << tuple_string(*a.right_witness) << "\n";
    code = a.heap && a.semigroup && (a.left || a.right) ? 0 : 1;
  });
  auto* tdec = truss->add_subcommand("decompose", "Decomposition report for (Y, omega)");
  tdec->add_option("algebra", ref)->required();
  tdec->add_option("--Y", y_text)->required();
  tdec->add_option("--omega", omega_text)->required();
  tdec->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  tdec->callback([&] {
    auto& s = *session;
    const auto& X = s.algebra(ref);
    auto r = near_truss_report(X, parse_element_set(y_text), parse_partition(omega_text, X.size()),
                               side == "left" ? TrussSide::Left : TrussSide::Right);
    const char* names[] = {"a", "b", "c", "d"};
    for (std::size_t i = 0; i < 4; ++i) s.out() << names[i] << ": " << yes(r.conditions[i]) << "\n";
    code = r.all() ? 0 : 1;
  });

  auto* env = app.add_subcommand("envcat", "Table of a term under the functor of an outer product");
  env->add_option("--action", action_ref)->required();
  env->add_option("--object", object_text, "Tuple of base elements, e.g. 0,1")->required();
  env->add_option("--term", term_text, "Term in x0, x1, ...")->required();
  env->callback([&] {
    auto& s = *session;
    const auto& a = s.ws().action(action_ref);
    auto F = build_outer_product(a.family, a.actions);
    std::vector<Element> elems;
    for (const auto& part : CLI::detail::split(object_text, ',')) {
      if (!part.empty()) elems.push_back(std::stoul(part));
    }
    TupleObject obj{elems};
    auto p = functor_extension(F, obj);
    auto table = functor_extension(F, parse_term(term_text, F.base().signature()), obj);
    s.out() << "object " << to_string(obj) << "\nradix " << detail::join(std::vector<Element>(p.radix.begin(), p.radix.end()))
            << "\nbasepoint " << detail::join(p.basepoint) << "\n";
    std::size_t row = 0;
    std::vector<std::size_t> radix(p.radix.begin(), p.radix.end());
    ua::detail::for_each_mixed_tuple(radix, [&](std::span<const Element> x) {
      s.out() << tuple_string(std::vector<Element>(x.begin(), x.end())) << " -> " << table[row++] << "\n";
    });
  });

  std::ostringstream buffer;
  detail::Session s(buffer, cap, cap_opt);
  session = &s;
  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ParseError: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << buffer.str();
    err << e.what() << "\n";
    if (e.witness() && !e.witness()->empty()) err << "witness " << tuple_string(*e.witness()) << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  out << buffer.str();
  return code;
}

}  // namespace ua::cli
