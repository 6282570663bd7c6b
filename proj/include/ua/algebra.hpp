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
 * Finite algebras stored as operation tables, and evaluation of terms.
 *
 * The table of an operation f of arity k on a carrier {0..n-1} holds n^k
 * entries; f(i1,...,ik) sits at index i1*n^(k-1) + ... + ik.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ua/detail/tuples.hpp"
#include "ua/error.hpp"
#include "ua/term.hpp"

namespace ua {

class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;

  FiniteAlgebra(std::string name, Signature sig, std::size_t size,
                std::vector<std::vector<Element>> tables)
      : name_(std::move(name)), sig_(std::move(sig)), size_(size),
        tables_(std::move(tables)) {
    if (size_ == 0) throw Error(Errc::SizeMismatch, "algebra '" + name_ + "' is empty");
    if (tables_.size() != sig_.size()) {
      throw Error(Errc::SignatureMismatch, "algebra '" + name_ + "' has " +
                                               std::to_string(tables_.size()) +
                                               " tables for " +
                                               std::to_string(sig_.size()) + " symbols");
    }
    for (std::size_t s = 0; s < sig_.size(); ++s) {
      std::size_t expected = detail::checked_power(size_, sig_[s].arity);
      if (tables_[s].size() != expected) {
        throw Error(Errc::SizeMismatch, "table of '" + sig_[s].name + "' has " +
                                            std::to_string(tables_[s].size()) +
                                            " entries, expected " +
                                            std::to_string(expected));
      }
      for (std::size_t i = 0; i < expected; ++i) {
        if (tables_[s][i] >= size_) {
          throw Error(Errc::TableRangeError,
                      "table of '" + sig_[s].name + "' entry " + std::to_string(i) +
                          " is " + std::to_string(tables_[s][i]) +
                          ", outside carrier of size " + std::to_string(size_));
        }
      }
    }
  }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const Signature& signature() const noexcept { return sig_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t arity(std::size_t sym) const { return sig_[sym].arity; }

  const std::vector<Element>& table(std::size_t sym) const { return tables_[sym]; }
  const std::vector<std::vector<Element>>& tables() const noexcept { return tables_; }

  std::size_t symbol(std::string_view name, std::size_t arity) const {
    return sig_.require(name, arity);
  }

  Element apply(std::size_t sym, std::span<const Element> args) const {
    std::size_t idx = 0;
    for (Element a : args) idx = idx * size_ + a;
    return tables_[sym][idx];
  }

  Element apply(std::size_t sym, std::initializer_list<Element> args) const {
    return apply(sym, std::span<const Element>(args.begin(), args.size()));
  }

  Element constant(std::size_t sym) const { return tables_[sym][0]; }
  Element unary(std::size_t sym, Element a) const { return tables_[sym][a]; }
  Element binary(std::size_t sym, Element a, Element b) const {
    return tables_[sym][a * size_ + b];
  }
  Element ternary(std::size_t sym, Element a, Element b, Element c) const {
    return tables_[sym][(a * size_ + b) * size_ + c];
  }

  /// Same operations, only the name may differ.
  bool same_structure(const FiniteAlgebra& other) const {
    return size_ == other.size_ && sig_ == other.sig_ && tables_ == other.tables_;
  }

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  std::string name_;
  Signature sig_;
  std::size_t size_ = 0;
  std::vector<std::vector<Element>> tables_;
};

inline void require_same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.signature() != b.signature()) {
    throw Error(Errc::SignatureMismatch,
                "'" + a.name() + "' and '" + b.name() + "' have different signatures");
  }
}

/// A term flattened to postfix with symbol names resolved against one
/// algebra, for repeated evaluation.
class CompiledTerm {
 public:
  CompiledTerm(const Term& t, const FiniteAlgebra& alg) : alg_(&alg) {
    compile(t);
    std::size_t depth = 0;
    for (const auto& s : steps_) {
      depth = s.is_variable ? depth + 1 : depth - alg.arity(s.value) + 1;
      max_depth_ = std::max(max_depth_, depth);
    }
  }

  std::size_t variable_bound() const noexcept { return var_bound_; }

  Element eval(std::span<const Element> assignment) const {
    Element stack_buf[64] = {};
    std::vector<Element> heap_buf;
    Element* stack = stack_buf;
    if (max_depth_ > 64) {
      heap_buf.resize(max_depth_);
      stack = heap_buf.data();
    }
    std::size_t top = 0;
    const std::size_t n = alg_->size();
    for (const auto& s : steps_) {
      if (s.is_variable) {
        stack[top++] = assignment[s.value];
        continue;
      }
      std::size_t k = alg_->arity(s.value);
      std::size_t idx = 0;
      for (std::size_t i = top - k; i < top; ++i) idx = idx * n + stack[i];
      top -= k;
      stack[top++] = alg_->table(s.value)[idx];
    }
    return stack[0];
  }

 private:
  struct Step {
    bool is_variable;
    std::size_t value;
  };

  void compile(const Term& t) {
    if (t.is_variable()) {
      var_bound_ = std::max(var_bound_, t.variable_index() + 1);
      steps_.push_back({true, t.variable_index()});
      return;
    }
    auto sym = alg_->signature().index_of(t.symbol());
    if (!sym || alg_->arity(*sym) != t.args().size()) {
      throw Error(Errc::SignatureMismatch, "algebra '" + alg_->name() +
                                               "' has no operation " + t.symbol() + "/" +
                                               std::to_string(t.args().size()));
    }
    for (const auto& a : t.args()) compile(a);
    steps_.push_back({false, *sym});
  }

  const FiniteAlgebra* alg_;
  std::vector<Step> steps_;
  std::size_t var_bound_ = 0;
  std::size_t max_depth_ = 0;
};

inline Element eval_term(const Term& t, const FiniteAlgebra& alg,
                         std::span<const Element> assignment) {
  CompiledTerm c(t, alg);
  if (c.variable_bound() > assignment.size()) {
    throw Error(Errc::MissingAssignment,
                "term " + to_string(t) + " needs " + std::to_string(c.variable_bound()) +
                    " values, got " + std::to_string(assignment.size()));
  }
  for (Element a : assignment) {
    if (a >= alg.size()) {
      throw Error(Errc::TableRangeError, "assignment value " + std::to_string(a) +
                                             " outside carrier");
    }
  }
  return c.eval(assignment);
}

inline Element eval_term(const Term& t, const FiniteAlgebra& alg,
                         std::initializer_list<Element> assignment) {
  return eval_term(t, alg, std::span<const Element>(assignment.begin(), assignment.size()));
}

}  // namespace ua
