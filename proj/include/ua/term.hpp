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
 * Signatures and the term language.
 *
 * Grammar (whitespace-insensitive):
 *
 *     term  := var | name | name '(' term (',' term)* ')'
 *     var   := 'x' digit+
 *     name  := [A-Za-z_][A-Za-z0-9_]*      (not of the form of a var)
 *
 * Nullary symbols are written bare: `e`, never `e()`. Error offsets are
 * 1-based character columns.
 */

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ua/error.hpp"

namespace ua {

struct OperationSymbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const OperationSymbol&, const OperationSymbol&) = default;
};

namespace detail {

inline bool is_variable_name(std::string_view name) {
  if (name.size() < 2 || name[0] != 'x') return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

inline bool is_symbol_name(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name[0]);
  if (!(std::isalpha(head) || name[0] == '_')) return false;
  for (unsigned char c : name) {
    if (!(std::isalnum(c) || c == '_')) return false;
  }
  return !is_variable_name(name);
}

}  // namespace detail

/// Ordered list of operation symbols. The order indexes operation tables.
class Signature {
 public:
  Signature() = default;

  Signature(std::initializer_list<OperationSymbol> symbols)
      : Signature(std::vector<OperationSymbol>(symbols)) {}

  explicit Signature(std::vector<OperationSymbol> symbols)
      : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (!detail::is_symbol_name(symbols_[i].name)) {
        throw Error(Errc::SyntaxError,
                    "invalid operation name '" + symbols_[i].name + "'");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (symbols_[j].name == symbols_[i].name) {
          throw Error(Errc::DuplicateName,
                      "operation '" + symbols_[i].name + "' declared twice");
        }
      }
    }
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  const OperationSymbol& operator[](std::size_t i) const { return symbols_[i]; }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i].name == name) return i;
    }
    return std::nullopt;
  }

  /// Index of `name` with the given arity, or SignatureMismatch.
  std::size_t require(std::string_view name, std::size_t arity) const {
    auto i = index_of(name);
    if (!i || symbols_[*i].arity != arity) {
      throw Error(Errc::SignatureMismatch, "missing operation " +
                                               std::string(name) + "/" +
                                               std::to_string(arity));
    }
    return *i;
  }

  /// True iff every symbol of `other` occurs here with the same arity.
  bool contains(const Signature& other) const {
    return std::all_of(other.begin(), other.end(), [&](const OperationSymbol& s) {
      auto i = index_of(s.name);
      return i && symbols_[*i].arity == s.arity;
    });
  }

  std::size_t max_arity() const {
    std::size_t m = 0;
    for (const auto& s : symbols_) m = std::max(m, s.arity);
    return m;
  }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<OperationSymbol> symbols_;
};

/// A finite term tree: either a variable `x<i>` or an application of a
/// named operation symbol to argument terms.
class Term {
 public:
  static Term variable(std::size_t index) {
    Term t;
    t.index_ = index;
    return t;
  }

  static Term apply(std::string symbol, std::vector<Term> args = {}) {
    Term t;
    t.symbol_ = std::move(symbol);
    t.args_ = std::move(args);
    return t;
  }

  bool is_variable() const noexcept { return symbol_.empty(); }
  std::size_t variable_index() const noexcept { return index_; }
  const std::string& symbol() const noexcept { return symbol_; }
  const std::vector<Term>& args() const noexcept { return args_; }

  /// One more than the largest variable index occurring, 0 for ground terms.
  std::size_t variable_bound() const {
    if (is_variable()) return index_ + 1;
    std::size_t m = 0;
    for (const auto& a : args_) m = std::max(m, a.variable_bound());
    return m;
  }

  /// Number of levels; variables and constants have height 1.
  std::size_t height() const {
    std::size_t m = 0;
    for (const auto& a : args_) m = std::max(m, a.height());
    return m + 1;
  }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  Term() = default;

  std::size_t index_ = 0;
  std::string symbol_;
  std::vector<Term> args_;
};

inline Term var(std::size_t index) { return Term::variable(index); }

template <typename... Args>
Term app(std::string symbol, Args... args) {
  return Term::apply(std::move(symbol), std::vector<Term>{std::move(args)...});
}

inline void print_term(const Term& t, std::string& out) {
  if (t.is_variable()) {
    out += 'x';
    out += std::to_string(t.variable_index());
    return;
  }
  out += t.symbol();
  if (t.args().empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i != 0) out += ',';
    print_term(t.args()[i], out);
  }
  out += ')';
}

inline std::string to_string(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

/// Throws UnknownSymbol / ArityMismatch if `t` is not a term over `sig`.
inline void check_term(const Term& t, const Signature& sig) {
  if (t.is_variable()) return;
  auto i = sig.index_of(t.symbol());
  if (!i) throw Error(Errc::UnknownSymbol, "unknown symbol '" + t.symbol() + "'");
  if (sig[*i].arity != t.args().size()) {
    throw Error(Errc::ArityMismatch,
                "'" + t.symbol() + "' expects " + std::to_string(sig[*i].arity) +
                    " arguments, got " + std::to_string(t.args().size()));
  }
  for (const auto& a : t.args()) check_term(a, sig);
}

namespace detail {

class TermParser {
 public:
  TermParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Term parse() {
    Term t = term();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::SyntaxError, what + " at offset " + std::to_string(pos_ + 1))
        .at(pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      auto c = static_cast<unsigned char>(text_[pos_]);
      if (!(std::isalnum(c) || c == '_')) break;
      ++pos_;
    }
    if (start == pos_) fail("expected a variable or symbol");
    if (std::isdigit(static_cast<unsigned char>(text_[start]))) {
      pos_ = start;
      fail("identifier may not start with a digit");
    }
    return text_.substr(start, pos_ - start);
  }

  Term term() {
    std::size_t start = (skip_space(), pos_);
    std::string_view name = identifier();
    if (is_variable_name(name)) {
      std::size_t index = 0;
      for (char c : name.substr(1)) index = index * 10 + static_cast<std::size_t>(c - '0');
      return Term::variable(index);
    }
    auto sym = sig_.index_of(name);
    if (!sym) {
      throw Error(Errc::UnknownSymbol, "unknown symbol '" + std::string(name) +
                                           "' at offset " + std::to_string(start + 1))
          .at(start + 1);
    }
    std::vector<Term> args;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      args.push_back(term());
      skip_space();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        args.push_back(term());
        skip_space();
      }
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ',' or ')'");
      ++pos_;
    }
    if (args.size() != sig_[*sym].arity) {
      throw Error(Errc::ArityMismatch,
                  "'" + std::string(name) + "' expects " +
                      std::to_string(sig_[*sym].arity) + " arguments, got " +
                      std::to_string(args.size()) + " at offset " + std::to_string(start + 1))
          .at(start + 1);
    }
    return Term::apply(std::string(name), std::move(args));
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Term parse_term(std::string_view text, const Signature& sig) {
  return detail::TermParser(text, sig).parse();
}

/// Replaces each variable x_i of `t` by `replacements[i]`.
inline Term substitute(const Term& t, std::span<const Term> replacements) {
  if (t.is_variable()) {
    if (t.variable_index() >= replacements.size()) {
      throw Error(Errc::MissingAssignment,
                  "no replacement for x" + std::to_string(t.variable_index()));
    }
    return replacements[t.variable_index()];
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(substitute(a, replacements));
  return Term::apply(t.symbol(), std::move(args));
}

/// An equation `lhs = rhs` universally quantified over x0 .. x_{var_count-1}.
struct Identity {
  Term lhs;
  Term rhs;
  std::size_t var_count = 0;

  Identity(Term l, Term r) : Identity(std::move(l), std::move(r), 0) {}

  Identity(Term l, Term r, std::size_t vars)
      : lhs(std::move(l)), rhs(std::move(r)),
        var_count(std::max({vars, lhs.variable_bound(), rhs.variable_bound()})) {}

  friend bool operator==(const Identity&, const Identity&) = default;
};

inline std::string to_string(const Identity& id) {
  return to_string(id.lhs) + " = " + to_string(id.rhs);
}

}  // namespace ua
