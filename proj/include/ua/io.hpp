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
 * Text formats. Lines whose first non-blank character is `#` are comments.
 *
 *   algebra <name>
 *   size <n>
 *   op <name>/<arity>
 *   <n^arity integers, last argument fastest>
 *   ...
 *   end
 *
 *   variety <name>
 *   op <name>/<arity>
 *   id <term> = <term>
 *   end
 *
 *   action [<name>]
 *   base <file>#<algebra>
 *   fiber <b> <size> <basepoint>      (or: fiber * <size> <basepoint>)
 *   map <op> (<b1>,...,<bk>)
 *   <flat table over the fibers of b1..bk>
 *   end
 *
 *   maps [<name>]
 *   <one table per line>
 *   end
 *
 * Objects are referenced as `<file>#<name>`; `<file>` alone picks the only
 * object of the file.
 */

#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ua/outer_sdp.hpp"
#include "ua/variety.hpp"

namespace ua {

struct ActionSpec {
  std::string name;
  PointedFamily family;
  ActionFamily actions;
};

struct MapList {
  std::string name;
  std::vector<std::vector<Element>> tables;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct SourceLine {
  std::size_t number = 0;
  std::string text;
  std::vector<Token> tokens;
};

class Reader {
 public:
  Reader(std::string file, const std::string& text) : file_(std::move(file)) {
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      SourceLine sl{number, line, {}};
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        sl.tokens.push_back({line.substr(i, j - i), number, i + 1});
        i = j;
      }
      lines_.push_back(std::move(sl));
    }
  }

  const std::string& file() const { return file_; }
  bool done() const { return line_ >= lines_.size(); }
  const SourceLine& line() const { return lines_[line_]; }
  void next_line() {
    ++line_;
    tok_ = 0;
  }

  /// Tokens may run across lines; used for tables.
  bool at_line_start() const { return tok_ == 0; }
  const Token& peek() const {
    if (done()) fail_eof();
    return lines_[line_].tokens[tok_];
  }
  Token take() {
    Token t = peek();
    if (++tok_ == lines_[line_].tokens.size()) next_line();
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& what) const { fail(at.line, at.column, what); }
  [[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& what) const {
    throw Error(Errc::ParseError, file_ + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
  }
  [[noreturn]] void fail_eof() const {
    const std::size_t last = lines_.empty() ? 1 : lines_.back().number;
    fail(last, 1, "unexpected end of file");
  }

  std::size_t number(const Token& t) const {
    if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos || t.text.size() > 9) {
      fail(t, "expected a non-negative integer, got '" + t.text + "'");
    }
    return std::stoul(t.text);
  }

  /// `<name>/<arity>`.
  OperationSymbol symbol(const Token& t) const {
    const auto slash = t.text.find('/');
    if (slash == std::string::npos || slash == 0) fail(t, "expected <name>/<arity>, got '" + t.text + "'");
    Token arity{t.text.substr(slash + 1), t.line, t.column + slash + 1};
    return OperationSymbol{t.text.substr(0, slash), number(arity)};
  }

  void expect_line_end(const Token& after) {
    if (!at_line_start()) fail(peek(), "unexpected '" + peek().text + "' after '" + after.text + "'");
  }

 private:
  std::string file_;
  std::vector<SourceLine> lines_;
  std::size_t line_ = 0;
  std::size_t tok_ = 0;
};

inline std::vector<Element> read_table(Reader& r, std::size_t count, std::size_t bound, const std::string& what) {
  std::vector<Element> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (r.done()) r.fail_eof();
    Token t = r.peek();
    if (t.text == "end" || t.text == "op" || t.text == "map") {
      r.fail(t, what + " has " + std::to_string(i) + " entries, expected " + std::to_string(count));
    }
    r.take();
    const std::size_t v = r.number(t);
    if (v >= bound) {
      throw Error(Errc::TableRangeError, r.file() + ":" + std::to_string(t.line) + ":" + std::to_string(t.column) +
                                             ": " + what + " entry " + std::to_string(v) + " outside range " +
                                             std::to_string(bound));
    }
    out.push_back(v);
  }
  return out;
}

inline std::string read_name(Reader& r, const Token& keyword) {
  if (r.at_line_start()) r.fail(keyword, "'" + keyword.text + "' needs a name");
  Token name = r.take();
  r.expect_line_end(name);
  return name.text;
}

inline FiniteAlgebra read_algebra(Reader& r, const Token& keyword) {
  std::string name = read_name(r, keyword);
  Token size_kw = r.take();
  if (size_kw.text != "size") r.fail(size_kw, "expected 'size'");
  Token n_tok = r.take();
  r.expect_line_end(n_tok);
  const std::size_t n = r.number(n_tok);
  if (n == 0) r.fail(n_tok, "algebra must be nonempty");
  std::vector<OperationSymbol> syms;
  std::vector<std::vector<Element>> tables;
  while (true) {
    Token t = r.take();
    if (t.text == "end") {
      r.expect_line_end(t);
      break;
    }
    if (t.text != "op") r.fail(t, "expected 'op' or 'end', got '" + t.text + "'");
    Token st = r.take();
    r.expect_line_end(st);
    auto sym = r.symbol(st);
    tables.push_back(read_table(r, checked_power(n, sym.arity), n, "table of " + sym.name));
    if (!r.at_line_start()) r.fail(r.peek(), "table of " + sym.name + " has extra entries");
    syms.push_back(std::move(sym));
  }
  try {
    return FiniteAlgebra(std::move(name), Signature(std::move(syms)), n, std::move(tables));
  } catch (const Error& e) {
    r.fail(keyword, e.what());
  }
}

inline VarietySpec read_variety(Reader& r, const Token& keyword) {
  VarietySpec v;
  v.name = read_name(r, keyword);
  std::vector<OperationSymbol> syms;
  std::vector<std::pair<std::string, Token>> ids;
  while (true) {
    if (r.done()) r.fail_eof();
    const SourceLine& line = r.line();
    Token t = r.take();
    if (t.text == "end") {
      r.expect_line_end(t);
      break;
    }
    if (t.text == "op") {
      Token st = r.take();
      r.expect_line_end(st);
      syms.push_back(r.symbol(st));
    } else if (t.text == "id") {
      ids.emplace_back(line.text, t);
      if (!r.at_line_start()) r.next_line();
    } else {
      r.fail(t, "expected 'op', 'id' or 'end', got '" + t.text + "'");
    }
  }
  try {
    v.signature = Signature(std::move(syms));
  } catch (const Error& e) {
    r.fail(keyword, e.what());
  }
  for (const auto& [text, kw] : ids) {
    const std::size_t body = kw.column - 1 + 2;
    const auto eq = text.find('=', body);
    if (eq == std::string::npos) r.fail(kw, "identity needs '='");
    auto parse_side = [&](std::size_t from, std::size_t to) {
      const std::string side = text.substr(from, to - from);
      try {
        return parse_term(side, v.signature);
      } catch (const Error& e) {
        r.fail(kw.line, from + e.position().value_or(1), e.what());
      }
    };
    Term lhs = parse_side(body, eq);
    Term rhs = parse_side(eq + 1, text.size());
    v.identities.emplace_back(std::move(lhs), std::move(rhs));
  }
  return v;
}

inline MapList read_maps(Reader& r, const Token& keyword, const std::string& default_name) {
  MapList m;
  m.name = r.at_line_start() ? default_name : read_name(r, keyword);
  while (true) {
    if (r.done()) r.fail_eof();
    std::vector<Element> row;
    if (r.peek().text == "end") {
      Token t = r.take();
      r.expect_line_end(t);
      break;
    }
    do {
      Token t = r.take();
      row.push_back(r.number(t));
    } while (!r.at_line_start());
    m.tables.push_back(std::move(row));
  }
  return m;
}

}  // namespace detail

/// Everything loaded from a set of files; names are unique across kinds.
class Workspace {
 public:
  const std::map<std::string, FiniteAlgebra>& algebras() const { return algebras_; }
  const std::map<std::string, VarietySpec>& varieties() const { return varieties_; }
  const std::map<std::string, ActionSpec>& actions() const { return actions_; }
  const std::map<std::string, MapList>& maps() const { return maps_; }

  /// Loads a file once; returns the names it defined, in file order.
  const std::vector<std::string>& load(const std::string& path) {
    const std::string key = std::filesystem::absolute(path).lexically_normal().string();
    if (auto it = files_.find(key); it != files_.end()) return it->second;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, path + ":0:0: cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    return load_text(path, buf.str(), key);
  }

  const std::vector<std::string>& load_text(const std::string& path, const std::string& text,
                                            std::string key = {}) {
    if (key.empty()) key = path;
    detail::Reader r(path, text);
    std::vector<std::string> names;
    const std::string stem = std::filesystem::path(path).stem().string();
    while (!r.done()) {
      detail::Token kw = r.take();
      if (kw.text == "algebra") {
        auto a = detail::read_algebra(r, kw);
        claim(r, kw, a.name());
        names.push_back(a.name());
        algebras_.emplace(a.name(), std::move(a));
      } else if (kw.text == "variety") {
        auto v = detail::read_variety(r, kw);
        claim(r, kw, v.name);
        names.push_back(v.name);
        varieties_.emplace(v.name, std::move(v));
      } else if (kw.text == "action") {
        auto a = read_action(r, kw, stem, path);
        claim(r, kw, a.name);
        names.push_back(a.name);
        actions_.emplace(a.name, std::move(a));
      } else if (kw.text == "maps") {
        auto m = detail::read_maps(r, kw, stem);
        claim(r, kw, m.name);
        names.push_back(m.name);
        maps_.emplace(m.name, std::move(m));
      } else {
        r.fail(kw, "expected 'algebra', 'variety', 'action' or 'maps', got '" + kw.text + "'");
      }
    }
    return files_[key] = std::move(names);
  }

  /// `<file>#<name>` or `<file>`; loads the file if needed.
  std::string resolve(const std::string& ref) {
    const auto hash = ref.rfind('#');
    const std::string file = hash == std::string::npos ? ref : ref.substr(0, hash);
    const auto& names = load(file);
    if (hash != std::string::npos) {
      std::string name = ref.substr(hash + 1);
      if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw Error(Errc::UnknownSymbol, "no object named '" + name + "' in " + file);
      }
      return name;
    }
    if (names.size() != 1) throw Error(Errc::UnknownSymbol, file + " defines " + std::to_string(names.size()) +
                                                                " objects; use <file>#<name>");
    return names[0];
  }

  const FiniteAlgebra& algebra(const std::string& ref) { return lookup(algebras_, resolve(ref), "algebra"); }
  const VarietySpec& variety_spec(const std::string& ref) { return lookup(varieties_, resolve(ref), "variety"); }
  const ActionSpec& action(const std::string& ref) { return lookup(actions_, resolve(ref), "action"); }
  const MapList& map_list(const std::string& ref) { return lookup(maps_, resolve(ref), "map list"); }

 private:
  template <typename M>
  static const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* kind) {
    auto it = m.find(name);
    if (it == m.end()) throw Error(Errc::UnknownSymbol, "'" + name + "' is not an " + std::string(kind));
    return it->second;
  }

  bool taken(const std::string& name) const {
    return algebras_.count(name) || varieties_.count(name) || actions_.count(name) || maps_.count(name);
  }

  void claim(const detail::Reader& r, const detail::Token& kw, const std::string& name) const {
    if (taken(name)) {
      throw Error(Errc::DuplicateName, r.file() + ":" + std::to_string(kw.line) + ": name '" + name + "' already defined");
    }
  }

  ActionSpec read_action(detail::Reader& r, const detail::Token& kw, const std::string& stem, const std::string& path) {
    ActionSpec a;
    a.name = r.at_line_start() ? stem : detail::read_name(r, kw);
    detail::Token base_kw = r.take();
    if (base_kw.text != "base") r.fail(base_kw, "expected 'base'");
    detail::Token ref = r.take();
    r.expect_line_end(ref);
    std::string target = ref.text;
    const auto dir = std::filesystem::path(path).parent_path();
    if (!dir.empty() && target.find('#') != 0 && std::filesystem::path(target).is_relative()) {
      target = (dir / target).string();
    }
    try {
      a.family.base = algebra(target);
    } catch (const Error& e) {
      if (e.code() == Errc::ParseError || e.code() == Errc::TableRangeError || e.code() == Errc::DuplicateName) throw;
      r.fail(ref, e.what());
    }
    const FiniteAlgebra& B = a.family.base;
    std::vector<std::optional<Fiber>> fibers(B.size());
    while (!r.done() && r.peek().text == "fiber") {
      detail::Token f = r.take();
      detail::Token b = r.take(), size = r.take(), bp = r.take();
      r.expect_line_end(bp);
      Fiber fib{r.number(size), r.number(bp)};
      if (fib.size == 0 || fib.basepoint >= fib.size) r.fail(bp, "basepoint outside fiber");
      if (b.text == "*") {
        for (auto& x : fibers) x = fib;
      } else {
        const auto idx = r.number(b);
        if (idx >= B.size()) r.fail(b, "base element outside carrier");
        fibers[idx] = fib;
      }
    }
    for (std::size_t i = 0; i < fibers.size(); ++i) {
      if (!fibers[i]) r.fail(kw, "no fiber declared for base element " + std::to_string(i));
      a.family.fibers.push_back(*fibers[i]);
    }
    a.actions.tables.resize(B.signature().size());
    for (std::size_t s = 0; s < B.signature().size(); ++s) {
      a.actions.tables[s].resize(detail::checked_power(B.size(), B.arity(s)));
    }
    std::vector<std::vector<bool>> seen(a.actions.tables.size());
    for (std::size_t s = 0; s < seen.size(); ++s) seen[s].assign(a.actions.tables[s].size(), false);
    while (true) {
      detail::Token t = r.take();
      if (t.text == "end") {
        r.expect_line_end(t);
        break;
      }
      if (t.text != "map") r.fail(t, "expected 'map' or 'end', got '" + t.text + "'");
      detail::Token op = r.take();
      detail::Token tup = r.take();
      r.expect_line_end(tup);
      auto sym = B.signature().index_of(op.text);
      if (!sym) r.fail(op, "unknown operation '" + op.text + "'");
      if (tup.text.size() < 2 || tup.text.front() != '(' || tup.text.back() != ')') r.fail(tup, "expected (b1,...,bk)");
      std::vector<Element> bt;
      const std::string inner = tup.text.substr(1, tup.text.size() - 2);
      if (!inner.empty()) {
        std::size_t from = 0;
        while (true) {
          const auto comma = inner.find(',', from);
          detail::Token part{inner.substr(from, comma == std::string::npos ? std::string::npos : comma - from), tup.line,
                             tup.column + 1 + from};
          const auto v = r.number(part);
          if (v >= B.size()) r.fail(part, "base element outside carrier");
          bt.push_back(v);
          if (comma == std::string::npos) break;
          from = comma + 1;
        }
      }
      if (bt.size() != B.arity(*sym)) r.fail(tup, op.text + " expects " + std::to_string(B.arity(*sym)) + " base elements");
      std::size_t j = 0;
      for (Element b : bt) j = j * B.size() + b;
      if (seen[*sym][j]) r.fail(t, "duplicate map for " + op.text + " at " + tup.text);
      seen[*sym][j] = true;
      const Element fb = B.apply(*sym, bt);
      a.actions.tables[*sym][j] = detail::read_table(r, detail::product_of(a.family.radix(bt)), a.family.fibers[fb].size,
                                                     "map " + op.text + " " + tup.text);
    }
    for (std::size_t s = 0; s < seen.size(); ++s) {
      for (std::size_t j = 0; j < seen[s].size(); ++j) {
        if (!seen[s][j]) r.fail(kw, "missing map for " + B.signature()[s].name + " at base tuple #" + std::to_string(j));
      }
    }
    return a;
  }

  std::map<std::string, FiniteAlgebra> algebras_;
  std::map<std::string, VarietySpec> varieties_;
  std::map<std::string, ActionSpec> actions_;
  std::map<std::string, MapList> maps_;
  std::map<std::string, std::vector<std::string>> files_;
};

inline Workspace load_workspace(const std::vector<std::string>& paths) {
  Workspace w;
  for (const auto& p : paths) w.load(p);
  return w;
}

/// Standard algebra format; rows of n entries (last argument fastest).
inline std::string emit_algebra(const FiniteAlgebra& A) {
  std::ostringstream out;
  const std::size_t n = A.size();
  out << "algebra " << A.name() << "\nsize " << n << "\n";
  for (std::size_t s = 0; s < A.signature().size(); ++s) {
    out << "op " << A.signature()[s].name << "/" << A.arity(s) << "\n";
    const auto& t = A.table(s);
    const std::size_t row = A.arity(s) == 0 ? 1 : n;
    for (std::size_t i = 0; i < t.size(); ++i) out << t[i] << ((i + 1) % row == 0 ? "\n" : " ");
  }
  out << "end\n";
  return out.str();
}

inline std::string emit_variety(const VarietySpec& v) {
  std::ostringstream out;
  out << "variety " << v.name << "\n";
  for (const auto& s : v.signature) out << "op " << s.name << "/" << s.arity << "\n";
  for (const auto& id : v.identities) out << "id " << to_string(id.lhs) << " = " << to_string(id.rhs) << "\n";
  out << "end\n";
  return out.str();
}

/// Element list "0,3" or "{0,3}"; empty string is the empty set.
inline ElementSet parse_element_set(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != '{' && c != '}' && c != ' ') s += c;
  }
  ElementSet out;
  std::size_t from = 0;
  while (from < s.size()) {
    auto comma = s.find(',', from);
    const std::string part = s.substr(from, comma == std::string::npos ? std::string::npos : comma - from);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 9) {
      throw Error(Errc::ParseError, "bad element list '" + text + "'");
    }
    out.push_back(std::stoul(part));
    if (comma == std::string::npos) break;
    from = comma + 1;
  }
  return make_set(std::move(out));
}

}  // namespace ua
