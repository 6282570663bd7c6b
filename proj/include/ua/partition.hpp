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

#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "ua/error.hpp"

namespace ua {

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  /// Returns true if two distinct classes were merged.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// An equivalence relation on {0..n-1}, normalized so that every element
/// stores the least element of its block. Equal relations compare equal.
class Partition {
 public:
  Partition() = default;

  /// The identity (discrete) partition.
  explicit Partition(std::size_t n) : rep_(n) { std::iota(rep_.begin(), rep_.end(), 0); }

  static Partition identity(std::size_t n) { return Partition(n); }

  static Partition all(std::size_t n) {
    Partition p;
    p.rep_.assign(n, 0);
    return p;
  }

  static Partition from_union_find(detail::UnionFind& uf) {
    Partition p;
    p.rep_.resize(uf.size());
    std::vector<std::size_t> least(uf.size(), static_cast<std::size_t>(-1));
    for (std::size_t a = 0; a < uf.size(); ++a) {
      std::size_t r = uf.find(a);
      if (least[r] == static_cast<std::size_t>(-1)) least[r] = a;
      p.rep_[a] = least[r];
    }
    return p;
  }

  /// a ~ b iff labels[a] == labels[b].
  template <typename Label>
  static Partition from_labels(const std::vector<Label>& labels) {
    Partition p;
    p.rep_.resize(labels.size());
    for (std::size_t a = 0; a < labels.size(); ++a) {
      std::size_t r = a;
      for (std::size_t b = 0; b < a; ++b) {
        if (labels[b] == labels[a]) {
          r = p.rep_[b];
          break;
        }
      }
      p.rep_[a] = r;
    }
    return p;
  }

  /// Blocks must cover {0..n-1} exactly once.
  static Partition from_blocks(std::size_t n, const std::vector<std::vector<Element>>& blocks) {
    std::vector<std::size_t> label(n, static_cast<std::size_t>(-1));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw Error(Errc::ParseError, "empty block");
      for (Element a : blocks[b]) {
        if (a >= n) {
          throw Error(Errc::SizeMismatch,
                      "element " + std::to_string(a) + " outside carrier of size " + std::to_string(n));
        }
        if (label[a] != static_cast<std::size_t>(-1)) {
          throw Error(Errc::ParseError, "element " + std::to_string(a) + " in two blocks");
        }
        label[a] = b;
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (label[a] == static_cast<std::size_t>(-1)) {
        throw Error(Errc::ParseError, "element " + std::to_string(a) + " in no block");
      }
    }
    return from_labels(label);
  }

  std::size_t size() const noexcept { return rep_.size(); }
  Element rep(Element a) const { return rep_[a]; }
  bool same(Element a, Element b) const { return rep_[a] == rep_[b]; }
  const std::vector<Element>& reps() const noexcept { return rep_; }

  std::size_t block_count() const {
    std::size_t c = 0;
    for (std::size_t a = 0; a < rep_.size(); ++a) c += rep_[a] == a;
    return c;
  }

  /// Blocks ordered by least element, each sorted.
  std::vector<ElementSet> blocks() const {
    std::vector<ElementSet> out;
    std::vector<std::size_t> index(rep_.size());
    for (std::size_t a = 0; a < rep_.size(); ++a) {
      if (rep_[a] == a) {
        index[a] = out.size();
        out.emplace_back();
      }
      out[index[rep_[a]]].push_back(a);
    }
    return out;
  }

  /// Position of a's block in blocks().
  std::vector<std::size_t> block_indices() const {
    std::vector<std::size_t> idx(rep_.size());
    std::size_t next = 0;
    for (std::size_t a = 0; a < rep_.size(); ++a) {
      idx[a] = rep_[a] == a ? next++ : idx[rep_[a]];
    }
    return idx;
  }

  ElementSet block_of(Element a) const {
    ElementSet out;
    for (std::size_t b = 0; b < rep_.size(); ++b) {
      if (rep_[b] == rep_[a]) out.push_back(b);
    }
    return out;
  }

  bool is_identity() const { return block_count() == rep_.size(); }
  bool is_all() const { return block_count() <= 1; }

  /// True iff every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const {
    for (std::size_t a = 0; a < rep_.size(); ++a) {
      if (!coarser.same(a, rep_[a])) return false;
    }
    return true;
  }

  Partition join(const Partition& other) const {
    detail::UnionFind uf(rep_.size());
    for (std::size_t a = 0; a < rep_.size(); ++a) {
      uf.unite(a, rep_[a]);
      uf.unite(a, other.rep_[a]);
    }
    return from_union_find(uf);
  }

  Partition meet(const Partition& other) const {
    std::vector<std::pair<Element, Element>> labels(rep_.size());
    for (std::size_t a = 0; a < rep_.size(); ++a) labels[a] = {rep_[a], other.rep_[a]};
    return from_labels(labels);
  }

  friend bool operator==(const Partition&, const Partition&) = default;

  /// Canonical order: finer partitions (more blocks) first, then by reps.
  friend bool operator<(const Partition& a, const Partition& b) {
    auto ca = a.block_count(), cb = b.block_count();
    if (ca != cb) return ca > cb;
    return a.rep_ < b.rep_;
  }

 private:
  std::vector<Element> rep_;
};

inline std::string to_string(const Partition& p) {
  std::string out = "{";
  auto blocks = p.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i != 0) out += ',';
    out += '{';
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j != 0) out += ',';
      out += std::to_string(blocks[i][j]);
    }
    out += '}';
  }
  return out + "}";
}

/// Parses `{{0,2},{1,3}}`. The carrier size is the number of listed
/// elements unless `n` is given, in which case it must match.
inline Partition parse_partition(std::string_view text, std::size_t n = 0) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      throw Error(Errc::ParseError, std::string("expected '") + c + "' at offset " +
                                        std::to_string(pos + 1) + " in partition");
    }
    ++pos;
  };
  auto peek = [&](char c) {
    skip();
    return pos < text.size() && text[pos] == c;
  };
  auto number = [&] {
    skip();
    std::size_t start = pos;
    Element v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<Element>(text[pos] - '0');
      ++pos;
    }
    if (start == pos) {
      throw Error(Errc::ParseError, "expected a number at offset " + std::to_string(pos + 1));
    }
    return v;
  };

  std::vector<std::vector<Element>> blocks;
  expect('{');
  if (!peek('}')) {
    do {
      expect('{');
      std::vector<Element> block{number()};
      while (peek(',')) {
        ++pos;
        block.push_back(number());
      }
      expect('}');
      blocks.push_back(std::move(block));
    } while (peek(',') && (++pos, true));
  }
  expect('}');
  skip();
  if (pos != text.size()) throw Error(Errc::ParseError, "trailing input after partition");

  std::size_t count = 0;
  for (const auto& b : blocks) count += b.size();
  if (n != 0 && count != n) {
    throw Error(Errc::SizeMismatch, "partition lists " + std::to_string(count) +
                                        " elements, carrier has " + std::to_string(n));
  }
  return Partition::from_blocks(n != 0 ? n : count, blocks);
}

}  // namespace ua
