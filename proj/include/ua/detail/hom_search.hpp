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

#include <functional>
#include <optional>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/detail/tuples.hpp"

namespace ua::detail {

struct HomSearchOptions {
  bool injective = false;
  /// Source and target must be the same algebra; forces map(map(a)) = map(a).
  bool idempotent = false;
  /// Optional pre-assigned values.
  std::vector<std::optional<Element>> fixed;
  /// Optional filter on candidate pairs (a, v).
  std::function<bool(Element, Element)> allowed;
};

/// Depth-first search for homomorphisms A -> B. The smallest unassigned
/// element is branched on in increasing order; every complete assignment is
/// propagated through the operation tables first, so maps are visited in
/// lexicographic order. `visit(map)` returns false to stop.
class HomSearch {
 public:
  HomSearch(const FiniteAlgebra& a, const FiniteAlgebra& b, HomSearchOptions opts)
      : a_(a), b_(b), opts_(std::move(opts)) {}

  template <typename Visit>
  void run(Visit&& visit) {
    State st{std::vector<long>(a_.size(), -1), std::vector<char>(b_.size(), 0)};
    if (!opts_.fixed.empty()) {
      for (Element x = 0; x < a_.size(); ++x) {
        if (opts_.fixed[x] && !assign(st, x, *opts_.fixed[x])) return;
      }
    }
    if (!propagate(st)) return;
    stopped_ = false;
    dfs(st, visit);
  }

 private:
  struct State {
    std::vector<long> map;
    std::vector<char> used;
  };

  bool assign(State& st, Element x, Element v) {
    if (st.map[x] >= 0) return static_cast<Element>(st.map[x]) == v;
    if (v >= b_.size()) return false;
    if (opts_.allowed && !opts_.allowed(x, v)) return false;
    if (opts_.injective) {
      if (st.used[v]) return false;
      st.used[v] = 1;
    }
    st.map[x] = static_cast<long>(v);
    if (opts_.idempotent && !assign(st, v, v)) return false;
    return true;
  }

  bool propagate(State& st) {
    std::vector<Element> img;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < a_.signature().size(); ++s) {
        const std::size_t k = a_.arity(s);
        img.resize(k);
        bool ok = for_each_tuple(a_.size(), k, [&](std::span<const Element> t) {
          for (std::size_t i = 0; i < k; ++i) {
            if (st.map[t[i]] < 0) return true;
            img[i] = static_cast<Element>(st.map[t[i]]);
          }
          Element r = a_.apply(s, t);
          Element v = b_.apply(s, img);
          if (st.map[r] < 0) {
            if (!assign(st, r, v)) return false;
            changed = true;
            return true;
          }
          return static_cast<Element>(st.map[r]) == v;
        });
        if (!ok) return false;
      }
    }
    return true;
  }

  template <typename Visit>
  void dfs(const State& st, Visit& visit) {
    Element x = 0;
    while (x < a_.size() && st.map[x] >= 0) ++x;
    if (x == a_.size()) {
      std::vector<Element> out(a_.size());
      for (Element y = 0; y < a_.size(); ++y) out[y] = static_cast<Element>(st.map[y]);
      if (!visit(out)) stopped_ = true;
      return;
    }
    for (Element v = 0; v < b_.size() && !stopped_; ++v) {
      State next = st;
      if (assign(next, x, v) && propagate(next)) dfs(next, visit);
    }
  }

  const FiniteAlgebra& a_;
  const FiniteAlgebra& b_;
  HomSearchOptions opts_;
  bool stopped_ = false;
};

}  // namespace ua::detail
