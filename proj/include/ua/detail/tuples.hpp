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

#include <cstddef>
#include <numeric>
#include <span>
#include <type_traits>
#include <vector>

#include "ua/error.hpp"

namespace ua::detail {

inline std::size_t checked_power(std::size_t base, std::size_t exponent) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > static_cast<std::size_t>(-1) / base) {
      throw Error(Errc::SizeLimitExceeded, "table size overflows");
    }
    r *= base;
  }
  return r;
}

/// Calls `fn(tuple)` for every tuple in radix[0] x ... x radix[k-1], in
/// lexicographic order (last coordinate fastest). `fn` may return false to
/// stop early; the function then returns false.
template <typename Fn>
bool for_each_mixed_tuple(std::span<const std::size_t> radix, Fn&& fn) {
  std::vector<Element> t(radix.size(), 0);
  for (std::size_t r : radix) {
    if (r == 0) return true;
  }
  while (true) {
    if constexpr (std::is_same_v<decltype(fn(std::span<const Element>(t))), bool>) {
      if (!fn(std::span<const Element>(t))) return false;
    } else {
      fn(std::span<const Element>(t));
    }
    std::size_t i = t.size();
    while (i > 0) {
      --i;
      if (++t[i] < radix[i]) break;
      t[i] = 0;
      if (i == 0) return true;
    }
    if (t.empty()) return true;
  }
}

/// Lexicographic iteration over {0..n-1}^k.
template <typename Fn>
bool for_each_tuple(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> radix(k, n);
  return for_each_mixed_tuple(radix, std::forward<Fn>(fn));
}

/// Row-major mixed-radix index of `tuple`.
inline std::size_t mixed_index(std::span<const Element> tuple,
                               std::span<const std::size_t> radix) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) idx = idx * radix[i] + tuple[i];
  return idx;
}

inline std::size_t product_of(std::span<const std::size_t> radix) {
  std::size_t p = 1;
  for (std::size_t r : radix) p *= r;
  return p;
}

}  // namespace ua::detail
