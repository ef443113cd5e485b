// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Subsets of a small ground set {0, ..., n-1} encoded as bit patterns.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace flagmat {

/// Ground sets never exceed this many elements.
inline constexpr int kMaxGround = 20;

using Subset = std::uint32_t;

inline constexpr Subset bit(int e) { return Subset{1} << e; }

inline constexpr Subset full_set(int n) {
  return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1;
}

inline constexpr int card(Subset s) { return std::popcount(s); }

inline constexpr bool contains(Subset s, int e) { return (s >> e) & 1u; }

inline constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

inline constexpr int lowest(Subset s) { return std::countr_zero(s); }

inline std::vector<int> elements(Subset s) {
  std::vector<int> out;
  out.reserve(card(s));
  while (s != 0) {
    out.push_back(lowest(s));
    s &= s - 1;
  }
  return out;
}

template <typename Range>
Subset subset_of(const Range& items) {
  Subset s = 0;
  for (int e : items) s |= bit(e);
  return s;
}

/// Lexicographic order on the sorted element lists of two subsets.
inline constexpr bool lex_less(Subset a, Subset b) {
  const Subset diff = a ^ b;
  if (diff == 0) return false;
  const int x = lowest(diff);
  // The set holding x is smaller, unless the other set stops before x.
  if (contains(a, x)) return (b >> x) != 0;
  return (a >> x) == 0;
}

/// Canonical order for set families: by cardinality, then lexicographic.
inline constexpr bool card_lex_less(Subset a, Subset b) {
  const int ca = card(a), cb = card(b);
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

inline void canonicalize(std::vector<Subset>& family) {
  std::sort(family.begin(), family.end(), card_lex_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

/// Removes element e from a subset and shifts higher elements down by one.
inline constexpr Subset drop_index(Subset s, int e) {
  const Subset low = s & (bit(e) - 1);
  const Subset high = (s >> (e + 1)) << e;
  return low | high;
}

/// Removes every element of `removed` from s, re-indexing survivors in order.
inline Subset compress(Subset s, Subset removed) {
  Subset out = 0;
  int pos = 0;
  for (int e = 0; e < 32; ++e) {
    if (contains(removed, e)) continue;
    if (contains(s, e)) out |= bit(pos);
    ++pos;
  }
  return out;
}

/// Visits all k-subsets of {0..n-1} in lexicographic order. Stops early if
/// `fn` returns true; returns whether it stopped.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Subset s = 0;
    for (int i : idx) s |= bit(i);
    if (fn(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// As above, but over k-subsets of the elements of `pool`.
template <typename Fn>
bool for_each_combination_of(Subset pool, int k, Fn&& fn) {
  const std::vector<int> items = elements(pool);
  return for_each_combination(static_cast<int>(items.size()), k,
                              [&](Subset local) {
                                Subset s = 0;
                                for (int i : elements(local)) s |= bit(items[i]);
                                return fn(s);
                              });
}

}  // namespace flagmat
