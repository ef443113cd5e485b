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

// Full flag matroids, fillings, lift witness sequences and majors.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagmat/error.hpp"
#include "flagmat/flag.hpp"
#include "flagmat/lift.hpp"
#include "flagmat/linear_flag.hpp"
#include "flagmat/matroid.hpp"

namespace flagmat {

/// Consecutive layers differ in rank by exactly one.
inline bool is_full(const FlagMatroid& f) {
  const auto cards = f.cardinalities();
  for (std::size_t i = 1; i < cards.size(); ++i) {
    if (cards[i] != cards[i - 1] + 1) return false;
  }
  return true;
}

struct LiftWitness {
  Matroid q;  // on n + 1 elements
  int extra;  // index of the added element, always n
};

/// Q_i with Q_i / x = M_i and Q_i \ x = M_{i+1}, one per consecutive pair.
inline std::vector<LiftWitness> lift_witness_sequence(const FlagMatroid& f) {
  if (!is_full(f)) throw Error(Errc::kNotFull, "consecutive layer ranks must differ by one");
  std::vector<LiftWitness> out;
  for (int i = 0; i + 1 < f.layer_count(); ++i) {
    out.push_back({elementary_witness(f.layers()[i], f.layers()[i + 1]), f.n()});
  }
  return out;
}

/// The flag of A at every level between d_1 and d_k.
inline FlagMatroid fill_from_representation(const GFMatrix& a, const std::vector<int>& levels) {
  check_levels(a, levels);
  std::vector<int> all;
  for (int d = levels.front(); d <= levels.back(); ++d) all.push_back(d);
  return flag_from_matrix(a, all);
}

// Fillings.

namespace internal {

/// Enumerates the modular cuts of M that are nonempty and leave the bottom
/// flat out, and returns the corresponding elementary quotients: for a cut C
/// the quotient's bases are the independent (r-1)-sets whose closure lies
/// outside C. Every elementary quotient arises from exactly one such cut.
/// `on_quotient` returns false to stop early.
template <typename Fn>
void for_each_elementary_quotient(const Matroid& m, Fn&& on_quotient) {
  if (m.rank() == 0) return;
  std::vector<Subset> fl = flats(m);
  // Decreasing rank; ties in canonical order.
  std::stable_sort(fl.begin(), fl.end(),
                   [&](Subset a, Subset b) { return m.rank_of(a) > m.rank_of(b); });
  const int count = static_cast<int>(fl.size());
  std::vector<int> index_of(std::size_t{1} << m.n(), -1);
  for (int i = 0; i < count; ++i) index_of[fl[i]] = i;

  std::vector<std::vector<int>> covers(count);
  std::vector<std::vector<std::pair<int, int>>> modular_pairs(count);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (fl[j] != fl[i] && is_subset(fl[i], fl[j]) && m.rank_of(fl[j]) == m.rank_of(fl[i]) + 1) {
        covers[i].push_back(j);
      }
    }
  }
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const Subset a = fl[i], b = fl[j];
      if (is_subset(a, b) || is_subset(b, a)) continue;
      const Subset meet = a & b;
      if (m.rank_of(a) + m.rank_of(b) == m.rank_of(meet) + m.rank_of(a | b)) {
        modular_pairs[index_of[meet]].emplace_back(i, j);
      }
    }
  }

  std::vector<char> in_cut(count, 0);
  bool stop = false;
  const int r = m.rank();
  auto emit = [&] {
    if (in_cut[count - 1] || std::none_of(in_cut.begin(), in_cut.end(), [](char c) { return c; })) {
      return;
    }
    std::vector<Subset> bases;
    for_each_combination(m.n(), r - 1, [&](Subset s) {
      if (m.is_independent(s) && !in_cut[index_of[m.closure(s)]]) bases.push_back(s);
      return false;
    });
    if (!on_quotient(Matroid::trusted(m.n(), std::move(bases)))) stop = true;
  };
  auto dfs = [&](auto&& self, int i) -> void {
    if (stop) return;
    if (i == count) {
      emit();
      return;
    }
    bool can = true;
    for (int c : covers[i]) can = can && in_cut[c];
    bool must = false;
    for (const auto& [a, b] : modular_pairs[i]) must = must || (in_cut[a] && in_cut[b]);
    if (must && !can) return;
    if (can) {
      in_cut[i] = 1;
      self(self, i + 1);
      in_cut[i] = 0;
    }
    if (!must) self(self, i + 1);
  };
  dfs(dfs, 0);
}

/// All chains lower < N_1 < ... < N_{g-1} < upper of elementary lifts, as the
/// lists of intermediate layers. Each candidate quotient counts against the
/// budget.
inline std::vector<std::vector<Matroid>> filling_chains(const Matroid& lower, const Matroid& upper,
                                                        std::size_t budget, std::size_t& examined,
                                                        bool& truncated) {
  if (upper.rank() == lower.rank() + 1) return {{}};
  std::vector<std::vector<Matroid>> out;
  for_each_elementary_quotient(upper, [&](Matroid mid) {
    if (examined >= budget) {
      truncated = true;
      return false;
    }
    ++examined;
    if (!is_lift(mid, lower).holds) return true;
    for (auto& chain : filling_chains(lower, mid, budget, examined, truncated)) {
      chain.push_back(mid);
      out.push_back(std::move(chain));
    }
    return !truncated;
  });
  return out;
}

}  // namespace internal

struct FillingResult {
  std::vector<FlagMatroid> fillings;
  bool truncated = false;  // budget ran out before the search finished
  std::size_t examined = 0;
};

/// Full flag matroids that chop down to F. Between layers whose ranks differ by
/// at least two, intermediate layers are generated as elementary quotients of
/// the upper layer that lift the lower one. `budget` caps the number of
/// intermediate candidates examined.
inline FillingResult enumerate_fillings(const FlagMatroid& f, std::size_t budget) {
  FillingResult result;
  std::vector<std::vector<std::vector<Matroid>>> per_gap;
  for (int i = 0; i + 1 < f.layer_count(); ++i) {
    per_gap.push_back(internal::filling_chains(f.layers()[i], f.layers()[i + 1], budget,
                                               result.examined, result.truncated));
    if (result.truncated) break;
  }
  if (result.truncated) per_gap.resize(f.layer_count() - 1);
  // Cartesian product over gaps, first gap varying slowest.
  std::vector<std::size_t> pick(per_gap.size(), 0);
  for (const auto& options : per_gap) {
    if (options.empty()) return result;
  }
  while (true) {
    std::vector<Matroid> layers{f.layers().front()};
    for (std::size_t g = 0; g < per_gap.size(); ++g) {
      for (const Matroid& m : per_gap[g][pick[g]]) layers.push_back(m);
      layers.push_back(f.layers()[g + 1]);
    }
    result.fillings.push_back(from_sequence(std::move(layers)));
    int g = static_cast<int>(per_gap.size()) - 1;
    while (g >= 0 && ++pick[g] == per_gap[g].size()) pick[g--] = 0;
    if (g < 0) break;
  }
  return result;
}

// Majors.

/// Q on E plus extra elements X, with X split into ordered blocks
/// X_1, ..., X_{k-1}. Layer i is Q / (X_i ... X_{k-1}) \ (X_1 ... X_{i-1}), so
/// block i is what separates layer i from layer i + 1.
struct MajorStructure {
  Matroid q;
  std::vector<Subset> blocks;

  Subset extra() const {
    Subset x = 0;
    for (Subset b : blocks) x |= b;
    return x;
  }
};

/// Layer i of the flag encoded by (Q, blocks), 0-indexed.
inline Matroid major_layer(const Matroid& q, const std::vector<Subset>& blocks, int i) {
  Subset contract_set = 0, delete_set = 0;
  for (int j = 0; j < static_cast<int>(blocks.size()); ++j) {
    (j < i ? delete_set : contract_set) |= blocks[j];
  }
  return minor(q, contract_set, delete_set);
}

inline bool verify_major(const Matroid& q, const std::vector<Subset>& blocks, const FlagMatroid& f) {
  Subset x = 0;
  for (Subset b : blocks) {
    if (!is_subset(b, q.ground())) throw Error(Errc::kIndexOutOfRange, "block outside the ground set", {b});
    if (b & x) throw Error(Errc::kOverlappingSets, "blocks overlap", {b & x});
    x |= b;
  }
  if (q.n() - card(x) != f.n()) {
    throw Error(Errc::kGroundSetMismatch, "Q minus the blocks must have the flag's ground set");
  }
  if (static_cast<int>(blocks.size()) + 1 != f.layer_count()) return false;
  if (!q.is_independent(x)) return false;
  for (int i = 0; i < f.layer_count(); ++i) {
    if (major_layer(q, blocks, i) != f.layers()[i]) return false;
  }
  return true;
}

inline bool verify_major(const MajorStructure& major, const FlagMatroid& f) {
  return verify_major(major.q, major.blocks, f);
}

/// Brute-force search for a major with |X| = extra on elements n .. n+extra-1.
/// Q restricted to E must equal the top layer, so Q's bases are the top
/// layer's bases plus some of the r-sets meeting X; those choices are
/// enumerated as a binary counter, and for each matroid the ordered
/// partitions of X with block sizes equal to the rank gaps are tried.
/// Each candidate family counts against the budget.
inline std::optional<MajorStructure> search_major(const FlagMatroid& f, int extra, std::size_t budget) {
  const auto cards = f.cardinalities();
  if (extra != cards.back() - cards.front()) {
    throw Error(Errc::kBadArgument, "extra must equal rank(M_k) - rank(M_1)");
  }
  const int total = f.n() + extra;
  internal::check_ground(total);
  const int r = cards.back();
  const Subset x = full_set(total) & ~full_set(f.n());
  std::vector<Subset> optional_sets;
  for_each_combination(total, r, [&](Subset s) {
    if (s & x) optional_sets.push_back(s);
    return false;
  });
  if (optional_sets.size() > 40) {
    throw Error(Errc::kSearchSpaceTooLarge, "too many candidate bases for exhaustive major search");
  }
  // Ordered partitions of X into blocks of the gap sizes, in lexicographic order.
  std::vector<std::vector<Subset>> partitions;
  auto split = [&](auto&& self, Subset rest, std::size_t gap, std::vector<Subset>& acc) -> void {
    if (gap + 1 == cards.size()) {
      partitions.push_back(acc);
      return;
    }
    for_each_combination_of(rest, cards[gap + 1] - cards[gap], [&](Subset b) {
      acc.push_back(b);
      self(self, rest & ~b, gap + 1, acc);
      acc.pop_back();
      return false;
    });
  };
  std::vector<Subset> acc;
  split(split, x, 0, acc);

  const std::uint64_t limit = std::uint64_t{1} << optional_sets.size();
  std::size_t examined = 0;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (examined++ >= budget) {
      throw Error(Errc::kBudgetExhausted, "major search examined " + std::to_string(budget) + " candidates");
    }
    std::vector<Subset> bases = f.layers().back().bases();
    bool meets_all_of_x = x == 0;
    for (std::size_t i = 0; i < optional_sets.size(); ++i) {
      if ((mask >> i) & 1u) {
        bases.push_back(optional_sets[i]);
        meets_all_of_x = meets_all_of_x || is_subset(x, optional_sets[i]);
      }
    }
    if (!meets_all_of_x) continue;  // X must be independent
    std::optional<Matroid> q;
    try {
      q.emplace(total, std::move(bases));
    } catch (const Error&) {
      continue;
    }
    for (const auto& blocks : partitions) {
      if (verify_major(*q, blocks, f)) return MajorStructure{*q, blocks};
    }
  }
  return std::nullopt;
}

}  // namespace flagmat
