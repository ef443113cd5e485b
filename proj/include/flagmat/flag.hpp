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

// Flag matroids as feasible-set families, with their sequential
// representation (the basis layers, one matroid per cardinality).

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagmat/error.hpp"
#include "flagmat/lift.hpp"
#include "flagmat/matroid.hpp"
#include "flagmat/subset.hpp"

namespace flagmat {

struct FlagAxiomVerdict {
  bool ok = true;
  int axiom = 0;               // 1 or 2 on failure
  std::vector<Subset> witness;  // axiom 1: (F, G); axiom 2: (F)
  int element = -1;            // axiom 1: x; axiom 2: e
};

/// Direct check of the two feasible-set axioms. The f in axiom 2 ranges over
/// G + e and F + e respectively.
inline FlagAxiomVerdict check_flag_axioms(int n, std::vector<Subset> family) {
  internal::check_ground(n);
  internal::check_family_in_ground(n, family);
  canonicalize(family);
  std::vector<char> member(std::size_t{1} << n, 0);
  for (Subset s : family) member[s] = 1;

  for (Subset f : family) {
    for (Subset g : family) {
      if (card(f) != card(g) || f == g) continue;
      for (int x : elements(f & ~g)) {
        bool found = false;
        for (int y : elements(g & ~f)) {
          if (member[(g | bit(x)) & ~bit(y)]) {
            found = true;
            break;
          }
        }
        if (!found) return {false, 1, {f, g}, x};
      }
    }
  }

  std::vector<int> cards;
  for (Subset s : family) {
    if (cards.empty() || cards.back() != card(s)) cards.push_back(card(s));
  }
  if (cards.size() < 2) return {};

  auto exchange_set = [&](Subset s, int e) {
    Subset out = 0;
    const Subset se = s | bit(e);
    for (int f : elements(se)) {
      if (member[se & ~bit(f)]) out |= bit(f);
    }
    return out;
  };
  for (Subset f : family) {
    if (card(f) == cards.front()) continue;
    const int below = *(std::lower_bound(cards.begin(), cards.end(), card(f)) - 1);
    for (int e = 0; e < n; ++e) {
      if (contains(f, e)) continue;
      const Subset upper = exchange_set(f, e);
      bool found = false;
      for (Subset g : family) {
        if (card(g) == below && is_subset(g, f) && is_subset(exchange_set(g, e), upper)) {
          found = true;
          break;
        }
      }
      if (!found) return {false, 2, {f}, e};
    }
  }
  return {};
}

class FlagMatroid;
FlagMatroid from_feasible_sets(int n, std::vector<Subset> family);
FlagMatroid from_sequence(std::vector<Matroid> layers);

class FlagMatroid {
 public:
  int n() const { return n_; }
  const std::vector<Subset>& feasible() const { return feasible_; }
  /// Sequential representation: one matroid per feasible cardinality.
  const std::vector<Matroid>& layers() const { return layers_; }
  int layer_count() const { return static_cast<int>(layers_.size()); }
  std::vector<int> cardinalities() const {
    std::vector<int> out;
    for (const Matroid& m : layers_) out.push_back(m.rank());
    return out;
  }
  int rank() const { return layers_.back().rank(); }
  bool is_feasible(Subset s) const {
    return std::binary_search(feasible_.begin(), feasible_.end(), s, card_lex_less);
  }

  friend bool operator==(const FlagMatroid& a, const FlagMatroid& b) {
    return a.n_ == b.n_ && a.feasible_ == b.feasible_;
  }

 private:
  FlagMatroid(int n, std::vector<Matroid> layers) : n_(n), layers_(std::move(layers)) {
    for (const Matroid& m : layers_) {
      feasible_.insert(feasible_.end(), m.bases().begin(), m.bases().end());
    }
  }

  friend FlagMatroid from_feasible_sets(int n, std::vector<Subset> family);
  friend FlagMatroid from_sequence(std::vector<Matroid> layers);

  int n_;
  std::vector<Subset> feasible_;
  std::vector<Matroid> layers_;
};

/// Splits the family by cardinality, checks each layer is a basis family and
/// each layer lifts the one below it.
inline FlagMatroid from_feasible_sets(int n, std::vector<Subset> family) {
  internal::check_ground(n);
  internal::check_family_in_ground(n, family);
  canonicalize(family);
  if (family.empty()) throw Error(Errc::kEmptyResult, "a flag matroid needs at least one feasible set");
  std::vector<Matroid> layers;
  std::size_t start = 0;
  while (start < family.size()) {
    std::size_t stop = start;
    while (stop < family.size() && card(family[stop]) == card(family[start])) ++stop;
    const int index = static_cast<int>(layers.size());
    try {
      layers.emplace_back(n, std::vector<Subset>(family.begin() + start, family.begin() + stop));
    } catch (const Error& err) {
      throw Error(Errc::kLayerNotMatroid,
                  "layer " + std::to_string(index) + " (cardinality " +
                      std::to_string(card(family[start])) + "): " + err.detail(),
                  err.witness(), index);
    }
    if (index > 0) {
      const LiftVerdict v = is_lift(layers[index], layers[index - 1]);
      if (!v.holds) {
        throw Error(Errc::kNotALift,
                    "layer " + std::to_string(index) + " does not lift layer " +
                        std::to_string(index - 1) + "; witness is a flat of the lower layer",
                    v.witness, index);
      }
    }
    start = stop;
  }
  return FlagMatroid(n, std::move(layers));
}

inline FlagMatroid from_sequence(std::vector<Matroid> layers) {
  if (layers.empty()) throw Error(Errc::kEmptyResult, "empty matroid sequence");
  const int n = layers.front().n();
  for (std::size_t i = 1; i < layers.size(); ++i) {
    const int index = static_cast<int>(i);
    if (layers[i].n() != n) throw Error(Errc::kGroundSetMismatch, "layers on different ground sets", {}, index);
    if (layers[i].rank() <= layers[i - 1].rank()) {
      throw Error(Errc::kRankCollision, "ranks must increase strictly", {}, index);
    }
    const LiftVerdict v = is_lift(layers[i], layers[i - 1]);
    if (!v.holds) {
      throw Error(Errc::kNotALift,
                  "matroid " + std::to_string(i) + " does not lift matroid " + std::to_string(i - 1),
                  v.witness, index);
    }
  }
  return FlagMatroid(n, std::move(layers));
}

/// Independent and spanning sets of M with size in [s, r].
inline FlagMatroid flag_interval(const Matroid& m, int s, int r) {
  if (s < 0 || s > r || r > m.n()) throw Error(Errc::kBadArgument, "need 0 <= s <= r <= n");
  std::vector<Subset> family;
  for (Subset x = 0; x <= m.ground(); ++x) {
    const int c = card(x);
    if (c >= s && c <= r && (m.is_independent(x) || m.is_spanning(x))) family.push_back(x);
  }
  if (family.empty()) throw Error(Errc::kEmptyInterval, "no independent or spanning set in the interval");
  return from_feasible_sets(m.n(), std::move(family));
}

inline FlagMatroid independent_flag(const Matroid& m) { return flag_interval(m, 0, m.rank()); }
inline FlagMatroid basis_flag(const Matroid& m) { return flag_interval(m, m.rank(), m.rank()); }
inline FlagMatroid spanning_flag(const Matroid& m) { return flag_interval(m, m.rank(), m.n()); }

// Minors, duality and chopping act on the feasible family directly.

inline FlagMatroid flag_dual(const FlagMatroid& f) {
  std::vector<Subset> family;
  for (Subset s : f.feasible()) family.push_back(full_set(f.n()) & ~s);
  return from_feasible_sets(f.n(), std::move(family));
}

inline void check_chop(const FlagMatroid& f, int cardinality) {
  const auto cards = f.cardinalities();
  if (std::find(cards.begin(), cards.end(), cardinality) == cards.end()) {
    throw Error(Errc::kNoSuchLayer, "no feasible sets of cardinality " + std::to_string(cardinality));
  }
  if (cards.size() < 2) throw Error(Errc::kLastLayer, "cannot chop the only layer");
}

/// {F \ C : C inside F, F disjoint from D}, re-indexed, then with the listed
/// cardinalities (of the resulting minor) chopped off.
inline FlagMatroid flag_minor(const FlagMatroid& f, Subset contract_set, Subset delete_set,
                              const std::vector<int>& chops = {}) {
  if (contract_set & delete_set) {
    throw Error(Errc::kOverlappingSets, "contract and delete sets overlap", {contract_set & delete_set});
  }
  if (!is_subset(contract_set | delete_set, full_set(f.n()))) {
    throw Error(Errc::kIndexOutOfRange, "minor set outside the ground set", {contract_set | delete_set});
  }
  const Subset removed = contract_set | delete_set;
  std::vector<Subset> family;
  for (Subset s : f.feasible()) {
    if (is_subset(contract_set, s) && !(s & delete_set)) family.push_back(compress(s & ~removed, removed));
  }
  if (family.empty()) throw Error(Errc::kEmptyResult, "the minor has no feasible sets");
  FlagMatroid out = from_feasible_sets(f.n() - card(removed), std::move(family));
  for (int c : chops) {
    check_chop(out, c);
    std::vector<Subset> kept;
    for (Subset s : out.feasible()) {
      if (card(s) != c) kept.push_back(s);
    }
    out = from_feasible_sets(out.n(), std::move(kept));
  }
  return out;
}

inline FlagMatroid flag_delete(const FlagMatroid& f, int e) {
  if (e < 0 || e >= f.n()) throw Error(Errc::kIndexOutOfRange, "element " + std::to_string(e));
  return flag_minor(f, 0, bit(e));
}

inline FlagMatroid flag_contract(const FlagMatroid& f, int e) {
  if (e < 0 || e >= f.n()) throw Error(Errc::kIndexOutOfRange, "element " + std::to_string(e));
  return flag_minor(f, bit(e), 0);
}

/// Removes every feasible set of the given cardinality.
inline FlagMatroid chop(const FlagMatroid& f, int cardinality) {
  check_chop(f, cardinality);
  return flag_minor(f, 0, 0, {cardinality});
}

/// Largest feasible subset size of S, or nullopt when S contains no feasible
/// set at all.
inline std::optional<int> flag_rank(const FlagMatroid& f, Subset s) {
  if (!is_subset(s, full_set(f.n()))) throw Error(Errc::kIndexOutOfRange, "set outside the ground set", {s});
  std::optional<int> best;
  for (Subset x : f.feasible()) {
    if (is_subset(x, s)) best = std::max(best.value_or(0), card(x));
  }
  return best;
}

/// Relabels element e as perm[e].
inline FlagMatroid flag_permute(const FlagMatroid& f, const std::vector<int>& perm) {
  std::vector<Matroid> layers;
  for (const Matroid& m : f.layers()) layers.push_back(permute(m, perm));
  return from_sequence(std::move(layers));
}

// Isomorphism and minor search.

inline std::optional<std::vector<int>> flag_isomorphic(const FlagMatroid& a, const FlagMatroid& b) {
  if (a.n() != b.n() || a.layer_count() != b.layer_count()) return std::nullopt;
  std::vector<const Matroid*> la, lb;
  for (int i = 0; i < a.layer_count(); ++i) {
    const Matroid& x = a.layers()[i];
    const Matroid& y = b.layers()[i];
    if (x.rank() != y.rank() || x.bases().size() != y.bases().size()) return std::nullopt;
    la.push_back(&x);
    lb.push_back(&y);
  }
  return internal::IsoSearch(la, lb).run();
}

struct FlagMinorWitness {
  Subset contract = 0;
  Subset del = 0;
  std::vector<int> chops;      // cardinalities of the minor that are chopped
  std::vector<int> bijection;  // minor element -> target element
};

/// Searches for a contract set C, delete set D and chop list turning F into a
/// copy of G. Candidates are ordered by |C|, then C, then D lexicographically.
inline std::optional<FlagMinorWitness> flag_has_minor(const FlagMatroid& f, const FlagMatroid& g) {
  const int removed = f.n() - g.n();
  if (removed < 0 || g.layer_count() > f.layer_count()) return std::nullopt;
  const auto target_cards = g.cardinalities();
  const Subset ground = full_set(f.n());
  std::optional<FlagMinorWitness> found;
  for (int c = 0; c <= removed && !found; ++c) {
    for_each_combination(f.n(), c, [&](Subset cs) {
      return for_each_combination_of(ground & ~cs, removed - c, [&](Subset ds) {
        // Layer i survives iff some basis contains C and avoids D; it then
        // has cardinality rank - |C|. Keep only those matching G.
        std::vector<Matroid> kept;
        std::vector<int> chops;
        for (const Matroid& layer : f.layers()) {
          if (!layer.is_independent(cs)) continue;
          bool survives = false;
          for (Subset b : layer.bases()) {
            if (is_subset(cs, b) && !(b & ds)) {
              survives = true;
              break;
            }
          }
          if (!survives) continue;
          const int size = layer.rank() - c;
          if (std::find(target_cards.begin(), target_cards.end(), size) == target_cards.end()) {
            chops.push_back(size);
            continue;
          }
          if (static_cast<int>(kept.size()) >= g.layer_count() ||
              target_cards[kept.size()] != size) {
            return false;
          }
          const Matroid sub = minor(layer, cs, ds);
          if (sub.bases().size() != g.layers()[kept.size()].bases().size()) return false;
          kept.push_back(sub);
        }
        if (static_cast<int>(kept.size()) != g.layer_count()) return false;
        std::vector<const Matroid*> la, lb;
        for (int i = 0; i < g.layer_count(); ++i) {
          la.push_back(&kept[i]);
          lb.push_back(&g.layers()[i]);
        }
        if (auto bij = internal::IsoSearch(la, lb).run()) {
          found = FlagMinorWitness{cs, ds, chops, std::move(*bij)};
          return true;
        }
        return false;
      });
    });
  }
  return found;
}

}  // namespace flagmat
