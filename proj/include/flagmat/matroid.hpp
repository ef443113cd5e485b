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

// Matroids on ground sets {0, ..., n-1}, stored by their bases.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagmat/error.hpp"
#include "flagmat/gf_linalg.hpp"
#include "flagmat/subset.hpp"

namespace flagmat {

namespace internal {

inline void check_ground(int n) {
  if (n < 0 || n > kMaxGround) {
    throw Error(Errc::kGroundTooLarge, "ground set size " + std::to_string(n) + " outside [0, 20]");
  }
}

inline void check_family_in_ground(int n, const std::vector<Subset>& family) {
  for (Subset s : family) {
    if (!is_subset(s, full_set(n))) {
      throw Error(Errc::kIndexOutOfRange, "set mentions an element outside the ground set", {s});
    }
  }
}

/// Rank table of the down-closure of `maximal`: entry S is the size of the
/// largest member of the down-closure contained in S.
inline std::vector<std::uint8_t> rank_table(int n, const std::vector<Subset>& maximal) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> table(size, 0);
  for (Subset b : maximal) table[b] = 1;
  for (int e = 0; e < n; ++e) {
    const Subset eb = bit(e);
    for (Subset s = 0; s < size; ++s) {
      if (!(s & eb) && table[s | eb]) table[s] = 1;
    }
  }
  std::vector<std::uint8_t> rank(size, 0);
  for (Subset s = 1; s < size; ++s) {
    if (table[s]) {
      rank[s] = static_cast<std::uint8_t>(card(s));
      continue;
    }
    std::uint8_t best = 0;
    for (Subset rest = s; rest != 0; rest &= rest - 1) {
      best = std::max(best, rank[s & ~bit(lowest(rest))]);
    }
    rank[s] = best;
  }
  return rank;
}

/// Largest independent subset of S found greedily from a rank table.
inline Subset greedy_basis_of(const std::vector<std::uint8_t>& rank, Subset s) {
  Subset out = 0;
  for (int e : elements(s)) {
    if (rank[out | bit(e)] == card(out) + 1) out |= bit(e);
  }
  return out;
}

/// A largest member of the family inside S. Works for any down-closed family,
/// unlike the greedy choice.
inline Subset largest_member_in(const std::vector<std::uint8_t>& rank, Subset s) {
  const int r = rank[s];
  for (Subset t = s;; t = (t - 1) & s) {
    if (card(t) == r && rank[t] == r) return t;
    if (t == 0) break;
  }
  return 0;
}

/// Checks local submodularity r(S+x) + r(S+y) >= r(S) + r(S+x+y). Together
/// with unit increase (automatic for a down-closed family) this makes r a
/// matroid rank function. On failure returns an augmentation counterexample
/// (I, J) with |I| < |J| and no j in J \ I making I + j independent.
inline std::optional<std::pair<Subset, Subset>> find_augmentation_failure(
    int n, const std::vector<std::uint8_t>& rank) {
  const Subset size = Subset{1} << n;
  for (Subset s = 0; s < size; ++s) {
    for (int x = 0; x < n; ++x) {
      if (contains(s, x)) continue;
      const Subset sx = s | bit(x);
      if (rank[sx] != rank[s]) continue;
      for (int y = x + 1; y < n; ++y) {
        if (contains(s, y)) continue;
        const Subset sy = s | bit(y);
        if (rank[sy] == rank[s] && rank[sx | bit(y)] > rank[s]) {
          return std::make_pair(largest_member_in(rank, s), largest_member_in(rank, sx | bit(y)));
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace internal

class Matroid {
 public:
  /// Validating constructor: the family must be a nonempty set of equal-size
  /// bases satisfying exchange. Throws AxiomViolation otherwise.
  Matroid(int n, std::vector<Subset> bases) : n_(n) {
    internal::check_ground(n);
    internal::check_family_in_ground(n, bases);
    canonicalize(bases);
    if (bases.empty()) throw Error(Errc::kAxiomViolation, "a matroid needs at least one basis", {}, 1);
    for (Subset b : bases) {
      if (card(b) != card(bases.front())) {
        throw Error(Errc::kAxiomViolation, "bases of different cardinality", {bases.front(), b}, 3);
      }
    }
    bases_ = std::move(bases);
    build_rank();
    if (auto bad = internal::find_augmentation_failure(n_, *rank_)) {
      throw Error(Errc::kAxiomViolation, "augmentation fails between two independent sets",
                  {bad->first, bad->second}, 3);
    }
  }

  /// For families already known to be matroid bases (results of matroid
  /// operations). Sorts but does not validate.
  static Matroid trusted(int n, std::vector<Subset> bases) {
    canonicalize(bases);
    return Matroid(n, std::move(bases), TrustedTag{});
  }

  int n() const { return n_; }
  int rank() const { return card(bases_.front()); }
  const std::vector<Subset>& bases() const { return bases_; }
  Subset ground() const { return full_set(n_); }

  int rank_of(Subset s) const {
    check_subset(s);
    return (*rank_)[s];
  }
  bool is_independent(Subset s) const { return rank_of(s) == card(s); }
  bool is_basis(Subset s) const { return card(s) == rank() && is_independent(s); }
  bool is_spanning(Subset s) const { return rank_of(s) == rank(); }
  bool is_loop(int e) const { return rank_of(bit(e)) == 0; }
  bool is_coloop(int e) const { return rank_of(ground() & ~bit(e)) < rank(); }

  Subset closure(Subset s) const {
    const int r = rank_of(s);
    Subset out = s;
    for (int e = 0; e < n_; ++e) {
      if (!contains(s, e) && (*rank_)[s | bit(e)] == r) out |= bit(e);
    }
    return out;
  }

  /// A maximal independent subset of S, chosen greedily in element order.
  Subset greedy_basis(Subset s) const {
    check_subset(s);
    return internal::greedy_basis_of(*rank_, s);
  }

  const std::vector<std::uint8_t>& rank_table() const { return *rank_; }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  struct TrustedTag {};
  Matroid(int n, std::vector<Subset> bases, TrustedTag) : n_(n), bases_(std::move(bases)) {
    internal::check_ground(n);
    if (bases_.empty()) throw Error(Errc::kInternal, "matroid with no bases");
    build_rank();
  }

  void build_rank() {
    rank_ = std::make_shared<const std::vector<std::uint8_t>>(internal::rank_table(n_, bases_));
  }
  void check_subset(Subset s) const {
    if (!is_subset(s, ground())) throw Error(Errc::kIndexOutOfRange, "set outside the ground set", {s});
  }

  int n_;
  std::vector<Subset> bases_;
  std::shared_ptr<const std::vector<std::uint8_t>> rank_;
};

// Derived families, all in canonical (cardinality, lexicographic) order.

inline std::vector<Subset> independent_sets(const Matroid& m) {
  std::vector<Subset> out;
  for (Subset s = 0; s <= m.ground(); ++s) {
    if (m.is_independent(s)) out.push_back(s);
  }
  canonicalize(out);
  return out;
}

inline std::vector<Subset> spanning_sets(const Matroid& m) {
  std::vector<Subset> out;
  for (Subset s = 0; s <= m.ground(); ++s) {
    if (m.is_spanning(s)) out.push_back(s);
  }
  canonicalize(out);
  return out;
}

inline std::vector<Subset> flats(const Matroid& m) {
  std::vector<Subset> out;
  for (Subset s = 0; s <= m.ground(); ++s) {
    if (m.closure(s) == s) out.push_back(s);
  }
  canonicalize(out);
  return out;
}

inline std::vector<Subset> circuits(const Matroid& m) {
  std::vector<Subset> out;
  for (Subset s = 1; s <= m.ground(); ++s) {
    if (m.is_independent(s)) continue;
    bool minimal = true;
    for (int e : elements(s)) {
      if (!m.is_independent(s & ~bit(e))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  canonicalize(out);
  return out;
}

inline Subset loops(const Matroid& m) {
  Subset out = 0;
  for (int e = 0; e < m.n(); ++e) {
    if (m.is_loop(e)) out |= bit(e);
  }
  return out;
}

inline Subset coloops(const Matroid& m) {
  Subset out = 0;
  for (int e = 0; e < m.n(); ++e) {
    if (m.is_coloop(e)) out |= bit(e);
  }
  return out;
}

/// Parallel classes: the rank-1 flats with their loops removed.
inline std::vector<Subset> parallel_classes(const Matroid& m) {
  const Subset loop_set = loops(m);
  std::vector<Subset> out;
  Subset seen = loop_set;
  for (int e = 0; e < m.n(); ++e) {
    if (contains(seen, e)) continue;
    const Subset cls = m.closure(bit(e)) & ~loop_set;
    seen |= cls;
    out.push_back(cls);
  }
  return out;
}

// Constructors.

/// Matroid from its full independent-set family, checking the three axioms in
/// order: the empty set is independent, the family is closed under subsets,
/// and augmentation holds.
inline Matroid matroid_from_independent_sets(int n, std::vector<Subset> family) {
  internal::check_ground(n);
  internal::check_family_in_ground(n, family);
  canonicalize(family);
  if (family.empty() || family.front() != 0) {
    throw Error(Errc::kAxiomViolation, "the empty set is not independent", {}, 1);
  }
  std::vector<char> member(std::size_t{1} << n, 0);
  for (Subset s : family) member[s] = 1;
  for (Subset s : family) {
    for (int e : elements(s)) {
      if (!member[s & ~bit(e)]) {
        throw Error(Errc::kAxiomViolation, "independent set has a dependent subset",
                    {s, s & ~bit(e)}, 2);
      }
    }
  }
  std::vector<Subset> maximal;
  for (Subset s : family) {
    bool is_max = true;
    for (int e = 0; e < n && is_max; ++e) {
      if (!contains(s, e) && member[s | bit(e)]) is_max = false;
    }
    if (is_max) maximal.push_back(s);
  }
  const auto table = internal::rank_table(n, maximal);
  if (auto bad = internal::find_augmentation_failure(n, table)) {
    throw Error(Errc::kAxiomViolation, "augmentation fails between two independent sets",
                {bad->first, bad->second}, 3);
  }
  // Augmentation forces all maximal sets to share one size.
  return Matroid::trusted(n, std::move(maximal));
}

inline Matroid uniform(int r, int n) {
  internal::check_ground(n);
  if (r < 0 || r > n) throw Error(Errc::kBadRank, "uniform matroid needs 0 <= r <= n");
  std::vector<Subset> bases;
  for_each_combination(n, r, [&](Subset s) {
    bases.push_back(s);
    return false;
  });
  return Matroid::trusted(n, std::move(bases));
}

/// Column matroid of A: ground set = columns, independence = linear
/// independence over GF(p).
inline Matroid linear_matroid(const GFMatrix& a) {
  internal::check_ground(a.cols());
  const int r = rank(a);
  std::vector<Subset> bases;
  for_each_combination(a.cols(), r, [&](Subset s) {
    if (rank(select_cols(a, s)) == r) bases.push_back(s);
    return false;
  });
  return Matroid::trusted(a.cols(), std::move(bases));
}

// Duality and minors.

inline Matroid dual(const Matroid& m) {
  std::vector<Subset> bases;
  bases.reserve(m.bases().size());
  for (Subset b : m.bases()) bases.push_back(m.ground() & ~b);
  return Matroid::trusted(m.n(), std::move(bases));
}

/// Survivor index map of a minor: entry e is the new index of e, or -1.
inline std::vector<int> minor_index_map(int n, Subset removed) {
  std::vector<int> map(n, -1);
  int pos = 0;
  for (int e = 0; e < n; ++e) {
    if (!contains(removed, e)) map[e] = pos++;
  }
  return map;
}

/// M / C \ D with survivors re-indexed in order. Contraction of C keeps the
/// bases meeting C in a basis of C; deletion of D keeps the bases meeting D
/// minimally. Loops and coloops fall out of the same formulas.
inline Matroid minor(const Matroid& m, Subset contract_set, Subset delete_set) {
  if (contract_set & delete_set) {
    throw Error(Errc::kOverlappingSets, "contract and delete sets overlap",
                {contract_set & delete_set});
  }
  const Subset ground = m.ground();
  if (!is_subset(contract_set | delete_set, ground)) {
    throw Error(Errc::kIndexOutOfRange, "minor set outside the ground set", {contract_set | delete_set});
  }
  const int rc = m.rank_of(contract_set);
  int min_meet = kMaxGround + 1;
  for (Subset b : m.bases()) {
    if (card(b & contract_set) == rc) min_meet = std::min(min_meet, card(b & delete_set));
  }
  std::vector<Subset> bases;
  const Subset removed = contract_set | delete_set;
  for (Subset b : m.bases()) {
    if (card(b & contract_set) == rc && card(b & delete_set) == min_meet) {
      bases.push_back(compress(b & ~removed, removed));
    }
  }
  return Matroid::trusted(m.n() - card(removed), std::move(bases));
}

inline void check_element(const Matroid& m, int e) {
  if (e < 0 || e >= m.n()) throw Error(Errc::kIndexOutOfRange, "element " + std::to_string(e));
}

inline Matroid delete_element(const Matroid& m, int e) {
  check_element(m, e);
  return minor(m, 0, bit(e));
}

inline Matroid contract_element(const Matroid& m, int e) {
  check_element(m, e);
  return minor(m, bit(e), 0);
}

/// Relabels element e as perm[e].
inline Matroid permute(const Matroid& m, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != m.n()) throw Error(Errc::kShapeMismatch, "permutation length");
  Subset seen = 0;
  for (int v : perm) {
    if (v < 0 || v >= m.n() || contains(seen, v)) throw Error(Errc::kBadArgument, "not a permutation");
    seen |= bit(v);
  }
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    Subset img = 0;
    for (int e : elements(b)) img |= bit(perm[e]);
    bases.push_back(img);
  }
  return Matroid::trusted(m.n(), std::move(bases));
}

/// Disjoint union; elements of `b` follow those of `a`.
inline Matroid direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<Subset> bases;
  for (Subset x : a.bases()) {
    for (Subset y : b.bases()) bases.push_back(x | (y << a.n()));
  }
  return Matroid::trusted(a.n() + b.n(), std::move(bases));
}

// Isomorphism.

namespace internal {

inline std::vector<int> basis_membership(const Matroid& m) {
  std::vector<int> counts(m.n(), 0);
  for (Subset b : m.bases()) {
    for (int e : elements(b)) ++counts[e];
  }
  return counts;
}

/// Simultaneous isomorphism of matroid lists: one bijection must carry every
/// ms[k] onto ns[k]. Elements are assigned in order, candidates tried in
/// increasing order, so the first complete assignment is lexicographically
/// least.
class IsoSearch {
 public:
  IsoSearch(std::vector<const Matroid*> ms, std::vector<const Matroid*> ns)
      : ms_(std::move(ms)), ns_(std::move(ns)), size_(ms_.front()->n()),
        image_(std::size_t{1} << size_, 0), map_(size_, -1) {
    for (std::size_t k = 0; k < ms_.size(); ++k) {
      cm_.push_back(basis_membership(*ms_[k]));
      cn_.push_back(basis_membership(*ns_[k]));
    }
  }

  std::optional<std::vector<int>> run() {
    if (dfs(0, 0)) return map_;
    return std::nullopt;
  }

 private:
  bool compatible(int i, int j) const {
    for (std::size_t k = 0; k < cm_.size(); ++k) {
      if (cm_[k][i] != cn_[k][j]) return false;
    }
    return true;
  }

  bool dfs(int i, Subset used) {
    if (i == size_) return true;
    for (int j = 0; j < size_; ++j) {
      if (contains(used, j) || !compatible(i, j)) continue;
      bool ok = true;
      // Every subset of the assigned prefix, extended by i, keeps its rank.
      for (Subset t = 0; t < bit(i) && ok; ++t) {
        const Subset img = image_[t] | bit(j);
        image_[t | bit(i)] = img;
        for (std::size_t k = 0; k < ms_.size() && ok; ++k) {
          ok = ms_[k]->rank_table()[t | bit(i)] == ns_[k]->rank_table()[img];
        }
      }
      if (!ok) continue;
      map_[i] = j;
      if (dfs(i + 1, used | bit(j))) return true;
    }
    map_[i] = -1;
    return false;
  }

  std::vector<const Matroid*> ms_, ns_;
  int size_;
  std::vector<std::vector<int>> cm_, cn_;
  std::vector<Subset> image_;
  std::vector<int> map_;
};

}  // namespace internal

/// Ground-set bijection f (element e of M goes to f[e] of N) carrying bases
/// onto bases. The lexicographically least such f is returned.
inline std::optional<std::vector<int>> is_isomorphic(const Matroid& m, const Matroid& n) {
  if (m.n() != n.n() || m.rank() != n.rank() || m.bases().size() != n.bases().size()) {
    return std::nullopt;
  }
  auto cm = internal::basis_membership(m), cn = internal::basis_membership(n);
  std::sort(cm.begin(), cm.end());
  std::sort(cn.begin(), cn.end());
  if (cm != cn) return std::nullopt;
  return internal::IsoSearch({&m}, {&n}).run();
}

struct MinorWitness {
  Subset contract = 0;
  Subset del = 0;
  std::vector<int> bijection;  // minor element -> target element
};

/// Searches for C, D with M / C \ D isomorphic to N. C ranges over independent
/// sets of size rank(M) - rank(N) and D over sets keeping M / C at full rank,
/// both in lexicographic order; the first hit is returned.
inline std::optional<MinorWitness> has_minor_isomorphic_to(const Matroid& m, const Matroid& n) {
  const int c = m.rank() - n.rank();
  const int d = (m.n() - n.n()) - c;
  if (c < 0 || d < 0) return std::nullopt;
  const Subset ground = m.ground();
  const auto target_counts = [&] {
    auto v = internal::basis_membership(n);
    std::sort(v.begin(), v.end());
    return v;
  }();
  std::optional<MinorWitness> found;
  for_each_combination(m.n(), c, [&](Subset cs) {
    if (!m.is_independent(cs)) return false;
    return for_each_combination_of(ground & ~cs, d, [&](Subset ds) {
      if (m.rank_of(ground & ~ds) != m.rank()) return false;
      std::size_t count = 0;
      for (Subset b : m.bases()) {
        if (is_subset(cs, b) && !(b & ds)) ++count;
      }
      if (count != n.bases().size()) return false;
      const Matroid sub = minor(m, cs, ds);
      auto counts = internal::basis_membership(sub);
      std::sort(counts.begin(), counts.end());
      if (counts != target_counts) return false;
      if (auto f = is_isomorphic(sub, n)) {
        found = MinorWitness{cs, ds, std::move(*f)};
        return true;
      }
      return false;
    });
  });
  return found;
}

}  // namespace flagmat
