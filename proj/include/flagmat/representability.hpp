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

// Representations of flag matroids over prime fields and the GF(2) / GF(3)
// decision procedures.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagmat/classify.hpp"
#include "flagmat/error.hpp"
#include "flagmat/flag.hpp"
#include "flagmat/gf_linalg.hpp"
#include "flagmat/linear_flag.hpp"
#include "flagmat/major.hpp"
#include "flagmat/matroid.hpp"

namespace flagmat {

// Constructions.

/// Representation of the flag whose feasible sets are all sets of size 1..r
/// (size 0 alone when r = 0). Rank at most one needs only a constant row;
/// otherwise an r x n Vandermonde matrix on nodes 0..n-1, which needs p >= n.
inline FlagRepresentation uniform_flag_representation(int r, int n, FieldPrime field) {
  internal::check_ground(n);
  if (r < 0 || r > n) throw Error(Errc::kBadRank, "need 0 <= r <= n");
  if (r == 0) return FlagRepresentation(GFMatrix(field, 0, n), {0});
  if (r == 1) {
    return FlagRepresentation(GFMatrix(field, {std::vector<int>(n, 1)}), {1});
  }
  if (field.p() < n) {
    throw Error(Errc::kFieldTooSmall, "GF(" + std::to_string(field.p()) + ") has fewer than " +
                                          std::to_string(n) + " distinct nodes");
  }
  GFMatrix a(field, r, n);
  for (int c = 0; c < n; ++c) {
    int power = 1;
    for (int row = 0; row < r; ++row) {
      a.set(row, c, power);
      power = field.mul(power, c);
    }
  }
  std::vector<int> levels;
  for (int d = 1; d <= r; ++d) levels.push_back(d);
  return FlagRepresentation(std::move(a), std::move(levels));
}

/// Representation of the dual flag: rows x_1..x_{n-d_1} from the nested kernel
/// chain, levels n - d_k < ... < n - d_1.
inline FlagRepresentation dual_representation(const FlagRepresentation& rep) {
  const GFMatrix& a = rep.matrix;
  const int n = a.cols();
  const auto chain = nested_kernel_chain(a, rep.levels);
  GFMatrix b = matrix_from_rows(a.field(), n, chain);
  std::vector<int> levels;
  for (auto it = rep.levels.rbegin(); it != rep.levels.rend(); ++it) levels.push_back(n - *it);
  FlagRepresentation out(std::move(b), std::move(levels));
  if (out.flag() != flag_dual(rep.flag())) {
    throw Error(Errc::kInternal, "kernel chain does not represent the dual flag");
  }
  return out;
}

/// Drops column e. Levels whose prefix loses rank (e was a coloop there) are
/// removed, matching the set-system deletion; the matrix is cut to the new
/// top level.
inline FlagRepresentation delete_representation(const FlagRepresentation& rep, int e) {
  if (e < 0 || e >= rep.matrix.cols()) throw Error(Errc::kIndexOutOfRange, "column " + std::to_string(e));
  const GFMatrix b = drop_col(rep.matrix, e);
  std::vector<int> levels;
  for (int d : rep.levels) {
    if (rank(prefix_rows(b, d)) == d) levels.push_back(d);
  }
  if (levels.empty()) {
    throw Error(Errc::kLevelCollapse, "element " + std::to_string(e) + " is a coloop of every layer");
  }
  const int top = levels.back();
  return FlagRepresentation(prefix_rows(b, top), std::move(levels));
}

inline FlagRepresentation contract_representation(const FlagRepresentation& rep, int e) {
  if (e < 0 || e >= rep.matrix.cols()) throw Error(Errc::kIndexOutOfRange, "column " + std::to_string(e));
  try {
    return dual_representation(delete_representation(dual_representation(rep), e));
  } catch (const Error& err) {
    if (err.code() != Errc::kLevelCollapse) throw;
    throw Error(Errc::kLevelCollapse, "element " + std::to_string(e) + " is a loop of every layer");
  }
}

/// Removes the level equal to `cardinality`.
inline FlagRepresentation chop_representation(const FlagRepresentation& rep, int cardinality) {
  auto it = std::find(rep.levels.begin(), rep.levels.end(), cardinality);
  if (it == rep.levels.end()) {
    throw Error(Errc::kNoSuchLayer, "no level " + std::to_string(cardinality));
  }
  if (rep.levels.size() < 2) throw Error(Errc::kLastLayer, "cannot chop the only level");
  std::vector<int> levels = rep.levels;
  levels.erase(levels.begin() + (it - rep.levels.begin()));
  const int top = levels.back();
  return FlagRepresentation(prefix_rows(rep.matrix, top), std::move(levels));
}

struct MajorRepresentation {
  GFMatrix matrix;  // [A | 0 over I_s]
  MajorStructure major;
};

/// Appends s = d_k - d_1 unit columns; extra column j is the unit vector of
/// row d_1 + j (0-indexed) and goes in the block of the first level above
/// that row.
inline MajorRepresentation major_from_representation(const FlagRepresentation& rep) {
  const auto& lv = rep.levels;
  if (lv.size() < 2) throw Error(Errc::kSingleLevel, "a single level needs no major");
  const GFMatrix& a = rep.matrix;
  const int n = a.cols();
  const int s = lv.back() - lv.front();
  if (n + s > kMaxMatrixDim || n + s > kMaxGround) {
    throw Error(Errc::kGroundTooLarge, "major would exceed 20 elements");
  }
  GFMatrix big(a.field(), a.rows(), n + s);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < n; ++c) big.set(r, c, a.at(r, c));
  }
  std::vector<Subset> blocks(lv.size() - 1, 0);
  for (int j = 0; j < s; ++j) {
    const int row = lv.front() + j;
    big.set(row, n + j, 1);
    std::size_t block = 0;
    while (!(lv[block] <= row && row < lv[block + 1])) ++block;
    blocks[block] |= bit(n + j);
  }
  MajorStructure major{linear_matroid(big), std::move(blocks)};
  if (!verify_major(major, rep.flag())) throw Error(Errc::kInternal, "identity-block major fails verification");
  return {std::move(big), std::move(major)};
}

/// Equal row spaces, compared through reduced echelon forms.
inline bool projectively_equivalent(const GFMatrix& a, const GFMatrix& b) {
  if (a.field() != b.field()) throw Error(Errc::kFieldMismatch, "projective equivalence across fields");
  if (a.cols() != b.cols()) throw Error(Errc::kShapeMismatch, "column counts differ");
  const EchelonForm ea = rref(a), eb = rref(b);
  if (ea.pivots != eb.pivots) return false;
  const int r = static_cast<int>(ea.pivots.size());
  return prefix_rows(ea.reduced, r) == prefix_rows(eb.reduced, r);
}

namespace internal {

/// Column scaling s with rowspace(B diag(s)) = rowspace(A), for full-row-rank
/// A, B representing the same matroid. Found by bringing both to standard form
/// on a common basis and propagating the entry ratios along the bipartite
/// support graph.
inline std::optional<std::vector<int>> align_column_scaling(const GFMatrix& a, const GFMatrix& b) {
  const FieldPrime& f = a.field();
  const int n = a.cols();
  const EchelonForm ea = rref(a);
  const int r = static_cast<int>(ea.pivots.size());
  std::vector<int> scale(n, 0);
  if (r == 0) {
    std::fill(scale.begin(), scale.end(), 1);
    return scale;
  }
  // Standard forms on A's pivot basis.
  const GFMatrix sa = prefix_rows(ea.reduced, r);
  const GFMatrix bp = select_cols(b, std::span<const int>(ea.pivots));
  if (rank(bp) != r) return std::nullopt;
  const GFMatrix sb = multiply(solve_left_transform(GFMatrix::identity(f, r), bp), b);
  // Unknowns: scale of each column. Basis column t and column c with nonzero
  // entry in row t satisfy scale[c] = scale[pivot_t] * sa(t, c) / sb(t, c).
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, factor for neighbor = mine * factor)
  for (int t = 0; t < r; ++t) {
    const int pc = ea.pivots[t];
    for (int c = 0; c < n; ++c) {
      if (c == pc) continue;
      const int x = sa.at(t, c), y = sb.at(t, c);
      if ((x == 0) != (y == 0)) return std::nullopt;
      if (x == 0) continue;
      const int ratio = f.mul(x, f.inv(y));
      adj[pc].emplace_back(c, ratio);
      adj[c].emplace_back(pc, f.inv(ratio));
    }
  }
  for (int start = 0; start < n; ++start) {
    if (scale[start] != 0) continue;
    scale[start] = 1;
    std::vector<int> queue{start};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int u = queue[q];
      for (const auto& [v, factor] : adj[u]) {
        const int want = f.mul(scale[u], factor);
        if (scale[v] == 0) {
          scale[v] = want;
          queue.push_back(v);
        } else if (scale[v] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return scale;
}

inline GFMatrix scale_columns(const GFMatrix& a, const std::vector<int>& scale) {
  GFMatrix out = a;
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out.set(r, c, a.field().mul(a.at(r, c), scale[c]));
  }
  return out;
}

}  // namespace internal

/// Joins a representation of (M_1..M_k) with one of (M_k, M_{k+1}, ...): B's
/// columns are rescaled so that its first block spans A's row space, then
/// T with A = T B_{<=d_k} is applied as diag(T, I).
inline FlagRepresentation stitch_representations(const FlagRepresentation& rep_a,
                                                 const FlagRepresentation& rep_b) {
  const GFMatrix& a = rep_a.matrix;
  const GFMatrix& b = rep_b.matrix;
  if (a.field() != b.field()) throw Error(Errc::kFieldMismatch, "stitching across fields");
  if (a.cols() != b.cols()) throw Error(Errc::kShapeMismatch, "column counts differ");
  const int ra = rep_a.levels.back();
  if (rep_b.levels.front() != ra) {
    throw Error(Errc::kNoTransform, "B's first level must equal A's top level");
  }
  std::vector<int> levels = rep_a.levels;
  levels.insert(levels.end(), rep_b.levels.begin() + 1, rep_b.levels.end());
  if (ra == 0) return FlagRepresentation(b, std::move(levels));

  const GFMatrix b_low = prefix_rows(b, ra);
  if (linear_matroid(a) != linear_matroid(b_low)) {
    throw Error(Errc::kNoTransform, "the shared layer differs");
  }
  const auto scale = internal::align_column_scaling(a, b_low);
  if (!scale) throw Error(Errc::kNoTransform, "no column scaling aligns the shared layer");
  const GFMatrix bs = internal::scale_columns(b, *scale);
  const GFMatrix t = solve_left_transform(a, prefix_rows(bs, ra));
  GFMatrix t_hat = GFMatrix::identity(a.field(), b.rows());
  for (int i = 0; i < ra; ++i) {
    for (int j = 0; j < ra; ++j) t_hat.set(i, j, t.at(i, j));
  }
  return FlagRepresentation(multiply(t_hat, bs), std::move(levels));
}

// Brute-force search.

namespace internal {

/// Enumerates reduced echelon matrices whose column matroid equals M. Pivots
/// sit on M's lexicographically least basis and loops are zero columns, so
/// each row space is met exactly once. With `normalize`, every non-pivot
/// column has first nonzero entry 1 (one representative per column scaling
/// class). Columns are filled left to right; after each column the
/// independent sets and circuits it completes are checked.
class EchelonSearch {
 public:
  EchelonSearch(const Matroid& m, FieldPrime field, bool normalize, double max_log2)
      : m_(m), f_(field), d_(m.rank()), normalize_(normalize) {
    const Subset basis = m.greedy_basis(m.ground());
    const Subset loop_set = loops(m);
    pivot_row_.assign(m.n(), -1);
    int t = 0;
    for (int e : elements(basis)) pivot_row_[e] = t++;
    double log2_space = 0;
    int pivots_seen = 0;
    active_rows_.assign(m.n(), 0);
    for (int c = 0; c < m.n(); ++c) {
      if (pivot_row_[c] >= 0) {
        ++pivots_seen;
        continue;
      }
      if (contains(loop_set, c)) continue;
      active_rows_[c] = pivots_seen;
      log2_space += pivots_seen * std::log2(static_cast<double>(field.p()));
    }
    if (log2_space > max_log2) {
      throw Error(Errc::kSearchSpaceTooLarge,
                  "search space of about 2^" + std::to_string(static_cast<int>(log2_space)) + " matrices");
    }
    // Sets to test once column c is placed: every S with max element c and
    // |S| <= d + 1 that is independent or a circuit in M.
    checks_.resize(m.n());
    for (int c = 0; c < m.n(); ++c) {
      for (Subset rest = 0; rest < bit(c); ++rest) {
        if (card(rest) > d_) continue;
        const Subset s = rest | bit(c);
        if (m.is_independent(s)) {
          checks_[c].push_back({s, true});
        } else if (is_circuit(s)) {
          checks_[c].push_back({s, false});
        }
      }
    }
    columns_.assign(m.n(), GFVector(d_, 0));
  }

  /// Calls fn(matrix) for each solution until fn returns true.
  template <typename Fn>
  bool run(Fn&& fn) {
    return place(0, fn);
  }

 private:
  struct Check {
    Subset set;
    bool independent;
  };

  bool is_circuit(Subset s) const {
    if (m_.is_independent(s)) return false;
    for (int e : elements(s)) {
      if (!m_.is_independent(s & ~bit(e))) return false;
    }
    return true;
  }

  int column_rank(Subset s) const {
    // Small dense elimination on the chosen columns.
    std::vector<GFVector> rows(d_, GFVector());
    const std::vector<int> cols = elements(s);
    const int k = static_cast<int>(cols.size());
    for (int r = 0; r < d_; ++r) {
      rows[r].resize(k);
      for (int j = 0; j < k; ++j) rows[r][j] = columns_[cols[j]][r];
    }
    int rank = 0;
    for (int j = 0; j < k && rank < d_; ++j) {
      int piv = -1;
      for (int r = rank; r < d_; ++r) {
        if (rows[r][j] != 0) {
          piv = r;
          break;
        }
      }
      if (piv < 0) continue;
      std::swap(rows[rank], rows[piv]);
      const int inv = f_.inv(rows[rank][j]);
      for (int r = rank + 1; r < d_; ++r) {
        if (rows[r][j] == 0) continue;
        const int factor = f_.mul(rows[r][j], inv);
        for (int jj = j; jj < k; ++jj) rows[r][jj] = f_.sub(rows[r][jj], f_.mul(factor, rows[rank][jj]));
      }
      ++rank;
    }
    return rank;
  }

  bool consistent(int c) const {
    for (const Check& chk : checks_[c]) {
      const bool indep = column_rank(chk.set) == card(chk.set);
      if (indep != chk.independent) return false;
    }
    return true;
  }

  template <typename Fn>
  bool place(int c, Fn& fn) {
    if (c == m_.n()) {
      GFMatrix a(f_, d_, m_.n());
      for (int col = 0; col < m_.n(); ++col) {
        for (int r = 0; r < d_; ++r) a.set(r, col, columns_[col][r]);
      }
      return fn(a);
    }
    GFVector& col = columns_[c];
    std::fill(col.begin(), col.end(), 0);
    if (pivot_row_[c] >= 0) {
      col[pivot_row_[c]] = 1;
      return consistent(c) && place(c + 1, fn);
    }
    const int t = active_rows_[c];
    if (t == 0) return consistent(c) && place(c + 1, fn);
    // Odometer over the first t entries, skipping the zero vector.
    std::vector<int> digits(t, 0);
    while (true) {
      int i = t - 1;
      while (i >= 0 && digits[i] == f_.p() - 1) digits[i--] = 0;
      if (i < 0) break;
      ++digits[i];
      if (normalize_) {
        int first = 0;
        while (digits[first] == 0) ++first;
        if (digits[first] != 1) continue;
      }
      for (int r = 0; r < t; ++r) col[r] = digits[r];
      if (consistent(c) && place(c + 1, fn)) return true;
    }
    std::fill(col.begin(), col.end(), 0);
    return false;
  }

  const Matroid& m_;
  FieldPrime f_;
  int d_;
  bool normalize_;
  std::vector<int> pivot_row_;
  std::vector<int> active_rows_;
  std::vector<std::vector<Check>> checks_;
  std::vector<GFVector> columns_;
};

inline constexpr double kFlagSearchLog2Cap = 24.0;
inline constexpr double kMatroidSearchLog2Cap = 40.0;

}  // namespace internal

/// A GF(p) matrix whose column matroid is M, or nullopt when none exists.
inline std::optional<GFMatrix> represent_matroid(const Matroid& m, FieldPrime field) {
  std::optional<GFMatrix> found;
  internal::EchelonSearch(m, field, true, internal::kMatroidSearchLog2Cap).run([&](const GFMatrix& a) {
    found = a;
    return true;
  });
  return found;
}

/// Exhaustive search for a representation with levels = the layer ranks.
/// Each layer's row spaces are enumerated as echelon matrices; a nested chain
/// of them is then found by depth-first search, and the matrix is built by
/// extending row bases level by level.
inline std::optional<FlagRepresentation> search_representation(const FlagMatroid& f, FieldPrime field) {
  const int k = f.layer_count();
  std::vector<std::vector<GFMatrix>> candidates(k);
  for (int i = 0; i < k; ++i) {
    internal::EchelonSearch(f.layers()[i], field, false, internal::kFlagSearchLog2Cap)
        .run([&](const GFMatrix& a) {
          candidates[i].push_back(a);
          return false;
        });
    if (candidates[i].empty()) return std::nullopt;
  }
  std::vector<GFVector> rows;
  std::optional<FlagRepresentation> found;
  auto dfs = [&](auto&& self, int level) -> bool {
    if (level == k) {
      found.emplace(matrix_from_rows(field, f.n(), rows), f.cardinalities());
      return true;
    }
    const std::size_t mark = rows.size();
    for (const GFMatrix& cand : candidates[level]) {
      std::vector<GFVector> trial = rows;
      for (int r = 0; r < cand.rows(); ++r) trial.emplace_back(cand.row(r).begin(), cand.row(r).end());
      if (rank(matrix_from_rows(field, f.n(), trial)) != cand.rows()) continue;  // not nested
      for (int r = 0; r < cand.rows(); ++r) {
        GFVector v(cand.row(r).begin(), cand.row(r).end());
        rows.push_back(v);
        if (rank(matrix_from_rows(field, f.n(), rows)) != static_cast<int>(rows.size())) rows.pop_back();
      }
      if (self(self, level + 1)) return true;
      rows.resize(mark);
    }
    return false;
  };
  dfs(dfs, 0);
  if (found && found->flag() != f) throw Error(Errc::kInternal, "search produced a wrong representation");
  return found;
}

// GF(2) and GF(3) decisions for full flag matroids.

struct NamedFlag {
  std::string name;
  FlagMatroid flag;
};

namespace fixtures {

inline const std::vector<NamedFlag>& binary_excluded_flags() {
  static const std::vector<NamedFlag> list = {
      {"(U24)", basis_flag(uniform(2, 4))},
      {"(U13,U23)", from_sequence({uniform(1, 3), uniform(2, 3)})}};
  return list;
}

/// (R) and (R/e, R\e) for R in {U25, U35, F7, F7*}, e neither a loop nor a
/// coloop, pairs deduplicated up to isomorphism.
inline const std::vector<NamedFlag>& ternary_excluded_flags() {
  static const std::vector<NamedFlag> list = [] {
    std::vector<NamedFlag> out;
    for (const auto& [name, r] : fixtures::ternary_excluded()) {
      out.push_back({"(" + name + ")", basis_flag(r)});
    }
    for (const auto& [name, r] : fixtures::ternary_excluded()) {
      for (int e = 0; e < r.n(); ++e) {
        if (r.is_loop(e) || r.is_coloop(e)) continue;
        FlagMatroid pair = from_sequence({contract_element(r, e), delete_element(r, e)});
        bool seen = false;
        for (const NamedFlag& existing : out) {
          if (flag_isomorphic(existing.flag, pair)) {
            seen = true;
            break;
          }
        }
        if (!seen) {
          out.push_back({"(" + name + "/" + std::to_string(e) + "," + name + "\\" + std::to_string(e) + ")",
                         std::move(pair)});
        }
      }
    }
    return out;
  }();
  return list;
}

inline const std::vector<NamedFlag>& excluded_flags(int p) {
  if (p == 2) return binary_excluded_flags();
  if (p == 3) return ternary_excluded_flags();
  throw Error(Errc::kBadField, "excluded-minor lists exist only for p = 2 and p = 3");
}

inline const std::vector<NamedMatroid>& excluded_matroids(int p) {
  if (p == 2) return binary_excluded();
  if (p == 3) return ternary_excluded();
  throw Error(Errc::kBadField, "excluded-minor lists exist only for p = 2 and p = 3");
}

}  // namespace fixtures

struct ExcludedFlagHit {
  std::string name;
  FlagMatroid target;
  FlagMinorWitness witness;
};

/// First excluded flag minor for GF(p), p in {2, 3}.
inline std::optional<ExcludedFlagHit> find_excluded_flag_minor(const FlagMatroid& f, int p) {
  for (const NamedFlag& nf : fixtures::excluded_flags(p)) {
    if (auto w = flag_has_minor(f, nf.flag)) return ExcludedFlagHit{nf.name, nf.flag, std::move(*w)};
  }
  return std::nullopt;
}

namespace internal {

/// Rep of (Q / x, Q \ x) from a rep of Q: row operations turn column x into
/// the last unit vector, then x is dropped.
inline FlagRepresentation pair_from_witness(const GFMatrix& rq, int x) {
  const FieldPrime& f = rq.field();
  const int r = rq.rows();
  // W has x's column last and unit vectors completing a basis before it.
  std::vector<GFVector> cols;
  const GFVector vx = rq.column(x);
  for (int i = 0; i < r && static_cast<int>(cols.size()) < r - 1; ++i) {
    GFVector e(r, 0);
    e[i] = 1;
    std::vector<GFVector> trial = cols;
    trial.push_back(e);
    trial.push_back(vx);
    if (rank(matrix_from_rows(f, r, trial)) == static_cast<int>(trial.size())) cols.push_back(e);
  }
  cols.push_back(vx);
  const GFMatrix w = transpose(matrix_from_rows(f, r, cols));
  const GFMatrix w_inv = solve_left_transform(GFMatrix::identity(f, r), w);
  const GFMatrix reduced = drop_col(multiply(w_inv, rq), x);
  return FlagRepresentation(reduced, {r - 1, r});
}

}  // namespace internal

/// Representation assembled from the lift witness sequence: each Q_i must be
/// binary (ternary); its representation yields one for (M_i, M_{i+1}), and
/// these are stitched. nullopt when some Q_i has an excluded minor.
inline std::optional<FlagRepresentation> witness_route_representation(const FlagMatroid& f, FieldPrime field) {
  if (!is_full(f)) throw Error(Errc::kNotFull, "the witness route needs a full flag matroid");
  const auto& excluded = fixtures::excluded_matroids(field.p());
  if (f.layer_count() == 1) {
    const Matroid& m = f.layers().front();
    if (find_excluded_minor(m, excluded)) return std::nullopt;
    auto a = represent_matroid(m, field);
    if (!a) throw Error(Errc::kInternal, "matroid without excluded minors has no representation");
    return FlagRepresentation(prefix_rows(*a, m.rank()), {m.rank()});
  }
  std::optional<FlagRepresentation> acc;
  for (const LiftWitness& w : lift_witness_sequence(f)) {
    if (find_excluded_minor(w.q, excluded)) return std::nullopt;
    auto rq = represent_matroid(w.q, field);
    if (!rq) throw Error(Errc::kInternal, "witness without excluded minors has no representation");
    FlagRepresentation pair = internal::pair_from_witness(*rq, w.extra);
    acc = acc ? stitch_representations(*acc, pair) : pair;
  }
  if (acc->flag() != f) throw Error(Errc::kInternal, "stitched representation does not match");
  return acc;
}

struct RepresentabilityVerdict {
  bool representable = false;
  std::optional<ExcludedFlagHit> excluded;        // set when not representable
  std::optional<FlagRepresentation> certificate;  // set when representable
};

inline RepresentabilityVerdict decide_full(const FlagMatroid& f, int p) {
  if (!is_full(f)) throw Error(Errc::kNotFull, "use the filling route for flags that are not full");
  RepresentabilityVerdict v;
  v.excluded = find_excluded_flag_minor(f, p);
  if (v.excluded) return v;
  v.representable = true;
  v.certificate = witness_route_representation(f, FieldPrime(p));
  if (!v.certificate) throw Error(Errc::kInternal, "excluded-minor and witness routes disagree");
  return v;
}

inline RepresentabilityVerdict is_binary_full(const FlagMatroid& f) { return decide_full(f, 2); }
inline RepresentabilityVerdict is_ternary_full(const FlagMatroid& f) { return decide_full(f, 3); }

enum class Tristate { kYes, kNo, kUnknown };

struct FillingVerdict {
  Tristate answer = Tristate::kUnknown;
  std::optional<FlagMatroid> filling;             // the filling that passed
  std::optional<FlagRepresentation> certificate;  // representation of the input
  std::size_t fillings_checked = 0;
};

/// GF(p)-representable iff some filling is; fillings are enumerated up to the
/// budget.
inline FillingVerdict is_representable_via_fillings(const FlagMatroid& f, int p, std::size_t budget) {
  FillingVerdict out;
  const FillingResult fills = enumerate_fillings(f, budget);
  const auto cards = f.cardinalities();
  for (const FlagMatroid& g : fills.fillings) {
    ++out.fillings_checked;
    RepresentabilityVerdict v = decide_full(g, p);
    if (!v.representable) continue;
    FlagRepresentation rep = *v.certificate;
    for (int c : g.cardinalities()) {
      if (std::find(cards.begin(), cards.end(), c) == cards.end()) rep = chop_representation(rep, c);
    }
    if (rep.flag() != f) throw Error(Errc::kInternal, "chopped filling does not match");
    out.answer = Tristate::kYes;
    out.filling = g;
    out.certificate = std::move(rep);
    return out;
  }
  out.answer = fills.truncated ? Tristate::kUnknown : Tristate::kNo;
  return out;
}

}  // namespace flagmat
