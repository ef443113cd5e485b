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

// Dense linear algebra over prime fields GF(p).
//
// Matrices here are tiny (at most 32 x 32), so everything is plain Gaussian
// elimination on a row-major int buffer. All functions are pure.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flagmat/error.hpp"
#include "flagmat/subset.hpp"

namespace flagmat {

inline constexpr int kMaxMatrixDim = 32;

class FieldPrime {
 public:
  explicit FieldPrime(int p) : p_(p) {
    if (p < 2 || p >= (1 << 16) || !is_prime(p)) {
      throw Error(Errc::kBadField, "modulus " + std::to_string(p) +
                                       " is not a prime in [2, 65536)");
    }
  }

  int p() const { return p_; }

  int reduce(long long v) const {
    long long r = v % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }
  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b + p_) % p_; }
  int neg(int a) const { return a == 0 ? 0 : p_ - a; }
  int mul(int a, int b) const {
    return static_cast<int>((static_cast<long long>(a) * b) % p_);
  }
  int inv(int a) const {
    // Fermat: a^(p-2).
    long long result = 1, base = a, e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<int>(result);
  }

  friend bool operator==(const FieldPrime&, const FieldPrime&) = default;

  static bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

 private:
  int p_;
};

using GFVector = std::vector<int>;

class GFMatrix {
 public:
  GFMatrix(FieldPrime field, int rows, int cols)
      : field_(field), rows_(rows), cols_(cols) {
    check_shape(rows, cols);
    entries_.assign(static_cast<std::size_t>(rows) * cols, 0);
  }

  /// Entries are reduced mod p (negative values allowed).
  GFMatrix(FieldPrime field, const std::vector<std::vector<int>>& rows,
           int cols = -1)
      : field_(field),
        rows_(static_cast<int>(rows.size())),
        cols_(rows.empty() ? (cols < 0 ? 0 : cols)
                           : static_cast<int>(rows.front().size())) {
    check_shape(rows_, cols_);
    entries_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != cols_) {
        throw Error(Errc::kShapeMismatch, "ragged matrix rows");
      }
      for (int v : row) entries_.push_back(field_.reduce(v));
    }
  }

  static GFMatrix identity(FieldPrime field, int n) {
    GFMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  const FieldPrime& field() const { return field_; }
  int p() const { return field_.p(); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int at(int r, int c) const { return entries_[index(r, c)]; }
  void set(int r, int c, int v) { entries_[index(r, c)] = field_.reduce(v); }

  std::span<const int> row(int r) const {
    return {entries_.data() + static_cast<std::size_t>(r) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  GFVector column(int c) const {
    GFVector out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
  }
  const std::vector<int>& entries() const { return entries_; }

  std::vector<std::vector<int>> to_rows() const {
    std::vector<std::vector<int>> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap(entries_[index(a, c)], entries_[index(b, c)]);
  }
  void scale_row(int r, int factor) {
    for (int c = 0; c < cols_; ++c) set(r, c, field_.mul(at(r, c), factor));
  }
  /// row[dst] += factor * row[src]
  void add_row_multiple(int dst, int src, int factor) {
    if (factor == 0) return;
    for (int c = 0; c < cols_; ++c) {
      entries_[index(dst, c)] =
          field_.add(at(dst, c), field_.mul(factor, at(src, c)));
    }
  }

  friend bool operator==(const GFMatrix&, const GFMatrix&) = default;

 private:
  static void check_shape(int rows, int cols) {
    if (rows < 0 || cols < 0 || rows > kMaxMatrixDim || cols > kMaxMatrixDim) {
      throw Error(Errc::kShapeMismatch, "matrix dimensions must lie in [0, 32]");
    }
  }
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
      throw Error(Errc::kIndexOutOfRange, "matrix index out of range");
    }
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  FieldPrime field_;
  int rows_;
  int cols_;
  std::vector<int> entries_;
};

struct EchelonForm {
  GFMatrix reduced;         // reduced row echelon form, zero rows at bottom
  std::vector<int> pivots;  // pivot column of each nonzero row
};

inline EchelonForm rref(GFMatrix a) {
  const FieldPrime& f = a.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (a.at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    a.swap_rows(r, pivot);
    a.scale_row(r, f.inv(a.at(r, c)));
    for (int i = 0; i < a.rows(); ++i) {
      if (i != r) a.add_row_multiple(i, r, f.neg(a.at(i, c)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

inline int rank(const GFMatrix& a) {
  return static_cast<int>(rref(a).pivots.size());
}

inline GFMatrix transpose(const GFMatrix& a) {
  GFMatrix t(a.field(), a.cols(), a.rows());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) t.set(c, r, a.at(r, c));
  }
  return t;
}

inline GFMatrix multiply(const GFMatrix& a, const GFMatrix& b) {
  if (a.field() != b.field()) throw Error(Errc::kFieldMismatch, "multiply");
  if (a.cols() != b.rows()) throw Error(Errc::kShapeMismatch, "multiply");
  const FieldPrime& f = a.field();
  GFMatrix out(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      long long acc = 0;
      for (int k = 0; k < a.cols(); ++k) acc += static_cast<long long>(a.at(i, k)) * b.at(k, j);
      out.set(i, j, f.reduce(acc));
    }
  }
  return out;
}

inline GFVector multiply(const GFMatrix& a, const GFVector& v) {
  if (static_cast<int>(v.size()) != a.cols()) throw Error(Errc::kShapeMismatch, "matrix-vector");
  GFVector out(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    long long acc = 0;
    for (int k = 0; k < a.cols(); ++k) acc += static_cast<long long>(a.at(i, k)) * v[k];
    out[i] = a.field().reduce(acc);
  }
  return out;
}

/// A_{<=d}: the first d rows.
inline GFMatrix prefix_rows(const GFMatrix& a, int d) {
  if (d < 0 || d > a.rows()) throw Error(Errc::kIndexOutOfRange, "prefix length " + std::to_string(d));
  GFMatrix out(a.field(), d, a.cols());
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
  }
  return out;
}

/// A^S: the columns listed in `cols`, in the given order.
inline GFMatrix select_cols(const GFMatrix& a, std::span<const int> cols) {
  GFMatrix out(a.field(), a.rows(), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] < 0 || cols[j] >= a.cols()) {
      throw Error(Errc::kIndexOutOfRange, "column " + std::to_string(cols[j]));
    }
    for (int r = 0; r < a.rows(); ++r) out.set(r, static_cast<int>(j), a.at(r, cols[j]));
  }
  return out;
}

inline GFMatrix select_cols(const GFMatrix& a, Subset cols) {
  const std::vector<int> list = elements(cols);
  return select_cols(a, std::span<const int>(list));
}

inline GFMatrix drop_col(const GFMatrix& a, int col) {
  std::vector<int> keep;
  for (int c = 0; c < a.cols(); ++c) {
    if (c != col) keep.push_back(c);
  }
  return select_cols(a, std::span<const int>(keep));
}

inline bool is_nonsingular(const GFMatrix& a) {
  if (a.rows() != a.cols()) throw Error(Errc::kShapeMismatch, "nonsingularity needs a square matrix");
  return rank(a) == a.rows();
}

/// Rank of the submatrix of the first `rows` rows restricted to `cols`.
inline int minor_rank(const GFMatrix& a, int rows, Subset cols) {
  return rank(select_cols(prefix_rows(a, rows), cols));
}

/// Canonical right-kernel basis from the reduced row echelon form, one vector
/// per free column in increasing column order.
inline std::vector<GFVector> kernel_basis(const GFMatrix& a) {
  const EchelonForm e = rref(a);
  const FieldPrime& f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<GFVector> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    GFVector v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      v[e.pivots[i]] = f.neg(e.reduced.at(static_cast<int>(i), free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

inline GFMatrix matrix_from_rows(FieldPrime field, int cols, const std::vector<GFVector>& rows) {
  GFMatrix m(field, static_cast<int>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < cols; ++c) m.set(static_cast<int>(r), c, rows[r][c]);
  }
  return m;
}

/// Vectors x_1..x_{n-d_1} such that, for every level d_i, the first n - d_i
/// of them form a basis of ker(A_{<=d_i}). Built from ker(A_{<=d_k}) and
/// extended level by level with canonical kernel vectors.
inline std::vector<GFVector> nested_kernel_chain(const GFMatrix& a, const std::vector<int>& levels) {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < 0 || levels[i] > a.rows() || (i > 0 && levels[i] <= levels[i - 1])) {
      throw Error(Errc::kBadArgument, "levels must be strictly increasing and within the row count");
    }
    if (rank(prefix_rows(a, levels[i])) != levels[i]) {
      throw Error(Errc::kRankDeficient, "prefix of " + std::to_string(levels[i]) + " rows is rank deficient");
    }
  }
  std::vector<GFVector> chain;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    for (GFVector& v : kernel_basis(prefix_rows(a, *it))) {
      std::vector<GFVector> trial = chain;
      trial.push_back(v);
      if (rank(matrix_from_rows(a.field(), a.cols(), trial)) == static_cast<int>(trial.size())) {
        chain = std::move(trial);
      }
    }
  }
  return chain;
}

/// Invertible T with T * B = A, for full-row-rank A, B with equal row spaces.
inline GFMatrix solve_left_transform(const GFMatrix& a, const GFMatrix& b) {
  if (a.field() != b.field()) throw Error(Errc::kFieldMismatch, "solve_left_transform");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::kShapeMismatch, "solve_left_transform needs equal shapes");
  }
  const int r = b.rows();
  const EchelonForm eb = rref(b);
  if (static_cast<int>(eb.pivots.size()) != r || rank(a) != r) {
    throw Error(Errc::kNoTransform, "matrices are not of full row rank");
  }
  // B^S is invertible on B's pivot columns S, so T = A^S (B^S)^{-1}.
  const GFMatrix bs = select_cols(b, std::span<const int>(eb.pivots));
  const GFMatrix as = select_cols(a, std::span<const int>(eb.pivots));
  GFMatrix aug(b.field(), r, 2 * r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      aug.set(i, j, bs.at(i, j));
      aug.set(i, r + j, i == j ? 1 : 0);
    }
  }
  const GFMatrix reduced = rref(aug).reduced;
  GFMatrix inverse(b.field(), r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) inverse.set(i, j, reduced.at(i, r + j));
  }
  GFMatrix t = multiply(as, inverse);
  if (multiply(t, b) != a) throw Error(Errc::kNoTransform, "row spaces differ");
  return t;
}

}  // namespace flagmat
