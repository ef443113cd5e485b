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

// Flag matroids of matrices: layer i is the column matroid of the first d_i
// rows.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flagmat/error.hpp"
#include "flagmat/flag.hpp"
#include "flagmat/gf_linalg.hpp"
#include "flagmat/matroid.hpp"

namespace flagmat {

inline void check_levels(const GFMatrix& a, const std::vector<int>& levels) {
  if (levels.empty()) throw Error(Errc::kBadArgument, "at least one level is required");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < 0 || levels[i] > a.rows() || (i > 0 && levels[i] <= levels[i - 1])) {
      throw Error(Errc::kBadArgument, "levels must increase strictly and not exceed the row count");
    }
    if (rank(prefix_rows(a, levels[i])) != levels[i]) {
      throw Error(Errc::kRankDeficient,
                  "the first " + std::to_string(levels[i]) + " rows are not independent", {},
                  static_cast<int>(i));
    }
  }
}

inline FlagMatroid flag_from_matrix(const GFMatrix& a, const std::vector<int>& levels) {
  check_levels(a, levels);
  std::vector<Matroid> layers;
  for (int d : levels) layers.push_back(linear_matroid(prefix_rows(a, d)));
  return from_sequence(std::move(layers));
}

/// A matrix together with levels d_1 < ... < d_k, where d_k is the row count.
struct FlagRepresentation {
  GFMatrix matrix;
  std::vector<int> levels;

  FlagRepresentation(GFMatrix a, std::vector<int> lv) : matrix(std::move(a)), levels(std::move(lv)) {
    check_levels(matrix, levels);
    if (levels.back() != matrix.rows()) {
      throw Error(Errc::kBadArgument, "the top level must equal the row count");
    }
  }

  FlagMatroid flag() const { return flag_from_matrix(matrix, levels); }

  friend bool operator==(const FlagRepresentation&, const FlagRepresentation&) = default;
};

}  // namespace flagmat
