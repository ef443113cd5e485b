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

// Binary, ternary and graphic matroids via their excluded minors.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagmat/gf_linalg.hpp"
#include "flagmat/graph.hpp"
#include "flagmat/matroid.hpp"

namespace flagmat {

inline GFMatrix fano_matrix() {
  return GFMatrix(FieldPrime(2), {{1, 1, 1, 1, 0, 0, 0},
                                  {1, 1, 0, 0, 1, 1, 0},
                                  {1, 0, 1, 0, 1, 0, 1}});
}

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

namespace fixtures {

inline const Matroid& fano() {
  static const Matroid m = linear_matroid(fano_matrix());
  return m;
}
inline const Matroid& fano_dual() {
  static const Matroid m = dual(fano());
  return m;
}
inline const Matroid& k5_dual() {
  static const Matroid m = dual(cycle_matroid(complete_graph(5)));
  return m;
}
inline const Matroid& k33_dual() {
  static const Matroid m = dual(cycle_matroid(complete_bipartite(3, 3)));
  return m;
}

inline const std::vector<NamedMatroid>& binary_excluded() {
  static const std::vector<NamedMatroid> list = {{"U24", uniform(2, 4)}};
  return list;
}
inline const std::vector<NamedMatroid>& ternary_excluded() {
  static const std::vector<NamedMatroid> list = {
      {"U25", uniform(2, 5)}, {"U35", uniform(3, 5)}, {"F7", fano()}, {"F7*", fano_dual()}};
  return list;
}
inline const std::vector<NamedMatroid>& graphic_excluded() {
  static const std::vector<NamedMatroid> list = {{"U24", uniform(2, 4)},
                                                 {"F7", fano()},
                                                 {"F7*", fano_dual()},
                                                 {"M(K5)*", k5_dual()},
                                                 {"M(K33)*", k33_dual()}};
  return list;
}

}  // namespace fixtures

struct ExcludedMinorHit {
  std::string name;
  MinorWitness witness;
};

/// First excluded minor of `list` found in M, scanning the list in order.
inline std::optional<ExcludedMinorHit> find_excluded_minor(const Matroid& m,
                                                           const std::vector<NamedMatroid>& list) {
  for (const auto& [name, target] : list) {
    if (auto w = has_minor_isomorphic_to(m, target)) return ExcludedMinorHit{name, std::move(*w)};
  }
  return std::nullopt;
}

inline bool is_binary(const Matroid& m) {
  return !find_excluded_minor(m, fixtures::binary_excluded());
}
inline bool is_ternary(const Matroid& m) {
  return !find_excluded_minor(m, fixtures::ternary_excluded());
}
inline bool is_graphic(const Matroid& m) {
  return !find_excluded_minor(m, fixtures::graphic_excluded());
}

}  // namespace flagmat
