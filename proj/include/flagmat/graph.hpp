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

// Multigraphs and their cycle matroids.

#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "flagmat/error.hpp"
#include "flagmat/matroid.hpp"
#include "flagmat/subset.hpp"

namespace flagmat {

/// Loops (u == v) and parallel edges are allowed. Edge i is ground-set
/// element i of the cycle matroid.
struct MultiGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }

  void validate() const {
    if (vertices < 0) throw Error(Errc::kBadArgument, "negative vertex count");
    if (edge_count() > kMaxGround) {
      throw Error(Errc::kGroundTooLarge, "more than 20 edges");
    }
    for (const auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
        throw Error(Errc::kIndexOutOfRange,
                    "edge endpoint outside [0, " + std::to_string(vertices) + ")");
      }
    }
  }

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  /// Returns false when x and y were already joined.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    parent_[y] = x;
    return true;
  }

 private:
  std::vector<int> parent_;
};

/// True when the edges in S contain no cycle (loops count as cycles).
inline bool is_forest(const MultiGraph& g, Subset s) {
  UnionFind uf(g.vertices);
  for (int e : elements(s)) {
    if (!uf.unite(g.edges[e].first, g.edges[e].second)) return false;
  }
  return true;
}

inline int component_count(const MultiGraph& g) {
  UnionFind uf(g.vertices);
  int count = g.vertices;
  for (const auto& [u, v] : g.edges) {
    if (uf.unite(u, v)) --count;
  }
  return count;
}

/// Vertex -> component id, ids numbered by first vertex.
inline std::vector<int> components(const MultiGraph& g, Subset edge_set) {
  UnionFind uf(g.vertices);
  for (int e : elements(edge_set)) uf.unite(g.edges[e].first, g.edges[e].second);
  std::vector<int> id(g.vertices, -1), root_id(g.vertices, -1);
  int next = 0;
  for (int v = 0; v < g.vertices; ++v) {
    const int r = uf.find(v);
    if (root_id[r] < 0) root_id[r] = next++;
    id[v] = root_id[r];
  }
  return id;
}

inline Matroid cycle_matroid(const MultiGraph& g) {
  g.validate();
  const int r = g.vertices - component_count(g);
  std::vector<Subset> bases;
  for_each_combination(g.edge_count(), r, [&](Subset s) {
    if (is_forest(g, s)) bases.push_back(s);
    return false;
  });
  return Matroid::trusted(g.edge_count(), std::move(bases));
}

/// K_n with edges in lexicographic order of endpoint pairs.
inline MultiGraph complete_graph(int n) {
  MultiGraph g{n, {}};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

/// K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other.
inline MultiGraph complete_bipartite(int a, int b) {
  MultiGraph g{a + b, {}};
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.edges.emplace_back(u, a + v);
  }
  return g;
}

/// Merges vertex `from` into vertex `into` and renumbers the rest in order.
inline MultiGraph identify_vertices(const MultiGraph& g, int into, int from) {
  if (into == from) return g;
  if (into > from) std::swap(into, from);
  auto relabel = [&](int v) {
    if (v == from) v = into;
    return v > from ? v - 1 : v;
  };
  MultiGraph out{g.vertices - 1, {}};
  for (const auto& [u, v] : g.edges) out.edges.emplace_back(relabel(u), relabel(v));
  return out;
}

}  // namespace flagmat
