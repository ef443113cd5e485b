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

// Graphic flag matroids: a graph plus a chain of vertex partitions, coarsest
// first. Layer i is the cycle matroid of the graph with the cells of the i-th
// partition collapsed to single vertices.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagmat/classify.hpp"
#include "flagmat/error.hpp"
#include "flagmat/flag.hpp"
#include "flagmat/graph.hpp"
#include "flagmat/major.hpp"
#include "flagmat/matroid.hpp"

namespace flagmat {

/// Cell index per vertex; cells are numbered in order of their first vertex.
using VertexPartition = std::vector<int>;

inline VertexPartition normalize_partition(const VertexPartition& labels) {
  std::map<int, int> renumber;
  VertexPartition out(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = renumber.emplace(labels[v], static_cast<int>(renumber.size()));
    out[v] = it->second;
  }
  return out;
}

inline int cell_count(const VertexPartition& p) {
  return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
}

inline VertexPartition singleton_partition(int vertices) {
  VertexPartition p(vertices);
  for (int v = 0; v < vertices; ++v) p[v] = v;
  return p;
}

inline VertexPartition partition_from_cells(int vertices, const std::vector<std::vector<int>>& cells) {
  VertexPartition labels(vertices, -1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].empty()) throw Error(Errc::kBadPartition, "empty cell");
    for (int v : cells[c]) {
      if (v < 0 || v >= vertices) throw Error(Errc::kBadPartition, "vertex " + std::to_string(v) + " out of range");
      if (labels[v] >= 0) throw Error(Errc::kBadPartition, "vertex " + std::to_string(v) + " in two cells");
      labels[v] = static_cast<int>(c);
    }
  }
  for (int v = 0; v < vertices; ++v) {
    if (labels[v] < 0) throw Error(Errc::kBadPartition, "vertex " + std::to_string(v) + " in no cell");
  }
  return normalize_partition(labels);
}

inline std::vector<std::vector<int>> partition_cells(const VertexPartition& p) {
  std::vector<std::vector<int>> cells(cell_count(p));
  for (std::size_t v = 0; v < p.size(); ++v) cells[p[v]].push_back(static_cast<int>(v));
  return cells;
}

/// Partitions coarsest first; each one refines its predecessor.
struct PartitionChain {
  std::vector<VertexPartition> partitions;

  void validate(int vertices) const {
    if (partitions.empty()) throw Error(Errc::kBadPartition, "empty partition chain");
    for (std::size_t i = 0; i < partitions.size(); ++i) {
      const VertexPartition& p = partitions[i];
      if (static_cast<int>(p.size()) != vertices) {
        throw Error(Errc::kBadPartition, "partition " + std::to_string(i) + " does not cover the vertices", {},
                    static_cast<int>(i));
      }
      if (normalize_partition(p) != p) {
        throw Error(Errc::kBadPartition, "partition " + std::to_string(i) + " is not normalized", {},
                    static_cast<int>(i));
      }
      if (i == 0) continue;
      const VertexPartition& coarse = partitions[i - 1];
      for (int u = 0; u < vertices; ++u) {
        for (int v = u + 1; v < vertices; ++v) {
          if (p[u] == p[v] && coarse[u] != coarse[v]) {
            throw Error(Errc::kBadPartition,
                        "partition " + std::to_string(i) + " does not refine its predecessor", {},
                        static_cast<int>(i));
          }
        }
      }
    }
  }

  friend bool operator==(const PartitionChain&, const PartitionChain&) = default;
};

inline MultiGraph quotient_graph(const MultiGraph& g, const VertexPartition& p) {
  if (static_cast<int>(p.size()) != g.vertices) throw Error(Errc::kBadPartition, "partition size mismatch");
  const VertexPartition q = normalize_partition(p);
  MultiGraph out{cell_count(q), {}};
  for (const auto& [u, v] : g.edges) out.edges.emplace_back(q[u], q[v]);
  return out;
}

inline Matroid quotient_graph_matroid(const MultiGraph& g, const VertexPartition& p) {
  g.validate();
  return cycle_matroid(quotient_graph(g, p));
}

inline FlagMatroid graphic_flag(const MultiGraph& g, const PartitionChain& chain) {
  g.validate();
  chain.validate(g.vertices);
  std::vector<Matroid> layers;
  for (std::size_t i = 0; i < chain.partitions.size(); ++i) {
    layers.push_back(quotient_graph_matroid(g, chain.partitions[i]));
    if (i > 0 && layers[i].rank() <= layers[i - 1].rank()) {
      throw Error(Errc::kTrivialLiftLayer,
                  "partition " + std::to_string(i) + " gives no rank increase over its predecessor", {},
                  static_cast<int>(i));
    }
  }
  return from_sequence(std::move(layers));
}

struct GraphWithChain {
  MultiGraph graph;
  PartitionChain chain;
};

namespace internal {

/// Maps each vertex to its image when the vertices in `group` become one.
inline std::vector<int> merge_map(int vertices, const std::vector<int>& group) {
  std::vector<int> target(vertices);
  const int keep = *std::min_element(group.begin(), group.end());
  int next = 0;
  for (int v = 0; v < vertices; ++v) {
    const bool merged = std::find(group.begin(), group.end(), v) != group.end();
    target[v] = (merged && v != keep) ? -1 : next++;
  }
  for (int v : group) target[v] = target[keep];
  return target;
}

/// Applies a vertex map to the graph and the chain; cells whose vertices are
/// sent to a common vertex are merged.
inline GraphWithChain apply_vertex_map(const MultiGraph& g, const PartitionChain& chain,
                                       const std::vector<int>& target) {
  const int new_count = *std::max_element(target.begin(), target.end()) + 1;
  MultiGraph h{new_count, {}};
  for (const auto& [u, v] : g.edges) h.edges.emplace_back(target[u], target[v]);
  PartitionChain out;
  for (const VertexPartition& p : chain.partitions) {
    UnionFind cells(cell_count(p));
    std::vector<int> first_cell(new_count, -1);
    for (int v = 0; v < g.vertices; ++v) {
      int& slot = first_cell[target[v]];
      if (slot < 0) {
        slot = p[v];
      } else {
        cells.unite(slot, p[v]);
      }
    }
    VertexPartition q(new_count);
    for (int w = 0; w < new_count; ++w) q[w] = cells.find(first_cell[w]);
    out.partitions.push_back(normalize_partition(q));
  }
  return {std::move(h), std::move(out)};
}

inline std::vector<Matroid> quotient_matroids(const MultiGraph& g, const PartitionChain& chain) {
  std::vector<Matroid> out;
  for (const VertexPartition& p : chain.partitions) out.push_back(quotient_graph_matroid(g, p));
  return out;
}

}  // namespace internal

/// Connected graph with the same quotient matroids. Components are joined one
/// pair at a time by identifying a vertex of each. The pair is taken from a
/// cell of the finest partition that meets two components, so the two vertices
/// share a cell in every coarser partition and lie in different components of
/// every finer quotient; without such a cell any pair works. Identifying all
/// representatives into one vertex can fail when different components meet
/// different cells.
inline GraphWithChain connectify(const MultiGraph& g, const PartitionChain& chain) {
  g.validate();
  chain.validate(g.vertices);
  const auto before = internal::quotient_matroids(g, chain);
  GraphWithChain cur{g, chain};
  while (true) {
    const std::vector<int> comp = components(cur.graph, full_set(cur.graph.edge_count()));
    const int count = cur.graph.vertices == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    if (count <= 1) break;
    std::pair<int, int> join{-1, -1};
    for (auto p = cur.chain.partitions.rbegin(); p != cur.chain.partitions.rend() && join.first < 0; ++p) {
      for (const auto& cell : partition_cells(*p)) {
        for (int v : cell) {
          if (comp[v] != comp[cell.front()]) {
            join = {cell.front(), v};
            break;
          }
        }
        if (join.first >= 0) break;
      }
    }
    if (join.first < 0) {
      const int other = static_cast<int>(std::find_if(comp.begin(), comp.end(), [](int c) { return c != 0; }) -
                                         comp.begin());
      join = {0, other};
    }
    cur = internal::apply_vertex_map(cur.graph, cur.chain,
                                     internal::merge_map(cur.graph.vertices, {join.first, join.second}));
  }
  if (internal::quotient_matroids(cur.graph, cur.chain) != before) {
    throw Error(Errc::kInternal, "joining components changed a quotient matroid");
  }
  return cur;
}

enum class GraphMinorOp { kDelete, kContract };

/// Graph-level minor matching the set-system flag minor. Deleting e drops
/// the partitions where e is a bridge of the quotient; contracting e merges
/// its endpoints (and their cells) and drops the partitions where e is a
/// loop of the quotient. EmptyResult when nothing survives.
inline GraphWithChain graphic_minor(const MultiGraph& g, const PartitionChain& chain, int e, GraphMinorOp op) {
  g.validate();
  chain.validate(g.vertices);
  if (e < 0 || e >= g.edge_count()) throw Error(Errc::kIndexOutOfRange, "edge " + std::to_string(e));
  const auto [u, v] = g.edges[e];
  MultiGraph rest{g.vertices, {}};
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i != e) rest.edges.push_back(g.edges[i]);
  }
  PartitionChain kept;
  for (const VertexPartition& p : chain.partitions) {
    const Matroid m = quotient_graph_matroid(g, p);
    const bool drop = op == GraphMinorOp::kDelete ? m.is_coloop(e) : m.is_loop(e);
    if (!drop) kept.partitions.push_back(p);
  }
  if (kept.partitions.empty()) {
    throw Error(Errc::kEmptyResult, op == GraphMinorOp::kDelete ? "edge is a bridge in every quotient"
                                                                : "edge is a loop in every quotient");
  }
  GraphWithChain out = op == GraphMinorOp::kDelete
                           ? GraphWithChain{rest, kept}
                           : internal::apply_vertex_map(rest, kept, internal::merge_map(g.vertices, {u, v}));
  const FlagMatroid original = graphic_flag(g, chain);
  const FlagMatroid expected = op == GraphMinorOp::kDelete ? flag_delete(original, e) : flag_contract(original, e);
  if (graphic_flag(out.graph, out.chain) != expected) {
    throw Error(Errc::kInternal, "graph minor does not match the flag minor");
  }
  return out;
}

struct GraphicMajor {
  MultiGraph graph;  // G plus the added edges, which come last
  MajorStructure major;
};

/// For each refinement step, the sub-cells of every cell get joined by a path
/// through their least vertices; these paths form the block of that step.
inline GraphicMajor graphic_major(const MultiGraph& g, const PartitionChain& chain) {
  g.validate();
  chain.validate(g.vertices);
  if (chain.partitions.back() != singleton_partition(g.vertices)) {
    throw Error(Errc::kChainNotGrounded, "the finest partition must consist of singletons");
  }
  if (component_count(g) > 1) throw Error(Errc::kBadArgument, "graph must be connected; run connectify first");
  const int k = static_cast<int>(chain.partitions.size());
  if (g.edge_count() + cell_count(chain.partitions.back()) - cell_count(chain.partitions.front()) > kMaxGround) {
    throw Error(Errc::kGroundTooLarge, "major would exceed 20 elements");
  }
  MultiGraph h = g;
  std::vector<Subset> blocks;
  for (int i = 0; i + 1 < k; ++i) {
    const VertexPartition& coarse = chain.partitions[i];
    const VertexPartition& fine = chain.partitions[i + 1];
    Subset block = 0;
    for (const auto& cell : partition_cells(coarse)) {
      std::vector<int> reps;  // least vertex of each sub-cell, increasing
      std::vector<int> seen;
      for (int v : cell) {
        if (std::find(seen.begin(), seen.end(), fine[v]) == seen.end()) {
          seen.push_back(fine[v]);
          reps.push_back(v);
        }
      }
      for (std::size_t j = 1; j < reps.size(); ++j) {
        block |= bit(h.edge_count());
        h.edges.emplace_back(reps[j - 1], reps[j]);
      }
    }
    blocks.push_back(block);
  }
  GraphicMajor out{h, MajorStructure{cycle_matroid(h), blocks}};
  if (!verify_major(out.major, graphic_flag(g, chain))) {
    throw Error(Errc::kInternal, "graphic major fails verification");
  }
  return out;
}

/// Recovers (G, chain) from a graphic major: G is the major minus the block
/// edges, and partition i is given by the components of blocks i..k-2.
inline GraphWithChain major_to_chain(const MultiGraph& g_major, const std::vector<Subset>& blocks) {
  g_major.validate();
  Subset x = 0;
  for (Subset b : blocks) {
    if (!is_subset(b, full_set(g_major.edge_count()))) throw Error(Errc::kIndexOutOfRange, "block edge", {b});
    if (b & x) throw Error(Errc::kOverlappingSets, "blocks overlap", {b & x});
    x |= b;
  }
  PartitionChain chain;
  for (std::size_t i = 0; i <= blocks.size(); ++i) {
    Subset later = 0;
    for (std::size_t j = i; j < blocks.size(); ++j) later |= blocks[j];
    chain.partitions.push_back(components(g_major, later));
  }
  MultiGraph g{g_major.vertices, {}};
  for (int e = 0; e < g_major.edge_count(); ++e) {
    if (!contains(x, e)) g.edges.push_back(g_major.edges[e]);
  }
  GraphWithChain out{std::move(g), std::move(chain)};
  const Matroid q = cycle_matroid(g_major);
  for (std::size_t i = 0; i < out.chain.partitions.size(); ++i) {
    if (quotient_graph_matroid(out.graph, out.chain.partitions[i]) != major_layer(q, blocks, static_cast<int>(i))) {
      throw Error(Errc::kInternal, "recovered chain does not reproduce the major's layers");
    }
  }
  return out;
}

/// All graphs obtained by identifying one unordered pair of vertices.
inline std::vector<MultiGraph> vertex_identifications(const MultiGraph& g) {
  std::vector<MultiGraph> out;
  for (int u = 0; u < g.vertices; ++u) {
    for (int v = u + 1; v < g.vertices; ++v) out.push_back(identify_vertices(g, u, v));
  }
  return out;
}

// Small graph predicates used by the counterexample harness.

/// Same edge list up to a renaming of the vertices (edge order is fixed).
inline bool same_graph_up_to_vertex_names(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertices != b.vertices || a.edge_count() != b.edge_count()) return false;
  std::vector<int> fwd(a.vertices, -1), bwd(b.vertices, -1);
  auto bind = [&](int x, int y, std::vector<std::pair<int, int>>& log) {
    if (fwd[x] == y) return true;
    if (fwd[x] >= 0 || bwd[y] >= 0) return false;
    fwd[x] = y;
    bwd[y] = x;
    log.emplace_back(x, y);
    return true;
  };
  auto dfs = [&](auto&& self, int e) -> bool {
    if (e == a.edge_count()) return true;
    const auto [p, q] = a.edges[e];
    const auto [s, t] = b.edges[e];
    for (int flip = 0; flip < 2; ++flip) {
      std::vector<std::pair<int, int>> log;
      const int s2 = flip ? t : s, t2 = flip ? s : t;
      if (bind(p, s2, log) && bind(q, t2, log) && self(self, e + 1)) return true;
      for (const auto& [x, y] : log) {
        fwd[x] = -1;
        bwd[y] = -1;
      }
    }
    return false;
  };
  return dfs(dfs, 0);
}

/// 3-connectivity of the underlying simple graph: at least four vertices and
/// connected after removing any two.
inline bool is_three_connected_simple(const MultiGraph& g) {
  if (g.vertices < 4) return false;
  for (int x = 0; x < g.vertices; ++x) {
    for (int y = x; y < g.vertices; ++y) {
      UnionFind uf(g.vertices);
      int pieces = g.vertices - (x == y ? 1 : 2);
      for (const auto& [u, v] : g.edges) {
        if (u == v || u == x || u == y || v == x || v == y) continue;
        if (uf.unite(u, v)) --pieces;
      }
      if (pieces != 1) return false;
    }
  }
  return true;
}

struct ColoredGraph {
  MultiGraph graph;
  std::vector<int> red;
  std::vector<int> yellow;

  std::vector<int> black() const {
    std::vector<int> out;
    for (int v = 0; v < graph.vertices; ++v) {
      if (std::find(red.begin(), red.end(), v) == red.end() &&
          std::find(yellow.begin(), yellow.end(), v) == yellow.end()) {
        out.push_back(v);
      }
    }
    return out;
  }
};

struct HarnessConfig {
  ColoredGraph h1, h2, g2, g3;
  std::pair<int, int> g3_bb;  // the two black vertices of G3 to identify
  std::pair<int, int> g3_rb;  // a red and a black vertex of G3 to identify
};

struct HarnessStep {
  std::string step;  // "a" .. "e"
  std::string check;
  bool passed = false;
  std::string detail;
};

struct HarnessReport {
  std::vector<HarnessStep> steps;
  bool all_passed = false;
};

namespace internal {

inline int nontrivial_parallel_classes(const Matroid& m) {
  int count = 0;
  for (Subset c : parallel_classes(m)) count += card(c) >= 2;
  return count;
}

inline int largest_parallel_class(const Matroid& m) {
  int best = 0;
  for (Subset c : parallel_classes(m)) best = std::max(best, card(c));
  return best;
}

inline MultiGraph with_extra_edge(MultiGraph g, int u, int v) {
  g.edges.emplace_back(u, v);
  return g;
}

inline std::string counts_detail(const std::string& what, int got, int want) {
  return what + " " + std::to_string(got) + " vs " + std::to_string(want);
}

}  // namespace internal

/// Runs the argument that a full flag matroid with graphic lift witnesses can
/// fail to be graphic, reporting each check. Throws ConfigInconsistent when the
/// supplied graphs do not fit together (step a).
inline HarnessReport counterexample_harness(const HarnessConfig& cfg) {
  HarnessReport report;
  auto add = [&](std::string step, std::string check, bool ok, std::string detail) {
    report.steps.push_back({std::move(step), std::move(check), ok, std::move(detail)});
    return ok;
  };
  for (const ColoredGraph* cg : {&cfg.h1, &cfg.h2, &cfg.g2, &cfg.g3}) cg->graph.validate();
  if (cfg.g3.red.size() != 2 || cfg.h2.red.size() != 2) {
    throw Error(Errc::kConfigInconsistent, "G3 and H2 need exactly two red vertices", {}, 0);
  }

  // (a) the four graphs fit together.
  const MultiGraph g3_reds = identify_vertices(cfg.g3.graph, cfg.g3.red[0], cfg.g3.red[1]);
  const MultiGraph h2_reds = identify_vertices(cfg.h2.graph, cfg.h2.red[0], cfg.h2.red[1]);
  const Matroid m1 = cycle_matroid(cfg.h1.graph);
  const Matroid m2 = cycle_matroid(cfg.h2.graph);
  const Matroid m3 = cycle_matroid(cfg.g3.graph);
  const struct {
    const char* check;
    bool ok;
  } consistency[] = {
      {"G2 is G3 with its red vertices identified", same_graph_up_to_vertex_names(g3_reds, cfg.g2.graph)},
      {"M(G2) = M(H2)", cycle_matroid(cfg.g2.graph) == m2},
      {"H1 is H2 with its red vertices identified", same_graph_up_to_vertex_names(h2_reds, cfg.h1.graph)},
  };
  for (const auto& c : consistency) {
    if (!c.ok) throw Error(Errc::kConfigInconsistent, std::string("step a: ") + c.check + " fails", {}, 0);
    add("a", c.check, true, "");
  }

  // (b) the three cycle matroids form a full flag matroid.
  std::optional<FlagMatroid> flag;
  try {
    flag = from_sequence({m1, m2, m3});
  } catch (const Error& err) {
    add("b", "(M(H1), M(H2), M(G3)) is a flag matroid", false, err.what());
  }
  if (flag) {
    add("b", "(M(H1), M(H2), M(G3)) is a flag matroid", true,
        "ranks " + std::to_string(m1.rank()) + ", " + std::to_string(m2.rank()) + ", " + std::to_string(m3.rank()));
    add("b", "the flag matroid is full", is_full(*flag), "");

    // (c) lift witnesses are the expected graphic matroids.
    if (is_full(*flag)) {
      const auto witnesses = lift_witness_sequence(*flag);
      const Matroid n1 = cycle_matroid(internal::with_extra_edge(cfg.h2.graph, cfg.h2.red[0], cfg.h2.red[1]));
      const Matroid n2 = cycle_matroid(internal::with_extra_edge(cfg.g3.graph, cfg.g3.red[0], cfg.g3.red[1]));
      add("c", "first witness is H2 plus an edge between its red vertices", witnesses[0].q == n1, "");
      add("c", "second witness is G3 plus a second edge between its red vertices", witnesses[1].q == n2, "");
      add("c", "first witness is graphic", is_graphic(witnesses[0].q), "");
      add("c", "second witness is graphic", is_graphic(witnesses[1].q), "");
    }
  }

  // (d) no other graph and chain on G3 produces the flag.
  {
    const auto [bu, bv] = cfg.g3_bb;
    const auto [ru, rv] = cfg.g3_rb;
    const Matroid bb = cycle_matroid(identify_vertices(cfg.g3.graph, bu, bv));
    const Matroid rb = cycle_matroid(identify_vertices(cfg.g3.graph, ru, rv));
    const int loops_bb = card(loops(bb));
    const int loops_m2 = card(loops(m2));
    add("d", "M(G3^bb) is loopless while M2 has a loop", loops_bb == 0 && loops_m2 >= 1,
        internal::counts_detail("loops", loops_bb, loops_m2));
    const int classes_rb = internal::nontrivial_parallel_classes(rb);
    const int classes_m2 = internal::nontrivial_parallel_classes(m2);
    add("d", "M(G3^rb) has fewer parallel classes than M2", classes_rb < classes_m2,
        internal::counts_detail("parallel classes", classes_rb, classes_m2));
    int matching = 0;
    for (const MultiGraph& h : vertex_identifications(cfg.g3.graph)) matching += cycle_matroid(h) == m2;
    add("d", "exactly one vertex identification of G3 gives M2", matching == 1,
        "identifications matching M2: " + std::to_string(matching));
  }
  {
    const auto black = cfg.g2.black();
    const auto& yellow = cfg.g2.yellow;
    int black_yellow_loops = -1, yellow_yellow_loops = -1, black_black_parallel = -1;
    for (int u = 0; u < cfg.g2.graph.vertices; ++u) {
      for (int v = u + 1; v < cfg.g2.graph.vertices; ++v) {
        const bool bu = std::find(black.begin(), black.end(), u) != black.end();
        const bool bv = std::find(black.begin(), black.end(), v) != black.end();
        const bool yu = std::find(yellow.begin(), yellow.end(), u) != yellow.end();
        const bool yv = std::find(yellow.begin(), yellow.end(), v) != yellow.end();
        const Matroid m = cycle_matroid(identify_vertices(cfg.g2.graph, u, v));
        const int l = card(loops(m));
        if ((bu && yv) || (yu && bv)) {
          black_yellow_loops = black_yellow_loops < 0 ? l : std::min(black_yellow_loops, l);
        } else if (yu && yv) {
          yellow_yellow_loops = yellow_yellow_loops < 0 ? l : std::min(yellow_yellow_loops, l);
        } else if (bu && bv) {
          black_black_parallel = std::max(black_black_parallel, internal::largest_parallel_class(m));
        }
      }
    }
    const int loops_m1 = card(loops(m1));
    const int parallel_m1 = internal::largest_parallel_class(m1);
    add("d", "black-yellow identifications of G2 have more loops than M1", black_yellow_loops > loops_m1,
        internal::counts_detail("fewest loops", black_yellow_loops, loops_m1));
    add("d", "the yellow-yellow identification of G2 has more loops than M1", yellow_yellow_loops > loops_m1,
        internal::counts_detail("fewest loops", yellow_yellow_loops, loops_m1));
    add("d", "the black-black identification of G2 has a larger parallel class than M1",
        black_black_parallel > parallel_m1,
        internal::counts_detail("largest parallel class", black_black_parallel, parallel_m1));
    const auto ids = vertex_identifications(cfg.g2.graph);
    int equal = 0;
    for (const MultiGraph& h : ids) equal += cycle_matroid(h) == m1;
    add("d", "no vertex identification of G2 gives M1", equal == 0,
        std::to_string(ids.size()) + " identifications checked");
  }

  // (e) G3 is 3-connected.
  add("e", "G3 is 3-connected", is_three_connected_simple(cfg.g3.graph), "");

  report.all_passed = std::all_of(report.steps.begin(), report.steps.end(),
                                  [](const HarnessStep& s) { return s.passed; });
  return report;
}

}  // namespace flagmat
