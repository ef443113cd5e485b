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

// JSON encoding of the library's value types. Sets are sorted index arrays
// and every object carries "schema": "1". Readers validate and throw Error.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "flagmat/error.hpp"
#include "flagmat/flag.hpp"
#include "flagmat/gf_linalg.hpp"
#include "flagmat/graph.hpp"
#include "flagmat/graphic.hpp"
#include "flagmat/linear_flag.hpp"
#include "flagmat/major.hpp"
#include "flagmat/matroid.hpp"

namespace flagmat::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "1";

inline Json object(const char* kind) {
  Json j = Json::object();
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

// Readers.

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw Error(Errc::kBadArgument, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(Errc::kBadArgument, std::string("missing field \"") + key + "\"");
  return *it;
}

inline int read_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(Errc::kBadArgument, std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) throw Error(Errc::kBadArgument, std::string(what) + " out of range");
  return static_cast<int>(v);
}

inline std::vector<int> read_int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::kBadArgument, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& x : j) out.push_back(read_int(x, what));
  return out;
}

inline int read_ground_size(const Json& j) {
  const int n = read_int(field(j, "n"), "n");
  if (n < 0) throw Error(Errc::kBadArgument, "n must be nonnegative");
  if (n > kMaxGround) throw Error(Errc::kGroundTooLarge, "n exceeds 20");
  return n;
}

inline Subset read_subset(const Json& j, int n) {
  Subset s = 0;
  for (int e : read_int_list(j, "set element")) {
    if (e < 0 || e >= n) throw Error(Errc::kIndexOutOfRange, "element " + std::to_string(e) + " outside the ground set");
    if (contains(s, e)) throw Error(Errc::kBadArgument, "element " + std::to_string(e) + " repeated in a set");
    s |= bit(e);
  }
  return s;
}

inline std::vector<Subset> read_family(const Json& j, int n) {
  if (!j.is_array()) throw Error(Errc::kBadArgument, "a family must be an array of sets");
  std::vector<Subset> out;
  for (const Json& s : j) out.push_back(read_subset(s, n));
  return out;
}

// Writers.

inline Json to_json(Subset s) {
  Json j = Json::array();
  for (int e : elements(s)) j.push_back(e);
  return j;
}

inline Json family_to_json(const std::vector<Subset>& family) {
  Json j = Json::array();
  for (Subset s : family) j.push_back(to_json(s));
  return j;
}

inline Json to_json(const std::vector<int>& v) {
  Json j = Json::array();
  for (int x : v) j.push_back(x);
  return j;
}

// Matroids and flag matroids.

inline Json to_json(const Matroid& m) {
  Json j = object("matroid");
  j["n"] = m.n();
  j["bases"] = family_to_json(m.bases());
  return j;
}

inline Matroid matroid_from_json(const Json& j) {
  const int n = read_ground_size(j);
  return Matroid(n, read_family(field(j, "bases"), n));
}

inline Json to_json(const FlagMatroid& f) {
  Json j = object("flag");
  j["n"] = f.n();
  j["feasible"] = family_to_json(f.feasible());
  return j;
}

/// The raw feasible family, unvalidated beyond set syntax.
inline std::pair<int, std::vector<Subset>> family_from_json(const Json& j) {
  const int n = read_ground_size(j);
  return {n, read_family(field(j, "feasible"), n)};
}

inline FlagMatroid flag_from_json(const Json& j) {
  auto [n, family] = family_from_json(j);
  return from_feasible_sets(n, std::move(family));
}

inline Json layers_to_json(const FlagMatroid& f) {
  Json j = Json::array();
  for (const Matroid& m : f.layers()) j.push_back(to_json(m));
  return j;
}

// Matrices and representations.

inline Json to_json(const GFMatrix& a) {
  Json j = object("matrix");
  j["p"] = a.p();
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  Json entries = Json::array();
  for (int r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(a.at(r, c));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

inline GFMatrix matrix_from_json(const Json& j) {
  const int p = read_int(field(j, "p"), "p");
  const int rows = read_int(field(j, "rows"), "rows");
  const int cols = read_int(field(j, "cols"), "cols");
  const FieldPrime field_p(p);
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows) {
    throw Error(Errc::kShapeMismatch, "entries must have one array per row");
  }
  std::vector<std::vector<int>> data;
  for (const Json& row : entries) {
    std::vector<int> values = read_int_list(row, "matrix entry");
    if (static_cast<int>(values.size()) != cols) throw Error(Errc::kShapeMismatch, "row length differs from cols");
    for (int v : values) {
      if (v < 0 || v >= p) throw Error(Errc::kBadArgument, "matrix entry " + std::to_string(v) + " not in [0, p)");
    }
    data.push_back(std::move(values));
  }
  return GFMatrix(field_p, data, cols);
}

inline Json to_json(const FlagRepresentation& rep) {
  Json j = object("flag_representation");
  j["matrix"] = to_json(rep.matrix);
  j["levels"] = to_json(rep.levels);
  return j;
}

inline FlagRepresentation representation_from_json(const Json& j) {
  return FlagRepresentation(matrix_from_json(field(j, "matrix")), read_int_list(field(j, "levels"), "level"));
}

// Majors.

inline Json to_json(const MajorStructure& major) {
  Json j = object("major");
  j["matroid"] = to_json(major.q);
  j["blocks"] = family_to_json(major.blocks);
  return j;
}

inline MajorStructure major_from_json(const Json& j) {
  Matroid q = matroid_from_json(field(j, "matroid"));
  std::vector<Subset> blocks = read_family(field(j, "blocks"), q.n());
  return MajorStructure{std::move(q), std::move(blocks)};
}

// Graphs and partition chains.

inline Json to_json(const MultiGraph& g) {
  Json j = object("graph");
  j["vertices"] = g.vertices;
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

inline Json to_json(const ColoredGraph& cg) {
  Json j = to_json(cg.graph);
  j["colors"] = {{"red", to_json(cg.red)}, {"yellow", to_json(cg.yellow)}};
  return j;
}

inline ColoredGraph colored_graph_from_json(const Json& j) {
  ColoredGraph out;
  out.graph.vertices = read_int(field(j, "vertices"), "vertices");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw Error(Errc::kBadArgument, "edges must be an array");
  for (const Json& e : edges) {
    const std::vector<int> uv = read_int_list(e, "edge endpoint");
    if (uv.size() != 2) throw Error(Errc::kBadArgument, "an edge has exactly two endpoints");
    out.graph.edges.emplace_back(uv[0], uv[1]);
  }
  out.graph.validate();
  if (j.contains("colors")) {
    const Json& colors = j["colors"];
    for (const auto& [key, target] : {std::pair{"red", &out.red}, std::pair{"yellow", &out.yellow}}) {
      if (!colors.contains(key)) continue;
      *target = read_int_list(colors[key], "colored vertex");
      for (int v : *target) {
        if (v < 0 || v >= out.graph.vertices) throw Error(Errc::kIndexOutOfRange, "colored vertex out of range");
      }
    }
  }
  return out;
}

inline MultiGraph graph_from_json(const Json& j) { return colored_graph_from_json(j).graph; }

inline Json to_json(const PartitionChain& chain) {
  Json j = object("chain");
  Json parts = Json::array();
  for (const VertexPartition& p : chain.partitions) {
    Json cells = Json::array();
    for (const auto& cell : partition_cells(p)) cells.push_back(to_json(cell));
    parts.push_back(std::move(cells));
  }
  j["partitions"] = std::move(parts);
  return j;
}

inline PartitionChain chain_from_json(const Json& j, int vertices) {
  const Json& parts = field(j, "partitions");
  if (!parts.is_array()) throw Error(Errc::kBadArgument, "partitions must be an array");
  PartitionChain chain;
  for (const Json& p : parts) {
    if (!p.is_array()) throw Error(Errc::kBadArgument, "a partition is an array of cells");
    std::vector<std::vector<int>> cells;
    for (const Json& c : p) cells.push_back(read_int_list(c, "vertex"));
    chain.partitions.push_back(partition_from_cells(vertices, cells));
  }
  chain.validate(vertices);
  return chain;
}

// Counterexample harness.

inline std::pair<int, int> read_pair(const Json& j, const char* what) {
  const std::vector<int> v = read_int_list(j, what);
  if (v.size() != 2) throw Error(Errc::kBadArgument, std::string(what) + " must list two vertices");
  return {v[0], v[1]};
}

inline HarnessConfig harness_config_from_json(const Json& j) {
  HarnessConfig cfg{colored_graph_from_json(field(j, "H1")), colored_graph_from_json(field(j, "H2")),
                    colored_graph_from_json(field(j, "G2")), colored_graph_from_json(field(j, "G3")),
                    read_pair(field(j, "G3_bb"), "G3_bb"), read_pair(field(j, "G3_rb"), "G3_rb")};
  for (auto [u, v] : {cfg.g3_bb, cfg.g3_rb}) {
    if (u < 0 || v < 0 || u >= cfg.g3.graph.vertices || v >= cfg.g3.graph.vertices || u == v) {
      throw Error(Errc::kBadArgument, "identification pair must name two distinct vertices of G3");
    }
  }
  return cfg;
}

inline Json to_json(const HarnessReport& report) {
  Json j = object("counterexample_report");
  Json steps = Json::array();
  for (const HarnessStep& s : report.steps) {
    steps.push_back({{"step", s.step}, {"check", s.check}, {"passed", s.passed}, {"detail", s.detail}});
  }
  j["steps"] = std::move(steps);
  j["all_passed"] = report.all_passed;
  j["verdict"] = report.all_passed ? "not graphic, witnesses graphic" : "incomplete";
  return j;
}

// Errors.

inline Json to_json(const Error& err) {
  Json j = Json::object();
  j["schema"] = kSchema;
  j["error"] = std::string(errc_name(err.code()));
  j["detail"] = err.detail();
  if (!err.witness().empty()) j["witness"] = family_to_json(err.witness());
  if (err.index() >= 0) j["index"] = err.index();
  return j;
}

}  // namespace flagmat::io
