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

// Command-line front end. JSON goes to stdout, a one-line summary to stderr.
// Exit codes: 0 yes/success, 1 no, 2 input error, 3 budget exhausted/unknown.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flagmat.hpp"

namespace {

using flagmat::Errc;
using flagmat::Error;
using flagmat::FieldPrime;
using flagmat::FlagMatroid;
using flagmat::Matroid;
using flagmat::Subset;
using flagmat::io::Json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;
constexpr int kUnknown = 3;

struct Outcome {
  int code = kYes;
  Json out;
  std::string summary;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kBadArgument, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::kBadArgument, path + ": " + e.what());
  }
}

Subset subset_of(const std::vector<int>& elements, int n) {
  Json j = Json::array();
  for (int e : elements) j.push_back(e);
  return flagmat::io::read_subset(j, n);
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// validate / axioms / seqrep

Outcome cmd_validate(const std::string& path) {
  namespace io = flagmat::io;
  const Json j = read_json(path);
  if (io::is_certificate(j)) {
    const io::CheckResult r = io::check_certificate(j);
    Json out = io::object("certificate_check");
    out["certificate"] = j["kind"];
    out["verified"] = r.ok;
    out["detail"] = r.detail;
    return {r.ok ? kYes : kNo, out, (r.ok ? "verified: " : "rejected: ") + r.detail};
  }
  Json out = io::object("validation");
  out["valid"] = true;
  std::string summary;
  if (j.contains("bases")) {
    const Matroid m = io::matroid_from_json(j);
    out["object"] = io::to_json(m);
    summary = "matroid of rank " + std::to_string(m.rank()) + " on " + std::to_string(m.n()) + " elements";
  } else if (j.contains("feasible")) {
    auto [n, family] = io::family_from_json(j);
    const auto verdict = flagmat::check_flag_axioms(n, family);
    if (!verdict.ok) {
      throw Error(Errc::kAxiomViolation, "feasible family fails axiom " + std::to_string(verdict.axiom),
                  verdict.witness, verdict.axiom);
    }
    const FlagMatroid f = flagmat::from_feasible_sets(n, std::move(family));
    out["object"] = io::to_json(f);
    summary = "flag matroid with " + std::to_string(f.layer_count()) + " layers on " + std::to_string(n) +
              " elements";
  } else if (j.contains("levels")) {
    const auto rep = io::representation_from_json(j);
    out["object"] = io::to_json(rep);
    out["flag"] = io::to_json(rep.flag());
    summary = "flag representation over GF(" + std::to_string(rep.matrix.p()) + ")";
  } else if (j.contains("entries")) {
    const auto a = io::matrix_from_json(j);
    out["object"] = io::to_json(a);
    summary = std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix over GF(" +
              std::to_string(a.p()) + ")";
  } else if (j.contains("blocks")) {
    const auto major = io::major_from_json(j);
    std::vector<Matroid> layers;
    for (int i = 0; i <= static_cast<int>(major.blocks.size()); ++i) {
      layers.push_back(flagmat::major_layer(major.q, major.blocks, i));
    }
    out["object"] = io::to_json(major);
    out["flag"] = io::to_json(flagmat::from_sequence(std::move(layers)));
    summary = "major with " + std::to_string(major.blocks.size()) + " blocks";
  } else if (j.contains("H1")) {
    io::harness_config_from_json(j);
    out["object"] = j;
    summary = "counterexample configuration";
  } else if (j.contains("edges")) {
    out["object"] = io::to_json(io::colored_graph_from_json(j).graph);
    summary = "multigraph";
  } else {
    throw Error(Errc::kBadArgument, "unrecognized document");
  }
  return {kYes, out, "valid " + summary};
}

Outcome cmd_axioms(const std::string& path) {
  namespace io = flagmat::io;
  auto [n, family] = io::family_from_json(read_json(path));
  const auto v = flagmat::check_flag_axioms(n, family);
  Json out = io::object("axiom_check");
  out["ok"] = v.ok;
  if (!v.ok) {
    out["axiom"] = v.axiom;
    out["witness"] = io::family_to_json(v.witness);
    out["element"] = v.element;
  }
  return {v.ok ? kYes : kNo, out, v.ok ? "axioms hold" : "axiom " + std::to_string(v.axiom) + " fails"};
}

Outcome cmd_seqrep(const std::string& path) {
  namespace io = flagmat::io;
  const FlagMatroid f = io::flag_from_json(read_json(path));
  Json out = io::object("sequence");
  out["layers"] = io::layers_to_json(f);
  out["ranks"] = io::to_json(f.cardinalities());
  return {kYes, out, "ranks " + join(f.cardinalities())};
}

// minor / dual / from-matrix / uniform-rep

Outcome cmd_minor(const std::string& path, const std::vector<int>& del, const std::vector<int>& con,
                  const std::vector<int>& chops) {
  namespace io = flagmat::io;
  const FlagMatroid f = io::flag_from_json(read_json(path));
  const FlagMatroid g = flagmat::flag_minor(f, subset_of(con, f.n()), subset_of(del, f.n()), chops);
  return {kYes, io::to_json(g), "minor with ranks " + join(g.cardinalities())};
}

Outcome cmd_dual(const std::string& path) {
  namespace io = flagmat::io;
  const Json j = read_json(path);
  if (j.contains("bases")) {
    const Matroid d = flagmat::dual(io::matroid_from_json(j));
    return {kYes, io::to_json(d), "dual matroid of rank " + std::to_string(d.rank())};
  }
  const FlagMatroid d = flagmat::flag_dual(io::flag_from_json(j));
  return {kYes, io::to_json(d), "dual flag with ranks " + join(d.cardinalities())};
}

Outcome cmd_from_matrix(const std::string& path, const std::vector<int>& levels) {
  namespace io = flagmat::io;
  const auto a = io::matrix_from_json(read_json(path));
  const FlagMatroid f = flagmat::flag_from_matrix(a, levels);
  return {kYes, io::to_json(f), "flag with ranks " + join(f.cardinalities())};
}

Outcome cmd_uniform_rep(int r, int n, int p) {
  namespace io = flagmat::io;
  const FieldPrime field(p);
  try {
    const auto rep = flagmat::uniform_flag_representation(r, n, field);
    return {kYes, io::representation_certificate(rep.flag(), rep), "uniform flag representation found"};
  } catch (const Error& e) {
    if (e.code() != Errc::kFieldTooSmall) throw;
    Json out = io::object("uniform_representation");
    out["exists"] = false;
    out["detail"] = e.detail();
    return {kNo, out, "no representation: " + e.detail()};
  }
}

// Representability.

struct MethodResult {
  flagmat::Tristate answer = flagmat::Tristate::kUnknown;
  Json report;
  std::optional<Json> certificate;
};

const char* tristate_name(flagmat::Tristate t) {
  switch (t) {
    case flagmat::Tristate::kYes: return "yes";
    case flagmat::Tristate::kNo: return "no";
    case flagmat::Tristate::kUnknown: return "unknown";
  }
  return "unknown";
}

MethodResult run_minors(const FlagMatroid& f, int p) {
  namespace io = flagmat::io;
  MethodResult r;
  r.report = Json::object();
  if (auto hit = flagmat::find_excluded_flag_minor(f, p)) {
    r.answer = flagmat::Tristate::kNo;
    r.report["excluded_minor"] = hit->name;
    r.certificate = io::excluded_minor_certificate(p, f, *hit);
  } else {
    r.answer = flagmat::Tristate::kYes;
  }
  return r;
}

MethodResult run_witness(const FlagMatroid& f, int p) {
  namespace io = flagmat::io;
  MethodResult r;
  r.report = Json::object();
  if (auto rep = flagmat::witness_route_representation(f, FieldPrime(p))) {
    r.answer = flagmat::Tristate::kYes;
    r.certificate = io::representation_certificate(f, *rep);
    return r;
  }
  r.answer = flagmat::Tristate::kNo;
  const auto& excluded = flagmat::fixtures::excluded_matroids(p);
  if (f.layer_count() == 1) {
    r.report["layer_minor"] = flagmat::find_excluded_minor(f.layers().front(), excluded)->name;
  } else {
    const auto witnesses = flagmat::lift_witness_sequence(f);
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      if (auto hit = flagmat::find_excluded_minor(witnesses[i].q, excluded)) {
        r.report["failing_witness"] = i;
        r.report["witness_minor"] = hit->name;
        break;
      }
    }
  }
  return r;
}

MethodResult run_fillings(const FlagMatroid& f, int p, std::size_t budget) {
  namespace io = flagmat::io;
  MethodResult r;
  const auto v = flagmat::is_representable_via_fillings(f, p, budget);
  r.answer = v.answer;
  r.report = Json::object();
  r.report["fillings_checked"] = v.fillings_checked;
  if (v.filling) r.report["filling"] = io::to_json(*v.filling);
  if (v.certificate) r.certificate = io::representation_certificate(f, *v.certificate);
  return r;
}

MethodResult run_search(const FlagMatroid& f, int p) {
  namespace io = flagmat::io;
  MethodResult r;
  r.report = Json::object();
  try {
    if (auto rep = flagmat::search_representation(f, FieldPrime(p))) {
      r.answer = flagmat::Tristate::kYes;
      r.certificate = io::representation_certificate(f, *rep);
    } else {
      r.answer = flagmat::Tristate::kNo;
    }
  } catch (const Error& e) {
    if (e.code() != Errc::kSearchSpaceTooLarge) throw;
    r.report["detail"] = e.detail();
  }
  return r;
}

Outcome cmd_is_representable(const std::string& path, int p, const std::string& method, std::size_t budget) {
  namespace io = flagmat::io;
  if (p != 2 && p != 3) throw Error(Errc::kBadField, "--p must be 2 or 3");
  const FlagMatroid f = io::flag_from_json(read_json(path));
  const bool full = flagmat::is_full(f);
  std::vector<std::pair<std::string, MethodResult>> results;
  auto want = [&](const char* m) { return method == "all" || method == m; };
  if (full) {
    if (want("minors")) results.emplace_back("minors", run_minors(f, p));
    if (want("witness")) results.emplace_back("witness", run_witness(f, p));
  } else if (want("minors") || want("witness")) {
    results.emplace_back("fillings", run_fillings(f, p, budget));
  }
  if (want("search")) results.emplace_back("search", run_search(f, p));

  std::optional<flagmat::Tristate> agreed;
  std::optional<Json> certificate;
  Json methods = Json::object();
  for (auto& [name, r] : results) {
    Json entry = r.report;
    entry["answer"] = tristate_name(r.answer);
    methods[name] = std::move(entry);
    if (r.answer == flagmat::Tristate::kUnknown) continue;
    if (agreed && *agreed != r.answer) throw Error(Errc::kInternal, "representability methods disagree");
    agreed = r.answer;
    if (!certificate && r.certificate) certificate = r.certificate;
  }
  const flagmat::Tristate answer = agreed.value_or(flagmat::Tristate::kUnknown);
  Json out = io::object("representability");
  out["p"] = p;
  out["method"] = method;
  out["full"] = full;
  out["answer"] = tristate_name(answer);
  out["methods"] = std::move(methods);
  out["certificate"] = certificate ? *certificate : Json(nullptr);
  const int code = answer == flagmat::Tristate::kYes ? kYes : answer == flagmat::Tristate::kNo ? kNo : kUnknown;
  return {code, out, std::string("GF(") + std::to_string(p) + ")-representable: " + tristate_name(answer)};
}

Outcome cmd_represent(const std::string& path, int p) {
  namespace io = flagmat::io;
  const FlagMatroid f = io::flag_from_json(read_json(path));
  const MethodResult r = run_search(f, p);
  if (r.answer == flagmat::Tristate::kYes) return {kYes, *r.certificate, "representation found"};
  Json out = io::object("representation_search");
  out["p"] = p;
  out["answer"] = tristate_name(r.answer);
  if (r.report.contains("detail")) out["detail"] = r.report["detail"];
  return {r.answer == flagmat::Tristate::kNo ? kNo : kUnknown, out,
          std::string("representation search: ") + tristate_name(r.answer)};
}

// Graphic flag matroids.

flagmat::GraphWithChain read_graph_chain(const std::string& graph_path, const std::string& chain_path) {
  namespace io = flagmat::io;
  flagmat::MultiGraph g = io::graph_from_json(read_json(graph_path));
  flagmat::PartitionChain chain = io::chain_from_json(read_json(chain_path), g.vertices);
  return {std::move(g), std::move(chain)};
}

Outcome cmd_graphic_flag(const std::string& graph_path, const std::string& chain_path) {
  namespace io = flagmat::io;
  const auto gc = read_graph_chain(graph_path, chain_path);
  const FlagMatroid f = flagmat::graphic_flag(gc.graph, gc.chain);
  return {kYes, io::to_json(f), "graphic flag with ranks " + join(f.cardinalities())};
}

Outcome cmd_graphic_major(const std::string& graph_path, const std::string& chain_path) {
  namespace io = flagmat::io;
  auto gc = read_graph_chain(graph_path, chain_path);
  const FlagMatroid f = flagmat::graphic_flag(gc.graph, gc.chain);
  if (flagmat::component_count(gc.graph) > 1) gc = flagmat::connectify(gc.graph, gc.chain);
  const auto gm = flagmat::graphic_major(gc.graph, gc.chain);
  Json out = io::major_certificate(f, gm.major);
  out["graph"] = io::to_json(gm.graph);
  return {kYes, out, std::to_string(gm.graph.edge_count() - gc.graph.edge_count()) + " edges added"};
}

// Majors, lift witnesses, fillings.

Outcome cmd_major_verify(const std::string& major_path, const std::string& flag_path) {
  namespace io = flagmat::io;
  const Json mj = read_json(major_path);
  const auto major = io::major_from_json(mj.contains("major") ? mj["major"] : mj);
  const FlagMatroid f = io::flag_from_json(read_json(flag_path));
  const bool ok = flagmat::verify_major(major, f);
  Json out = io::object("major_check");
  out["verified"] = ok;
  return {ok ? kYes : kNo, out, ok ? "major verified" : "not a major"};
}

Outcome cmd_major_from_rep(const std::string& path) {
  namespace io = flagmat::io;
  const Json j = read_json(path);
  const auto rep = io::representation_from_json(j.contains("representation") ? j["representation"] : j);
  const auto mr = flagmat::major_from_representation(rep);
  Json out = io::major_certificate(rep.flag(), mr.major);
  out["matrix"] = io::to_json(mr.matrix);
  return {kYes, out, "major on " + std::to_string(mr.major.q.n()) + " elements"};
}

Outcome cmd_major_search(const std::string& path, std::optional<int> extra, std::size_t budget) {
  namespace io = flagmat::io;
  const FlagMatroid f = io::flag_from_json(read_json(path));
  const auto cards = f.cardinalities();
  const int s = extra.value_or(cards.back() - cards.front());
  if (auto major = flagmat::search_major(f, s, budget)) {
    return {kYes, io::major_certificate(f, *major), "major found"};
  }
  Json out = io::object("major_search");
  out["found"] = false;
  return {kNo, out, "no major with " + std::to_string(s) + " extra elements"};
}

Outcome cmd_witness(const std::string& path) {
  namespace io = flagmat::io;
  const FlagMatroid f = io::flag_from_json(read_json(path));
  const auto w = flagmat::lift_witness_sequence(f);
  return {kYes, io::lift_witness_certificate(f, w), std::to_string(w.size()) + " lift witnesses"};
}

Outcome cmd_fillings(const std::string& path, std::size_t budget) {
  namespace io = flagmat::io;
  const FlagMatroid f = io::flag_from_json(read_json(path));
  const auto r = flagmat::enumerate_fillings(f, budget);
  Json out = io::object("fillings");
  Json list = Json::array();
  for (const FlagMatroid& g : r.fillings) list.push_back(io::to_json(g));
  out["fillings"] = std::move(list);
  out["truncated"] = r.truncated;
  out["examined"] = r.examined;
  std::string summary = std::to_string(r.fillings.size()) + " fillings";
  if (r.truncated) {
    out["error"] = std::string(flagmat::errc_name(Errc::kBudgetExhausted));
    summary += " (budget exhausted)";
  }
  return {r.truncated ? kUnknown : kYes, out, summary};
}

Outcome cmd_isomorphic(const std::string& path_a, const std::string& path_b) {
  namespace io = flagmat::io;
  const Json a = read_json(path_a);
  const Json b = read_json(path_b);
  std::optional<std::vector<int>> bijection;
  Json na, nb;
  if (a.contains("bases") && b.contains("bases")) {
    const Matroid ma = io::matroid_from_json(a);
    const Matroid mb = io::matroid_from_json(b);
    bijection = flagmat::is_isomorphic(ma, mb);
    na = io::to_json(ma);
    nb = io::to_json(mb);
  } else if (a.contains("feasible") && b.contains("feasible")) {
    const FlagMatroid fa = io::flag_from_json(a);
    const FlagMatroid fb = io::flag_from_json(b);
    bijection = flagmat::flag_isomorphic(fa, fb);
    na = io::to_json(fa);
    nb = io::to_json(fb);
  } else {
    throw Error(Errc::kBadArgument, "compare two matroids or two flag matroids");
  }
  if (bijection) return {kYes, io::isomorphism_certificate(na, nb, *bijection), "isomorphic"};
  Json out = io::object("isomorphism");
  out["isomorphic"] = false;
  return {kNo, out, "not isomorphic"};
}

Outcome cmd_counterexample(const std::string& path) {
  namespace io = flagmat::io;
  const auto cfg = io::harness_config_from_json(read_json(path));
  const auto report = flagmat::counterexample_harness(cfg);
  int passed = 0;
  for (const auto& s : report.steps) passed += s.passed;
  return {report.all_passed ? kYes : kNo, io::to_json(report),
          std::to_string(passed) + "/" + std::to_string(report.steps.size()) + " checks passed"};
}

int emit(const Outcome& o) {
  std::cout << o.out.dump(2) << "\n";
  std::cerr << o.summary << "\n";
  return o.code;
}

int emit_error(const Error& e) {
  const int code = (e.code() == Errc::kBudgetExhausted || e.code() == Errc::kSearchSpaceTooLarge) ? kUnknown
                                                                                                   : kInputError;
  std::cout << flagmat::io::to_json(e).dump(2) << "\n";
  std::cerr << "error: " << e.what() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation with matroids and flag matroids"};
  app.require_subcommand(1);
  std::function<Outcome()> action;

  std::string file, file2, graph_path, chain_path, method = "all";
  std::vector<int> del, con, chops, levels;
  int r = 0, n = 0, p = 2;
  std::optional<int> extra;
  std::size_t budget = 100000;

  auto* validate = app.add_subcommand("validate", "Validate a JSON document or re-verify a certificate");
  validate->add_option("file", file, "JSON file")->required();
  validate->callback([&] { action = [&] { return cmd_validate(file); }; });

  auto* axioms = app.add_subcommand("axioms", "Check the feasible-set axioms on a raw family");
  axioms->add_option("file", file, "flag JSON")->required();
  axioms->callback([&] { action = [&] { return cmd_axioms(file); }; });

  auto* seqrep = app.add_subcommand("seqrep", "Sequence of matroids of a flag matroid");
  seqrep->add_option("file", file, "flag JSON")->required();
  seqrep->callback([&] { action = [&] { return cmd_seqrep(file); }; });

  auto* minor = app.add_subcommand("minor", "Minor of a flag matroid");
  minor->add_option("file", file, "flag JSON")->required();
  minor->add_option("--delete", del, "elements to delete")->delimiter(',');
  minor->add_option("--contract", con, "elements to contract")->delimiter(',');
  minor->add_option("--chop", chops, "cardinalities to chop after the minor")->delimiter(',');
  minor->callback([&] { action = [&] { return cmd_minor(file, del, con, chops); }; });

  auto* dual = app.add_subcommand("dual", "Dual of a matroid or flag matroid");
  dual->add_option("file", file, "matroid or flag JSON")->required();
  dual->callback([&] { action = [&] { return cmd_dual(file); }; });

  auto* from_matrix = app.add_subcommand("from-matrix", "Flag matroid of a matrix");
  from_matrix->add_option("file", file, "matrix JSON")->required();
  from_matrix->add_option("--levels", levels, "row prefix lengths")->delimiter(',')->required();
  from_matrix->callback([&] { action = [&] { return cmd_from_matrix(file, levels); }; });

  auto* uniform_rep = app.add_subcommand("uniform-rep", "Representation of the uniform flag of ranks 1..r");
  uniform_rep->add_option("--r", r, "top rank")->required();
  uniform_rep->add_option("--n", n, "ground set size")->required();
  uniform_rep->add_option("--p", p, "field size (prime)")->required();
  uniform_rep->callback([&] { action = [&] { return cmd_uniform_rep(r, n, p); }; });

  auto* is_rep = app.add_subcommand("is-representable", "Decide GF(2) or GF(3) representability");
  is_rep->add_option("file", file, "flag JSON")->required();
  is_rep->add_option("--p", p, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
  is_rep->add_option("--method", method, "minors, witness, search or all")
      ->check(CLI::IsMember({"minors", "witness", "search", "all"}));
  is_rep->add_option("--budget", budget, "filling budget for flags that are not full");
  is_rep->callback([&] { action = [&] { return cmd_is_representable(file, p, method, budget); }; });

  auto* represent = app.add_subcommand("represent", "Search for a representation over GF(p)");
  represent->add_option("file", file, "flag JSON")->required();
  represent->add_option("--p", p, "field size (prime)")->required();
  represent->callback([&] { action = [&] { return cmd_represent(file, p); }; });

  auto* graphic_flag = app.add_subcommand("graphic-flag", "Flag matroid of a graph and partition chain");
  graphic_flag->add_option("--graph", graph_path, "graph JSON")->required();
  graphic_flag->add_option("--chain", chain_path, "partition chain JSON")->required();
  graphic_flag->callback([&] { action = [&] { return cmd_graphic_flag(graph_path, chain_path); }; });

  auto* graphic_major = app.add_subcommand("graphic-major", "Graphic major of a graph and partition chain");
  graphic_major->add_option("--graph", graph_path, "graph JSON")->required();
  graphic_major->add_option("--chain", chain_path, "partition chain JSON")->required();
  graphic_major->callback([&] { action = [&] { return cmd_graphic_major(graph_path, chain_path); }; });

  auto* major = app.add_subcommand("major", "Majors of flag matroids");
  major->require_subcommand(1);
  auto* major_verify = major->add_subcommand("verify", "Check that a major encodes a flag matroid");
  major_verify->add_option("major", file, "major JSON or major certificate")->required();
  major_verify->add_option("flag", file2, "flag JSON")->required();
  major_verify->callback([&] { action = [&] { return cmd_major_verify(file, file2); }; });
  auto* major_from_rep = major->add_subcommand("from-rep", "Major of a representation");
  major_from_rep->add_option("file", file, "flag representation JSON")->required();
  major_from_rep->callback([&] { action = [&] { return cmd_major_from_rep(file); }; });
  auto* major_search = major->add_subcommand("search", "Bounded search for a major");
  major_search->add_option("file", file, "flag JSON")->required();
  major_search->add_option("--extra", extra, "number of extra elements");
  major_search->add_option("--budget", budget, "candidate budget");
  major_search->callback([&] { action = [&] { return cmd_major_search(file, extra, budget); }; });

  auto* witness = app.add_subcommand("witness", "Lift witness sequence of a full flag matroid");
  witness->add_option("file", file, "flag JSON")->required();
  witness->callback([&] { action = [&] { return cmd_witness(file); }; });

  auto* fillings = app.add_subcommand("fillings", "Enumerate fillings of a flag matroid");
  fillings->add_option("file", file, "flag JSON")->required();
  fillings->add_option("--budget", budget, "candidate budget");
  fillings->callback([&] { action = [&] { return cmd_fillings(file, budget); }; });

  auto* isomorphic = app.add_subcommand("isomorphic", "Isomorphism of two matroids or flag matroids");
  isomorphic->add_option("a", file, "first JSON")->required();
  isomorphic->add_option("b", file2, "second JSON")->required();
  isomorphic->callback([&] { action = [&] { return cmd_isomorphic(file, file2); }; });

  auto* counterexample = app.add_subcommand("counterexample", "Run the graphic counterexample checks");
  counterexample->add_option("config", file, "configuration JSON")->required();
  counterexample->callback([&] { action = [&] { return cmd_counterexample(file); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(Error(Errc::kBadArgument, e.what()));
  }

  try {
    return emit(action());
  } catch (const Error& e) {
    return emit_error(e);
  } catch (const nlohmann::json::exception& e) {
    return emit_error(Error(Errc::kBadArgument, e.what()));
  } catch (const std::exception& e) {
    return emit_error(Error(Errc::kInternal, e.what()));
  }
}
