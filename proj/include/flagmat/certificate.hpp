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

// Self-contained certificates. Each one embeds its subject, so checking it
// needs nothing but the document.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flagmat/io.hpp"
#include "flagmat/representability.hpp"

namespace flagmat::io {

inline Json representation_certificate(const FlagMatroid& f, const FlagRepresentation& rep) {
  Json j = object("representation_certificate");
  j["flag"] = to_json(f);
  j["representation"] = to_json(rep);
  return j;
}

inline Json excluded_minor_certificate(int p, const FlagMatroid& f, const ExcludedFlagHit& hit) {
  Json j = object("excluded_minor_certificate");
  j["p"] = p;
  j["flag"] = to_json(f);
  j["target_name"] = hit.name;
  j["target"] = to_json(hit.target);
  j["contract"] = to_json(hit.witness.contract);
  j["delete"] = to_json(hit.witness.del);
  j["chops"] = to_json(hit.witness.chops);
  j["bijection"] = to_json(hit.witness.bijection);
  return j;
}

inline Json major_certificate(const FlagMatroid& f, const MajorStructure& major) {
  Json j = object("major_certificate");
  j["flag"] = to_json(f);
  j["major"] = to_json(major);
  return j;
}

inline Json lift_witness_certificate(const FlagMatroid& f, const std::vector<LiftWitness>& witnesses) {
  Json j = object("lift_witness_certificate");
  j["flag"] = to_json(f);
  Json list = Json::array();
  for (const LiftWitness& w : witnesses) list.push_back(to_json(w.q));
  j["witnesses"] = std::move(list);
  return j;
}

inline Json isomorphism_certificate(const Json& a, const Json& b, const std::vector<int>& bijection) {
  Json j = object("isomorphism_certificate");
  j["a"] = a;
  j["b"] = b;
  j["bijection"] = to_json(bijection);
  return j;
}

struct CheckResult {
  bool ok = false;
  std::string detail;
};

namespace internal {

inline CheckResult check_representation(const Json& j) {
  const FlagMatroid f = flag_from_json(field(j, "flag"));
  const FlagRepresentation rep = representation_from_json(field(j, "representation"));
  if (rep.matrix.cols() != f.n()) return {false, "matrix column count differs from the ground set"};
  if (rep.flag() != f) return {false, "the matrix realizes a different flag matroid"};
  return {true, "matrix realizes the flag matroid over GF(" + std::to_string(rep.matrix.p()) + ")"};
}

inline CheckResult check_excluded_minor(const Json& j) {
  const int p = read_int(field(j, "p"), "p");
  const FlagMatroid f = flag_from_json(field(j, "flag"));
  const FlagMatroid target = flag_from_json(field(j, "target"));
  const std::string name = field(j, "target_name").get<std::string>();
  bool listed = false;
  for (const NamedFlag& nf : fixtures::excluded_flags(p)) listed = listed || (nf.name == name && nf.flag == target);
  if (!listed) return {false, "target is not the named excluded flag for GF(" + std::to_string(p) + ")"};
  const Subset c = read_subset(field(j, "contract"), f.n());
  const Subset d = read_subset(field(j, "delete"), f.n());
  const std::vector<int> chops = read_int_list(field(j, "chops"), "chop");
  const std::vector<int> bijection = read_int_list(field(j, "bijection"), "bijection entry");
  const FlagMatroid minor = flag_minor(f, c, d, chops);
  if (minor.n() != target.n() || static_cast<int>(bijection.size()) != minor.n()) {
    return {false, "minor and target have different ground sets"};
  }
  if (flag_permute(minor, bijection) != target) return {false, "the scripted minor is not the target"};
  return {true, "has the excluded minor " + name};
}

inline CheckResult check_major(const Json& j) {
  const FlagMatroid f = flag_from_json(field(j, "flag"));
  const MajorStructure major = major_from_json(field(j, "major"));
  if (!verify_major(major, f)) return {false, "the structure is not a major of the flag matroid"};
  return {true, "major verified"};
}

inline CheckResult check_lift_witnesses(const Json& j) {
  const FlagMatroid f = flag_from_json(field(j, "flag"));
  const Json& list = field(j, "witnesses");
  if (!list.is_array() || static_cast<int>(list.size()) != f.layer_count() - 1) {
    return {false, "need one witness per consecutive pair of layers"};
  }
  for (int i = 0; i + 1 < f.layer_count(); ++i) {
    const Matroid q = matroid_from_json(list[i]);
    if (q.n() != f.n() + 1) return {false, "witness " + std::to_string(i) + " must have one extra element"};
    if (contract_element(q, f.n()) != f.layers()[i] || delete_element(q, f.n()) != f.layers()[i + 1]) {
      return {false, "witness " + std::to_string(i) + " does not restrict to its layers"};
    }
  }
  return {true, "lift witnesses verified"};
}

inline CheckResult check_isomorphism(const Json& j) {
  const Json& a = field(j, "a");
  const Json& b = field(j, "b");
  const std::vector<int> bijection = read_int_list(field(j, "bijection"), "bijection entry");
  if (a.contains("bases") && b.contains("bases")) {
    const Matroid ma = matroid_from_json(a);
    const Matroid mb = matroid_from_json(b);
    if (ma.n() != mb.n() || static_cast<int>(bijection.size()) != ma.n()) return {false, "size mismatch"};
    return permute(ma, bijection) == mb ? CheckResult{true, "isomorphism verified"}
                                        : CheckResult{false, "bijection is not an isomorphism"};
  }
  const FlagMatroid fa = flag_from_json(a);
  const FlagMatroid fb = flag_from_json(b);
  if (fa.n() != fb.n() || static_cast<int>(bijection.size()) != fa.n()) return {false, "size mismatch"};
  return flag_permute(fa, bijection) == fb ? CheckResult{true, "isomorphism verified"}
                                           : CheckResult{false, "bijection is not an isomorphism"};
}

}  // namespace internal

inline bool is_certificate(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) return false;
  const std::string kind = j["kind"].get<std::string>();
  return kind.size() > 12 && kind.compare(kind.size() - 12, 12, "_certificate") == 0;
}

/// Re-verifies a certificate from scratch. Malformed documents throw Error.
inline CheckResult check_certificate(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "representation_certificate") return internal::check_representation(j);
  if (kind == "excluded_minor_certificate") return internal::check_excluded_minor(j);
  if (kind == "major_certificate") return internal::check_major(j);
  if (kind == "lift_witness_certificate") return internal::check_lift_witnesses(j);
  if (kind == "isomorphism_certificate") return internal::check_isomorphism(j);
  throw Error(Errc::kBadArgument, "unknown certificate kind \"" + kind + "\"");
}

}  // namespace flagmat::io
