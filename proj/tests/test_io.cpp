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


#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "flagmat/certificate.hpp"
#include "flagmat/classify.hpp"
#include "flagmat/io.hpp"
#include "support/oracles.hpp"

namespace flagmat::io {
namespace {

Json load(const std::string& name) {
  std::ifstream in(std::string(FLAGMAT_DATA) + "/" + name);
  return Json::parse(in);
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::kInternal;
}

// Round trips go through text so that parsing is exercised as well.
Json reparse(const Json& j) { return Json::parse(j.dump(2)); }

TEST(IoTest, EnvelopeFields) {
  const Json j = to_json(uniform(2, 4));
  EXPECT_EQ(j["schema"], "1");
  EXPECT_EQ(j["kind"], "matroid");
  EXPECT_EQ(j.begin().key(), "schema");
  EXPECT_EQ(to_json(basis_flag(uniform(2, 4)))["kind"], "flag");
}

TEST(IoTest, MatroidAndFlagRoundTrip) {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const FlagMatroid f = oracle::random_flag(rng, 1 + static_cast<int>(rng() % 5));
    EXPECT_EQ(flag_from_json(reparse(to_json(f))), f);
    for (const Matroid& m : f.layers()) EXPECT_EQ(matroid_from_json(reparse(to_json(m))), m);
  }
}

TEST(IoTest, MatrixRepresentationAndMajorRoundTrip) {
  std::mt19937 rng(72);
  for (int trial = 0; trial < 100; ++trial) {
    const FlagRepresentation rep = oracle::random_representation(rng, trial % 2 == 0 ? 2 : 3, 5, 4);
    EXPECT_EQ(matrix_from_json(reparse(to_json(rep.matrix))), rep.matrix);
    EXPECT_EQ(representation_from_json(reparse(to_json(rep))), rep);
    if (rep.levels.size() < 2) continue;
    const MajorStructure m = major_from_representation(rep).major;
    const MajorStructure back = major_from_json(reparse(to_json(m)));
    EXPECT_EQ(back.q, m.q);
    EXPECT_EQ(back.blocks, m.blocks);
  }
}

TEST(IoTest, GraphAndChainRoundTrip) {
  const MultiGraph g = graph_from_json(load("k4_graph.json"));
  EXPECT_EQ(g.vertices, 4);
  EXPECT_EQ(g.edge_count(), 6);
  EXPECT_EQ(graph_from_json(reparse(to_json(g))), g);
  const PartitionChain c = chain_from_json(load("k4_chain.json"), 4);
  EXPECT_EQ(c.partitions.size(), 4u);
  EXPECT_EQ(chain_from_json(reparse(to_json(c)), 4), c);
  const ColoredGraph cg{g, {0, 1}, {2}};
  const ColoredGraph back = colored_graph_from_json(reparse(to_json(cg)));
  EXPECT_EQ(back.graph, g);
  EXPECT_EQ(back.red, cg.red);
  EXPECT_EQ(back.yellow, cg.yellow);
}

TEST(IoTest, FixturesLoad) {
  EXPECT_EQ(flag_from_json(load("fano_flag.json")), basis_flag(fixtures::fano()));
  EXPECT_EQ(matroid_from_json(load("fano_matroid.json")), fixtures::fano());
  EXPECT_EQ(linear_matroid(matrix_from_json(load("fano_matrix.json"))), fixtures::fano());
  EXPECT_EQ(matroid_from_json(load("u35_matroid.json")), uniform(3, 5));
  EXPECT_EQ(flag_from_json(load("u13_u33_flag.json")), from_sequence({uniform(1, 3), uniform(3, 3)}));
  EXPECT_EQ(representation_from_json(load("u13_u23_u33_rep_gf3.json")).flag(),
            from_sequence({uniform(1, 3), uniform(2, 3), uniform(3, 3)}));
  EXPECT_EQ(matrix_from_json(load("major_f2_matrix.json")).p(), 2);
  EXPECT_EQ(matrix_from_json(load("major_f3_matrix.json")).p(), 3);
  const auto [n, family] = family_from_json(load("axiom2_failure.json"));
  EXPECT_FALSE(check_flag_axioms(n, family).ok);
  EXPECT_THROW(flag_from_json(load("axiom2_failure.json")), Error);
  const HarnessConfig cfg = harness_config_from_json(load("counterexample.json"));
  EXPECT_EQ(cfg.g3.graph.edge_count(), 9);
}

TEST(IoTest, MalformedDocumentsAreRejected) {
  EXPECT_EQ(code_of([] { matroid_from_json(Json::parse(R"({"bases": [[0]]})")); }), Errc::kBadArgument);
  EXPECT_EQ(code_of([] { matroid_from_json(Json::parse(R"({"n": 2, "bases": [[2]]})")); }), Errc::kIndexOutOfRange);
  EXPECT_EQ(code_of([] { matroid_from_json(Json::parse(R"({"n": 2, "bases": [[0, 0]]})")); }), Errc::kBadArgument);
  EXPECT_EQ(code_of([] { matroid_from_json(Json::parse(R"({"n": 21, "bases": [[]]})")); }), Errc::kGroundTooLarge);
  EXPECT_EQ(code_of([] { matroid_from_json(Json::parse(R"({"n": "3", "bases": [[]]})")); }), Errc::kBadArgument);
  EXPECT_EQ(code_of([] { matroid_from_json(Json::parse(R"({"n": 3, "bases": [[0], [1, 2]]})")); }),
            Errc::kAxiomViolation);
  EXPECT_EQ(code_of([] { matrix_from_json(Json::parse(R"({"p": 2, "rows": 1, "cols": 2, "entries": [[1, 2]]})")); }),
            Errc::kBadArgument);
  EXPECT_EQ(code_of([] { matrix_from_json(Json::parse(R"({"p": 2, "rows": 1, "cols": 3, "entries": [[1, 0]]})")); }),
            Errc::kShapeMismatch);
  EXPECT_EQ(code_of([] { matrix_from_json(Json::parse(R"({"p": 4, "rows": 1, "cols": 1, "entries": [[1]]})")); }),
            Errc::kBadField);
  EXPECT_EQ(code_of([] { chain_from_json(Json::parse(R"({"partitions": [[[0, 1]], [[0], [0]]]})"), 2); }),
            Errc::kBadPartition);
  EXPECT_EQ(code_of([] { graph_from_json(Json::parse(R"({"vertices": 2, "edges": [[0, 2]]})")); }),
            Errc::kIndexOutOfRange);
  EXPECT_EQ(code_of([] { graph_from_json(Json::parse(R"({"vertices": 2, "edges": [[0]]})")); }),
            Errc::kBadArgument);
  EXPECT_EQ(code_of([] { field(Json::array(), "x"); }), Errc::kBadArgument);
}

TEST(IoTest, ErrorsSerializeWithWitness) {
  try {
    from_feasible_sets(3, {0b001, 0b010, 0b011, 0b110});
    FAIL();
  } catch (const Error& e) {
    const Json j = to_json(e);
    EXPECT_EQ(j["schema"], "1");
    EXPECT_TRUE(j.contains("error"));
    EXPECT_TRUE(j.contains("detail"));
  }
}

TEST(CertificateTest, RoundTripsValidate) {
  const FlagMatroid fano = basis_flag(fixtures::fano());
  const RepresentabilityVerdict yes = is_binary_full(fano);
  ASSERT_TRUE(yes.certificate);
  const Json rep_cert = reparse(representation_certificate(fano, *yes.certificate));
  EXPECT_TRUE(is_certificate(rep_cert));
  EXPECT_TRUE(check_certificate(rep_cert).ok);

  const RepresentabilityVerdict no = is_ternary_full(fano);
  ASSERT_TRUE(no.excluded);
  const Json minor_cert = reparse(excluded_minor_certificate(3, fano, *no.excluded));
  EXPECT_TRUE(check_certificate(minor_cert).ok);

  const FlagMatroid chain = from_sequence({uniform(1, 3), uniform(2, 3), uniform(3, 3)});
  const Json witness_cert = reparse(lift_witness_certificate(chain, lift_witness_sequence(chain)));
  EXPECT_TRUE(check_certificate(witness_cert).ok);

  const Json major_cert = reparse(major_certificate(chain, MajorStructure{uniform(3, 5), {bit(3), bit(4)}}));
  EXPECT_TRUE(check_certificate(major_cert).ok);

  const Json iso = reparse(isomorphism_certificate(to_json(uniform(1, 2)), to_json(uniform(1, 2)), {1, 0}));
  EXPECT_TRUE(check_certificate(iso).ok);
  EXPECT_FALSE(is_certificate(to_json(fixtures::fano())));
}

TEST(CertificateTest, TamperedCertificatesFail) {
  const FlagMatroid chain = from_sequence({uniform(1, 3), uniform(2, 3), uniform(3, 3)});
  Json major_cert = major_certificate(chain, MajorStructure{uniform(3, 5), {bit(3), bit(4)}});
  major_cert["major"]["blocks"] = Json::parse("[[3, 4]]");
  EXPECT_FALSE(check_certificate(major_cert).ok);

  const FlagMatroid fano = basis_flag(fixtures::fano());
  Json rep_cert = representation_certificate(fano, *is_binary_full(fano).certificate);
  rep_cert["representation"]["matrix"]["entries"][0][0] = 1 - rep_cert["representation"]["matrix"]["entries"][0][0].get<int>();
  EXPECT_FALSE(check_certificate(rep_cert).ok);

  Json minor_cert = excluded_minor_certificate(3, fano, *is_ternary_full(fano).excluded);
  minor_cert["target_name"] = "(U25)";
  EXPECT_FALSE(check_certificate(minor_cert).ok);

  Json witness_cert = lift_witness_certificate(chain, lift_witness_sequence(chain));
  witness_cert["witnesses"].erase(1);
  EXPECT_FALSE(check_certificate(witness_cert).ok);

  const Json bad_iso = isomorphism_certificate(to_json(Matroid(2, {bit(0)})), to_json(Matroid(2, {bit(0)})), {1, 0});
  EXPECT_FALSE(check_certificate(bad_iso).ok);

  Json unknown = object("mystery_certificate");
  EXPECT_THROW(check_certificate(unknown), Error);
}

}  // namespace
}  // namespace flagmat::io
