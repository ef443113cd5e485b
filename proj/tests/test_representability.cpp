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

#include <random>
#include <vector>

#include "flagmat/classify.hpp"
#include "flagmat/representability.hpp"
#include "support/oracles.hpp"

namespace flagmat {
namespace {

GFMatrix rows_over(int p, const std::vector<std::vector<int>>& rows) { return GFMatrix(FieldPrime(p), rows); }

FlagMatroid u13_u23() { return from_sequence({uniform(1, 3), uniform(2, 3)}); }

TEST(FlagFromMatrixTest, Examples) {
  const FlagRepresentation i23(rows_over(3, {{1, 1, 1}, {0, 1, 2}}), {1, 2});
  EXPECT_EQ(i23.flag(), u13_u23());
  EXPECT_EQ(flag_from_matrix(fano_matrix(), {3}), basis_flag(fixtures::fano()));
  const FlagMatroid chain = flag_from_matrix(GFMatrix::identity(FieldPrime(2), 3), {1, 2, 3});
  EXPECT_EQ(chain.feasible(), (std::vector<Subset>{0b001, 0b011, 0b111}));
  try {
    flag_from_matrix(rows_over(2, {{0, 0, 0}, {1, 1, 0}}), {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kRankDeficient);
  }
}

TEST(FlagFromMatrixTest, FeasibleSetsAreNonsingularPrefixMinors) {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = trial % 2 == 0 ? 2 : 3;
    const FlagRepresentation rep = oracle::random_representation(rng, p, 1 + static_cast<int>(rng() % 6), 4);
    const FlagMatroid f = rep.flag();
    std::vector<Subset> expected;
    for (Subset s = 0; s <= full_set(rep.matrix.cols()); ++s) {
      const int c = card(s);
      if (std::find(rep.levels.begin(), rep.levels.end(), c) == rep.levels.end()) continue;
      std::vector<std::vector<int>> minor_rows;
      for (int r = 0; r < c; ++r) {
        std::vector<int> row;
        for (int e : elements(s)) row.push_back(rep.matrix.at(r, e));
        minor_rows.push_back(row);
      }
      if (oracle::rank_mod(minor_rows, p) == c) expected.push_back(s);
    }
    canonicalize(expected);
    EXPECT_EQ(f.feasible(), expected);
  }
}

TEST(UniformRepresentationTest, Examples) {
  const FlagRepresentation a = uniform_flag_representation(2, 4, FieldPrime(5));
  EXPECT_EQ(a.matrix, rows_over(5, {{1, 1, 1, 1}, {0, 1, 2, 3}}));
  EXPECT_EQ(a.levels, (std::vector<int>{1, 2}));
  EXPECT_EQ(a.flag(), flag_interval(uniform(2, 4), 1, 2));
  const FlagRepresentation ones = uniform_flag_representation(1, 6, FieldPrime(2));
  EXPECT_EQ(ones.matrix, rows_over(2, {{1, 1, 1, 1, 1, 1}}));
  try {
    uniform_flag_representation(2, 4, FieldPrime(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kFieldTooSmall);
  }
}

TEST(UniformRepresentationTest, EverySmallSetIsFeasible) {
  for (int p : {2, 3, 5, 7}) {
    for (int n = 1; n <= 7; ++n) {
      for (int r = 0; r <= n; ++r) {
        if (r >= 2 && p < n) {
          EXPECT_THROW(uniform_flag_representation(r, n, FieldPrime(p)), Error);
          continue;
        }
        const FlagMatroid f = uniform_flag_representation(r, n, FieldPrime(p)).flag();
        EXPECT_EQ(f, flag_interval(uniform(r, n), r == 0 ? 0 : 1, r)) << "p=" << p << " r=" << r << " n=" << n;
      }
    }
  }
}

TEST(UniformRepresentationTest, SmallFieldsAdmitNoRepresentation) {
  // Rank two with more nodes than field elements: exhaustive search agrees.
  EXPECT_FALSE(search_representation(flag_interval(uniform(2, 3), 1, 2), FieldPrime(2)));
  EXPECT_FALSE(search_representation(flag_interval(uniform(2, 4), 1, 2), FieldPrime(3)));
  EXPECT_TRUE(search_representation(flag_interval(uniform(2, 3), 1, 2), FieldPrime(3)));
  EXPECT_TRUE(search_representation(flag_interval(uniform(2, 4), 1, 2), FieldPrime(5)));
}

TEST(DualRepresentationTest, Examples) {
  const FlagRepresentation u24(rows_over(3, {{1, 1, 1, 0}, {0, 1, 2, 1}}), {2});
  ASSERT_EQ(u24.flag(), basis_flag(uniform(2, 4)));
  const FlagRepresentation d = dual_representation(u24);
  EXPECT_EQ(d.matrix.rows(), 2);
  EXPECT_EQ(linear_matroid(d.matrix), uniform(2, 4));
  const FlagRepresentation i23(rows_over(3, {{1, 1, 1}, {0, 1, 2}}), {1, 2});
  const FlagRepresentation di = dual_representation(i23);
  EXPECT_EQ(di.levels, (std::vector<int>{1, 2}));
  EXPECT_EQ(di.flag(), flag_dual(i23.flag()));
  const FlagRepresentation df = dual_representation(FlagRepresentation(fano_matrix(), {3}));
  EXPECT_EQ(df.matrix.rows(), 4);
  EXPECT_TRUE(is_isomorphic(linear_matroid(df.matrix), fixtures::fano_dual()));
}

TEST(DualRepresentationTest, DoubleDualKeepsEveryPrefixRowSpace) {
  std::mt19937 rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = trial % 2 == 0 ? 2 : 3;
    const FlagRepresentation rep = oracle::random_representation(rng, p, 1 + static_cast<int>(rng() % 6), 4);
    const FlagRepresentation d = dual_representation(rep);
    EXPECT_EQ(d.flag(), flag_dual(rep.flag()));
    const FlagRepresentation dd = dual_representation(d);
    ASSERT_EQ(dd.levels, rep.levels);
    for (int lv : rep.levels) {
      EXPECT_TRUE(projectively_equivalent(prefix_rows(dd.matrix, lv), prefix_rows(rep.matrix, lv)));
    }
  }
}

TEST(MinorRepresentationTest, Examples) {
  const FlagRepresentation v = uniform_flag_representation(2, 4, FieldPrime(5));
  const FlagRepresentation del = delete_representation(v, 1);
  EXPECT_EQ(del.matrix.cols(), 3);
  EXPECT_EQ(del.flag(), flag_delete(v.flag(), 1));
  const FlagRepresentation chain(GFMatrix::identity(FieldPrime(2), 3), {1, 2, 3});
  const FlagRepresentation chopped = chop_representation(chain, 2);
  EXPECT_EQ(chopped.levels, (std::vector<int>{1, 3}));
  EXPECT_EQ(chopped.matrix, chain.matrix);
  const FlagRepresentation fano(fano_matrix(), {3});
  EXPECT_EQ(contract_representation(fano, 0).flag(), flag_contract(fano.flag(), 0));
  EXPECT_THROW(chop_representation(fano, 3), Error);
  EXPECT_THROW(chop_representation(chain, 0), Error);
  try {
    delete_representation(FlagRepresentation(GFMatrix::identity(FieldPrime(2), 2), {2}), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kLevelCollapse);
  }
}

TEST(MinorRepresentationTest, MatchSetSystemMinors) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const int p = trial % 2 == 0 ? 2 : 3;
    const FlagRepresentation rep = oracle::random_representation(rng, p, 1 + static_cast<int>(rng() % 6), 4);
    const FlagMatroid f = rep.flag();
    const int e = static_cast<int>(rng() % rep.matrix.cols());
    auto check = [&](auto&& rep_op, auto&& flag_op) {
      std::optional<FlagMatroid> expected;
      try {
        expected = flag_op();
      } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::kEmptyResult);
      }
      if (expected) {
        EXPECT_EQ(rep_op().flag(), *expected);
      } else {
        EXPECT_THROW(rep_op(), Error);
      }
    };
    check([&] { return delete_representation(rep, e); }, [&] { return flag_delete(f, e); });
    check([&] { return contract_representation(rep, e); }, [&] { return flag_contract(f, e); });
    if (rep.levels.size() > 1) {
      const int c = rep.levels[rng() % rep.levels.size()];
      EXPECT_EQ(chop_representation(rep, c).flag(), chop(f, c));
    }
  }
}

TEST(MajorRepresentationTest, Examples) {
  const FlagRepresentation gap(rows_over(2, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}), {1, 3});
  ASSERT_EQ(gap.flag(), from_sequence({uniform(1, 3), uniform(3, 3)}));
  const MajorRepresentation m = major_from_representation(gap);
  EXPECT_EQ(m.major.q.n(), 5);
  EXPECT_TRUE(verify_major(m.major, gap.flag()));
  const FlagRepresentation v = uniform_flag_representation(3, 3, FieldPrime(5));
  const MajorRepresentation mv = major_from_representation(v);
  EXPECT_EQ(mv.matrix.cols(), 5);
  EXPECT_EQ(mv.major.blocks, (std::vector<Subset>{bit(3), bit(4)}));
  const FlagRepresentation pair(rows_over(3, {{1, 1, 1}, {0, 1, 2}}), {1, 2});
  const MajorRepresentation mp = major_from_representation(pair);
  EXPECT_EQ(mp.matrix.cols(), 4);
  EXPECT_EQ(mp.matrix.column(3), (GFVector{0, 1}));
  EXPECT_THROW(major_from_representation(FlagRepresentation(fano_matrix(), {3})), Error);
}

TEST(ProjectiveEquivalenceTest, Examples) {
  std::mt19937 rng(54);
  const GFMatrix a = rows_over(3, {{1, 0, 1, 2}, {0, 1, 1, 1}});
  const GFMatrix p = rows_over(3, {{2, 1}, {1, 1}});
  EXPECT_TRUE(projectively_equivalent(a, multiply(p, a)));
  const GFMatrix f1 = fano_matrix();
  // Another GF(2) representation of the Fano plane: a row-reduced copy.
  EXPECT_TRUE(projectively_equivalent(f1, rref(f1).reduced));
  EXPECT_FALSE(projectively_equivalent(rows_over(2, {{1, 1, 0}}), rows_over(2, {{1, 1, 0}, {0, 1, 1}})));
  EXPECT_THROW(projectively_equivalent(rows_over(2, {{1}}), rows_over(3, {{1}})), Error);
}

TEST(ProjectiveEquivalenceTest, BinaryRepresentationsAreUnique) {
  // All GF(2) representations of a binary matroid share a row space once
  // they are brought to the same standard form; here every representation
  // found by search is compared against the first.
  for (const Matroid& m : oracle::all_matroids(4)) {
    const auto a = represent_matroid(m, FieldPrime(2));
    if (!a) continue;
    const auto b = search_representation(basis_flag(m), FieldPrime(2));
    ASSERT_TRUE(b);
    EXPECT_TRUE(projectively_equivalent(prefix_rows(*a, m.rank()), b->matrix));
  }
}

TEST(StitchTest, Examples) {
  const FlagRepresentation low(rows_over(3, {{1, 1, 1}, {0, 1, 2}}), {1, 2});
  const FlagRepresentation high(rows_over(3, {{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}), {2, 3});
  ASSERT_EQ(high.flag(), from_sequence({uniform(2, 3), uniform(3, 3)}));
  const FlagRepresentation s = stitch_representations(low, high);
  EXPECT_EQ(s.levels, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(s.flag(), from_sequence({uniform(1, 3), uniform(2, 3), uniform(3, 3)}));
  const FlagRepresentation self = stitch_representations(low, FlagRepresentation(low.matrix, {2}));
  EXPECT_EQ(self.flag(), low.flag());
  try {
    stitch_representations(low, FlagRepresentation(rows_over(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), {2, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNoTransform);
  }
}

TEST(StitchTest, IndependentBinaryPieces) {
  const auto a = search_representation(u13_u23(), FieldPrime(3));
  const auto b = search_representation(from_sequence({uniform(2, 3), uniform(3, 3)}), FieldPrime(3));
  ASSERT_TRUE(a && b);
  EXPECT_EQ(stitch_representations(*a, *b).flag(), from_sequence({uniform(1, 3), uniform(2, 3), uniform(3, 3)}));
  const FlagMatroid lo = from_sequence({Matroid(3, {bit(0), bit(1)}), Matroid(3, {0b011, 0b101, 0b110})});
  const FlagMatroid hi = from_sequence({lo.layers()[1], uniform(3, 3)});
  const auto c = search_representation(lo, FieldPrime(2));
  const auto d = search_representation(hi, FieldPrime(2));
  ASSERT_TRUE(c && d);
  EXPECT_EQ(stitch_representations(*c, *d).flag(), from_sequence({lo.layers()[0], lo.layers()[1], uniform(3, 3)}));
}

TEST(SearchRepresentationTest, Examples) {
  EXPECT_FALSE(search_representation(u13_u23(), FieldPrime(2)));
  const auto u24 = search_representation(basis_flag(uniform(2, 4)), FieldPrime(3));
  ASSERT_TRUE(u24);
  EXPECT_EQ(linear_matroid(u24->matrix), uniform(2, 4));
  EXPECT_FALSE(search_representation(basis_flag(fixtures::fano()), FieldPrime(3)));
  const auto fano2 = search_representation(basis_flag(fixtures::fano()), FieldPrime(2));
  ASSERT_TRUE(fano2);
  EXPECT_EQ(fano2->flag(), basis_flag(fixtures::fano()));
}

TEST(DecideFullTest, Examples) {
  const RepresentabilityVerdict a = is_binary_full(u13_u23());
  EXPECT_FALSE(a.representable);
  ASSERT_TRUE(a.excluded);
  EXPECT_EQ(a.excluded->target, u13_u23());
  const RepresentabilityVerdict fb = is_binary_full(basis_flag(fixtures::fano()));
  EXPECT_TRUE(fb.representable);
  ASSERT_TRUE(fb.certificate);
  EXPECT_EQ(fb.certificate->flag(), basis_flag(fixtures::fano()));
  const RepresentabilityVerdict ft = is_ternary_full(basis_flag(fixtures::fano()));
  EXPECT_FALSE(ft.representable);
  ASSERT_TRUE(ft.excluded);
  EXPECT_EQ(ft.excluded->target, basis_flag(fixtures::fano()));
  const RepresentabilityVerdict small = is_binary_full(from_sequence({uniform(1, 2), uniform(2, 2)}));
  EXPECT_TRUE(small.representable);
  EXPECT_TRUE(search_representation(from_sequence({uniform(1, 2), uniform(2, 2)}), FieldPrime(2)));
  EXPECT_THROW(is_binary_full(from_sequence({uniform(1, 3), uniform(3, 3)})), Error);
}

TEST(DecideFullTest, ExcludedListsHaveTheExpectedShape) {
  EXPECT_EQ(fixtures::binary_excluded_flags().size(), 2u);
  for (const NamedFlag& nf : fixtures::ternary_excluded_flags()) {
    EXPECT_LE(nf.flag.layer_count(), 2);
    EXPECT_TRUE(is_full(nf.flag));
    EXPECT_FALSE(search_representation(nf.flag, FieldPrime(3))) << nf.name;
  }
  for (const NamedFlag& nf : fixtures::binary_excluded_flags()) {
    EXPECT_FALSE(search_representation(nf.flag, FieldPrime(2))) << nf.name;
  }
}

TEST(DecideFullTest, OracleTriangleOnRandomFullFlags) {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 150; ++trial) {
    const FlagMatroid f = oracle::random_full_flag(rng, 1 + static_cast<int>(rng() % 5), 2);
    for (int p : {2, 3}) {
      const RepresentabilityVerdict v = decide_full(f, p);
      const bool brute = oracle::representable_brute(f, p);
      EXPECT_EQ(v.representable, brute);
      EXPECT_EQ(search_representation(f, FieldPrime(p)).has_value(), brute);
      EXPECT_EQ(witness_route_representation(f, FieldPrime(p)).has_value(), brute);
      if (v.certificate) {
        EXPECT_EQ(v.certificate->flag(), f);
      }
    }
  }
}

TEST(DecideFullTest, LinearChainsAreRepresentable) {
  std::mt19937 rng(56);
  for (int trial = 0; trial < 100; ++trial) {
    const int p = trial % 2 == 0 ? 2 : 3;
    const FlagRepresentation rep = oracle::random_representation(rng, p, 1 + static_cast<int>(rng() % 5), 4);
    const FlagMatroid f = fill_from_representation(rep.matrix, rep.levels);
    const RepresentabilityVerdict v = decide_full(f, p);
    EXPECT_TRUE(v.representable);
    ASSERT_TRUE(v.certificate);
    EXPECT_EQ(v.certificate->flag(), f);
  }
}

TEST(FillingVerdictTest, Examples) {
  const FillingVerdict a = is_representable_via_fillings(from_sequence({uniform(1, 3), uniform(3, 3)}), 2, 1000);
  EXPECT_EQ(a.answer, Tristate::kYes);
  ASSERT_TRUE(a.certificate);
  EXPECT_EQ(a.certificate->flag(), from_sequence({uniform(1, 3), uniform(3, 3)}));
  const FlagMatroid i24 = flag_interval(uniform(2, 4), 1, 2);
  EXPECT_EQ(is_representable_via_fillings(i24, 2, 1000).answer, Tristate::kNo);
  EXPECT_FALSE(search_representation(i24, FieldPrime(2)));
  const FlagMatroid full = from_sequence({uniform(1, 3), uniform(2, 3)});
  EXPECT_EQ(is_representable_via_fillings(full, 2, 1000).answer, Tristate::kNo);
  EXPECT_EQ(is_representable_via_fillings(full, 3, 1000).answer, Tristate::kYes);
  EXPECT_EQ(is_representable_via_fillings(from_sequence({uniform(1, 4), uniform(4, 4)}), 2, 1).answer,
            Tristate::kUnknown);
}

TEST(FillingVerdictTest, AgreesWithSearchOnRandomFlags) {
  std::mt19937 rng(57);
  for (int trial = 0; trial < 150; ++trial) {
    const FlagMatroid f = oracle::random_flag(rng, 1 + static_cast<int>(rng() % 5));
    for (int p : {2, 3}) {
      const FillingVerdict v = is_representable_via_fillings(f, p, 1u << 20);
      ASSERT_NE(v.answer, Tristate::kUnknown);
      const bool brute = oracle::representable_brute(f, p);
      EXPECT_EQ(v.answer == Tristate::kYes, brute);
      EXPECT_EQ(search_representation(f, FieldPrime(p)).has_value(), brute);
      if (v.certificate) {
        EXPECT_EQ(v.certificate->flag(), f);
      }
    }
  }
}

}  // namespace
}  // namespace flagmat
