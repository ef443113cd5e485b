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

#include <algorithm>
#include <random>
#include <vector>

#include "flagmat/classify.hpp"
#include "flagmat/flag.hpp"
#include "support/oracles.hpp"

namespace flagmat {
namespace {

std::vector<Subset> sizes_between(int n, int lo, int hi) {
  std::vector<Subset> out;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    if (card(s) >= lo && card(s) <= hi) out.push_back(s);
  }
  canonicalize(out);
  return out;
}

bool layered_ok(int n, const std::vector<Subset>& family) {
  try {
    from_feasible_sets(n, family);
    return true;
  } catch (const Error&) {
    return false;
  }
}

FlagMatroid u13_u23_u33() { return from_sequence({uniform(1, 3), uniform(2, 3), uniform(3, 3)}); }

TEST(FlagAxiomsTest, Examples) {
  EXPECT_TRUE(check_flag_axioms(3, sizes_between(3, 0, 2)).ok);
  EXPECT_TRUE(check_flag_axioms(2, {0b01, 0b11}).ok);
  const auto v = check_flag_axioms(3, {0b001, 0b010, 0b011, 0b110});
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.axiom, 2);
  EXPECT_FALSE(layered_ok(3, {0b001, 0b010, 0b011, 0b110}));
}

TEST(FlagAxiomsTest, ExhaustiveAgreementOnThreeElements) {
  for (std::uint32_t mask = 1; mask < (1u << 8); ++mask) {
    std::vector<Subset> family;
    for (Subset s = 0; s < 8; ++s) {
      if (mask >> s & 1) family.push_back(s);
    }
    EXPECT_EQ(check_flag_axioms(3, family).ok, layered_ok(3, family)) << "mask " << mask;
  }
}

TEST(FlagMatroidTest, FromFeasibleSetsExamples) {
  const FlagMatroid f = from_feasible_sets(3, sizes_between(3, 1, 3));
  ASSERT_EQ(f.layer_count(), 3);
  EXPECT_EQ(f.layers()[0], uniform(1, 3));
  EXPECT_EQ(f.layers()[1], uniform(2, 3));
  EXPECT_EQ(f.layers()[2], uniform(3, 3));
  EXPECT_EQ(from_feasible_sets(7, fixtures::fano().bases()).layers(), std::vector<Matroid>{fixtures::fano()});
  const FlagMatroid g = from_feasible_sets(2, {0b01, 0b10, 0b11});
  EXPECT_EQ(g.layers(), (std::vector<Matroid>{uniform(1, 2), uniform(2, 2)}));
}

TEST(FlagMatroidTest, FromFeasibleSetsErrors) {
  try {
    from_feasible_sets(4, {0b0001, 0b0011, 0b1100});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kLayerNotMatroid);
    EXPECT_EQ(e.index(), 1);
  }
  try {
    from_feasible_sets(3, {0b001, 0b110});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotALift);
    EXPECT_EQ(e.index(), 1);
  }
  EXPECT_THROW(from_feasible_sets(3, {}), Error);
}

TEST(FlagMatroidTest, FromSequenceExamples) {
  EXPECT_EQ(from_sequence({uniform(1, 3), uniform(2, 3)}).feasible(), sizes_between(3, 1, 2));
  EXPECT_EQ(from_sequence({uniform(2, 4)}).feasible().size(), 6u);
  const FlagMatroid f = from_sequence({uniform(0, 3), uniform(2, 3)});
  EXPECT_EQ(f.feasible(), (std::vector<Subset>{0, 0b011, 0b101, 0b110}));
  try {
    from_sequence({uniform(2, 3), uniform(2, 3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kRankCollision);
  }
  try {
    from_sequence({Matroid(3, {0b001}), Matroid(3, {0b110})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotALift);
  }
  EXPECT_THROW(from_sequence({uniform(1, 3), uniform(2, 4)}), Error);
}

TEST(FlagMatroidTest, IntervalConstructions) {
  EXPECT_EQ(independent_flag(uniform(2, 4)).feasible().size(), 11u);
  EXPECT_EQ(basis_flag(fixtures::fano()).feasible().size(), 28u);
  EXPECT_EQ(spanning_flag(uniform(1, 2)).feasible(), (std::vector<Subset>{0b01, 0b10, 0b11}));
  // The independent sets of U_{1,3} with sizes 2..3 are empty, spanning ones are not.
  EXPECT_EQ(flag_interval(uniform(1, 3), 2, 3).feasible(), sizes_between(3, 2, 3));
  EXPECT_THROW(flag_interval(uniform(1, 3), 3, 2), Error);
}

TEST(FlagMatroidTest, IntervalsSatisfyTheAxioms) {
  for (int m = 0; m <= 4; ++m) {
    for (const Matroid& mat : oracle::all_matroids(m)) {
      for (int s = 0; s <= m; ++s) {
        for (int r = s; r <= m; ++r) {
          const FlagMatroid f = flag_interval(mat, s, r);
          EXPECT_TRUE(check_flag_axioms(m, f.feasible()).ok);
        }
      }
    }
  }
}

TEST(FlagMatroidTest, DualDeleteContractChopExamples) {
  const FlagMatroid d = flag_dual(independent_flag(uniform(2, 3)));
  EXPECT_EQ(d.feasible(), sizes_between(3, 1, 3));
  EXPECT_EQ(d, u13_u23_u33());
  EXPECT_EQ(chop(u13_u23_u33(), 2).layers(), (std::vector<Matroid>{uniform(1, 3), uniform(3, 3)}));
  EXPECT_EQ(flag_delete(basis_flag(uniform(2, 3)), 0).feasible(), std::vector<Subset>{0b11});
  const FlagMatroid c = flag_contract(from_sequence({uniform(1, 3), uniform(2, 3)}), 0);
  EXPECT_EQ(c.layers(), (std::vector<Matroid>{uniform(0, 2), uniform(1, 2)}));
  const FlagMatroid f = u13_u23_u33();
  EXPECT_EQ(flag_minor(f, 0, 0, {}), f);
}

TEST(FlagMatroidTest, MinorErrors) {
  // Element 0 is a coloop of the only layer: deleting it empties the family.
  const FlagMatroid coloop = basis_flag(Matroid(2, {0b01}));
  try {
    flag_delete(coloop, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kEmptyResult);
  }
  try {
    chop(basis_flag(uniform(2, 3)), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kLastLayer);
  }
  EXPECT_THROW(chop(u13_u23_u33(), 0), Error);
  EXPECT_THROW(flag_minor(u13_u23_u33(), 0b1, 0b1), Error);
}

TEST(FlagMatroidTest, ColoopLayerDiscrepancy) {
  // M1 has bases {{0}}, M2 = U_{2,2}: set-system deletion of 0 empties the family
  // even though matroid deletion would keep ranks 0 and 1.
  const FlagMatroid f = from_sequence({Matroid(2, {0b01}), uniform(2, 2)});
  EXPECT_THROW(flag_delete(f, 0), Error);
  EXPECT_EQ(delete_element(f.layers()[0], 0).rank(), 0);
  EXPECT_EQ(delete_element(f.layers()[1], 0).rank(), 1);
}

TEST(FlagMatroidTest, FlagRank) {
  const FlagMatroid i24 = independent_flag(uniform(2, 4));
  EXPECT_EQ(flag_rank(i24, 0b0001), 1);
  EXPECT_EQ(flag_rank(i24, 0b1111), 2);
  EXPECT_FALSE(flag_rank(basis_flag(uniform(2, 3)), 0b001).has_value());
}

TEST(FlagMatroidTest, IsomorphismExamples) {
  const FlagMatroid i23 = independent_flag(uniform(2, 3));
  const FlagMatroid cycled = flag_permute(i23, {1, 2, 0});
  const auto found = flag_isomorphic(i23, cycled);
  ASSERT_TRUE(found);
  EXPECT_EQ(flag_permute(i23, *found), cycled);
  // The family is symmetric, so the least bijection is the identity.
  EXPECT_EQ(*found, (std::vector<int>{0, 1, 2}));
  EXPECT_FALSE(flag_isomorphic(i23, u13_u23_u33()));
}

TEST(FlagMatroidTest, MinorSearchExamples) {
  const auto w = flag_has_minor(independent_flag(uniform(2, 4)), from_sequence({uniform(1, 3), uniform(2, 3)}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->contract, Subset{0});
  EXPECT_EQ(card(w->del), 1);
  EXPECT_EQ(w->chops, std::vector<int>{0});
  EXPECT_FALSE(flag_has_minor(basis_flag(fixtures::fano()), basis_flag(uniform(2, 4))));
}

// Properties on random flag matroids.

Subset relabel_after(Subset s, Subset removed) { return compress(s, removed); }

TEST(FlagProperty, DualityInvolutionAndLayerReversal) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const FlagMatroid f = oracle::random_flag(rng, 1 + static_cast<int>(rng() % 5));
    const FlagMatroid d = flag_dual(f);
    EXPECT_EQ(flag_dual(d), f);
    ASSERT_EQ(d.layer_count(), f.layer_count());
    for (int i = 0; i < f.layer_count(); ++i) {
      EXPECT_EQ(d.layers()[i], dual(f.layers()[f.layer_count() - 1 - i]));
    }
  }
}

TEST(FlagProperty, MinorsCommute) {
  std::mt19937 rng(32);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const FlagMatroid f = oracle::random_flag(rng, n);
    const Subset x = static_cast<Subset>(rng()) & full_set(n);
    const Subset y = static_cast<Subset>(rng()) & full_set(n) & ~x;
    auto attempt = [&](auto&& fn) {
      try {
        fn();
      } catch (const Error& e) {
        if (e.code() != Errc::kEmptyResult) throw;
      }
    };
    attempt([&] {
      const FlagMatroid a = flag_minor(flag_minor(f, 0, x), 0, relabel_after(y, x));
      EXPECT_EQ(a, flag_minor(f, 0, x | y));
      ++checked;
    });
    attempt([&] {
      const FlagMatroid a = flag_minor(flag_minor(f, x, 0), relabel_after(y, x), 0);
      EXPECT_EQ(a, flag_minor(f, x | y, 0));
    });
    attempt([&] {
      const FlagMatroid a = flag_minor(flag_minor(f, 0, x), relabel_after(y, x), 0);
      const FlagMatroid b = flag_minor(flag_minor(f, y, 0), 0, relabel_after(x, y));
      EXPECT_EQ(a, b);
      EXPECT_EQ(a, flag_minor(f, y, x));
    });
  }
  EXPECT_GT(checked, 300);
}

TEST(FlagProperty, DeletionMatchesLayerwiseDeletionAwayFromColoops) {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const FlagMatroid f = oracle::random_flag(rng, n);
    const int e = static_cast<int>(rng() % n);
    bool coloop = false, loop = false;
    for (const Matroid& m : f.layers()) {
      coloop = coloop || m.is_coloop(e);
      loop = loop || m.is_loop(e);
    }
    std::vector<Matroid> deleted, contracted;
    for (const Matroid& m : f.layers()) {
      deleted.push_back(delete_element(m, e));
      contracted.push_back(contract_element(m, e));
    }
    if (!coloop) {
      EXPECT_EQ(flag_delete(f, e), from_sequence(deleted));
    }
    if (!loop) {
      EXPECT_EQ(flag_contract(f, e), from_sequence(contracted));
    }
  }
}

TEST(FlagProperty, IsomorphismIsLexLeast) {
  std::mt19937 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const FlagMatroid f = oracle::random_flag(rng, 4);
    std::vector<int> perm = {0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    const FlagMatroid g = flag_permute(f, perm);
    const auto found = flag_isomorphic(f, g);
    ASSERT_TRUE(found);
    std::vector<int> least = {0, 1, 2, 3};
    while (flag_permute(f, least) != g) std::next_permutation(least.begin(), least.end());
    EXPECT_EQ(*found, least);
  }
}

TEST(FlagProperty, MinorSearchWitnessesReproduceTheTarget) {
  std::mt19937 rng(35);
  for (int trial = 0; trial < 150; ++trial) {
    const FlagMatroid f = oracle::random_flag(rng, 5);
    // Build a target as a random minor, then search for it.
    const Subset c = static_cast<Subset>(rng()) & 0b11;
    const Subset d = static_cast<Subset>(rng()) & 0b1100 & ~c;
    FlagMatroid target = f;
    try {
      target = flag_minor(f, c, d);
    } catch (const Error&) {
      continue;
    }
    const auto w = flag_has_minor(f, target);
    ASSERT_TRUE(w);
    EXPECT_EQ(flag_permute(flag_minor(f, w->contract, w->del, w->chops), w->bijection), target);
  }
}

}  // namespace
}  // namespace flagmat
