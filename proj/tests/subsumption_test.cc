// Copyright 2026 The Mutspace Authors
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

#include "mutspace/subsumption.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "generators.h"
#include "mutspace/errors.h"
#include "mutspace/lattice.h"
#include "mutspace/worked_examples.h"

namespace mutspace {
namespace {

using testing::BruteSubsumes;
using testing::Ids;

const Differentiator kOutput(Differentiator::Policy::kOutput);

std::vector<std::string> Members(const Dmsg& dmsg, std::size_t c) {
  return dmsg.classes[c].members;
}

TEST(KillMatrix, FromSynthesizedBehavior) {
  const KillMatrix km = SubsumptionExampleKillMatrix();
  const BehaviorMatrix bm = SynthesizeBehaviorMatrix(km);
  const ProgramSpace space(bm.tests(), "po", kOutput, bm);
  EXPECT_TRUE(MakeKillMatrix(space, km.mutants()) == km);
  EXPECT_EQ(MakeKillMatrix(space, {}).mutant_count(), 0u);
  EXPECT_EQ(BitString(MakeKillMatrix(space, {"po"}).Column(0)), "000");
}

TEST(KillMatrix, OriginMustBeTheOriginal) {
  const KillMatrix km = SubsumptionExampleKillMatrix();
  const BehaviorMatrix bm = SynthesizeBehaviorMatrix(km);
  const ProgramSpace space(bm.tests(), "m1", kOutput, bm);
  EXPECT_THROW(MakeKillMatrix(space, {"m2"}), RoleError);
}

TEST(KillMatrix, Validation) {
  EXPECT_THROW(KillMatrix(TestVector({"t1"}), {"m", "m"}, {{1}, {0}}), ArgumentError);
  EXPECT_THROW(KillMatrix(TestVector({"t1"}), {"m"}, {{1, 0}}), ArgumentError);
  EXPECT_THROW(KillMatrix(TestVector({"t1"}), {"m"}, {{2}}), ArgumentError);
  EXPECT_THROW(SubsumptionExampleKillMatrix().MutantIndex("m9"), LookupError);
}

TEST(KillMatrixCsv, TableOneLayout) {
  const std::string csv = KillMatrixToCsv(SubsumptionExampleKillMatrix());
  EXPECT_EQ(csv, "test,m1,m2,m3,m4\nt1,1,0,1,1\nt2,0,1,0,1\nt3,0,1,1,1\n");
  EXPECT_TRUE(KillMatrixFromCsv(csv) == SubsumptionExampleKillMatrix());
  EXPECT_TRUE(KillMatrixFromCsv("test,m1\r\nt1,1\r\n") ==
              KillMatrix(TestVector({"t1"}), {"m1"}, {{1}}));
}

TEST(KillMatrixCsv, ErrorsCarryLineAndColumn) {
  auto path_of = [](const std::string& text) {
    try {
      KillMatrixFromCsv(text);
    } catch (const SchemaError& e) {
      return e.path();
    }
    return std::string("<no error>");
  };
  EXPECT_EQ(path_of("test,m1\nt1,2\n"), "/2/2");
  EXPECT_EQ(path_of("test,m1,m2\nt1,1\n"), "/2/3");
  EXPECT_EQ(path_of("mutant,m1\nt1,1\n"), "/1/1");
  EXPECT_EQ(path_of(""), "/1/1");
}

TEST(DynamicallySubsumes, TableOnePairs) {
  const KillMatrix km = SubsumptionExampleKillMatrix();
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& x : km.mutants()) {
    for (const auto& y : km.mutants()) {
      if (DynamicallySubsumes(km, x, y)) pairs.insert({x, y});
    }
  }
  const std::set<std::pair<std::string, std::string>> expected = {
      {"m1", "m3"}, {"m1", "m4"}, {"m2", "m4"}, {"m3", "m4"}};
  EXPECT_EQ(pairs, expected);
}

TEST(DynamicallySubsumes, LiveMutantSubsumesNothing) {
  const KillMatrix km(TestVector({"t1", "t2"}), {"live", "m"}, {{0, 0}, {1, 1}});
  EXPECT_FALSE(DynamicallySubsumes(km, "live", "m"));
  EXPECT_FALSE(DynamicallySubsumes(km, "m", "live"));
}

TEST(BuildDmsg, TableOne) {
  const Dmsg dmsg = BuildDmsg(SubsumptionExampleKillMatrix());
  ASSERT_EQ(dmsg.classes.size(), 4u);
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [from, to] : dmsg.edges) {
    edges.insert({Members(dmsg, from)[0], Members(dmsg, to)[0]});
  }
  const std::set<std::pair<std::string, std::string>> expected = {
      {"m1", "m3"}, {"m3", "m4"}, {"m2", "m4"}};
  EXPECT_EQ(edges, expected);
  EXPECT_EQ(dmsg.closure.size(), 4u);
  EXPECT_TRUE(dmsg.live.empty());
}

TEST(BuildDmsg, IdenticalColumnsCoalesce) {
  const KillMatrix km(TestVector({"t1", "t2"}), {"a", "b", "c", "z"},
                      {{1, 0}, {1, 0}, {1, 0}, {0, 0}});
  const Dmsg dmsg = BuildDmsg(km);
  ASSERT_EQ(dmsg.classes.size(), 1u);
  EXPECT_EQ(dmsg.classes[0].members, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(dmsg.edges.empty());
  EXPECT_EQ(dmsg.live, std::vector<std::string>{"z"});
  EXPECT_TRUE(DynamicallySubsumes(km, "a", "b"));
  EXPECT_TRUE(DynamicallySubsumes(km, "b", "a"));
}

TEST(BuildDmsg, ClosureMatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const KillMatrix km = testing::RandomKillMatrix(rng, 6, 10);
    const Dmsg dmsg = BuildDmsg(km);
    std::vector<std::size_t> class_of(km.mutant_count(), SIZE_MAX);
    for (std::size_t c = 0; c < dmsg.classes.size(); ++c) {
      EXPECT_NE(ManhattanNorm(dmsg.classes[c].column), 0u);
      for (const auto& id : dmsg.classes[c].members) class_of[km.MutantIndex(id)] = c;
    }
    const std::set<std::pair<std::size_t, std::size_t>> closure(dmsg.closure.begin(),
                                                               dmsg.closure.end());
    for (const auto& [from, to] : closure) EXPECT_NE(from, to);
    for (std::size_t x = 0; x < km.mutant_count(); ++x) {
      for (std::size_t y = 0; y < km.mutant_count(); ++y) {
        const bool brute = BruteSubsumes(km, x, y);
        EXPECT_EQ(DynamicallySubsumes(km, km.mutants()[x], km.mutants()[y]), brute);
        if (class_of[x] == SIZE_MAX || class_of[y] == SIZE_MAX) {
          EXPECT_FALSE(brute);
          continue;
        }
        if (class_of[x] == class_of[y]) continue;
        const bool strict = brute && !BruteSubsumes(km, y, x);
        EXPECT_EQ(closure.contains({class_of[x], class_of[y]}), strict);
      }
    }
    // The reduction is contained in the closure and has the same closure.
    for (const auto& e : dmsg.edges) EXPECT_TRUE(closure.contains(e));
    const std::size_t k = dmsg.classes.size();
    std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
    for (const auto& [from, to] : dmsg.edges) reach[from][to] = true;
    for (std::size_t mid = 0; mid < k; ++mid) {
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          if (reach[a][mid] && reach[mid][b]) reach[a][b] = true;
        }
      }
    }
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        EXPECT_EQ(reach[a][b], closure.contains({a, b}));
      }
    }
  }
}

TEST(MinimalMutantSet, TableOne) {
  const MinimalSetResult result = MinimalMutantSet(SubsumptionExampleKillMatrix());
  EXPECT_EQ(result.minimal, (std::vector<std::string>{"m1", "m2"}));
  EXPECT_DOUBLE_EQ(result.reduction_ratio, 0.5);
  EXPECT_TRUE(result.live.empty());
}

TEST(MinimalMutantSet, EdgeCases) {
  const KillMatrix single(TestVector({"t1"}), {"m"}, {{1}});
  EXPECT_EQ(MinimalMutantSet(single).minimal, std::vector<std::string>{"m"});
  const KillMatrix dead(TestVector({"t1"}), {"m"}, {{0}});
  const MinimalSetResult none = MinimalMutantSet(dead);
  EXPECT_TRUE(none.minimal.empty());
  EXPECT_EQ(none.live, std::vector<std::string>{"m"});
  EXPECT_EQ(none.reduction_ratio, 0.0);
}

TEST(MinimalMutantSet, MinimalAndSufficient) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const KillMatrix km = testing::RandomKillMatrix(rng, n, 1 + rng() % 10);
    const MinimalSetResult result = MinimalMutantSet(km);
    for (const auto& x : result.minimal) {
      for (const auto& y : result.minimal) {
        EXPECT_FALSE(DynamicallySubsumes(km, x, y));
      }
    }
    EXPECT_LE(result.minimal.size(), MaxMinimalSize(n));
    // Every test subset killing all of `minimal` kills every killed mutant.
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
      auto kills = [&](std::size_t j) {
        for (std::size_t i = 0; i < n; ++i) {
          if ((subset >> i & 1u) && km.Bit(i, j)) return true;
        }
        return false;
      };
      bool all_minimal = true;
      for (const auto& id : result.minimal) all_minimal &= kills(km.MutantIndex(id));
      if (!all_minimal) continue;
      for (std::size_t j = 0; j < km.mutant_count(); ++j) {
        if (ManhattanNorm(km.Column(j)) > 0) EXPECT_TRUE(kills(j));
      }
    }
  }
}

TEST(MaxMinimalSize, Values) {
  EXPECT_EQ(MaxMinimalSize(0), 1);
  EXPECT_EQ(MaxMinimalSize(3), 3);
  EXPECT_EQ(MaxMinimalSize(4), 6);
  EXPECT_EQ(MaxMinimalSize(5), 10);
  EXPECT_EQ(MaxMinimalSize(100).str(), "100891344545564193334812497256");
}

TEST(MaxMinimalSize, MiddleLayerAchievesTheBound) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<BitVector> columns;
    for (Node v = 0; v < (Node{1} << n); ++v) {
      const BitVector bits = BitsFromNode(v, n);
      if (ManhattanNorm(bits) == (n + 1) / 2) columns.push_back(bits);
    }
    const KillMatrix km(TestVector(Ids("t", n)), Ids("m", columns.size()), columns);
    EXPECT_EQ(MinimalMutantSet(km).minimal.size(), MaxMinimalSize(n));
  }
}

TEST(Equivalence, TableOne) {
  const KillMatrix km = SubsumptionExampleKillMatrix();
  const BehaviorMatrix bm = SynthesizeBehaviorMatrix(km);
  const ProgramSpace space(bm.tests(), "po", kOutput, bm);
  const auto check = DevianceSubsumptionEquivalence(space, km, "m1", "m3");
  EXPECT_TRUE(check.deviance_path_holds);
  EXPECT_TRUE(check.subsumes);
  const auto self = DevianceSubsumptionEquivalence(space, km, "m1", "m1");
  EXPECT_FALSE(self.deviance_path_holds);
  EXPECT_FALSE(self.subsumes);
  const ProgramSpace small(TestVector({"t1"}), "po", kOutput, bm);
  EXPECT_THROW(DevianceSubsumptionEquivalence(small, km, "m1", "m3"), ArgumentError);
}

TEST(Equivalence, RandomMatrices) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const KillMatrix km = testing::RandomKillMatrix(rng, 5, 8);
    const BehaviorMatrix bm = SynthesizeBehaviorMatrix(km);
    const ProgramSpace space(bm.tests(), "po", kOutput, bm);
    for (const auto& x : km.mutants()) {
      for (const auto& y : km.mutants()) {
        const auto check = DevianceSubsumptionEquivalence(space, km, x, y);
        EXPECT_EQ(check.deviance_path_holds, check.subsumes) << x << " " << y;
      }
    }
  }
}

TEST(DmsgToDot, ListsMembersAndLive) {
  const KillMatrix km(TestVector({"t1", "t2"}), {"a", "b", "c", "z"},
                      {{1, 0}, {1, 0}, {1, 1}, {0, 0}});
  const std::string dot = DmsgToDot(BuildDmsg(km));
  EXPECT_NE(dot.find("{a, b}"), std::string::npos);
  EXPECT_NE(dot.find("c0 -> c1"), std::string::npos);
  EXPECT_NE(dot.find("z"), std::string::npos);
  EXPECT_EQ(dot, DmsgToDot(BuildDmsg(km)));
}

}  // namespace
}  // namespace mutspace
