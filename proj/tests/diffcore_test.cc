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

#include "mutspace/diffcore.h"

#include <gtest/gtest.h>

#include <random>

#include "generators.h"
#include "mutspace/errors.h"
#include "mutspace/subsumption.h"
#include "mutspace/worked_examples.h"

namespace mutspace {
namespace {

using testing::Ids;
using testing::Token;

const Differentiator kExact;
const Differentiator kOutput(Differentiator::Policy::kOutput);
const Differentiator kTrace(Differentiator::Policy::kTrace);

TEST(Differentiator, FromNameAcceptsPolicyNames) {
  EXPECT_EQ(Differentiator::FromName("exact").policy(), Differentiator::Policy::kExact);
  EXPECT_EQ(Differentiator::FromName("output").policy(), Differentiator::Policy::kOutput);
  EXPECT_EQ(Differentiator::FromName("strong").policy(), Differentiator::Policy::kOutput);
  EXPECT_EQ(Differentiator::FromName("trace").policy(), Differentiator::Policy::kTrace);
  EXPECT_EQ(Differentiator::FromName("weak").policy(), Differentiator::Policy::kTrace);
  EXPECT_EQ(Differentiator::FromName("numeric", 0.5).epsilon(), 0.5);
  EXPECT_THROW(Differentiator::FromName("fuzzy"), ArgumentError);
  EXPECT_THROW(Differentiator::FromName("numeric", -1.0), ArgumentError);
}

TEST(Differentiator, ExactSeesEveryField) {
  BehaviorToken a = Token("1");
  BehaviorToken b = Token("1");
  EXPECT_FALSE(kExact.Differ(a, b));
  b.trace = std::vector<TraceEntry>{{"s1", "x=1"}};
  EXPECT_TRUE(kExact.Differ(a, b));
  EXPECT_FALSE(kOutput.Differ(a, b));
  b = Token("1");
  b.status = Status::kError;
  EXPECT_TRUE(kExact.Differ(a, b));
  EXPECT_TRUE(kOutput.Differ(a, b));
}

TEST(Differentiator, TraceIgnoresOutput) {
  BehaviorToken a = Token("1");
  BehaviorToken b = Token("2");
  a.trace = b.trace = std::vector<TraceEntry>{{"s1", "x=1"}};
  EXPECT_FALSE(kTrace.Differ(a, b));
  b.trace->push_back({"s2", "x=2"});
  EXPECT_TRUE(kTrace.Differ(a, b));
}

TEST(Differentiator, NumericTolerance) {
  const auto d = Differentiator::FromName("numeric", 0.001);
  EXPECT_FALSE(d.Differ(Token("0.3333"), Token("0.333333")));
  EXPECT_TRUE(d.Differ(Token("0.3333"), Token("0.5")));
  EXPECT_TRUE(d.Differ(Token("abc"), Token("abd")));
  EXPECT_FALSE(d.Differ(Token("abc"), Token("abc")));
  EXPECT_FALSE(d.Differ(Token("nan"), Token("nan")));
  EXPECT_EQ(d.id(), "numeric(0.001)");
}

TEST(Differentiate, RunningExample) {
  const BehaviorMatrix bm = RunningExampleMatrix();
  EXPECT_EQ(Differentiate(kExact, "t1", "ps", "po", bm), 0);
  EXPECT_EQ(Differentiate(kExact, "t2", "ps", "po", bm), 1);
  EXPECT_EQ(Differentiate(kExact, "t3", "po", "po", bm), 0);
}

TEST(Differentiate, UnknownIdsAreNamed) {
  const BehaviorMatrix bm = RunningExampleMatrix();
  try {
    Differentiate(kExact, "t9", "ps", "po", bm);
    FAIL();
  } catch (const LookupError& e) {
    EXPECT_EQ(e.id(), "t9");
  }
  try {
    Differentiate(kExact, "t1", "ps", "zz", bm);
    FAIL();
  } catch (const LookupError& e) {
    EXPECT_EQ(e.id(), "zz");
  }
}

TEST(DVector, RunningExample) {
  const BehaviorMatrix bm = RunningExampleMatrix();
  const DVector spo = MakeDVector(kExact, bm.tests(), "ps", "po", bm);
  EXPECT_EQ(BitString(spo.bits), "0111");
  EXPECT_EQ(ManhattanNorm(spo), 3u);
  EXPECT_EQ(spo.left, "ps");
  EXPECT_EQ(spo.right, "po");
  EXPECT_EQ(spo.differentiator, "exact");
  const DVector pom = MakeDVector(kExact, bm.tests(), "po", "m", bm);
  EXPECT_EQ(BitString(pom.bits), "0011");
  EXPECT_EQ(ManhattanNorm(pom), 2u);
  EXPECT_TRUE(MakeDVector(kExact, TestVector(), "ps", "po", bm).bits.empty());
  EXPECT_EQ(ManhattanNorm(BitVector{0, 0, 0}), 0u);
}

TEST(DerivedOracle, RunningExample) {
  const BehaviorMatrix bm = RunningExampleMatrix();
  const DerivedOracle oracle(kExact, "ps", bm);
  EXPECT_TRUE(oracle("t1", "po"));
  EXPECT_FALSE(oracle("t2", "po"));
  for (const auto& t : bm.tests()) EXPECT_TRUE(oracle.Passes(t, "ps"));
  EXPECT_THROW(DerivedOracle(kExact, "nope", bm), LookupError);
}

TEST(MutationAdequacy, TableOne) {
  const KillMatrix km = SubsumptionExampleKillMatrix();
  const BehaviorMatrix bm = SynthesizeBehaviorMatrix(km);
  const auto all = MutationAdequacy(kOutput, bm.tests(), "po", km.mutants(), bm);
  EXPECT_TRUE(all.adequate);
  EXPECT_TRUE(all.live.empty());
  ASSERT_EQ(all.killers.size(), 4u);
  EXPECT_EQ(all.killers[0], std::make_pair(std::string("m1"), std::string("t1")));
  EXPECT_EQ(all.killers[1], std::make_pair(std::string("m2"), std::string("t2")));

  const auto t2 = MutationAdequacy(kOutput, TestVector({"t2"}), "po", km.mutants(), bm);
  EXPECT_FALSE(t2.adequate);
  EXPECT_EQ(t2.live, (std::vector<std::string>{"m1", "m3"}));
}

TEST(MutationAdequacy, EdgeCases) {
  const KillMatrix km = SubsumptionExampleKillMatrix();
  const BehaviorMatrix bm = SynthesizeBehaviorMatrix(km);
  const auto none = MutationAdequacy(kOutput, bm.tests(), "po", {}, bm);
  EXPECT_TRUE(none.adequate);
  EXPECT_TRUE(none.live.empty());
  EXPECT_TRUE(none.killers.empty());
  const auto empty = MutationAdequacy(kOutput, TestVector(), "po", {"m1"}, bm);
  EXPECT_FALSE(empty.adequate);
  EXPECT_EQ(empty.live, std::vector<std::string>{"m1"});
}

TEST(TestVector, RejectsDuplicates) {
  EXPECT_THROW(TestVector({"t1", "t1"}), ArgumentError);
  EXPECT_THROW(TestVector({"t1"}).IndexOf("t2"), LookupError);
  EXPECT_EQ(TestVector({"a", "b", "c"}).Prefix(2).ids(), (std::vector<std::string>{"a", "b"}));
}

TEST(BehaviorMatrix, EnforcesShapeAndRoles) {
  BehaviorMatrix bm{TestVector({"t1", "t2"})};
  bm.AddProgram({"ps", Role::kSpec, {}, {}}, {Token("a"), Token("b")});
  EXPECT_THROW(bm.AddProgram({"x", Role::kNone, {}, {}}, {Token("a")}), ArgumentError);
  EXPECT_THROW(bm.AddProgram({"ps", Role::kNone, {}, {}}, {Token("a"), Token("b")}),
               ArgumentError);
  EXPECT_THROW(bm.AddProgram({"ps2", Role::kSpec, {}, {}}, {Token("a"), Token("b")}),
               RoleError);
  EXPECT_EQ(bm.SpecId(), "ps");
  EXPECT_FALSE(bm.OriginalId().has_value());
}

TEST(BehaviorMatrixJson, RoundTripIsByteIdentical) {
  BehaviorMatrix bm = RunningExampleMatrix();
  BehaviorToken traced = Token("");
  traced.status = Status::kTimeout;
  traced.trace = std::vector<TraceEntry>{{"s1", "x=1"}, {"s2", "cond=1;x=1"}};
  BehaviorToken plain = Token("q\"uote\n");
  plain.status = Status::kError;
  bm.AddProgram({"extra", Role::kMutant, "po", "s2"}, {traced, plain, Token("ü"), Token("")});
  const std::string json = BehaviorMatrixToJson(bm);
  const BehaviorMatrix back = BehaviorMatrixFromJson(json);
  EXPECT_TRUE(back == bm);
  EXPECT_EQ(BehaviorMatrixToJson(back), json);
}

TEST(BehaviorMatrixJson, SchemaErrorsCarryPaths) {
  auto path_of = [](const std::string& text) {
    try {
      BehaviorMatrixFromJson(text);
    } catch (const SchemaError& e) {
      return e.path();
    }
    return std::string("<no error>");
  };
  EXPECT_EQ(path_of(R"({"tests":["t1"],"programs":[{"id":"p"}],"cells":{"p":{"t1":{"output":"1","status":"odd"}}}})"),
            "/cells/p/t1/status");
  EXPECT_EQ(path_of(R"({"tests":["t1"],"programs":[{"id":"p"}],"cells":{"p":{}}})"),
            "/cells/p/t1");
  EXPECT_EQ(path_of(R"({"tests":["t1"],"programs":[{"id":"p","role":"boss"}],"cells":{"p":{"t1":{"output":"1","status":"normal"}}}})"),
            "/programs/0/role");
  EXPECT_EQ(path_of(R"({"tests":"t1","programs":[],"cells":{}})"), "/tests");
  EXPECT_EQ(path_of("{not json"), "");
}

// Properties over random matrices.

class DiffcoreProperties : public ::testing::TestWithParam<int> {};

TEST_P(DiffcoreProperties, SymmetryZeroDiagonalAndHamming) {
  std::mt19937_64 rng(GetParam());
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 7;
    const BehaviorMatrix bm = testing::RandomBehaviorMatrix(rng, n, 4, 3);
    const auto& programs = bm.programs();
    for (const auto& x : programs) {
      for (const auto& y : programs) {
        const DVector v = MakeDVector(kExact, bm.tests(), x.id, y.id, bm);
        const DVector w = MakeDVector(kExact, bm.tests(), y.id, x.id, bm);
        EXPECT_EQ(v.bits, w.bits);
        if (x.id == y.id) EXPECT_EQ(ManhattanNorm(v), 0u);
        std::size_t hamming = 0;
        for (const auto& t : bm.tests()) {
          hamming += bm.Cell(x.id, t).output != bm.Cell(y.id, t).output;
        }
        EXPECT_EQ(ManhattanNorm(v), hamming);
      }
    }
  }
}

TEST_P(DiffcoreProperties, OracleReduction) {
  std::mt19937_64 rng(GetParam());
  for (int trial = 0; trial < 200; ++trial) {
    const BehaviorMatrix bm = testing::RandomBehaviorMatrix(rng, 1 + rng() % 6, 3, 2);
    const DerivedOracle oracle(kOutput, "ps", bm);
    for (const auto& p : bm.programs()) {
      for (const auto& t : bm.tests()) {
        EXPECT_EQ(oracle(t, p.id), Differentiate(kOutput, t, p.id, "ps", bm) == 0);
      }
    }
  }
}

TEST_P(DiffcoreProperties, AdequacyIsMonotoneInTests) {
  std::mt19937_64 rng(GetParam());
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const BehaviorMatrix bm = testing::RandomBehaviorMatrix(rng, n, 1 + rng() % 5, 2);
    const auto mutants = bm.MutantIds();
    bool was_adequate = false;
    for (std::size_t k = 0; k <= n; ++k) {
      const bool adequate =
          MutationAdequacy(kOutput, bm.tests().Prefix(k), "po", mutants, bm).adequate;
      if (was_adequate) EXPECT_TRUE(adequate);
      was_adequate = adequate;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, DiffcoreProperties, ::testing::Values(1, 2, 3));

}  // namespace
}  // namespace mutspace
