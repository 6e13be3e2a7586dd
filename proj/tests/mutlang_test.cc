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

#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "mutspace/diffcore.h"
#include "mutspace/errors.h"
#include "mutspace/mutlang/interpreter.h"
#include "mutspace/mutlang/mutator.h"
#include "mutspace/mutlang/parser.h"
#include "mutspace/subsumption.h"

namespace mutspace::mutlang {
namespace {

std::string Fixture(const std::string& name) {
  std::ifstream in(std::string(MUTSPACE_FIXTURE_DIR) + "/" + name);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Enough for every terminating fixture run; keeps traced timeouts short.
constexpr std::uint64_t kPropertyBudget = 5000;

TestCase Inputs(std::map<std::string, Integer> inputs) { return {"t", std::move(inputs)}; }

BehaviorToken Exec(const std::string& source, std::map<std::string, Integer> inputs = {},
                  ExecOptions options = {}) {
  return Execute(Parse(source), Inputs(std::move(inputs)), options);
}

TEST(Parse, Basics) {
  const Program p = Parse("return 1 + 2;");
  EXPECT_EQ(p.statement_count, 1);
  EXPECT_EQ(Render(p), "return (1 + 2);\n");
  const Program nested = Parse("if (a < 1) { x = 1; } else { while (x) { x = x - 1; } }\nreturn x;");
  EXPECT_EQ(nested.statement_count, 5);
  EXPECT_EQ(nested.body[0]->else_body[0]->body[0]->id, 4);
  EXPECT_EQ(nested.body[1]->id, 5);
}

TEST(Parse, PrecedenceAndComments) {
  EXPECT_EQ(Render(Parse("return -a * b + c % 2 < 3 == !d || e && f; // tail")),
            "return ((((((-a) * b) + (c % 2)) < 3) == (!d)) || (e && f));\n");
}

TEST(Parse, SyntaxErrorsHaveLocations) {
  try {
    Parse("x = 1;\nif (x) {\n  x = 2;\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 8);
  }
  try {
    Parse("x = 1;\n}");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 1);
  }
  EXPECT_THROW(Parse("x = ;"), SyntaxError);
  EXPECT_THROW(Parse("x = 1 $ 2;"), SyntaxError);
  EXPECT_THROW(Parse("return 1"), SyntaxError);
}

TEST(Parse, SeededFixtureHasTwentyStatements) {
  EXPECT_EQ(Parse(Fixture("seeded_fault.mini")).statement_count, 20);
}

TEST(Execute, Arithmetic) {
  EXPECT_EQ(Exec("return 6 / 2;").output, "3");
  EXPECT_EQ(Exec("return -7 / 2;").output, "-3");
  EXPECT_EQ(Exec("return -7 % 2;").output, "-1");
  EXPECT_EQ(Exec("return 7 % -2;").output, "1");
  EXPECT_EQ(Exec("return (3 < 4) + (4 <= 4) + (5 > 9) + !0;").output, "3");
  EXPECT_EQ(Exec("return 0 && 1 / 0;").output, "0");
  EXPECT_EQ(Exec("return 1 || 1 / 0;").output, "1");
  EXPECT_EQ(Exec("return a * a;", {{"a", Integer("100000000000000000000")}}).output,
            "10000000000000000000000000000000000000000");
}

TEST(Execute, AbnormalRuns) {
  const BehaviorToken div = Exec("return 1 / 0;");
  EXPECT_EQ(div.status, Status::kError);
  EXPECT_EQ(div.output, "");
  EXPECT_EQ(Exec("return 1 % 0;").status, Status::kError);
  EXPECT_EQ(Exec("return y;").status, Status::kError);
  EXPECT_EQ(Exec("x = 1;").status, Status::kError);
  EXPECT_EQ(Exec("while (1 == 1) { }").status, Status::kTimeout);
  EXPECT_EQ(Exec("x = 2; while (1) { x = x * x; }").status, Status::kError);
  EXPECT_EQ(Exec("i = 0; while (i < 10) { i = i + 1; } return i;", {}, {5, false}).status,
            Status::kTimeout);
}

TEST(Execute, Trace) {
  const BehaviorToken token =
      Exec("x = a; if (x > 1) { x = 0; } return x;", {{"a", 3}}, {100, true});
  ASSERT_TRUE(token.trace.has_value());
  const std::vector<TraceEntry> expected = {{"s1", "a=3,x=3"},
                                            {"s2", "cond=1;a=3,x=3"},
                                            {"s3", "a=3,x=0"},
                                            {"s4", "return=0;a=3,x=0"}};
  EXPECT_EQ(*token.trace, expected);
  EXPECT_FALSE(Exec("return 1;").trace.has_value());
  const BehaviorToken fault = Exec("return 1 / 0;", {}, {100, true});
  ASSERT_TRUE(fault.trace.has_value());
  EXPECT_EQ(fault.trace->back().statement, "s1");
  EXPECT_EQ(fault.trace->back().state.rfind("error: ", 0), 0u);
}

TEST(Mutate, AorOnAssignment) {
  const auto mutants = MutateAll(Parse("x = a + b;"), {Operator::kAor});
  ASSERT_EQ(mutants.size(), 4u);
  std::vector<std::string> replacements;
  for (const auto& m : mutants) replacements.push_back(m.descriptor.replacement);
  EXPECT_EQ(replacements, (std::vector<std::string>{"-", "*", "/", "%"}));
  EXPECT_EQ(mutants[0].program.source, "x = a - b;");
  EXPECT_EQ(mutants[0].descriptor.id, "m1");
}

TEST(Mutate, NoSites) {
  EXPECT_TRUE(MutateAll(Parse("return 0;"), {Operator::kRor}).empty());
}

TEST(Mutate, CrpDeduplicates) {
  const auto zero = MutateAll(Parse("return 0;"), {Operator::kCrp});
  ASSERT_EQ(zero.size(), 2u);
  EXPECT_EQ(zero[0].descriptor.replacement, "1");
  EXPECT_EQ(zero[1].descriptor.replacement, "-1");
  EXPECT_EQ(MutateAll(Parse("return 1;"), {Operator::kCrp}).size(), 2u);
  EXPECT_EQ(MutateAll(Parse("return 5;"), {Operator::kCrp}).size(), 3u);
}

TEST(Mutate, OperatorNames) {
  EXPECT_EQ(ParseOperator("aor"), Operator::kAor);
  EXPECT_THROW(ParseOperator("XYZ"), ArgumentError);
  EXPECT_EQ(ParseOperatorList("AOR, sdl"), (std::set<Operator>{Operator::kAor, Operator::kSdl}));
  EXPECT_EQ(ParseOperatorList(""), AllOperators());
}

TEST(Mutate, DescriptorsReproduceMutants) {
  for (const std::string name : {"seeded_fault.mini", "small.mini", "strong_weak.mini"}) {
    const Program original = Parse(Fixture(name));
    const auto mutants = MutateAll(original);
    std::set<std::tuple<int, std::size_t, std::string>> seen;
    for (const auto& m : mutants) {
      EXPECT_EQ(ApplyDescriptor(original.source, m.descriptor), m.program.source);
      EXPECT_EQ(Render(Parse(m.program.source)), Render(m.program)) << m.descriptor.id;
      EXPECT_EQ(m.program.statement_count, original.statement_count);
      EXPECT_TRUE(seen.insert({m.descriptor.statement, m.descriptor.offset,
                               m.descriptor.replacement}).second);
    }
    for (std::size_t i = 1; i < mutants.size(); ++i) {
      const auto& a = mutants[i - 1].descriptor;
      const auto& b = mutants[i].descriptor;
      EXPECT_TRUE(std::tuple(a.statement, a.offset, a.op) <= std::tuple(b.statement, b.offset, b.op));
    }
  }
}

// Counts sites from the source text alone.
std::size_t CountSitesByText(const std::string& source, int statements) {
  const std::string code = std::regex_replace(source, std::regex("//[^\n]*"), "");
  std::size_t count = static_cast<std::size_t>(statements);  // SDL
  auto occurrences = [&](const std::string& pattern) {
    const std::regex re(pattern);
    return static_cast<std::size_t>(
        std::distance(std::sregex_iterator(code.begin(), code.end(), re),
                      std::sregex_iterator()));
  };
  count += 4 * occurrences(R"([\w)]\s*[+*/%]|[\w)]\s+-\s)");
  count += 5 * occurrences(R"(<=|>=|==|!=|<|>)");
  count += occurrences(R"(&&|\|\|)");
  const std::regex literal(R"(\b\d+\b)");
  for (auto it = std::sregex_iterator(code.begin(), code.end(), literal);
       it != std::sregex_iterator(); ++it) {
    const std::string text = it->str();
    count += (text == "0" || text == "1") ? 2 : 3;
  }
  return count;
}

TEST(Mutate, SiteCountMatchesTextualRecount) {
  for (const std::string name : {"seeded_fault.mini", "small.mini", "strong_weak.mini"}) {
    const Program program = Parse(Fixture(name));
    EXPECT_EQ(MutateAll(program).size(), CountSitesByText(program.source, program.statement_count))
        << name;
  }
}

TEST(BehaviorMatrix, ShapeAndDeterminism) {
  const Program program = Parse(Fixture("small.mini"));
  const auto tests = ParseTestSuite(Fixture("small_tests.json"));
  const auto mutants = MutateAll(program, {Operator::kAor});
  const std::map<std::string, std::string> expected = {{"t1", "2"}, {"t2", "6"}, {"t3", "4"}};
  const auto bm = BuildBehaviorMatrix(program, std::vector<Mutant>(mutants.begin(), mutants.begin() + 4),
                                      tests, {}, expected);
  EXPECT_EQ(bm.program_count(), 6u);
  EXPECT_EQ(bm.tests().size(), 3u);
  EXPECT_EQ(bm.SpecId(), "spec");
  EXPECT_EQ(bm.OriginalId(), "original");
  EXPECT_EQ(bm.Program("m1").statement, "s1");
  EXPECT_EQ(BehaviorMatrixToJson(bm),
            BehaviorMatrixToJson(BuildBehaviorMatrix(
                program, std::vector<Mutant>(mutants.begin(), mutants.begin() + 4), tests, {},
                expected)));
  EXPECT_THROW(BuildBehaviorMatrix(program, mutants, tests, {},
                                   std::map<std::string, std::string>{{"t1", "2"}}),
               ArgumentError);
}

TEST(BehaviorMatrix, HandExecutedKills) {
  // x = a * 2; if (x > b) { x = x - b; } return x;
  // t1 (1, 5) -> 2, t2 (3, 1) -> 5, t3 (2, 4) -> 4.
  // s1 mutants: a+2 -> 3 4 4; a-2 -> -1 1 0; a/2 -> 0 1 1; a%2 -> 1 1 0.
  // s3 mutants only matter on t2: x+b 7, x*b 6, x/b 6, x%b 0.
  const Program program = Parse(Fixture("small.mini"));
  const auto bm = BuildBehaviorMatrix(program, MutateAll(program, {Operator::kAor}),
                                      ParseTestSuite(Fixture("small_tests.json")));
  const ProgramSpace space(bm.tests(), "original", Differentiator(Differentiator::Policy::kOutput), bm);
  const KillMatrix km = MakeKillMatrix(space, bm.MutantIds());
  EXPECT_EQ(KillMatrixToCsv(km),
            "test,m1,m2,m3,m4,m5,m6,m7,m8\n"
            "t1,1,1,1,1,0,0,0,0\n"
            "t2,1,1,1,1,1,1,1,1\n"
            "t3,0,1,1,1,0,0,0,0\n");
}

TEST(ParseTestSuite, Schema) {
  const auto tests = ParseTestSuite(R"([{"id": "t1", "inputs": {"a": 1, "b": "-123456789012345678901234567890"}}])");
  ASSERT_EQ(tests.size(), 1u);
  EXPECT_EQ(tests[0].inputs.at("b").str(), "-123456789012345678901234567890");
  EXPECT_THROW(ParseTestSuite(R"([{"id": "t1", "inputs": {"a": 1.5}}])"), SchemaError);
  EXPECT_THROW(ParseTestSuite(R"([{"inputs": {}}])"), SchemaError);
  EXPECT_THROW(ParseTestSuite(R"({"id": "t1"})"), SchemaError);
  EXPECT_THROW(ParseExpectedOutputs(R"({"t1": 3})"), SchemaError);
}

// Tests that never execute the mutated statement see the same output.
TEST(Properties, UnreachedMutationsAreInvisible) {
  for (const std::string name : {"seeded_fault.mini", "small.mini", "strong_weak.mini"}) {
    const Program program = Parse(Fixture(name));
    const std::string stem = name.substr(0, name.size() - 5);
    const auto tests = ParseTestSuite(Fixture(stem + "_tests.json"));
    const auto mutants = MutateAll(program);
    for (const auto& test : tests) {
      const BehaviorToken base = Execute(program, test, {kDefaultStepBudget, true});
      std::set<std::string> reached;
      for (const auto& entry : *base.trace) reached.insert(entry.statement);
      for (const auto& m : mutants) {
        if (reached.contains(StatementLabel(m.descriptor.statement))) continue;
        const BehaviorToken mutated = Execute(m.program, test);
        EXPECT_EQ(mutated.output, base.output);
        EXPECT_EQ(mutated.status, base.status);
      }
    }
  }
}

TEST(Properties, WeakBitDominatesStrongBit) {
  const Differentiator strong(Differentiator::Policy::kOutput);
  const Differentiator weak(Differentiator::Policy::kTrace);
  std::size_t strict = 0;
  for (const std::string stem : {"seeded_fault", "small", "strong_weak"}) {
    const Program program = Parse(Fixture(stem + ".mini"));
    const auto bm = BuildBehaviorMatrix(program, MutateAll(program),
                                        ParseTestSuite(Fixture(stem + "_tests.json")),
                                        {kPropertyBudget, true});
    for (const auto& m : bm.MutantIds()) {
      for (const auto& t : bm.tests()) {
        const int s = Differentiate(strong, t, "original", m, bm);
        const int w = Differentiate(weak, t, "original", m, bm);
        EXPECT_GE(w, s);
        strict += w > s;
      }
    }
  }
  EXPECT_GT(strict, 0u);
}

TEST(Properties, ExecutionIsDeterministic) {
  const Program program = Parse(Fixture("seeded_fault.mini"));
  const auto tests = ParseTestSuite(Fixture("seeded_fault_tests.json"));
  for (const auto& m : MutateAll(program)) {
    for (const auto& t : tests) {
      EXPECT_EQ(Execute(m.program, t, {kPropertyBudget, true}),
                Execute(m.program, t, {kPropertyBudget, true}));
    }
  }
}

}  // namespace
}  // namespace mutspace::mutlang
