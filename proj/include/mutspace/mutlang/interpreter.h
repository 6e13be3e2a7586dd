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

#ifndef MUTSPACE_MUTLANG_INTERPRETER_H_
#define MUTSPACE_MUTLANG_INTERPRETER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mutspace/behavior.h"
#include "mutspace/mutlang/ast.h"
#include "mutspace/mutlang/mutator.h"

namespace mutspace::mutlang {

inline constexpr std::uint64_t kDefaultStepBudget = 100'000;
// Values wider than this are reported as an error rather than computed.
inline constexpr std::size_t kMaxIntegerBits = 8192;

struct TestCase {
  std::string id;
  std::map<std::string, Integer> inputs;
};

struct ExecOptions {
  std::uint64_t budget = kDefaultStepBudget;
  bool tracing = false;
};

// Runs the program on the test's bindings. Never throws for program faults:
// division or modulo by zero, unbound variables, oversized integers and a
// missing return give status error; exceeding the step budget gives status
// timeout. Output is the returned value, empty for abnormal runs.
//
// With tracing on, one entry is recorded per executed statement (and per
// loop condition check): assignments record the store after the
// assignment, branches and loops "cond=<v>;<store>", returns
// "return=<v>;<store>", and a fault "error: <reason>". The store is printed
// as name=value pairs in name order.
BehaviorToken Execute(const Program& program, const TestCase& test,
                      const ExecOptions& options = {});

// JSON list of {"id": ..., "inputs": {var: int}}. Integers may be given as
// JSON numbers or as decimal strings. Throws SchemaError.
std::vector<TestCase> ParseTestSuite(std::string_view json);
// JSON object test-id -> expected output text. Throws SchemaError.
std::map<std::string, std::string> ParseExpectedOutputs(std::string_view json);

inline constexpr std::string_view kOriginalId = "original";
inline constexpr std::string_view kSpecId = "spec";

// Rows: "original" (role original), each mutant under its descriptor id
// (role mutant, origin "original", statement "s<id>"), and, when expected
// outputs are given, "spec" (role spec) holding them as normal tokens.
// Throws ArgumentError if the expected outputs miss a test.
BehaviorMatrix BuildBehaviorMatrix(
    const Program& original, const std::vector<Mutant>& mutants,
    const std::vector<TestCase>& tests, const ExecOptions& options = {},
    const std::optional<std::map<std::string, std::string>>& expected = {});

}  // namespace mutspace::mutlang

#endif  // MUTSPACE_MUTLANG_INTERPRETER_H_
