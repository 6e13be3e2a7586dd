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

#include "mutspace/mutlang/interpreter.h"

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>

#include "json.hpp"
#include "mutspace/errors.h"

namespace mutspace::mutlang {

namespace {

struct Fault {
  std::string reason;
};
struct OutOfSteps {};

class Interpreter {
 public:
  Interpreter(const TestCase& test, const ExecOptions& options)
      : store_(test.inputs), options_(options) {
    if (options.tracing) trace_.emplace();
  }

  BehaviorToken Run(const Program& program) {
    BehaviorToken token;
    try {
      if (auto value = RunBlock(program.body)) {
        token.output = value->str();
        token.status = Status::kNormal;
      } else {
        token.status = Status::kError;
      }
    } catch (const Fault& fault) {
      Record(current_, "error: " + fault.reason);
      token.status = Status::kError;
    } catch (const OutOfSteps&) {
      token.status = Status::kTimeout;
    }
    token.trace = std::move(trace_);
    return token;
  }

 private:
  void Step() {
    if (++steps_ > options_.budget) throw OutOfSteps{};
  }

  std::string Snapshot() const {
    std::string out;
    for (const auto& [name, value] : store_) {
      if (!out.empty()) out += ',';
      out += name + "=" + value.str();
    }
    return out;
  }

  void Record(int statement, std::string state) {
    if (trace_) trace_->push_back({StatementLabel(statement), std::move(state)});
  }

  bool tracing() const { return trace_.has_value(); }

  static Integer Checked(Integer value) {
    if (value != 0 && msb(abs(value)) >= kMaxIntegerBits) {
      throw Fault{"integer exceeds " + std::to_string(kMaxIntegerBits) + " bits"};
    }
    return value;
  }

  Integer Eval(const Expr& expr) {
    switch (expr.kind) {
      case Expr::Kind::kLiteral:
        return expr.value;
      case Expr::Kind::kVariable: {
        auto it = store_.find(expr.name);
        if (it == store_.end()) throw Fault{"unbound variable " + expr.name};
        return it->second;
      }
      case Expr::Kind::kUnary: {
        const Integer operand = Eval(*expr.lhs);
        if (expr.unary_op == UnaryOp::kNeg) return -operand;
        return operand == 0 ? 1 : 0;
      }
      case Expr::Kind::kBinary:
        return EvalBinary(expr);
    }
    return 0;
  }

  Integer EvalBinary(const Expr& expr) {
    // Logical connectives short-circuit.
    if (expr.binary_op == BinaryOp::kAnd) {
      if (Eval(*expr.lhs) == 0) return 0;
      return Eval(*expr.rhs) != 0 ? 1 : 0;
    }
    if (expr.binary_op == BinaryOp::kOr) {
      if (Eval(*expr.lhs) != 0) return 1;
      return Eval(*expr.rhs) != 0 ? 1 : 0;
    }
    const Integer a = Eval(*expr.lhs);
    const Integer b = Eval(*expr.rhs);
    switch (expr.binary_op) {
      case BinaryOp::kAdd: return Checked(a + b);
      case BinaryOp::kSub: return Checked(a - b);
      case BinaryOp::kMul: return Checked(a * b);
      case BinaryOp::kDiv:
        if (b == 0) throw Fault{"division by zero"};
        return Integer(a / b);  // truncates toward zero
      case BinaryOp::kMod:
        if (b == 0) throw Fault{"modulo by zero"};
        return Integer(a % b);  // sign follows the dividend
      case BinaryOp::kLt: return a < b ? 1 : 0;
      case BinaryOp::kLe: return a <= b ? 1 : 0;
      case BinaryOp::kGt: return a > b ? 1 : 0;
      case BinaryOp::kGe: return a >= b ? 1 : 0;
      case BinaryOp::kEq: return a == b ? 1 : 0;
      case BinaryOp::kNe: return a != b ? 1 : 0;
      case BinaryOp::kAnd:
      case BinaryOp::kOr:
        break;
    }
    return 0;
  }

  // Returned value, or nullopt when the block completes without returning.
  std::optional<Integer> RunBlock(const Block& block) {
    for (const auto& stmt : block) {
      if (auto value = RunStatement(*stmt)) return value;
    }
    return std::nullopt;
  }

  std::optional<Integer> RunStatement(const Stmt& stmt) {
    current_ = stmt.id;
    switch (stmt.kind) {
      case Stmt::Kind::kAssign: {
        Step();
        store_[stmt.target] = Eval(*stmt.expr);
        if (tracing()) Record(stmt.id, Snapshot());
        return std::nullopt;
      }
      case Stmt::Kind::kReturn: {
        Step();
        Integer value = Eval(*stmt.expr);
        if (tracing()) Record(stmt.id, "return=" + value.str() + ";" + Snapshot());
        return value;
      }
      case Stmt::Kind::kIf: {
        Step();
        const bool taken = Eval(*stmt.expr) != 0;
        if (tracing()) {
          Record(stmt.id, std::string("cond=") + (taken ? "1;" : "0;") + Snapshot());
        }
        if (taken) return RunBlock(stmt.body);
        return RunBlock(stmt.else_body);
      }
      case Stmt::Kind::kWhile: {
        for (;;) {
          Step();
          current_ = stmt.id;
          const bool taken = Eval(*stmt.expr) != 0;
          if (tracing()) {
            Record(stmt.id, std::string("cond=") + (taken ? "1;" : "0;") + Snapshot());
          }
          if (!taken) return std::nullopt;
          if (auto value = RunBlock(stmt.body)) return value;
        }
      }
    }
    return std::nullopt;
  }

  std::map<std::string, Integer> store_;
  ExecOptions options_;
  std::optional<std::vector<TraceEntry>> trace_;
  std::uint64_t steps_ = 0;
  int current_ = 0;
};

Integer ParseInteger(const nlohmann::json& value, const std::string& path) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Integer(value.get<std::uint64_t>())
                                      : Integer(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    const auto& text = value.get_ref<const std::string&>();
    std::size_t digits = !text.empty() && text[0] == '-' ? 1 : 0;
    if (digits == text.size()) throw SchemaError(path, "expected an integer");
    for (std::size_t i = digits; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') {
        throw SchemaError(path, "expected an integer");
      }
    }
    return Integer(text);
  }
  throw SchemaError(path, "expected an integer");
}

nlohmann::json ParseJson(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

BehaviorToken Execute(const Program& program, const TestCase& test,
                      const ExecOptions& options) {
  return Interpreter(test, options).Run(program);
}

std::vector<TestCase> ParseTestSuite(std::string_view json) {
  const nlohmann::json root = ParseJson(json);
  if (!root.is_array()) throw SchemaError("", "expected a list of tests");
  std::vector<TestCase> tests;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const std::string path = "/" + std::to_string(i);
    const auto& entry = root[i];
    if (!entry.is_object()) throw SchemaError(path, "expected an object");
    auto id = entry.find("id");
    if (id == entry.end() || !id->is_string()) {
      throw SchemaError(path + "/id", "expected a string test id");
    }
    TestCase test{id->get<std::string>(), {}};
    if (auto inputs = entry.find("inputs"); inputs != entry.end()) {
      if (!inputs->is_object()) {
        throw SchemaError(path + "/inputs", "expected an object");
      }
      for (const auto& [name, value] : inputs->items()) {
        test.inputs[name] = ParseInteger(value, path + "/inputs/" + name);
      }
    }
    tests.push_back(std::move(test));
  }
  return tests;
}

std::map<std::string, std::string> ParseExpectedOutputs(std::string_view json) {
  const nlohmann::json root = ParseJson(json);
  if (!root.is_object()) throw SchemaError("", "expected an object");
  std::map<std::string, std::string> expected;
  for (const auto& [test, value] : root.items()) {
    if (!value.is_string()) {
      throw SchemaError("/" + test, "expected output text");
    }
    expected[test] = value.get<std::string>();
  }
  return expected;
}

BehaviorMatrix BuildBehaviorMatrix(
    const Program& original, const std::vector<Mutant>& mutants,
    const std::vector<TestCase>& tests, const ExecOptions& options,
    const std::optional<std::map<std::string, std::string>>& expected) {
  std::vector<std::string> ids;
  for (const auto& test : tests) ids.push_back(test.id);
  BehaviorMatrix matrix{TestVector(std::move(ids))};

  if (expected) {
    std::vector<BehaviorToken> row;
    for (const auto& test : tests) {
      auto it = expected->find(test.id);
      if (it == expected->end()) {
        throw ArgumentError("expected outputs have no entry for test '" +
                            test.id + "'");
      }
      row.push_back({it->second, std::nullopt, Status::kNormal});
    }
    matrix.AddProgram({std::string(kSpecId), Role::kSpec, {}, {}},
                      std::move(row));
  }

  // Rows are computed in parallel and added in order.
  std::vector<const Program*> programs{&original};
  for (const auto& mutant : mutants) programs.push_back(&mutant.program);
  std::vector<std::vector<BehaviorToken>> rows(programs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < programs.size(); i = next++) {
      rows[i].reserve(tests.size());
      for (const auto& test : tests) {
        rows[i].push_back(Execute(*programs[i], test, options));
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(
      programs.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& thread : pool) thread.join();

  matrix.AddProgram({std::string(kOriginalId), Role::kOriginal, {}, {}},
                    std::move(rows[0]));
  for (std::size_t j = 0; j < mutants.size(); ++j) {
    matrix.AddProgram({mutants[j].descriptor.id, Role::kMutant,
                       std::string(kOriginalId),
                       StatementLabel(mutants[j].descriptor.statement)},
                      std::move(rows[j + 1]));
  }
  return matrix;
}

}  // namespace mutspace::mutlang
