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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>

#include "mutspace/errors.h"

namespace mutspace {

namespace {

std::optional<double> ParseDecimal(const std::string& text) {
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::string NumericId(double epsilon) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "numeric(%g)", epsilon);
  return buffer;
}

}  // namespace

Differentiator::Differentiator(Policy policy, double epsilon)
    : policy_(policy), epsilon_(policy == Policy::kNumeric ? epsilon : 0.0) {
  if (policy == Policy::kNumeric &&
      (!std::isfinite(epsilon) || epsilon < 0.0)) {
    throw ArgumentError("numeric tolerance must be a finite non-negative value");
  }
  switch (policy) {
    case Policy::kExact:
      id_ = "exact";
      break;
    case Policy::kOutput:
      id_ = "output";
      break;
    case Policy::kTrace:
      id_ = "trace";
      break;
    case Policy::kNumeric:
      id_ = NumericId(epsilon_);
      break;
  }
}

Differentiator Differentiator::FromName(std::string_view name,
                                        double epsilon) {
  if (name == "exact") return Differentiator(Policy::kExact);
  if (name == "output" || name == "strong") return Differentiator(Policy::kOutput);
  if (name == "trace" || name == "weak") return Differentiator(Policy::kTrace);
  if (name == "numeric") return Differentiator(Policy::kNumeric, epsilon);
  throw ArgumentError("unknown differentiator policy '" + std::string(name) +
                      "' (expected exact, output, trace or numeric)");
}

bool Differentiator::Differ(const BehaviorToken& a,
                            const BehaviorToken& b) const {
  switch (policy_) {
    case Policy::kExact:
      return !(a == b);
    case Policy::kOutput:
      return a.status != b.status || a.output != b.output;
    case Policy::kTrace:
      return a.status != b.status || a.trace != b.trace;
    case Policy::kNumeric: {
      if (a.status != b.status) return true;
      auto x = ParseDecimal(a.output);
      auto y = ParseDecimal(b.output);
      if (x && y) return std::fabs(*x - *y) > epsilon_;
      return a.output != b.output;
    }
  }
  return true;
}

std::uint8_t Differentiate(const Differentiator& d, const std::string& test,
                           const std::string& px, const std::string& py,
                           const BehaviorMatrix& matrix) {
  const BehaviorToken& a = matrix.Cell(px, test);
  const BehaviorToken& b = matrix.Cell(py, test);
  if (px == py) return 0;
  return d.Differ(a, b) ? 1 : 0;
}

DVector MakeDVector(const Differentiator& d, const TestVector& tests,
                    const std::string& px, const std::string& py,
                    const BehaviorMatrix& matrix) {
  const std::size_t x = matrix.ProgramIndex(px);
  const std::size_t y = matrix.ProgramIndex(py);
  DVector v{BitVector(tests.size(), 0), tests, px, py, d.id()};
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const std::size_t t = matrix.tests().IndexOf(tests[i]);
    v.bits[i] = (x != y && d.Differ(matrix.Cell(x, t), matrix.Cell(y, t))) ? 1 : 0;
  }
  return v;
}

std::size_t ManhattanNorm(const BitVector& bits) {
  std::size_t sum = 0;
  for (auto bit : bits) sum += bit;
  return sum;
}

std::string BitString(const BitVector& bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto bit : bits) out += bit ? '1' : '0';
  return out;
}

DerivedOracle::DerivedOracle(Differentiator d, std::string spec,
                             const BehaviorMatrix& matrix)
    : d_(std::move(d)), spec_(std::move(spec)), matrix_(&matrix) {
  matrix.ProgramIndex(spec_);
}

AdequacyResult MutationAdequacy(const Differentiator& d,
                                const TestVector& tests,
                                const std::string& original,
                                const std::vector<std::string>& mutants,
                                const BehaviorMatrix& matrix) {
  AdequacyResult result;
  for (const auto& mutant : mutants) {
    std::optional<std::string> killer;
    for (const auto& test : tests) {
      if (Differentiate(d, test, original, mutant, matrix)) {
        killer = test;
        break;
      }
    }
    if (killer) {
      result.killers.emplace_back(mutant, *killer);
    } else {
      // Still validate the id when there are no tests to look it up.
      matrix.ProgramIndex(mutant);
      result.live.push_back(mutant);
    }
  }
  matrix.ProgramIndex(original);
  result.adequate = result.live.empty();
  return result;
}

}  // namespace mutspace
