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

#ifndef MUTSPACE_MBFL_H_
#define MUTSPACE_MBFL_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mutspace/behavior.h"
#include "mutspace/diffcore.h"

namespace mutspace {

struct MutantSite {
  std::string id;
  // Unknown statements are scored but left out of the statement ranking.
  std::optional<std::string> statement;
};

// A behavior matrix with spec and original rows, the mutants to score and
// the tests / differentiator to score them with. Holds a reference to the
// matrix.
class FaultLocalizationInput {
 public:
  // Throws RoleError naming the missing role, LookupError for unknown ids.
  FaultLocalizationInput(const BehaviorMatrix& matrix,
                         std::vector<MutantSite> mutants, TestVector tests,
                         Differentiator d);

  // All mutant rows of the matrix (statements from their program entries)
  // over all of its tests.
  static FaultLocalizationInput FromMatrix(const BehaviorMatrix& matrix,
                                           Differentiator d);

  const BehaviorMatrix& matrix() const { return *matrix_; }
  const std::vector<MutantSite>& mutants() const { return mutants_; }
  const TestVector& tests() const { return tests_; }
  const Differentiator& differentiator() const { return d_; }
  const std::string& spec() const { return spec_; }
  const std::string& original() const { return original_; }

 private:
  const BehaviorMatrix* matrix_;
  std::vector<MutantSite> mutants_;
  TestVector tests_;
  Differentiator d_;
  std::string spec_;
  std::string original_;
};

enum class Metric { kOchiai, kJaccard };

std::string_view ToString(Metric metric);
// Throws ArgumentError for names other than "ochiai" and "jaccard".
Metric ParseMetric(std::string_view name);

struct Method {
  enum class Kind { kFix, kFlt };

  Kind kind = Kind::kFix;
  Metric metric = Metric::kOchiai;

  static Method Fix() { return {Kind::kFix, Metric::kOchiai}; }
  static Method Flt(Metric metric = Metric::kOchiai) {
    return {Kind::kFlt, metric};
  }
};

// Tests on which the original and the mutant sit on different sides of the
// spec, i.e. the test outcome changed.
TestVector ChangedTests(const FaultLocalizationInput& in,
                        const std::string& mutant);

struct FixCounts {
  std::size_t fail_to_pass = 0;
  std::size_t pass_to_fail = 0;
};

FixCounts CountFixes(const FaultLocalizationInput& in,
                     const std::string& mutant);

// fail_to_pass / F - pass_to_fail / P, with F / P the failing / passing
// tests of the original. A term with a zero denominator contributes 0.
double FixScore(const FaultLocalizationInput& in, const std::string& mutant);

// Similarity of the kill vector d(po, m) and the failure vector d(po, ps).
double Similarity(const BitVector& kills, const BitVector& failures,
                  Metric metric);
double FltScore(const FaultLocalizationInput& in, const std::string& mutant,
                Metric metric = Metric::kOchiai);

struct MutantScore {
  std::string id;
  std::optional<std::string> statement;
  double score = 0.0;
};

struct RankedStatement {
  std::string statement;
  double score = 0.0;
  // 1-based; tied statements share the mean of the positions they occupy.
  double rank = 0.0;
};

// Sorted by descending score, ties in input order.
std::vector<RankedStatement> RankByScore(
    const std::vector<std::pair<std::string, double>>& scores);

struct SuspiciousnessReport {
  Method method;
  std::vector<MutantScore> mutants;
  // Max over each statement's mutants, in first-appearance order.
  std::vector<std::pair<std::string, double>> statement_scores;
  std::vector<RankedStatement> ranking;
};

// Throws ArgumentError when there are no mutants.
SuspiciousnessReport RankStatements(const FaultLocalizationInput& in,
                                    Method method);

// Scores written with six decimals.
std::string ReportToJson(const SuspiciousnessReport& report);

struct MethodComparison {
  // d(t, ps, m): FIX sees the mutant differ from the spec.
  BitVector fix_difference;
  // d(t, po, m) != d(t, po, ps): FLT sees the mutant differ from the spec.
  BitVector flt_difference;
  // Tests on which ps, po and m are pairwise different. FLT judges the
  // mutant equal to the spec there while FIX judges it different.
  std::vector<std::string> disagreement_tests;
};

MethodComparison CompareMethods(const FaultLocalizationInput& in,
                                const std::string& mutant);

}  // namespace mutspace

#endif  // MUTSPACE_MBFL_H_
