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

#include "mutspace/mbfl.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <unordered_map>

#include "json.hpp"
#include "mutspace/errors.h"

namespace mutspace {

namespace {

std::string FixedSix(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  std::string text = buffer;
  if (text == "-0.000000") text = "0.000000";
  return text;
}

std::string RankText(double rank) {
  char buffer[32];
  if (rank == std::floor(rank)) {
    std::snprintf(buffer, sizeof(buffer), "%.0f", rank);
  } else {
    std::snprintf(buffer, sizeof(buffer), "%.1f", rank);
  }
  return buffer;
}

std::string Quoted(const std::string& text) {
  return nlohmann::json(text).dump();
}

}  // namespace

FaultLocalizationInput::FaultLocalizationInput(const BehaviorMatrix& matrix,
                                               std::vector<MutantSite> mutants,
                                               TestVector tests,
                                               Differentiator d)
    : matrix_(&matrix),
      mutants_(std::move(mutants)),
      tests_(std::move(tests)),
      d_(std::move(d)) {
  auto spec = matrix.SpecId();
  if (!spec) throw RoleError("behavior matrix has no program with role spec");
  auto original = matrix.OriginalId();
  if (!original) {
    throw RoleError("behavior matrix has no program with role original");
  }
  spec_ = *spec;
  original_ = *original;
  for (const auto& mutant : mutants_) matrix.ProgramIndex(mutant.id);
  for (const auto& test : tests_) matrix.tests().IndexOf(test);
}

FaultLocalizationInput FaultLocalizationInput::FromMatrix(
    const BehaviorMatrix& matrix, Differentiator d) {
  std::vector<MutantSite> mutants;
  for (const auto& info : matrix.programs()) {
    if (info.role == Role::kMutant) mutants.push_back({info.id, info.statement});
  }
  return FaultLocalizationInput(matrix, std::move(mutants), matrix.tests(),
                                std::move(d));
}

std::string_view ToString(Metric metric) {
  return metric == Metric::kOchiai ? "ochiai" : "jaccard";
}

Metric ParseMetric(std::string_view name) {
  if (name == "ochiai") return Metric::kOchiai;
  if (name == "jaccard") return Metric::kJaccard;
  throw ArgumentError("unknown similarity metric '" + std::string(name) +
                      "' (expected ochiai or jaccard)");
}

TestVector ChangedTests(const FaultLocalizationInput& in,
                        const std::string& mutant) {
  const BehaviorMatrix& bm = in.matrix();
  const auto& d = in.differentiator();
  std::vector<std::string> changed;
  for (const auto& test : in.tests()) {
    if (Differentiate(d, test, in.spec(), in.original(), bm) !=
        Differentiate(d, test, in.spec(), mutant, bm)) {
      changed.push_back(test);
    }
  }
  return TestVector(std::move(changed));
}

FixCounts CountFixes(const FaultLocalizationInput& in,
                     const std::string& mutant) {
  const TestVector changed = ChangedTests(in, mutant);
  const DVector v = MakeDVector(in.differentiator(), changed, in.spec(), mutant,
                                in.matrix());
  FixCounts counts;
  counts.pass_to_fail = ManhattanNorm(v);
  counts.fail_to_pass = v.bits.size() - counts.pass_to_fail;
  return counts;
}

double FixScore(const FaultLocalizationInput& in, const std::string& mutant) {
  const FixCounts counts = CountFixes(in, mutant);
  const std::size_t failing = ManhattanNorm(MakeDVector(
      in.differentiator(), in.tests(), in.spec(), in.original(), in.matrix()));
  const std::size_t passing = in.tests().size() - failing;
  double score = 0.0;
  if (failing > 0) {
    score += static_cast<double>(counts.fail_to_pass) / failing;
  }
  if (passing > 0) {
    score -= static_cast<double>(counts.pass_to_fail) / passing;
  }
  return score;
}

double Similarity(const BitVector& kills, const BitVector& failures,
                  Metric metric) {
  if (kills.size() != failures.size()) {
    throw ArgumentError("kill and failure vectors differ in length");
  }
  std::size_t both = 0, kill_only = 0, fail_only = 0;
  for (std::size_t i = 0; i < kills.size(); ++i) {
    if (kills[i] && failures[i]) {
      ++both;
    } else if (kills[i]) {
      ++kill_only;
    } else if (failures[i]) {
      ++fail_only;
    }
  }
  const double a = static_cast<double>(both);
  switch (metric) {
    case Metric::kOchiai: {
      const double denominator =
          std::sqrt(static_cast<double>((both + kill_only) * (both + fail_only)));
      return denominator == 0.0 ? 0.0 : a / denominator;
    }
    case Metric::kJaccard: {
      const std::size_t denominator = both + kill_only + fail_only;
      return denominator == 0 ? 0.0 : a / static_cast<double>(denominator);
    }
  }
  return 0.0;
}

double FltScore(const FaultLocalizationInput& in, const std::string& mutant,
                Metric metric) {
  const auto& d = in.differentiator();
  const DVector kills =
      MakeDVector(d, in.tests(), in.original(), mutant, in.matrix());
  const DVector failures =
      MakeDVector(d, in.tests(), in.original(), in.spec(), in.matrix());
  return Similarity(kills.bits, failures.bits, metric);
}

std::vector<RankedStatement> RankByScore(
    const std::vector<std::pair<std::string, double>>& scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scores[a].second > scores[b].second;
                   });
  std::vector<RankedStatement> ranking;
  ranking.reserve(order.size());
  std::size_t first = 0;
  while (first < order.size()) {
    std::size_t last = first;
    while (last + 1 < order.size() &&
           scores[order[last + 1]].second == scores[order[first]].second) {
      ++last;
    }
    // Positions first+1 .. last+1 share their mean.
    const double rank = (static_cast<double>(first + 1) + (last + 1)) / 2.0;
    for (std::size_t i = first; i <= last; ++i) {
      ranking.push_back({scores[order[i]].first, scores[order[i]].second, rank});
    }
    first = last + 1;
  }
  return ranking;
}

SuspiciousnessReport RankStatements(const FaultLocalizationInput& in,
                                    Method method) {
  if (in.mutants().empty()) {
    throw ArgumentError("fault localization needs at least one mutant");
  }
  SuspiciousnessReport report;
  report.method = method;
  std::unordered_map<std::string, std::size_t> statement_slot;
  for (const auto& site : in.mutants()) {
    const double score = method.kind == Method::Kind::kFix
                             ? FixScore(in, site.id)
                             : FltScore(in, site.id, method.metric);
    report.mutants.push_back({site.id, site.statement, score});
    if (!site.statement) continue;
    auto [it, inserted] =
        statement_slot.emplace(*site.statement, report.statement_scores.size());
    if (inserted) {
      report.statement_scores.emplace_back(*site.statement, score);
    } else {
      auto& best = report.statement_scores[it->second].second;
      best = std::max(best, score);
    }
  }
  report.ranking = RankByScore(report.statement_scores);
  return report;
}

std::string ReportToJson(const SuspiciousnessReport& report) {
  std::string out = "{\n";
  if (report.method.kind == Method::Kind::kFix) {
    out += "  \"method\": \"fix\",\n";
  } else {
    out += "  \"method\": \"flt\",\n";
    out += "  \"metric\": " + Quoted(std::string(ToString(report.method.metric))) +
           ",\n";
  }
  out += "  \"mutants\": [";
  for (std::size_t i = 0; i < report.mutants.size(); ++i) {
    const auto& m = report.mutants[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"id\": " + Quoted(m.id) + ", \"statement\": " +
           (m.statement ? Quoted(*m.statement) : std::string("null")) +
           ", \"score\": " + FixedSix(m.score) + "}";
  }
  out += report.mutants.empty() ? "],\n" : "\n  ],\n";
  out += "  \"ranking\": [";
  for (std::size_t i = 0; i < report.ranking.size(); ++i) {
    const auto& r = report.ranking[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"statement\": " + Quoted(r.statement) +
           ", \"score\": " + FixedSix(r.score) + ", \"rank\": " +
           RankText(r.rank) + "}";
  }
  out += report.ranking.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

MethodComparison CompareMethods(const FaultLocalizationInput& in,
                                const std::string& mutant) {
  const auto& d = in.differentiator();
  const auto& bm = in.matrix();
  MethodComparison result;
  for (const auto& test : in.tests()) {
    const auto spec_vs_original = Differentiate(d, test, in.spec(), in.original(), bm);
    const auto original_vs_mutant =
        Differentiate(d, test, in.original(), mutant, bm);
    const auto spec_vs_mutant = Differentiate(d, test, in.spec(), mutant, bm);
    result.fix_difference.push_back(spec_vs_mutant);
    result.flt_difference.push_back(original_vs_mutant != spec_vs_original);
    if (spec_vs_original && original_vs_mutant && spec_vs_mutant) {
      result.disagreement_tests.push_back(test);
    }
  }
  return result;
}

}  // namespace mutspace
