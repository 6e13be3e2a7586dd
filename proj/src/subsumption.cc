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

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dot_util.h"
#include "mutspace/errors.h"
#include "mutspace/lattice.h"

namespace mutspace {

namespace {

// Kills of x are a subset of kills of y.
bool KillsSubset(const BitVector& x, const BitVector& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] && !y[i]) return false;
  }
  return true;
}

std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(std::move(cell));
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(std::move(cell));
  for (auto& value : cells) {
    const auto first = value.find_first_not_of(" \t");
    const auto last = value.find_last_not_of(" \t");
    value = first == std::string::npos ? ""
                                       : value.substr(first, last - first + 1);
  }
  return cells;
}

}  // namespace

KillMatrix::KillMatrix(TestVector tests, std::vector<std::string> mutants,
                       std::vector<BitVector> columns)
    : tests_(std::move(tests)),
      mutants_(std::move(mutants)),
      columns_(std::move(columns)) {
  if (mutants_.size() != columns_.size()) {
    throw ArgumentError("kill matrix has " + std::to_string(mutants_.size()) +
                        " mutants but " + std::to_string(columns_.size()) +
                        " columns");
  }
  for (std::size_t j = 0; j < mutants_.size(); ++j) {
    if (columns_[j].size() != tests_.size()) {
      throw ArgumentError("column '" + mutants_[j] + "' has " +
                          std::to_string(columns_[j].size()) +
                          " rows, expected " + std::to_string(tests_.size()));
    }
    for (auto bit : columns_[j]) {
      if (bit > 1) {
        throw ArgumentError("column '" + mutants_[j] + "' holds a non-binary value");
      }
    }
    if (!index_.emplace(mutants_[j], j).second) {
      throw ArgumentError("duplicate mutant id '" + mutants_[j] + "'");
    }
  }
}

std::size_t KillMatrix::MutantIndex(const std::string& mutant) const {
  auto it = index_.find(mutant);
  if (it == index_.end()) throw LookupError(mutant);
  return it->second;
}

KillMatrix MakeKillMatrix(const ProgramSpace& space,
                          const std::vector<std::string>& mutants) {
  const ProgramInfo& origin = space.matrix().Program(space.origin());
  if (origin.role != Role::kOriginal) {
    throw RoleError("kill matrix origin '" + space.origin() +
                    "' does not have role original");
  }
  std::vector<BitVector> columns;
  columns.reserve(mutants.size());
  for (const auto& mutant : mutants) {
    columns.push_back(PositionOf(space, mutant).bits);
  }
  return KillMatrix(space.tests(), mutants, std::move(columns));
}

std::string KillMatrixToCsv(const KillMatrix& km) {
  std::ostringstream out;
  out << "test";
  for (const auto& mutant : km.mutants()) out << ',' << mutant;
  out << '\n';
  for (std::size_t i = 0; i < km.test_count(); ++i) {
    out << km.tests()[i];
    for (std::size_t j = 0; j < km.mutant_count(); ++j) {
      out << ',' << static_cast<int>(km.Bit(i, j));
    }
    out << '\n';
  }
  return out.str();
}

KillMatrix KillMatrixFromCsv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) {
    throw SchemaError("/1/1", "missing header row");
  }
  std::vector<std::string> header = SplitCsvLine(lines[0]);
  if (header[0] != "test") {
    throw SchemaError("/1/1", "header must start with 'test'");
  }
  std::vector<std::string> mutants(header.begin() + 1, header.end());
  std::set<std::string> seen_mutants;
  for (std::size_t j = 0; j < mutants.size(); ++j) {
    if (mutants[j].empty()) {
      throw SchemaError("/1/" + std::to_string(j + 2), "empty mutant id");
    }
    if (!seen_mutants.insert(mutants[j]).second) {
      throw SchemaError("/1/" + std::to_string(j + 2),
                        "duplicate mutant id '" + mutants[j] + "'");
    }
  }
  std::set<std::string> seen_tests;
  std::vector<std::string> tests;
  std::vector<BitVector> columns(mutants.size());
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const std::string line_path = "/" + std::to_string(row + 1);
    std::vector<std::string> cells = SplitCsvLine(lines[row]);
    if (cells.size() != header.size()) {
      const std::size_t column = std::min(cells.size(), header.size()) + 1;
      throw SchemaError(line_path + "/" + std::to_string(column),
                        "expected " + std::to_string(header.size()) +
                            " cells, found " + std::to_string(cells.size()));
    }
    if (cells[0].empty()) {
      throw SchemaError(line_path + "/1", "empty test id");
    }
    if (!seen_tests.insert(cells[0]).second) {
      throw SchemaError(line_path + "/1", "duplicate test id '" + cells[0] + "'");
    }
    tests.push_back(cells[0]);
    for (std::size_t j = 0; j < mutants.size(); ++j) {
      const std::string& cell = cells[j + 1];
      if (cell != "0" && cell != "1") {
        throw SchemaError(line_path + "/" + std::to_string(j + 2),
                          "expected 0 or 1, found '" + cell + "'");
      }
      columns[j].push_back(cell == "1" ? 1 : 0);
    }
  }
  return KillMatrix(TestVector(std::move(tests)), std::move(mutants),
                    std::move(columns));
}

bool DynamicallySubsumes(const KillMatrix& km, const std::string& mx,
                         const std::string& my) {
  const BitVector& x = km.Column(mx);
  const BitVector& y = km.Column(my);
  if (mx == my) return false;
  return ManhattanNorm(x) > 0 && KillsSubset(x, y);
}

std::vector<std::size_t> Dmsg::Roots() const {
  std::vector<bool> has_incoming(classes.size(), false);
  for (const auto& [from, to] : closure) has_incoming[to] = true;
  std::vector<std::size_t> roots;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (!has_incoming[c]) roots.push_back(c);
  }
  return roots;
}

Dmsg BuildDmsg(const KillMatrix& km) {
  Dmsg dmsg;
  std::map<BitVector, std::size_t> class_of;
  for (std::size_t j = 0; j < km.mutant_count(); ++j) {
    const BitVector& column = km.Column(j);
    if (ManhattanNorm(column) == 0) {
      dmsg.live.push_back(km.mutants()[j]);
      continue;
    }
    auto [it, inserted] = class_of.emplace(column, dmsg.classes.size());
    if (inserted) dmsg.classes.push_back({{}, column});
    dmsg.classes[it->second].members.push_back(km.mutants()[j]);
  }

  const std::size_t count = dmsg.classes.size();
  std::vector<std::vector<bool>> subsumes(count, std::vector<bool>(count));
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = 0; y < count; ++y) {
      // Columns of distinct classes differ, so subset means strict subset.
      if (x != y && KillsSubset(dmsg.classes[x].column,
                                dmsg.classes[y].column)) {
        subsumes[x][y] = true;
        dmsg.closure.emplace_back(x, y);
      }
    }
  }
  for (const auto& [x, z] : dmsg.closure) {
    bool implied = false;
    for (std::size_t y = 0; y < count && !implied; ++y) {
      implied = subsumes[x][y] && subsumes[y][z];
    }
    if (!implied) dmsg.edges.emplace_back(x, z);
  }
  return dmsg;
}

std::string DmsgToDot(const Dmsg& dmsg) {
  std::ostringstream out;
  out << "digraph dmsg {\n";
  out << "  node [shape=box];\n";
  for (std::size_t c = 0; c < dmsg.classes.size(); ++c) {
    const auto& cls = dmsg.classes[c];
    std::string members;
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      if (i > 0) members += ", ";
      members += cls.members[i];
    }
    out << "  c" << c << " [label="
        << DotLabel({"{" + members + "}", BitString(cls.column)}) << "];\n";
  }
  for (const auto& [from, to] : dmsg.edges) {
    out << "  c" << from << " -> c" << to << ";\n";
  }
  if (!dmsg.live.empty()) {
    std::string live;
    for (std::size_t i = 0; i < dmsg.live.size(); ++i) {
      if (i > 0) live += ", ";
      live += dmsg.live[i];
    }
    out << "  live [shape=note, label=" << DotLabel({"live", live}) << "];\n";
  }
  out << "}\n";
  return out.str();
}

MinimalSetResult MinimalMutantSet(const KillMatrix& km) {
  const Dmsg dmsg = BuildDmsg(km);
  MinimalSetResult result;
  std::size_t killed = 0;
  for (const auto& cls : dmsg.classes) killed += cls.members.size();
  for (std::size_t root : dmsg.Roots()) {
    result.minimal.push_back(dmsg.classes[root].members.front());
    result.roots.push_back(dmsg.classes[root]);
  }
  result.live = dmsg.live;
  if (killed > 0) {
    result.reduction_ratio =
        static_cast<double>(result.minimal.size()) / static_cast<double>(killed);
  }
  return result;
}

boost::multiprecision::cpp_int MaxMinimalSize(std::size_t n) {
  const std::size_t k = n / 2;
  boost::multiprecision::cpp_int value = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    value *= n - k + i;
    value /= i;
  }
  return value;
}

EquivalenceCheck DevianceSubsumptionEquivalence(const ProgramSpace& space,
                                                const KillMatrix& km,
                                                const std::string& mx,
                                                const std::string& my) {
  if (space.dimension() != km.test_count()) {
    throw ArgumentError("kill matrix and program space differ in dimension");
  }
  EquivalenceCheck check;
  if (mx == my) return check;
  check.subsumes = DynamicallySubsumes(km, mx, my);

  const BitVector origin(space.dimension(), 0);
  const BitVector x = PositionOf(space, mx).bits;
  const BitVector y = PositionOf(space, my).bits;
  const bool origin_to_x = DeviantDimensions(origin, x).has_value();
  const bool x_to_y = x == y || DeviantDimensions(x, y).has_value();
  check.deviance_path_holds = origin_to_x && x_to_y;
  return check;
}

}  // namespace mutspace
