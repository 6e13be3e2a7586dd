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

#ifndef MUTSPACE_SUBSUMPTION_H_
#define MUTSPACE_SUBSUMPTION_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mutspace/behavior.h"
#include "mutspace/diffcore.h"
#include "mutspace/progspace.h"

namespace mutspace {

// bits(i, j) = d(t_i, p_o, m_j). Stored column-major: a column is the
// mutant's position in the space anchored at the original program.
class KillMatrix {
 public:
  KillMatrix() = default;
  // Throws ArgumentError on duplicate mutant ids, ragged or non-binary columns.
  KillMatrix(TestVector tests, std::vector<std::string> mutants,
             std::vector<BitVector> columns);

  const TestVector& tests() const { return tests_; }
  const std::vector<std::string>& mutants() const { return mutants_; }
  std::size_t test_count() const { return tests_.size(); }
  std::size_t mutant_count() const { return mutants_.size(); }

  // Throws LookupError.
  std::size_t MutantIndex(const std::string& mutant) const;
  const BitVector& Column(std::size_t j) const { return columns_[j]; }
  const BitVector& Column(const std::string& mutant) const {
    return columns_[MutantIndex(mutant)];
  }
  std::uint8_t Bit(std::size_t test, std::size_t mutant) const {
    return columns_[mutant][test];
  }

  bool operator==(const KillMatrix& other) const {
    return tests_ == other.tests_ && mutants_ == other.mutants_ &&
           columns_ == other.columns_;
  }

 private:
  TestVector tests_;
  std::vector<std::string> mutants_;
  std::vector<BitVector> columns_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Columns are the mutants' positions in `space`, whose origin must carry the
// original role (RoleError otherwise).
KillMatrix MakeKillMatrix(const ProgramSpace& space,
                          const std::vector<std::string>& mutants);

// CSV layout: header `test,m1,m2,...`, then one `t_i,0,1,...` row per test.
std::string KillMatrixToCsv(const KillMatrix& km);
// Throws SchemaError with a "/<line>/<column>" path (both 1-based).
KillMatrix KillMatrixFromCsv(std::string_view text);

// mx is killed by some test and every test killing mx also kills my.
// False for mx == my.
bool DynamicallySubsumes(const KillMatrix& km, const std::string& mx,
                         const std::string& my);

// Mutants sharing one nonzero kill column.
struct MutantClass {
  std::vector<std::string> members;
  BitVector column;
};

// Dynamic mutant subsumption graph over killed mutants. Classes are ordered
// by their first member's column index; an edge (x, y) means class x
// strictly subsumes class y.
struct Dmsg {
  std::vector<MutantClass> classes;
  // Transitive reduction, for display.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  // Transitive closure, for queries.
  std::vector<std::pair<std::size_t, std::size_t>> closure;
  // Never-killed mutants; not part of the graph.
  std::vector<std::string> live;

  std::vector<std::size_t> Roots() const;
};

Dmsg BuildDmsg(const KillMatrix& km);
std::string DmsgToDot(const Dmsg& dmsg);

struct MinimalSetResult {
  // One representative (lowest column index) per root class.
  std::vector<std::string> minimal;
  std::vector<MutantClass> roots;
  std::vector<std::string> live;
  // |minimal| / |killed mutants|; 0 when nothing is killed.
  double reduction_ratio = 0.0;
};

MinimalSetResult MinimalMutantSet(const KillMatrix& km);

// Largest possible minimal mutant set for n tests: the width of the
// n-dimensional hypercube, binomial(n, floor(n/2)). 1 for n = 0.
boost::multiprecision::cpp_int MaxMinimalSize(std::size_t n);

struct EquivalenceCheck {
  // origin -> mx -> my along deviance edges (my may equal mx's position).
  bool deviance_path_holds = false;
  bool subsumes = false;
};

// Evaluates both sides of the deviance/subsumption correspondence: the
// deviance side from positions in `space`, the subsumption side from `km`.
// Throws ArgumentError if the two disagree on dimension.
EquivalenceCheck DevianceSubsumptionEquivalence(const ProgramSpace& space,
                                                const KillMatrix& km,
                                                const std::string& mx,
                                                const std::string& my);

}  // namespace mutspace

#endif  // MUTSPACE_SUBSUMPTION_H_
