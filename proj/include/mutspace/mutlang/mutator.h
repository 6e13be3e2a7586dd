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

#ifndef MUTSPACE_MUTLANG_MUTATOR_H_
#define MUTSPACE_MUTLANG_MUTATOR_H_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mutspace/mutlang/ast.h"

namespace mutspace::mutlang {

// Declaration order is the tie-break order within one site.
enum class Operator {
  kAor,  // arithmetic operator replacement
  kRor,  // relational operator replacement
  kLcr,  // logical connector replacement
  kCrp,  // constant replacement: c+1, c-1, 0
  kSdl,  // statement deletion
};

std::string_view ToString(Operator op);
// Case-insensitive; throws std::invalid_argument for unknown names.
Operator ParseOperator(std::string_view name);
// Comma separated list; empty text selects every operator.
std::set<Operator> ParseOperatorList(std::string_view text);
const std::set<Operator>& AllOperators();

// One textual substitution in the original source.
struct MutantDescriptor {
  std::string id;
  Operator op = Operator::kAor;
  int statement = 0;
  std::size_t offset = 0;
  std::size_t length = 0;
  std::string original;
  std::string replacement;
};

struct Mutant {
  MutantDescriptor descriptor;
  // Same statement ids as the original.
  Program program;
};

// The source text of the mutant the descriptor describes.
std::string ApplyDescriptor(std::string_view source,
                            const MutantDescriptor& descriptor);

// Every first-order mutant for the selected operators, ordered by statement
// id, then site offset, then operator. Ids are m1, m2, ... in that order.
std::vector<Mutant> MutateAll(const Program& program,
                              const std::set<Operator>& operators = AllOperators());

}  // namespace mutspace::mutlang

#endif  // MUTSPACE_MUTLANG_MUTATOR_H_
