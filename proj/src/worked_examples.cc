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

#include "mutspace/worked_examples.h"

#include <string>
#include <vector>

namespace mutspace {

namespace {

std::vector<BehaviorToken> Row(const std::vector<std::string>& outputs) {
  std::vector<BehaviorToken> row;
  for (const auto& output : outputs) row.push_back({output, {}, Status::kNormal});
  return row;
}

}  // namespace

BehaviorMatrix RunningExampleMatrix() {
  BehaviorMatrix bm(TestVector({"t1", "t2", "t3", "t4"}));
  bm.AddProgram({"ps", Role::kSpec, {}, {}}, Row({"a", "a", "a", "a"}));
  bm.AddProgram({"po", Role::kOriginal, {}, {}}, Row({"a", "b", "b", "b"}));
  bm.AddProgram({"m", Role::kMutant, "po", {}}, Row({"a", "b", "c", "a"}));
  return bm;
}

KillMatrix SubsumptionExampleKillMatrix() {
  return KillMatrix(TestVector({"t1", "t2", "t3"}), {"m1", "m2", "m3", "m4"},
                    {{1, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}});
}

BehaviorMatrix SynthesizeBehaviorMatrix(const KillMatrix& km) {
  BehaviorMatrix bm(km.tests());
  bm.AddProgram({"po", Role::kOriginal, {}, {}},
                Row(std::vector<std::string>(km.test_count(), "o")));
  for (std::size_t j = 0; j < km.mutant_count(); ++j) {
    const std::string& mutant = km.mutants()[j];
    std::vector<std::string> outputs;
    for (std::size_t i = 0; i < km.test_count(); ++i) {
      outputs.push_back(km.Bit(i, j) ? mutant + "@" + km.tests()[i] : "o");
    }
    bm.AddProgram({mutant, Role::kMutant, "po", {}}, Row(outputs));
  }
  return bm;
}

}  // namespace mutspace
