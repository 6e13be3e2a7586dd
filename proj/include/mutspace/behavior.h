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

#ifndef MUTSPACE_BEHAVIOR_H_
#define MUTSPACE_BEHAVIOR_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mutspace {

enum class Status { kNormal, kError, kTimeout };

std::string_view ToString(Status status);
// Throws ArgumentError for anything other than "normal", "error", "timeout".
Status ParseStatus(std::string_view text);

struct TraceEntry {
  std::string statement;
  std::string state;

  bool operator==(const TraceEntry&) const = default;
};

// What one program did on one test. Immutable once placed in a matrix.
struct BehaviorToken {
  std::string output;
  std::optional<std::vector<TraceEntry>> trace;
  Status status = Status::kNormal;

  bool operator==(const BehaviorToken&) const = default;
};

// Ordered list of unique test identifiers.
class TestVector {
 public:
  TestVector() = default;
  // Throws ArgumentError on a duplicate identifier.
  explicit TestVector(std::vector<std::string> ids);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::string& operator[](std::size_t i) const { return ids_[i]; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<std::string>& ids() const { return ids_; }

  bool Contains(const std::string& id) const { return index_.contains(id); }
  // Throws LookupError.
  std::size_t IndexOf(const std::string& id) const;

  // First `k` tests; k is clamped to size().
  TestVector Prefix(std::size_t k) const;

  bool operator==(const TestVector& other) const { return ids_ == other.ids_; }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class Role { kNone, kSpec, kOriginal, kMutant };

std::string_view ToString(Role role);

struct ProgramInfo {
  std::string id;
  Role role = Role::kNone;
  // For mutants: the program they were derived from.
  std::optional<std::string> origin;
  // For mutants: the statement the mutation sits in.
  std::optional<std::string> statement;

  bool operator==(const ProgramInfo&) const = default;
};

// Total map (program, test) -> token. Totality is enforced by construction:
// a program can only be added together with one token per test.
class BehaviorMatrix {
 public:
  BehaviorMatrix() = default;
  explicit BehaviorMatrix(TestVector tests) : tests_(std::move(tests)) {}

  // Throws ArgumentError if the id is taken or the row length is wrong, and
  // RoleError if a second spec or original program is added.
  void AddProgram(ProgramInfo info, std::vector<BehaviorToken> row);

  const TestVector& tests() const { return tests_; }
  const std::vector<ProgramInfo>& programs() const { return programs_; }
  std::size_t program_count() const { return programs_.size(); }

  bool HasProgram(const std::string& id) const {
    return program_index_.contains(id);
  }
  // Throws LookupError.
  std::size_t ProgramIndex(const std::string& id) const;
  const ProgramInfo& Program(const std::string& id) const {
    return programs_[ProgramIndex(id)];
  }

  // Throws LookupError naming whichever id is missing.
  const BehaviorToken& Cell(const std::string& program,
                            const std::string& test) const;
  const BehaviorToken& Cell(std::size_t program, std::size_t test) const {
    return rows_[program][test];
  }
  const std::vector<BehaviorToken>& Row(std::size_t program) const {
    return rows_[program];
  }

  std::optional<std::string> SpecId() const;
  std::optional<std::string> OriginalId() const;
  // Mutant ids in insertion order.
  std::vector<std::string> MutantIds() const;

  bool operator==(const BehaviorMatrix& other) const {
    return tests_ == other.tests_ && programs_ == other.programs_ &&
           rows_ == other.rows_;
  }

 private:
  TestVector tests_;
  std::vector<ProgramInfo> programs_;
  std::vector<std::vector<BehaviorToken>> rows_;
  std::unordered_map<std::string, std::size_t> program_index_;
};

// JSON codec. Output is canonical (programs and tests in matrix order, two
// space indent), so ToJson(FromJson(ToJson(m))) is byte-identical to
// ToJson(m). FromJson throws SchemaError with the offending path.
std::string BehaviorMatrixToJson(const BehaviorMatrix& matrix);
BehaviorMatrix BehaviorMatrixFromJson(std::string_view text);

}  // namespace mutspace

#endif  // MUTSPACE_BEHAVIOR_H_
