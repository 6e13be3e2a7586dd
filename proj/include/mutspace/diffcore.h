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

#ifndef MUTSPACE_DIFFCORE_H_
#define MUTSPACE_DIFFCORE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mutspace/behavior.h"

namespace mutspace {

using BitVector = std::vector<std::uint8_t>;

// How two behavior tokens are judged different.
//
// Every policy is symmetric and maps (b, b) to "same". A user-supplied
// policy has to keep both properties; the analyses in progspace, lattice and
// mbfl rely on them (d(t, p_s, p_o) is read interchangeably with
// d(t, p_o, p_s)).
class Differentiator {
 public:
  enum class Policy {
    kExact,    // output, trace and status all equal
    kOutput,   // strong mutation: output text and status
    kTrace,    // weak mutation: execution trace and status
    kNumeric,  // output compared as decimals within epsilon
  };

  Differentiator() = default;
  explicit Differentiator(Policy policy, double epsilon = 0.0);

  // Accepts "exact", "output", "trace", "numeric". Throws ArgumentError on
  // anything else, or on a negative / non-finite epsilon.
  static Differentiator FromName(std::string_view name, double epsilon = 0.0);

  Policy policy() const { return policy_; }
  double epsilon() const { return epsilon_; }
  // "exact", "output", "trace" or "numeric(<epsilon>)".
  const std::string& id() const { return id_; }

  bool Differ(const BehaviorToken& a, const BehaviorToken& b) const;

  bool operator==(const Differentiator& other) const {
    return policy_ == other.policy_ && epsilon_ == other.epsilon_;
  }

 private:
  Policy policy_ = Policy::kExact;
  double epsilon_ = 0.0;
  std::string id_ = "exact";
};

// Behavioral differences between `left` and `right` over `tests`.
struct DVector {
  BitVector bits;
  TestVector tests;
  std::string left;
  std::string right;
  std::string differentiator;
};

// 1 iff the tokens of px and py on test t differ under d. Throws LookupError
// naming the missing id.
std::uint8_t Differentiate(const Differentiator& d, const std::string& test,
                           const std::string& px, const std::string& py,
                           const BehaviorMatrix& matrix);

DVector MakeDVector(const Differentiator& d, const TestVector& tests,
                    const std::string& px, const std::string& py,
                    const BehaviorMatrix& matrix);

std::size_t ManhattanNorm(const BitVector& bits);
inline std::size_t ManhattanNorm(const DVector& v) {
  return ManhattanNorm(v.bits);
}

std::string BitString(const BitVector& bits);

// Pass/fail oracle induced by a differentiator and a spec program: a program
// passes t iff it is not different from the spec on t. Holds a reference to
// the matrix, which must outlive it.
class DerivedOracle {
 public:
  // Throws LookupError if `spec` is not in the matrix.
  DerivedOracle(Differentiator d, std::string spec,
                const BehaviorMatrix& matrix);

  bool Passes(const std::string& test, const std::string& program) const {
    return Differentiate(d_, test, program, spec_, *matrix_) == 0;
  }
  bool operator()(const std::string& test, const std::string& program) const {
    return Passes(test, program);
  }

 private:
  Differentiator d_;
  std::string spec_;
  const BehaviorMatrix* matrix_;
};

struct AdequacyResult {
  bool adequate = true;
  std::vector<std::string> live;
  // Killed mutant -> earliest killing test in vector order; mutant order.
  std::vector<std::pair<std::string, std::string>> killers;
};

// Every mutant is killed by some test of `tests`. An empty mutant list is
// vacuously adequate.
AdequacyResult MutationAdequacy(const Differentiator& d,
                                const TestVector& tests,
                                const std::string& original,
                                const std::vector<std::string>& mutants,
                                const BehaviorMatrix& matrix);

}  // namespace mutspace

#endif  // MUTSPACE_DIFFCORE_H_
