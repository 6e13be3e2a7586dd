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

#ifndef MUTSPACE_PROGSPACE_H_
#define MUTSPACE_PROGSPACE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mutspace/behavior.h"
#include "mutspace/diffcore.h"

namespace mutspace {

// Coordinate system induced by (tests, origin, differentiator) over a
// behavior matrix. Positions are computed on demand from the matrix; the
// space holds a reference to it, so the matrix must outlive the space.
class ProgramSpace {
 public:
  // Throws LookupError if the origin or any test is not in the matrix.
  ProgramSpace(TestVector tests, std::string origin, Differentiator d,
               const BehaviorMatrix& matrix);

  const TestVector& tests() const { return tests_; }
  const std::string& origin() const { return origin_; }
  const Differentiator& differentiator() const { return d_; }
  const BehaviorMatrix& matrix() const { return *matrix_; }
  std::size_t dimension() const { return tests_.size(); }

  // Same space restricted to a different test vector.
  ProgramSpace WithTests(TestVector tests) const {
    return ProgramSpace(std::move(tests), origin_, d_, *matrix_);
  }

  // Spaces are identified by their (tests, origin, differentiator) triple.
  bool operator==(const ProgramSpace& other) const {
    return tests_ == other.tests_ && origin_ == other.origin_ &&
           d_ == other.d_;
  }

 private:
  TestVector tests_;
  std::string origin_;
  Differentiator d_;
  const BehaviorMatrix* matrix_;
};

struct Position {
  BitVector bits;
  std::string subject;
};

Position PositionOf(const ProgramSpace& space, const std::string& program);

inline std::size_t DistanceFromOrigin(const Position& position) {
  return ManhattanNorm(position.bits);
}

// Tests on which the two positions differ. Each of them is a test on which
// the programs themselves differ.
std::vector<std::string> DistinguishingDimensions(const ProgramSpace& space,
                                                  const std::string& px,
                                                  const std::string& py);

// Tests on which the two positions agree although the programs differ, i.e.
// witnesses that sharing a position does not mean sharing behavior. Empty
// optional when there are none.
std::optional<std::vector<std::string>> CoincidenceCounterexample(
    const ProgramSpace& space, const std::string& px, const std::string& py);

}  // namespace mutspace

#endif  // MUTSPACE_PROGSPACE_H_
