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

#include "mutspace/progspace.h"

#include "mutspace/errors.h"

namespace mutspace {

ProgramSpace::ProgramSpace(TestVector tests, std::string origin,
                           Differentiator d, const BehaviorMatrix& matrix)
    : tests_(std::move(tests)),
      origin_(std::move(origin)),
      d_(std::move(d)),
      matrix_(&matrix) {
  matrix.ProgramIndex(origin_);
  for (const auto& test : tests_) {
    matrix.tests().IndexOf(test);
  }
}

Position PositionOf(const ProgramSpace& space, const std::string& program) {
  DVector v = MakeDVector(space.differentiator(), space.tests(),
                          space.origin(), program, space.matrix());
  return Position{std::move(v.bits), program};
}

std::vector<std::string> DistinguishingDimensions(const ProgramSpace& space,
                                                  const std::string& px,
                                                  const std::string& py) {
  const Position x = PositionOf(space, px);
  const Position y = PositionOf(space, py);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    if (x.bits[i] != y.bits[i]) out.push_back(space.tests()[i]);
  }
  return out;
}

std::optional<std::vector<std::string>> CoincidenceCounterexample(
    const ProgramSpace& space, const std::string& px, const std::string& py) {
  const Position x = PositionOf(space, px);
  const Position y = PositionOf(space, py);
  const DVector between = MakeDVector(space.differentiator(), space.tests(),
                                      px, py, space.matrix());
  std::vector<std::string> witnesses;
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    if (x.bits[i] == y.bits[i] && between.bits[i]) {
      witnesses.push_back(space.tests()[i]);
    }
  }
  if (witnesses.empty()) return std::nullopt;
  return witnesses;
}

}  // namespace mutspace
