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

#ifndef MUTSPACE_WORKED_EXAMPLES_H_
#define MUTSPACE_WORKED_EXAMPLES_H_

#include "mutspace/behavior.h"
#include "mutspace/subsumption.h"

namespace mutspace {

// Three programs over t1..t4 with behaviors abstracted to single letters:
//   ps = a a a a,  po = a b b b,  m = a b c a
// (ids "ps" spec, "po" original, "m" mutant).
BehaviorMatrix RunningExampleMatrix();

// Four mutants, three tests:
//        m1 m2 m3 m4
//   t1    1  0  1  1
//   t2    0  1  0  1
//   t3    0  1  1  1
KillMatrix SubsumptionExampleKillMatrix();

// A behavior matrix whose kill matrix (origin "po", output policy) is
// exactly `km`: the original outputs "o" everywhere, a mutant outputs
// "o" where it survives and "<mutant>@<test>" where it is killed, so two
// killed mutants never share a token.
BehaviorMatrix SynthesizeBehaviorMatrix(const KillMatrix& km);

}  // namespace mutspace

#endif  // MUTSPACE_WORKED_EXAMPLES_H_
