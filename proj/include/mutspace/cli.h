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

#ifndef MUTSPACE_CLI_H_
#define MUTSPACE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace mutspace::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,      // a property check found a counterexample
  kInputError = 2,   // unreadable file, syntax or schema error, bad flag
  kRoleError = 3,    // a required program role is missing
  kCapacityError = 4 // explicit lattice above the size limit
};

// Environment variable holding the default step budget for `run`/`mbfl`.
inline constexpr const char* kBudgetEnv = "MUTSPACE_BUDGET";

// Runs one command line (without the program name). Normal output goes to
// `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mutspace::cli

#endif  // MUTSPACE_CLI_H_
