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

#ifndef MUTSPACE_ERRORS_H_
#define MUTSPACE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mutspace {

// Unknown program, test, or mutant identifier.
class LookupError : public std::out_of_range {
 public:
  explicit LookupError(const std::string& id)
      : std::out_of_range("unknown id '" + id + "'"), id_(id) {}

  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// A program lacks (or duplicates) a role an operation depends on.
class RoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structured input that does not match its schema. `path` is a JSON-pointer
// style location of the offending field ("/cells/m1/t2/status").
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Explicit construction requested beyond a configured size limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Invalid argument to an analysis (dimension mismatch, unknown metric, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mutspace

#endif  // MUTSPACE_ERRORS_H_
