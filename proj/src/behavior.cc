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

#include "mutspace/behavior.h"

#include <string>
#include <utility>

#include "json.hpp"
#include "mutspace/errors.h"

namespace mutspace {

namespace {

using Json = nlohmann::ordered_json;

std::string Escape(const std::string& token) {
  // JSON-pointer escaping: '~' -> "~0", '/' -> "~1".
  std::string out;
  for (char c : token) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

const Json& Field(const Json& object, const std::string& key,
                  const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw SchemaError(path + "/" + Escape(key), "missing required field");
  }
  return *it;
}

const std::string& AsString(const Json& value, const std::string& path) {
  if (!value.is_string()) {
    throw SchemaError(path, "expected a string");
  }
  return value.get_ref<const std::string&>();
}

Role ParseRole(const Json& value, const std::string& path) {
  const std::string& text = AsString(value, path);
  if (text == "spec") return Role::kSpec;
  if (text == "original") return Role::kOriginal;
  if (text == "mutant") return Role::kMutant;
  throw SchemaError(path, "role must be one of spec, original, mutant");
}

BehaviorToken ParseToken(const Json& cell, const std::string& path) {
  if (!cell.is_object()) {
    throw SchemaError(path, "expected an object");
  }
  BehaviorToken token;
  token.output = AsString(Field(cell, "output", path), path + "/output");
  const std::string status_path = path + "/status";
  try {
    token.status = ParseStatus(AsString(Field(cell, "status", path), status_path));
  } catch (const ArgumentError& e) {
    throw SchemaError(status_path, e.what());
  }
  if (auto it = cell.find("trace"); it != cell.end()) {
    const std::string trace_path = path + "/trace";
    if (!it->is_array()) {
      throw SchemaError(trace_path, "expected an array");
    }
    std::vector<TraceEntry> trace;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string entry_path = trace_path + "/" + std::to_string(i);
      const Json& entry = (*it)[i];
      if (!entry.is_array() || entry.size() != 2) {
        throw SchemaError(entry_path,
                          "expected a [statement, state] pair");
      }
      trace.push_back({AsString(entry[0], entry_path + "/0"),
                       AsString(entry[1], entry_path + "/1")});
    }
    token.trace = std::move(trace);
  }
  for (const auto& [key, unused] : cell.items()) {
    if (key != "output" && key != "status" && key != "trace") {
      throw SchemaError(path + "/" + Escape(key), "unexpected field");
    }
  }
  return token;
}

}  // namespace

std::string_view ToString(Status status) {
  switch (status) {
    case Status::kNormal:
      return "normal";
    case Status::kError:
      return "error";
    case Status::kTimeout:
      return "timeout";
  }
  return "normal";
}

Status ParseStatus(std::string_view text) {
  if (text == "normal") return Status::kNormal;
  if (text == "error") return Status::kError;
  if (text == "timeout") return Status::kTimeout;
  throw ArgumentError("status must be one of normal, error, timeout");
}

std::string_view ToString(Role role) {
  switch (role) {
    case Role::kNone:
      return "none";
    case Role::kSpec:
      return "spec";
    case Role::kOriginal:
      return "original";
    case Role::kMutant:
      return "mutant";
  }
  return "none";
}

TestVector::TestVector(std::vector<std::string> ids) : ids_(std::move(ids)) {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw ArgumentError("duplicate test id '" + ids_[i] + "'");
    }
  }
}

std::size_t TestVector::IndexOf(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw LookupError(id);
  }
  return it->second;
}

TestVector TestVector::Prefix(std::size_t k) const {
  if (k >= ids_.size()) {
    return *this;
  }
  return TestVector(std::vector<std::string>(ids_.begin(), ids_.begin() + k));
}

void BehaviorMatrix::AddProgram(ProgramInfo info,
                                std::vector<BehaviorToken> row) {
  if (program_index_.contains(info.id)) {
    throw ArgumentError("duplicate program id '" + info.id + "'");
  }
  if (row.size() != tests_.size()) {
    throw ArgumentError("program '" + info.id + "' has " +
                        std::to_string(row.size()) + " cells, expected " +
                        std::to_string(tests_.size()));
  }
  if (info.role == Role::kSpec && SpecId()) {
    throw RoleError("a spec program is already present ('" + *SpecId() +
                    "')");
  }
  if (info.role == Role::kOriginal && OriginalId()) {
    throw RoleError("an original program is already present ('" +
                    *OriginalId() + "')");
  }
  program_index_.emplace(info.id, programs_.size());
  programs_.push_back(std::move(info));
  rows_.push_back(std::move(row));
}

std::size_t BehaviorMatrix::ProgramIndex(const std::string& id) const {
  auto it = program_index_.find(id);
  if (it == program_index_.end()) {
    throw LookupError(id);
  }
  return it->second;
}

const BehaviorToken& BehaviorMatrix::Cell(const std::string& program,
                                          const std::string& test) const {
  const std::size_t p = ProgramIndex(program);
  return rows_[p][tests_.IndexOf(test)];
}

std::optional<std::string> BehaviorMatrix::SpecId() const {
  for (const auto& info : programs_) {
    if (info.role == Role::kSpec) return info.id;
  }
  return std::nullopt;
}

std::optional<std::string> BehaviorMatrix::OriginalId() const {
  for (const auto& info : programs_) {
    if (info.role == Role::kOriginal) return info.id;
  }
  return std::nullopt;
}

std::vector<std::string> BehaviorMatrix::MutantIds() const {
  std::vector<std::string> ids;
  for (const auto& info : programs_) {
    if (info.role == Role::kMutant) ids.push_back(info.id);
  }
  return ids;
}

std::string BehaviorMatrixToJson(const BehaviorMatrix& matrix) {
  Json root;
  root["tests"] = matrix.tests().ids();
  Json programs = Json::array();
  for (const auto& info : matrix.programs()) {
    Json entry;
    entry["id"] = info.id;
    if (info.role != Role::kNone) entry["role"] = ToString(info.role);
    if (info.origin) entry["origin"] = *info.origin;
    if (info.statement) entry["statement"] = *info.statement;
    programs.push_back(std::move(entry));
  }
  root["programs"] = std::move(programs);
  Json cells = Json::object();
  for (std::size_t p = 0; p < matrix.program_count(); ++p) {
    Json row = Json::object();
    for (std::size_t t = 0; t < matrix.tests().size(); ++t) {
      const BehaviorToken& token = matrix.Cell(p, t);
      Json cell;
      cell["output"] = token.output;
      if (token.trace) {
        Json trace = Json::array();
        for (const auto& entry : *token.trace) {
          trace.push_back(Json::array({entry.statement, entry.state}));
        }
        cell["trace"] = std::move(trace);
      }
      cell["status"] = ToString(token.status);
      row[matrix.tests()[t]] = std::move(cell);
    }
    cells[matrix.programs()[p].id] = std::move(row);
  }
  root["cells"] = std::move(cells);
  return root.dump(2) + "\n";
}

BehaviorMatrix BehaviorMatrixFromJson(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw SchemaError("", "expected a top-level object");
  }

  const Json& tests_json = Field(root, "tests", "");
  if (!tests_json.is_array()) {
    throw SchemaError("/tests", "expected an array");
  }
  std::vector<std::string> test_ids;
  for (std::size_t i = 0; i < tests_json.size(); ++i) {
    test_ids.push_back(AsString(tests_json[i], "/tests/" + std::to_string(i)));
  }
  TestVector tests;
  try {
    tests = TestVector(std::move(test_ids));
  } catch (const ArgumentError& e) {
    throw SchemaError("/tests", e.what());
  }

  const Json& programs_json = Field(root, "programs", "");
  if (!programs_json.is_array()) {
    throw SchemaError("/programs", "expected an array");
  }
  std::vector<ProgramInfo> infos;
  for (std::size_t i = 0; i < programs_json.size(); ++i) {
    const std::string path = "/programs/" + std::to_string(i);
    const Json& entry = programs_json[i];
    if (!entry.is_object()) {
      throw SchemaError(path, "expected an object");
    }
    ProgramInfo info;
    info.id = AsString(Field(entry, "id", path), path + "/id");
    if (auto it = entry.find("role"); it != entry.end()) {
      info.role = ParseRole(*it, path + "/role");
    }
    if (auto it = entry.find("origin"); it != entry.end()) {
      info.origin = AsString(*it, path + "/origin");
    }
    if (auto it = entry.find("statement"); it != entry.end()) {
      info.statement = AsString(*it, path + "/statement");
    }
    for (const auto& [key, unused] : entry.items()) {
      if (key != "id" && key != "role" && key != "origin" &&
          key != "statement") {
        throw SchemaError(path + "/" + Escape(key), "unexpected field");
      }
    }
    infos.push_back(std::move(info));
  }

  const Json& cells = Field(root, "cells", "");
  if (!cells.is_object()) {
    throw SchemaError("/cells", "expected an object");
  }
  BehaviorMatrix matrix(tests);
  for (std::size_t i = 0; i < infos.size(); ++i) {
    const std::string row_path = "/cells/" + Escape(infos[i].id);
    auto row_it = cells.find(infos[i].id);
    if (row_it == cells.end()) {
      throw SchemaError(row_path, "missing row for program");
    }
    if (!row_it->is_object()) {
      throw SchemaError(row_path, "expected an object");
    }
    std::vector<BehaviorToken> row;
    for (const auto& test : tests) {
      const std::string cell_path = row_path + "/" + Escape(test);
      auto cell_it = row_it->find(test);
      if (cell_it == row_it->end()) {
        throw SchemaError(cell_path, "missing cell");
      }
      row.push_back(ParseToken(*cell_it, cell_path));
    }
    if (row_it->size() != tests.size()) {
      for (const auto& [key, unused] : row_it->items()) {
        if (!tests.Contains(key)) {
          throw SchemaError(row_path + "/" + Escape(key), "unknown test id");
        }
      }
    }
    try {
      matrix.AddProgram(infos[i], std::move(row));
    } catch (const ArgumentError& e) {
      throw SchemaError("/programs/" + std::to_string(i) + "/id", e.what());
    } catch (const RoleError& e) {
      throw SchemaError("/programs/" + std::to_string(i) + "/role", e.what());
    }
  }
  for (const auto& [key, unused] : cells.items()) {
    if (!matrix.HasProgram(key)) {
      throw SchemaError("/cells/" + Escape(key), "unknown program id");
    }
  }
  return matrix;
}

}  // namespace mutspace
