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

#ifndef MUTSPACE_MUTLANG_AST_H_
#define MUTSPACE_MUTLANG_AST_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mutspace::mutlang {

using Integer = boost::multiprecision::cpp_int;

enum class BinaryOp {
  kAdd, kSub, kMul, kDiv, kMod,  // arithmetic
  kLt, kLe, kGt, kGe, kEq, kNe,  // relational
  kAnd, kOr,                     // logical
};

enum class UnaryOp { kNeg, kNot };

std::string_view Spelling(BinaryOp op);
std::string_view Spelling(UnaryOp op);
bool IsArithmetic(BinaryOp op);
bool IsRelational(BinaryOp op);
bool IsLogical(BinaryOp op);

struct SourceSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
  int line = 1;
  int column = 1;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression node. Mutants share every subtree they do not touch.
struct Expr {
  enum class Kind { kLiteral, kVariable, kUnary, kBinary };

  Kind kind = Kind::kLiteral;
  Integer value;       // kLiteral
  std::string name;    // kVariable
  UnaryOp unary_op = UnaryOp::kNeg;
  BinaryOp binary_op = BinaryOp::kAdd;
  ExprPtr lhs;         // kUnary operand, kBinary left
  ExprPtr rhs;         // kBinary right
  // The literal, identifier or operator token.
  SourceSpan token;
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;
using Block = std::vector<StmtPtr>;

struct Stmt {
  enum class Kind { kAssign, kIf, kWhile, kReturn };

  Kind kind = Kind::kAssign;
  // Preorder number, starting at 1. Kept by mutants.
  int id = 0;
  std::string target;  // kAssign
  ExprPtr expr;        // assigned value, condition, or returned value
  Block body;          // then-branch or loop body
  Block else_body;
  bool has_else = false;
  // Whole statement, from its first token through its closing ';' or '}'.
  SourceSpan span;
};

struct Program {
  std::string source;
  Block body;
  int statement_count = 0;
};

// "s<id>", the statement id used in traces and behavior matrices.
std::string StatementLabel(int id);

// Canonical, fully parenthesized rendering without statement ids. Two
// programs with equal renderings have the same structure.
std::string Render(const Program& program);
std::string Render(const Expr& expr);

}  // namespace mutspace::mutlang

#endif  // MUTSPACE_MUTLANG_AST_H_
