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

#include "mutspace/mutlang/ast.h"

namespace mutspace::mutlang {

namespace {

void RenderBlock(const Block& block, int depth, std::string& out);

void RenderStmt(const Stmt& stmt, int depth, std::string& out) {
  out.append(2 * depth, ' ');
  switch (stmt.kind) {
    case Stmt::Kind::kAssign:
      out += stmt.target + " = " + Render(*stmt.expr) + ";\n";
      break;
    case Stmt::Kind::kReturn:
      out += "return " + Render(*stmt.expr) + ";\n";
      break;
    case Stmt::Kind::kIf:
      out += "if " + Render(*stmt.expr) + " {\n";
      RenderBlock(stmt.body, depth + 1, out);
      out.append(2 * depth, ' ');
      out += "}";
      if (stmt.has_else) {
        out += " else {\n";
        RenderBlock(stmt.else_body, depth + 1, out);
        out.append(2 * depth, ' ');
        out += "}";
      }
      out += "\n";
      break;
    case Stmt::Kind::kWhile:
      out += "while " + Render(*stmt.expr) + " {\n";
      RenderBlock(stmt.body, depth + 1, out);
      out.append(2 * depth, ' ');
      out += "}\n";
      break;
  }
}

void RenderBlock(const Block& block, int depth, std::string& out) {
  for (const auto& stmt : block) RenderStmt(*stmt, depth, out);
}

}  // namespace

std::string_view Spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kAnd: return "&&";
    case BinaryOp::kOr: return "||";
  }
  return "?";
}

std::string_view Spelling(UnaryOp op) {
  return op == UnaryOp::kNeg ? "-" : "!";
}

bool IsArithmetic(BinaryOp op) {
  return op == BinaryOp::kAdd || op == BinaryOp::kSub ||
         op == BinaryOp::kMul || op == BinaryOp::kDiv || op == BinaryOp::kMod;
}

bool IsRelational(BinaryOp op) {
  return op == BinaryOp::kLt || op == BinaryOp::kLe || op == BinaryOp::kGt ||
         op == BinaryOp::kGe || op == BinaryOp::kEq || op == BinaryOp::kNe;
}

bool IsLogical(BinaryOp op) {
  return op == BinaryOp::kAnd || op == BinaryOp::kOr;
}

std::string StatementLabel(int id) { return "s" + std::to_string(id); }

std::string Render(const Expr& expr) {
  switch (expr.kind) {
    case Expr::Kind::kLiteral:
      // Negative literals only come from constant replacement; render them
      // like the unary minus they parse back as.
      if (expr.value < 0) return "(-" + Integer(-expr.value).str() + ")";
      return expr.value.str();
    case Expr::Kind::kVariable:
      return expr.name;
    case Expr::Kind::kUnary:
      return "(" + std::string(Spelling(expr.unary_op)) + Render(*expr.lhs) +
             ")";
    case Expr::Kind::kBinary:
      return "(" + Render(*expr.lhs) + " " +
             std::string(Spelling(expr.binary_op)) + " " + Render(*expr.rhs) +
             ")";
  }
  return "";
}

std::string Render(const Program& program) {
  std::string out;
  RenderBlock(program.body, 0, out);
  return out;
}

}  // namespace mutspace::mutlang
