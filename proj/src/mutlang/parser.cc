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

#include "mutspace/mutlang/parser.h"

#include <cctype>
#include <utility>
#include <vector>

namespace mutspace::mutlang {

namespace {

enum class TokenKind {
  kInteger, kIdentifier, kIf, kElse, kWhile, kReturn,
  kLParen, kRParen, kLBrace, kRBrace, kSemicolon, kAssign,
  kPlus, kMinus, kStar, kSlash, kPercent,
  kLt, kLe, kGt, kGe, kEq, kNe, kAndAnd, kOrOr, kBang,
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string text;
  SourceSpan span;
};

std::vector<Token> Lex(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  int line = 1;
  int column = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (source[pos] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++pos;
    }
  };
  auto emit = [&](TokenKind kind, std::size_t length) {
    tokens.push_back({kind, std::string(source.substr(pos, length)),
                      SourceSpan{pos, length, line, column}});
    advance(length);
  };

  while (pos < source.size()) {
    const char c = source[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && pos + 1 < source.size() && source[pos + 1] == '/') {
      while (pos < source.size() && source[pos] != '\n') advance(1);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos;
      while (end < source.size() &&
             std::isdigit(static_cast<unsigned char>(source[end]))) {
        ++end;
      }
      emit(TokenKind::kInteger, end - pos);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos;
      while (end < source.size() &&
             (std::isalnum(static_cast<unsigned char>(source[end])) ||
              source[end] == '_')) {
        ++end;
      }
      const std::string_view word = source.substr(pos, end - pos);
      TokenKind kind = TokenKind::kIdentifier;
      if (word == "if") kind = TokenKind::kIf;
      if (word == "else") kind = TokenKind::kElse;
      if (word == "while") kind = TokenKind::kWhile;
      if (word == "return") kind = TokenKind::kReturn;
      emit(kind, end - pos);
      continue;
    }
    const char next = pos + 1 < source.size() ? source[pos + 1] : '\0';
    switch (c) {
      case '(': emit(TokenKind::kLParen, 1); continue;
      case ')': emit(TokenKind::kRParen, 1); continue;
      case '{': emit(TokenKind::kLBrace, 1); continue;
      case '}': emit(TokenKind::kRBrace, 1); continue;
      case ';': emit(TokenKind::kSemicolon, 1); continue;
      case '+': emit(TokenKind::kPlus, 1); continue;
      case '-': emit(TokenKind::kMinus, 1); continue;
      case '*': emit(TokenKind::kStar, 1); continue;
      case '/': emit(TokenKind::kSlash, 1); continue;
      case '%': emit(TokenKind::kPercent, 1); continue;
      case '<':
        next == '=' ? emit(TokenKind::kLe, 2) : emit(TokenKind::kLt, 1);
        continue;
      case '>':
        next == '=' ? emit(TokenKind::kGe, 2) : emit(TokenKind::kGt, 1);
        continue;
      case '=':
        next == '=' ? emit(TokenKind::kEq, 2) : emit(TokenKind::kAssign, 1);
        continue;
      case '!':
        next == '=' ? emit(TokenKind::kNe, 2) : emit(TokenKind::kBang, 1);
        continue;
      case '&':
        if (next == '&') {
          emit(TokenKind::kAndAnd, 2);
          continue;
        }
        break;
      case '|':
        if (next == '|') {
          emit(TokenKind::kOrOr, 2);
          continue;
        }
        break;
      default:
        break;
    }
    throw SyntaxError(line, column,
                      "unexpected character '" + std::string(1, c) + "'");
  }
  tokens.push_back({TokenKind::kEnd, "", SourceSpan{pos, 0, line, column}});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::string_view source) : tokens_(Lex(source)) {}

  Program ParseProgram() {
    Program program;
    while (Peek().kind != TokenKind::kEnd) {
      if (Peek().kind == TokenKind::kRBrace) {
        Fail(Peek(), "unexpected '}' without a matching '{'");
      }
      program.body.push_back(ParseStatement());
    }
    program.statement_count = next_id_ - 1;
    return program;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Take() { return tokens_[pos_++]; }

  [[noreturn]] void Fail(const Token& at, const std::string& message) const {
    throw SyntaxError(at.span.line, at.span.column, message);
  }

  const Token& Expect(TokenKind kind, const char* what) {
    if (Peek().kind != kind) {
      const std::string found =
          Peek().kind == TokenKind::kEnd ? "end of input" : "'" + Peek().text + "'";
      Fail(Peek(), std::string("expected ") + what + ", found " + found);
    }
    return Take();
  }

  static SourceSpan Join(const SourceSpan& first, const SourceSpan& last) {
    SourceSpan span = first;
    span.length = last.offset + last.length - first.offset;
    return span;
  }

  StmtPtr ParseStatement() {
    auto stmt = std::make_shared<Stmt>();
    stmt->id = next_id_++;
    const Token& first = Peek();
    switch (first.kind) {
      case TokenKind::kIdentifier: {
        stmt->kind = Stmt::Kind::kAssign;
        stmt->target = Take().text;
        Expect(TokenKind::kAssign, "'='");
        stmt->expr = ParseExpr();
        stmt->span = Join(first.span, Expect(TokenKind::kSemicolon, "';'").span);
        break;
      }
      case TokenKind::kReturn: {
        Take();
        stmt->kind = Stmt::Kind::kReturn;
        stmt->expr = ParseExpr();
        stmt->span = Join(first.span, Expect(TokenKind::kSemicolon, "';'").span);
        break;
      }
      case TokenKind::kIf: {
        Take();
        stmt->kind = Stmt::Kind::kIf;
        Expect(TokenKind::kLParen, "'('");
        stmt->expr = ParseExpr();
        Expect(TokenKind::kRParen, "')'");
        SourceSpan last = ParseBlock(stmt->body);
        if (Peek().kind == TokenKind::kElse) {
          Take();
          stmt->has_else = true;
          last = ParseBlock(stmt->else_body);
        }
        stmt->span = Join(first.span, last);
        break;
      }
      case TokenKind::kWhile: {
        Take();
        stmt->kind = Stmt::Kind::kWhile;
        Expect(TokenKind::kLParen, "'('");
        stmt->expr = ParseExpr();
        Expect(TokenKind::kRParen, "')'");
        stmt->span = Join(first.span, ParseBlock(stmt->body));
        break;
      }
      default:
        Fail(first, "expected a statement, found " +
                        (first.kind == TokenKind::kEnd ? std::string("end of input")
                                                       : "'" + first.text + "'"));
    }
    return stmt;
  }

  // Returns the span of the closing brace.
  SourceSpan ParseBlock(Block& block) {
    const Token& open = Expect(TokenKind::kLBrace, "'{'");
    while (Peek().kind != TokenKind::kRBrace) {
      if (Peek().kind == TokenKind::kEnd) {
        Fail(open, "unbalanced '{': no matching '}'");
      }
      block.push_back(ParseStatement());
    }
    return Take().span;
  }

  ExprPtr MakeBinary(BinaryOp op, const Token& token, ExprPtr lhs, ExprPtr rhs) {
    auto expr = std::make_shared<Expr>();
    expr->kind = Expr::Kind::kBinary;
    expr->binary_op = op;
    expr->token = token.span;
    expr->lhs = std::move(lhs);
    expr->rhs = std::move(rhs);
    return expr;
  }

  ExprPtr ParseExpr() { return ParseOr(); }

  ExprPtr ParseOr() {
    ExprPtr lhs = ParseAnd();
    while (Peek().kind == TokenKind::kOrOr) {
      const Token& op = Take();
      lhs = MakeBinary(BinaryOp::kOr, op, lhs, ParseAnd());
    }
    return lhs;
  }

  ExprPtr ParseAnd() {
    ExprPtr lhs = ParseEquality();
    while (Peek().kind == TokenKind::kAndAnd) {
      const Token& op = Take();
      lhs = MakeBinary(BinaryOp::kAnd, op, lhs, ParseEquality());
    }
    return lhs;
  }

  ExprPtr ParseEquality() {
    ExprPtr lhs = ParseRelational();
    while (Peek().kind == TokenKind::kEq || Peek().kind == TokenKind::kNe) {
      const Token& op = Take();
      const BinaryOp kind =
          op.kind == TokenKind::kEq ? BinaryOp::kEq : BinaryOp::kNe;
      lhs = MakeBinary(kind, op, lhs, ParseRelational());
    }
    return lhs;
  }

  ExprPtr ParseRelational() {
    ExprPtr lhs = ParseAdditive();
    for (;;) {
      BinaryOp kind;
      switch (Peek().kind) {
        case TokenKind::kLt: kind = BinaryOp::kLt; break;
        case TokenKind::kLe: kind = BinaryOp::kLe; break;
        case TokenKind::kGt: kind = BinaryOp::kGt; break;
        case TokenKind::kGe: kind = BinaryOp::kGe; break;
        default: return lhs;
      }
      const Token& op = Take();
      lhs = MakeBinary(kind, op, lhs, ParseAdditive());
    }
  }

  ExprPtr ParseAdditive() {
    ExprPtr lhs = ParseMultiplicative();
    while (Peek().kind == TokenKind::kPlus || Peek().kind == TokenKind::kMinus) {
      const Token& op = Take();
      const BinaryOp kind =
          op.kind == TokenKind::kPlus ? BinaryOp::kAdd : BinaryOp::kSub;
      lhs = MakeBinary(kind, op, lhs, ParseMultiplicative());
    }
    return lhs;
  }

  ExprPtr ParseMultiplicative() {
    ExprPtr lhs = ParseUnary();
    for (;;) {
      BinaryOp kind;
      switch (Peek().kind) {
        case TokenKind::kStar: kind = BinaryOp::kMul; break;
        case TokenKind::kSlash: kind = BinaryOp::kDiv; break;
        case TokenKind::kPercent: kind = BinaryOp::kMod; break;
        default: return lhs;
      }
      const Token& op = Take();
      lhs = MakeBinary(kind, op, lhs, ParseUnary());
    }
  }

  ExprPtr ParseUnary() {
    const Token& token = Peek();
    auto expr = std::make_shared<Expr>();
    switch (token.kind) {
      case TokenKind::kMinus:
      case TokenKind::kBang:
        Take();
        expr->kind = Expr::Kind::kUnary;
        expr->unary_op =
            token.kind == TokenKind::kMinus ? UnaryOp::kNeg : UnaryOp::kNot;
        expr->token = token.span;
        expr->lhs = ParseUnary();
        return expr;
      case TokenKind::kInteger:
        Take();
        expr->kind = Expr::Kind::kLiteral;
        expr->value = Integer(token.text);
        expr->token = token.span;
        return expr;
      case TokenKind::kIdentifier:
        Take();
        expr->kind = Expr::Kind::kVariable;
        expr->name = token.text;
        expr->token = token.span;
        return expr;
      case TokenKind::kLParen: {
        Take();
        ExprPtr inner = ParseExpr();
        Expect(TokenKind::kRParen, "')'");
        return inner;
      }
      default:
        Fail(token, "expected an expression, found " +
                        (token.kind == TokenKind::kEnd ? std::string("end of input")
                                                       : "'" + token.text + "'"));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int next_id_ = 1;
};

}  // namespace

Program Parse(std::string_view source) {
  Program program = Parser(source).ParseProgram();
  program.source = std::string(source);
  return program;
}

}  // namespace mutspace::mutlang
