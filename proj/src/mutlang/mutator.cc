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

#include "mutspace/mutlang/mutator.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <utility>

#include "mutspace/errors.h"
#include "mutspace/mutlang/parser.h"

namespace mutspace::mutlang {

namespace {

constexpr BinaryOp kArithmetic[] = {BinaryOp::kAdd, BinaryOp::kSub,
                                    BinaryOp::kMul, BinaryOp::kDiv,
                                    BinaryOp::kMod};
constexpr BinaryOp kRelational[] = {BinaryOp::kLt, BinaryOp::kLe,
                                    BinaryOp::kGt, BinaryOp::kGe,
                                    BinaryOp::kEq, BinaryOp::kNe};

struct Candidate {
  std::size_t offset;
  Operator op;
  const Stmt* stmt;
  const Expr* expr;  // null for statement deletion
  std::string original;
  std::string replacement;
};

void CollectStatements(const Block& block, std::vector<const Stmt*>& out) {
  for (const auto& stmt : block) {
    out.push_back(stmt.get());
    CollectStatements(stmt->body, out);
    CollectStatements(stmt->else_body, out);
  }
}

void CollectExprs(const ExprPtr& expr, std::vector<const Expr*>& out) {
  if (!expr) return;
  out.push_back(expr.get());
  CollectExprs(expr->lhs, out);
  CollectExprs(expr->rhs, out);
}

// Copy of `block` with `target` swapped for `replacement`, or removed when
// `replacement` is null. Untouched statements are shared.
Block RewriteBlock(const Block& block, const Stmt* target,
                   const StmtPtr& replacement) {
  Block out;
  out.reserve(block.size());
  for (const auto& stmt : block) {
    if (stmt.get() == target) {
      if (replacement) out.push_back(replacement);
      continue;
    }
    Block body = RewriteBlock(stmt->body, target, replacement);
    Block else_body = RewriteBlock(stmt->else_body, target, replacement);
    if (body == stmt->body && else_body == stmt->else_body) {
      out.push_back(stmt);
      continue;
    }
    auto copy = std::make_shared<Stmt>(*stmt);
    copy->body = std::move(body);
    copy->else_body = std::move(else_body);
    out.push_back(std::move(copy));
  }
  return out;
}

void AddExprCandidates(const Program& program, const Stmt& stmt,
                       const Expr& expr, const std::set<Operator>& operators,
                       std::vector<Candidate>& out) {
  const std::string original =
      program.source.substr(expr.token.offset, expr.token.length);
  auto add = [&](Operator op, std::string replacement) {
    out.push_back({expr.token.offset, op, &stmt, &expr, original,
                   std::move(replacement)});
  };
  if (expr.kind == Expr::Kind::kBinary) {
    const BinaryOp op = expr.binary_op;
    if (IsArithmetic(op) && operators.contains(Operator::kAor)) {
      for (BinaryOp other : kArithmetic) {
        if (other != op) {
          add(Operator::kAor, std::string(Spelling(other)));
        }
      }
    } else if (IsRelational(op) && operators.contains(Operator::kRor)) {
      for (BinaryOp other : kRelational) {
        if (other != op) {
          add(Operator::kRor, std::string(Spelling(other)));
        }
      }
    } else if (IsLogical(op) && operators.contains(Operator::kLcr)) {
      const BinaryOp other = op == BinaryOp::kAnd ? BinaryOp::kOr : BinaryOp::kAnd;
      add(Operator::kLcr, std::string(Spelling(other)));
    }
  } else if (expr.kind == Expr::Kind::kLiteral &&
             operators.contains(Operator::kCrp)) {
    std::vector<Integer> seen{expr.value};
    for (const Integer& value :
         {Integer(expr.value + 1), Integer(expr.value - 1), Integer(0)}) {
      if (std::find(seen.begin(), seen.end(), value) != seen.end()) continue;
      seen.push_back(value);
      add(Operator::kCrp, value.str());
    }
  }
}

}  // namespace

std::string_view ToString(Operator op) {
  switch (op) {
    case Operator::kAor: return "AOR";
    case Operator::kRor: return "ROR";
    case Operator::kLcr: return "LCR";
    case Operator::kCrp: return "CRP";
    case Operator::kSdl: return "SDL";
  }
  return "?";
}

Operator ParseOperator(std::string_view name) {
  std::string upper;
  for (char c : name) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Operator op : AllOperators()) {
    if (ToString(op) == upper) return op;
  }
  throw ArgumentError("unknown mutation operator '" + std::string(name) +
                      "' (expected AOR, ROR, LCR, CRP or SDL)");
}

std::set<Operator> ParseOperatorList(std::string_view text) {
  if (text.empty()) return AllOperators();
  std::set<Operator> ops;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) ops.insert(ParseOperator(item));
    start = end + 1;
  }
  return ops;
}

const std::set<Operator>& AllOperators() {
  static const std::set<Operator> all{Operator::kAor, Operator::kRor,
                                      Operator::kLcr, Operator::kCrp,
                                      Operator::kSdl};
  return all;
}

std::string ApplyDescriptor(std::string_view source,
                            const MutantDescriptor& descriptor) {
  std::string out(source.substr(0, descriptor.offset));
  out += descriptor.replacement;
  out += source.substr(descriptor.offset + descriptor.length);
  return out;
}

std::vector<Mutant> MutateAll(const Program& program,
                              const std::set<Operator>& operators) {
  std::vector<const Stmt*> statements;
  CollectStatements(program.body, statements);
  std::sort(statements.begin(), statements.end(),
            [](const Stmt* a, const Stmt* b) { return a->id < b->id; });

  std::vector<Mutant> mutants;
  for (const Stmt* stmt : statements) {
    std::vector<Candidate> candidates;
    if (operators.contains(Operator::kSdl)) {
      candidates.push_back(
          {stmt->span.offset, Operator::kSdl, stmt, nullptr,
           program.source.substr(stmt->span.offset, stmt->span.length), ""});
    }
    std::vector<const Expr*> exprs;
    CollectExprs(stmt->expr, exprs);
    for (const Expr* expr : exprs) {
      AddExprCandidates(program, *stmt, *expr, operators, candidates);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) {
                       if (a.offset != b.offset) return a.offset < b.offset;
                       return a.op < b.op;
                     });

    for (auto& candidate : candidates) {
      Mutant mutant;
      auto& d = mutant.descriptor;
      d.id = "m" + std::to_string(mutants.size() + 1);
      d.op = candidate.op;
      d.statement = stmt->id;
      d.offset = candidate.offset;
      d.length = candidate.original.size();
      d.original = std::move(candidate.original);
      d.replacement = std::move(candidate.replacement);

      const std::string source = ApplyDescriptor(program.source, d);
      if (candidate.expr) {
        // The mutated text is authoritative: a replaced operator binds with
        // its own precedence, exactly as in the source written to disk.
        mutant.program = Parse(source);
      } else {
        mutant.program.body = RewriteBlock(program.body, stmt, nullptr);
        mutant.program.statement_count = program.statement_count;
        mutant.program.source = source;
      }
      mutants.push_back(std::move(mutant));
    }
  }
  return mutants;
}

}  // namespace mutspace::mutlang
