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

#ifndef MUTSPACE_MUTLANG_PARSER_H_
#define MUTSPACE_MUTLANG_PARSER_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "mutspace/mutlang/ast.h"

namespace mutspace::mutlang {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Grammar:
//   program   := stmt*
//   stmt      := IDENT '=' expr ';'
//              | 'if' '(' expr ')' block ('else' block)?
//              | 'while' '(' expr ')' block
//              | 'return' expr ';'
//   block     := '{' stmt* '}'
//   expr      := or;  or := and ('||' and)*;  and := eq ('&&' eq)*
//   eq        := rel (('=='|'!=') rel)*
//   rel       := add (('<'|'<='|'>'|'>=') add)*
//   add       := mul (('+'|'-') mul)*;  mul := unary (('*'|'/'|'%') unary)*
//   unary     := ('-'|'!') unary | INT | IDENT | '(' expr ')'
// `//` starts a comment running to the end of the line.
Program Parse(std::string_view source);

}  // namespace mutspace::mutlang

#endif  // MUTSPACE_MUTLANG_PARSER_H_
