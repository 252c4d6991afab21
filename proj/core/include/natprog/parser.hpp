// Copyright 2026 The natprog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NATPROG_PARSER_HPP_
#define NATPROG_PARSER_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "natprog/ast.hpp"
#include "natprog/diagnostic.hpp"
#include "natprog/token.hpp"

namespace natprog {

// Largest accepted `with size` for an array declaration.
inline constexpr std::int64_t kMaxArraySize = 1'000'000;

struct ParseOutput {
  Program program;  // statements that failed to parse are dropped
  std::vector<Diagnostic> diagnostics;
};

// Result of parsing a standalone fragment (a template slot value).
struct FragmentOutput {
  ExprPtr expr;  // null when diagnostics contains an error
  std::vector<Diagnostic> diagnostics;
};

// Recursive-descent parser for the sentence grammar. Each syntax error is
// reported as E005 at the offending token; the parser then skips past the
// next Period and carries on, so one run can report several errors.
ParseOutput parse_program(std::span<const Token> tokens);

// Condition fragment, e.g. `X is Greater than 3 And Y is Equal to 0`.
// Precedence: Or < And < comparison.
FragmentOutput parse_condition(std::span<const Token> tokens);

// Value-expression fragment, e.g. `"Age: " & 25`.
FragmentOutput parse_expression(std::span<const Token> tokens);

// tokenize + parse_program; diagnostics from both ordered by position.
ParseOutput parse_source(std::string_view source);

bool is_reserved_word(std::string_view word);
std::span<const std::string_view> reserved_words();

}  // namespace natprog

#endif  // NATPROG_PARSER_HPP_
