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

#ifndef NATPROG_LEXER_HPP_
#define NATPROG_LEXER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "natprog/diagnostic.hpp"
#include "natprog/token.hpp"

namespace natprog {

struct LexOutput {
  std::vector<Token> tokens;
  std::vector<Diagnostic> diagnostics;
};

// Never fails. Malformed fragments produce an E005 diagnostic and lexing
// resumes at the next whitespace.
//
// A `.` belongs to a NumberLiteral only when a digit sits on both sides of
// it; otherwise it is a Period (statement terminator). A digit-led run that
// contains letters is returned as a Word so that the semantic analyzer can
// report it as an illegal identifier.
LexOutput tokenize(std::string_view source);

// Decodes the body of a StringLiteral lexeme (\" \\ \n escapes).
std::string decode_string_literal(std::string_view lexeme);

// Re-encodes text as a StringLiteral lexeme, quotes included.
std::string encode_string_literal(std::string_view text);

}  // namespace natprog

#endif  // NATPROG_LEXER_HPP_
