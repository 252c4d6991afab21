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

#ifndef NATPROG_TOKEN_HPP_
#define NATPROG_TOKEN_HPP_

#include <string>
#include <string_view>

#include "natprog/source_span.hpp"

namespace natprog {

enum class TokenKind {
  kWord,
  kNumberLiteral,
  kStringLiteral,
  kOperator,  // + - * / %
  kLeftParen,
  kRightParen,
  kAmpersand,
  kPeriod,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind;
  // Exact source text, quotes and escapes included for string literals.
  std::string lexeme;
  SourceSpan span;

  bool operator==(const Token&) const = default;
};

}  // namespace natprog

#endif  // NATPROG_TOKEN_HPP_
