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

#include "natprog/lexer.hpp"

#include <cstdio>

namespace natprog {
namespace {

bool is_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_word_char(char c) { return is_letter(c) || is_digit(c) || c == '_'; }
bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

class Lexer {
 public:
  explicit Lexer(std::string_view source) : source_(source) {}

  LexOutput run() {
    while (pos_ < source_.size()) {
      const char c = source_[pos_];
      if (is_space(c)) {
        advance();
      } else if (is_letter(c)) {
        lex_word();
      } else if (is_digit(c)) {
        lex_number();
      } else if (c == '"') {
        lex_string();
      } else {
        lex_symbol();
      }
    }
    return std::move(out_);
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < source_.size() ? source_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (source_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  SourceSpan mark() const { return SourceSpan{pos_, pos_, line_, column_}; }

  void emit(TokenKind kind, SourceSpan start) {
    start.end_offset = pos_;
    out_.tokens.push_back(Token{
        kind,
        std::string(source_.substr(start.start_offset, start.length())),
        start});
  }

  void error(SourceSpan start, std::string message) {
    start.end_offset = pos_;
    out_.diagnostics.push_back(
        make_error(codes::kSyntax, start, std::move(message)));
  }

  void skip_to_whitespace() {
    while (pos_ < source_.size() && !is_space(source_[pos_])) advance();
  }

  void lex_word() {
    const SourceSpan start = mark();
    while (is_word_char(peek())) advance();
    emit(TokenKind::kWord, start);
  }

  void lex_number() {
    const SourceSpan start = mark();
    while (is_digit(peek())) advance();
    if (is_letter(peek()) || peek() == '_') {
      while (is_word_char(peek())) advance();
      emit(TokenKind::kWord, start);
      return;
    }
    if (peek() == '.' && is_digit(peek(1))) {
      advance();
      while (is_digit(peek())) advance();
      if ((peek() == '.' && is_digit(peek(1))) || is_letter(peek()) ||
          peek() == '_') {
        skip_to_whitespace();
        error(start, "malformed number '" +
                         std::string(source_.substr(start.start_offset,
                                                    pos_ - start.start_offset)) +
                         "'");
        return;
      }
    }
    emit(TokenKind::kNumberLiteral, start);
  }

  void lex_string() {
    const SourceSpan start = mark();
    advance();  // opening quote
    bool bad_escape = false;
    while (true) {
      const char c = peek();
      if (pos_ >= source_.size() || c == '\n') {
        error(start, "unterminated string literal");
        return;
      }
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        const char next = peek(1);
        if (next != '"' && next != '\\' && next != 'n') bad_escape = true;
        advance();
        if (next != '\n' && pos_ < source_.size()) advance();
        continue;
      }
      advance();
    }
    if (bad_escape) {
      error(start, "unknown escape sequence in string literal");
      return;
    }
    emit(TokenKind::kStringLiteral, start);
  }

  void lex_symbol() {
    const SourceSpan start = mark();
    const char c = source_[pos_];
    switch (c) {
      case '+':
      case '-':
      case '*':
      case '/':
      case '%':
        advance();
        emit(TokenKind::kOperator, start);
        return;
      case '(':
        advance();
        emit(TokenKind::kLeftParen, start);
        return;
      case ')':
        advance();
        emit(TokenKind::kRightParen, start);
        return;
      case '&':
        advance();
        emit(TokenKind::kAmpersand, start);
        return;
      case '.':
        advance();
        emit(TokenKind::kPeriod, start);
        return;
      default:
        break;
    }
    std::string shown;
    const auto byte = static_cast<unsigned char>(c);
    if (byte >= 0x20 && byte < 0x7f) {
      shown = std::string("'") + c + "'";
    } else {
      char hex[8];
      std::snprintf(hex, sizeof hex, "0x%02X", byte);
      shown = hex;
    }
    skip_to_whitespace();
    error(start, "unexpected character " + shown);
  }

  std::string_view source_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t column_ = 1;
  LexOutput out_;
};

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "word";
    case TokenKind::kNumberLiteral: return "number";
    case TokenKind::kStringLiteral: return "string";
    case TokenKind::kOperator: return "operator";
    case TokenKind::kLeftParen: return "'('";
    case TokenKind::kRightParen: return "')'";
    case TokenKind::kAmpersand: return "'&'";
    case TokenKind::kPeriod: return "'.'";
  }
  return "?";
}

LexOutput tokenize(std::string_view source) { return Lexer(source).run(); }

std::string decode_string_literal(std::string_view lexeme) {
  std::string out;
  if (lexeme.size() < 2) return out;
  const std::string_view body = lexeme.substr(1, lexeme.size() - 2);
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '\\' && i + 1 < body.size()) {
      ++i;
      out += body[i] == 'n' ? '\n' : body[i];
    } else {
      out += body[i];
    }
  }
  return out;
}

std::string encode_string_literal(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

}  // namespace natprog
