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

#include "natprog/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "natprog/lexer.hpp"
#include "natprog/number_text.hpp"

namespace natprog {
namespace {

constexpr std::array<std::string_view, 44> kReserved = {
    "a",       "an",        "and",     "array",   "called", "condition",
    "declare", "display",   "element", "end",     "equal",  "from",
    "greater", "if",        "initial", "is",      "keyboard", "not",
    "number",  "of",        "on",      "or",      "other",  "otherwise",
    "prompt",  "read",      "repeat",  "screen",  "select", "set",
    "size",    "smaller",   "string",  "than",    "the",    "then",
    "times",   "to",        "type",    "value",   "variable", "when",
    "while",   "with",
};

constexpr int kMaxDepth = 200;

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

// Thrown after the diagnostic has been recorded; unwinds to the nearest
// statement boundary (or speculation point).
struct SyntaxError {};

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  ParseOutput program() {
    ParseOutput out;
    while (!at_end()) {
      if (at_word("end") || at_word("otherwise") || at_word("when")) {
        record(current_span(), "unexpected '" + peek().lexeme +
                                   "' outside of a block");
        synchronize();
        continue;
      }
      statement_into(out.program.statements);
    }
    out.diagnostics = std::move(diagnostics_);
    return out;
  }

  FragmentOutput condition_fragment() {
    return fragment([this] { return condition(); }, "condition");
  }

  FragmentOutput expression_fragment() {
    return fragment([this] { return expression(); }, "expression");
  }

 private:
  // RAII nesting counter shared by blocks and expressions.
  class DepthGuard {
   public:
    explicit DepthGuard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxDepth) {
        --p_.depth_;
        p_.fail("nesting is too deep");
      }
    }
    ~DepthGuard() { --p_.depth_; }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;

   private:
    Parser& p_;
  };

  template <typename F>
  FragmentOutput fragment(F parse, std::string_view what) {
    FragmentOutput out;
    if (at_end()) {
      record(current_span(), "expected " + std::string(what == "condition"
                                                           ? "a condition"
                                                           : "an expression"));
    } else {
      try {
        ExprPtr e = parse();
        if (!at_end()) {
          fail("unexpected '" + peek().lexeme + "' after " +
               std::string(what));
        }
        out.expr = std::move(e);
      } catch (const SyntaxError&) {
      }
    }
    out.diagnostics = std::move(diagnostics_);
    return out;
  }

  // --- token helpers -------------------------------------------------------

  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[pos_ + ahead];
  }
  bool has(std::size_t ahead) const { return pos_ + ahead < tokens_.size(); }

  bool at_kind(TokenKind kind, std::size_t ahead = 0) const {
    return has(ahead) && peek(ahead).kind == kind;
  }
  bool at_word(std::string_view word, std::size_t ahead = 0) const {
    return at_kind(TokenKind::kWord, ahead) && iequals(peek(ahead).lexeme, word);
  }
  bool at_operator(std::string_view op) const {
    return at_kind(TokenKind::kOperator) && peek().lexeme == op;
  }

  SourceSpan current_span() const {
    if (!at_end()) return peek().span;
    if (tokens_.empty()) return SourceSpan{};
    SourceSpan last = tokens_.back().span;
    last.column += static_cast<std::uint32_t>(last.length());
    last.start_offset = last.end_offset;
    return last;
  }

  SourceSpan previous_span() const {
    return pos_ > 0 ? tokens_[pos_ - 1].span : current_span();
  }

  const Token& advance() { return tokens_[pos_++]; }

  void record(SourceSpan span, std::string message) {
    diagnostics_.push_back(make_error(codes::kSyntax, span, std::move(message)));
  }

  [[noreturn]] void fail(std::string message) {
    record(current_span(), std::move(message));
    throw SyntaxError{};
  }

  const Token& expect_word(std::string_view word) {
    if (!at_word(word)) fail("expected '" + std::string(word) + "'");
    return advance();
  }

  const Token& expect_period() {
    if (!at_kind(TokenKind::kPeriod)) fail("expected '.' to end the sentence");
    return advance();
  }

  // Skips through the next Period (inclusive).
  void synchronize() {
    while (!at_end()) {
      if (advance().kind == TokenKind::kPeriod) return;
    }
  }

  // --- statements ----------------------------------------------------------

  void statement_into(Block& block) {
    try {
      block.push_back(statement());
    } catch (const SyntaxError&) {
      synchronize();
    }
  }

  bool at_block_end() const {
    return at_word("end") || at_word("otherwise") || at_word("when");
  }

  Block block() {
    DepthGuard guard(*this);
    Block body;
    while (!at_end() && !at_block_end()) statement_into(body);
    return body;
  }

  Statement statement() {
    if (at_word("declare")) return declaration();
    if (at_word("set")) return assignment();
    if (at_word("display")) return display();
    if (at_word("read")) return read();
    if (at_word("if")) return if_statement();
    if (at_word("repeat")) return repeat();
    if (at_word("select")) return select();
    fail("expected a statement");
  }

  Statement finish(Statement::Node node, const SourceSpan& start) {
    const Token& period = expect_period();
    return Statement{std::move(node), span_merge(start, period.span)};
  }

  BaseType type_word() {
    if (at_word("number")) {
      advance();
      return BaseType::kNumber;
    }
    if (at_word("string")) {
      advance();
      return BaseType::kString;
    }
    fail("expected a type (Number or String)");
  }

  // Declared names may be any word; legality is the semantic analyzer's call.
  const Token& declared_name() {
    if (!at_kind(TokenKind::kWord)) fail("expected a name");
    return advance();
  }

  Statement declaration() {
    const SourceSpan start = advance().span;
    if (!at_word("a") && !at_word("an")) fail("expected 'a' or 'an'");
    advance();
    const bool is_array = at_word("array");
    if (!is_array && !at_word("variable")) {
      fail("expected 'variable' or 'array'");
    }
    advance();
    expect_word("called");
    const Token& name = declared_name();
    expect_word("of");
    expect_word("type");
    const BaseType type = type_word();
    if (is_array) {
      expect_word("with");
      expect_word("size");
      if (!at_kind(TokenKind::kNumberLiteral) ||
          peek().lexeme.find('.') != std::string::npos) {
        fail("expected a whole-number array size");
      }
      const auto size = parse_number_literal(peek().lexeme);
      if (!size || *size < 1 || *size > static_cast<double>(kMaxArraySize)) {
        fail("array size must be between 1 and " +
             std::to_string(kMaxArraySize));
      }
      advance();
      return finish(DeclareArray{name.lexeme, type,
                                 static_cast<std::int64_t>(*size), name.span},
                    start);
    }
    ExprPtr initial;
    if (at_word("with")) {
      advance();
      expect_word("initial");
      expect_word("value");
      initial = expression();
    }
    return finish(DeclareVariable{name.lexeme, type, initial, name.span},
                  start);
  }

  LValue lvalue() {
    const SourceSpan start = current_span();
    if (at_word("element")) {
      advance();
      ExprPtr index = expression();
      expect_word("of");
      const Token& name = variable_name();
      return LValue{name.lexeme, std::move(index), span_merge(start, name.span)};
    }
    const Token& name = variable_name();
    return LValue{name.lexeme, nullptr, name.span};
  }

  const Token& variable_name() {
    if (!at_kind(TokenKind::kWord) || is_reserved_word(peek().lexeme)) {
      fail("expected a variable name");
    }
    return advance();
  }

  Statement assignment() {
    const SourceSpan start = advance().span;
    LValue target = lvalue();
    expect_word("to");
    ExprPtr value = expression();
    return finish(Assignment{std::move(target), std::move(value)}, start);
  }

  Statement display() {
    const SourceSpan start = advance().span;
    ExprPtr value = expression();
    expect_word("on");
    expect_word("the");
    expect_word("screen");
    return finish(Display{std::move(value)}, start);
  }

  Statement read() {
    const SourceSpan start = advance().span;
    LValue target = lvalue();
    expect_word("from");
    expect_word("the");
    expect_word("keyboard");
    std::optional<std::string> prompt;
    if (at_word("with")) {
      advance();
      expect_word("prompt");
      if (!at_kind(TokenKind::kStringLiteral)) fail("expected a quoted prompt");
      prompt = decode_string_literal(advance().lexeme);
    }
    return finish(Read{std::move(target), std::move(prompt)}, start);
  }

  void expect_end(std::string_view block_word) {
    if (!at_word("end")) {
      fail("expected 'End of " + std::string(block_word) + "'");
    }
    advance();
    expect_word("of");
    expect_word(block_word);
  }

  Statement if_statement() {
    const SourceSpan start = advance().span;
    If node;
    ExprPtr guard = condition();
    expect_word("then");
    node.arms.push_back(IfArm{std::move(guard), block()});
    while (at_word("otherwise")) {
      const std::uint32_t otherwise_line = advance().span.line;
      // An If on a later line opens a nested statement, not another arm.
      if (at_word("if") && peek().span.line == otherwise_line) {
        advance();
        ExprPtr arm_guard = condition();
        expect_word("then");
        node.arms.push_back(IfArm{std::move(arm_guard), block()});
        continue;
      }
      node.otherwise = block();
      break;
    }
    expect_end("condition");
    return finish(std::move(node), start);
  }

  Statement repeat() {
    const SourceSpan start = advance().span;
    if (at_word("while")) {
      advance();
      ExprPtr guard = condition();
      Block body = block();
      expect_end("repeat");
      return finish(RepeatWhile{std::move(guard), std::move(body)}, start);
    }
    ExprPtr count = expression();
    expect_word("times");
    Block body = block();
    expect_end("repeat");
    return finish(RepeatTimes{std::move(count), std::move(body)}, start);
  }

  Statement select() {
    const SourceSpan start = advance().span;
    expect_word("on");
    Select node;
    node.scrutinee = expression();
    while (at_word("when")) {
      advance();
      if (at_word("other")) {
        advance();
        expect_word("then");
        node.other = block();
        break;
      }
      ExprPtr label = expression();
      expect_word("then");
      node.cases.push_back(SelectCase{std::move(label), block()});
    }
    if (node.cases.empty()) fail("expected at least one 'When <value> then' case");
    expect_end("select");
    return finish(std::move(node), start);
  }

  // --- conditions ----------------------------------------------------------

  ExprPtr condition() {
    DepthGuard guard(*this);
    ExprPtr lhs = and_condition();
    while (at_word("or")) {
      advance();
      ExprPtr rhs = and_condition();
      const SourceSpan span = span_merge(lhs->span, rhs->span);
      lhs = make_expr(Logical{LogicalOp::kOr, lhs, rhs}, span);
    }
    return lhs;
  }

  ExprPtr and_condition() {
    ExprPtr lhs = comparison();
    while (at_word("and")) {
      advance();
      ExprPtr rhs = comparison();
      const SourceSpan span = span_merge(lhs->span, rhs->span);
      lhs = make_expr(Logical{LogicalOp::kAnd, lhs, rhs}, span);
    }
    return lhs;
  }

  // The one backtracking point: `(` may open a grouped condition or a
  // parenthesized arithmetic operand. Failed attempts are remembered by
  // position so nested parentheses stay polynomial.
  ExprPtr comparison() {
    if (at_kind(TokenKind::kLeftParen) && !failed_groups_.contains(pos_)) {
      const std::size_t saved_pos = pos_;
      const std::size_t saved_diagnostics = diagnostics_.size();
      try {
        const SourceSpan open = advance().span;
        ExprPtr inner = condition();
        if (!at_kind(TokenKind::kRightParen)) fail("expected ')'");
        const SourceSpan close = advance().span;
        // Keep the inner node; grouping is not part of the tree.
        return make_expr(Expr::Node(inner->node), span_merge(open, close));
      } catch (const SyntaxError&) {
        failed_groups_.insert(saved_pos);
        pos_ = saved_pos;
        diagnostics_.resize(saved_diagnostics);
      }
    }
    ExprPtr lhs = expression();
    const RelOp op = relop();
    ExprPtr rhs = expression();
    const SourceSpan span = span_merge(lhs->span, rhs->span);
    return make_expr(Comparison{op, std::move(lhs), std::move(rhs)}, span);
  }

  RelOp relop() {
    if (!at_word("is")) fail("expected a comparison ('is Greater than', ...)");
    advance();
    if (at_word("greater") || at_word("smaller")) {
      const bool greater = at_word("greater");
      advance();
      if (at_word("or") && at_word("equal", 1)) {
        advance();
        advance();
        if (at_word("to")) advance();
        return greater ? RelOp::kGreaterOrEqual : RelOp::kSmallerOrEqual;
      }
      if (at_word("than")) advance();
      return greater ? RelOp::kGreater : RelOp::kSmaller;
    }
    if (at_word("equal")) {
      advance();
      if (at_word("to")) advance();
      return RelOp::kEqual;
    }
    if (at_word("not")) {
      advance();
      expect_word("equal");
      if (at_word("to")) advance();
      return RelOp::kNotEqual;
    }
    fail("expected Greater, Smaller, Equal or Not Equal after 'is'");
  }

  // --- expressions ---------------------------------------------------------

  ExprPtr expression() {
    DepthGuard guard(*this);
    ExprPtr lhs = additive();
    while (at_kind(TokenKind::kAmpersand)) {
      advance();
      ExprPtr rhs = additive();
      const SourceSpan span = span_merge(lhs->span, rhs->span);
      lhs = make_expr(Binary{BinaryOp::kConcat, lhs, rhs}, span);
    }
    return lhs;
  }

  ExprPtr additive() {
    ExprPtr lhs = term();
    while (at_operator("+") || at_operator("-")) {
      const BinaryOp op =
          advance().lexeme == "+" ? BinaryOp::kAdd : BinaryOp::kSubtract;
      ExprPtr rhs = term();
      const SourceSpan span = span_merge(lhs->span, rhs->span);
      lhs = make_expr(Binary{op, lhs, rhs}, span);
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (at_operator("*") || at_operator("/") || at_operator("%")) {
      const std::string& symbol = advance().lexeme;
      const BinaryOp op = symbol == "*"   ? BinaryOp::kMultiply
                          : symbol == "/" ? BinaryOp::kDivide
                                          : BinaryOp::kRemainder;
      ExprPtr rhs = unary();
      const SourceSpan span = span_merge(lhs->span, rhs->span);
      lhs = make_expr(Binary{op, lhs, rhs}, span);
    }
    return lhs;
  }

  ExprPtr unary() {
    if (at_operator("-")) {
      const SourceSpan start = advance().span;
      ExprPtr operand = primary();
      const SourceSpan span = span_merge(start, operand->span);
      return make_expr(Negate{std::move(operand)}, span);
    }
    return primary();
  }

  ExprPtr primary() {
    if (at_end()) fail("expected an expression");
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::kNumberLiteral: {
        const auto value = parse_number_literal(tok.lexeme);
        if (!value) fail("number '" + tok.lexeme + "' is out of range");
        advance();
        return make_expr(NumberLit{*value}, tok.span);
      }
      case TokenKind::kStringLiteral:
        advance();
        return make_expr(StringLit{decode_string_literal(tok.lexeme)},
                         tok.span);
      case TokenKind::kLeftParen: {
        DepthGuard guard(*this);
        const SourceSpan open = advance().span;
        ExprPtr inner = expression();
        if (!at_kind(TokenKind::kRightParen)) fail("expected ')'");
        const SourceSpan close = advance().span;
        return make_expr(Expr::Node(inner->node), span_merge(open, close));
      }
      case TokenKind::kWord: {
        if (is_reserved_word(tok.lexeme) && !at_word("element")) break;
        LValue lv = lvalue();
        if (lv.is_element()) {
          return make_expr(ElementRef{std::move(lv.index), std::move(lv.name)},
                           lv.span);
        }
        return make_expr(VarRef{std::move(lv.name)}, lv.span);
      }
      default:
        break;
    }
    fail("expected an expression");
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::vector<Diagnostic> diagnostics_;
  std::set<std::size_t> failed_groups_;
};

}  // namespace

std::span<const std::string_view> reserved_words() { return kReserved; }

bool is_reserved_word(std::string_view word) {
  return std::any_of(kReserved.begin(), kReserved.end(),
                     [word](std::string_view r) { return iequals(r, word); });
}

ParseOutput parse_program(std::span<const Token> tokens) {
  return Parser(tokens).program();
}

FragmentOutput parse_condition(std::span<const Token> tokens) {
  return Parser(tokens).condition_fragment();
}

FragmentOutput parse_expression(std::span<const Token> tokens) {
  return Parser(tokens).expression_fragment();
}

ParseOutput parse_source(std::string_view source) {
  LexOutput lexed = tokenize(source);
  ParseOutput parsed = parse_program(lexed.tokens);
  lexed.diagnostics.insert(lexed.diagnostics.end(),
                           std::make_move_iterator(parsed.diagnostics.begin()),
                           std::make_move_iterator(parsed.diagnostics.end()));
  parsed.diagnostics = std::move(lexed.diagnostics);
  std::stable_sort(parsed.diagnostics.begin(), parsed.diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return a.span.start_offset < b.span.start_offset;
                   });
  return parsed;
}

}  // namespace natprog
