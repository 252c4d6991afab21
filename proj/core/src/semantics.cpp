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

#include "natprog/semantics.hpp"

#include <algorithm>

#include "natprog/parser.hpp"

namespace natprog {
namespace {

bool is_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string quote(std::string_view name) {
  return "'" + std::string(name) + "'";
}

bool is_literal_label(const Expr& e) {
  if (e.as<NumberLit>() || e.as<StringLit>()) return true;
  const auto* neg = e.as<Negate>();
  return neg && neg->operand && neg->operand->as<NumberLit>();
}

}  // namespace

const Symbol* SymbolTable::find(std::string_view name) const {
  auto it = by_key_.find(fold_identifier(name));
  return it == by_key_.end() ? nullptr : &it->second;
}

bool SymbolTable::insert(Symbol symbol) {
  return by_key_.emplace(fold_identifier(symbol.spelling), std::move(symbol))
      .second;
}

std::optional<Diagnostic> check_identifier(std::string_view name,
                                           SourceSpan span) {
  const bool shape_ok =
      !name.empty() && is_letter(name.front()) &&
      name.size() <= kMaxIdentifierLength &&
      std::all_of(name.begin(), name.end(), [](char c) {
        return is_letter(c) || is_digit(c) || c == '_';
      });
  if (!shape_ok) {
    std::string why = name.size() > kMaxIdentifierLength
                          ? "is longer than 64 characters"
                          : "contains illegal characters";
    if (!name.empty() && !is_letter(name.front()) &&
        name.size() <= kMaxIdentifierLength) {
      why = "must start with a letter";
    }
    return make_error(codes::kIllegalIdentifier, span,
                      "identifier " + quote(name) + " " + why,
                      std::string(name));
  }
  if (is_reserved_word(name)) {
    return make_error(codes::kReservedWord, span,
                      quote(name) + " is a reserved word", std::string(name));
  }
  return std::nullopt;
}

Analyzer::Analyzer(SymbolTable symbols) : symbols_(std::move(symbols)) {
  for (const auto& [key, symbol] : symbols_.entries()) {
    next_index_ = std::max(next_index_, symbol.declaration_index + 1);
  }
}

void Analyzer::error(std::string_view code, SourceSpan span,
                     std::string message, std::optional<std::string> name) {
  diagnostics_.push_back(
      make_error(code, span, std::move(message), std::move(name)));
}

void Analyzer::declare(const std::string& name, TypeTag type,
                       SourceSpan span) {
  if (auto bad = check_identifier(name, span)) {
    diagnostics_.push_back(std::move(*bad));
  }
  const std::size_t index = next_index_ - 1;
  if (!symbols_.insert(Symbol{name, type, span, index})) {
    error(codes::kRedeclaration, span,
          "variable " + quote(name) + " is already declared", name);
  }
}

void Analyzer::check_block(const Block& block) {
  for (const auto& s : block) check(s);
}

void Analyzer::check(const Statement& statement) {
  ++next_index_;
  std::visit(
      [this, &statement](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, DeclareVariable>) {
          if (n.initial) {
            const auto init = check_value(*n.initial);
            if (init && *init != n.type) {
              error(codes::kTypeMismatch, n.initial->span,
                    "initial value of " + quote(n.name) + " is a " +
                        std::string(type_name(*init)) + ", expected " +
                        std::string(type_name(n.type)),
                    n.name);
            }
          }
          declare(n.name, TypeTag{n.type, std::nullopt}, n.name_span);
        } else if constexpr (std::is_same_v<T, DeclareArray>) {
          declare(n.name, TypeTag{n.element_type, n.size}, n.name_span);
        } else if constexpr (std::is_same_v<T, Assignment>) {
          const auto target = check_lvalue(n.target);
          const auto value = check_value(*n.value);
          if (target && value && *target != *value) {
            error(codes::kTypeMismatch, statement.span,
                  "cannot assign a " + std::string(type_name(*value)) +
                      " value to " + quote(n.target.name) + " of type " +
                      std::string(type_name(*target)),
                  n.target.name);
          }
        } else if constexpr (std::is_same_v<T, Display>) {
          check_value(*n.value);
        } else if constexpr (std::is_same_v<T, Read>) {
          check_lvalue(n.target);
        } else if constexpr (std::is_same_v<T, If>) {
          for (const auto& arm : n.arms) {
            check_condition(*arm.condition);
            check_block(arm.body);
          }
          if (n.otherwise) check_block(*n.otherwise);
        } else if constexpr (std::is_same_v<T, RepeatWhile>) {
          check_condition(*n.condition);
          check_block(n.body);
        } else if constexpr (std::is_same_v<T, RepeatTimes>) {
          const auto count = check_value(*n.count);
          if (count && *count != BaseType::kNumber) {
            error(codes::kTypeMismatch, n.count->span,
                  "repeat count must be a Number");
          }
          check_block(n.body);
        } else {
          static_assert(std::is_same_v<T, Select>);
          const auto scrutinee = check_value(*n.scrutinee);
          for (const auto& c : n.cases) {
            check_case_label(*c.label, scrutinee);
            check_block(c.body);
          }
          if (n.other) check_block(*n.other);
        }
      },
      statement.node);
}

void Analyzer::check_case_label(const Expr& label,
                                std::optional<BaseType> expected) {
  if (!is_literal_label(label)) {
    error(codes::kBadCaseLabel, label.span,
          "a When case label must be a number or string literal");
    return;
  }
  const BaseType type =
      label.as<StringLit>() ? BaseType::kString : BaseType::kNumber;
  types_[&label] = type;
  if (const auto* neg = label.as<Negate>()) {
    types_[neg->operand.get()] = BaseType::kNumber;
  }
  if (expected && *expected != type) {
    error(codes::kBadCaseLabel, label.span,
          "case label is a " + std::string(type_name(type)) +
              " but the selected value is a " +
              std::string(type_name(*expected)));
  }
}

std::optional<BaseType> Analyzer::check_name(const std::string& name,
                                             bool element, SourceSpan span) {
  if (auto bad = check_identifier(name, span)) {
    diagnostics_.push_back(std::move(*bad));
    return std::nullopt;
  }
  const Symbol* symbol = symbols_.find(name);
  if (symbol == nullptr) {
    error(codes::kUndeclared, span,
          "variable " + quote(name) + " is not declared", name);
    return std::nullopt;
  }
  if (element && !symbol->type.is_array()) {
    error(codes::kTypeMismatch, span,
          quote(symbol->spelling) + " is not an array", symbol->spelling);
    return std::nullopt;
  }
  if (!element && symbol->type.is_array()) {
    error(codes::kTypeMismatch, span,
          quote(symbol->spelling) + " is an array; use 'element ... of " +
              symbol->spelling + "'",
          symbol->spelling);
    return std::nullopt;
  }
  return symbol->type.element;
}

std::optional<BaseType> Analyzer::check_lvalue(const LValue& target) {
  if (target.is_element()) {
    const auto index = check_value(*target.index);
    if (index && *index != BaseType::kNumber) {
      error(codes::kTypeMismatch, target.index->span,
            "array index must be a Number");
    }
  }
  return check_name(target.name, target.is_element(), target.span);
}

void Analyzer::check_condition(const Expr& condition) {
  if (const auto* logical = condition.as<Logical>()) {
    check_condition(*logical->lhs);
    check_condition(*logical->rhs);
    return;
  }
  const auto* cmp = condition.as<Comparison>();
  if (cmp == nullptr) {
    check_value(condition);
    error(codes::kTypeMismatch, condition.span, "expected a condition");
    return;
  }
  const auto lhs = check_value(*cmp->lhs);
  const auto rhs = check_value(*cmp->rhs);
  if (!lhs || !rhs) return;
  const bool equality = cmp->op == RelOp::kEqual || cmp->op == RelOp::kNotEqual;
  if (equality) {
    if (*lhs != *rhs) {
      error(codes::kTypeMismatch, condition.span,
            "cannot compare a " + std::string(type_name(*lhs)) + " with a " +
                std::string(type_name(*rhs)));
    }
  } else if (*lhs != BaseType::kNumber || *rhs != BaseType::kNumber) {
    error(codes::kTypeMismatch, condition.span,
          "Greater/Smaller comparisons need Number operands");
  }
}

std::optional<BaseType> Analyzer::check_value(const Expr& expr) {
  std::optional<BaseType> result = std::visit(
      [this, &expr](const auto& n) -> std::optional<BaseType> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberLit>) {
          return BaseType::kNumber;
        } else if constexpr (std::is_same_v<T, StringLit>) {
          return BaseType::kString;
        } else if constexpr (std::is_same_v<T, VarRef>) {
          return check_name(n.name, false, expr.span);
        } else if constexpr (std::is_same_v<T, ElementRef>) {
          const auto index = check_value(*n.index);
          if (index && *index != BaseType::kNumber) {
            error(codes::kTypeMismatch, n.index->span,
                  "array index must be a Number");
          }
          return check_name(n.array, true, expr.span);
        } else if constexpr (std::is_same_v<T, Negate>) {
          const auto operand = check_value(*n.operand);
          if (!operand) return std::nullopt;
          if (*operand != BaseType::kNumber) {
            error(codes::kTypeMismatch, expr.span,
                  "'-' needs a Number operand");
            return std::nullopt;
          }
          return BaseType::kNumber;
        } else if constexpr (std::is_same_v<T, Binary>) {
          const auto lhs = check_value(*n.lhs);
          const auto rhs = check_value(*n.rhs);
          if (!lhs || !rhs) return std::nullopt;
          if (n.op == BinaryOp::kConcat) return BaseType::kString;
          if (*lhs != BaseType::kNumber || *rhs != BaseType::kNumber) {
            error(codes::kTypeMismatch, expr.span,
                  "'" + std::string(binary_op_symbol(n.op)) +
                      "' needs Number operands; use '&' to join text");
            return std::nullopt;
          }
          return BaseType::kNumber;
        } else {
          if constexpr (std::is_same_v<T, Comparison>) {
            check_value(*n.lhs);
            check_value(*n.rhs);
          }
          error(codes::kTypeMismatch, expr.span,
                "a condition cannot be used as a value");
          return std::nullopt;
        }
      },
      expr.node);
  if (result) types_[&expr] = *result;
  return result;
}

AnalysisResult analyze(Program program) {
  Analyzer analyzer;
  for (const auto& s : program.statements) analyzer.check(s);
  AnalysisResult result;
  result.diagnostics = analyzer.take_diagnostics();
  result.symbols = analyzer.take_symbols();
  if (!has_errors(result.diagnostics)) {
    result.checked = CheckedProgram{std::move(program), result.symbols,
                                    analyzer.take_types()};
  }
  return result;
}

TypeResult type_of(const Expr& expr, const SymbolTable& symbols) {
  Analyzer analyzer(symbols);
  TypeResult result;
  result.type = analyzer.check_value(expr);
  result.diagnostics = analyzer.take_diagnostics();
  return result;
}

}  // namespace natprog
