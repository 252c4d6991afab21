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

#ifndef NATPROG_AST_HPP_
#define NATPROG_AST_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "natprog/source_span.hpp"

namespace natprog {

enum class BaseType { kNumber, kString };

std::string_view type_name(BaseType type);

// Scalar type, or a one-dimensional static array of `element` when
// array_size is set (always >= 1).
struct TypeTag {
  BaseType element = BaseType::kNumber;
  std::optional<std::int64_t> array_size;

  bool is_array() const { return array_size.has_value(); }
  bool operator==(const TypeTag&) const = default;
};

// ---------------------------------------------------------------------------
// Expressions
//
// Nodes are immutable once built and shared through ExprPtr. Comparison and
// Logical nodes only ever appear as If/Repeat-while guards.
// ---------------------------------------------------------------------------

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinaryOp { kAdd, kSubtract, kMultiply, kDivide, kRemainder, kConcat };
enum class RelOp {
  kGreater,
  kSmaller,
  kGreaterOrEqual,
  kSmallerOrEqual,
  kEqual,
  kNotEqual,
};
enum class LogicalOp { kAnd, kOr };

std::string_view binary_op_symbol(BinaryOp op);

struct NumberLit {
  double value = 0;
};
struct StringLit {
  std::string value;
};
struct VarRef {
  std::string name;
};
// `element <index> of <array>`, 1-based.
struct ElementRef {
  ExprPtr index;
  std::string array;
};
struct Negate {
  ExprPtr operand;
};
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Comparison {
  RelOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Logical {
  LogicalOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Expr {
  using Node = std::variant<NumberLit, StringLit, VarRef, ElementRef, Negate,
                            Binary, Comparison, Logical>;
  Node node;
  SourceSpan span;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  bool is_condition() const {
    return as<Comparison>() != nullptr || as<Logical>() != nullptr;
  }
};

ExprPtr make_expr(Expr::Node node, SourceSpan span = {});

// Structural equality; spans are ignored.
bool operator==(const Expr& a, const Expr& b);
bool same_expr(const ExprPtr& a, const ExprPtr& b);

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

struct Statement;
using Block = std::vector<Statement>;

// An assignable location: a scalar variable, or an element when `index` is
// set.
struct LValue {
  std::string name;
  ExprPtr index;
  SourceSpan span;

  bool is_element() const { return index != nullptr; }
};

struct DeclareVariable {
  std::string name;
  BaseType type = BaseType::kNumber;
  ExprPtr initial;  // may be null
  SourceSpan name_span;
};
struct DeclareArray {
  std::string name;
  BaseType element_type = BaseType::kNumber;
  std::int64_t size = 1;
  SourceSpan name_span;
};
struct Assignment {
  LValue target;
  ExprPtr value;
};
struct Display {
  ExprPtr value;
};
struct Read {
  LValue target;
  std::optional<std::string> prompt;
};
struct IfArm {
  ExprPtr condition;
  Block body;
};
struct If {
  std::vector<IfArm> arms;  // at least one
  std::optional<Block> otherwise;
};
struct RepeatWhile {
  ExprPtr condition;
  Block body;
};
struct RepeatTimes {
  ExprPtr count;
  Block body;
};
struct SelectCase {
  ExprPtr label;
  Block body;
};
struct Select {
  ExprPtr scrutinee;
  std::vector<SelectCase> cases;  // at least one
  std::optional<Block> other;
};

struct Statement {
  using Node = std::variant<DeclareVariable, DeclareArray, Assignment, Display,
                            Read, If, RepeatWhile, RepeatTimes, Select>;
  Node node;
  SourceSpan span;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
};

// Globals followed by instructions, in written order.
struct Program {
  std::vector<Statement> statements;
};

// Structural equality; spans are ignored.
bool operator==(const LValue& a, const LValue& b);
bool operator==(const Statement& a, const Statement& b);
bool operator==(const Program& a, const Program& b);

// Compact S-expression dump, for test failure messages.
std::string debug_string(const Expr& e);
std::string debug_string(const Statement& s);
std::string debug_string(const Program& p);

// Case-folded identifier key (ASCII).
std::string fold_identifier(std::string_view name);

}  // namespace natprog

#endif  // NATPROG_AST_HPP_
