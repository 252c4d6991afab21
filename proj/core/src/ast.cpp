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

#include "natprog/ast.hpp"

#include <cctype>
#include <cmath>

#include "natprog/number_text.hpp"

namespace natprog {
namespace {

bool same_block(const Block& a, const Block& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

bool same_optional_block(const std::optional<Block>& a,
                         const std::optional<Block>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || same_block(*a, *b);
}

std::string_view rel_op_name(RelOp op) {
  switch (op) {
    case RelOp::kGreater: return "Greater";
    case RelOp::kSmaller: return "Smaller";
    case RelOp::kGreaterOrEqual: return "GreaterOrEqual";
    case RelOp::kSmallerOrEqual: return "SmallerOrEqual";
    case RelOp::kEqual: return "Equal";
    case RelOp::kNotEqual: return "NotEqual";
  }
  return "?";
}

std::string quoted(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string debug_block(const Block& block) {
  std::string out = "(";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i > 0) out += ' ';
    out += debug_string(block[i]);
  }
  return out + ")";
}

std::string debug_ptr(const ExprPtr& e) {
  return e ? debug_string(*e) : "nil";
}

std::string debug_lvalue(const LValue& lv) {
  if (!lv.is_element()) return lv.name;
  return "(elem " + debug_ptr(lv.index) + " " + lv.name + ")";
}

}  // namespace

std::string_view type_name(BaseType type) {
  return type == BaseType::kNumber ? "Number" : "String";
}

std::string_view binary_op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSubtract: return "-";
    case BinaryOp::kMultiply: return "*";
    case BinaryOp::kDivide: return "/";
    case BinaryOp::kRemainder: return "%";
    case BinaryOp::kConcat: return "&";
  }
  return "?";
}

ExprPtr make_expr(Expr::Node node, SourceSpan span) {
  return std::make_shared<const Expr>(Expr{std::move(node), span});
}

bool same_expr(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&b](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const T& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, NumberLit>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, StringLit>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, VarRef>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, ElementRef>) {
          return lhs.array == rhs.array && same_expr(lhs.index, rhs.index);
        } else if constexpr (std::is_same_v<T, Negate>) {
          return same_expr(lhs.operand, rhs.operand);
        } else {
          return lhs.op == rhs.op && same_expr(lhs.lhs, rhs.lhs) &&
                 same_expr(lhs.rhs, rhs.rhs);
        }
      },
      a.node);
}

bool operator==(const LValue& a, const LValue& b) {
  return a.name == b.name && same_expr(a.index, b.index);
}

bool operator==(const Statement& a, const Statement& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&b](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const T& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, DeclareVariable>) {
          return lhs.name == rhs.name && lhs.type == rhs.type &&
                 same_expr(lhs.initial, rhs.initial);
        } else if constexpr (std::is_same_v<T, DeclareArray>) {
          return lhs.name == rhs.name && lhs.element_type == rhs.element_type &&
                 lhs.size == rhs.size;
        } else if constexpr (std::is_same_v<T, Assignment>) {
          return lhs.target == rhs.target && same_expr(lhs.value, rhs.value);
        } else if constexpr (std::is_same_v<T, Display>) {
          return same_expr(lhs.value, rhs.value);
        } else if constexpr (std::is_same_v<T, Read>) {
          return lhs.target == rhs.target && lhs.prompt == rhs.prompt;
        } else if constexpr (std::is_same_v<T, If>) {
          if (lhs.arms.size() != rhs.arms.size()) return false;
          for (std::size_t i = 0; i < lhs.arms.size(); ++i) {
            if (!same_expr(lhs.arms[i].condition, rhs.arms[i].condition) ||
                !same_block(lhs.arms[i].body, rhs.arms[i].body)) {
              return false;
            }
          }
          return same_optional_block(lhs.otherwise, rhs.otherwise);
        } else if constexpr (std::is_same_v<T, RepeatWhile>) {
          return same_expr(lhs.condition, rhs.condition) &&
                 same_block(lhs.body, rhs.body);
        } else if constexpr (std::is_same_v<T, RepeatTimes>) {
          return same_expr(lhs.count, rhs.count) &&
                 same_block(lhs.body, rhs.body);
        } else {
          static_assert(std::is_same_v<T, Select>);
          if (!same_expr(lhs.scrutinee, rhs.scrutinee) ||
              lhs.cases.size() != rhs.cases.size()) {
            return false;
          }
          for (std::size_t i = 0; i < lhs.cases.size(); ++i) {
            if (!same_expr(lhs.cases[i].label, rhs.cases[i].label) ||
                !same_block(lhs.cases[i].body, rhs.cases[i].body)) {
              return false;
            }
          }
          return same_optional_block(lhs.other, rhs.other);
        }
      },
      a.node);
}

bool operator==(const Program& a, const Program& b) {
  return same_block(a.statements, b.statements);
}

std::string debug_string(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberLit>) {
          return std::isfinite(n.value) ? format_number(n.value) : "nonfinite";
        } else if constexpr (std::is_same_v<T, StringLit>) {
          return quoted(n.value);
        } else if constexpr (std::is_same_v<T, VarRef>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, ElementRef>) {
          return "(elem " + debug_ptr(n.index) + " " + n.array + ")";
        } else if constexpr (std::is_same_v<T, Negate>) {
          return "(neg " + debug_ptr(n.operand) + ")";
        } else if constexpr (std::is_same_v<T, Binary>) {
          return "(" + std::string(binary_op_symbol(n.op)) + " " +
                 debug_ptr(n.lhs) + " " + debug_ptr(n.rhs) + ")";
        } else if constexpr (std::is_same_v<T, Comparison>) {
          return "(" + std::string(rel_op_name(n.op)) + " " + debug_ptr(n.lhs) +
                 " " + debug_ptr(n.rhs) + ")";
        } else {
          return std::string(n.op == LogicalOp::kAnd ? "(And " : "(Or ") +
                 debug_ptr(n.lhs) + " " + debug_ptr(n.rhs) + ")";
        }
      },
      e.node);
}

std::string debug_string(const Statement& s) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, DeclareVariable>) {
          return "(declare " + n.name + " " + std::string(type_name(n.type)) +
                 (n.initial ? " " + debug_string(*n.initial) : "") + ")";
        } else if constexpr (std::is_same_v<T, DeclareArray>) {
          return "(array " + n.name + " " +
                 std::string(type_name(n.element_type)) + " " +
                 std::to_string(n.size) + ")";
        } else if constexpr (std::is_same_v<T, Assignment>) {
          return "(set " + debug_lvalue(n.target) + " " + debug_ptr(n.value) +
                 ")";
        } else if constexpr (std::is_same_v<T, Display>) {
          return "(display " + debug_ptr(n.value) + ")";
        } else if constexpr (std::is_same_v<T, Read>) {
          return "(read " + debug_lvalue(n.target) +
                 (n.prompt ? " " + quoted(*n.prompt) : "") + ")";
        } else if constexpr (std::is_same_v<T, If>) {
          std::string out = "(if";
          for (const auto& arm : n.arms) {
            out += " (" + debug_ptr(arm.condition) + " " +
                   debug_block(arm.body) + ")";
          }
          if (n.otherwise) out += " (otherwise " + debug_block(*n.otherwise) + ")";
          return out + ")";
        } else if constexpr (std::is_same_v<T, RepeatWhile>) {
          return "(while " + debug_ptr(n.condition) + " " +
                 debug_block(n.body) + ")";
        } else if constexpr (std::is_same_v<T, RepeatTimes>) {
          return "(times " + debug_ptr(n.count) + " " + debug_block(n.body) +
                 ")";
        } else {
          std::string out = "(select " + debug_ptr(n.scrutinee);
          for (const auto& c : n.cases) {
            out += " (" + debug_ptr(c.label) + " " + debug_block(c.body) + ")";
          }
          if (n.other) out += " (other " + debug_block(*n.other) + ")";
          return out + ")";
        }
      },
      s.node);
}

std::string debug_string(const Program& p) {
  std::string out;
  for (const auto& s : p.statements) {
    out += debug_string(s);
    out += '\n';
  }
  return out;
}

std::string fold_identifier(std::string_view name) {
  std::string out(name);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace natprog
