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

#include "natprog/nlg.hpp"

#include <stdexcept>

#include "json.hpp"
#include "natprog/lexer.hpp"
#include "natprog/number_text.hpp"

namespace natprog {
namespace {

constexpr int kIndentWidth = 4;

// Value-expression binding strength; higher binds tighter.
int precedence(const Expr& e) {
  if (const auto* b = e.as<Binary>()) {
    switch (b->op) {
      case BinaryOp::kConcat: return 1;
      case BinaryOp::kAdd:
      case BinaryOp::kSubtract: return 2;
      default: return 3;
    }
  }
  if (e.as<Negate>()) return 4;
  if (const auto* n = e.as<NumberLit>(); n && n->value < 0) return 4;
  if (e.is_condition()) return 0;
  return 5;
}

int condition_precedence(const Expr& e) {
  if (const auto* l = e.as<Logical>()) return l->op == LogicalOp::kOr ? 1 : 2;
  return 3;
}

std::string_view relop_key(RelOp op) {
  switch (op) {
    case RelOp::kGreater: return "relop.greater";
    case RelOp::kSmaller: return "relop.smaller";
    case RelOp::kGreaterOrEqual: return "relop.greater_or_equal";
    case RelOp::kSmallerOrEqual: return "relop.smaller_or_equal";
    case RelOp::kEqual: return "relop.equal";
    case RelOp::kNotEqual: return "relop.not_equal";
  }
  return "";
}

class Realizer {
 public:
  explicit Realizer(const PatternTable& table) : table_(table) {}

  std::string value(const Expr& e) const {
    return std::visit(
        [this, &e](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, NumberLit>) {
            return format_number(n.value);
          } else if constexpr (std::is_same_v<T, StringLit>) {
            return encode_string_literal(n.value);
          } else if constexpr (std::is_same_v<T, VarRef>) {
            return n.name;
          } else if constexpr (std::is_same_v<T, ElementRef>) {
            return table_.fill("element",
                               {{"index", value(*n.index)}, {"array", n.array}});
          } else if constexpr (std::is_same_v<T, Negate>) {
            return "-" + wrap(*n.operand, precedence(*n.operand) < 5);
          } else if constexpr (std::is_same_v<T, Binary>) {
            const int mine = precedence(e);
            return wrap(*n.lhs, precedence(*n.lhs) < mine) + " " +
                   std::string(binary_op_symbol(n.op)) + " " +
                   wrap(*n.rhs, precedence(*n.rhs) <= mine);
          } else {
            return condition(e);
          }
        },
        e.node);
  }

  std::string condition(const Expr& e) const {
    if (const auto* l = e.as<Logical>()) {
      const int mine = condition_precedence(e);
      const std::string key = l->op == LogicalOp::kAnd ? "logical.and" : "logical.or";
      return group(*l->lhs, condition_precedence(*l->lhs) < mine) + " " +
             table_.fill(key) + " " +
             group(*l->rhs, condition_precedence(*l->rhs) <= mine);
    }
    if (const auto* c = e.as<Comparison>()) {
      return value(*c->lhs) + " " + table_.fill(relop_key(c->op)) + " " +
             value(*c->rhs);
    }
    return value(e);
  }

  std::string lvalue(const LValue& target) const {
    if (!target.is_element()) return target.name;
    return table_.fill("element",
                       {{"index", value(*target.index)}, {"array", target.name}});
  }

  void statement(const Statement& s, int depth, std::string& out) const {
    std::visit(
        [this, depth, &out](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, DeclareVariable>) {
            std::map<std::string, std::string> slots = {
                {"name", n.name}, {"type", std::string(type_name(n.type))}};
            if (n.initial) slots["initial"] = value(*n.initial);
            line(depth, table_.fill("declare_variable", slots), out);
          } else if constexpr (std::is_same_v<T, DeclareArray>) {
            line(depth,
                 table_.fill("declare_array",
                             {{"name", n.name},
                              {"type", std::string(type_name(n.element_type))},
                              {"size", std::to_string(n.size)}}),
                 out);
          } else if constexpr (std::is_same_v<T, Assignment>) {
            line(depth,
                 table_.fill("assignment", {{"target", lvalue(n.target)},
                                            {"value", value(*n.value)}}),
                 out);
          } else if constexpr (std::is_same_v<T, Display>) {
            line(depth, table_.fill("display", {{"value", value(*n.value)}}),
                 out);
          } else if constexpr (std::is_same_v<T, Read>) {
            std::map<std::string, std::string> slots = {
                {"target", lvalue(n.target)}};
            if (n.prompt) slots["prompt"] = encode_string_literal(*n.prompt);
            line(depth, table_.fill("read", slots), out);
          } else if constexpr (std::is_same_v<T, If>) {
            for (std::size_t i = 0; i < n.arms.size(); ++i) {
              line(depth,
                   table_.fill(i == 0 ? "if.head" : "if.else_if",
                               {{"condition", condition(*n.arms[i].condition)}}),
                   out);
              block(n.arms[i].body, depth + 1, out);
            }
            if (n.otherwise) {
              line(depth, table_.fill("if.otherwise"), out);
              block(*n.otherwise, depth + 1, out);
            }
            line(depth, table_.fill("if.end"), out);
          } else if constexpr (std::is_same_v<T, RepeatWhile>) {
            line(depth,
                 table_.fill("repeat.while",
                             {{"condition", condition(*n.condition)}}),
                 out);
            block(n.body, depth + 1, out);
            line(depth, table_.fill("repeat.end"), out);
          } else if constexpr (std::is_same_v<T, RepeatTimes>) {
            line(depth, table_.fill("repeat.times", {{"count", value(*n.count)}}),
                 out);
            block(n.body, depth + 1, out);
            line(depth, table_.fill("repeat.end"), out);
          } else {
            line(depth,
                 table_.fill("select.head", {{"scrutinee", value(*n.scrutinee)}}),
                 out);
            for (const auto& c : n.cases) {
              line(depth, table_.fill("select.case", {{"label", value(*c.label)}}),
                   out);
              block(c.body, depth + 1, out);
            }
            if (n.other) {
              line(depth, table_.fill("select.other"), out);
              block(*n.other, depth + 1, out);
            }
            line(depth, table_.fill("select.end"), out);
          }
        },
        s.node);
  }

 private:
  std::string wrap(const Expr& e, bool parens) const {
    return parens ? "(" + value(e) + ")" : value(e);
  }
  std::string group(const Expr& e, bool parens) const {
    return parens ? "(" + condition(e) + ")" : condition(e);
  }

  static void line(int depth, const std::string& text, std::string& out) {
    if (!out.empty()) out += '\n';
    out.append(static_cast<std::size_t>(depth * kIndentWidth), ' ');
    out += text;
  }

  void block(const Block& body, int depth, std::string& out) const {
    for (const auto& s : body) statement(s, depth, out);
  }

  const PatternTable& table_;
};

}  // namespace

NlgPattern::NlgPattern(std::string text) : text_(std::move(text)) {
  std::size_t pos = 0;
  segments_ = parse(text_, pos, false);
}

std::vector<NlgPattern::Segment> NlgPattern::parse(std::string_view text,
                                                   std::size_t& pos,
                                                   bool nested) {
  std::vector<Segment> out;
  std::string fixed;
  auto flush = [&] {
    if (!fixed.empty()) {
      out.push_back(Segment{Segment::Kind::kFixed, std::move(fixed), {}});
      fixed.clear();
    }
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '{') {
      const auto close = text.find('}', pos);
      if (close == std::string_view::npos) {
        throw std::invalid_argument("unclosed '{' in pattern");
      }
      flush();
      out.push_back(Segment{Segment::Kind::kSlot,
                            std::string(text.substr(pos + 1, close - pos - 1)),
                            {}});
      pos = close + 1;
    } else if (c == '[') {
      flush();
      ++pos;
      out.push_back(Segment{Segment::Kind::kOptional, "", parse(text, pos, true)});
    } else if (c == ']') {
      if (!nested) throw std::invalid_argument("unbalanced ']' in pattern");
      flush();
      ++pos;
      return out;
    } else {
      fixed += c;
      ++pos;
    }
  }
  if (nested) throw std::invalid_argument("unclosed '[' in pattern");
  flush();
  return out;
}

bool NlgPattern::all_present(const std::vector<Segment>& segments,
                             const std::map<std::string, std::string>& slots) {
  for (const auto& s : segments) {
    if (s.kind == Segment::Kind::kSlot && !slots.contains(s.text)) return false;
  }
  return true;
}

void NlgPattern::emit(const std::vector<Segment>& segments,
                      const std::map<std::string, std::string>& slots,
                      std::string& out) {
  for (const auto& s : segments) {
    switch (s.kind) {
      case Segment::Kind::kFixed:
        out += s.text;
        break;
      case Segment::Kind::kSlot: {
        auto it = slots.find(s.text);
        if (it == slots.end()) {
          throw std::invalid_argument("missing value for slot '" + s.text + "'");
        }
        out += it->second;
        break;
      }
      case Segment::Kind::kOptional:
        if (all_present(s.children, slots)) emit(s.children, slots, out);
        break;
    }
  }
}

std::string NlgPattern::fill(
    const std::map<std::string, std::string>& slots) const {
  std::string out;
  emit(segments_, slots, out);
  return out;
}

PatternTable::PatternTable(std::map<std::string, std::string> patterns) {
  for (auto& [key, text] : patterns) {
    patterns_.emplace(key, NlgPattern(std::move(text)));
  }
}

const PatternTable& PatternTable::english() {
  static const PatternTable table({
      {"declare_variable",
       "Declare a variable called {name} of type {type}[ with initial value "
       "{initial}]."},
      {"declare_array",
       "Declare an array called {name} of type {type} with size {size}."},
      {"assignment", "Set {target} to {value}."},
      {"display", "Display {value} on the screen."},
      {"read", "Read {target} from the keyboard[ with prompt {prompt}]."},
      {"if.head", "If {condition} then"},
      {"if.else_if", "Otherwise if {condition} then"},
      {"if.otherwise", "Otherwise"},
      {"if.end", "End of condition."},
      {"repeat.while", "Repeat while {condition}"},
      {"repeat.times", "Repeat {count} times"},
      {"repeat.end", "End of repeat."},
      {"select.head", "Select on {scrutinee}"},
      {"select.case", "When {label} then"},
      {"select.other", "When other then"},
      {"select.end", "End of select."},
      {"element", "element {index} of {array}"},
      {"relop.greater", "is Greater than"},
      {"relop.smaller", "is Smaller than"},
      {"relop.greater_or_equal", "is Greater or Equal to"},
      {"relop.smaller_or_equal", "is Smaller or Equal to"},
      {"relop.equal", "is Equal to"},
      {"relop.not_equal", "is Not Equal to"},
      {"logical.and", "And"},
      {"logical.or", "Or"},
  });
  return table;
}

const NlgPattern& PatternTable::get(std::string_view key) const {
  auto it = patterns_.find(key);
  if (it == patterns_.end()) {
    throw std::out_of_range("no NLG pattern '" + std::string(key) + "'");
  }
  return it->second;
}

std::string PatternTable::fill(
    std::string_view key, const std::map<std::string, std::string>& slots) const {
  return get(key).fill(slots);
}

std::string PatternTable::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [key, pattern] : patterns_) j[key] = pattern.text();
  return j.dump(2);
}

std::string realize_expression(const Expr& e, const PatternTable& table) {
  return Realizer(table).value(e);
}

std::string realize_condition(const Expr& e, const PatternTable& table) {
  return Realizer(table).condition(e);
}

std::string realize_statement(const Statement& s, const PatternTable& table) {
  std::string out;
  Realizer(table).statement(s, 0, out);
  return out;
}

std::string realize_program(const Program& p, const PatternTable& table) {
  std::string out;
  Realizer realizer(table);
  for (const auto& s : p.statements) {
    std::string text;
    realizer.statement(s, 0, text);
    out += text;
    out += '\n';
  }
  return out;
}

}  // namespace natprog
