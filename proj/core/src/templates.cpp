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

#include "natprog/templates.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

#include "natprog/lexer.hpp"
#include "natprog/number_text.hpp"
#include "natprog/parser.hpp"

namespace natprog {
namespace {

constexpr std::array<std::pair<SlotKind, std::string_view>, 9> kKindNames = {{
    {SlotKind::kIdentifier, "identifier"},
    {SlotKind::kTypeChoice, "type-choice"},
    {SlotKind::kChoice, "choice"},
    {SlotKind::kExpression, "expression"},
    {SlotKind::kCondition, "condition"},
    {SlotKind::kLiteralList, "literal-list"},
    {SlotKind::kInteger, "integer"},
    {SlotKind::kString, "string"},
    {SlotKind::kBoolean, "boolean"},
}};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

std::string_view trim(std::string_view text) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto first = text.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  return text.substr(first, text.find_last_not_of(kSpace) - first + 1);
}

SlotDescriptor slot(std::string name, std::string label, SlotKind kind,
                    bool required, std::vector<std::string> choices = {}) {
  if (kind == SlotKind::kTypeChoice) choices = {"Number", "String"};
  return SlotDescriptor{std::move(name), std::move(label), kind, required,
                        std::move(choices)};
}

std::vector<TemplateDescriptor> build_catalog() {
  using K = SlotKind;
  return {
      {"declare-variable", "Declare a variable",
       "Creates a Number or String variable, optionally with a starting value.",
       {slot("name", "Variable name", K::kIdentifier, true),
        slot("type", "Type", K::kTypeChoice, true),
        slot("initial", "Initial value", K::kExpression, false)}},
      {"declare-array", "Declare an array",
       "Creates a fixed-size list of Numbers or Strings, numbered from 1.",
       {slot("name", "Array name", K::kIdentifier, true),
        slot("type", "Element type", K::kTypeChoice, true),
        slot("size", "Size", K::kInteger, true)}},
      {"assignment", "Set a value",
       "Stores the value of an expression in a variable or array element.",
       {slot("target", "Variable or array", K::kIdentifier, true),
        slot("index", "Element number (arrays only)", K::kExpression, false),
        slot("value", "New value", K::kExpression, true)}},
      {"display", "Display on the screen",
       "Shows the value of an expression as one line of output.",
       {slot("value", "Value to display", K::kExpression, true)}},
      {"read", "Read from the keyboard",
       "Asks the user for a value and stores it in a variable or element.",
       {slot("target", "Variable or array", K::kIdentifier, true),
        slot("index", "Element number (arrays only)", K::kExpression, false),
        slot("prompt", "Prompt", K::kString, false)}},
      {"if", "If condition",
       "Runs the enclosed statements only when a condition holds.",
       {slot("condition", "Condition", K::kCondition, true),
        slot("otherwise", "Add an Otherwise part", K::kBoolean, false)}},
      {"repeat", "Repeat",
       "Runs the enclosed statements while a condition holds, or a fixed "
       "number of times.",
       {slot("mode", "Repeat", K::kChoice, true, {"while", "times"}),
        slot("condition", "Condition (while)", K::kCondition, false),
        slot("count", "Number of times (times)", K::kExpression, false)}},
      {"select", "Select",
       "Chooses the statements to run by comparing a value against cases.",
       {slot("scrutinee", "Value to select on", K::kExpression, true),
        slot("cases", "Case values", K::kLiteralList, true),
        slot("include-other", "Add a When other case", K::kBoolean, false)}},
  };
}

// Slot values after trimming; empty values count as absent.
class SlotReader {
 public:
  SlotReader(const TemplateDescriptor& descriptor,
             const TemplateInstance& instance)
      : descriptor_(descriptor), instance_(instance) {}

  std::optional<std::string> get(std::string_view name) const {
    auto it = instance_.slots.find(std::string(name));
    if (it == instance_.slots.end()) return std::nullopt;
    const SlotDescriptor* desc = descriptor_.slot(name);
    if (desc && desc->kind == SlotKind::kString) {
      if (it->second.empty()) return std::nullopt;
      return it->second;
    }
    const auto trimmed = trim(it->second);
    if (trimmed.empty()) return std::nullopt;
    return std::string(trimmed);
  }

  bool flag(std::string_view name) const {
    const auto v = get(name);
    return v && iequals(*v, "true");
  }

  // Whether a slot that is optional in the descriptor is needed anyway.
  bool required(const SlotDescriptor& desc) const {
    if (desc.required) return true;
    if (descriptor_.id == "repeat") {
      const auto mode = get("mode");
      if (!mode) return false;
      return (desc.name == "condition" && iequals(*mode, "while")) ||
             (desc.name == "count" && iequals(*mode, "times"));
    }
    return false;
  }

 private:
  const TemplateDescriptor& descriptor_;
  const TemplateInstance& instance_;
};

std::vector<Diagnostic> retag(std::vector<Diagnostic> diagnostics,
                              const std::string& slot_name) {
  for (auto& d : diagnostics) {
    d.code = std::string(codes::kInvalidSlot);
    d.message = "slot '" + slot_name + "': " + d.message;
    d.related_name = slot_name;
  }
  return diagnostics;
}

FragmentOutput parse_fragment(std::string_view text, SlotKind kind) {
  LexOutput lexed = tokenize(text);
  if (!lexed.diagnostics.empty()) return FragmentOutput{nullptr, lexed.diagnostics};
  return kind == SlotKind::kCondition ? parse_condition(lexed.tokens)
                                      : parse_expression(lexed.tokens);
}

struct LiteralListOutput {
  std::vector<ExprPtr> labels;
  std::vector<Diagnostic> diagnostics;
};

LiteralListOutput parse_literal_list(std::string_view text) {
  LiteralListOutput out;
  LexOutput lexed = tokenize(text);
  if (!lexed.diagnostics.empty()) {
    out.diagnostics = std::move(lexed.diagnostics);
    return out;
  }
  const auto& tokens = lexed.tokens;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    if (tok.kind == TokenKind::kStringLiteral) {
      out.labels.push_back(
          make_expr(StringLit{decode_string_literal(tok.lexeme)}, tok.span));
      continue;
    }
    const bool negative = tok.kind == TokenKind::kOperator && tok.lexeme == "-";
    const Token& number = negative && i + 1 < tokens.size() ? tokens[i + 1] : tok;
    const auto value = number.kind == TokenKind::kNumberLiteral
                           ? parse_number_literal(number.lexeme)
                           : std::nullopt;
    if (!value) {
      out.diagnostics.push_back(make_error(
          codes::kSyntax, number.span,
          "expected a number or quoted string literal, found '" +
              number.lexeme + "'"));
      return out;
    }
    ExprPtr lit = make_expr(NumberLit{*value}, number.span);
    if (negative) {
      lit = make_expr(Negate{lit}, span_merge(tok.span, number.span));
      ++i;
    }
    out.labels.push_back(std::move(lit));
  }
  if (out.labels.empty()) {
    out.diagnostics.push_back(
        make_error(codes::kSyntax, {}, "expected at least one case value"));
  }
  return out;
}

std::vector<Diagnostic> validate_slot(const SlotDescriptor& desc,
                                      const std::string& value) {
  auto invalid = [&desc](std::string message) {
    return std::vector<Diagnostic>{
        make_error(codes::kInvalidSlot, {}, "slot '" + desc.name + "': " + message,
                   desc.name)};
  };
  switch (desc.kind) {
    case SlotKind::kIdentifier: {
      if (auto bad = check_identifier(value)) return invalid(bad->message);
      return {};
    }
    case SlotKind::kTypeChoice:
    case SlotKind::kChoice: {
      const bool ok = std::any_of(desc.choices.begin(), desc.choices.end(),
                                  [&](const std::string& c) {
                                    return iequals(c, value);
                                  });
      if (ok) return {};
      std::string allowed;
      for (const auto& c : desc.choices) {
        allowed += allowed.empty() ? c : ", " + c;
      }
      return invalid("'" + value + "' is not one of " + allowed);
    }
    case SlotKind::kExpression:
    case SlotKind::kCondition:
      return retag(parse_fragment(value, desc.kind).diagnostics, desc.name);
    case SlotKind::kLiteralList:
      return retag(parse_literal_list(value).diagnostics, desc.name);
    case SlotKind::kInteger: {
      const bool digits = std::all_of(value.begin(), value.end(), [](char c) {
        return c >= '0' && c <= '9';
      });
      const auto n = digits ? parse_number_literal(value) : std::nullopt;
      if (!n || *n < 1 || *n > static_cast<double>(kMaxArraySize)) {
        return invalid("'" + value + "' is not a whole number between 1 and " +
                       std::to_string(kMaxArraySize));
      }
      return {};
    }
    case SlotKind::kString:
      return {};
    case SlotKind::kBoolean:
      if (iequals(value, "true") || iequals(value, "false")) return {};
      return invalid("'" + value + "' is not true or false");
  }
  return {};
}

ExprPtr fragment_or_throw(const std::string& text, SlotKind kind) {
  FragmentOutput parsed = parse_fragment(text, kind);
  if (!parsed.expr) {
    throw std::logic_error("instantiate: slot text does not parse: " + text);
  }
  return parsed.expr;
}

BaseType type_choice(const std::string& value) {
  return iequals(value, "String") ? BaseType::kString : BaseType::kNumber;
}

LValue target_of(const SlotReader& slots) {
  LValue target{*slots.get("target"), nullptr, {}};
  if (auto index = slots.get("index")) {
    target.index = fragment_or_throw(*index, SlotKind::kExpression);
  }
  return target;
}

}  // namespace

std::string_view slot_kind_name(SlotKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "string";
}

std::optional<SlotKind> slot_kind_from_name(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

const SlotDescriptor* TemplateDescriptor::slot(std::string_view name) const {
  for (const auto& s : slots) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const std::vector<TemplateDescriptor>& catalog() {
  static const std::vector<TemplateDescriptor> templates = build_catalog();
  return templates;
}

const TemplateDescriptor* find_template(std::string_view id) {
  for (const auto& t : catalog()) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

std::vector<Diagnostic> validate_instance(const TemplateInstance& instance,
                                          const SymbolTable& symbols) {
  std::vector<Diagnostic> out;
  const TemplateDescriptor* descriptor = find_template(instance.template_id);
  if (descriptor == nullptr) {
    out.push_back(make_error(codes::kInvalidSlot, {},
                             "unknown template '" + instance.template_id + "'",
                             "templateId"));
    return out;
  }
  for (const auto& [name, value] : instance.slots) {
    if (descriptor->slot(name) == nullptr) {
      out.push_back(make_error(codes::kInvalidSlot, {},
                               "template '" + descriptor->id +
                                   "' has no slot '" + name + "'",
                               name));
    }
  }
  const SlotReader reader(*descriptor, instance);
  for (const auto& desc : descriptor->slots) {
    const auto value = reader.get(desc.name);
    if (!value) {
      if (reader.required(desc)) {
        out.push_back(make_error(codes::kMissingSlot, {},
                                 "required slot '" + desc.name + "' is missing",
                                 desc.name));
      }
      continue;
    }
    auto problems = validate_slot(desc, *value);
    out.insert(out.end(), problems.begin(), problems.end());
  }
  if (!out.empty()) return out;

  Analyzer analyzer(symbols);
  analyzer.check(instantiate(instance));
  return analyzer.take_diagnostics();
}

Statement instantiate(const TemplateInstance& instance) {
  const TemplateDescriptor* descriptor = find_template(instance.template_id);
  if (descriptor == nullptr) {
    throw std::logic_error("instantiate: unknown template " +
                           instance.template_id);
  }
  const SlotReader slots(*descriptor, instance);
  auto require = [&slots](std::string_view name) {
    auto v = slots.get(name);
    if (!v) {
      throw std::logic_error("instantiate: missing slot " + std::string(name));
    }
    return *v;
  };
  const std::string& id = descriptor->id;
  using K = SlotKind;

  if (id == "declare-variable") {
    ExprPtr initial;
    if (auto text = slots.get("initial")) {
      initial = fragment_or_throw(*text, K::kExpression);
    }
    return Statement{DeclareVariable{require("name"),
                                     type_choice(require("type")), initial, {}},
                     {}};
  }
  if (id == "declare-array") {
    const auto size = parse_number_literal(require("size"));
    if (!size) throw std::logic_error("instantiate: bad array size");
    return Statement{DeclareArray{require("name"), type_choice(require("type")),
                                  static_cast<std::int64_t>(*size), {}},
                     {}};
  }
  if (id == "assignment") {
    require("target");
    return Statement{
        Assignment{target_of(slots),
                   fragment_or_throw(require("value"), K::kExpression)},
        {}};
  }
  if (id == "display") {
    return Statement{Display{fragment_or_throw(require("value"), K::kExpression)},
                     {}};
  }
  if (id == "read") {
    require("target");
    return Statement{Read{target_of(slots), slots.get("prompt")}, {}};
  }
  if (id == "if") {
    If node;
    node.arms.push_back(
        IfArm{fragment_or_throw(require("condition"), K::kCondition), {}});
    if (slots.flag("otherwise")) node.otherwise = Block{};
    return Statement{std::move(node), {}};
  }
  if (id == "repeat") {
    if (iequals(require("mode"), "while")) {
      return Statement{
          RepeatWhile{fragment_or_throw(require("condition"), K::kCondition), {}},
          {}};
    }
    return Statement{
        RepeatTimes{fragment_or_throw(require("count"), K::kExpression), {}}, {}};
  }
  // select
  LiteralListOutput labels = parse_literal_list(require("cases"));
  if (!labels.diagnostics.empty()) {
    throw std::logic_error("instantiate: bad case list");
  }
  Select node;
  node.scrutinee = fragment_or_throw(require("scrutinee"), K::kExpression);
  for (auto& label : labels.labels) {
    node.cases.push_back(SelectCase{std::move(label), {}});
  }
  if (slots.flag("include-other")) node.other = Block{};
  return Statement{std::move(node), {}};
}

void to_json(nlohmann::json& j, const SlotDescriptor& slot) {
  j = nlohmann::json{{"name", slot.name},
                     {"label", slot.label},
                     {"kind", slot_kind_name(slot.kind)},
                     {"required", slot.required}};
  if (!slot.choices.empty()) j["choices"] = slot.choices;
}

void from_json(const nlohmann::json& j, SlotDescriptor& slot) {
  slot.name = j.at("name").get<std::string>();
  slot.label = j.value("label", slot.name);
  const auto kind_name = j.at("kind").get<std::string>();
  const auto kind = slot_kind_from_name(kind_name);
  if (!kind) throw std::invalid_argument("unknown slot kind '" + kind_name + "'");
  slot.kind = *kind;
  slot.required = j.value("required", false);
  slot.choices = j.value("choices", std::vector<std::string>{});
}

void to_json(nlohmann::json& j, const TemplateDescriptor& descriptor) {
  j = nlohmann::json{{"id", descriptor.id},
                     {"title", descriptor.title},
                     {"description", descriptor.description},
                     {"slots", descriptor.slots}};
}

void from_json(const nlohmann::json& j, TemplateDescriptor& descriptor) {
  descriptor.id = j.at("id").get<std::string>();
  descriptor.title = j.value("title", descriptor.id);
  descriptor.description = j.value("description", std::string());
  descriptor.slots = j.at("slots").get<std::vector<SlotDescriptor>>();
}

void to_json(nlohmann::json& j, const TemplateInstance& instance) {
  j = nlohmann::json{{"templateId", instance.template_id},
                     {"slots", instance.slots}};
}

void from_json(const nlohmann::json& j, TemplateInstance& instance) {
  instance.template_id = j.at("templateId").get<std::string>();
  instance.slots.clear();
  if (!j.contains("slots")) return;
  for (const auto& [name, value] : j.at("slots").items()) {
    if (value.is_string()) {
      instance.slots[name] = value.get<std::string>();
    } else if (value.is_boolean()) {
      instance.slots[name] = value.get<bool>() ? "true" : "false";
    } else if (value.is_number()) {
      instance.slots[name] = value.dump();
    } else if (!value.is_null()) {
      throw std::invalid_argument("slot '" + name + "' must be a string");
    }
  }
}

nlohmann::json catalog_json(std::span<const TemplateDescriptor> templates) {
  return nlohmann::json{
      {"templates",
       std::vector<TemplateDescriptor>(templates.begin(), templates.end())}};
}

std::vector<TemplateDescriptor> catalog_from_json(const nlohmann::json& j) {
  return j.at("templates").get<std::vector<TemplateDescriptor>>();
}

}  // namespace natprog
