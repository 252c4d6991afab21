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

#ifndef NATPROG_TEMPLATES_HPP_
#define NATPROG_TEMPLATES_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "natprog/ast.hpp"
#include "natprog/diagnostic.hpp"
#include "natprog/semantics.hpp"

namespace natprog {

enum class SlotKind {
  kIdentifier,
  kTypeChoice,   // Number | String
  kChoice,       // one of SlotDescriptor::choices
  kExpression,   // natural-language value expression
  kCondition,    // natural-language condition
  kLiteralList,  // whitespace-separated number/string literals
  kInteger,      // positive whole number
  kString,       // free text
  kBoolean,      // true | false
};

std::string_view slot_kind_name(SlotKind kind);
std::optional<SlotKind> slot_kind_from_name(std::string_view name);

struct SlotDescriptor {
  std::string name;
  std::string label;
  SlotKind kind = SlotKind::kString;
  bool required = false;
  std::vector<std::string> choices;

  bool operator==(const SlotDescriptor&) const = default;
};

struct TemplateDescriptor {
  std::string id;
  std::string title;
  std::string description;
  std::vector<SlotDescriptor> slots;

  const SlotDescriptor* slot(std::string_view name) const;
  bool operator==(const TemplateDescriptor&) const = default;
};

struct TemplateInstance {
  std::string template_id;
  std::map<std::string, std::string> slots;

  bool operator==(const TemplateInstance&) const = default;
};

// The eight statement templates, in a fixed order.
const std::vector<TemplateDescriptor>& catalog();
const TemplateDescriptor* find_template(std::string_view id);

// Returns no diagnostics iff every required slot is present (T001), every
// value passes its slot kind's validator (T002), and the resulting statement
// passes semantic analysis against `symbols` (E-codes). T-code diagnostics
// carry the slot name in related_name and spans relative to the slot text.
std::vector<Diagnostic> validate_instance(const TemplateInstance& instance,
                                          const SymbolTable& symbols);

// Builds the statement for a validated instance. Control-structure templates
// yield skeletons with empty bodies. Throws std::logic_error when the slot
// data does not pass the syntactic checks of validate_instance.
Statement instantiate(const TemplateInstance& instance);

// JSON wire formats:
//   {"templates":[{"id":..,"title":..,"description":..,"slots":[{"name":..,
//     "label":..,"kind":..,"required":..,"choices":[..]}]}]}
//   {"templateId":"declare-variable","slots":{"name":"Radius",...}}
void to_json(nlohmann::json& j, const SlotDescriptor& slot);
void from_json(const nlohmann::json& j, SlotDescriptor& slot);
void to_json(nlohmann::json& j, const TemplateDescriptor& descriptor);
void from_json(const nlohmann::json& j, TemplateDescriptor& descriptor);
void to_json(nlohmann::json& j, const TemplateInstance& instance);
void from_json(const nlohmann::json& j, TemplateInstance& instance);

nlohmann::json catalog_json(std::span<const TemplateDescriptor> templates);
std::vector<TemplateDescriptor> catalog_from_json(const nlohmann::json& j);

}  // namespace natprog

#endif  // NATPROG_TEMPLATES_HPP_
