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

#include "natprog/diagnostic.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace natprog {
namespace {

constexpr std::array<std::string_view, 14> kRegistry = {
    codes::kRedeclaration,     codes::kTypeMismatch,
    codes::kIllegalIdentifier, codes::kUndeclared,
    codes::kSyntax,            codes::kReservedWord,
    codes::kBadCaseLabel,      codes::kMissingSlot,
    codes::kInvalidSlot,       codes::kDivisionByZero,
    codes::kIndexOutOfBounds,  codes::kBadNumericInput,
    codes::kBadRepeatCount,    codes::kStepLimit,
};

}  // namespace

std::span<const std::string_view> registered_codes() { return kRegistry; }

bool is_registered_code(std::string_view code) {
  return std::find(kRegistry.begin(), kRegistry.end(), code) !=
         kRegistry.end();
}

Diagnostic make_error(std::string_view code, SourceSpan span,
                      std::string message,
                      std::optional<std::string> related_name) {
  return Diagnostic{std::string(code), Severity::kError, span,
                    std::move(message), std::move(related_name)};
}

std::string format_diagnostic(const Diagnostic& d) {
  if (!is_registered_code(d.code)) {
    throw std::invalid_argument("unregistered diagnostic code: " + d.code);
  }
  std::string out = d.severity == Severity::kError ? "ERROR " : "WARNING ";
  out += d.code;
  out += " at ";
  out += std::to_string(d.span.line);
  out += ':';
  out += std::to_string(d.span.column);
  out += ": ";
  out += d.message;
  out += '.';
  return out;
}

bool has_errors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.is_error(); });
}

}  // namespace natprog
