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

#ifndef NATPROG_DIAGNOSTIC_HPP_
#define NATPROG_DIAGNOSTIC_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "natprog/source_span.hpp"

namespace natprog {

enum class Severity { kError, kWarning };

// Closed registry of diagnostic codes. E = compile-time, T = template slot
// validation, R = runtime.
namespace codes {
inline constexpr std::string_view kRedeclaration = "E001";
inline constexpr std::string_view kTypeMismatch = "E002";
inline constexpr std::string_view kIllegalIdentifier = "E003";
inline constexpr std::string_view kUndeclared = "E004";
inline constexpr std::string_view kSyntax = "E005";
inline constexpr std::string_view kReservedWord = "E006";
inline constexpr std::string_view kBadCaseLabel = "E007";
inline constexpr std::string_view kMissingSlot = "T001";
inline constexpr std::string_view kInvalidSlot = "T002";
inline constexpr std::string_view kDivisionByZero = "R101";
inline constexpr std::string_view kIndexOutOfBounds = "R102";
inline constexpr std::string_view kBadNumericInput = "R103";
inline constexpr std::string_view kBadRepeatCount = "R104";
inline constexpr std::string_view kStepLimit = "R105";
}  // namespace codes

// Every code in the registry, in numeric order.
std::span<const std::string_view> registered_codes();
bool is_registered_code(std::string_view code);

struct Diagnostic {
  std::string code;
  Severity severity = Severity::kError;
  SourceSpan span;
  // Without trailing period; format_diagnostic adds it.
  std::string message;
  std::optional<std::string> related_name;

  bool is_error() const { return severity == Severity::kError; }
  bool operator==(const Diagnostic&) const = default;
};

Diagnostic make_error(std::string_view code, SourceSpan span,
                      std::string message,
                      std::optional<std::string> related_name = std::nullopt);

// `ERROR <code> at <line>:<column>: <message>.` (or `WARNING ...`).
// Throws std::invalid_argument if the code is not registered.
std::string format_diagnostic(const Diagnostic& d);

bool has_errors(std::span<const Diagnostic> diagnostics);

}  // namespace natprog

#endif  // NATPROG_DIAGNOSTIC_HPP_
