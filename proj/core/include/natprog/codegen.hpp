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

#ifndef NATPROG_CODEGEN_HPP_
#define NATPROG_CODEGEN_HPP_

#include <string>
#include <string_view>

#include "natprog/semantics.hpp"

namespace natprog {

// A complete single-file C# program.
struct TargetUnit {
  std::string source_text;  // UTF-8, LF line endings, 4-space indentation
  std::string entry_point_name;
};

// Translates a checked program into C#. Output is byte-deterministic. The
// file embeds a small runtime class whose helpers reproduce the
// interpreter's semantics: 1-based checked indexing, number rendering,
// remainder with the sign of the dividend, and R-code runtime errors.
TargetUnit emit_target(const CheckedProgram& program);

// C# string literal (quotes included) for UTF-8 text.
std::string csharp_string_literal(std::string_view text);

}  // namespace natprog

#endif  // NATPROG_CODEGEN_HPP_
