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

#ifndef NATPROG_PIPELINE_HPP_
#define NATPROG_PIPELINE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "natprog/diagnostic.hpp"
#include "natprog/interpreter.hpp"
#include "natprog/semantics.hpp"
#include "natprog/templates.hpp"

namespace natprog {

// Front end + semantic analysis over a whole source text.
struct CheckedSource {
  std::optional<CheckedProgram> program;  // set iff no error diagnostics
  Program parsed;                         // possibly partial
  SymbolTable symbols;
  std::vector<Diagnostic> diagnostics;    // syntax, then semantic
};

CheckedSource check_source(std::string_view source);

struct CompileResponse {
  bool ok = false;
  std::vector<Diagnostic> diagnostics;
  std::optional<std::string> target_source;
  std::optional<std::string> natural_source_echo;  // canonical re-rendering
};

CompileResponse compile_source(std::string_view source);

struct RunRequest {
  std::string source;
  std::vector<std::string> inputs;
  std::uint64_t step_limit = kDefaultStepLimit;
};

struct RunResponse {
  bool ok = false;  // compiled and ran without a runtime error
  std::vector<std::string> outputs;
  std::vector<Diagnostic> diagnostics;  // compile-time
  std::optional<Diagnostic> runtime_error;
  std::uint64_t steps_used = 0;
};

RunResponse run_source(const RunRequest& request);
RunResponse run_source(std::string_view source, InputProvider& inputs,
                       const RunOptions& options);

struct GenerateResponse {
  bool ok = false;
  std::optional<std::string> text;  // realized sentence(s), no trailing newline
  std::vector<Diagnostic> diagnostics;
};

// Validates `instance` against the declarations in `context_source` (the
// live program) and realizes it.
GenerateResponse generate(const TemplateInstance& instance,
                          std::string_view context_source = {});

}  // namespace natprog

#endif  // NATPROG_PIPELINE_HPP_
