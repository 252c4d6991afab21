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

#include "natprog/pipeline.hpp"

#include "natprog/codegen.hpp"
#include "natprog/nlg.hpp"
#include "natprog/parser.hpp"

namespace natprog {

CheckedSource check_source(std::string_view source) {
  CheckedSource out;
  ParseOutput parsed = parse_source(source);
  out.diagnostics = std::move(parsed.diagnostics);
  AnalysisResult analysis = analyze(parsed.program);
  out.parsed = std::move(parsed.program);
  out.symbols = std::move(analysis.symbols);
  out.diagnostics.insert(out.diagnostics.end(), analysis.diagnostics.begin(),
                         analysis.diagnostics.end());
  if (!has_errors(out.diagnostics)) out.program = std::move(analysis.checked);
  return out;
}

CompileResponse compile_source(std::string_view source) {
  CheckedSource checked = check_source(source);
  CompileResponse response;
  response.diagnostics = std::move(checked.diagnostics);
  response.ok = checked.program.has_value();
  if (response.ok) {
    response.target_source = emit_target(*checked.program).source_text;
    response.natural_source_echo = realize_program(checked.program->program);
  }
  return response;
}

RunResponse run_source(std::string_view source, InputProvider& inputs,
                       const RunOptions& options) {
  CheckedSource checked = check_source(source);
  RunResponse response;
  response.diagnostics = std::move(checked.diagnostics);
  if (!checked.program) return response;
  RunResult result = run(*checked.program, inputs, options);
  response.ok = result.ok();
  response.outputs = std::move(result.outputs);
  response.runtime_error = std::move(result.runtime_error);
  response.steps_used = result.steps_used;
  return response;
}

RunResponse run_source(const RunRequest& request) {
  ScriptedInput inputs(request.inputs);
  RunOptions options;
  options.step_limit = request.step_limit;
  return run_source(request.source, inputs, options);
}

GenerateResponse generate(const TemplateInstance& instance,
                          std::string_view context_source) {
  GenerateResponse response;
  SymbolTable symbols;
  if (!context_source.empty()) symbols = check_source(context_source).symbols;
  response.diagnostics = validate_instance(instance, symbols);
  if (has_errors(response.diagnostics)) return response;
  response.text = realize_statement(instantiate(instance));
  response.ok = true;
  return response;
}

}  // namespace natprog
