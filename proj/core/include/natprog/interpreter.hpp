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

#ifndef NATPROG_INTERPRETER_HPP_
#define NATPROG_INTERPRETER_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "natprog/ast.hpp"
#include "natprog/diagnostic.hpp"
#include "natprog/semantics.hpp"

namespace natprog {

inline constexpr std::uint64_t kDefaultStepLimit = 10'000'000;

// Number values are always finite.
using Value = std::variant<double, std::string>;

// Display text of a value; numbers use format_number.
std::string render_value(const Value& value);

// Source of Read values. The prompt, if any, is passed along for interactive
// providers; nullopt means input is exhausted.
class InputProvider {
 public:
  virtual ~InputProvider() = default;
  virtual std::optional<std::string> next(
      const std::optional<std::string>& prompt) = 0;
};

class ScriptedInput : public InputProvider {
 public:
  explicit ScriptedInput(std::vector<std::string> lines)
      : lines_(std::move(lines)) {}
  std::optional<std::string> next(const std::optional<std::string>&) override {
    if (pos_ >= lines_.size()) return std::nullopt;
    return lines_[pos_++];
  }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

// Variable storage: scalars and fixed-length arrays, created with type
// defaults (0 / empty text) for every declared symbol.
class Environment {
 public:
  Environment() = default;
  explicit Environment(const SymbolTable& symbols);

  // Throws std::out_of_range for undeclared names or kind mismatch.
  Value& scalar(std::string_view name);
  std::vector<Value>& array(std::string_view name);
  const Value& scalar(std::string_view name) const;
  const std::vector<Value>& array(std::string_view name) const;

  void set_scalar(std::string_view name, Value value);
  void set_array(std::string_view name, std::vector<Value> values);

 private:
  std::unordered_map<std::string, Value> scalars_;
  std::unordered_map<std::string, std::vector<Value>> arrays_;
};

struct RunResult {
  std::vector<std::string> outputs;
  std::optional<Diagnostic> runtime_error;  // an R-code
  std::uint64_t steps_used = 0;

  bool ok() const { return !runtime_error.has_value(); }
};

struct RunOptions {
  std::uint64_t step_limit = kDefaultStepLimit;
  // Called for each Display line as it happens.
  std::function<void(const std::string&)> on_output;
};

// Executes a checked program. Each executed statement, each evaluated
// expression node and each loop iteration costs one step.
RunResult run(const CheckedProgram& program, InputProvider& inputs,
              const RunOptions& options = {});

struct EvalResult {
  std::optional<Value> value;
  std::optional<Diagnostic> error;
};

// Evaluates a value-position expression against `env` with no step limit.
EvalResult eval_expression(const Expr& expr, const Environment& env);

}  // namespace natprog

#endif  // NATPROG_INTERPRETER_HPP_
