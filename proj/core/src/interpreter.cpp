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

#include "natprog/interpreter.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "natprog/number_text.hpp"

namespace natprog {
namespace {

struct RuntimeFault {
  Diagnostic diagnostic;
};

Value default_value(BaseType type) {
  if (type == BaseType::kNumber) return 0.0;
  return std::string();
}

double as_number(const Value& v) {
  if (const double* d = std::get_if<double>(&v)) return *d;
  throw std::logic_error("internal: expected a Number value");
}

class Machine {
 public:
  Machine(Environment& env, std::uint64_t step_limit, InputProvider* inputs,
          RunResult* result,
          const std::function<void(const std::string&)>* on_output)
      : env_(env),
        step_limit_(step_limit),
        inputs_(inputs),
        result_(result),
        on_output_(on_output) {}

  std::uint64_t steps() const { return steps_; }

  void execute(const Block& block) {
    for (const auto& s : block) execute(s);
  }

  void execute(const Statement& statement) {
    charge(statement.span);
    std::visit([this, &statement](const auto& n) { exec(n, statement); },
               statement.node);
  }

  Value eval(const Expr& e) {
    charge(e.span);
    return std::visit([this, &e](const auto& n) -> Value { return value_of(n, e); },
                      e.node);
  }

 private:
  [[noreturn]] static void fault(std::string_view code, SourceSpan span,
                                 std::string message) {
    throw RuntimeFault{make_error(code, span, std::move(message))};
  }

  void charge(SourceSpan span) {
    if (steps_ >= step_limit_) {
      fault(codes::kStepLimit, span,
            "step limit of " + std::to_string(step_limit_) + " exceeded");
    }
    ++steps_;
  }

  static double checked(double result, SourceSpan span) {
    if (!std::isfinite(result)) {
      fault(codes::kDivisionByZero, span,
            "arithmetic result is not a finite number");
    }
    return result;
  }

  // --- statements ----------------------------------------------------------

  void exec(const DeclareVariable& n, const Statement&) {
    env_.set_scalar(n.name, n.initial ? eval(*n.initial) : default_value(n.type));
  }

  void exec(const DeclareArray& n, const Statement&) {
    env_.set_array(n.name, std::vector<Value>(static_cast<std::size_t>(n.size),
                                              default_value(n.element_type)));
  }

  void exec(const Assignment& n, const Statement&) {
    Value& slot = locate(n.target);
    slot = eval(*n.value);
  }

  void exec(const Display& n, const Statement&) {
    std::string line = render_value(eval(*n.value));
    if (on_output_ && *on_output_) (*on_output_)(line);
    if (result_) result_->outputs.push_back(std::move(line));
  }

  void exec(const Read& n, const Statement& statement) {
    Value& slot = locate(n.target);
    std::optional<std::string> text =
        inputs_ ? inputs_->next(n.prompt) : std::nullopt;
    if (!text) {
      fault(codes::kBadNumericInput, statement.span,
            "no input available for '" + n.target.name + "'");
    }
    if (std::holds_alternative<double>(slot)) {
      const auto number = parse_number_input(*text);
      if (!number) {
        fault(codes::kBadNumericInput, statement.span,
              "input '" + *text + "' is not a number");
      }
      slot = *number;
    } else {
      slot = std::move(*text);
    }
  }

  void exec(const If& n, const Statement&) {
    for (const auto& arm : n.arms) {
      if (test(*arm.condition)) {
        execute(arm.body);
        return;
      }
    }
    if (n.otherwise) execute(*n.otherwise);
  }

  void exec(const RepeatWhile& n, const Statement& statement) {
    while (test(*n.condition)) {
      execute(n.body);
      charge(statement.span);
    }
  }

  void exec(const RepeatTimes& n, const Statement& statement) {
    const double count = as_number(eval(*n.count));
    if (count < 0 || std::floor(count) != count) {
      fault(codes::kBadRepeatCount, n.count->span,
            "repeat count " + format_number(count) +
                " is not a whole number of zero or more");
    }
    for (double i = 0; i < count; ++i) {
      charge(statement.span);
      execute(n.body);
    }
  }

  void exec(const Select& n, const Statement&) {
    const Value scrutinee = eval(*n.scrutinee);
    for (const auto& c : n.cases) {
      if (eval(*c.label) == scrutinee) {
        execute(c.body);
        return;
      }
    }
    if (n.other) execute(*n.other);
  }

  // --- locations -----------------------------------------------------------

  Value& element(std::string_view array, const Expr& index_expr,
                 SourceSpan span) {
    const double index = as_number(eval(index_expr));
    std::vector<Value>& values = env_.array(array);
    if (std::floor(index) != index || index < 1 ||
        index > static_cast<double>(values.size())) {
      fault(codes::kIndexOutOfBounds, span,
            "element " + format_number(index) + " of '" + std::string(array) +
                "' does not exist (valid: 1 to " +
                std::to_string(values.size()) + ")");
    }
    return values[static_cast<std::size_t>(index) - 1];
  }

  Value& locate(const LValue& target) {
    if (target.is_element()) {
      return element(target.name, *target.index, target.span);
    }
    return env_.scalar(target.name);
  }

  // --- expressions ---------------------------------------------------------

  Value value_of(const NumberLit& n, const Expr&) { return n.value; }
  Value value_of(const StringLit& n, const Expr&) { return n.value; }
  Value value_of(const VarRef& n, const Expr&) { return env_.scalar(n.name); }
  Value value_of(const ElementRef& n, const Expr& e) {
    return element(n.array, *n.index, e.span);
  }
  Value value_of(const Negate& n, const Expr&) {
    return -as_number(eval(*n.operand));
  }

  Value value_of(const Binary& n, const Expr& e) {
    const Value lhs = eval(*n.lhs);
    const Value rhs = eval(*n.rhs);
    if (n.op == BinaryOp::kConcat) {
      return render_value(lhs) + render_value(rhs);
    }
    const double a = as_number(lhs);
    const double b = as_number(rhs);
    switch (n.op) {
      case BinaryOp::kAdd: return checked(a + b, e.span);
      case BinaryOp::kSubtract: return checked(a - b, e.span);
      case BinaryOp::kMultiply: return checked(a * b, e.span);
      case BinaryOp::kDivide:
        if (b == 0) fault(codes::kDivisionByZero, e.span, "division by zero");
        return checked(a / b, e.span);
      case BinaryOp::kRemainder:
        if (b == 0) fault(codes::kDivisionByZero, e.span, "remainder by zero");
        return checked(std::fmod(a, b), e.span);
      case BinaryOp::kConcat: break;
    }
    throw std::logic_error("internal: unknown operator");
  }

  [[noreturn]] Value value_of(const Comparison&, const Expr&) {
    throw std::logic_error("internal: condition evaluated as a value");
  }
  [[noreturn]] Value value_of(const Logical&, const Expr&) {
    throw std::logic_error("internal: condition evaluated as a value");
  }

 public:
  bool test(const Expr& e) {
    charge(e.span);
    if (const auto* l = e.as<Logical>()) {
      const bool lhs = test(*l->lhs);
      if (l->op == LogicalOp::kAnd) return lhs && test(*l->rhs);
      return lhs || test(*l->rhs);
    }
    const auto* c = e.as<Comparison>();
    if (c == nullptr) throw std::logic_error("internal: guard is not a condition");
    const Value lhs = eval(*c->lhs);
    const Value rhs = eval(*c->rhs);
    switch (c->op) {
      case RelOp::kEqual: return lhs == rhs;
      case RelOp::kNotEqual: return lhs != rhs;
      case RelOp::kGreater: return as_number(lhs) > as_number(rhs);
      case RelOp::kSmaller: return as_number(lhs) < as_number(rhs);
      case RelOp::kGreaterOrEqual: return as_number(lhs) >= as_number(rhs);
      case RelOp::kSmallerOrEqual: return as_number(lhs) <= as_number(rhs);
    }
    throw std::logic_error("internal: unknown relational operator");
  }

 private:
  Environment& env_;
  std::uint64_t step_limit_;
  std::uint64_t steps_ = 0;
  InputProvider* inputs_;
  RunResult* result_;
  const std::function<void(const std::string&)>* on_output_;
};

}  // namespace

std::string render_value(const Value& value) {
  if (const double* d = std::get_if<double>(&value)) return format_number(*d);
  return std::get<std::string>(value);
}

Environment::Environment(const SymbolTable& symbols) {
  for (const auto& [key, symbol] : symbols.entries()) {
    if (symbol.type.is_array()) {
      arrays_[key] = std::vector<Value>(
          static_cast<std::size_t>(*symbol.type.array_size),
          default_value(symbol.type.element));
    } else {
      scalars_[key] = default_value(symbol.type.element);
    }
  }
}

Value& Environment::scalar(std::string_view name) {
  return scalars_.at(fold_identifier(name));
}
const Value& Environment::scalar(std::string_view name) const {
  return scalars_.at(fold_identifier(name));
}
std::vector<Value>& Environment::array(std::string_view name) {
  return arrays_.at(fold_identifier(name));
}
const std::vector<Value>& Environment::array(std::string_view name) const {
  return arrays_.at(fold_identifier(name));
}
void Environment::set_scalar(std::string_view name, Value value) {
  scalars_[fold_identifier(name)] = std::move(value);
}
void Environment::set_array(std::string_view name, std::vector<Value> values) {
  arrays_[fold_identifier(name)] = std::move(values);
}

RunResult run(const CheckedProgram& program, InputProvider& inputs,
              const RunOptions& options) {
  RunResult result;
  Environment env(program.symbols);
  Machine machine(env, options.step_limit, &inputs, &result,
                  &options.on_output);
  try {
    machine.execute(program.program.statements);
  } catch (const RuntimeFault& fault) {
    result.runtime_error = fault.diagnostic;
  }
  result.steps_used = machine.steps();
  return result;
}

EvalResult eval_expression(const Expr& expr, const Environment& env) {
  Environment scratch = env;
  Machine machine(scratch, std::numeric_limits<std::uint64_t>::max(), nullptr,
                  nullptr, nullptr);
  EvalResult result;
  try {
    result.value = machine.eval(expr);
  } catch (const RuntimeFault& fault) {
    result.error = fault.diagnostic;
  }
  return result;
}

}  // namespace natprog
