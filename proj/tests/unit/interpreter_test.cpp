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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ast_builders.hpp"
#include "corpus.hpp"
#include "generators.hpp"
#include "natprog/interpreter.hpp"
#include "natprog/pipeline.hpp"
#include "oracle.hpp"

namespace natprog {
namespace {

using namespace testing;  // NOLINT

RunResponse run_text(std::string_view src, std::vector<std::string> inputs = {},
                     std::uint64_t step_limit = kDefaultStepLimit) {
  RunRequest request{std::string(src), std::move(inputs), step_limit};
  RunResponse r = run_source(request);
  EXPECT_TRUE(r.diagnostics.empty())
      << (r.diagnostics.empty() ? "" : format_diagnostic(r.diagnostics[0]));
  return r;
}

std::string eval_text(const Expr& e) {
  const EvalResult r = eval_expression(e, Environment{});
  if (r.error) return r.error->code;
  return render_value(*r.value);
}

TEST(Interpreter, ExpressionExamples) {
  using B = BinaryOp;
  EXPECT_EQ(eval_text(*bin(B::kRemainder, num(10), num(3))), "1");
  EXPECT_EQ(eval_text(*bin(B::kRemainder, neg(num(7)), num(3))), "-1");
  EXPECT_EQ(eval_text(*bin(B::kRemainder, num(7), neg(num(3)))), "1");
  EXPECT_EQ(eval_text(*bin(B::kRemainder, num(5.5), num(2))), "1.5");
  EXPECT_EQ(eval_text(*bin(B::kConcat, str("n="), bin(B::kDivide, num(1), num(4)))), "n=0.25");
  EXPECT_EQ(eval_text(*bin(B::kDivide, num(1), num(0))), "R101");
  EXPECT_EQ(eval_text(*bin(B::kRemainder, num(1), num(0))), "R101");
  EXPECT_EQ(eval_text(*neg(num(0))), "0");
}

TEST(Interpreter, ExpressionOracleAgreement) {
  Rng rng(31337);
  for (int i = 0; i < 3000; ++i) {
    const BaseType t = rng.chance(0.6) ? BaseType::kNumber : BaseType::kString;
    const ExprPtr e = random_value(rng, t, 5);
    ASSERT_LE(expr_depth(*e), 5);
    ASSERT_EQ(eval_text(*e), oracle_evaluate(*e)) << debug_string(*e);
  }
}

TEST(Interpreter, PrecedenceSweep) {
  const std::vector<std::pair<char, BinaryOp>> ops = {
      {'+', BinaryOp::kAdd},      {'-', BinaryOp::kSubtract}, {'*', BinaryOp::kMultiply},
      {'/', BinaryOp::kDivide},   {'%', BinaryOp::kRemainder}};
  auto apply = [](char op, double a, double b) {
    switch (op) {
      case '+': return a + b;
      case '-': return a - b;
      case '*': return a * b;
      case '/': return a / b;
      default: return std::fmod(a, b);
    }
  };
  auto tight = [](char op) { return op == '*' || op == '/' || op == '%'; };
  int checked = 0;
  for (const auto& [c1, op1] : ops) {
    for (const auto& [c2, op2] : ops) {
      const std::string text = std::string("Display 2 ") + c1 + " 3 " + c2 + " 4 on the screen.";
      const double expected = tight(c2) && !tight(c1) ? apply(c1, 2, apply(c2, 3, 4))
                                                      : apply(c2, apply(c1, 2, 3), 4);
      const RunResponse r = run_text(text);
      ASSERT_EQ(r.outputs.size(), 1u) << text;
      EXPECT_EQ(r.outputs[0], oracle_render_number(expected)) << text;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 25);
}

TEST(Interpreter, ShortCircuitGuardsSkipFaultingOperands) {
  const RunResponse r = run_text(
      "Declare an array called Values of type Number with size 2.\n"
      "Declare a variable called I of type Number with initial value 3.\n"
      "If I is Smaller or Equal to 2 And element I of Values is Equal to 0 then\n"
      "    Display \"and\" on the screen.\n"
      "End of condition.\n"
      "If I is Greater than 2 Or element I of Values is Equal to 0 then\n"
      "    Display \"or\" on the screen.\n"
      "End of condition.");
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.outputs, std::vector<std::string>{"or"});
}

TEST(Interpreter, CorpusOutputs) {
  for (const auto& name : corpus_names()) {
    const CorpusCase c = load_case(name);
    const RunResponse r = run_text(c.source, c.inputs);
    EXPECT_TRUE(r.ok) << name;
    // A record holding a newline spans several lines of the .out file.
    std::vector<std::string> lines;
    for (const auto& record : r.outputs) {
      std::istringstream split(record);
      for (std::string line; std::getline(split, line);) lines.push_back(line);
      if (record.empty()) lines.emplace_back();
    }
    EXPECT_EQ(lines, c.expected_outputs) << name;
  }
}

TEST(Interpreter, DeclarationsResetWhenReExecuted) {
  const RunResponse r = run_text(
      "Repeat 2 times\n"
      "    Declare a variable called Tally of type Number.\n"
      "    Set Tally to Tally + 5.\n"
      "    Display Tally on the screen.\n"
      "End of repeat.");
  EXPECT_EQ(r.outputs, (std::vector<std::string>{"5", "5"}));
}

TEST(Interpreter, ReadConvertsByTargetType) {
  const RunResponse r = run_text(
      "Declare a variable called N of type Number.\n"
      "Declare an array called Words of type String with size 2.\n"
      "Read N from the keyboard.\n"
      "Read element 2 of Words from the keyboard.\n"
      "Display N * 2 & element 2 of Words on the screen.",
      {" -1.5 ", "  spaced text "});
  EXPECT_EQ(r.outputs, std::vector<std::string>{"-3  spaced text "});
}

TEST(Interpreter, PromptsReachTheInputProvider) {
  struct Recording : InputProvider {
    std::vector<std::optional<std::string>> prompts;
    std::optional<std::string> next(const std::optional<std::string>& p) override {
      prompts.push_back(p);
      return "1";
    }
  } inputs;
  std::vector<std::string> streamed;
  RunOptions options;
  options.on_output = [&streamed](const std::string& line) { streamed.push_back(line); };
  const RunResponse r = run_source(
      "Declare a variable called N of type Number.\n"
      "Read N from the keyboard with prompt \"N?\".\n"
      "Read N from the keyboard.\n"
      "Display N on the screen.",
      inputs, options);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(inputs.prompts,
            (std::vector<std::optional<std::string>>{std::string("N?"), std::nullopt}));
  EXPECT_EQ(streamed, std::vector<std::string>{"1"});
}

struct RuntimeCase {
  const char* code;
  const char* source;
  std::vector<std::string> inputs;
};

TEST(Interpreter, RuntimeErrorsKeepPriorOutput) {
  const RuntimeCase cases[] = {
      {"R101", "Display \"before\" on the screen.\nDisplay 1 / 0 on the screen.", {}},
      {"R101", "Display \"before\" on the screen.\nDisplay 5 % (2 - 2) on the screen.", {}},
      {"R102",
       "Declare an array called Values of type Number with size 3.\n"
       "Display \"before\" on the screen.\nSet element 4 of Values to 1.", {}},
      {"R102",
       "Declare an array called Values of type Number with size 3.\n"
       "Display \"before\" on the screen.\nDisplay element 1.5 of Values on the screen.", {}},
      {"R103",
       "Declare a variable called N of type Number.\n"
       "Display \"before\" on the screen.\nRead N from the keyboard.", {"ten"}},
      {"R103",
       "Declare a variable called N of type Number.\n"
       "Display \"before\" on the screen.\nRead N from the keyboard.", {}},
      {"R104", "Display \"before\" on the screen.\nRepeat -1 times\nEnd of repeat.", {}},
      {"R104", "Display \"before\" on the screen.\nRepeat 2.5 times\nEnd of repeat.", {}},
      {"R105",
       "Display \"before\" on the screen.\nRepeat while 1 is Equal to 1\nEnd of repeat.", {}},
  };
  for (const auto& c : cases) {
    const RunResponse r = run_text(c.source, c.inputs, 100000);
    EXPECT_FALSE(r.ok) << c.source;
    ASSERT_TRUE(r.runtime_error.has_value()) << c.source;
    EXPECT_EQ(r.runtime_error->code, c.code) << c.source;
    EXPECT_EQ(r.outputs, std::vector<std::string>{"before"}) << c.source;
    EXPECT_EQ(r.runtime_error->span.line, c.code == std::string("R102") ||
                                                  c.code == std::string("R103")
                                              ? 3u
                                              : 2u)
        << c.source;
  }
}

TEST(Interpreter, OverflowIsAnArithmeticFault) {
  const RunResponse r = run_text(
      "Declare a variable called Big of type Number with initial value 10.\n"
      "Repeat 400 times\n    Set Big to Big * Big.\nEnd of repeat.");
  ASSERT_TRUE(r.runtime_error.has_value());
  EXPECT_EQ(r.runtime_error->code, "R101");
}

TEST(Interpreter, StepLimitIsExact) {
  const std::string src = "Display 1 on the screen.\nDisplay 2 on the screen.";
  const RunResponse full = run_text(src);
  ASSERT_TRUE(full.ok);
  EXPECT_EQ(full.steps_used, 4u);
  const RunResponse enough = run_text(src, {}, 4);
  EXPECT_TRUE(enough.ok);
  const RunResponse short_by_one = run_text(src, {}, 3);
  ASSERT_TRUE(short_by_one.runtime_error.has_value());
  EXPECT_EQ(short_by_one.runtime_error->code, "R105");
  EXPECT_EQ(short_by_one.outputs, std::vector<std::string>{"1"});
  const RunResponse zero = run_text(src, {}, 0);
  EXPECT_TRUE(zero.outputs.empty());
  EXPECT_EQ(zero.runtime_error->code, "R105");
}

TEST(Interpreter, EmptyLoopsStillConsumeSteps) {
  const RunResponse r = run_text("Repeat 1000000 times\nEnd of repeat.", {}, 5000);
  ASSERT_TRUE(r.runtime_error.has_value());
  EXPECT_EQ(r.runtime_error->code, "R105");
}

TEST(Interpreter, RandomProgramsNeverThrow) {
  Rng rng(777);
  for (int i = 0; i < 500; ++i) {
    const Program p = random_program(rng, rng.uniform(1, 15));
    const AnalysisResult a = analyze(p);
    ASSERT_TRUE(a.checked.has_value()) << debug_string(p);
    std::vector<std::string> inputs;
    for (int k = 0; k < 6; ++k) {
      inputs.push_back(rng.chance(0.8) ? std::to_string(rng.uniform(-5, 5)) : "x");
    }
    ScriptedInput provider(inputs);
    RunOptions options;
    options.step_limit = 20000;
    RunResult r;
    ASSERT_NO_THROW(r = run(*a.checked, provider, options)) << debug_string(p);
    if (r.runtime_error) {
      EXPECT_TRUE(is_registered_code(r.runtime_error->code));
    }
    EXPECT_LE(r.steps_used, 20000u);
  }
}

}  // namespace
}  // namespace natprog
