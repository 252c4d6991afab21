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

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "natprog/pipeline.hpp"

namespace natprog {
namespace {

using namespace testing;  // NOLINT

TEST(Pipeline, CompileRadiusProgram) {
  const CompileResponse r = compile_source(load_case("radius").source);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.diagnostics.empty());
  ASSERT_TRUE(r.target_source.has_value());
  EXPECT_NE(r.target_source->find("double v_Radius"), std::string::npos);
  EXPECT_EQ(r.natural_source_echo, load_case("radius").source);
}

TEST(Pipeline, CompileReportsSyntaxThenSemantics) {
  const CompileResponse r = compile_source(
      "Declare a variable called X of type Number.\n"
      "Declare a variable called X of type Number.\n"
      "Display on the screen.\n");
  EXPECT_FALSE(r.ok);
  ASSERT_EQ(r.diagnostics.size(), 2u);
  EXPECT_EQ(r.diagnostics[0].code, "E005");
  EXPECT_EQ(r.diagnostics[1].code, "E001");
  EXPECT_FALSE(r.target_source.has_value());
}

TEST(Pipeline, EchoIsCanonical) {
  const CompileResponse r = compile_source(
      "display   ((1+2))*3  ON the SCREEN .");
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.natural_source_echo, "Display (1 + 2) * 3 on the screen.\n");
}

TEST(Pipeline, RunAverageDemo) {
  const RunResponse r = run_source(RunRequest{load_case("average").source, {"10", "20", "30"}});
  EXPECT_TRUE(r.ok);
  ASSERT_FALSE(r.outputs.empty());
  EXPECT_EQ(r.outputs.back(), "20");
}

TEST(Pipeline, RunWithCompileErrorsDoesNotExecute) {
  const RunResponse r = run_source(RunRequest{"Display Nope on the screen.", {}});
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.outputs.empty());
  EXPECT_EQ(r.steps_used, 0u);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, "E004");
}

TEST(Pipeline, GenerateRadiusSentence) {
  const GenerateResponse g = generate(TemplateInstance{
      "declare-variable", {{"name", "Radius"}, {"type", "Number"}, {"initial", "25"}}});
  ASSERT_TRUE(g.ok);
  EXPECT_EQ(*g.text, "Declare a variable called Radius of type Number with initial value 25.");
  const RunResponse r = run_source(RunRequest{*g.text + "\nDisplay Radius on the screen.", {}});
  EXPECT_EQ(r.outputs, std::vector<std::string>{"25"});
}

TEST(Pipeline, GenerateWithBrokenContextStillUsesItsDeclarations) {
  const GenerateResponse g = generate(
      TemplateInstance{"assignment", {{"target", "Total"}, {"value", "1"}}},
      "Declare a variable called Total of type Number.\nDisplay on the screen.\n");
  EXPECT_TRUE(g.ok);
}

}  // namespace
}  // namespace natprog
