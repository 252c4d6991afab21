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

#include "natprog/parser.hpp"
#include "natprog/semantics.hpp"

namespace natprog {
namespace {

AnalysisResult analyze_source(std::string_view src) {
  ParseOutput parsed = parse_source(src);
  EXPECT_TRUE(parsed.diagnostics.empty())
      << (parsed.diagnostics.empty() ? "" : format_diagnostic(parsed.diagnostics[0]));
  return analyze(std::move(parsed.program));
}

std::vector<std::string> codes_of(const std::vector<Diagnostic>& diags) {
  std::vector<std::string> out;
  for (const auto& d : diags) out.push_back(d.code);
  return out;
}

// Offset of the n-th occurrence of needle in haystack.
std::size_t offset_of(std::string_view haystack, std::string_view needle, int n = 1) {
  std::size_t at = std::string_view::npos;
  for (int i = 0; i < n; ++i) at = haystack.find(needle, at + 1);
  return at;
}

TEST(Semantics, RedeclarationWitness) {
  const std::string src =
      "Declare a variable called Total of type Number.\n"
      "Declare a variable called TOTAL of type String.";
  const AnalysisResult r = analyze_source(src);
  ASSERT_EQ(codes_of(r.diagnostics), std::vector<std::string>{"E001"});
  const Diagnostic& d = r.diagnostics[0];
  EXPECT_EQ(d.span.start_offset, offset_of(src, "TOTAL"));
  EXPECT_EQ(d.span.end_offset, d.span.start_offset + 5);
  EXPECT_EQ(d.span.line, 2u);
  EXPECT_EQ(d.span.column, 27u);
  EXPECT_EQ(d.related_name, "TOTAL");
  EXPECT_FALSE(r.checked.has_value());
  EXPECT_EQ(r.symbols.find("total")->type.element, BaseType::kNumber);
}

TEST(Semantics, TypeMismatchWitness) {
  const std::string src =
      "Declare a variable called Total of type Number.\n"
      "Set Total to \"ten\".";
  const AnalysisResult r = analyze_source(src);
  ASSERT_EQ(codes_of(r.diagnostics), std::vector<std::string>{"E002"});
  const Diagnostic& d = r.diagnostics[0];
  EXPECT_EQ(d.span.start_offset, offset_of(src, "Set"));
  EXPECT_EQ(d.span.end_offset, src.size());
  EXPECT_EQ(d.span.line, 2u);
  EXPECT_EQ(d.span.column, 1u);
}

TEST(Semantics, IllegalIdentifierWitness) {
  const std::string src = "Declare a variable called 2ndTotal of type Number.";
  const AnalysisResult r = analyze_source(src);
  ASSERT_EQ(codes_of(r.diagnostics), std::vector<std::string>{"E003"});
  const Diagnostic& d = r.diagnostics[0];
  EXPECT_EQ(d.span.start_offset, offset_of(src, "2ndTotal"));
  EXPECT_EQ(d.span.end_offset, d.span.start_offset + 8);
  EXPECT_EQ(d.span.column, 27u);
}

TEST(Semantics, IdentifierRules) {
  EXPECT_FALSE(check_identifier("Total_2"));
  EXPECT_FALSE(check_identifier(std::string(64, 'x')));
  EXPECT_EQ(check_identifier(std::string(65, 'x'))->code, "E003");
  EXPECT_EQ(check_identifier("_x")->code, "E003");
  EXPECT_EQ(check_identifier("9")->code, "E003");
  EXPECT_EQ(check_identifier("")->code, "E003");
  EXPECT_EQ(check_identifier("While")->code, "E006");
}

TEST(Semantics, ReservedWordDeclaration) {
  const AnalysisResult r = analyze_source("Declare a variable called Size of type Number.");
  EXPECT_EQ(codes_of(r.diagnostics), std::vector<std::string>{"E006"});
}

TEST(Semantics, Undeclared) {
  const std::string src = "Display Missing on the screen.";
  const AnalysisResult r = analyze_source(src);
  ASSERT_EQ(codes_of(r.diagnostics), std::vector<std::string>{"E004"});
  EXPECT_EQ(r.diagnostics[0].span.column, 9u);
}

TEST(Semantics, DeclarationMustPrecedeUse) {
  const AnalysisResult r = analyze_source(
      "Set Late to 1.\nDeclare a variable called Late of type Number.");
  EXPECT_EQ(codes_of(r.diagnostics), std::vector<std::string>{"E004"});
}

TEST(Semantics, InitialValueMismatch) {
  const std::string src = "Declare a variable called Name of type String with initial value 3.";
  const AnalysisResult r = analyze_source(src);
  ASSERT_EQ(codes_of(r.diagnostics), std::vector<std::string>{"E002"});
  EXPECT_EQ(r.diagnostics[0].span.start_offset, src.size() - 2);
}

TEST(Semantics, OperandTypeRules) {
  const std::string decls =
      "Declare a variable called N of type Number.\n"
      "Declare a variable called S of type String.\n"
      "Declare an array called Arr of type Number with size 3.\n";
  const std::pair<const char*, const char*> cases[] = {
      {"Set N to S + 1.", "E002"},
      {"Set N to -S.", "E002"},
      {"Display element S of Arr on the screen.", "E002"},
      {"Display Arr on the screen.", "E002"},
      {"Display element 1 of N on the screen.", "E002"},
      {"If S is Greater than \"a\" then\nEnd of condition.", "E002"},
      {"If S is Equal to 1 then\nEnd of condition.", "E002"},
      {"Repeat S times\nEnd of repeat.", "E002"},
      {"Set S to N & S.", ""},
      {"If S is Not Equal to \"a\" And N is Smaller than 2 then\nEnd of condition.", ""},
  };
  for (const auto& [stmt, code] : cases) {
    const AnalysisResult r = analyze_source(decls + stmt);
    const std::vector<std::string> expected =
        std::string(code).empty() ? std::vector<std::string>{}
                                  : std::vector<std::string>{code};
    EXPECT_EQ(codes_of(r.diagnostics), expected) << stmt;
  }
}

TEST(Semantics, CaseLabels) {
  const std::string decls = "Declare a variable called N of type Number.\n";
  const std::pair<const char*, std::vector<std::string>> cases[] = {
      {"Select on N When 1 then When -2 then End of select.", {}},
      {"Select on N When N then End of select.", {"E007"}},
      {"Select on N When 1 + 1 then End of select.", {"E007"}},
      {"Select on N When \"one\" then End of select.", {"E007"}},
      {"Select on \"x\" When \"x\" then When 2 then End of select.", {"E007"}},
  };
  for (const auto& [stmt, expected] : cases) {
    const AnalysisResult r = analyze_source(decls + stmt);
    EXPECT_EQ(codes_of(r.diagnostics), expected) << stmt;
  }
}

TEST(Semantics, BlocksShareOneScope) {
  const AnalysisResult r = analyze_source(
      "If 1 is Equal to 1 then\n"
      "  Declare a variable called Inner of type Number.\n"
      "End of condition.\n"
      "Set Inner to 2.\n"
      "Repeat 2 times\n"
      "  Declare a variable called Inner of type Number.\n"
      "End of repeat.");
  EXPECT_EQ(codes_of(r.diagnostics), std::vector<std::string>{"E001"});
}

TEST(Semantics, EveryExpressionIsAnnotated) {
  const AnalysisResult r = analyze_source(
      "Declare an array called Values of type Number with size 3.\n"
      "Declare a variable called Label of type String with initial value \"x\".\n"
      "Set element 1 + 1 of Values to -(2 * 3).\n"
      "Display Label & element 2 of Values on the screen.\n"
      "Select on Label When \"x\" then End of select.");
  ASSERT_TRUE(r.checked.has_value());
  const CheckedProgram& cp = *r.checked;
  const auto& display = *cp.program.statements[3].as<Display>();
  EXPECT_EQ(cp.type_of(*display.value), BaseType::kString);
  const auto& concat = *display.value->as<Binary>();
  EXPECT_EQ(cp.type_of(*concat.rhs), BaseType::kNumber);
  const auto& assign = *cp.program.statements[2].as<Assignment>();
  EXPECT_EQ(cp.type_of(*assign.target.index), BaseType::kNumber);
  EXPECT_EQ(cp.type_of(*assign.value->as<Negate>()->operand), BaseType::kNumber);
}

TEST(Semantics, SymbolTableRecordsDeclarationOrder) {
  const AnalysisResult r = analyze_source(
      "Declare a variable called First of type Number.\n"
      "Display First on the screen.\n"
      "Declare an array called Second of type String with size 4.");
  ASSERT_TRUE(r.checked.has_value());
  const Symbol* first = r.symbols.find("FIRST");
  const Symbol* second = r.symbols.find("second");
  ASSERT_NE(first, nullptr);
  ASSERT_NE(second, nullptr);
  EXPECT_EQ(first->spelling, "First");
  EXPECT_LT(first->declaration_index, second->declaration_index);
  EXPECT_EQ(second->type.array_size, 4);
}

TEST(Semantics, AnalyzerAcceptsSeedSymbols) {
  SymbolTable seed;
  seed.insert(Symbol{"Count", TypeTag{BaseType::kNumber, std::nullopt}, {}, 0});
  Analyzer analyzer(seed);
  ParseOutput parsed = parse_source("Declare a variable called count of type Number.");
  analyzer.check(parsed.program.statements[0]);
  EXPECT_EQ(codes_of(analyzer.diagnostics()), std::vector<std::string>{"E001"});
}

TEST(Semantics, TypeOfFragment) {
  SymbolTable symbols;
  symbols.insert(Symbol{"S", TypeTag{BaseType::kString, std::nullopt}, {}, 0});
  ParseOutput parsed = parse_source("Display S & 1 on the screen.");
  const auto& e = *parsed.program.statements[0].as<Display>()->value;
  EXPECT_EQ(type_of(e, symbols).type, BaseType::kString);
  EXPECT_FALSE(type_of(e, SymbolTable{}).type.has_value());
}

}  // namespace
}  // namespace natprog
