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

#ifndef NATPROG_SEMANTICS_HPP_
#define NATPROG_SEMANTICS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "natprog/ast.hpp"
#include "natprog/diagnostic.hpp"

namespace natprog {

inline constexpr std::size_t kMaxIdentifierLength = 64;

struct Symbol {
  std::string spelling;  // as declared
  TypeTag type;
  SourceSpan declaration_span;
  std::size_t declaration_index = 0;  // pre-order statement index
};

// Single flat global scope keyed by case-folded name.
class SymbolTable {
 public:
  const Symbol* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  // False (and no change) if the folded name is already present.
  bool insert(Symbol symbol);

  std::size_t size() const { return by_key_.size(); }
  const std::map<std::string, Symbol>& entries() const { return by_key_; }

 private:
  std::map<std::string, Symbol> by_key_;
};

// A Program that passed analysis. `types` holds the value type of every
// value-position Expr node (guards have none).
struct CheckedProgram {
  Program program;
  SymbolTable symbols;
  std::unordered_map<const Expr*, BaseType> types;

  // Throws std::out_of_range for nodes that were not annotated.
  BaseType type_of(const Expr& e) const { return types.at(&e); }
};

struct AnalysisResult {
  std::optional<CheckedProgram> checked;  // set iff no error diagnostics
  std::vector<Diagnostic> diagnostics;
  SymbolTable symbols;  // everything declared, even when errors were found
};

AnalysisResult analyze(Program program);

// E003 for names that break the identifier rule (leading letter, then
// letters/digits/underscore, at most 64 bytes); E006 for reserved words.
std::optional<Diagnostic> check_identifier(std::string_view name,
                                           SourceSpan span = {});

struct TypeResult {
  std::optional<BaseType> type;
  std::vector<Diagnostic> diagnostics;
};

// Value type of a value-position expression under `symbols`.
TypeResult type_of(const Expr& expr, const SymbolTable& symbols);

// Statement-at-a-time checker. analyze() runs one over a whole program;
// template validation runs one seeded with the symbols of the live program.
class Analyzer {
 public:
  explicit Analyzer(SymbolTable symbols = {});

  void check(const Statement& statement);
  // Checks a guard (Comparison/Logical tree).
  void check_condition(const Expr& condition);
  std::optional<BaseType> check_value(const Expr& expr);

  const SymbolTable& symbols() const { return symbols_; }
  SymbolTable take_symbols() { return std::move(symbols_); }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
  std::vector<Diagnostic> take_diagnostics() { return std::move(diagnostics_); }
  std::unordered_map<const Expr*, BaseType> take_types() {
    return std::move(types_);
  }

 private:
  void error(std::string_view code, SourceSpan span, std::string message,
             std::optional<std::string> name = std::nullopt);
  void check_block(const Block& block);
  void declare(const std::string& name, TypeTag type, SourceSpan span);
  std::optional<BaseType> check_lvalue(const LValue& target);
  std::optional<BaseType> check_name(const std::string& name, bool element,
                                     SourceSpan span);
  void check_case_label(const Expr& label, std::optional<BaseType> expected);

  SymbolTable symbols_;
  std::vector<Diagnostic> diagnostics_;
  std::unordered_map<const Expr*, BaseType> types_;
  std::size_t next_index_ = 0;
};

}  // namespace natprog

#endif  // NATPROG_SEMANTICS_HPP_
