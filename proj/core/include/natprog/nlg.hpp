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

#ifndef NATPROG_NLG_HPP_
#define NATPROG_NLG_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "natprog/ast.hpp"

namespace natprog {

// One sentence pattern: fixed words with `{slot}` interpolation points and
// `[...]` optional clauses that are emitted only when every slot inside them
// has a value.
class NlgPattern {
 public:
  // Throws std::invalid_argument on unbalanced braces or brackets.
  explicit NlgPattern(std::string text);

  const std::string& text() const { return text_; }
  std::string fill(const std::map<std::string, std::string>& slots) const;

 private:
  struct Segment {
    enum class Kind { kFixed, kSlot, kOptional } kind;
    std::string text;               // fixed text or slot name
    std::vector<Segment> children;  // kOptional only
  };

  static std::vector<Segment> parse(std::string_view text, std::size_t& pos,
                                    bool nested);
  static bool all_present(const std::vector<Segment>& segments,
                          const std::map<std::string, std::string>& slots);
  static void emit(const std::vector<Segment>& segments,
                   const std::map<std::string, std::string>& slots,
                   std::string& out);

  std::string text_;
  std::vector<Segment> segments_;
};

// Keyed pattern set. Swapping the table changes the human language of the
// generated source without touching the compiler.
class PatternTable {
 public:
  explicit PatternTable(std::map<std::string, std::string> patterns);

  static const PatternTable& english();

  const NlgPattern& get(std::string_view key) const;
  std::string fill(std::string_view key,
                   const std::map<std::string, std::string>& slots = {}) const;
  const std::map<std::string, NlgPattern, std::less<>>& patterns() const {
    return patterns_;
  }

  // {"<key>": "<pattern text>", ...}
  std::string to_json() const;

 private:
  std::map<std::string, NlgPattern, std::less<>> patterns_;
};

std::string realize_expression(const Expr& e,
                               const PatternTable& table = PatternTable::english());
std::string realize_condition(const Expr& e,
                              const PatternTable& table = PatternTable::english());

// Complete sentence(s) ending in '.', no trailing newline; block bodies are
// indented four spaces per level.
std::string realize_statement(const Statement& s,
                              const PatternTable& table = PatternTable::english());

// One realized statement per line, each followed by '\n'.
std::string realize_program(const Program& p,
                            const PatternTable& table = PatternTable::english());

}  // namespace natprog

#endif  // NATPROG_NLG_HPP_
