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

#ifndef NATPROG_NUMBER_TEXT_HPP_
#define NATPROG_NUMBER_TEXT_HPP_

#include <optional>
#include <string>
#include <string_view>

namespace natprog {

// Shortest plain-decimal text that reads back to exactly `value`. Integral
// values carry no decimal point, there is never an exponent, and negative
// zero renders as "0". `value` must be finite.
std::string format_number(double value);

// Reads a NumberLiteral lexeme (digits with an optional interior decimal
// point). nullopt when the text is malformed or the value is not finite.
std::optional<double> parse_number_literal(std::string_view text);

// Reads user input for a Number-typed Read: surrounding whitespace ignored,
// optional leading sign, then the literal rule.
std::optional<double> parse_number_input(std::string_view text);

}  // namespace natprog

#endif  // NATPROG_NUMBER_TEXT_HPP_
