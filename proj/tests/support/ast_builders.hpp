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

#ifndef NATPROG_TESTS_SUPPORT_AST_BUILDERS_HPP_
#define NATPROG_TESTS_SUPPORT_AST_BUILDERS_HPP_

#include <string>

#include "natprog/ast.hpp"

namespace natprog::testing {

inline ExprPtr num(double v) { return make_expr(NumberLit{v}); }
inline ExprPtr str(std::string s) { return make_expr(StringLit{std::move(s)}); }
inline ExprPtr var(std::string name) { return make_expr(VarRef{std::move(name)}); }
inline ExprPtr elem(ExprPtr index, std::string array) {
  return make_expr(ElementRef{std::move(index), std::move(array)});
}
inline ExprPtr neg(ExprPtr e) { return make_expr(Negate{std::move(e)}); }
inline ExprPtr bin(BinaryOp op, ExprPtr a, ExprPtr b) {
  return make_expr(Binary{op, std::move(a), std::move(b)});
}
inline ExprPtr cmp(RelOp op, ExprPtr a, ExprPtr b) {
  return make_expr(Comparison{op, std::move(a), std::move(b)});
}
inline ExprPtr logic(LogicalOp op, ExprPtr a, ExprPtr b) {
  return make_expr(Logical{op, std::move(a), std::move(b)});
}

inline Statement stmt(Statement::Node node) { return Statement{std::move(node), {}}; }

}  // namespace natprog::testing

#endif  // NATPROG_TESTS_SUPPORT_AST_BUILDERS_HPP_
