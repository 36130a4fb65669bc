/*
   Copyright 2026 The motzeta authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "motzeta/lefschetz_poly.hpp"

namespace motzeta {

// Class expressions name elements of Z[L].  Grammar (version 1, normative):
//
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | primary ('^' uint)?
//   primary := uint | 'L' | 'pt' | 'A' '^' uint | 'P' '^' uint | '(' expr ')'
//
// Whitespace is insignificant.  Precedence: '^' > unary '-' > '*' > binary
// '+'/'-'; '^' applies to one primary only (no chained '^').  'A^n' and
// 'P^n' are single atoms with a mandatory exponent, distinct from 'L^n'
// which is an ordinary power of L; A^n and L^n evaluate identically.

struct ClassExpr;
using ExprPtr = std::unique_ptr<ClassExpr>;

struct IntLiteral {
    mpz_class value;
};

/// L, pt, A^dim or P^dim; dim is meaningful for the last two only.
struct Symbol {
    enum class Kind { line, point, affine, projective };
    Kind kind;
    std::uint64_t dim = 0;
};

struct Neg {
    ExprPtr operand;
};

struct Add {
    ExprPtr lhs, rhs;
};

struct Sub {
    ExprPtr lhs, rhs;
};

struct Mul {
    ExprPtr lhs, rhs;
};

struct Pow {
    ExprPtr base;
    std::uint64_t exponent;  // non-negative literal, bounded at parse time
};

struct ClassExpr {
    std::variant<IntLiteral, Symbol, Neg, Add, Sub, Mul, Pow> node;
};

enum class ParseErrorKind {
    unexpected_token,
    unbalanced_parens,
    bad_exponent,
    empty_input,
    nesting_too_deep,
};

/// Structured parse failure; offset is the 1-based byte position the error
/// was detected at.
class ParseError : public std::runtime_error {
  public:
    ParseError(ParseErrorKind kind, std::size_t offset, const std::string& detail);

    ParseErrorKind kind() const { return kind_; }
    std::size_t offset() const { return offset_; }

  private:
    ParseErrorKind kind_;
    std::size_t offset_;
};

/// Parses a class expression; throws ParseError on malformed input and
/// nothing else, for any byte string.
ClassExpr parse(std::string_view input);

/// Evaluates into Z[L]: pt -> 1, L -> L, A^n -> L^n, P^n -> 1 + ... + L^n.
/// Every AST evaluates.
LefschetzPoly eval_expr(const ClassExpr& expr);

/// parse + eval in one step.
LefschetzPoly parse_class(std::string_view input);

}  // namespace motzeta
