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

#include "motzeta/expr_parser.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace motzeta {

namespace {

constexpr std::uint64_t kMaxExponent = 999'999'999;
constexpr int kMaxDepth = 256;

struct Token {
    enum class Kind { integer, line, point, affine, projective, plus, minus, star, caret, lparen, rparen, end };
    Kind kind;
    std::size_t offset;  // 1-based byte position of the first byte
    std::string text;    // digits, for integer tokens
};

std::vector<Token> tokenize(std::string_view input) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < input.size()) {
        const unsigned char ch = static_cast<unsigned char>(input[i]);
        const std::size_t offset = i + 1;
        if (std::isspace(ch)) {
            ++i;
            continue;
        }
        if (std::isdigit(ch)) {
            std::size_t j = i;
            while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) {
                ++j;
            }
            tokens.push_back({Token::Kind::integer, offset, std::string(input.substr(i, j - i))});
            i = j;
            continue;
        }
        if (std::isalpha(ch)) {
            std::size_t j = i;
            while (j < input.size() && std::isalpha(static_cast<unsigned char>(input[j]))) {
                ++j;
            }
            const std::string_view word = input.substr(i, j - i);
            Token::Kind kind;
            if (word == "L") {
                kind = Token::Kind::line;
            } else if (word == "pt") {
                kind = Token::Kind::point;
            } else if (word == "A") {
                kind = Token::Kind::affine;
            } else if (word == "P") {
                kind = Token::Kind::projective;
            } else {
                throw ParseError(ParseErrorKind::unexpected_token, offset,
                                 "unknown symbol '" + std::string(word) + "'");
            }
            tokens.push_back({kind, offset, {}});
            i = j;
            continue;
        }
        switch (ch) {
            case '+': tokens.push_back({Token::Kind::plus, offset, {}}); break;
            case '-': tokens.push_back({Token::Kind::minus, offset, {}}); break;
            case '*': tokens.push_back({Token::Kind::star, offset, {}}); break;
            case '^': tokens.push_back({Token::Kind::caret, offset, {}}); break;
            case '(': tokens.push_back({Token::Kind::lparen, offset, {}}); break;
            case ')': tokens.push_back({Token::Kind::rparen, offset, {}}); break;
            default:
                throw ParseError(ParseErrorKind::unexpected_token, offset,
                                 "unexpected character '" + std::string(1, input[i]) + "'");
        }
        ++i;
    }
    tokens.push_back({Token::Kind::end, input.size() + 1, {}});
    return tokens;
}

ExprPtr make_expr(ClassExpr&& e) { return std::make_unique<ClassExpr>(std::move(e)); }

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ClassExpr run() {
        if (peek().kind == Token::Kind::end) {
            throw ParseError(ParseErrorKind::empty_input, peek().offset, "empty input");
        }
        ClassExpr expr = parse_expr(0);
        if (peek().kind != Token::Kind::end) {
            if (peek().kind == Token::Kind::rparen) {
                throw ParseError(ParseErrorKind::unbalanced_parens, peek().offset,
                                 "unmatched ')'");
            }
            throw ParseError(ParseErrorKind::unexpected_token, peek().offset,
                             "trailing input after expression");
        }
        return expr;
    }

  private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }
    bool accept(Token::Kind kind) {
        if (peek().kind == kind) {
            ++pos_;
            return true;
        }
        return false;
    }

    ClassExpr parse_expr(int depth) {
        ClassExpr lhs = parse_term(depth);
        while (true) {
            if (accept(Token::Kind::plus)) {
                ClassExpr rhs = parse_term(depth);
                lhs = ClassExpr{Add{make_expr(std::move(lhs)), make_expr(std::move(rhs))}};
            } else if (accept(Token::Kind::minus)) {
                ClassExpr rhs = parse_term(depth);
                lhs = ClassExpr{Sub{make_expr(std::move(lhs)), make_expr(std::move(rhs))}};
            } else {
                return lhs;
            }
        }
    }

    ClassExpr parse_term(int depth) {
        ClassExpr lhs = parse_factor(depth);
        while (accept(Token::Kind::star)) {
            ClassExpr rhs = parse_factor(depth);
            lhs = ClassExpr{Mul{make_expr(std::move(lhs)), make_expr(std::move(rhs))}};
        }
        return lhs;
    }

    // '^' binds tighter than the unary minus, so "-L^2" is -(L^2).
    ClassExpr parse_factor(int depth) {
        check_depth(depth);
        if (accept(Token::Kind::minus)) {
            return ClassExpr{Neg{make_expr(parse_factor(depth + 1))}};
        }
        ClassExpr base = parse_primary(depth);
        if (accept(Token::Kind::caret)) {
            // parse the exponent before allocating the node: nothing that can
            // throw may run between the allocation and the handoff
            const std::uint64_t exponent = parse_exponent();
            return ClassExpr{Pow{make_expr(std::move(base)), exponent}};
        }
        return base;
    }

    ClassExpr parse_primary(int depth) {
        check_depth(depth);
        const Token token = take();
        switch (token.kind) {
            case Token::Kind::integer:
                return ClassExpr{IntLiteral{mpz_class(token.text, 10)}};
            case Token::Kind::line:
                return ClassExpr{Symbol{Symbol::Kind::line}};
            case Token::Kind::point:
                return ClassExpr{Symbol{Symbol::Kind::point}};
            case Token::Kind::affine:
                return ClassExpr{Symbol{Symbol::Kind::affine, parse_symbol_dim(token)}};
            case Token::Kind::projective:
                return ClassExpr{Symbol{Symbol::Kind::projective, parse_symbol_dim(token)}};
            case Token::Kind::lparen: {
                ClassExpr inner = parse_expr(depth + 1);
                if (!accept(Token::Kind::rparen)) {
                    throw ParseError(ParseErrorKind::unbalanced_parens, peek().offset,
                                     "expected ')'");
                }
                return inner;
            }
            case Token::Kind::rparen:
                throw ParseError(ParseErrorKind::unbalanced_parens, token.offset, "unmatched ')'");
            case Token::Kind::end:
                throw ParseError(ParseErrorKind::unexpected_token, token.offset,
                                 "unexpected end of input");
            default:
                throw ParseError(ParseErrorKind::unexpected_token, token.offset,
                                 "expected a class, an integer, or '('");
        }
    }

    // The mandatory '^' uint of an 'A' or 'P' atom.
    std::uint64_t parse_symbol_dim(const Token& symbol) {
        if (!accept(Token::Kind::caret)) {
            throw ParseError(ParseErrorKind::bad_exponent, peek().offset,
                             "'A' and 'P' require an exponent, e.g. A^2");
        }
        (void)symbol;
        return parse_exponent();
    }

    std::uint64_t parse_exponent() {
        const Token& token = peek();
        if (token.kind == Token::Kind::minus) {
            throw ParseError(ParseErrorKind::bad_exponent, token.offset,
                             "exponent must be a non-negative integer");
        }
        if (token.kind != Token::Kind::integer) {
            throw ParseError(ParseErrorKind::bad_exponent, token.offset,
                             "exponent must be an integer literal");
        }
        const mpz_class value(token.text, 10);
        if (value > kMaxExponent) {
            throw ParseError(ParseErrorKind::bad_exponent, token.offset, "exponent too large");
        }
        ++pos_;
        return value.get_ui();
    }

    void check_depth(int depth) const {
        if (depth > kMaxDepth) {
            throw ParseError(ParseErrorKind::nesting_too_deep, peek().offset,
                             "expression nested too deeply");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

struct Evaluator {
    LefschetzPoly operator()(const IntLiteral& lit) const { return LefschetzPoly(lit.value); }

    LefschetzPoly operator()(const Symbol& sym) const {
        switch (sym.kind) {
            case Symbol::Kind::line:
                return LefschetzPoly::line();
            case Symbol::Kind::point:
                return LefschetzPoly(1);
            case Symbol::Kind::affine:
                return LefschetzPoly::affine_space(sym.dim);
            case Symbol::Kind::projective:
                return LefschetzPoly::projective_space(sym.dim);
        }
        return LefschetzPoly();
    }

    LefschetzPoly operator()(const Neg& e) const { return -eval_expr(*e.operand); }
    LefschetzPoly operator()(const Add& e) const { return eval_expr(*e.lhs) + eval_expr(*e.rhs); }
    LefschetzPoly operator()(const Sub& e) const { return eval_expr(*e.lhs) - eval_expr(*e.rhs); }
    LefschetzPoly operator()(const Mul& e) const { return eval_expr(*e.lhs) * eval_expr(*e.rhs); }
    LefschetzPoly operator()(const Pow& e) const { return pow(eval_expr(*e.base), e.exponent); }
};

std::string error_prefix(std::size_t offset) {
    return "parse error at byte " + std::to_string(offset) + ": ";
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t offset, const std::string& detail)
    : std::runtime_error(error_prefix(offset) + detail), kind_(kind), offset_(offset) {}

ClassExpr parse(std::string_view input) { return Parser(tokenize(input)).run(); }

LefschetzPoly eval_expr(const ClassExpr& expr) { return std::visit(Evaluator{}, expr.node); }

LefschetzPoly parse_class(std::string_view input) { return eval_expr(parse(input)); }

}  // namespace motzeta
