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

#include <doctest.h>

#include <random>
#include <string>

#include "motzeta/expr_parser.hpp"
#include "motzeta/render.hpp"
#include "test_util.hpp"

using motzeta::ClassExpr;
using motzeta::eval_expr;
using motzeta::LefschetzPoly;
using motzeta::parse;
using motzeta::parse_class;
using motzeta::ParseError;
using motzeta::ParseErrorKind;
using motzeta_test::random_poly;

TEST_CASE("atoms parse to the expected nodes") {
    const ClassExpr p2 = parse("P^2");
    const auto& sym = std::get<motzeta::Symbol>(p2.node);
    CHECK(sym.kind == motzeta::Symbol::Kind::projective);
    CHECK(sym.dim == 2);

    const ClassExpr sum = parse("1 + L + L^2");
    const auto& outer = std::get<motzeta::Add>(sum.node);
    CHECK(std::holds_alternative<motzeta::Add>(outer.lhs->node));
    CHECK(std::holds_alternative<motzeta::Pow>(outer.rhs->node));

    const ClassExpr diff = parse("(P^1)^2 - A^2");
    const auto& sub = std::get<motzeta::Sub>(diff.node);
    CHECK(std::holds_alternative<motzeta::Pow>(sub.lhs->node));
    CHECK(std::holds_alternative<motzeta::Symbol>(sub.rhs->node));
}

TEST_CASE("evaluation into Z[L]") {
    CHECK(parse_class("P^2") == LefschetzPoly::projective_space(2));
    CHECK(parse_class("pt") == LefschetzPoly(1));
    CHECK(parse_class("L") == LefschetzPoly::line());
    CHECK(parse_class("A^4") == LefschetzPoly::monomial(4));
    CHECK(parse_class("A^3") == parse_class("L^3"));

    // P^1 * P^1 against the convolution product
    CHECK(parse_class("P^1 * P^1") ==
          LefschetzPoly::projective_space(1) * LefschetzPoly::projective_space(1));

    // (P^1)^2 - A^2 = 1 + 2L
    CHECK(parse_class("(P^1)^2 - A^2") ==
          LefschetzPoly(1) + LefschetzPoly::monomial(1, mpz_class(2)));

    CHECK(parse_class("123456789012345678901234567890") ==
          LefschetzPoly(mpz_class("123456789012345678901234567890")));

    // leading zeros are plain decimal, not octal
    CHECK(parse_class("09") == LefschetzPoly(9));
    CHECK_THROWS_AS(parse("0x1"), ParseError);
}

TEST_CASE("operator precedence") {
    // '^' binds tighter than unary '-'
    CHECK(parse_class("-L^2") == LefschetzPoly::monomial(2, mpz_class(-1)));
    CHECK(parse_class("(-L)^2") == LefschetzPoly::monomial(2));

    // unary '-' binds tighter than '*'
    CHECK(parse_class("-2*3") == LefschetzPoly(-6));
    CHECK(parse_class("2*-3") == LefschetzPoly(-6));
    const ClassExpr neg_first = parse("-2*3");
    const auto& product = std::get<motzeta::Mul>(neg_first.node);
    CHECK(std::holds_alternative<motzeta::Neg>(product.lhs->node));

    // binary '-' is left-associative
    CHECK(parse_class("1 - 2 - 3") == LefschetzPoly(-4));

    // '*' before '+'
    CHECK(parse_class("1 + 2*3") == LefschetzPoly(7));

    CHECK(parse_class("- - 5") == LefschetzPoly(5));
}

TEST_CASE("parse errors carry category and 1-based byte offset") {
    const auto expect_error = [](const std::string& input, ParseErrorKind kind,
                                 std::size_t offset) {
        try {
            parse(input);
            FAIL("expected ParseError for input: ", input);
        } catch (const ParseError& e) {
            CHECK(e.kind() == kind);
            CHECK(e.offset() == offset);
        }
    };

    expect_error("", ParseErrorKind::empty_input, 1);
    expect_error("   ", ParseErrorKind::empty_input, 4);
    expect_error("(1 + L", ParseErrorKind::unbalanced_parens, 7);
    expect_error("1)", ParseErrorKind::unbalanced_parens, 2);
    expect_error(")", ParseErrorKind::unbalanced_parens, 1);
    expect_error("L^-2", ParseErrorKind::bad_exponent, 3);
    expect_error("L^(2)", ParseErrorKind::bad_exponent, 3);
    expect_error("L^x", ParseErrorKind::unexpected_token, 3);
    expect_error("A", ParseErrorKind::bad_exponent, 2);
    expect_error("P + 1", ParseErrorKind::bad_exponent, 3);
    expect_error("L^999999999999", ParseErrorKind::bad_exponent, 3);
    expect_error("L^2^3", ParseErrorKind::unexpected_token, 4);
    expect_error("xyz", ParseErrorKind::unexpected_token, 1);
    expect_error("1 + $", ParseErrorKind::unexpected_token, 5);
    expect_error("1 2", ParseErrorKind::unexpected_token, 3);
    expect_error("1 +", ParseErrorKind::unexpected_token, 4);
    expect_error("*2", ParseErrorKind::unexpected_token, 1);

    const std::string deep(400, '(');
    expect_error(deep, ParseErrorKind::nesting_too_deep, 258);
}

TEST_CASE("parse error text names the byte offset") {
    try {
        parse("1 + $");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("byte 5") != std::string::npos);
    }
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parse_class(" P^1*P^1 ") == parse_class("P^1 \t*\n P^1"));
    CHECK(parse_class("1+L") == parse_class(" 1 + L "));
}

TEST_CASE("rendered polynomials re-parse to the same value") {
    std::mt19937 rng(13579);
    for (int trial = 0; trial < 200; ++trial) {
        const LefschetzPoly p = random_poly(rng, 5, 9);
        const std::string text = motzeta::to_string(p);
        CHECK(parse_class(text) == p);
        // rendering the re-parsed value reproduces the same text
        CHECK(motzeta::to_string(parse_class(text)) == text);
    }
}

TEST_CASE("parser survives arbitrary byte strings") {
    std::mt19937 rng(0xFEED);
    std::uniform_int_distribution<int> length(0, 48);
    std::uniform_int_distribution<int> byte(0, 255);
    std::uniform_int_distribution<int> charset(0, 2);
    const std::string tokens = "0123456789LptAP+-*^() ";
    std::uniform_int_distribution<std::size_t> token_index(0, tokens.size() - 1);

    int parsed = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::string input;
        const int len = length(rng);
        const bool grammar_biased = charset(rng) != 0;
        for (int i = 0; i < len; ++i) {
            input += grammar_biased ? tokens[token_index(rng)]
                                    : static_cast<char>(byte(rng));
        }
        try {
            (void)parse(input);
            ++parsed;
        } catch (const ParseError&) {
            // structured rejection is the expected outcome
        }
    }
    // sanity: the biased generator should produce at least a few valid inputs
    CHECK(parsed > 0);
}
