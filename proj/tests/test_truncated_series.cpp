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
#include <vector>

#include "motzeta/render.hpp"
#include "motzeta/truncated_series.hpp"
#include "test_util.hpp"

using motzeta::IntSeries;
using motzeta::LefschetzPoly;
using motzeta::PolySeries;

namespace {

IntSeries z_series(std::vector<long> values) {
    std::vector<mpz_class> coeffs(values.begin(), values.end());
    return IntSeries(std::move(coeffs));
}

}  // namespace

TEST_CASE("series sum and product examples") {
    // (1 + t)(1 - t) = 1 - t^2 at order 2
    CHECK(z_series({1, 1, 0}) * z_series({1, -1, 0}) == z_series({1, 0, -1}));

    const IntSeries f = z_series({3, -1, 4, 1});
    CHECK(f * IntSeries::one(f.order()) == f);

    // (1 + Lt)(1 + t) = 1 + (1 + L)t + Lt^2, by hand
    PolySeries a(2);
    a.set_coeff(0, LefschetzPoly(1));
    a.set_coeff(1, LefschetzPoly::line());
    PolySeries b(2);
    b.set_coeff(0, LefschetzPoly(1));
    b.set_coeff(1, LefschetzPoly(1));
    PolySeries expected(2);
    expected.set_coeff(0, LefschetzPoly(1));
    expected.set_coeff(1, LefschetzPoly(1) + LefschetzPoly::line());
    expected.set_coeff(2, LefschetzPoly::line());
    CHECK(a * b == expected);
}

TEST_CASE("sum and product truncate to the smaller precision") {
    const IntSeries wide = z_series({1, 2, 3, 4, 5});
    const IntSeries narrow = z_series({1, 1});
    CHECK((wide + narrow).order() == 1);
    CHECK((wide * narrow).order() == 1);
    CHECK(wide + narrow == z_series({2, 3}));
    CHECK(wide * narrow == z_series({1, 3}));
}

TEST_CASE("series inverse examples") {
    CHECK(series_inverse(z_series({1, -1, 0, 0})) == z_series({1, 1, 1, 1}));
    CHECK(series_inverse(z_series({1, 1, 0, 0, 0})) == z_series({1, -1, 1, -1, 1}));

    PolySeries f(3);
    f.set_coeff(0, LefschetzPoly(1));
    f.set_coeff(1, -LefschetzPoly::line());
    const PolySeries g = series_inverse(f);
    for (int n = 0; n <= 3; ++n) {
        CHECK(g.coeff(n) == LefschetzPoly::monomial(static_cast<std::uint64_t>(n)));
    }

    CHECK_THROWS_AS(series_inverse(z_series({2, 1})), std::domain_error);
    CHECK_THROWS_AS(series_inverse(z_series({0, 1})), std::domain_error);
}

TEST_CASE("random series with unit constant term invert exactly") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 40; ++trial) {
        const IntSeries f = motzeta_test::random_unit_int_series(rng, 24, 9);
        CHECK((f * series_inverse(f)).is_one());
    }
    for (int trial = 0; trial < 15; ++trial) {
        const PolySeries f = motzeta_test::random_unit_poly_series(rng, 12, 3, 4);
        CHECK((f * series_inverse(f)).is_one());
    }
}

TEST_CASE("series powers") {
    CHECK(series_pow(z_series({1, -1, 0, 0}), -1) == z_series({1, 1, 1, 1}));
    CHECK(series_pow(z_series({9, 8, 7}), 0) == IntSeries::one(2));

    // (1 + t + 2t^2)^3 at order 2, against the explicit triple product
    const IntSeries base = z_series({1, 1, 2});
    CHECK(series_pow(base, 3) == base * base * base);
    CHECK(series_pow(base, 3) == z_series({1, 3, 9}));

    CHECK_THROWS_AS(series_pow(z_series({2, 1}), -2), std::domain_error);
}

TEST_CASE("power of a sum of exponents is the product of powers") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        const IntSeries f = motzeta_test::random_unit_int_series(rng, 10, 5);
        std::uniform_int_distribution<int> exp_dist(-6, 6);
        const int a = exp_dist(rng);
        const int b = exp_dist(rng);
        CHECK(series_pow(f, a + b) == series_pow(f, a) * series_pow(f, b));
    }
}

TEST_CASE("substitution t -> t^k") {
    CHECK(substitute_t_power(z_series({1, 1, 1}), 2, 4) == z_series({1, 0, 1, 0, 1}));
    const IntSeries f = z_series({4, -2, 0, 9});
    CHECK(substitute_t_power(f, 1, f.order()) == f);
    CHECK(substitute_t_power(z_series({1, 2}), 3, 5) == z_series({1, 0, 0, 2, 0, 0}));

    CHECK_THROWS_AS(substitute_t_power(f, 0, 4), std::invalid_argument);
    // not enough known coefficients for the requested precision
    CHECK_THROWS_AS(substitute_t_power(z_series({1, 1}), 2, 6), std::invalid_argument);
}

TEST_CASE("substitution commutes with multiplication") {
    std::mt19937 rng(90210);
    for (int trial = 0; trial < 30; ++trial) {
        const IntSeries f = motzeta_test::random_unit_int_series(rng, 8, 5);
        const IntSeries g = motzeta_test::random_unit_int_series(rng, 8, 5);
        for (int k = 1; k <= 4; ++k) {
            const int order = 8 * k;
            CHECK(substitute_t_power(f * g, k, order) ==
                  substitute_t_power(f, k, order) * substitute_t_power(g, k, order));
        }
    }
}

TEST_CASE("coefficient-wise ring maps") {
    const auto eval_one = [](const LefschetzPoly& p) { return p.eval_one(); };

    PolySeries f(1);
    f.set_coeff(0, LefschetzPoly(1));
    f.set_coeff(1, LefschetzPoly::line());
    CHECK(map_coefficients(f, eval_one) == z_series({1, 1}));

    CHECK(map_coefficients(PolySeries(3), eval_one) == IntSeries(3));

    // 1 + (1+L)t + (1+L+L^2)t^2 -> 1 + 2t + 3t^2
    PolySeries g(2);
    g.set_coeff(0, LefschetzPoly(1));
    g.set_coeff(1, LefschetzPoly::projective_space(1));
    g.set_coeff(2, LefschetzPoly::projective_space(2));
    CHECK(map_coefficients(g, eval_one) == z_series({1, 2, 3}));
}

TEST_CASE("sign flip and truncation helpers") {
    CHECK(substitute_minus_t(z_series({1, 1, 1, 1})) == z_series({1, -1, 1, -1}));
    CHECK(truncated_to(z_series({5, 6, 7, 8}), 1) == z_series({5, 6}));
    CHECK_THROWS_AS(truncated_to(z_series({1, 2}), 5), std::invalid_argument);
}

TEST_CASE("series construction guards") {
    CHECK_THROWS_AS(IntSeries(-1), std::invalid_argument);
    CHECK_THROWS_AS(IntSeries(std::vector<mpz_class>{}), std::invalid_argument);
    CHECK(IntSeries(0).order() == 0);
    CHECK(IntSeries::one(0).coeff(0) == 1);
}

TEST_CASE("canonical series rendering") {
    CHECK(motzeta::to_string(z_series({1, 1, 1, 1})) == "1 + t + t^2 + t^3 + O(t^4)");
    CHECK(motzeta::to_string(z_series({1, 0, -1})) == "1 - t^2 + O(t^3)");
    CHECK(motzeta::to_string(z_series({0, 0, 0})) == "0 + O(t^3)");
    CHECK(motzeta::to_string(z_series({-2, 5})) == "-2 + 5*t + O(t^2)");

    PolySeries f(2);
    f.set_coeff(0, LefschetzPoly(1));
    f.set_coeff(1, LefschetzPoly::projective_space(1));
    f.set_coeff(2, LefschetzPoly::monomial(3, mpz_class(-2)));
    CHECK(motzeta::to_string(f) == "1 + (L + 1)*t - 2*L^3*t^2 + O(t^3)");
}
