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

#include "motzeta/lambda_ops.hpp"

#include <limits>
#include <stdexcept>

namespace motzeta {

namespace {

std::uint64_t checked_exp_mul(std::uint64_t m, std::uint64_t k) {
    if (m != 0 && k > std::numeric_limits<std::uint64_t>::max() / m) {
        throw std::overflow_error("monomial exponent overflow");
    }
    return m * k;
}

// (1 - L^m t)^{-1} = sum_n L^{mn} t^n.
PolySeries line_factor(std::uint64_t m, int order) {
    PolySeries f(order);
    for (int n = 0; n <= order; ++n) {
        f.set_coeff(n, LefschetzPoly::monomial(checked_exp_mul(m, static_cast<std::uint64_t>(n))));
    }
    return f;
}

// (1 - t^k)^{-1} = sum_j t^{jk}.
IntSeries euler_factor(int k, int order) {
    IntSeries f(order);
    for (int j = 0; j * k <= order; ++j) {
        f.set_coeff(j * k, mpz_class(1));
    }
    return f;
}

}  // namespace

PolySeries sigma_series(const LefschetzPoly& c, int order) {
    PolySeries product = PolySeries::one(order);
    for (const auto& [m, a] : c.terms()) {
        product = product * series_pow(line_factor(m, order), a);
    }
    return product;
}

IntSeries sigma_series(LambdaStructure structure, const mpz_class& d, int order) {
    if (structure == LambdaStructure::categorical) {
        return sigma_series_categorical(d, order);
    }
    return series_pow(euler_factor(1, order), d);
}

IntSeries sigma_series_categorical(const mpz_class& d, int order) {
    IntSeries partition = IntSeries::one(order);
    for (int k = 1; k <= order; ++k) {
        partition = partition * euler_factor(k, order);
    }
    return series_pow(partition, d);
}

LefschetzPoly sym_power(const LefschetzPoly& c, int n) {
    if (n < 0) {
        throw std::invalid_argument("symmetric power index must be non-negative");
    }
    return sigma_series(c, n).coeff(n);
}

LefschetzPoly adams(const LefschetzPoly& c, int k) {
    if (k < 1) {
        throw std::invalid_argument("Adams operation index must be >= 1");
    }
    LefschetzPoly image;
    for (const auto& [m, a] : c.terms()) {
        image.add_term(checked_exp_mul(m, static_cast<std::uint64_t>(k)), a);
    }
    return image;
}

LefschetzPoly lambda_power(const LefschetzPoly& c, int n) {
    if (n < 0) {
        throw std::invalid_argument("exterior power index must be non-negative");
    }
    return series_inverse(substitute_minus_t(sigma_series(c, n))).coeff(n);
}

}  // namespace motzeta
