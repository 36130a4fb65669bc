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

#include "motzeta/lefschetz_poly.hpp"

#include <limits>
#include <stdexcept>

namespace motzeta {

LefschetzPoly LefschetzPoly::monomial(std::uint64_t exponent, mpz_class coefficient) {
    LefschetzPoly p;
    if (coefficient != 0) {
        p.terms_.emplace(exponent, std::move(coefficient));
    }
    return p;
}

LefschetzPoly LefschetzPoly::affine_space(std::uint64_t n) { return monomial(n); }

LefschetzPoly LefschetzPoly::projective_space(std::uint64_t n) {
    LefschetzPoly p;
    for (std::uint64_t m = 0; m <= n; ++m) {
        p.terms_.emplace(m, mpz_class(1));
    }
    return p;
}

bool LefschetzPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

mpz_class LefschetzPoly::coeff(std::uint64_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class LefschetzPoly::eval_one() const {
    mpz_class sum = 0;
    for (const auto& [m, a] : terms_) {
        (void)m;
        sum += a;
    }
    return sum;
}

void LefschetzPoly::add_term(std::uint64_t exponent, const mpz_class& coefficient) {
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

LefschetzPoly& LefschetzPoly::operator+=(const LefschetzPoly& rhs) {
    for (const auto& [m, a] : rhs.terms_) {
        add_term(m, a);
    }
    return *this;
}

LefschetzPoly& LefschetzPoly::operator-=(const LefschetzPoly& rhs) {
    for (const auto& [m, a] : rhs.terms_) {
        add_term(m, -a);
    }
    return *this;
}

LefschetzPoly LefschetzPoly::operator-() const {
    LefschetzPoly p;
    for (const auto& [m, a] : terms_) {
        p.terms_.emplace(m, -a);
    }
    return p;
}

LefschetzPoly operator*(const LefschetzPoly& lhs, const LefschetzPoly& rhs) {
    constexpr auto kMaxExp = std::numeric_limits<std::uint64_t>::max();
    LefschetzPoly product;
    for (const auto& [m1, a1] : lhs.terms_) {
        for (const auto& [m2, a2] : rhs.terms_) {
            if (m2 > kMaxExp - m1) {
                throw std::overflow_error("monomial exponent overflow in polynomial product");
            }
            product.add_term(m1 + m2, a1 * a2);
        }
    }
    return product;
}

LefschetzPoly pow(const LefschetzPoly& base, std::uint64_t exponent) {
    LefschetzPoly result(1);
    LefschetzPoly square = base;
    while (exponent != 0) {
        if (exponent & 1u) {
            result *= square;
        }
        exponent >>= 1;
        if (exponent != 0) {
            square *= square;
        }
    }
    return result;
}

}  // namespace motzeta
