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
#include <map>
#include <utility>

#include <gmpxx.h>

namespace motzeta {

/// An element of Z[L], the polynomial ring in the Lefschetz class L (the
/// class of the affine line): a finitely supported sum  a_m * L^m  with
/// arbitrary-precision integer coefficients.  [A^n] = L^n and
/// [P^n] = 1 + L + ... + L^n live in this ring.
///
/// Values are always in canonical form: a zero coefficient is never stored,
/// so equality of the term maps is ring equality.  Every operation is a
/// pure function over immutable inputs; instances can be shared freely
/// across threads.
class LefschetzPoly {
  public:
    using Terms = std::map<std::uint64_t, mpz_class>;

    LefschetzPoly() = default;  // the zero polynomial
    explicit LefschetzPoly(long value) { add_term(0, mpz_class(value)); }
    explicit LefschetzPoly(mpz_class value) { add_term(0, std::move(value)); }

    static LefschetzPoly monomial(std::uint64_t exponent, mpz_class coefficient = mpz_class(1));
    static LefschetzPoly line() { return monomial(1); }            // L
    static LefschetzPoly affine_space(std::uint64_t n);            // L^n
    static LefschetzPoly projective_space(std::uint64_t n);        // 1 + L + ... + L^n

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    /// Largest exponent with a nonzero coefficient; 0 for the zero polynomial.
    std::uint64_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    const Terms& terms() const { return terms_; }
    mpz_class coeff(std::uint64_t exponent) const;

    /// The ring map Z[L] -> Z sending L to 1, i.e. the sum of all
    /// coefficients.
    mpz_class eval_one() const;

    /// Adds a single term, keeping canonical form.
    void add_term(std::uint64_t exponent, const mpz_class& coefficient);

    LefschetzPoly& operator+=(const LefschetzPoly& rhs);
    LefschetzPoly& operator-=(const LefschetzPoly& rhs);
    LefschetzPoly& operator*=(const LefschetzPoly& rhs) { return *this = *this * rhs; }
    LefschetzPoly operator-() const;

    friend LefschetzPoly operator+(LefschetzPoly lhs, const LefschetzPoly& rhs) { return lhs += rhs; }
    friend LefschetzPoly operator-(LefschetzPoly lhs, const LefschetzPoly& rhs) { return lhs -= rhs; }
    friend LefschetzPoly operator*(const LefschetzPoly& lhs, const LefschetzPoly& rhs);

    friend bool operator==(const LefschetzPoly& lhs, const LefschetzPoly& rhs) {
        return lhs.terms_ == rhs.terms_;
    }
    friend bool operator!=(const LefschetzPoly& lhs, const LefschetzPoly& rhs) {
        return !(lhs == rhs);
    }

  private:
    Terms terms_;
};

/// base^exponent by binary exponentiation; pow(p, 0) = 1 for every p.
LefschetzPoly pow(const LefschetzPoly& base, std::uint64_t exponent);

}  // namespace motzeta
