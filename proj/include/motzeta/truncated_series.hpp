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

#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "motzeta/lefschetz_poly.hpp"

namespace motzeta {

/// A formal power series in t known modulo t^(order+1), with coefficients in
/// a commutative ring R.  Exactly order+1 coefficients are stored; there is
/// no implicit precision extension anywhere, so a coefficient you can read
/// is always one that was actually computed.
///
/// R must be default-constructible to its zero, constructible from int
/// (R(1) is the ring unit), and provide +=, *, unary -, and ==.  The two
/// rings used here are mpz_class and LefschetzPoly.
template <typename R>
class TruncatedSeries {
  public:
    /// The zero series modulo t^(order+1).
    explicit TruncatedSeries(int order) : coeffs_(checked_size(order)) {}

    /// Takes the coefficient list c_0 ... c_N; order is N = coeffs.size()-1.
    explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw std::invalid_argument("a truncated series needs at least its constant coefficient");
        }
    }

    static TruncatedSeries one(int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = R(1);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const R& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

    void set_coeff(int n, R value) { coeffs_.at(static_cast<std::size_t>(n)) = std::move(value); }

    const std::vector<R>& coeffs() const { return coeffs_; }

    bool is_one() const {
        if (!(coeffs_[0] == R(1))) {
            return false;
        }
        for (std::size_t n = 1; n < coeffs_.size(); ++n) {
            if (!(coeffs_[n] == R())) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
        return !(lhs == rhs);
    }

    /// Sum at precision min(order(f), order(g)).
    friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
        TruncatedSeries sum(std::min(f.order(), g.order()));
        for (int n = 0; n <= sum.order(); ++n) {
            sum.coeffs_[n] = f.coeffs_[n];
            sum.coeffs_[n] += g.coeffs_[n];
        }
        return sum;
    }

    /// Cauchy product truncated at precision min(order(f), order(g)).
    /// Zero coefficients of either factor are skipped, so multiplying by the
    /// sparse factors of an Euler product costs only their support.
    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
        TruncatedSeries product(std::min(f.order(), g.order()));
        const R zero{};
        for (int j = 0; j <= product.order(); ++j) {
            if (g.coeffs_[j] == zero) {
                continue;
            }
            for (int i = 0; i + j <= product.order(); ++i) {
                if (f.coeffs_[i] == zero) {
                    continue;
                }
                product.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
            }
        }
        return product;
    }

  private:
    static std::size_t checked_size(int order) {
        if (order < 0) {
            throw std::invalid_argument("series order must be non-negative");
        }
        return static_cast<std::size_t>(order) + 1;
    }

    std::vector<R> coeffs_;
};

/// Multiplicative inverse modulo t^(order+1); the constant term must be the
/// ring unit 1.
template <typename R>
TruncatedSeries<R> series_inverse(const TruncatedSeries<R>& f) {
    if (!(f.coeff(0) == R(1))) {
        throw std::domain_error("series inverse requires constant term 1");
    }
    const R zero{};
    std::vector<int> support;  // nonzero tail coefficients of f
    for (int i = 1; i <= f.order(); ++i) {
        if (!(f.coeff(i) == zero)) {
            support.push_back(i);
        }
    }
    TruncatedSeries<R> inverse(f.order());
    inverse.set_coeff(0, R(1));
    for (int n = 1; n <= f.order(); ++n) {
        R acc{};
        for (int i : support) {
            if (i > n) {
                break;
            }
            acc += f.coeff(i) * inverse.coeff(n - i);
        }
        inverse.set_coeff(n, -acc);
    }
    return inverse;
}

/// f^e by binary exponentiation over the truncated product; f^0 = 1.  A
/// negative exponent inverts first and therefore requires constant term 1.
template <typename R>
TruncatedSeries<R> series_pow(const TruncatedSeries<R>& f, long long e) {
    TruncatedSeries<R> result = TruncatedSeries<R>::one(f.order());
    if (e == 0) {
        return result;
    }
    if (e == 1) {
        return f;
    }
    if (e == -1) {
        return series_inverse(f);
    }
    TruncatedSeries<R> square = e < 0 ? series_inverse(f) : f;
    auto n = e < 0 ? 0ull - static_cast<unsigned long long>(e) : static_cast<unsigned long long>(e);
    while (n != 0) {
        if (n & 1ull) {
            result = result * square;
        }
        n >>= 1;
        if (n != 0) {
            square = square * square;
        }
    }
    return result;
}

/// f^e for an arbitrary-precision exponent.
template <typename R>
TruncatedSeries<R> series_pow(const TruncatedSeries<R>& f, const mpz_class& e) {
    if (e.fits_slong_p()) {
        return series_pow(f, static_cast<long long>(e.get_si()));
    }
    TruncatedSeries<R> result = TruncatedSeries<R>::one(f.order());
    TruncatedSeries<R> square = sgn(e) < 0 ? series_inverse(f) : f;
    mpz_class n = abs(e);
    while (n != 0) {
        if (mpz_odd_p(n.get_mpz_t())) {
            result = result * square;
        }
        n /= 2;
        if (n != 0) {
            square = square * square;
        }
    }
    return result;
}

/// g(t) = f(t^k) modulo t^(order+1): g_{ik} = f_i, every other coefficient
/// zero.  f must be known at least up to t^floor(order/k); coefficients of f
/// beyond that bound are irrelevant.
template <typename R>
TruncatedSeries<R> substitute_t_power(const TruncatedSeries<R>& f, int k, int order) {
    if (k < 1) {
        throw std::invalid_argument("substitution t -> t^k requires k >= 1");
    }
    TruncatedSeries<R> g(order);
    const int needed = order / k;
    if (f.order() < needed) {
        throw std::invalid_argument("series precision too low for substitution t -> t^k");
    }
    for (int i = 0; i <= needed; ++i) {
        g.set_coeff(i * k, f.coeff(i));
    }
    return g;
}

/// f(-t): negates every odd coefficient.
template <typename R>
TruncatedSeries<R> substitute_minus_t(const TruncatedSeries<R>& f) {
    TruncatedSeries<R> g = f;
    for (int n = 1; n <= g.order(); n += 2) {
        g.set_coeff(n, -g.coeff(n));
    }
    return g;
}

/// Drops precision to the given (smaller or equal) order.
template <typename R>
TruncatedSeries<R> truncated_to(const TruncatedSeries<R>& f, int order) {
    if (order < 0 || order > f.order()) {
        throw std::invalid_argument("truncation order out of range");
    }
    std::vector<R> coeffs(f.coeffs().begin(), f.coeffs().begin() + order + 1);
    return TruncatedSeries<R>(std::move(coeffs));
}

/// Applies a ring map coefficient-wise, keeping the precision.
template <typename R, typename Fn>
auto map_coefficients(const TruncatedSeries<R>& f, Fn&& fn)
    -> TruncatedSeries<std::decay_t<std::invoke_result_t<Fn&, const R&>>> {
    using Image = std::decay_t<std::invoke_result_t<Fn&, const R&>>;
    std::vector<Image> coeffs;
    coeffs.reserve(static_cast<std::size_t>(f.order()) + 1);
    for (const R& c : f.coeffs()) {
        coeffs.push_back(fn(c));
    }
    return TruncatedSeries<Image>(std::move(coeffs));
}

/// The two coefficient rings shipped with the calculator.
using IntSeries = TruncatedSeries<mpz_class>;
using PolySeries = TruncatedSeries<LefschetzPoly>;

}  // namespace motzeta
