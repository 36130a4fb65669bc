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

#include <vector>

#include "motzeta/truncated_series.hpp"

namespace motzeta {

/// Values mu(1) ... mu(N) of the Moebius function, filled by a linear sieve.
class MobiusTable {
  public:
    explicit MobiusTable(int limit);

    int limit() const { return static_cast<int>(values_.size()); }

    /// mu(k), 1 <= k <= limit().
    int operator()(int k) const { return values_.at(static_cast<std::size_t>(k) - 1); }

    const std::vector<int>& values() const { return values_; }

  private:
    std::vector<int> values_;
};

inline MobiusTable mobius_table(int limit) { return MobiusTable(limit); }

/// Partition numbers p(0) ... p(n) by the parts-up-to-k dynamic program
/// p[j] += p[j - k].  Deliberately shares no code with the series layer so
/// it can serve as an independent cross-check of the Euler products
/// computed there.
std::vector<mpz_class> partition_numbers(int n);

/// The exponential transform  f(t) |-> prod_{k>=1} f(t^k)  on series with
/// constant term 1, truncated at min(order, order(f)).  Factors with
/// k > order are congruent to 1 and contribute nothing.
template <typename R>
TruncatedSeries<R> exp_transform(const TruncatedSeries<R>& f, int order) {
    if (order < 0) {
        throw std::invalid_argument("transform order must be non-negative");
    }
    if (!(f.coeff(0) == R(1))) {
        throw std::domain_error("exp transform requires constant term 1");
    }
    const int n = std::min(order, f.order());
    TruncatedSeries<R> product = TruncatedSeries<R>::one(n);
    for (int k = 1; k <= n; ++k) {
        product = product * substitute_t_power(f, k, n);
    }
    return product;
}

/// The inverse transform  g(t) |-> prod_{k>=1} g(t^k)^{mu(k)}, with mu the
/// Moebius function.  Same preconditions and truncation as exp_transform.
template <typename R>
TruncatedSeries<R> mobius_transform(const TruncatedSeries<R>& g, int order) {
    if (order < 0) {
        throw std::invalid_argument("transform order must be non-negative");
    }
    if (!(g.coeff(0) == R(1))) {
        throw std::domain_error("Moebius transform requires constant term 1");
    }
    const int n = std::min(order, g.order());
    TruncatedSeries<R> product = TruncatedSeries<R>::one(n);
    if (n == 0) {
        return product;
    }
    const MobiusTable mu(n);
    for (int k = 1; k <= n; ++k) {
        if (mu(k) == 0) {
            continue;
        }
        product = product * series_pow(substitute_t_power(g, k, n), static_cast<long long>(mu(k)));
    }
    return product;
}

}  // namespace motzeta
