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

#include "motzeta/transforms.hpp"

#include <stdexcept>

namespace motzeta {

MobiusTable::MobiusTable(int limit) {
    if (limit < 1) {
        throw std::invalid_argument("Moebius table limit must be >= 1");
    }
    const std::size_t n = static_cast<std::size_t>(limit);
    values_.assign(n, 0);
    values_[0] = 1;  // mu(1)
    std::vector<bool> composite(n + 1, false);
    std::vector<std::size_t> primes;
    for (std::size_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            values_[i - 1] = -1;
        }
        for (std::size_t p : primes) {
            if (p > n / i) {
                break;
            }
            composite[i * p] = true;
            if (i % p == 0) {
                values_[i * p - 1] = 0;  // squared prime factor
                break;
            }
            values_[i * p - 1] = -values_[i - 1];
        }
    }
}

std::vector<mpz_class> partition_numbers(int n) {
    if (n < 0) {
        throw std::invalid_argument("partition count bound must be non-negative");
    }
    std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1, mpz_class(0));
    p[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int total = part; total <= n; ++total) {
            p[total] += p[total - part];
        }
    }
    return p;
}

}  // namespace motzeta
