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

#include "motzeta/render.hpp"

#include <cstdint>
#include <vector>

namespace motzeta {

namespace {

// One rendered summand: the sign is kept separate so terms can be joined
// with " + " / " - " and a leading minus attaches without a space.
struct Term {
    bool negative = false;
    std::string body;
};

std::string join_terms(const std::vector<Term>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].negative) {
                out += '-';
            }
        } else {
            out += terms[i].negative ? " - " : " + ";
        }
        out += terms[i].body;
    }
    return out;
}

std::string line_power(std::uint64_t m) {
    return m == 1 ? "L" : "L^" + std::to_string(m);
}

std::string t_power(int n) {
    return n == 1 ? "t" : "t^" + std::to_string(n);
}

// |a| * L^m * t^n with unit factors dropped; "1" when everything drops out.
std::string term_body(const mpz_class& magnitude, std::uint64_t m, int n) {
    std::string out;
    if (magnitude != 1) {
        out = magnitude.get_str();
    }
    if (m > 0) {
        if (!out.empty()) {
            out += '*';
        }
        out += line_power(m);
    }
    if (n > 0) {
        if (!out.empty()) {
            out += '*';
        }
        out += t_power(n);
    }
    return out.empty() ? "1" : out;
}

Term int_term(const mpz_class& c, int n) {
    return Term{sgn(c) < 0, term_body(abs(c), 0, n)};
}

Term poly_term(const LefschetzPoly& c, int n) {
    if (c.terms().size() == 1) {
        const auto& [m, a] = *c.terms().begin();
        return Term{sgn(a) < 0, term_body(abs(a), m, n)};
    }
    std::string body = "(" + to_string(c) + ")";
    if (n > 0) {
        body += "*" + t_power(n);
    }
    return Term{false, body};
}

template <typename R, typename TermFn>
std::string series_to_string(const TruncatedSeries<R>& f, TermFn make_term) {
    std::vector<Term> terms;
    const R zero{};
    for (int n = 0; n <= f.order(); ++n) {
        if (f.coeff(n) == zero) {
            continue;
        }
        terms.push_back(make_term(f.coeff(n), n));
    }
    std::string big_o = "O(t^" + std::to_string(f.order() + 1) + ")";
    if (terms.empty()) {
        return "0 + " + big_o;
    }
    return join_terms(terms) + " + " + big_o;
}

}  // namespace

std::string to_string(const LefschetzPoly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::vector<Term> terms;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        terms.push_back(Term{sgn(it->second) < 0, term_body(abs(it->second), it->first, 0)});
    }
    return join_terms(terms);
}

std::string to_string(const IntSeries& f) { return series_to_string(f, int_term); }

std::string to_string(const PolySeries& f) { return series_to_string(f, poly_term); }

std::ostream& operator<<(std::ostream& os, const LefschetzPoly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const IntSeries& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const PolySeries& f) { return os << to_string(f); }

}  // namespace motzeta
