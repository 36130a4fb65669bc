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

#include "motzeta/zeta.hpp"

#include <algorithm>

#include "motzeta/render.hpp"
#include "motzeta/transforms.hpp"

namespace motzeta {

namespace {

std::string coeff_repr(const mpz_class& c) { return c.get_str(); }
std::string coeff_repr(const LefschetzPoly& c) { return to_string(c); }

template <typename R>
VerificationReport compare_series(Identity identity, const TruncatedSeries<R>& lhs,
                                  const TruncatedSeries<R>& rhs) {
    VerificationReport report;
    report.identity = identity;
    report.precision = std::min(lhs.order(), rhs.order());
    for (int n = 0; n <= report.precision; ++n) {
        if (!(lhs.coeff(n) == rhs.coeff(n))) {
            report.verified = false;
            report.mismatch = VerificationReport::Mismatch{n, coeff_repr(lhs.coeff(n)),
                                                           coeff_repr(rhs.coeff(n))};
            return report;
        }
    }
    report.verified = true;
    return report;
}

}  // namespace

PolySeries zeta_motivic(const LefschetzPoly& c, int order) { return sigma_series(c, order); }

mpz_class mu_dg(const LefschetzPoly& c) { return c.eval_one(); }

IntSeries zeta_categorical(const LefschetzPoly& c, int order) {
    return sigma_series_categorical(mu_dg(c), order);
}

IntSeries specialize_at_one(const PolySeries& f) {
    return map_coefficients(f, [](const LefschetzPoly& p) { return p.eval_one(); });
}

IntSeries zeta_theorem_rhs(const LefschetzPoly& c, int order) {
    IntSeries product = IntSeries::one(order);
    for (int k = 1; k <= order; ++k) {
        const int inner = order / k;
        IntSeries factor = specialize_at_one(zeta_motivic(c, inner));
        product = product * substitute_t_power(factor, k, order);
    }
    return product;
}

const char* identity_name(Identity identity) {
    switch (identity) {
        case Identity::theorem:
            return "theorem";
        case Identity::mult_kap:
            return "mult-kap";
        case Identity::mult_cat:
            return "mult-cat";
        case Identity::pn_power:
            return "pn-power";
        case Identity::point_partition:
            return "point-partition";
    }
    return "unknown";
}

std::string VerificationReport::to_text() const {
    if (verified) {
        return "VERIFIED (order " + std::to_string(precision) + ")";
    }
    return "FAILED at t^" + std::to_string(mismatch->index) + ": lhs=" + mismatch->lhs +
           ", rhs=" + mismatch->rhs;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j{
        {"identity", identity_name(identity)},
        {"verified", verified},
        {"precision", precision},
    };
    if (mismatch) {
        j["mismatch"] = {
            {"index", mismatch->index},
            {"lhs", mismatch->lhs},
            {"rhs", mismatch->rhs},
        };
    }
    return j;
}

VerificationReport verify_theorem(const LefschetzPoly& c, int order) {
    return compare_series(Identity::theorem, zeta_categorical(c, order),
                          zeta_theorem_rhs(c, order));
}

VerificationReport verify_mult_kap(const LefschetzPoly& c, const LefschetzPoly& d, int order) {
    return compare_series(Identity::mult_kap, zeta_motivic(c + d, order),
                          zeta_motivic(c, order) * zeta_motivic(d, order));
}

VerificationReport verify_mult_cat(const LefschetzPoly& c, const LefschetzPoly& d, int order) {
    return compare_series(Identity::mult_cat, zeta_categorical(c + d, order),
                          zeta_categorical(c, order) * zeta_categorical(d, order));
}

VerificationReport verify_pn_power(const LefschetzPoly& c, int n, int order) {
    if (n < 0) {
        throw std::invalid_argument("projective dimension must be non-negative");
    }
    const LefschetzPoly bundle = c * LefschetzPoly::projective_space(static_cast<std::uint64_t>(n));
    return compare_series(Identity::pn_power, zeta_categorical(bundle, order),
                          series_pow(zeta_categorical(c, order), static_cast<long long>(n) + 1));
}

VerificationReport verify_point_partition(int order) {
    return compare_series(Identity::point_partition,
                          zeta_categorical(LefschetzPoly(1), order),
                          IntSeries(partition_numbers(order)));
}

}  // namespace motzeta
