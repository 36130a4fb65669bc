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
#include <optional>
#include <string>

#include <json.hpp>

#include "motzeta/lambda_ops.hpp"
#include "motzeta/truncated_series.hpp"

namespace motzeta {

/// Motivic zeta function of a class c in Z[L]: sum_n sigma^n(c) t^n, i.e.
/// the geometric sigma-series of c.
PolySeries zeta_motivic(const LefschetzPoly& c, int order);

/// The motivic measure used throughout: the ring map Z[L] -> Z with L -> 1.
/// It is a ring homomorphism but NOT a map of lambda-structures; the whole
/// point of the categorical side is measuring that failure.
mpz_class mu_dg(const LefschetzPoly& c);

/// Categorical zeta function of the integer shadow of c:
/// P(t)^{mu_dg(c)} with P the partition generating function.
IntSeries zeta_categorical(const LefschetzPoly& c, int order);

/// Applies mu_dg coefficient-wise to a Z[L]-series.
IntSeries specialize_at_one(const PolySeries& f);

/// The substitution-product expansion
///   prod_{k=1..N} mu_dg(Z_mot(c, t^k))   (coefficient-wise measure),
/// each factor computed at inner precision floor(N/k); factors with k > N
/// are congruent to 1 mod t^{N+1} and are omitted exactly, not approximately.
IntSeries zeta_theorem_rhs(const LefschetzPoly& c, int order);

enum class Identity { theorem, mult_kap, mult_cat, pn_power, point_partition };

/// Stable name used in report text and JSON ("theorem", "mult-kap", ...).
const char* identity_name(Identity identity);

/// Outcome of one coefficient-by-coefficient identity check.  verified is
/// true exactly when there is no mismatch; on failure the first differing
/// index and both rendered coefficient values are recorded.
struct VerificationReport {
    struct Mismatch {
        int index = 0;
        std::string lhs;
        std::string rhs;
    };

    Identity identity = Identity::theorem;
    bool verified = false;
    int precision = 0;
    std::optional<Mismatch> mismatch;

    /// "VERIFIED (order N)" or "FAILED at t^i: lhs=..., rhs=...".
    std::string to_text() const;

    /// {identity, verified, precision, mismatch?}
    nlohmann::json to_json() const;
};

/// 0 when verified, 1 when the identity failed numerically (the CLI exit
/// code contract).
inline int report_exit_code(const VerificationReport& report) { return report.verified ? 0 : 1; }

/// Checks  zeta_categorical(c) == zeta_theorem_rhs(c)  at the given order.
/// The two sides follow disjoint code paths: the left is the categorical
/// sigma-structure applied to mu_dg(c), the right expands the motivic zeta
/// function, specializes coefficients, and multiplies substituted factors.
VerificationReport verify_theorem(const LefschetzPoly& c, int order);

/// Cut-and-paste multiplicativity of the motivic zeta function:
/// Z_mot(c + d) == Z_mot(c) * Z_mot(d).
VerificationReport verify_mult_kap(const LefschetzPoly& c, const LefschetzPoly& d, int order);

/// Multiplicativity of the categorical zeta function on integer shadows:
/// Z_cat(c + d) == Z_cat(c) * Z_cat(d).
VerificationReport verify_mult_cat(const LefschetzPoly& c, const LefschetzPoly& d, int order);

/// Projective-bundle power law: Z_cat(c * [P^n]) == Z_cat(c)^{n+1}.
VerificationReport verify_pn_power(const LefschetzPoly& c, int n, int order);

/// Point case: the coefficients of Z_cat(pt) must be the partition numbers
/// delivered by the independent dynamic-programming oracle.
VerificationReport verify_point_partition(int order);

}  // namespace motzeta
