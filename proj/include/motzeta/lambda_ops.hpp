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

#include "motzeta/truncated_series.hpp"

namespace motzeta {

/// Selects which sigma-operation governs a coefficient ring.  The geometric
/// structure lives on Z[L] (and on Z as its quotient under L -> 1) with
/// sigma_t(1) = 1/(1-t); the categorical structure lives on Z only, with
/// sigma_t(1) the partition generating function prod (1-t^k)^{-1}.  The two
/// agree through t^1 and differ from t^2 on, which is exactly why the
/// calculator carries both.
enum class LambdaStructure { geometric, categorical };

/// Geometric sigma_t(c) over Z[L]: for c = sum a_m L^m this is the Euler
/// product  prod_m (1 - L^m t)^{-a_m}  truncated at the given order.  Each
/// factor is expanded to full precision and the factors are then multiplied.
/// Constant term 1; the t^1 coefficient is c itself.  On negative summands
/// the defining product uses positive powers, i.e. sigma of a negated class
/// is the series inverse.
PolySeries sigma_series(const LefschetzPoly& c, int order);

/// sigma_t(d) on integers under the chosen structure: (1-t)^{-d} for
/// geometric, P(t)^d for categorical.
IntSeries sigma_series(LambdaStructure structure, const mpz_class& d, int order);

/// Categorical sigma_t(d) = P(t)^d where P(t) = prod_{k>=1} (1-t^k)^{-1}.
/// P(t)'s coefficients are the partition numbers; the extension from d = 1
/// to all of Z is multiplicative by definition.  This is a modeling choice:
/// nothing here claims to compute symmetric powers of any particular
/// object for d != 1.
IntSeries sigma_series_categorical(const mpz_class& d, int order);

/// n-th symmetric power sigma^n(c): the t^n coefficient of sigma_t(c).
LefschetzPoly sym_power(const LefschetzPoly& c, int n);

/// Adams operation psi^k, the ring endomorphism of Z[L] with
/// psi^k(L^m) = L^{mk}.  Requires k >= 1; psi^1 is the identity.
LefschetzPoly adams(const LefschetzPoly& c, int k);

/// n-th exterior power lambda^n(c), read off from
/// lambda_t(c) = sigma_{-t}(c)^{-1}.
LefschetzPoly lambda_power(const LefschetzPoly& c, int n);

}  // namespace motzeta
