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

#include <ostream>
#include <string>

#include "motzeta/truncated_series.hpp"

namespace motzeta {

// Canonical text rendering, normative for CLI output and golden tests.
//
//   polynomials:  "a_k*L^k + ... + a_1*L + a_0", descending exponents,
//                 zero terms omitted, unit coefficients implicit
//                 ("L^2 + L + 1", "-2*L^3 + L", "0")
//   series:       "c0 + c1*t + c2*t^2 + ... + O(t^{N+1})", zero terms
//                 omitted; multi-term polynomial coefficients are
//                 parenthesized ("1 + (L + 1)*t + O(t^2)")
//
// Polynomial output re-parses through the expression grammar.

std::string to_string(const LefschetzPoly& p);
std::string to_string(const IntSeries& f);
std::string to_string(const PolySeries& f);

std::ostream& operator<<(std::ostream& os, const LefschetzPoly& p);
std::ostream& operator<<(std::ostream& os, const IntSeries& f);
std::ostream& operator<<(std::ostream& os, const PolySeries& f);

}  // namespace motzeta
