/*
 * Copyright 2026 The centervar Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "centervar/polynomial.hpp"

namespace centervar {

// Polynomial grammar (ASCII, whitespace insignificant):
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := coeff ['*' powprod] | powprod
//   powprod:= varpow ('*' varpow)*
//   varpow := name ['^' nat]
//   coeff  := nat ['/' nat]
//   name   := letter (letter|digit|'_')*

/// Throws ParseError (with offset) on syntax errors, including unknown
/// variable names.
Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx);

/// Canonical printing: terms descending under `ord`, the sign of each
/// coefficient pulled out into the +/- separators, "*" between factors,
/// exponent suffix "^k" only for k > 1. parse(format(p)) == p, and equal
/// polynomials format identically under the same order.
std::string format_polynomial(const Polynomial& p, const TermOrder& ord);

/// One polynomial per line; blank lines and '#' comments are skipped.
std::vector<Polynomial> parse_polynomial_list(std::istream& in, const ContextPtr& ctx);
std::vector<Polynomial> parse_polynomial_list_file(const std::string& path, const ContextPtr& ctx);

}  // namespace centervar
