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

#include <cstdint>
#include <vector>

#include "centervar/polynomial.hpp"

namespace centervar {

/// Resource limits for basis computations. On exhaustion the computation
/// aborts with BudgetExceededError — it never returns a wrong answer.
struct Budget {
    /// S-pairs processed in one buchberger() run.
    std::int64_t max_pairs = 1'000'000;
    /// Terms held by any intermediate polynomial during division.
    std::int64_t max_terms = 1'000'000;
    /// Wall-clock cap per buchberger() run, in milliseconds; 0 disables it.
    std::int64_t max_millis = 0;
};

/// A Gröbner basis for a fixed term order. When `reduced` is set the
/// generators are monic, no term of any generator is divisible by the
/// leading monomial of another, and the list is sorted by ascending leading
/// monomial — the unique canonical basis of (ideal, order).
struct GroebnerBasis {
    std::vector<Polynomial> generators;
    TermOrder order;
    bool reduced = false;
};

/// Remainder of `f` under multivariate division by `G`: f - r lies in <G>
/// and no term of r is divisible by any leading monomial of G. Divisors are
/// tried in list order, so the result is deterministic for a fixed G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const TermOrder& ord, const Budget& budget = {});

/// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord);

/// Buchberger's algorithm with the normal pair-selection strategy (minimal
/// lcm, ties broken by generator indices) and the Gebauer-Moeller form of the
/// coprimality and chain criteria. Intermediate results are rescaled to
/// primitive integer form after each reduction. Returns the reduced basis.
/// Zero generators are dropped; an empty ideal yields an empty basis.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& ord,
                         const Budget& budget = {});

/// Rescale so coefficients are coprime integers and the leading coefficient
/// under `ord` is positive. Zero stays zero.
Polynomial primitive_part(const Polynomial& p, const TermOrder& ord);

/// Test-support check, not assumed by the algorithm: every S-polynomial of
/// basis pairs reduces to zero and so does every original generator.
bool is_groebner_basis(const std::vector<Polynomial>& basis, const TermOrder& ord,
                       const std::vector<Polynomial>& original_gens, const Budget& budget = {});

}  // namespace centervar
