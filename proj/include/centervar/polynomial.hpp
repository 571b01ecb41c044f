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

#include <utility>
#include <vector>

#include "centervar/context.hpp"
#include "centervar/monomial.hpp"
#include "centervar/rational.hpp"
#include "centervar/term_order.hpp"

namespace centervar {

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse exact-rational multivariate polynomial. Immutable value type:
/// every operation returns a new polynomial. Terms are stored without zero
/// coefficients, at most one term per monomial, sorted descending under the
/// internal storage order, so equal polynomials compare equal structurally.
class Polynomial {
public:
    static Polynomial zero(ContextPtr ctx);
    static Polynomial constant(ContextPtr ctx, Rational value);
    static Polynomial variable(ContextPtr ctx, int index);
    static Polynomial monomial(ContextPtr ctx, Monomial m, Rational coeff);
    /// Merges duplicates, drops zeros, sorts.
    static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

    const ContextPtr& context() const noexcept { return ctx_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    /// Max total degree over terms; -1 for the zero polynomial.
    std::int64_t total_degree() const noexcept;

    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    Rational coeff_of(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    /// this * c*m — terms stay sorted, so this is a single linear pass.
    Polynomial times_term(const Monomial& m, const Rational& c) const;
    Polynomial pow(int n) const;
    Polynomial derivative(int var) const;

    /// The order-maximal term. Throws Error on the zero polynomial.
    const Term& leading_term(const TermOrder& ord) const;
    std::pair<Rational, Monomial> leading_pair(const TermOrder& ord) const;

    /// Terms sorted descending under `ord`.
    std::vector<Term> sorted_terms(const TermOrder& ord) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    Polynomial(ContextPtr ctx, std::vector<Term> sorted) noexcept
        : ctx_(std::move(ctx)), terms_(std::move(sorted)) {}

    ContextPtr ctx_;
    std::vector<Term> terms_;
};

/// Sum of `ps` (empty sum = zero over `ctx`).
Polynomial poly_sum(const ContextPtr& ctx, const std::vector<Polynomial>& ps);

}  // namespace centervar
