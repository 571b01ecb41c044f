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

#include <random>
#include <string>
#include <vector>

#include "centervar/parse.hpp"
#include "centervar/polynomial.hpp"
#include "centervar/system_spec.hpp"

namespace centervar::testing {

inline ContextPtr xyz() { return make_context({"x", "y", "z"}); }
inline ContextPtr xy() { return make_context({"x", "y"}); }

inline Polynomial P(const ContextPtr& ctx, const std::string& text) {
    return parse_polynomial(text, ctx);
}

inline SystemSpec quadratic_spec() { return SystemSpec({{1, 0}, {0, 1}, {-1, 2}}); }
inline SystemSpec cubic_spec() { return SystemSpec({{2, 0}, {1, 1}, {0, 2}, {-1, 3}}); }
inline SystemSpec degree4_spec() {
    return SystemSpec({{3, 0}, {2, 1}, {1, 2}, {0, 3}, {-1, 4}});
}
inline SystemSpec degree5_spec() {
    return SystemSpec({{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}, {-1, 5}});
}
inline SystemSpec full_cubic_spec() {
    return SystemSpec({{1, 0}, {0, 1}, {-1, 2}, {2, 0}, {1, 1}, {0, 2}, {-1, 3}});
}

// Deterministic sparse polynomial generator for property tests: up to
// `max_terms` terms, exponents <= 3 per variable, numerators up to 10^6 in
// absolute value, denominators up to 10^6.
class RandomPolys {
public:
    explicit RandomPolys(std::uint64_t seed, ContextPtr ctx)
        : rng_(seed), ctx_(std::move(ctx)) {}

    Polynomial next(int max_terms = 10) {
        std::uniform_int_distribution<int> term_count(0, max_terms);
        std::uniform_int_distribution<int> expo(0, 3);
        std::uniform_int_distribution<long> num(-1000000, 1000000);
        std::uniform_int_distribution<long> den(1, 1000000);
        std::vector<Term> terms;
        int n = term_count(rng_);
        for (int t = 0; t < n; ++t) {
            std::vector<std::int32_t> e(static_cast<std::size_t>(ctx_->arity()));
            for (auto& x : e) x = expo(rng_);
            terms.push_back({Monomial(std::move(e)), rational(num(rng_), den(rng_))});
        }
        return Polynomial::from_terms(ctx_, std::move(terms));
    }

private:
    std::mt19937_64 rng_;
    ContextPtr ctx_;
};

}  // namespace centervar::testing
