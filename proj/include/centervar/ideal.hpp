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

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "centervar/groebner.hpp"
#include "centervar/polynomial.hpp"

namespace centervar {

/// A polynomial ideal given by generators, with reduced Gröbner bases cached
/// per term order. Copies share the cache; population is synchronized, so
/// ideals may be used from several threads.
class Ideal {
public:
    Ideal(ContextPtr ctx, std::vector<Polynomial> gens);
    static Ideal zero(ContextPtr ctx) { return Ideal(std::move(ctx), {}); }

    const ContextPtr& context() const noexcept { return ctx_; }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }
    bool is_zero_ideal(const Budget& budget = {}) const;

    const GroebnerBasis& groebner(const TermOrder& ord, const Budget& budget = {}) const;

private:
    struct Cache {
        std::mutex mu;
        std::map<std::string, GroebnerBasis> by_order;
    };

    ContextPtr ctx_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

/// f reduces to zero against the reduced degrevlex basis of I.
bool is_member(const Polynomial& f, const Ideal& I, const Budget& budget = {});

/// I ∩ C[vars \ drop], computed with a block order whose leading block is
/// `drop`. The result lives in the same context; its generators simply do
/// not involve the dropped variables.
Ideal eliminate(const Ideal& I, const std::vector<int>& drop, const Budget& budget = {});

/// <t*f_1,...,t*f_r,(1-t)*h_1,...,(1-t)*h_s> with a fresh leading t, then t
/// eliminated — generates exactly I ∩ J.
Ideal intersect(const Ideal& I, const Ideal& J, const Budget& budget = {});

/// I : H = { f | f*H ⊆ I }, via I : <h> = (1/h)(I ∩ <h>) intersected over
/// the generators of H. H must not be the zero ideal.
Ideal quotient(const Ideal& I, const Ideal& H, const Budget& budget = {});

/// f ∈ √I, decided by 1 ∈ I + <1 - w*f> in the ring extended by a fresh w.
bool radical_member(const Polynomial& f, const Ideal& I, const Budget& budget = {});

/// Equality as ideals: identical reduced degrevlex bases.
bool ideal_equal(const Ideal& I, const Ideal& J, const Budget& budget = {});

/// x_i = f_i(t_1..t_m) / g_i(t_1..t_m). Target variables and parameters
/// live in separate contexts with disjoint names; denominators are nonzero
/// polynomials.
struct RationalMap {
    ContextPtr target_ctx;
    ContextPtr param_ctx;
    std::vector<Polynomial> numerators;    // over param_ctx, one per target var
    std::vector<Polynomial> denominators;  // over param_ctx, one per target var

    void validate() const;
};

/// Defining ideal of the closure of the image: C[x] ∩ <1 - t*g, g_i*x_i - f_i>
/// with g = g_1...g_n and a fresh leading t. Denominators are handled exactly
/// through the 1 - t*g generator, never by clearing them heuristically.
Ideal implicitize(const RationalMap& map, const Budget& budget = {});

/// implicitize(map) == J; when true, J is certified prime.
bool certifies_prime(const Ideal& J, const RationalMap& map, const Budget& budget = {});

// --- context surgery -------------------------------------------------------

/// New context with `front` names prepended to `base`'s names.
ContextPtr extended_context(const ContextPtr& base, const std::vector<std::string>& front);

/// Rewrites p into `to`, sending variable i to var_map[i]; a variable mapped
/// to -1 must not occur in p.
Polynomial reindex_polynomial(const Polynomial& p, const ContextPtr& to,
                              const std::vector<int>& var_map);

/// True when no term of p involves any variable of `vars`.
bool free_of_variables(const Polynomial& p, const std::vector<int>& vars);

/// Exact quotient p / h (h must divide p). Order-independent result.
Polynomial exact_divide(const Polynomial& p, const Polynomial& h);

}  // namespace centervar
