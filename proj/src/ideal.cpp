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

#include "centervar/ideal.hpp"

#include <algorithm>

#include "centervar/errors.hpp"

namespace centervar {

Ideal::Ideal(ContextPtr ctx, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    if (!ctx_) throw Error("ideal needs a context");
    for (const auto& g : gens_) require_same_context(ctx_, g.context());
}

bool Ideal::is_zero_ideal(const Budget& budget) const {
    return groebner(TermOrder::degrevlex(), budget).generators.empty();
}

const GroebnerBasis& Ideal::groebner(const TermOrder& ord, const Budget& budget) const {
    std::string key = ord.key();
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->by_order.find(key);
        if (it != cache_->by_order.end()) return it->second;
    }
    GroebnerBasis gb = gens_.empty()
                           ? GroebnerBasis{.generators = {}, .order = ord, .reduced = true}
                           : buchberger(gens_, ord, budget);
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->by_order.emplace(std::move(key), std::move(gb));
    (void)inserted;
    return it->second;
}

bool is_member(const Polynomial& f, const Ideal& I, const Budget& budget) {
    require_same_context(f.context(), I.context());
    const auto& gb = I.groebner(TermOrder::degrevlex(), budget);
    return normal_form(f, gb.generators, gb.order, budget).is_zero();
}

Ideal eliminate(const Ideal& I, const std::vector<int>& drop, const Budget& budget) {
    const int arity = I.context()->arity();
    for (int v : drop)
        if (v < 0 || v >= arity) throw Error("eliminate: variable index out of range");
    if (drop.empty()) return I;
    TermOrder ord = TermOrder::elimination(drop, arity);
    const auto& gb = I.groebner(ord, budget);
    std::vector<Polynomial> kept;
    for (const auto& g : gb.generators)
        if (free_of_variables(g, drop)) kept.push_back(g);
    return Ideal(I.context(), std::move(kept));
}

Ideal intersect(const Ideal& I, const Ideal& J, const Budget& budget) {
    require_same_context(I.context(), J.context());
    const ContextPtr& ctx = I.context();
    ContextPtr big = extended_context(ctx, {fresh_name(*ctx, "t")});
    std::vector<int> up(static_cast<std::size_t>(ctx->arity()));
    for (int i = 0; i < ctx->arity(); ++i) up[static_cast<std::size_t>(i)] = i + 1;

    Polynomial t = Polynomial::variable(big, 0);
    Polynomial one_minus_t = Polynomial::constant(big, Rational(1)) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(t * reindex_polynomial(f, big, up));
    for (const auto& h : J.generators())
        gens.push_back(one_minus_t * reindex_polynomial(h, big, up));

    Ideal K(big, std::move(gens));
    Ideal elim = eliminate(K, {0}, budget);

    std::vector<int> down(static_cast<std::size_t>(big->arity()));
    down[0] = -1;
    for (int i = 0; i < ctx->arity(); ++i) down[static_cast<std::size_t>(i + 1)] = i;
    std::vector<Polynomial> out;
    for (const auto& g : elim.generators()) out.push_back(reindex_polynomial(g, ctx, down));
    return Ideal(ctx, std::move(out));
}

Ideal quotient(const Ideal& I, const Ideal& H, const Budget& budget) {
    require_same_context(I.context(), H.context());
    std::vector<Polynomial> hs;
    for (const auto& h : H.generators())
        if (!h.is_zero()) hs.push_back(h);
    if (hs.empty()) throw Error("quotient by the zero ideal");

    bool first = true;
    Ideal result = Ideal::zero(I.context());
    for (const auto& h : hs) {
        Ideal cap = intersect(I, Ideal(I.context(), {h}), budget);
        std::vector<Polynomial> divided;
        for (const auto& g : cap.generators()) divided.push_back(exact_divide(g, h));
        Ideal part(I.context(), std::move(divided));
        result = first ? part : intersect(result, part, budget);
        first = false;
    }
    return result;
}

bool radical_member(const Polynomial& f, const Ideal& I, const Budget& budget) {
    require_same_context(f.context(), I.context());
    if (f.is_zero()) return true;
    const ContextPtr& ctx = I.context();
    ContextPtr big = extended_context(ctx, {fresh_name(*ctx, "w")});
    std::vector<int> up(static_cast<std::size_t>(ctx->arity()));
    for (int i = 0; i < ctx->arity(); ++i) up[static_cast<std::size_t>(i)] = i + 1;

    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(reindex_polynomial(g, big, up));
    Polynomial w = Polynomial::variable(big, 0);
    gens.push_back(Polynomial::constant(big, Rational(1)) - w * reindex_polynomial(f, big, up));

    TermOrder ord = TermOrder::elimination({0}, big->arity());
    GroebnerBasis gb = buchberger(gens, ord, budget);
    Polynomial one = Polynomial::constant(big, Rational(1));
    return normal_form(one, gb.generators, ord, budget).is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J, const Budget& budget) {
    require_same_context(I.context(), J.context());
    const auto& a = I.groebner(TermOrder::degrevlex(), budget).generators;
    const auto& b = J.groebner(TermOrder::degrevlex(), budget).generators;
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

void RationalMap::validate() const {
    if (!target_ctx || !param_ctx) throw Error("rational map: missing context");
    const auto n = static_cast<std::size_t>(target_ctx->arity());
    if (numerators.size() != n || denominators.size() != n)
        throw Error("rational map: one numerator and denominator per target variable");
    for (const auto& f : numerators) require_same_context(param_ctx, f.context());
    for (const auto& g : denominators) {
        require_same_context(param_ctx, g.context());
        if (g.is_zero()) throw Error("rational map: zero denominator");
    }
    for (const auto& name : param_ctx->names())
        if (target_ctx->index_of(name) >= 0)
            throw Error("rational map: parameter name collides with target variable: " + name);
}

Ideal implicitize(const RationalMap& map, const Budget& budget) {
    map.validate();
    const int n = map.target_ctx->arity();
    const int m = map.param_ctx->arity();

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(1 + m + n));
    std::string tname = "t";
    while (map.param_ctx->index_of(tname) >= 0 || map.target_ctx->index_of(tname) >= 0)
        tname += "_";
    names.push_back(tname);
    for (const auto& s : map.param_ctx->names()) names.push_back(s);
    for (const auto& s : map.target_ctx->names()) names.push_back(s);
    ContextPtr big = make_context(std::move(names));

    std::vector<int> param_up(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) param_up[static_cast<std::size_t>(j)] = 1 + j;

    Polynomial g_product = Polynomial::constant(map.param_ctx, Rational(1));
    for (const auto& d : map.denominators) g_product = g_product * d;

    std::vector<Polynomial> gens;
    Polynomial t = Polynomial::variable(big, 0);
    gens.push_back(Polynomial::constant(big, Rational(1)) -
                   t * reindex_polynomial(g_product, big, param_up));
    for (int i = 0; i < n; ++i) {
        Polynomial xi = Polynomial::variable(big, 1 + m + i);
        gens.push_back(
            reindex_polynomial(map.denominators[static_cast<std::size_t>(i)], big, param_up) * xi -
            reindex_polynomial(map.numerators[static_cast<std::size_t>(i)], big, param_up));
    }

    std::vector<int> drop(static_cast<std::size_t>(1 + m));
    for (int j = 0; j <= m; ++j) drop[static_cast<std::size_t>(j)] = j;
    Ideal big_ideal(big, std::move(gens));
    Ideal elim = eliminate(big_ideal, drop, budget);

    std::vector<int> down(static_cast<std::size_t>(big->arity()), -1);
    for (int i = 0; i < n; ++i) down[static_cast<std::size_t>(1 + m + i)] = i;
    std::vector<Polynomial> out;
    for (const auto& g : elim.generators())
        out.push_back(reindex_polynomial(g, map.target_ctx, down));
    return Ideal(map.target_ctx, std::move(out));
}

bool certifies_prime(const Ideal& J, const RationalMap& map, const Budget& budget) {
    return ideal_equal(implicitize(map, budget), J, budget);
}

ContextPtr extended_context(const ContextPtr& base, const std::vector<std::string>& front) {
    std::vector<std::string> names = front;
    for (const auto& s : base->names()) names.push_back(s);
    return make_context(std::move(names));
}

Polynomial reindex_polynomial(const Polynomial& p, const ContextPtr& to,
                              const std::vector<int>& var_map) {
    if (static_cast<int>(var_map.size()) != p.context()->arity())
        throw Error("reindex: variable map has wrong length");
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        std::vector<std::int32_t> e(static_cast<std::size_t>(to->arity()), 0);
        for (int i = 0; i < p.context()->arity(); ++i) {
            auto x = t.mono.exponent(i);
            if (x == 0) continue;
            int target = var_map[static_cast<std::size_t>(i)];
            if (target < 0)
                throw Error("reindex: polynomial uses a variable with no image: " +
                            p.context()->name(i));
            e[static_cast<std::size_t>(target)] += x;
        }
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(to, std::move(terms));
}

bool free_of_variables(const Polynomial& p, const std::vector<int>& vars) {
    for (const auto& t : p.terms())
        for (int v : vars)
            if (t.mono.exponent(v) != 0) return false;
    return true;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& h) {
    require_same_context(p.context(), h.context());
    if (h.is_zero()) throw Error("exact division by zero polynomial");
    TermOrder ord = TermOrder::degrevlex();
    Polynomial rem = p;
    Polynomial q = Polynomial::zero(p.context());
    auto [hc, hm] = h.leading_pair(ord);
    while (!rem.is_zero()) {
        auto [rc, rm] = rem.leading_pair(ord);
        if (!hm.divides(rm)) throw Error("exact division: not divisible");
        Monomial qm = rm.divided_by(hm);
        Rational qc = rc / hc;
        q = q + Polynomial::monomial(p.context(), qm, qc);
        rem = rem - h.times_term(qm, qc);
    }
    return q;
}

}  // namespace centervar
