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

#include "centervar/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "centervar/errors.hpp"

namespace centervar {

namespace {

struct OrdGreater {
    const TermOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->greater(a, b); }
};

// A basis element prepared for fast division: terms descending under the
// active order, leading data and divisor mask cached.
struct Entry {
    std::vector<Term> terms;
    Monomial lm;
    Rational lc;
    std::uint64_t mask = 0;

    Entry(const Polynomial& p, const TermOrder& ord)
        : terms(p.sorted_terms(ord)), lm(terms.front().mono), lc(terms.front().coeff),
          mask(terms.front().mono.mask()) {}

    Polynomial to_polynomial(const ContextPtr& ctx) const {
        return Polynomial::from_terms(ctx, terms);
    }
};

using WorkMap = std::map<Monomial, Rational, OrdGreater>;

void subtract_tail(WorkMap& work, const Entry& g, const Monomial& q, const Rational& factor) {
    for (std::size_t k = 1; k < g.terms.size(); ++k) {
        const Term& t = g.terms[k];
        Monomial m = t.mono.times(q);
        Rational delta = factor * t.coeff;
        auto [it, inserted] = work.emplace(std::move(m), -delta);
        if (!inserted) {
            it->second -= delta;
            if (is_zero(it->second)) work.erase(it);
        }
    }
}

// Full normal form of `terms` against `G`, skipping entry `skip` (-1 for none).
std::vector<Term> reduce_full(const std::vector<Term>& terms, const std::vector<Entry>& G,
                              int skip, const TermOrder& ord, const Budget& budget) {
    WorkMap work{OrdGreater{&ord}};
    for (const auto& t : terms) work.emplace(t.mono, t.coeff);
    std::vector<Term> remainder;
    while (!work.empty()) {
        auto it = work.begin();
        Monomial m = it->first;
        Rational c = it->second;
        work.erase(it);
        const std::uint64_t keep_bits = ~m.mask();
        const Entry* reducer = nullptr;
        for (std::size_t gi = 0; gi < G.size(); ++gi) {
            if (static_cast<int>(gi) == skip) continue;
            const Entry& g = G[gi];
            if ((g.mask & keep_bits) == 0 && g.lm.divides(m)) {
                reducer = &g;
                break;
            }
        }
        if (!reducer) {
            remainder.push_back({std::move(m), std::move(c)});
            continue;
        }
        Monomial q = m.divided_by(reducer->lm);
        Rational factor = c / reducer->lc;
        subtract_tail(work, *reducer, q, factor);
        if (static_cast<std::int64_t>(work.size() + remainder.size()) > budget.max_terms)
            throw BudgetExceededError("division exceeded the term budget");
    }
    return remainder;
}

std::vector<Entry> make_entries(const std::vector<Polynomial>& G, const TermOrder& ord) {
    std::vector<Entry> entries;
    entries.reserve(G.size());
    for (const auto& g : G)
        if (!g.is_zero()) entries.emplace_back(g, ord);
    return entries;
}

struct SPair {
    Monomial lcm;
    int i, j;
};

struct SPairCmp {
    const TermOrder* ord;
    bool operator()(const SPair& a, const SPair& b) const {
        int c = ord->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

using PairSet = std::set<SPair, SPairCmp>;

// Gebauer-Moeller pair update: installs pairs (k, t) for the new element t,
// pruned by the lcm-divisibility (chain) and coprimality criteria, and
// prunes existing pairs made redundant by t.
void update_pairs(PairSet& pairs, const std::vector<Entry>& basis, int t) {
    const Monomial& lmt = basis[static_cast<std::size_t>(t)].lm;
    std::vector<Monomial> L;
    L.reserve(static_cast<std::size_t>(t));
    for (int k = 0; k < t; ++k)
        L.push_back(Monomial::lcm(basis[static_cast<std::size_t>(k)].lm, lmt));

    std::vector<char> keep(static_cast<std::size_t>(t), 1);
    for (int k = 0; k < t; ++k) {
        for (int k2 = 0; k2 < t; ++k2) {
            if (k2 == k) continue;
            if (L[static_cast<std::size_t>(k2)].divides(L[static_cast<std::size_t>(k)]) &&
                !(L[static_cast<std::size_t>(k2)] == L[static_cast<std::size_t>(k)])) {
                keep[static_cast<std::size_t>(k)] = 0;
                break;
            }
        }
    }
    // Among pairs sharing one lcm: a coprime member kills the whole class,
    // otherwise only the lowest index survives.
    for (int k = 0; k < t; ++k) {
        if (!keep[static_cast<std::size_t>(k)]) continue;
        bool coprime_in_class =
            basis[static_cast<std::size_t>(k)].lm.coprime_with(lmt);
        for (int k2 = k + 1; k2 < t; ++k2) {
            if (!keep[static_cast<std::size_t>(k2)]) continue;
            if (L[static_cast<std::size_t>(k2)] == L[static_cast<std::size_t>(k)]) {
                if (basis[static_cast<std::size_t>(k2)].lm.coprime_with(lmt))
                    coprime_in_class = true;
                keep[static_cast<std::size_t>(k2)] = 0;
            }
        }
        if (coprime_in_class) keep[static_cast<std::size_t>(k)] = 0;
    }

    for (auto it = pairs.begin(); it != pairs.end();) {
        const SPair& p = *it;
        const Monomial& lij = p.lcm;
        if (lmt.divides(lij) &&
            !(Monomial::lcm(basis[static_cast<std::size_t>(p.i)].lm, lmt) == lij) &&
            !(Monomial::lcm(basis[static_cast<std::size_t>(p.j)].lm, lmt) == lij)) {
            it = pairs.erase(it);
        } else {
            ++it;
        }
    }

    for (int k = 0; k < t; ++k)
        if (keep[static_cast<std::size_t>(k)])
            pairs.insert(SPair{L[static_cast<std::size_t>(k)], k, t});
}

}  // namespace

Polynomial primitive_part(const Polynomial& p, const TermOrder& ord) {
    if (p.is_zero()) return p;
    Int den_lcm = 1;
    for (const auto& t : p.terms()) den_lcm = lcm(den_lcm, t.coeff.get_den());
    Int num_gcd = 0;
    for (const auto& t : p.terms()) {
        Rational scaled = t.coeff * Rational(den_lcm);
        num_gcd = gcd(num_gcd, scaled.get_num());
    }
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    Polynomial q = p.scaled(scale);
    if (sgn(q.leading_term(ord).coeff) < 0) q = -q;
    return q;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const TermOrder& ord, const Budget& budget) {
    for (const auto& g : G) require_same_context(f.context(), g.context());
    ord.validate(f.context()->arity());
    auto entries = make_entries(G, ord);
    auto rem = reduce_full(f.terms(), entries, -1, ord, budget);
    return Polynomial::from_terms(f.context(), std::move(rem));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
    require_same_context(f.context(), g.context());
    auto [cf, mf] = f.leading_pair(ord);
    auto [cg, mg] = g.leading_pair(ord);
    Monomial L = Monomial::lcm(mf, mg);
    Polynomial left = f.times_term(L.divided_by(mf), Rational(1) / cf);
    Polynomial right = g.times_term(L.divided_by(mg), Rational(1) / cg);
    return left - right;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& ord,
                         const Budget& budget) {
    ContextPtr ctx;
    for (const auto& g : gens) {
        if (!ctx) ctx = g.context();
        require_same_context(ctx, g.context());
    }
    if (!ctx) throw Error("buchberger: no generators given");
    ord.validate(ctx->arity());
    // All-zero input denotes the zero ideal; its reduced basis is empty.

    std::vector<Entry> basis;
    PairSet pairs{SPairCmp{&ord}};
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        basis.emplace_back(primitive_part(g, ord), ord);
        update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1);
    }

    const auto start = std::chrono::steady_clock::now();
    std::int64_t processed = 0;
    while (!pairs.empty()) {
        SPair p = *pairs.begin();
        pairs.erase(pairs.begin());
        if (++processed > budget.max_pairs)
            throw BudgetExceededError(
                "buchberger exceeded the pair budget (" + std::to_string(budget.max_pairs) +
                " pairs; basis size " + std::to_string(basis.size()) + ")");
        if (budget.max_millis > 0 && (processed & 63) == 0) {
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            if (elapsed > budget.max_millis)
                throw BudgetExceededError(
                    "buchberger exceeded the time budget (" + std::to_string(budget.max_millis) +
                    " ms; " + std::to_string(processed) + " pairs; basis size " +
                    std::to_string(basis.size()) + ")");
        }

        const Entry& gi = basis[static_cast<std::size_t>(p.i)];
        const Entry& gj = basis[static_cast<std::size_t>(p.j)];
        // S-polynomial, formed directly on term vectors.
        WorkMap work{OrdGreater{&ord}};
        {
            Monomial qi = p.lcm.divided_by(gi.lm);
            Monomial qj = p.lcm.divided_by(gj.lm);
            for (std::size_t k = 1; k < gi.terms.size(); ++k)
                work.emplace(gi.terms[k].mono.times(qi), gi.terms[k].coeff / gi.lc);
            for (std::size_t k = 1; k < gj.terms.size(); ++k) {
                Monomial m = gj.terms[k].mono.times(qj);
                Rational delta = gj.terms[k].coeff / gj.lc;
                auto [it, inserted] = work.emplace(std::move(m), -delta);
                if (!inserted) {
                    it->second -= delta;
                    if (is_zero(it->second)) work.erase(it);
                }
            }
        }
        std::vector<Term> sterms;
        sterms.reserve(work.size());
        for (auto& [m, c] : work) sterms.push_back({m, c});
        auto rem = reduce_full(sterms, basis, -1, ord, budget);
        if (rem.empty()) continue;
        Polynomial r = primitive_part(Polynomial::from_terms(ctx, std::move(rem)), ord);
        basis.emplace_back(r, ord);
        update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1);
    }

    // Minimalize: keep only elements whose leading monomial is not divisible
    // by another kept leading monomial (scanning by ascending lm).
    std::vector<int> by_lm(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) by_lm[i] = static_cast<int>(i);
    std::sort(by_lm.begin(), by_lm.end(), [&](int a, int b) {
        int c = ord.compare(basis[static_cast<std::size_t>(a)].lm,
                            basis[static_cast<std::size_t>(b)].lm);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<Entry> kept;
    for (int idx : by_lm) {
        const Monomial& lm = basis[static_cast<std::size_t>(idx)].lm;
        bool redundant = false;
        for (const auto& k : kept) {
            if (k.lm.divides(lm)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(basis[static_cast<std::size_t>(idx)]);
    }

    // Tail-reduce each survivor against the others and make it monic. The
    // leading monomials are pairwise indivisible, so one full pass yields
    // the reduced basis.
    for (std::size_t i = 0; i < kept.size(); ++i) {
        auto rem = reduce_full(kept[i].terms, kept, static_cast<int>(i), ord, budget);
        Polynomial r = Polynomial::from_terms(ctx, std::move(rem));
        r = r.scaled(Rational(1) / r.leading_term(ord).coeff);
        kept[i] = Entry(r, ord);
    }

    GroebnerBasis out{.generators = {}, .order = ord, .reduced = true};
    out.generators.reserve(kept.size());
    for (const auto& e : kept) out.generators.push_back(e.to_polynomial(ctx));
    return out;
}

bool is_groebner_basis(const std::vector<Polynomial>& basis, const TermOrder& ord,
                       const std::vector<Polynomial>& original_gens, const Budget& budget) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            Polynomial s = s_polynomial(basis[i], basis[j], ord);
            if (!normal_form(s, basis, ord, budget).is_zero()) return false;
        }
    }
    for (const auto& g : original_gens)
        if (!normal_form(g, basis, ord, budget).is_zero()) return false;
    return true;
}

}  // namespace centervar
