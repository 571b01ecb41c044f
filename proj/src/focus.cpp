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

#include "centervar/focus.hpp"

#include "centervar/errors.hpp"
#include "centervar/parse.hpp"
#include "centervar/sibirsky.hpp"

namespace centervar {

Polynomial PhaseSeries::coefficient(int j, int k) const {
    if (j == 1 && k == 1) return Polynomial::constant(ctx, Rational(1));
    auto it = coefficients.find({j, k});
    if (it != coefficients.end()) return it->second;
    return Polynomial::zero(ctx);
}

FocusComputation compute_focus(const SystemSpec& spec, int kmax) {
    if (kmax < 1) throw Error("focus quantities need kmax >= 1");
    const ContextPtr& ctx = spec.coefficient_context();
    const int l = spec.l();

    PhaseSeries series;
    series.ctx = ctx;
    series.truncation_degree = 2 * (kmax + 1);

    std::vector<Polynomial> gs;
    gs.reserve(static_cast<std::size_t>(kmax));

    auto v_of = [&](int j, int k) { return series.coefficient(j, k); };

    // Residual of the expansion at bidegree (m, n), with v_{m,n} left out:
    //   Σ a_{p_i q_i} (m - p_i) v_{m-p_i, n-q_i}
    // - Σ b_{q_i p_i} (n - p_i) v_{m-q_i, n-p_i}.
    auto residual = [&](int m, int n) {
        Polynomial acc = Polynomial::zero(ctx);
        for (int i = 0; i < l; ++i) {
            const int p = spec.p(i), q = spec.q(i);
            Polynomial va = v_of(m - p, n - q);
            if (!va.is_zero()) {
                Polynomial a_var = Polynomial::variable(ctx, i);
                acc = acc + (a_var * va).scaled(Rational(m - p));
            }
            Polynomial vb = v_of(m - q, n - p);
            if (!vb.is_zero()) {
                Polynomial b_var = Polynomial::variable(ctx, 2 * l - 1 - i);
                acc = acc - (b_var * vb).scaled(Rational(n - p));
            }
        }
        return acc;
    };

    for (int s = 3; s <= series.truncation_degree; ++s) {
        for (int m = s; m >= 0; --m) {
            const int n = s - m;
            if (m == n) {
                // v_{m,m} := 0; the residual is the next focus quantity.
                series.coefficients.emplace(std::make_pair(m, n), Polynomial::zero(ctx));
                gs.push_back(residual(m, n));
            } else {
                series.coefficients.emplace(std::make_pair(m, n),
                                            residual(m, n).scaled(rational(1, m - n)));
            }
        }
    }

    if (static_cast<int>(gs.size()) != kmax)
        throw Error("internal: focus quantity count mismatch");
    FocusComputation out;
    out.series = std::move(series);
    out.list.quantities = std::move(gs);
    return out;
}

FocusQuantityList focus_quantities(const SystemSpec& spec, int kmax) {
    return compute_focus(spec, kmax).list;
}

StructureReport verify_structure(const SystemSpec& spec, const FocusQuantityList& fq,
                                 const Ideal* sym, const Budget& budget) {
    StructureReport report;
    const ContextPtr& ctx = spec.coefficient_context();
    TermOrder ord = TermOrder::degrevlex();

    Ideal computed_sym = sym ? *sym : symmetry_ideal(spec, budget);

    for (int k = 1; k <= fq.kmax(); ++k) {
        const Polynomial& g = fq.g(k);
        require_same_context(ctx, g.context());

        for (const auto& t : g.terms()) {
            auto [l1, l2] = l_operator(spec, t.mono.exponents());
            if (l1 != k || l2 != k) {
                report.issues.push_back(
                    {k, "level",
                     format_polynomial(Polynomial::monomial(ctx, t.mono, Rational(1)), ord) +
                         " sits at L = (" + std::to_string(l1) + ", " + std::to_string(l2) +
                         ")"});
            }
        }

        for (const auto& t : g.terms()) {
            Monomial conj(involution(t.mono.exponents()));
            Rational mirrored = g.coeff_of(conj);
            if (mirrored != -t.coeff) {
                report.issues.push_back(
                    {k, "antisymmetry",
                     format_polynomial(Polynomial::monomial(ctx, t.mono, Rational(1)), ord) +
                         " has coefficient " + to_string(t.coeff) + " but its conjugate has " +
                         to_string(mirrored)});
            }
        }

        const auto& gb = computed_sym.groebner(ord, budget);
        Polynomial rem = normal_form(g, gb.generators, ord, budget);
        if (!rem.is_zero()) {
            report.issues.push_back(
                {k, "membership", "reduction remainder " + format_polynomial(rem, ord)});
        }
    }
    return report;
}

}  // namespace centervar
