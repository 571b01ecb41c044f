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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "centervar/groebner.hpp"
#include "centervar/ideal.hpp"
#include "helpers.hpp"

using namespace centervar;
using namespace centervar::testing;

namespace {

// Sylvester resultant of two univariate-in-t polynomials with polynomial
// coefficients; independent elimination oracle for small fixtures.
using PolyRow = std::vector<Polynomial>;  // coefficients by ascending t-power

Polynomial determinant(std::vector<PolyRow> m, const ContextPtr& ctx) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(ctx, Rational(1));
    if (n == 1) return m[0][0];
    Polynomial det = Polynomial::zero(ctx);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<PolyRow> minor;
        for (std::size_t r = 1; r < n; ++r) {
            PolyRow row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial cof = m[0][j] * determinant(std::move(minor), ctx);
        det = (j % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

Polynomial resultant_in_t(const PolyRow& f, const PolyRow& g, const ContextPtr& ctx) {
    const std::size_t df = f.size() - 1, dg = g.size() - 1;
    const std::size_t n = df + dg;
    std::vector<PolyRow> syl(n, PolyRow(n, Polynomial::zero(ctx)));
    for (std::size_t r = 0; r < dg; ++r)
        for (std::size_t k = 0; k <= df; ++k) syl[r][r + k] = f[df - k];
    for (std::size_t r = 0; r < df; ++r)
        for (std::size_t k = 0; k <= dg; ++k) syl[dg + r][r + k] = g[dg - k];
    return determinant(std::move(syl), ctx);
}

}  // namespace

TEST_CASE("normal form: division examples") {
    auto ctx = xy();
    TermOrder lex = TermOrder::lex();

    CHECK(normal_form(P(ctx, "x^2"), {P(ctx, "x")}, lex).is_zero());

    // single division step, checked against the hand expansion
    Polynomial f = P(ctx, "x^2*y + y");
    Polynomial g = P(ctx, "x^2 - 1");
    CHECK(f == P(ctx, "y") * g + P(ctx, "2*y"));
    CHECK(normal_form(f, {g}, lex) == P(ctx, "2*y"));

    // remainder terms are never divisible by a leading monomial
    Polynomial r = normal_form(P(ctx, "x^3 + x*y + y^3"), {P(ctx, "x*y - 1")}, lex);
    for (const auto& t : r.terms()) CHECK_FALSE(Monomial({1, 1}).divides(t.mono));

    CHECK(normal_form(Polynomial::zero(ctx), {g}, lex).is_zero());
    // reduction against the empty set is the identity
    CHECK(normal_form(f, {}, lex) == f);
}

TEST_CASE("buchberger: principal ideal and parabola") {
    auto ctx = xy();
    GroebnerBasis gb = buchberger({P(ctx, "7*x")}, TermOrder::lex());
    REQUIRE(gb.generators.size() == 1);
    CHECK(gb.generators[0] == P(ctx, "x"));  // monic
    CHECK(gb.reduced);

    // parabola: eliminate t from {t - x, t^2 - y} under lex t > x > y
    auto txy = make_context({"t", "x", "y"});
    GroebnerBasis par = buchberger({P(txy, "t - x"), P(txy, "t^2 - y")}, TermOrder::lex());
    REQUIRE(par.generators.size() == 2);
    CHECK(std::find(par.generators.begin(), par.generators.end(), P(txy, "t - x")) !=
          par.generators.end());
    CHECK(std::find(par.generators.begin(), par.generators.end(), P(txy, "x^2 - y")) !=
          par.generators.end());
}

TEST_CASE("buchberger: canonicality under generator permutation") {
    auto spec = quadratic_spec();
    auto ctx = spec.coefficient_context();
    std::vector<Polynomial> fs = {
        P(ctx, "a_0_1^3*b_2_m1 - a_m1_2*b_1_0^3"),
        P(ctx, "a_1_0*a_0_1 - b_0_1*b_1_0"),
        P(ctx, "a_1_0^3*a_m1_2 - b_2_m1*b_0_1^3"),
        P(ctx, "a_1_0*a_m1_2*b_1_0^2 - a_0_1^2*b_2_m1*b_0_1"),
        P(ctx, "a_1_0^2*a_m1_2*b_1_0 - a_0_1*b_2_m1*b_0_1^2"),
    };
    GroebnerBasis ref = buchberger(fs, TermOrder::degrevlex());
    std::vector<Polynomial> shuffled = fs;
    std::sort(shuffled.begin(), shuffled.end(), [](const Polynomial& a, const Polynomial& b) {
        return format_polynomial(a, TermOrder::lex()) < format_polynomial(b, TermOrder::lex());
    });
    do {
        GroebnerBasis gb = buchberger(shuffled, TermOrder::degrevlex());
        REQUIRE(gb.generators.size() == ref.generators.size());
        for (std::size_t i = 0; i < gb.generators.size(); ++i)
            CHECK(gb.generators[i] == ref.generators[i]);
    } while (std::next_permutation(
        shuffled.begin(), shuffled.end(), [](const Polynomial& a, const Polynomial& b) {
            return format_polynomial(a, TermOrder::lex()) < format_polynomial(b, TermOrder::lex());
        }));
}

TEST_CASE("buchberger: soundness asserted, not assumed") {
    auto txy = make_context({"t", "x", "y"});
    std::vector<Polynomial> gens = {P(txy, "t - x"), P(txy, "t^2 - y")};
    GroebnerBasis gb = buchberger(gens, TermOrder::lex());
    CHECK(is_groebner_basis(gb.generators, gb.order, gens));

    auto ctx = xyz();
    std::vector<Polynomial> gens2 = {P(ctx, "x^2 + y*z - 1"), P(ctx, "x*y - z"),
                                     P(ctx, "y^3 - x*z + 2")};
    GroebnerBasis gb2 = buchberger(gens2, TermOrder::degrevlex());
    CHECK(is_groebner_basis(gb2.generators, gb2.order, gens2));

    // the reduced-basis shape: monic, mutually irreducible
    for (const auto& g : gb2.generators) {
        CHECK(g.leading_term(gb2.order).coeff == 1);
        for (const auto& h : gb2.generators) {
            if (&g == &h) continue;
            for (const auto& t : g.terms())
                CHECK_FALSE(h.leading_term(gb2.order).mono.divides(t.mono));
        }
    }
}

TEST_CASE("elimination property against the resultant oracle") {
    // parabola
    auto txy = make_context({"t", "x", "y"});
    auto xy_ctx = xy();
    Ideal parab(txy, {P(txy, "t - x"), P(txy, "t^2 - y")});
    Ideal elim = eliminate(parab, {0});
    // Res_t(t - x, t^2 - y) — coefficients listed by ascending t-power
    Polynomial res = resultant_in_t({P(txy, "0 - x"), P(txy, "1")},
                                    {P(txy, "0 - y"), P(txy, "0"), P(txy, "1")}, txy);
    CHECK(ideal_equal(elim, Ideal(txy, {res})));

    // twisted cubic: x = t, y = t^2, z = t^3
    auto txyz = make_context({"t", "x", "y", "z"});
    Ideal cubic(txyz, {P(txyz, "t - x"), P(txyz, "t^2 - y"), P(txyz, "t^3 - z")});
    Ideal elim2 = eliminate(cubic, {0});
    Polynomial r1 = resultant_in_t({P(txyz, "0 - x"), P(txyz, "1")},
                                   {P(txyz, "0 - y"), P(txyz, "0"), P(txyz, "1")}, txyz);
    Polynomial r2 =
        resultant_in_t({P(txyz, "0 - x"), P(txyz, "1")},
                       {P(txyz, "0 - z"), P(txyz, "0"), P(txyz, "0"), P(txyz, "1")}, txyz);
    CHECK(ideal_equal(elim2, Ideal(txyz, {r1, r2})));
    // and the oracle itself says what it should
    CHECK(ideal_equal(Ideal(txyz, {r1, r2}),
                      Ideal(txyz, {P(txyz, "y - x^2"), P(txyz, "z - x^3")})));
}

TEST_CASE("membership") {
    auto ctx = xy();
    CHECK_FALSE(is_member(P(ctx, "x"), Ideal(ctx, {P(ctx, "x^2")})));
    CHECK(is_member(P(ctx, "x^2"), Ideal(ctx, {P(ctx, "x")})));

    // g_22 of the homogeneous cubic lies in its symmetry component ideal
    auto cubic = cubic_spec();
    auto cctx = cubic.coefficient_context();
    Ideal j3(cctx, {P(cctx, "a_2_0^2*a_m1_3 - b_3_m1*b_0_2^2"),
                    P(cctx, "a_2_0*a_0_2 - b_2_0*b_0_2"),
                    P(cctx, "a_2_0*a_m1_3*b_2_0 - a_0_2*b_3_m1*b_0_2"),
                    P(cctx, "a_1_1 - b_1_1"),
                    P(cctx, "a_0_2^2*b_3_m1 - a_m1_3*b_2_0^2")});
    CHECK(is_member(P(cctx, "a_2_0*a_0_2 - b_2_0*b_0_2"), j3));

    // f1 of the quadratic system reduces to zero against its symmetry basis
    auto quad = quadratic_spec();
    auto qctx = quad.coefficient_context();
    Ideal sym(qctx, {P(qctx, "a_0_1^3*b_2_m1 - a_m1_2*b_1_0^3"),
                     P(qctx, "a_1_0*a_0_1 - b_0_1*b_1_0"),
                     P(qctx, "a_1_0^3*a_m1_2 - b_2_m1*b_0_1^3"),
                     P(qctx, "a_1_0*a_m1_2*b_1_0^2 - a_0_1^2*b_2_m1*b_0_1"),
                     P(qctx, "a_1_0^2*a_m1_2*b_1_0 - a_0_1*b_2_m1*b_0_1^2")});
    const auto& gb = sym.groebner(TermOrder::degrevlex());
    CHECK(normal_form(P(qctx, "a_0_1^3*b_2_m1 - a_m1_2*b_1_0^3"), gb.generators, gb.order)
              .is_zero());
}

TEST_CASE("budgets abort loudly instead of answering wrongly") {
    auto ctx = xyz();
    std::vector<Polynomial> gens = {P(ctx, "x^2 + y^2 + z^2 - 1"), P(ctx, "x*y + y*z + z*x"),
                                    P(ctx, "x*y*z - 1")};
    Budget tiny;
    tiny.max_pairs = 1;
    CHECK_THROWS_AS(buchberger(gens, TermOrder::lex(), tiny), BudgetExceededError);
    Budget tiny_terms;
    tiny_terms.max_terms = 2;
    CHECK_THROWS_AS(buchberger(gens, TermOrder::lex(), tiny_terms), BudgetExceededError);
}

TEST_CASE("primitive part clears content and fixes the sign") {
    auto ctx = xy();
    Polynomial p = P(ctx, "2/3*x^2 - 4/9*y");
    Polynomial pp = primitive_part(p, TermOrder::lex());
    CHECK(pp == P(ctx, "3*x^2 - 2*y"));
    CHECK(primitive_part(-p, TermOrder::lex()) == pp);
    CHECK(primitive_part(Polynomial::zero(ctx), TermOrder::lex()).is_zero());
}

TEST_CASE("zero ideal round trip") {
    auto ctx = xy();
    GroebnerBasis gb = buchberger({Polynomial::zero(ctx)}, TermOrder::degrevlex());
    CHECK(gb.generators.empty());
    CHECK(normal_form(P(ctx, "x + y"), gb.generators, gb.order) == P(ctx, "x + y"));
}
