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

#include <random>
#include <set>

#include "centervar/sibirsky.hpp"
#include "helpers.hpp"

using namespace centervar;
using namespace centervar::testing;

namespace {

std::set<std::vector<std::int32_t>> as_set(const std::vector<MonoidElement>& v) {
    std::set<std::vector<std::int32_t>> s;
    for (const auto& e : v) s.insert(e.nu);
    return s;
}

}  // namespace

TEST_CASE("the linear operator") {
    auto quad = quadratic_spec();
    CHECK(l_operator(quad, {0, 0, 1, 1, 0, 0}) == std::pair<std::int64_t, std::int64_t>{1, 1});
    CHECK(l_operator(quad, {0, 0, 0, 0, 0, 0}) == std::pair<std::int64_t, std::int64_t>{0, 0});
    auto full = full_cubic_spec();
    CHECK(l_operator(full, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}) ==
          std::pair<std::int64_t, std::int64_t>{1, 0});
    CHECK_THROWS_AS(l_operator(quad, {1, 2, 3}), Error);
}

TEST_CASE("involution and IM/RE") {
    auto quad = quadratic_spec();
    auto ctx = quad.coefficient_context();

    // palindromic vectors have IM = 0
    auto [im0, re0] = im_re(quad, {1, 0, 2, 2, 0, 1});
    CHECK(im0.is_zero());
    CHECK(re0 == P(ctx, "2*a_1_0*a_m1_2^2*b_2_m1^2*b_0_1"));

    // the f1 generator of the quadratic system
    auto [im1, re1] = im_re(quad, {0, 3, 0, 1, 0, 0});
    CHECK(im1 == P(ctx, "a_0_1^3*b_2_m1 - a_m1_2*b_1_0^3"));

    auto [im2, re2] = im_re(quad, {1, 0, 0, 0, 0, 1});
    CHECK(im2.is_zero());
    CHECK(re2 == P(ctx, "2*a_1_0*b_0_1"));

    CHECK(involution({1, 2, 3, 4}) == std::vector<std::int32_t>{4, 3, 2, 1});
}

TEST_CASE("monoid enumeration") {
    SystemSpec swap({{1, 1}});
    auto elems = enumerate_monoid(swap, 2);
    CHECK(as_set(elems) == std::set<std::vector<std::int32_t>>{
                               {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});

    // level 1 of the quadratic system: the three symmetric pairs
    auto quad = quadratic_spec();
    auto level1 = monoid_at_level(quad, 1);
    CHECK(as_set(level1) == std::set<std::vector<std::int32_t>>{{1, 0, 0, 0, 0, 1},
                                                                {0, 1, 0, 0, 1, 0},
                                                                {0, 0, 1, 1, 0, 0}});

    // level 0 holds only the origin
    auto level0 = monoid_at_level(quad, 0);
    REQUIRE(level0.size() == 1);
    CHECK(level0[0].degree() == 0);

    // closure under addition and conjugation, on random pairs
    auto elems6 = enumerate_monoid(quad, 6);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, elems6.size() - 1);
    for (int i = 0; i < 200; ++i) {
        const auto& a = elems6[pick(rng)];
        const auto& b = elems6[pick(rng)];
        std::vector<std::int32_t> sum(a.nu.size());
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = a.nu[k] + b.nu[k];
        auto [l1, l2] = l_operator(quad, sum);
        CHECK(l1 == l2);
        auto [c1, c2] = l_operator(quad, involution(a.nu));
        CHECK(c1 == c2);
        CHECK(c1 == a.level);
    }
}

TEST_CASE("degree bound") {
    CHECK(degree_bound(quadratic_spec()) == 6);
    CHECK(degree_bound(cubic_spec()) == 8);
    CHECK(degree_bound(degree5_spec()) == 12);
}

TEST_CASE("symmetry ideal: smallest systems") {
    SystemSpec swap({{1, 1}});
    Ideal i1 = symmetry_ideal(swap);
    auto ctx1 = swap.coefficient_context();
    CHECK(ideal_equal(i1, Ideal(ctx1, {P(ctx1, "a_1_1 - b_1_1")})));

    SystemSpec sq({{2, 0}});
    Ideal i2 = symmetry_ideal(sq);
    CHECK(i2.is_zero_ideal());
    auto h2 = hilbert_basis(sq);
    REQUIRE(h2.size() == 1);
    CHECK(h2[0].nu == std::vector<std::int32_t>{1, 1});
}

TEST_CASE("symmetry ideal: quadratic system equals the published generators") {
    auto quad = quadratic_spec();
    auto ctx = quad.coefficient_context();
    Ideal computed = symmetry_ideal(quad);
    Ideal fixture(ctx, {P(ctx, "a_0_1^3*b_2_m1 - a_m1_2*b_1_0^3"),
                        P(ctx, "a_1_0*a_0_1 - b_0_1*b_1_0"),
                        P(ctx, "a_1_0^3*a_m1_2 - b_2_m1*b_0_1^3"),
                        P(ctx, "a_1_0*a_m1_2*b_1_0^2 - a_0_1^2*b_2_m1*b_0_1"),
                        P(ctx, "a_1_0^2*a_m1_2*b_1_0 - a_0_1*b_2_m1*b_0_1^2")});
    CHECK(ideal_equal(computed, fixture));
}

TEST_CASE("symmetry ideal generators are conjugate-paired kernel binomials") {
    for (const auto& spec : {quadratic_spec(), cubic_spec(), degree4_spec()}) {
        Ideal sym = symmetry_ideal(spec);
        for (const auto& g : sym.generators()) {
            REQUIRE(g.size() == 2);
            const auto& ts = g.terms();
            std::vector<std::int32_t> mu = ts[0].mono.exponents();
            CHECK(involution(mu) == ts[1].mono.exponents());
            auto [l1, l2] = l_operator(spec, mu);
            CHECK(l1 == l2);
            CHECK(kernel_check(spec, g));
        }
    }
}

TEST_CASE("the two constructions of the symmetry ideal agree") {
    for (const auto& spec :
         {SystemSpec({{1, 1}}), SystemSpec({{2, 0}}), quadratic_spec(), cubic_spec()}) {
        Ideal fast = symmetry_ideal(spec);
        Ideal textbook = symmetry_ideal_by_elimination(spec);
        CHECK(ideal_equal(fast, textbook));
    }
}

TEST_CASE("hilbert basis: smallest system minimizes away the symmetric pair") {
    SystemSpec swap({{1, 1}});
    auto basis = hilbert_basis(swap);
    CHECK(as_set(basis) == std::set<std::vector<std::int32_t>>{{1, 0}, {0, 1}});
}

TEST_CASE("hilbert basis: quadratic system has the 13 published elements") {
    auto quad = quadratic_spec();
    auto basis = hilbert_basis(quad);
    REQUIRE(basis.size() == 13);
    std::set<std::vector<std::int32_t>> expected = {
        // symmetric pairs e_i + e_{2l-i+1}
        {1, 0, 0, 0, 0, 1},
        {0, 1, 0, 0, 1, 0},
        {0, 0, 1, 1, 0, 0},
        // exponents of f1..f5 and their conjugates
        {0, 3, 0, 1, 0, 0},
        {0, 0, 1, 0, 3, 0},
        {1, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 1},
        {3, 0, 1, 0, 0, 0},
        {0, 0, 0, 1, 0, 3},
        {1, 0, 1, 0, 2, 0},
        {0, 2, 0, 1, 0, 1},
        {2, 0, 1, 0, 1, 0},
        {0, 1, 0, 1, 0, 2},
    };
    CHECK(as_set(basis) == expected);

    // every element is a monoid element, irreducible, within the bound
    for (const auto& e : basis) {
        auto [l1, l2] = l_operator(quad, e.nu);
        CHECK(l1 == l2);
        CHECK(l1 == e.level);
        CHECK_FALSE(is_reducible_in_monoid(quad, e.nu));
        CHECK(e.degree() <= degree_bound(quad));
    }

    // the basis spans the monoid up to the bound, and appears in it
    auto elems = enumerate_monoid(quad, degree_bound(quad));
    std::vector<std::vector<std::int32_t>> gens;
    for (const auto& e : basis) gens.push_back(e.nu);
    auto elem_set = as_set(elems);
    for (const auto& e : basis) CHECK(elem_set.count(e.nu) == 1);
    for (const auto& e : elems) CHECK(in_nspan(e.nu, gens));
}

TEST_CASE("kernel check") {
    auto quad = quadratic_spec();
    auto ctx = quad.coefficient_context();
    CHECK(kernel_check(quad, P(ctx, "a_0_1^3*b_2_m1 - a_m1_2*b_1_0^3")));
    CHECK_FALSE(kernel_check(quad, P(ctx, "a_1_0 - b_0_1")));
    CHECK_FALSE(kernel_check(quad, P(ctx, "a_1_0*a_0_1")));
    CHECK(kernel_check(quad, Polynomial::zero(ctx)));
}

TEST_CASE("dimension and the rank cross-check") {
    CHECK(dimension(quadratic_spec()) == 4);
    CHECK(dimension(cubic_spec()) == 5);
    CHECK(dimension(degree4_spec()) == 6);
    CHECK(dimension(degree5_spec()) == 7);
    CHECK(dimension(full_cubic_spec()) == 8);
    CHECK(dimension(SystemSpec({{1, 1}, {2, 2}})) == 2);
    CHECK(dimension(SystemSpec({{1, 1}})) == 1);

    CHECK(generic_rank(dimension_matrix(quadratic_spec())) == 4);
    CHECK(generic_rank(dimension_matrix(SystemSpec({{1, 1}, {2, 2}}))) == 2);
    CHECK(generic_rank({{1, 0}, {0, 1}}) == 2);
    CHECK(generic_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(generic_rank({{0, 0}}) == 0);
}

TEST_CASE("integer kernel basis") {
    for (const auto& spec : {quadratic_spec(), cubic_spec(), degree5_spec(),
                             SystemSpec({{1, 1}, {2, 2}})}) {
        auto m = dimension_matrix(spec);
        auto kernel = integer_kernel_basis(m);
        CHECK(static_cast<int>(kernel.size()) == 2 * spec.l() - generic_rank(m));
        for (const auto& u : kernel) {
            for (const auto& row : m) {
                std::int64_t dot = 0;
                for (std::size_t i = 0; i < row.size(); ++i) dot += row[i] * u[i];
                CHECK(dot == 0);
            }
        }
    }
}

TEST_CASE("all-resonant example") {
    SystemSpec res({{1, 1}, {2, 2}});
    Ideal sym = symmetry_ideal(res);
    auto ctx = res.coefficient_context();
    CHECK(ideal_equal(sym, Ideal(ctx, {P(ctx, "a_1_1 - b_1_1"), P(ctx, "a_2_2 - b_2_2")})));
    auto basis = hilbert_basis(res);
    CHECK(as_set(basis) == std::set<std::vector<std::int32_t>>{
                               {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
}
