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

#include "centervar/term_order.hpp"

using namespace centervar;

namespace {

// every monomial of degree <= 4 in 3 variables
std::vector<Monomial> all_monomials_deg4() {
    std::vector<Monomial> out;
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j)
            for (int k = 0; i + j + k <= 4; ++k) out.push_back(Monomial({i, j, k}));
    return out;
}

void check_order_axioms(const TermOrder& ord) {
    auto monos = all_monomials_deg4();
    Monomial one(3);
    for (const auto& a : monos) {
        // a well-order has 1 as its least element
        if (!(a == one)) CHECK(ord.greater(a, one));
        for (const auto& b : monos) {
            // totality and antisymmetry
            CHECK(ord.compare(a, b) == -ord.compare(b, a));
            if (a == b) CHECK(ord.compare(a, b) == 0);
            if (ord.compare(a, b) == 0) CHECK(a == b);
        }
    }
    // multiplicativity: a < b implies m*a < m*b
    for (const auto& a : monos)
        for (const auto& b : monos) {
            if (!(ord.compare(a, b) < 0)) continue;
            for (const auto& m : monos)
                CHECK(ord.compare(m.times(a), m.times(b)) < 0);
        }
}

}  // namespace

TEST_CASE("order axioms, exhaustively to degree 4 in 3 variables") {
    check_order_axioms(TermOrder::lex());
    check_order_axioms(TermOrder::degrevlex());
    check_order_axioms(TermOrder::block({TermOrder::Block{{0}, OrderKind::DegRevLex},
                                         TermOrder::Block{{1, 2}, OrderKind::DegRevLex}}));
    check_order_axioms(TermOrder::block({TermOrder::Block{{2, 0}, OrderKind::Lex},
                                         TermOrder::Block{{1}, OrderKind::DegRevLex}}));
}

TEST_CASE("a leading block dominates, as an elimination order must") {
    TermOrder elim = TermOrder::elimination({0}, 3);
    for (const auto& a : all_monomials_deg4()) {
        if (a.exponent(0) == 0) continue;
        for (const auto& b : all_monomials_deg4()) {
            if (b.exponent(0) == 0) CHECK(elim.greater(a, b));
        }
    }
}

TEST_CASE("block orders validate their variable partition") {
    TermOrder bad = TermOrder::block({TermOrder::Block{{0, 1}, OrderKind::Lex}});
    CHECK_THROWS_AS(bad.validate(3), Error);
    TermOrder twice = TermOrder::block({TermOrder::Block{{0, 1}, OrderKind::Lex},
                                        TermOrder::Block{{1, 2}, OrderKind::Lex}});
    CHECK_THROWS_AS(twice.validate(3), Error);
    CHECK_NOTHROW(TermOrder::elimination({1}, 3).validate(3));
}

TEST_CASE("order keys are canonical and distinct") {
    CHECK(TermOrder::lex().key() == "lex");
    CHECK(TermOrder::degrevlex().key() == "degrevlex");
    CHECK(TermOrder::elimination({0}, 3).key() != TermOrder::elimination({1}, 3).key());
    CHECK(TermOrder::elimination({0}, 3).key() == TermOrder::elimination({0}, 3).key());
}
