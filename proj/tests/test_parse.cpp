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

#include <filesystem>

#include "centervar/parse.hpp"
#include "centervar/system_spec.hpp"
#include "helpers.hpp"

using namespace centervar;
using namespace centervar::testing;

#ifndef CENTERVAR_DATA_DIR
#define CENTERVAR_DATA_DIR "data/casebook"
#endif

TEST_CASE("parsing the coefficient grammar") {
    auto ab = make_context({"a_1_1", "b_1_1"});
    Polynomial g11 = parse_polynomial("a_1_1 - b_1_1", ab);
    CHECK(g11 == Polynomial::variable(ab, 0) - Polynomial::variable(ab, 1));

    auto ctx = xy();
    CHECK(parse_polynomial("0", ctx).is_zero());
    CHECK(format_polynomial(parse_polynomial("2/4*x", ctx), TermOrder::lex()) == "1/2*x");
    CHECK(parse_polynomial("3*x", ctx) == P(ctx, "x").scaled(Rational(3)));
    CHECK(parse_polynomial("x^2*y", ctx) == P(ctx, "x*x*y"));
    CHECK(parse_polynomial("-x + y", ctx) == P(ctx, "y - x"));
    CHECK(parse_polynomial(" x \t+  y ", ctx) == P(ctx, "x+y"));
    CHECK(parse_polynomial("x - x", ctx).is_zero());
    CHECK(parse_polynomial("123456789012345678901234567890*x", ctx).leading_pair(TermOrder::lex()).first ==
          Rational("123456789012345678901234567890"));
}

TEST_CASE("parse errors carry positions and names") {
    auto ctx = xy();
    CHECK_THROWS_AS(parse_polynomial("x + ", ctx), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x ^", ctx), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0", ctx), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x * * y", ctx), ParseError);
    CHECK_THROWS_AS(parse_polynomial("", ctx), ParseError);
    try {
        parse_polynomial("x + qq*y", ctx);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("qq") != std::string::npos);
        CHECK(e.position() == 4);
    }
}

TEST_CASE("formatting is canonical and round-trips") {
    auto ctx = xyz();
    // two routes to the same polynomial print identically
    Polynomial p1 = P(ctx, "x*y - z^2 + 1/3");
    Polynomial p2 = P(ctx, "1/3 - z^2 + y*x");
    for (const auto& ord : {TermOrder::lex(), TermOrder::degrevlex()}) {
        CHECK(format_polynomial(p1, ord) == format_polynomial(p2, ord));
        CHECK(parse_polynomial(format_polynomial(p1, ord), ctx) == p1);
    }
    CHECK(format_polynomial(Polynomial::zero(ctx), TermOrder::lex()) == "0");
    CHECK(format_polynomial(P(ctx, "0 - x"), TermOrder::lex()) == "-x");

    RandomPolys gen(424242, ctx);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = gen.next(8);
        for (const auto& ord : {TermOrder::lex(), TermOrder::degrevlex()}) {
            CHECK(parse_polynomial(format_polynomial(p, ord), ctx) == p);
        }
    }
}

TEST_CASE("every bundled fixture polynomial round-trips through the grammar") {
    namespace fs = std::filesystem;
    fs::path dir(CENTERVAR_DATA_DIR);
    REQUIRE(fs::exists(dir / "manifest.json"));
    int total = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".gens") continue;
        // ring = identifiers of the matching system; infer from the paired
        // spec where obvious, otherwise take the union of names used
        std::string stem = entry.path().stem().string();
        std::string spec_name = stem.substr(0, stem.find('_'));
        if (stem.rfind("full_cubic", 0) == 0) spec_name = "full_cubic";
        fs::path spec_path = dir / (spec_name + ".spec");
        if (!fs::exists(spec_path)) continue;
        SystemSpec spec = parse_system_spec_file(spec_path.string());
        auto polys = parse_polynomial_list_file(entry.path().string(),
                                                spec.coefficient_context());
        for (const auto& p : polys) {
            ++total;
            for (const auto& ord : {TermOrder::lex(), TermOrder::degrevlex()}) {
                CHECK(parse_polynomial(format_polynomial(p, ord), spec.coefficient_context()) == p);
            }
        }
    }
    CHECK(total > 150);
}

TEST_CASE("system spec files") {
    auto spec = quadratic_spec();
    CHECK(spec.l() == 3);
    CHECK(spec.coefficient_context()->names() ==
          std::vector<std::string>{"a_1_0", "a_0_1", "a_m1_2", "b_2_m1", "b_1_0", "b_0_1"});
    CHECK(SystemSpec::coefficient_name('a', -1, 2) == "a_m1_2");
    CHECK_THROWS_AS(SystemSpec({{0, 0}}), Error);   // p + q < 1
    CHECK_THROWS_AS(SystemSpec({{-2, 3}}), Error);  // p < -1
    CHECK_THROWS_AS(SystemSpec({{1, -1}}), Error);  // q < 0
    CHECK_THROWS_AS(SystemSpec({{1, 1}, {1, 1}}), Error);
    CHECK_THROWS_AS(SystemSpec({}), Error);
}
