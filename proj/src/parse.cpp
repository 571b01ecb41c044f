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

#include "centervar/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "centervar/errors.hpp"

namespace centervar {

namespace {

constexpr long kMaxExponent = 1000000;

class Parser {
public:
    Parser(std::string_view text, const ContextPtr& ctx) : text_(text), ctx_(ctx) {}

    Polynomial run() {
        std::vector<Term> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        parse_term(terms, negative);
        skip_ws();
        while (!eof()) {
            char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            parse_term(terms, c == '-');
            skip_ws();
        }
        return Polynomial::from_terms(ctx_, std::move(terms));
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void parse_term(std::vector<Term>& out, bool negative) {
        skip_ws();
        Rational coeff(1);
        std::vector<std::int32_t> exps(static_cast<std::size_t>(ctx_->arity()), 0);
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coeff();
            have_factor = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                parse_powprod(exps);
            }
        } else {
            parse_powprod(exps);
            have_factor = true;
        }
        if (!have_factor) fail("expected a term");
        if (negative) coeff = -coeff;
        out.push_back({Monomial(std::move(exps)), std::move(coeff)});
    }

    void parse_powprod(std::vector<std::int32_t>& exps) {
        parse_varpow(exps);
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            parse_varpow(exps);
            skip_ws();
        }
    }

    void parse_varpow(std::vector<std::int32_t>& exps) {
        skip_ws();
        std::size_t start = pos_;
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable name");
        ++pos_;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                ++pos_;
            else
                break;
        }
        std::string name(text_.substr(start, pos_ - start));
        int idx = ctx_->index_of(name);
        if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
        long e = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            e = parse_nat();
            if (e > kMaxExponent) fail("exponent too large");
        }
        exps[static_cast<std::size_t>(idx)] += static_cast<std::int32_t>(e);
    }

    Rational parse_coeff() {
        Int num = parse_natural();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t den_pos = pos_;
            Int den = parse_natural();
            if (sgn(den) == 0) throw ParseError("zero denominator", den_pos);
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    long parse_nat() {
        Int n = parse_natural();
        if (!n.fits_slong_p()) fail("number too large");
        return n.get_si();
    }

    Int parse_natural() {
        skip_ws();
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected a number");
        return Int(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string_view text_;
    const ContextPtr& ctx_;
    std::size_t pos_ = 0;
};

void format_power_product(std::ostringstream& os, const Monomial& m, const VarContext& ctx) {
    bool first = true;
    for (int i = 0; i < ctx.arity(); ++i) {
        auto e = m.exponent(i);
        if (e == 0) continue;
        if (!first) os << "*";
        first = false;
        os << ctx.name(i);
        if (e > 1) os << "^" << e;
    }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx) {
    return Parser(text, ctx).run();
}

std::string format_polynomial(const Polynomial& p, const TermOrder& ord) {
    if (p.is_zero()) return "0";
    const VarContext& ctx = *p.context();
    auto terms = p.sorted_terms(ord);
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        Rational mag = abs(t.coeff);
        if (first) {
            if (sgn(t.coeff) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(t.coeff) < 0 ? " - " : " + ");
        }
        bool coeff_printed = false;
        if (!is_one(mag) || t.mono.is_one()) {
            os << to_string(mag);
            coeff_printed = true;
        }
        if (!t.mono.is_one()) {
            if (coeff_printed) os << "*";
            format_power_product(os, t.mono, ctx);
        }
    }
    return os.str();
}

std::vector<Polynomial> parse_polynomial_list(std::istream& in, const ContextPtr& ctx) {
    std::vector<Polynomial> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        if (blank) continue;
        out.push_back(parse_polynomial(line, ctx));
    }
    return out;
}

std::vector<Polynomial> parse_polynomial_list_file(const std::string& path, const ContextPtr& ctx) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open polynomial list file: " + path);
    return parse_polynomial_list(in, ctx);
}

}  // namespace centervar
