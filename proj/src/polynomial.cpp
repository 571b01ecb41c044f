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

#include "centervar/polynomial.hpp"

#include <algorithm>
#include <map>

namespace centervar {

namespace {

// Internal storage comparator: plain lex, descending.
bool storage_before(const Monomial& a, const Monomial& b) {
    return Monomial::lex_compare(a, b) > 0;
}

void check_mono(const ContextPtr& ctx, const Monomial& m) {
    if (m.arity() != ctx->arity())
        throw ContextMismatchError("monomial arity does not match context");
}

}  // namespace

Polynomial Polynomial::zero(ContextPtr ctx) { return Polynomial(std::move(ctx), {}); }

Polynomial Polynomial::constant(ContextPtr ctx, Rational value) {
    if (centervar::is_zero(value)) return zero(std::move(ctx));
    std::vector<Term> t;
    t.push_back({Monomial(ctx->arity()), std::move(value)});
    return Polynomial(std::move(ctx), std::move(t));
}

Polynomial Polynomial::variable(ContextPtr ctx, int index) {
    if (index < 0 || index >= ctx->arity()) throw Error("variable index out of range");
    std::vector<std::int32_t> e(static_cast<std::size_t>(ctx->arity()), 0);
    e[static_cast<std::size_t>(index)] = 1;
    std::vector<Term> t;
    t.push_back({Monomial(std::move(e)), Rational(1)});
    return Polynomial(std::move(ctx), std::move(t));
}

Polynomial Polynomial::monomial(ContextPtr ctx, Monomial m, Rational coeff) {
    check_mono(ctx, m);
    if (centervar::is_zero(coeff)) return zero(std::move(ctx));
    std::vector<Term> t;
    t.push_back({std::move(m), std::move(coeff)});
    return Polynomial(std::move(ctx), std::move(t));
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
    for (const auto& t : terms) check_mono(ctx, t.mono);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return storage_before(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (centervar::is_zero(out.back().coeff)) out.pop_back();
        } else if (!centervar::is_zero(t.coeff)) {
            out.push_back(std::move(t));
        }
    }
    return Polynomial(std::move(ctx), std::move(out));
}

std::int64_t Polynomial::total_degree() const noexcept {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

Rational Polynomial::coeff_of(const Monomial& m) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const Term& t, const Monomial& key) { return storage_before(t.mono, key); });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Rational(0);
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coeff = -x.coeff;
    return Polynomial(ctx_, std::move(t));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_context(ctx_, o.ctx_);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = Monomial::lex_compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (!centervar::is_zero(s)) out.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_context(ctx_, o.ctx_);
    if (is_zero() || o.is_zero()) return zero(ctx_);
    if (o.terms_.size() == 1) return times_term(o.terms_[0].mono, o.terms_[0].coeff);
    if (terms_.size() == 1) return o.times_term(terms_[0].mono, terms_[0].coeff);
    std::map<Monomial, Rational, bool (*)(const Monomial&, const Monomial&)> acc(storage_before);
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.mono.times(b.mono);
            auto [it, inserted] = acc.emplace(std::move(m), a.coeff * b.coeff);
            if (!inserted) it->second += a.coeff * b.coeff;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!centervar::is_zero(c)) out.push_back({m, std::move(c)});
    return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (centervar::is_zero(c)) return zero(ctx_);
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coeff *= c;
    return Polynomial(ctx_, std::move(t));
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    check_mono(ctx_, m);
    if (centervar::is_zero(c)) return zero(ctx_);
    // Multiplying every monomial by a fixed monomial preserves the order.
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& x : terms_) t.push_back({x.mono.times(m), x.coeff * c});
    return Polynomial(ctx_, std::move(t));
}

Polynomial Polynomial::pow(int n) const {
    if (n < 0) throw Error("negative polynomial power");
    Polynomial r = constant(ctx_, Rational(1));
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= ctx_->arity()) throw Error("variable index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        auto e = t.mono.exponents();
        auto k = e[static_cast<std::size_t>(var)];
        if (k == 0) continue;
        e[static_cast<std::size_t>(var)] = k - 1;
        out.push_back({Monomial(std::move(e)), t.coeff * k});
    }
    return from_terms(ctx_, std::move(out));
}

const Term& Polynomial::leading_term(const TermOrder& ord) const {
    if (terms_.empty()) throw Error("the zero polynomial has no leading term");
    const Term* best = &terms_[0];
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (ord.greater(terms_[i].mono, best->mono)) best = &terms_[i];
    return *best;
}

std::pair<Rational, Monomial> Polynomial::leading_pair(const TermOrder& ord) const {
    const Term& t = leading_term(ord);
    return {t.coeff, t.mono};
}

std::vector<Term> Polynomial::sorted_terms(const TermOrder& ord) const {
    std::vector<Term> t = terms_;
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    return t;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_context(a.ctx_, b.ctx_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].mono == b.terms_[i].mono)) return false;
        if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

Polynomial poly_sum(const ContextPtr& ctx, const std::vector<Polynomial>& ps) {
    Polynomial acc = Polynomial::zero(ctx);
    for (const auto& p : ps) acc = acc + p;
    return acc;
}

}  // namespace centervar
