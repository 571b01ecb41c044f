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

#include "centervar/sibirsky.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "centervar/errors.hpp"

namespace centervar {

namespace {

void check_vector(const SystemSpec& spec, const std::vector<std::int32_t>& nu) {
    if (static_cast<int>(nu.size()) != 2 * spec.l())
        throw Error("exponent vector must have length 2l");
    for (auto x : nu)
        if (x < 0) throw Error("exponent vector entries must be nonnegative");
}

struct VecHash {
    std::size_t operator()(const std::vector<std::int32_t>& v) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

std::pair<std::int64_t, std::int64_t> l_operator(const SystemSpec& spec,
                                                 const std::vector<std::int32_t>& nu) {
    check_vector(spec, nu);
    const int l = spec.l();
    std::int64_t l1 = 0, l2 = 0;
    for (int i = 0; i < l; ++i) {
        l1 += static_cast<std::int64_t>(nu[static_cast<std::size_t>(i)]) * spec.p(i);
        l2 += static_cast<std::int64_t>(nu[static_cast<std::size_t>(i)]) * spec.q(i);
    }
    for (int j = 0; j < l; ++j) {
        // position l+j carries b_{q_i p_i} with i = l-1-j, contributing (q_i, p_i)
        const int i = l - 1 - j;
        l1 += static_cast<std::int64_t>(nu[static_cast<std::size_t>(l + j)]) * spec.q(i);
        l2 += static_cast<std::int64_t>(nu[static_cast<std::size_t>(l + j)]) * spec.p(i);
    }
    return {l1, l2};
}

std::vector<std::int32_t> involution(const std::vector<std::int32_t>& nu) {
    std::vector<std::int32_t> r(nu.rbegin(), nu.rend());
    return r;
}

Polynomial monomial_of(const SystemSpec& spec, const std::vector<std::int32_t>& nu) {
    check_vector(spec, nu);
    return Polynomial::monomial(spec.coefficient_context(), Monomial(nu), Rational(1));
}

std::pair<Polynomial, Polynomial> im_re(const SystemSpec& spec,
                                        const std::vector<std::int32_t>& nu) {
    Polynomial direct = monomial_of(spec, nu);
    Polynomial conj = monomial_of(spec, involution(nu));
    return {direct - conj, direct + conj};
}

namespace {

// Balance form of the membership test: L¹(ν) - L²(ν) written out with
// coefficients (p_i - q_i) and (q_i - p_i) on the mirrored half.
std::int64_t balance_sum(const SystemSpec& spec, const std::vector<std::int32_t>& nu) {
    const int l = spec.l();
    std::int64_t s = 0;
    for (int i = 0; i < l; ++i)
        s += static_cast<std::int64_t>(nu[static_cast<std::size_t>(i)]) * (spec.p(i) - spec.q(i));
    for (int j = 0; j < l; ++j) {
        const int i = l - 1 - j;
        s += static_cast<std::int64_t>(nu[static_cast<std::size_t>(l + j)]) *
             (spec.q(i) - spec.p(i));
    }
    return s;
}

void enumerate_rec(const SystemSpec& spec, std::vector<std::int32_t>& nu, std::size_t pos,
                   std::int64_t remaining, std::vector<MonoidElement>& out) {
    if (pos == nu.size()) {
        auto [l1, l2] = l_operator(spec, nu);
        bool in_monoid = (l1 == l2);
        bool balances = (balance_sum(spec, nu) == 0);
        if (in_monoid != balances)
            throw Error("monoid characterizations disagree (internal invariant)");
        if (in_monoid) out.push_back(MonoidElement{nu, l1});
        return;
    }
    for (std::int32_t v = 0; v <= remaining; ++v) {
        nu[pos] = v;
        enumerate_rec(spec, nu, pos + 1, remaining - v, out);
    }
    nu[pos] = 0;
}

}  // namespace

std::vector<MonoidElement> enumerate_monoid(const SystemSpec& spec,
                                            std::int64_t max_total_degree) {
    if (max_total_degree < 0) throw Error("enumerate_monoid: negative degree bound");
    std::vector<std::int32_t> nu(static_cast<std::size_t>(2 * spec.l()), 0);
    std::vector<MonoidElement> out;
    enumerate_rec(spec, nu, 0, max_total_degree, out);
    std::sort(out.begin(), out.end(), [](const MonoidElement& a, const MonoidElement& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.nu < b.nu;
    });
    return out;
}

std::vector<MonoidElement> monoid_at_level(const SystemSpec& spec, std::int64_t k) {
    // |ν| <= Σ ν_i (p_i + q_i) = 2k, so the search space is finite.
    std::vector<MonoidElement> out;
    for (auto& e : enumerate_monoid(spec, 2 * k))
        if (e.level == k) out.push_back(std::move(e));
    return out;
}

std::int64_t degree_bound(const SystemSpec& spec) {
    int m = 0;
    for (const auto& [p, q] : spec.pairs()) m = std::max(m, p + q);
    return 2 * (1 + static_cast<std::int64_t>(m));
}

std::vector<std::vector<std::int64_t>> integer_kernel_basis(
    const std::vector<std::vector<std::int64_t>>& m) {
    if (m.empty()) return {};
    const std::size_t rows = m.size(), cols = m[0].size();
    // Column-style reduction: unimodular column operations on a working copy
    // of m, mirrored on an identity matrix v. Columns of v over zero columns
    // of the work matrix span the integer kernel lattice exactly.
    std::vector<std::vector<std::int64_t>> w = m;
    std::vector<std::vector<std::int64_t>> v(cols, std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;

    auto col_entry = [&](std::size_t r, std::size_t c) { return w[r][c]; };
    auto add_col = [&](std::size_t dst, std::size_t src, std::int64_t f) {
        for (std::size_t r = 0; r < rows; ++r) w[r][dst] += f * w[r][src];
        for (std::size_t r = 0; r < cols; ++r) v[r][dst] += f * v[r][src];
    };
    auto swap_col = [&](std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(w[r][a], w[r][b]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(v[r][a], v[r][b]);
    };

    std::size_t fixed = 0;
    for (std::size_t r = 0; r < rows && fixed < cols; ++r) {
        // gcd-style elimination across the active columns of row r
        while (true) {
            std::size_t best = cols;
            for (std::size_t c = fixed; c < cols; ++c) {
                if (col_entry(r, c) != 0 &&
                    (best == cols || std::abs(col_entry(r, c)) < std::abs(col_entry(r, best))))
                    best = c;
            }
            if (best == cols) break;  // row r is zero on the active columns
            bool others = false;
            for (std::size_t c = fixed; c < cols; ++c) {
                if (c == best || col_entry(r, c) == 0) continue;
                add_col(c, best, -(col_entry(r, c) / col_entry(r, best)));
                if (col_entry(r, c) != 0) others = true;
            }
            if (!others) {
                swap_col(fixed, best);
                ++fixed;
                break;
            }
        }
    }
    std::vector<std::vector<std::int64_t>> kernel;
    for (std::size_t c = fixed; c < cols; ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < rows; ++r)
            if (w[r][c] != 0) zero = false;
        if (!zero) throw Error("integer kernel reduction failed (internal invariant)");
        std::vector<std::int64_t> u(cols);
        for (std::size_t r = 0; r < cols; ++r) u[r] = v[r][c];
        kernel.push_back(std::move(u));
    }
    return kernel;
}

namespace {

// Split an anti-symmetric lattice vector into the binomial x^{u+} - x^{u-}.
Polynomial lattice_binomial(const ContextPtr& ctx, const std::vector<std::int64_t>& u) {
    std::vector<std::int32_t> plus(u.size(), 0), minus(u.size(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > 0) plus[i] = static_cast<std::int32_t>(u[i]);
        if (u[i] < 0) minus[i] = static_cast<std::int32_t>(-u[i]);
    }
    return Polynomial::monomial(ctx, Monomial(std::move(plus)), Rational(1)) -
           Polynomial::monomial(ctx, Monomial(std::move(minus)), Rational(1));
}

// Divide every generator by the largest power of variable `var` dividing it.
// For a basis computed under degrevlex with `var` last, this rewrites the
// basis into generators of I : var^∞ (the ideal here is homogeneous, since
// every lattice vector sums to zero).
std::vector<Polynomial> strip_variable_content(const std::vector<Polynomial>& gens, int var) {
    std::vector<Polynomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens) {
        std::int32_t content = 0;
        bool first = true;
        for (const auto& t : g.terms()) {
            content = first ? t.mono.exponent(var)
                            : std::min(content, t.mono.exponent(var));
            first = false;
        }
        if (content == 0) {
            out.push_back(g);
            continue;
        }
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            auto e = t.mono.exponents();
            e[static_cast<std::size_t>(var)] -= content;
            terms.push_back({Monomial(std::move(e)), t.coeff});
        }
        out.push_back(Polynomial::from_terms(g.context(), std::move(terms)));
    }
    return out;
}

}  // namespace

Ideal symmetry_ideal(const SystemSpec& spec, const Budget& budget) {
    const int l = spec.l();
    const ContextPtr& coeff = spec.coefficient_context();
    const int n = 2 * l;

    auto kernel = integer_kernel_basis(dimension_matrix(spec));
    if (kernel.empty()) return Ideal(coeff, {});

    std::vector<Polynomial> gens;
    gens.reserve(kernel.size());
    for (const auto& u : kernel) gens.push_back(lattice_binomial(coeff, u));

    for (int var = 0; var < n; ++var) {
        std::vector<int> order_vars;
        for (int i = 0; i < n; ++i)
            if (i != var) order_vars.push_back(i);
        order_vars.push_back(var);
        TermOrder ord = TermOrder::block({TermOrder::Block{order_vars, OrderKind::DegRevLex}});
        GroebnerBasis gb = buchberger(gens, ord, budget);
        gens = strip_variable_content(gb.generators, var);
    }

    GroebnerBasis final_gb = buchberger(gens, TermOrder::degrevlex(), budget);
    return Ideal(coeff, final_gb.generators);
}

Ideal symmetry_ideal_by_elimination(const SystemSpec& spec, const Budget& budget) {
    const int l = spec.l();
    const ContextPtr& coeff = spec.coefficient_context();

    // Extended ring: t1 t2 s1 s2, y_1..y_l, then the coefficient variables.
    std::vector<std::string> names = {"t1", "t2", "s1", "s2"};
    for (int i = 1; i <= l; ++i) names.push_back("y" + std::to_string(i));
    for (const auto& n : coeff->names()) names.push_back(n);
    ContextPtr big = make_context(std::move(names));
    const int nb = big->arity();

    auto power_mono = [&](int e1, int e2) {
        // t1^e1 t2^e2 with a negative exponent moved onto the inverse
        // variable: t_j^c, c < 0, becomes s_j^{-c}.
        std::vector<std::int32_t> e(static_cast<std::size_t>(nb), 0);
        if (e1 >= 0) e[0] = e1; else e[2] = -e1;
        if (e2 >= 0) e[1] = e2; else e[3] = -e2;
        return Monomial(std::move(e));
    };

    std::vector<Polynomial> gens;
    for (int i = 0; i < l; ++i) {
        Polynomial yi = Polynomial::variable(big, 4 + i);
        Polynomial a_var = Polynomial::variable(big, 4 + l + i);
        // b_{q_i p_i} sits at mirrored position 2l-1-i of the coefficient block
        Polynomial b_var = Polynomial::variable(big, 4 + l + (2 * l - 1 - i));
        gens.push_back(a_var - yi.times_term(power_mono(spec.p(i), spec.q(i)), Rational(1)));
        gens.push_back(b_var - yi.times_term(power_mono(spec.q(i), spec.p(i)), Rational(1)));
    }
    Polynomial one = Polynomial::constant(big, Rational(1));
    gens.push_back(Polynomial::variable(big, 0) * Polynomial::variable(big, 2) - one);
    gens.push_back(Polynomial::variable(big, 1) * Polynomial::variable(big, 3) - one);

    std::vector<int> ts = {0, 1, 2, 3};
    std::vector<int> ys, rest;
    for (int i = 0; i < l; ++i) ys.push_back(4 + i);
    for (int i = 0; i < 2 * l; ++i) rest.push_back(4 + l + i);
    TermOrder ord = TermOrder::block({TermOrder::Block{ts, OrderKind::DegRevLex},
                                      TermOrder::Block{ys, OrderKind::DegRevLex},
                                      TermOrder::Block{rest, OrderKind::DegRevLex}});

    GroebnerBasis gb = buchberger(gens, ord, budget);

    std::vector<int> drop;
    for (int i = 0; i < 4 + l; ++i) drop.push_back(i);
    std::vector<int> down(static_cast<std::size_t>(nb), -1);
    for (int i = 0; i < 2 * l; ++i) down[static_cast<std::size_t>(4 + l + i)] = i;

    std::vector<Polynomial> kept;
    for (const auto& g : gb.generators)
        if (free_of_variables(g, drop)) kept.push_back(reindex_polynomial(g, coeff, down));
    return Ideal(coeff, std::move(kept));
}

bool in_nspan(const std::vector<std::int32_t>& target,
              const std::vector<std::vector<std::int32_t>>& gens) {
    std::unordered_map<std::vector<std::int32_t>, bool, VecHash> memo;
    std::vector<std::vector<std::int32_t>> usable;
    for (const auto& g : gens) {
        bool zero = true;
        for (auto x : g)
            if (x != 0) zero = false;
        if (!zero) usable.push_back(g);
    }
    std::function<bool(const std::vector<std::int32_t>&)> rec =
        [&](const std::vector<std::int32_t>& v) -> bool {
        bool zero = true;
        for (auto x : v)
            if (x != 0) zero = false;
        if (zero) return true;
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (const auto& g : usable) {
            bool fits = true;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (g[i] > v[i]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            std::vector<std::int32_t> rest(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) rest[i] = v[i] - g[i];
            if (rec(rest)) {
                ok = true;
                break;
            }
        }
        memo.emplace(v, ok);
        return ok;
    };
    return rec(target);
}

std::vector<MonoidElement> hilbert_basis(const SystemSpec& spec, const Budget& budget) {
    return hilbert_basis(spec, symmetry_ideal(spec, budget), budget);
}

std::vector<MonoidElement> hilbert_basis(const SystemSpec& spec, const Ideal& sym,
                                         const Budget& budget) {
    const int l = spec.l();
    const auto& gb = sym.groebner(TermOrder::degrevlex(), budget);

    std::vector<std::vector<std::int32_t>> raw;
    auto push_unique = [&](std::vector<std::int32_t> v) {
        if (std::find(raw.begin(), raw.end(), v) == raw.end()) raw.push_back(std::move(v));
    };
    for (const auto& g : gb.generators) {
        if (g.size() != 2)
            throw Error("symmetry ideal basis element is not a binomial");
        const auto& ts = g.terms();
        std::vector<std::int32_t> mu = ts[0].mono.exponents();
        std::vector<std::int32_t> mu_bar = ts[1].mono.exponents();
        if (!((ts[0].coeff == 1 && ts[1].coeff == -1) ||
              (ts[0].coeff == -1 && ts[1].coeff == 1)))
            throw Error("symmetry ideal binomial does not have coefficients 1, -1");
        if (!(involution(mu) == mu_bar))
            throw Error("symmetry ideal binomial is not conjugate-paired");
        push_unique(mu);
        push_unique(mu_bar);
    }
    for (int i = 0; i < l; ++i) {
        std::vector<std::int32_t> e(static_cast<std::size_t>(2 * l), 0);
        e[static_cast<std::size_t>(i)] += 1;
        e[static_cast<std::size_t>(2 * l - 1 - i)] += 1;
        push_unique(std::move(e));
    }

    // Minimization: drop any element that the others already generate.
    bool changed = true;
    while (changed) {
        changed = false;
        // prefer removing high-degree elements first, deterministically
        std::vector<std::size_t> order(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            std::int64_t da = 0, db = 0;
            for (auto x : raw[a]) da += x;
            for (auto x : raw[b]) db += x;
            if (da != db) return da > db;
            return raw[a] > raw[b];
        });
        for (std::size_t idx : order) {
            std::vector<std::vector<std::int32_t>> others;
            for (std::size_t i = 0; i < raw.size(); ++i)
                if (i != idx) others.push_back(raw[i]);
            if (in_nspan(raw[idx], others)) {
                raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(idx));
                changed = true;
                break;
            }
        }
    }

    std::vector<MonoidElement> out;
    for (auto& v : raw) {
        auto [l1, l2] = l_operator(spec, v);
        if (l1 != l2) throw Error("hilbert basis candidate is not a monoid element");
        out.push_back(MonoidElement{std::move(v), l1});
    }
    std::sort(out.begin(), out.end(), [](const MonoidElement& a, const MonoidElement& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.nu < b.nu;
    });
    return out;
}

bool kernel_check(const SystemSpec& spec, const Polynomial& f) {
    require_same_context(spec.coefficient_context(), f.context());
    const int l = spec.l();
    // image exponent layout: y_1..y_l, then Laurent exponents of t1, t2
    std::unordered_map<std::vector<std::int32_t>, Rational, VecHash> acc;
    for (const auto& t : f.terms()) {
        std::vector<std::int32_t> img(static_cast<std::size_t>(l + 2), 0);
        for (int i = 0; i < l; ++i) {
            auto e = t.mono.exponent(i);
            img[static_cast<std::size_t>(i)] += e;
            img[static_cast<std::size_t>(l)] += e * spec.p(i);
            img[static_cast<std::size_t>(l + 1)] += e * spec.q(i);
        }
        for (int j = 0; j < l; ++j) {
            const int i = l - 1 - j;
            auto e = t.mono.exponent(l + j);
            img[static_cast<std::size_t>(i)] += e;
            img[static_cast<std::size_t>(l)] += e * spec.q(i);
            img[static_cast<std::size_t>(l + 1)] += e * spec.p(i);
        }
        auto [it, inserted] = acc.emplace(std::move(img), t.coeff);
        if (!inserted) it->second += t.coeff;
    }
    for (const auto& [img, c] : acc)
        if (!is_zero(c)) return false;
    return true;
}

bool is_reducible_in_monoid(const SystemSpec& spec, const std::vector<std::int32_t>& nu) {
    check_vector(spec, nu);
    const std::size_t n = nu.size();
    std::vector<std::int32_t> mu(n, 0);
    // enumerate 0 <= mu <= nu componentwise, skipping mu = 0 and mu = nu
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
        if (pos == n) {
            bool zero = true, full = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (mu[i] != 0) zero = false;
                if (mu[i] != nu[i]) full = false;
            }
            if (zero || full) return false;
            auto [a1, a2] = l_operator(spec, mu);
            if (a1 != a2) return false;
            std::vector<std::int32_t> theta(n);
            for (std::size_t i = 0; i < n; ++i) theta[i] = nu[i] - mu[i];
            auto [b1, b2] = l_operator(spec, theta);
            return b1 == b2;
        }
        for (std::int32_t v = 0; v <= nu[pos]; ++v) {
            mu[pos] = v;
            if (rec(pos + 1)) return true;
        }
        mu[pos] = 0;
        return false;
    };
    return rec(0);
}

int generic_rank(std::vector<std::vector<std::int64_t>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            // exact row elimination over the integers via cross-multiplication
            std::int64_t a = m[rank][c], b = m[r][c];
            std::int64_t g = std::gcd(std::abs(a), std::abs(b));
            std::int64_t fa = b / g, fb = a / g;
            for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] * fb - m[rank][k] * fa;
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

std::vector<std::vector<std::int64_t>> dimension_matrix(const SystemSpec& spec) {
    const int l = spec.l();
    std::vector<std::vector<std::int64_t>> m;
    for (int i = 0; i < l; ++i) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(2 * l), 0);
        row[static_cast<std::size_t>(i)] = 1;
        row[static_cast<std::size_t>(2 * l - 1 - i)] = 1;
        m.push_back(std::move(row));
    }
    std::vector<std::int64_t> r1, r2;
    for (int i = 0; i < l; ++i) r1.push_back(spec.p(i));
    for (int i = l - 1; i >= 0; --i) r1.push_back(spec.q(i));
    for (int i = 0; i < l; ++i) r2.push_back(spec.q(i));
    for (int i = l - 1; i >= 0; --i) r2.push_back(spec.p(i));
    m.push_back(std::move(r1));
    m.push_back(std::move(r2));
    return m;
}

int dimension(const SystemSpec& spec) {
    int dim = spec.all_resonant() ? spec.l() : spec.l() + 1;
    int rank = generic_rank(dimension_matrix(spec));
    if (dim != rank)
        throw Error("dimension formula and matrix rank disagree (internal invariant)");
    return dim;
}

}  // namespace centervar
