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

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "centervar/ideal.hpp"
#include "centervar/system_spec.hpp"

namespace centervar {

/// A solution ν ∈ N^{2l} of L(ν) = (k, k).
struct MonoidElement {
    std::vector<std::int32_t> nu;
    std::int64_t level = 0;  // the common value k of the two L components

    std::int64_t degree() const {
        std::int64_t d = 0;
        for (auto x : nu) d += x;
        return d;
    }
    friend bool operator==(const MonoidElement& a, const MonoidElement& b) {
        return a.nu == b.nu;
    }
};

/// L(ν) = Σ_i ν_i (p_i, q_i) + Σ_i ν_{l+i} (q_{l-i+1}, p_{l-i+1}).
std::pair<std::int64_t, std::int64_t> l_operator(const SystemSpec& spec,
                                                 const std::vector<std::int32_t>& nu);

/// ν̄: the reversed vector; reversal swaps a_{pq} with b_{qp}.
std::vector<std::int32_t> involution(const std::vector<std::int32_t>& nu);

/// The coefficient monomial [ν] as a polynomial.
Polynomial monomial_of(const SystemSpec& spec, const std::vector<std::int32_t>& nu);

/// IM[ν] = [ν] - [ν̄] and RE[ν] = [ν] + [ν̄].
std::pair<Polynomial, Polynomial> im_re(const SystemSpec& spec,
                                        const std::vector<std::int32_t>& nu);

/// Every ν with |ν| <= max_total_degree and L¹(ν) = L²(ν), sorted by degree
/// then lexicographically. The membership test is evaluated both through L
/// and through the single balance equation Σ (p_i - q_i) ν_i + ... = 0; the
/// two characterizations are asserted to agree on every candidate.
std::vector<MonoidElement> enumerate_monoid(const SystemSpec& spec,
                                            std::int64_t max_total_degree);

/// The monoid elements of one level k (their degree is at most 2k).
std::vector<MonoidElement> monoid_at_level(const SystemSpec& spec, std::int64_t k);

/// 2 (1 + max_{(p,q) ∈ S} (p + q)): degree bound for the irreducible
/// invariants, hence for every Hilbert-basis element.
std::int64_t degree_bound(const SystemSpec& spec);

/// Generators of the Sibirsky ideal in C[a,b]: the kernel of the monomial
/// map a_{p_i q_i} -> y_i t1^{p_i} t2^{q_i}, b_{q_i p_i} -> y_i t1^{q_i} t2^{p_i}.
/// The map's exponent matrix is dimension_matrix(spec), so the kernel is the
/// lattice ideal of that matrix's integer null space: binomials from a
/// lattice basis, saturated by each variable in turn (reduced basis under
/// degrevlex with the variable last, then dividing off its content). Every
/// returned generator is a monic binomial [ν] - [ν̄]; the generator list is
/// the reduced degrevlex basis.
Ideal symmetry_ideal(const SystemSpec& spec, const Budget& budget = {});

/// The same ideal through the textbook route: adjoin t1, t2, their inverses
/// (s_j with t_j s_j = 1) and y_1..y_l, impose the graph relations of the
/// monomial map, and eliminate everything but the coefficient variables
/// under the block order {t,s} > {y} > {a,b}. Feasible for small systems
/// only; kept as an independent cross-check of symmetry_ideal.
Ideal symmetry_ideal_by_elimination(const SystemSpec& spec, const Budget& budget = {});

/// Basis of the integer null space { u : m u = 0 } of an integer matrix,
/// via unimodular column reduction (the result spans the full lattice).
std::vector<std::vector<std::int64_t>> integer_kernel_basis(
    const std::vector<std::vector<std::int64_t>>& m);

/// The minimal generating set of the monoid: exponents of the reduced-basis
/// binomials of the symmetry ideal together with the symmetric pairs
/// e_i + e_{2l-i+1}, minimized by removing every element that is an
/// N-combination of the others. Sorted by degree then lexicographically.
std::vector<MonoidElement> hilbert_basis(const SystemSpec& spec, const Budget& budget = {});
std::vector<MonoidElement> hilbert_basis(const SystemSpec& spec, const Ideal& sym,
                                         const Budget& budget = {});

/// Whether f maps to zero under the monomial substitution above, evaluated
/// with exact Laurent exponents in t1, t2 (no s variables needed here).
bool kernel_check(const SystemSpec& spec, const Polynomial& f);

/// True when `target` is an N-linear combination of `gens` (all vectors
/// componentwise nonnegative; gens nonzero).
bool in_nspan(const std::vector<std::int32_t>& target,
              const std::vector<std::vector<std::int32_t>>& gens);

/// True when ν = μ + θ for nonzero monoid elements μ, θ (bounded search).
bool is_reducible_in_monoid(const SystemSpec& spec, const std::vector<std::int32_t>& nu);

/// Rank of an integer matrix, exactly (fraction-free elimination).
int generic_rank(std::vector<std::vector<std::int64_t>> m);

/// Rows e_i + e_{2l-i+1} (i = 1..l) stacked on the two rows
/// (p_1 .. p_l q_l .. q_1) and (q_1 .. q_l p_l .. p_1); the dimension of the
/// symmetry component equals this matrix's rank.
std::vector<std::vector<std::int64_t>> dimension_matrix(const SystemSpec& spec);

/// l when every pair is resonant (p_i = q_i), l + 1 otherwise; cross-checked
/// against generic_rank(dimension_matrix(spec)).
int dimension(const SystemSpec& spec);

}  // namespace centervar
