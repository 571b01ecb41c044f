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

#include <map>
#include <string>
#include <vector>

#include "centervar/ideal.hpp"
#include "centervar/system_spec.hpp"

namespace centervar {

/// Coefficients v_{j,k} of the Lyapunov function Ψ = xy + Σ v_{j,k} x^j y^k,
/// as polynomials in the system coefficients. Normalization: v_{1,1} = 1,
/// v_{j,k} = 0 for j+k < 3 otherwise, and v_{k,k} = 0 for k >= 2.
struct PhaseSeries {
    ContextPtr ctx;
    std::map<std::pair<int, int>, Polynomial> coefficients;
    int truncation_degree = 0;

    /// v_{j,k} under the conventions above (zero when outside the table).
    Polynomial coefficient(int j, int k) const;
};

/// g_11 .. g_{kmax,kmax}; quantities[k-1] is g_kk.
struct FocusQuantityList {
    std::vector<Polynomial> quantities;

    const Polynomial& g(int k) const { return quantities.at(static_cast<std::size_t>(k - 1)); }
    int kmax() const { return static_cast<int>(quantities.size()); }
};

struct FocusComputation {
    FocusQuantityList list;
    PhaseSeries series;
};

/// Expands dΨ/dτ = Ψ_x P + Ψ_y Q degree by degree. Off-diagonal coefficients
/// determine v_{j,k} by division by the integer j - k; the diagonal residues
/// are the focus quantities. The orientation is fixed once so that the
/// homogeneous-cubic system yields g_11 = a_11 - b_11 (and the quadratic one
/// then yields g_11 = a_10 a_01 - b_10 b_01 with no further adjustment).
FocusComputation compute_focus(const SystemSpec& spec, int kmax);
FocusQuantityList focus_quantities(const SystemSpec& spec, int kmax);

struct StructureIssue {
    int k = 0;
    std::string check;   // "level", "antisymmetry", or "membership"
    std::string detail;  // offending monomial or reduction remainder
};

struct StructureReport {
    std::vector<StructureIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// For each g_kk: (i) every monomial's exponent vector sits at level (k,k);
/// (ii) the coefficient of [ν̄] is the negative of that of [ν]; (iii) g_kk
/// reduces to zero against the symmetry ideal of the spec. Pass `sym` to
/// reuse an already computed symmetry ideal.
StructureReport verify_structure(const SystemSpec& spec, const FocusQuantityList& fq,
                                 const Ideal* sym = nullptr, const Budget& budget = {});

}  // namespace centervar
