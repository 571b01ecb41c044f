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

#include <string>
#include <utility>
#include <vector>

#include "centervar/context.hpp"

namespace centervar {

/// The index set S = {(p_i, q_i)} of a polynomial system
///
///    dx/dτ = x - Σ_{(p,q) ∈ S} a_{pq} x^{p+1} y^q
///   -dy/dτ = y - Σ_{(p,q) ∈ S} b_{qp} x^q  y^{p+1}
///
/// with p_i ≥ -1, q_i ≥ 0, p_i + q_i ≥ 1, the pairs distinct and l ≥ 1.
/// The spec induces the 2l coefficient variables, ordered
/// a_{p_1 q_1}, ..., a_{p_l q_l}, b_{q_l p_l}, ..., b_{q_1 p_1},
/// so that reversing an exponent vector swaps a_{pq} with b_{qp}.
class SystemSpec {
public:
    explicit SystemSpec(std::vector<std::pair<int, int>> pairs);

    int l() const noexcept { return static_cast<int>(pairs_.size()); }
    const std::vector<std::pair<int, int>>& pairs() const noexcept { return pairs_; }
    int p(int i) const { return pairs_.at(static_cast<std::size_t>(i)).first; }
    int q(int i) const { return pairs_.at(static_cast<std::size_t>(i)).second; }

    /// All coefficients resonant, i.e. p_i = q_i for every pair.
    bool all_resonant() const noexcept;

    /// The ring C[a,b] in the variable order described above. Index i < l is
    /// a_{p_i q_i}; index l+j is b_{q_i p_i} for i = l-1-j (0-based).
    const ContextPtr& coefficient_context() const noexcept { return coeff_ctx_; }

    /// a_{p,q} prints as "a_P_Q" with a negative index rendered m<abs>,
    /// e.g. a_{-1,2} -> "a_m1_2".
    static std::string coefficient_name(char letter, int first, int second);

private:
    std::vector<std::pair<int, int>> pairs_;
    ContextPtr coeff_ctx_;
};

/// Spec file format: comments start with '#'; the first data line holds l;
/// the next l lines hold "p q" integer pairs.
SystemSpec parse_system_spec(std::istream& in);
SystemSpec parse_system_spec_file(const std::string& path);

}  // namespace centervar
