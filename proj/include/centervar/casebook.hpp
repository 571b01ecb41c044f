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
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "centervar/focus.hpp"
#include "centervar/ideal.hpp"
#include "centervar/sibirsky.hpp"
#include "centervar/system_spec.hpp"

namespace centervar {

enum class CheckStatus { Pass, Fail, Info, ExpectedSlow, Skipped };

struct CheckResult {
    std::string id;
    std::string description;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct CaseReport {
    std::string name;
    std::vector<CheckResult> checks;

    /// Green = no failed check (info/skipped/expected-slow do not count).
    bool green() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

const char* to_string(CheckStatus s);

/// One fixture of the casebook, loaded from the manifest.
struct CaseFixture {
    std::string name;
    SystemSpec spec;
    std::vector<Polynomial> sym_generators;  // expected symmetry-ideal generators
    std::vector<std::size_t> annotated;      // 1-based indices of suspected misprints
    std::map<std::size_t, std::string> annotation_notes;
    bool slow = false;

    struct Component {
        std::string name;
        std::vector<Polynomial> gens;
        std::optional<RationalMap> parameterization;
        bool prime_by_construction = false;
    };
    std::vector<Component> components;

    struct FocusFixture {
        std::vector<Polynomial> published;  // published[k-1] is g_kk
        std::vector<int> exact;             // k values matched exactly
        std::vector<int> modulo_scalar;     // matched modulo <g_11..g_{k-1}> and a scalar
        std::vector<int> structure_only;    // matched by structure checks only
    };
    std::optional<FocusFixture> focus;

    struct QuotientCheck {
        std::string component;
        std::vector<Polynomial> h_gens;
    };
    std::optional<QuotientCheck> quotient_check;

    const Component& component(const std::string& cname) const;
    bool is_annotated(std::size_t index_1based) const;
};

/// Loads the fixture manifest and runs the end-to-end case verifications.
/// Computed symmetry ideals are cached and shared between runs.
class Casebook {
public:
    explicit Casebook(std::string data_dir);

    const std::vector<std::string>& case_names() const { return names_; }
    const CaseFixture& fixture(const std::string& name) const;
    const std::vector<std::string>& extra_spec_files() const { return extra_specs_; }
    const std::string& data_dir() const { return dir_; }

    /// The symmetry ideal computed from the case's system spec (cached).
    const Ideal& computed_symmetry(const std::string& name, const Budget& budget = {});
    /// Focus quantities g_11..g_kmax for the case's spec (cached, reused for
    /// smaller kmax).
    FocusQuantityList computed_focus(const std::string& name, int kmax);

    CaseReport verify_quadratic(const Budget& budget = {});
    CaseReport verify_cubic_homogeneous(const Budget& budget = {});
    CaseReport verify_degree45(const Budget& budget = {});
    CaseReport verify_full_cubic(const Budget& budget = {});
    CaseReport verify_zoladek_remark(const Budget& budget = {});

    /// All fast cases (quadratic, cubic, degree45, zoladek), plus full-cubic
    /// when include_slow is set (otherwise it reports as skipped). Reports
    /// come back in a fixed order.
    std::vector<CaseReport> verify_all(bool include_slow, const Budget& budget = {});

    /// Dispatch by name: quadratic, cubic, degree45, full-cubic, zoladek.
    CaseReport verify(const std::string& which, const Budget& budget = {});

private:
    CaseReport verify_membership_case(const std::string& name, const std::string& report_name,
                                      const Budget& budget);

    std::string dir_;
    std::vector<std::string> names_;
    std::vector<std::string> extra_specs_;
    std::map<std::string, CaseFixture> fixtures_;

    std::mutex mu_;
    std::map<std::string, Ideal> sym_cache_;
    std::map<std::string, FocusComputation> focus_cache_;
};

/// Does `computed` equal c * `published` modulo `earlier` for some nonzero
/// rational c? Returns the scalar when it does.
std::optional<Rational> matches_modulo_scalar(const Polynomial& computed,
                                              const Polynomial& published, const Ideal& earlier,
                                              const Budget& budget = {});

}  // namespace centervar
