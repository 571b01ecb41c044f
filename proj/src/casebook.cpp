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

#include "centervar/casebook.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "centervar/errors.hpp"
#include "centervar/parse.hpp"

namespace centervar {

namespace {

std::string join(const std::string& dir, const std::string& rel) { return dir + "/" + rel; }

CheckResult check(std::string id, std::string desc, bool ok, std::string detail = "") {
    return CheckResult{std::move(id), std::move(desc),
                       ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

CheckResult info(std::string id, std::string desc, std::string detail = "") {
    return CheckResult{std::move(id), std::move(desc), CheckStatus::Info, std::move(detail)};
}

std::string poly_str(const Polynomial& p) {
    return format_polynomial(p, TermOrder::degrevlex());
}

}  // namespace

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Info: return "info";
        case CheckStatus::ExpectedSlow: return "expected-slow";
        case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

bool CaseReport::green() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) return false;
    return true;
}

nlohmann::json CaseReport::to_json() const {
    nlohmann::json j;
    j["case"] = name;
    j["green"] = green();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["description"] = c.description;
        jc["status"] = to_string(c.status);
        if (!c.detail.empty()) jc["detail"] = c.detail;
        j["checks"].push_back(std::move(jc));
    }
    return j;
}

std::string CaseReport::to_text() const {
    std::ostringstream os;
    os << "case " << name << ": " << (green() ? "green" : "RED") << "\n";
    for (const auto& c : checks) {
        os << "  [" << to_string(c.status) << "] " << c.id << ": " << c.description;
        if (!c.detail.empty()) os << " -- " << c.detail;
        os << "\n";
    }
    return os.str();
}

const CaseFixture::Component& CaseFixture::component(const std::string& cname) const {
    for (const auto& c : components)
        if (c.name == cname) return c;
    throw Error("case " + name + " has no component " + cname);
}

bool CaseFixture::is_annotated(std::size_t index_1based) const {
    return std::find(annotated.begin(), annotated.end(), index_1based) != annotated.end();
}

Casebook::Casebook(std::string data_dir) : dir_(std::move(data_dir)) {
    std::ifstream in(join(dir_, "manifest.json"));
    if (!in) throw Error("cannot open casebook manifest in " + dir_);
    nlohmann::json manifest = nlohmann::json::parse(in);

    for (const auto& jc : manifest.at("cases")) {
        std::string name = jc.at("name").get<std::string>();
        SystemSpec spec = parse_system_spec_file(join(dir_, jc.at("spec").get<std::string>()));
        const ContextPtr& ctx = spec.coefficient_context();

        CaseFixture fx{.name = name,
                       .spec = spec,
                       .sym_generators = parse_polynomial_list_file(
                           join(dir_, jc.at("symmetry_generators").get<std::string>()), ctx),
                       .annotated = {},
                       .annotation_notes = {},
                       .slow = jc.value("slow", false),
                       .components = {},
                       .focus = std::nullopt,
                       .quotient_check = std::nullopt};

        for (const auto& ja : jc.value("annotations", nlohmann::json::array())) {
            auto idx = ja.at("index").get<std::size_t>();
            fx.annotated.push_back(idx);
            fx.annotation_notes[idx] =
                ja.value("printed", std::string()) + " -- " + ja.value("note", std::string());
        }

        for (const auto& jcomp : jc.value("components", nlohmann::json::array())) {
            CaseFixture::Component comp;
            comp.name = jcomp.at("name").get<std::string>();
            comp.gens =
                parse_polynomial_list_file(join(dir_, jcomp.at("gens").get<std::string>()), ctx);
            comp.prime_by_construction = jcomp.value("prime_by_construction", false);
            if (jcomp.contains("parameterization")) {
                const auto& jp = jcomp.at("parameterization");
                std::vector<std::string> params;
                for (const auto& s : jp.at("params")) params.push_back(s.get<std::string>());
                ContextPtr pctx = make_context(params);
                RationalMap map;
                map.target_ctx = ctx;
                map.param_ctx = pctx;
                const auto& images = jp.at("images");
                for (const auto& var : ctx->names()) {
                    if (!images.contains(var))
                        throw Error("parameterization of " + comp.name + " misses " + var);
                    map.numerators.push_back(
                        parse_polynomial(images.at(var).at("num").get<std::string>(), pctx));
                    map.denominators.push_back(
                        parse_polynomial(images.at(var).at("den").get<std::string>(), pctx));
                }
                map.validate();
                comp.parameterization = std::move(map);
            }
            fx.components.push_back(std::move(comp));
        }

        if (jc.contains("focus")) {
            const auto& jf = jc.at("focus");
            CaseFixture::FocusFixture ff;
            ff.published =
                parse_polynomial_list_file(join(dir_, jf.at("file").get<std::string>()), ctx);
            for (const auto& k : jf.value("exact", nlohmann::json::array()))
                ff.exact.push_back(k.get<int>());
            for (const auto& k : jf.value("modulo_scalar", nlohmann::json::array()))
                ff.modulo_scalar.push_back(k.get<int>());
            for (const auto& k : jf.value("structure_only", nlohmann::json::array()))
                ff.structure_only.push_back(k.get<int>());
            fx.focus = std::move(ff);
        }

        if (jc.contains("quotient_check")) {
            const auto& jq = jc.at("quotient_check");
            CaseFixture::QuotientCheck qc;
            qc.component = jq.at("component").get<std::string>();
            qc.h_gens =
                parse_polynomial_list_file(join(dir_, jq.at("h").get<std::string>()), ctx);
            fx.quotient_check = std::move(qc);
        }

        names_.push_back(name);
        fixtures_.emplace(name, std::move(fx));
    }
    for (const auto& js : manifest.value("extra_specs", nlohmann::json::array()))
        extra_specs_.push_back(js.get<std::string>());
}

const CaseFixture& Casebook::fixture(const std::string& name) const {
    auto it = fixtures_.find(name);
    if (it == fixtures_.end()) throw Error("unknown case: " + name);
    return it->second;
}

const Ideal& Casebook::computed_symmetry(const std::string& name, const Budget& budget) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = sym_cache_.find(name);
        if (it != sym_cache_.end()) return it->second;
    }
    Ideal sym = symmetry_ideal(fixture(name).spec, budget);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = sym_cache_.emplace(name, std::move(sym));
    (void)inserted;
    return it->second;
}

FocusQuantityList Casebook::computed_focus(const std::string& name, int kmax) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = focus_cache_.find(name);
    if (it == focus_cache_.end() || it->second.list.kmax() < kmax) {
        FocusComputation fc = compute_focus(fixture(name).spec, kmax);
        it = focus_cache_.insert_or_assign(name, std::move(fc)).first;
    }
    FocusQuantityList out;
    out.quantities.assign(it->second.list.quantities.begin(),
                          it->second.list.quantities.begin() + kmax);
    return out;
}

std::optional<Rational> matches_modulo_scalar(const Polynomial& computed,
                                              const Polynomial& published, const Ideal& earlier,
                                              const Budget& budget) {
    const auto& gb = earlier.groebner(TermOrder::degrevlex(), budget);
    Polynomial r1 = normal_form(computed, gb.generators, gb.order, budget);
    Polynomial r2 = normal_form(published, gb.generators, gb.order, budget);
    if (r2.is_zero()) {
        if (r1.is_zero()) return Rational(1);
        return std::nullopt;
    }
    if (r1.is_zero()) return std::nullopt;
    Rational c = r1.leading_term(gb.order).coeff / r2.leading_term(gb.order).coeff;
    if (r1 == r2.scaled(c)) return c;
    return std::nullopt;
}

namespace {

void run_focus_checks(CaseReport& report, Casebook& book, const CaseFixture& fx,
                      const Ideal& sym, const Budget& budget) {
    if (!fx.focus) return;
    const auto& ff = *fx.focus;
    const int published_k = static_cast<int>(ff.published.size());
    FocusQuantityList computed = book.computed_focus(fx.name, published_k);

    for (int k : ff.exact) {
        bool ok = computed.g(k) == ff.published[static_cast<std::size_t>(k - 1)];
        report.checks.push_back(check("focus-g" + std::to_string(k),
                                      "g_" + std::to_string(k) + std::to_string(k) +
                                          " matches the published quantity exactly",
                                      ok, ok ? "" : "computed " + poly_str(computed.g(k))));
    }
    for (int k : ff.modulo_scalar) {
        std::vector<Polynomial> earlier(computed.quantities.begin(),
                                        computed.quantities.begin() + (k - 1));
        Ideal earlier_ideal(fx.spec.coefficient_context(), std::move(earlier));
        auto scalar = matches_modulo_scalar(computed.g(k),
                                            ff.published[static_cast<std::size_t>(k - 1)],
                                            earlier_ideal, budget);
        report.checks.push_back(
            check("focus-g" + std::to_string(k),
                  "g_" + std::to_string(k) + std::to_string(k) +
                      " matches the published quantity modulo the earlier quantities and a scalar",
                  scalar.has_value(),
                  scalar ? "scalar " + to_string(*scalar) : "no scalar match"));
    }
    for (int k : ff.structure_only) {
        report.checks.push_back(info("focus-g" + std::to_string(k),
                                     "g_" + std::to_string(k) + std::to_string(k) +
                                         " compared by structure checks only",
                                     "published text is typographically ambiguous"));
    }

    StructureReport sr = verify_structure(fx.spec, computed, &sym, budget);
    std::string detail;
    for (const auto& issue : sr.issues)
        detail += "g_" + std::to_string(issue.k) + std::to_string(issue.k) + " " + issue.check +
                  ": " + issue.detail + "; ";
    report.checks.push_back(check(
        "focus-structure",
        "every computed quantity sits at level (k,k), is conjugation-antisymmetric, and reduces "
        "to zero against the symmetry ideal",
        sr.ok(), detail));
}

}  // namespace

CaseReport Casebook::verify_quadratic(const Budget& budget) {
    const CaseFixture& fx = fixture("quadratic");
    const ContextPtr& ctx = fx.spec.coefficient_context();
    CaseReport report{.name = "quadratic", .checks = {}};

    const Ideal& computed = computed_symmetry("quadratic", budget);
    Ideal fixture_sym(ctx, fx.sym_generators);
    report.checks.push_back(check("sym-equal",
                                  "computed symmetry ideal equals <f1..f5>",
                                  ideal_equal(computed, fixture_sym, budget)));

    run_focus_checks(report, *this, fx, computed, budget);

    FocusQuantityList fq = computed_focus("quadratic", 6);
    Ideal i3(ctx, {fq.g(1), fq.g(2), fq.g(3)});
    Ideal inter = intersect(Ideal(ctx, fx.component("J1").gens),
                            Ideal(ctx, fx.component("J2").gens), budget);
    inter = intersect(inter, Ideal(ctx, fx.component("J3").gens), budget);
    inter = intersect(inter, Ideal(ctx, fx.component("J4").gens), budget);
    report.checks.push_back(check("intersection",
                                  "the intersection of the four components equals <g11,g22,g33>",
                                  ideal_equal(inter, i3, budget)));

    for (const auto& comp : fx.components) {
        if (comp.parameterization) {
            bool ok = certifies_prime(Ideal(ctx, comp.gens), *comp.parameterization, budget);
            report.checks.push_back(check("prime-" + comp.name,
                                          comp.name + " certified prime by implicitization", ok));
        } else if (comp.prime_by_construction) {
            report.checks.push_back(info("prime-" + comp.name,
                                         comp.name + " is prime by construction",
                                         "equals the symmetry ideal, the kernel of a monomial "
                                         "map into a domain"));
        }
    }

    for (int k = 4; k <= 6; ++k) {
        bool ok = is_member(fq.g(k), i3, budget);
        report.checks.push_back(check("bautin-g" + std::to_string(k),
                                      "g_" + std::to_string(k) + std::to_string(k) +
                                          " lies in <g11,g22,g33>",
                                      ok));
    }
    report.checks.push_back(check("bautin-radical",
                                  "g_66 lies in the radical of <g11,g22,g33>",
                                  radical_member(fq.g(6), i3, budget)));
    return report;
}

CaseReport Casebook::verify_cubic_homogeneous(const Budget& budget) {
    const CaseFixture& fx = fixture("cubic");
    const ContextPtr& ctx = fx.spec.coefficient_context();
    CaseReport report{.name = "cubic", .checks = {}};

    const Ideal& computed = computed_symmetry("cubic", budget);
    Ideal fixture_sym(ctx, fx.sym_generators);
    report.checks.push_back(check("sym-equal",
                                  "computed symmetry ideal equals the published J3",
                                  ideal_equal(computed, fixture_sym, budget)));

    run_focus_checks(report, *this, fx, computed, budget);

    FocusQuantityList fq = computed_focus("cubic", 6);
    std::vector<Polynomial> g15(fq.quantities.begin(), fq.quantities.begin() + 5);
    Ideal i5(ctx, std::move(g15));
    Ideal inter = intersect(Ideal(ctx, fx.component("J1").gens),
                            Ideal(ctx, fx.component("J2").gens), budget);
    inter = intersect(inter, Ideal(ctx, fx.component("J3").gens), budget);
    report.checks.push_back(check("intersection",
                                  "J1 ∩ J2 ∩ J3 equals <g11..g55>",
                                  ideal_equal(inter, i5, budget)));

    if (fx.quotient_check) {
        Ideal j2(ctx, fx.component(fx.quotient_check->component).gens);
        Ideal h(ctx, fx.quotient_check->h_gens);
        bool ok = ideal_equal(quotient(j2, h, budget), j2, budget);
        report.checks.push_back(
            check("quotient", fx.quotient_check->component + " : H equals " +
                                  fx.quotient_check->component,
                  ok));
    }

    for (const auto& comp : fx.components) {
        if (comp.parameterization) {
            bool ok = certifies_prime(Ideal(ctx, comp.gens), *comp.parameterization, budget);
            report.checks.push_back(check("prime-" + comp.name,
                                          comp.name + " certified prime by implicitization", ok));
        } else if (comp.prime_by_construction) {
            report.checks.push_back(info("prime-" + comp.name,
                                         comp.name + " is prime by construction",
                                         "equals the symmetry ideal, the kernel of a monomial "
                                         "map into a domain"));
        }
    }

    report.checks.push_back(
        check("bautin-g6", "g_66 lies in <g11..g55>", is_member(fq.g(6), i5, budget)));
    return report;
}

CaseReport Casebook::verify_membership_case(const std::string& name,
                                            const std::string& report_name, const Budget& budget) {
    const CaseFixture& fx = fixture(name);
    CaseReport report{.name = report_name, .checks = {}};

    const Ideal& computed = computed_symmetry(name, budget);
    const auto& gb = computed.groebner(TermOrder::degrevlex(), budget);

    bool all_binomial_kernel = true;
    std::string bad;
    for (const auto& g : computed.generators()) {
        if (g.size() != 2 || !kernel_check(fx.spec, g)) {
            all_binomial_kernel = false;
            bad = poly_str(g);
            break;
        }
    }
    report.checks.push_back(check(name + "-kernel",
                                  "every computed generator is a binomial in the kernel of the "
                                  "monomial map",
                                  all_binomial_kernel, bad));
    report.checks.push_back(info(name + "-size",
                                 "computed generator count",
                                 std::to_string(computed.generators().size())));

    std::size_t index = 0;
    for (const auto& g : fx.sym_generators) {
        ++index;
        Polynomial rem = normal_form(g, gb.generators, gb.order, budget);
        if (fx.is_annotated(index)) {
            std::string note;
            auto it = fx.annotation_notes.find(index);
            if (it != fx.annotation_notes.end()) note = it->second;
            report.checks.push_back(
                info(name + "-gen" + std::to_string(index),
                     "suspected misprint; tested reading " +
                         (rem.is_zero() ? std::string("reduces to zero")
                                        : "leaves remainder " + poly_str(rem)),
                     note));
        } else {
            report.checks.push_back(check(
                name + "-gen" + std::to_string(index),
                "published generator " + std::to_string(index) + " lies in the computed ideal",
                rem.is_zero(), rem.is_zero() ? "" : "remainder " + poly_str(rem)));
        }
    }
    return report;
}

CaseReport Casebook::verify_degree45(const Budget& budget) {
    CaseReport d4 = verify_membership_case("degree4", "degree45", budget);
    CaseReport d5 = verify_membership_case("degree5", "degree45", budget);
    for (auto& c : d5.checks) d4.checks.push_back(std::move(c));
    return d4;
}

CaseReport Casebook::verify_full_cubic(const Budget& budget) {
    Budget slow = budget;
    if (slow.max_millis == 0) slow.max_millis = 30 * 60 * 1000;
    CaseReport report{.name = "full-cubic", .checks = {}};
    const CaseFixture& fx = fixture("full_cubic");

    report.checks.push_back(
        check("dimension", "the symmetry component has dimension 8", dimension(fx.spec) == 8));

    try {
        CaseReport inner = verify_membership_case("full_cubic", "full-cubic", slow);
        for (auto& c : inner.checks) report.checks.push_back(std::move(c));
    } catch (const BudgetExceededError& e) {
        report.checks.push_back(CheckResult{"budget", "stretch computation hit its budget",
                                            CheckStatus::ExpectedSlow, e.what()});
    }
    return report;
}

CaseReport Casebook::verify_zoladek_remark(const Budget& budget) {
    const CaseFixture& fx = fixture("quadratic");
    const ContextPtr& ctx = fx.spec.coefficient_context();
    CaseReport report{.name = "zoladek", .checks = {}};

    const Polynomial& f1 = fx.sym_generators.at(0);
    const Polynomial& f2 = fx.sym_generators.at(1);
    const Polynomial& f3 = fx.sym_generators.at(2);
    Ideal j2(ctx, fx.component("J2").gens);
    Ideal j4(ctx, fx.component("J4").gens);

    report.checks.push_back(check("f1-in-J4", "f1 lies in J4", is_member(f1, j4, budget)));
    report.checks.push_back(check("f1-in-J2", "f1 lies in J2", is_member(f1, j2, budget)));
    report.checks.push_back(check("f2-in-J4", "f2 lies in J4", is_member(f2, j4, budget)));
    report.checks.push_back(check("f2-in-J2", "f2 lies in J2", is_member(f2, j2, budget)));

    Ideal f12(ctx, {f1, f2});
    Ideal cap = intersect(j4, j2, budget);
    bool all_in_radical = true;
    std::string bad;
    for (const auto& g : cap.generators()) {
        if (!radical_member(g, f12, budget)) {
            all_in_radical = false;
            bad = poly_str(g);
            break;
        }
    }
    report.checks.push_back(check("cap-in-radical",
                                  "every generator of J4 ∩ J2 lies in the radical of <f1,f2>",
                                  all_in_radical, bad));

    bool f3_rad = radical_member(f3, f12, budget);
    report.checks.push_back(info("f3-radical",
                                 "radical membership of f3 in <f1,f2>, recorded",
                                 f3_rad ? "true" : "false (f3 does not vanish on the a_0_1 = "
                                                   "b_1_0 = 0 part of the zero set)"));
    return report;
}

std::vector<CaseReport> Casebook::verify_all(bool include_slow, const Budget& budget) {
    std::vector<CaseReport> reports;
    reports.push_back(verify_quadratic(budget));
    reports.push_back(verify_cubic_homogeneous(budget));
    reports.push_back(verify_degree45(budget));
    reports.push_back(verify_zoladek_remark(budget));
    if (include_slow) {
        reports.push_back(verify_full_cubic(budget));
    } else {
        CaseReport skipped{.name = "full-cubic", .checks = {}};
        skipped.checks.push_back(CheckResult{"all", "stretch case; enable with --include-slow",
                                             CheckStatus::Skipped, ""});
        reports.push_back(std::move(skipped));
    }
    return reports;
}

CaseReport Casebook::verify(const std::string& which, const Budget& budget) {
    if (which == "quadratic") return verify_quadratic(budget);
    if (which == "cubic") return verify_cubic_homogeneous(budget);
    if (which == "degree45") return verify_degree45(budget);
    if (which == "full-cubic") return verify_full_cubic(budget);
    if (which == "zoladek") return verify_zoladek_remark(budget);
    throw Error("unknown verification case: " + which +
                " (expected quadratic, cubic, degree45, full-cubic, zoladek, or all)");
}

}  // namespace centervar
