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

// centervar — exact computations around the symmetry component of the
// center variety of polynomial differential systems: Sibirsky ideal
// generators, Hilbert bases, dimensions, focus quantities, the ideal
// toolbox (Gröbner bases, elimination, intersection, quotient, radical
// membership, implicitization), and the bundled case verifications.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "centervar/casebook.hpp"
#include "centervar/focus.hpp"
#include "centervar/parse.hpp"
#include "centervar/sibirsky.hpp"

#ifndef CENTERVAR_DATA_DIR
#define CENTERVAR_DATA_DIR "data/casebook"
#endif

namespace {

using namespace centervar;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
    std::string order = "lex";
    std::string format = "text";
    Budget budget;
};

TermOrder display_order(const Options& opt) {
    if (opt.order == "lex") return TermOrder::lex();
    if (opt.order == "degrevlex") return TermOrder::degrevlex();
    throw Error("unknown order: " + opt.order);
}

bool json_output(const Options& opt) { return opt.format == "json"; }

// Polynomial-list files carry no ring header by default; the ring is the
// list of identifiers in order of first appearance, unless a "# vars: x y z"
// comment pins it explicitly.
std::vector<std::string> scan_variable_names(const std::vector<std::string>& paths) {
    std::vector<std::string> names;
    auto seen = [&](const std::string& n) {
        for (const auto& s : names)
            if (s == n) return true;
        return false;
    };
    for (const auto& path : paths) {
        std::ifstream in(path);
        if (!in) throw Error("cannot open file: " + path);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) {
                std::string comment = line.substr(hash + 1);
                line.erase(hash);
                std::istringstream cs(comment);
                std::string word;
                if (cs >> word && word == "vars:") {
                    std::vector<std::string> pinned;
                    while (cs >> word) pinned.push_back(word);
                    if (!pinned.empty()) return pinned;
                }
            }
            for (std::size_t i = 0; i < line.size();) {
                if (std::isalpha(static_cast<unsigned char>(line[i]))) {
                    std::size_t j = i + 1;
                    while (j < line.size() &&
                           (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
                        ++j;
                    std::string name = line.substr(i, j - i);
                    if (!seen(name)) names.push_back(name);
                    i = j;
                } else {
                    ++i;
                }
            }
        }
    }
    if (names.empty()) throw Error("no variables found in input files");
    return names;
}

Ideal load_ideal(const std::string& path, const ContextPtr& ctx) {
    return Ideal(ctx, parse_polynomial_list_file(path, ctx));
}

void print_generators(const std::vector<Polynomial>& gens, const Options& opt) {
    TermOrder ord = display_order(opt);
    if (json_output(opt)) {
        nlohmann::json j;
        j["generators"] = nlohmann::json::array();
        for (const auto& g : gens) j["generators"].push_back(format_polynomial(g, ord));
        std::cout << j.dump(2) << "\n";
    } else {
        if (gens.empty()) std::cout << "0\n";
        for (const auto& g : gens) std::cout << format_polynomial(g, ord) << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact computations around the symmetry component of the center variety"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    app.add_option("--order", opt.order, "term order for printed polynomials (lex|degrevlex)")
        ->check(CLI::IsMember({"lex", "degrevlex"}))
        ->capture_default_str();
    app.add_option("--format", opt.format, "output encoding (text|json)")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--max-pairs", opt.budget.max_pairs, "S-pair budget per basis computation")
        ->capture_default_str();
    app.add_option("--max-terms", opt.budget.max_terms,
                   "term budget for intermediate polynomials")
        ->capture_default_str();

    std::string spec_path, file_a, file_b, drop_csv, map_path, case_name;
    int kmax = 3;
    bool include_slow = false;
    std::string data_dir = CENTERVAR_DATA_DIR;

    auto* sym = app.add_subcommand("symmetry", "print the symmetry (Sibirsky) ideal generators");
    sym->add_option("spec", spec_path, "system spec file")->required();

    auto* hil = app.add_subcommand("hilbert", "print the Hilbert basis of the invariant monoid");
    hil->add_option("spec", spec_path, "system spec file")->required();

    auto* dim = app.add_subcommand("dimension", "print the symmetry-component dimension");
    dim->add_option("spec", spec_path, "system spec file")->required();

    auto* foc = app.add_subcommand("focus", "print focus quantities g_11..g_kk");
    foc->add_option("spec", spec_path, "system spec file")->required();
    foc->add_option("--kmax", kmax, "number of focus quantities")->capture_default_str();

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of a polynomial-list file");
    gb->add_option("file", file_a, "polynomial list")->required();

    auto* eli = app.add_subcommand("eliminate", "eliminate variables from an ideal");
    eli->add_option("file", file_a, "polynomial list")->required();
    eli->add_option("--drop", drop_csv, "comma-separated variables to eliminate")->required();

    auto* its = app.add_subcommand("intersect", "intersection of two ideals");
    its->add_option("file1", file_a, "polynomial list")->required();
    its->add_option("file2", file_b, "polynomial list")->required();

    auto* quo = app.add_subcommand("quotient", "ideal quotient I : H");
    quo->add_option("file1", file_a, "polynomial list for I")->required();
    quo->add_option("file2", file_b, "polynomial list for H")->required();

    auto* mem = app.add_subcommand("member", "ideal membership for each query polynomial");
    mem->add_option("ideal", file_a, "polynomial list for the ideal")->required();
    mem->add_option("query", file_b, "polynomial list of queries")->required();

    auto* rad =
        app.add_subcommand("radical-member", "radical membership for each query polynomial");
    rad->add_option("ideal", file_a, "polynomial list for the ideal")->required();
    rad->add_option("query", file_b, "polynomial list of queries")->required();

    auto* equ = app.add_subcommand("equal", "ideal equality of two generator lists");
    equ->add_option("file1", file_a, "polynomial list")->required();
    equ->add_option("file2", file_b, "polynomial list")->required();

    auto* imp = app.add_subcommand("implicitize",
                                   "defining ideal of a rational parameterization (JSON input)");
    imp->add_option("map", map_path, "JSON map description")->required();

    auto* ver = app.add_subcommand("verify", "run the bundled case verifications");
    ver->add_option("case", case_name, "quadratic|cubic|degree45|full-cubic|zoladek|all")
        ->required();
    ver->add_flag("--include-slow", include_slow, "also run the stretch full-cubic case");
    ver->add_option("--data", data_dir, "fixture directory")->capture_default_str();

    app.parse(argc, argv);

    if (sym->parsed()) {
        SystemSpec spec = parse_system_spec_file(spec_path);
        Ideal ideal = symmetry_ideal(spec, opt.budget);
        print_generators(ideal.generators(), opt);
        return kExitOk;
    }

    if (hil->parsed()) {
        SystemSpec spec = parse_system_spec_file(spec_path);
        auto basis = hilbert_basis(spec, opt.budget);
        if (json_output(opt)) {
            nlohmann::json j;
            j["basis"] = nlohmann::json::array();
            for (const auto& e : basis) j["basis"].push_back(e.nu);
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& e : basis) {
                for (std::size_t i = 0; i < e.nu.size(); ++i)
                    std::cout << (i ? " " : "") << e.nu[i];
                std::cout << "\n";
            }
        }
        return kExitOk;
    }

    if (dim->parsed()) {
        SystemSpec spec = parse_system_spec_file(spec_path);
        int d = dimension(spec);
        if (json_output(opt))
            std::cout << nlohmann::json{{"dimension", d}}.dump(2) << "\n";
        else
            std::cout << d << "\n";
        return kExitOk;
    }

    if (foc->parsed()) {
        SystemSpec spec = parse_system_spec_file(spec_path);
        if (kmax < 1) throw Error("--kmax must be at least 1");
        FocusQuantityList fq = focus_quantities(spec, kmax);
        TermOrder ord = display_order(opt);
        if (json_output(opt)) {
            nlohmann::json j;
            j["quantities"] = nlohmann::json::array();
            for (int k = 1; k <= fq.kmax(); ++k)
                j["quantities"].push_back(format_polynomial(fq.g(k), ord));
            std::cout << j.dump(2) << "\n";
        } else {
            for (int k = 1; k <= fq.kmax(); ++k)
                std::cout << "g_" << k << k << " = " << format_polynomial(fq.g(k), ord) << "\n";
        }
        return kExitOk;
    }

    if (gb->parsed()) {
        ContextPtr ctx = make_context(scan_variable_names({file_a}));
        // For gb the printed order is also the computation order; a Groebner
        // basis is order-specific. The computation default stays degrevlex.
        TermOrder ord = app.count("--order") == 0 ? TermOrder::degrevlex() : display_order(opt);
        GroebnerBasis basis =
            buchberger(parse_polynomial_list_file(file_a, ctx), ord, opt.budget);
        if (json_output(opt)) {
            nlohmann::json j;
            j["order"] = ord.key();
            j["generators"] = nlohmann::json::array();
            for (const auto& g : basis.generators)
                j["generators"].push_back(format_polynomial(g, ord));
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& g : basis.generators)
                std::cout << format_polynomial(g, ord) << "\n";
        }
        return kExitOk;
    }

    if (eli->parsed()) {
        ContextPtr ctx = make_context(scan_variable_names({file_a}));
        Ideal ideal = load_ideal(file_a, ctx);
        std::vector<int> drop;
        std::istringstream ds(drop_csv);
        std::string name;
        while (std::getline(ds, name, ',')) {
            int idx = ctx->index_of(name);
            if (idx < 0) throw Error("unknown variable in --drop: " + name);
            drop.push_back(idx);
        }
        print_generators(eliminate(ideal, drop, opt.budget).generators(), opt);
        return kExitOk;
    }

    if (its->parsed() || quo->parsed()) {
        ContextPtr ctx = make_context(scan_variable_names({file_a, file_b}));
        Ideal lhs = load_ideal(file_a, ctx);
        Ideal rhs = load_ideal(file_b, ctx);
        Ideal result =
            its->parsed() ? intersect(lhs, rhs, opt.budget) : quotient(lhs, rhs, opt.budget);
        print_generators(result.generators(), opt);
        return kExitOk;
    }

    if (mem->parsed() || rad->parsed()) {
        ContextPtr ctx = make_context(scan_variable_names({file_a, file_b}));
        Ideal ideal = load_ideal(file_a, ctx);
        auto queries = parse_polynomial_list_file(file_b, ctx);
        bool all = true;
        nlohmann::json results = nlohmann::json::array();
        for (const auto& q : queries) {
            bool in = mem->parsed() ? is_member(q, ideal, opt.budget)
                                    : radical_member(q, ideal, opt.budget);
            all = all && in;
            if (json_output(opt))
                results.push_back(in);
            else
                std::cout << (in ? "true" : "false") << "\n";
        }
        if (json_output(opt))
            std::cout << nlohmann::json{{mem->parsed() ? "member" : "radical_member", results}}
                             .dump(2)
                      << "\n";
        return all ? kExitOk : kExitVerificationFailed;
    }

    if (equ->parsed()) {
        ContextPtr ctx = make_context(scan_variable_names({file_a, file_b}));
        bool eq = ideal_equal(load_ideal(file_a, ctx), load_ideal(file_b, ctx), opt.budget);
        if (json_output(opt))
            std::cout << nlohmann::json{{"equal", eq}}.dump(2) << "\n";
        else
            std::cout << (eq ? "true" : "false") << "\n";
        return eq ? kExitOk : kExitVerificationFailed;
    }

    if (imp->parsed()) {
        std::ifstream in(map_path);
        if (!in) throw Error("cannot open map file: " + map_path);
        nlohmann::json jm = nlohmann::json::parse(in);
        std::vector<std::string> targets, params;
        for (const auto& s : jm.at("targets")) targets.push_back(s.get<std::string>());
        for (const auto& s : jm.at("params")) params.push_back(s.get<std::string>());
        RationalMap map;
        map.target_ctx = make_context(targets);
        map.param_ctx = make_context(params);
        for (const auto& var : map.target_ctx->names()) {
            const auto& img = jm.at("images").at(var);
            map.numerators.push_back(
                parse_polynomial(img.at("num").get<std::string>(), map.param_ctx));
            map.denominators.push_back(
                parse_polynomial(img.value("den", std::string("1")), map.param_ctx));
        }
        map.validate();
        print_generators(implicitize(map, opt.budget).generators(), opt);
        return kExitOk;
    }

    if (ver->parsed()) {
        Casebook book(data_dir);
        std::vector<CaseReport> reports;
        if (case_name == "all")
            reports = book.verify_all(include_slow, opt.budget);
        else
            reports.push_back(book.verify(case_name, opt.budget));
        bool green = true;
        if (json_output(opt)) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : reports) {
                j.push_back(r.to_json());
                green = green && r.green();
            }
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& r : reports) {
                std::cout << r.to_text();
                green = green && r.green();
            }
        }
        return green ? kExitOk : kExitVerificationFailed;
    }

    throw Error("no subcommand handled");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        CLI::App dummy;
        int code = dummy.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const centervar::BudgetExceededError& e) {
        std::cerr << "centervar: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "centervar: " << e.what() << "\n";
        return kExitUsage;
    }
}
