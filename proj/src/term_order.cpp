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

#include "centervar/term_order.hpp"

#include <algorithm>

namespace centervar {

namespace {

int lex_cmp_all(const Monomial& a, const Monomial& b) {
    const int n = a.arity();
    for (int i = 0; i < n; ++i) {
        auto x = a.exponent(i), y = b.exponent(i);
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

int degrevlex_cmp_all(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    // Reverse-lex tie break: at the last differing variable, the monomial
    // with the smaller exponent is the greater one.
    const int n = a.arity();
    for (int i = n - 1; i >= 0; --i) {
        auto x = a.exponent(i), y = b.exponent(i);
        if (x != y) return x > y ? -1 : 1;
    }
    return 0;
}

int lex_cmp_block(const Monomial& a, const Monomial& b, const std::vector<int>& vars) {
    for (int v : vars) {
        auto x = a.exponent(v), y = b.exponent(v);
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

int degrevlex_cmp_block(const Monomial& a, const Monomial& b, const std::vector<int>& vars) {
    std::int64_t da = 0, db = 0;
    for (int v : vars) {
        da += a.exponent(v);
        db += b.exponent(v);
    }
    if (da != db) return da < db ? -1 : 1;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        auto x = a.exponent(*it), y = b.exponent(*it);
        if (x != y) return x > y ? -1 : 1;
    }
    return 0;
}

}  // namespace

TermOrder TermOrder::block(std::vector<Block> blocks) {
    TermOrder ord(OrderKind::DegRevLex);
    if (blocks.empty()) throw Error("block order needs at least one block");
    for (const auto& b : blocks)
        if (b.vars.empty()) throw Error("block order: empty block");
    ord.blocks_ = std::move(blocks);
    return ord;
}

TermOrder TermOrder::elimination(std::vector<int> lead_vars, int arity) {
    std::sort(lead_vars.begin(), lead_vars.end());
    std::vector<int> rest;
    for (int i = 0; i < arity; ++i)
        if (!std::binary_search(lead_vars.begin(), lead_vars.end(), i)) rest.push_back(i);
    if (lead_vars.empty()) {
        if (rest.empty()) throw Error("elimination order over empty ring");
        return block({Block{std::move(rest), OrderKind::DegRevLex}});
    }
    if (rest.empty()) return block({Block{std::move(lead_vars), OrderKind::DegRevLex}});
    return block({Block{std::move(lead_vars), OrderKind::DegRevLex},
                  Block{std::move(rest), OrderKind::DegRevLex}});
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (blocks_.empty()) {
        return kind_ == OrderKind::Lex ? lex_cmp_all(a, b) : degrevlex_cmp_all(a, b);
    }
    for (const auto& blk : blocks_) {
        int c = blk.kind == OrderKind::Lex ? lex_cmp_block(a, b, blk.vars)
                                           : degrevlex_cmp_block(a, b, blk.vars);
        if (c != 0) return c;
    }
    return 0;
}

void TermOrder::validate(int arity) const {
    if (blocks_.empty()) return;
    std::vector<char> seen(static_cast<std::size_t>(arity), 0);
    for (const auto& blk : blocks_) {
        for (int v : blk.vars) {
            if (v < 0 || v >= arity) throw Error("block order: variable index out of range");
            if (seen[static_cast<std::size_t>(v)]) throw Error("block order: variable listed twice");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (char s : seen)
        if (!s) throw Error("block order: blocks must cover every variable");
}

std::string TermOrder::key() const {
    if (blocks_.empty()) return kind_ == OrderKind::Lex ? "lex" : "degrevlex";
    std::string k = "block[";
    for (const auto& blk : blocks_) {
        k += "(";
        for (std::size_t i = 0; i < blk.vars.size(); ++i) {
            if (i) k += " ";
            k += std::to_string(blk.vars[i]);
        }
        k += blk.kind == OrderKind::Lex ? ":lex)" : ":degrevlex)";
    }
    k += "]";
    return k;
}

bool TermOrder::blocks_same(const TermOrder& o) const {
    if (blocks_.size() != o.blocks_.size()) return false;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].kind != o.blocks_[i].kind) return false;
        if (blocks_[i].vars != o.blocks_[i].vars) return false;
    }
    return true;
}

}  // namespace centervar
