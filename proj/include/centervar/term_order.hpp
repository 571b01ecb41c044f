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
#include <vector>

#include "centervar/monomial.hpp"

namespace centervar {

enum class OrderKind { Lex, DegRevLex };

/// A total multiplicative well-order on monomials: plain lex, degrevlex, or
/// a block order (compared block by block, each block under its own simple
/// order restricted to the block's variables). A block order whose leading
/// blocks cover a variable set V is an elimination order for V.
class TermOrder {
public:
    struct Block {
        std::vector<int> vars;  // variable indices, in precedence order
        OrderKind kind = OrderKind::DegRevLex;
    };

    static TermOrder lex() { return TermOrder(OrderKind::Lex); }
    static TermOrder degrevlex() { return TermOrder(OrderKind::DegRevLex); }
    static TermOrder block(std::vector<Block> blocks);

    /// Two degrevlex blocks: `lead_vars` first, every other variable after.
    static TermOrder elimination(std::vector<int> lead_vars, int arity);

    /// -1, 0, 1 as a <, =, > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool is_block() const noexcept { return !blocks_.empty(); }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    OrderKind simple_kind() const noexcept { return kind_; }

    /// Blocks must partition 0..arity-1 exactly. Simple orders always pass.
    void validate(int arity) const;

    /// Canonical description; used as a cache key ("lex", "degrevlex",
    /// "block[(0 1:degrevlex)(2:lex)]").
    std::string key() const;

    friend bool operator==(const TermOrder& a, const TermOrder& b) {
        return a.kind_ == b.kind_ && a.blocks_same(b);
    }

private:
    explicit TermOrder(OrderKind kind) : kind_(kind) {}
    bool blocks_same(const TermOrder& o) const;

    OrderKind kind_ = OrderKind::DegRevLex;
    std::vector<Block> blocks_;  // empty for simple orders
};

}  // namespace centervar
