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

#include "centervar/context.hpp"

#include "centervar/errors.hpp"

namespace centervar {

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw Error("a variable context needs at least one variable");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw Error("empty variable name");
        auto [it, inserted] = index_.emplace(names_[i], static_cast<int>(i));
        (void)it;
        if (!inserted) throw Error("duplicate variable name: " + names_[i]);
    }
}

int VarContext::index_of(std::string_view name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<VarContext>(std::move(names));
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (!same_context(a, b))
        throw ContextMismatchError("operands live in different polynomial rings");
}

std::string fresh_name(const VarContext& ctx, const std::string& base) {
    if (ctx.index_of(base) < 0) return base;
    for (int i = 0;; ++i) {
        std::string candidate = base + "_" + std::to_string(i);
        if (ctx.index_of(candidate) < 0) return candidate;
    }
}

}  // namespace centervar
