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
#include <string>
#include <string_view>
#include <vector>

namespace centervar {

/// An ordered list of distinct variable names. The listed order is the
/// storage order of exponent vectors and the variable precedence used by
/// the simple term orders (earlier name = bigger variable under lex).
class VarContext {
public:
    explicit VarContext(std::vector<std::string> names);

    int arity() const noexcept { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// Index of `name`, or -1 if the variable does not exist.
    int index_of(std::string_view name) const;

    friend bool operator==(const VarContext& a, const VarContext& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, int, std::less<>> index_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> names);

/// Contexts are compared by value, so independently constructed but
/// identical rings interoperate.
inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Throws ContextMismatchError unless `a` and `b` agree.
void require_same_context(const ContextPtr& a, const ContextPtr& b);

/// A variable name not present in `ctx`, built from `base` by appending
/// underscores/digits as needed.
std::string fresh_name(const VarContext& ctx, const std::string& base);

}  // namespace centervar
