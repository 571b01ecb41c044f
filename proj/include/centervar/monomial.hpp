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
#include <vector>

#include "centervar/errors.hpp"

namespace centervar {

/// A power product, stored as a dense exponent vector (one nonnegative
/// entry per context variable) with the total degree cached.
class Monomial {
public:
    explicit Monomial(int arity) : e_(static_cast<std::size_t>(arity), 0), deg_(0) {}

    explicit Monomial(std::vector<std::int32_t> exponents) : e_(std::move(exponents)) {
        deg_ = 0;
        for (auto x : e_) {
            if (x < 0) throw Error("monomial exponents must be nonnegative");
            deg_ += x;
        }
    }

    int arity() const noexcept { return static_cast<int>(e_.size()); }
    std::int32_t exponent(int i) const { return e_[static_cast<std::size_t>(i)]; }
    std::int64_t degree() const noexcept { return deg_; }
    const std::vector<std::int32_t>& exponents() const noexcept { return e_; }
    bool is_one() const noexcept { return deg_ == 0; }

    Monomial times(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        r.deg_ += o.deg_;
        return r;
    }

    /// Exact quotient; requires o.divides(*this).
    Monomial divided_by(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= o.e_[i];
            if (r.e_[i] < 0) throw Error("monomial division with remainder");
        }
        r.deg_ -= o.deg_;
        return r;
    }

    bool divides(const Monomial& m) const noexcept {
        if (deg_ > m.deg_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    bool coprime_with(const Monomial& o) const noexcept {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        r.deg_ = 0;
        for (std::size_t i = 0; i < r.e_.size(); ++i) {
            if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
            r.deg_ += r.e_[i];
        }
        return r;
    }

    /// Bit i%64 is set when variable i occurs. If g divides m then
    /// mask(g) & ~mask(m) == 0, so the mask is a cheap divisor filter.
    std::uint64_t mask() const noexcept {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0) m |= std::uint64_t{1} << (i & 63);
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

    /// Plain lexicographic comparison of exponent vectors; the library's
    /// internal canonical storage order (not a user-facing term order).
    static int lex_compare(const Monomial& a, const Monomial& b) noexcept {
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
        }
        return 0;
    }

private:
    std::vector<std::int32_t> e_;
    std::int64_t deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : m.exponents()) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace centervar
