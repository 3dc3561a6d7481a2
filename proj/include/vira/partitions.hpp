/*
   Copyright 2026 The vira authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vira/errors.hpp"

namespace vira {

/// A multiset of non-negative integers stored in exponent form:
/// exponent(k) is the number of times k occurs. The empty multiset is 0-bar.
class Pseudopartition {
  public:
    Pseudopartition() = default;
    explicit Pseudopartition(std::vector<unsigned> exponents) : exps_(std::move(exponents)) { trim(); }

    static Pseudopartition from_parts(const std::vector<unsigned>& parts) {
        Pseudopartition p;
        for (unsigned k : parts) p.add(k);
        return p;
    }

    unsigned count(unsigned k) const { return k < exps_.size() ? exps_[k] : 0U; }
    unsigned operator()(unsigned k) const { return count(k); }

    /// Sum of parts, |lambda|.
    unsigned size() const {
        unsigned s = 0;
        for (std::size_t k = 0; k < exps_.size(); ++k) s += static_cast<unsigned>(k) * exps_[k];
        return s;
    }
    /// Number of parts, #(lambda), zeros included.
    unsigned parts() const {
        unsigned s = 0;
        for (unsigned e : exps_) s += e;
        return s;
    }

    bool empty() const noexcept { return exps_.empty(); }
    bool is_partition() const { return count(0) == 0; }
    /// One past the largest part (0 for the empty pseudopartition).
    std::size_t span() const noexcept { return exps_.size(); }
    const std::vector<unsigned>& exponents() const noexcept { return exps_; }

    /// Smallest k with exponent(k) != 0; only valid when non-empty.
    unsigned min_part() const {
        for (std::size_t k = 0; k < exps_.size(); ++k)
            if (exps_[k]) return static_cast<unsigned>(k);
        throw std::logic_error("min_part of empty pseudopartition");
    }

    std::vector<unsigned> parts_ascending() const {
        std::vector<unsigned> out;
        for (std::size_t k = 0; k < exps_.size(); ++k) out.insert(out.end(), exps_[k], static_cast<unsigned>(k));
        return out;
    }

    void add(unsigned k, unsigned times = 1) {
        if (times == 0) return;
        if (k >= exps_.size()) exps_.resize(k + 1, 0U);
        exps_[k] += times;
    }
    void remove(unsigned k, unsigned times = 1) {
        if (count(k) < times) throw std::logic_error("removing absent part from pseudopartition");
        exps_[k] -= times;
        trim();
    }

    /// Disjoint union of multisets.
    friend Pseudopartition operator+(Pseudopartition a, const Pseudopartition& b) {
        for (std::size_t k = 0; k < b.exps_.size(); ++k) a.add(static_cast<unsigned>(k), b.exps_[k]);
        return a;
    }

    friend bool operator==(const Pseudopartition&, const Pseudopartition&) = default;

    /// Graded lexicographic: size first, then exponent vectors compared
    /// lexicographically from exponent(0) upwards.
    friend std::strong_ordering operator<=>(const Pseudopartition& a, const Pseudopartition& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
        for (std::size_t k = 0; k < n; ++k)
            if (auto c = a.count(static_cast<unsigned>(k)) <=> b.count(static_cast<unsigned>(k)); c != 0) return c;
        return std::strong_ordering::equal;
    }

    /// Exponent form, e.g. `(0^2,1,3)`; 0-bar prints as `()`.
    std::string to_string() const {
        std::string out = "(";
        bool first = true;
        for (std::size_t k = 0; k < exps_.size(); ++k) {
            if (!exps_[k]) continue;
            if (!first) out += ",";
            first = false;
            out += std::to_string(k);
            if (exps_[k] > 1) out += "^" + std::to_string(exps_[k]);
        }
        return out + ")";
    }

    /// Accepts `0^2 1 3`, `(0^2,1,3)` and `()`.
    static Pseudopartition parse(std::string_view text) {
        Pseudopartition p;
        std::size_t i = 0;
        auto skip = [&] {
            while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
        };
        auto number = [&](const char* what) {
            if (i >= text.size() || text[i] < '0' || text[i] > '9') throw ParseError("malformed pseudopartition", i, {what});
            unsigned v = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + static_cast<unsigned>(text[i++] - '0');
            return v;
        };
        skip();
        const bool paren = i < text.size() && text[i] == '(';
        if (paren) ++i;
        skip();
        while (i < text.size() && text[i] != ')') {
            unsigned part = number("part");
            unsigned times = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                times = number("exponent");
            }
            p.add(part, times);
            skip();
        }
        if (paren) {
            if (i >= text.size()) throw ParseError("unterminated pseudopartition", i, {")"});
            ++i;
            skip();
        }
        if (i != text.size()) throw ParseError("trailing input in pseudopartition", i);
        p.trim();
        return p;
    }

  private:
    void trim() {
        while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
    }

    std::vector<unsigned> exps_;
};

struct PartitionStats {
    unsigned size = 0;
    unsigned parts = 0;
};

inline PartitionStats stats(const Pseudopartition& p) { return {p.size(), p.parts()}; }

namespace detail {

inline void partitions_rec(unsigned remaining, unsigned max_part, Pseudopartition& cur, std::vector<Pseudopartition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        cur.add(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.remove(part);
    }
}

}  // namespace detail

/// All pseudopartitions of size n with at most max_zero_count zeros, sorted.
inline std::vector<Pseudopartition> enumerate(unsigned n, unsigned max_zero_count) {
    std::vector<Pseudopartition> base;
    Pseudopartition cur;
    detail::partitions_rec(n, n, cur, base);
    std::vector<Pseudopartition> out;
    out.reserve(base.size() * (max_zero_count + 1));
    for (unsigned zeros = 0; zeros <= max_zero_count; ++zeros) {
        for (const auto& b : base) {
            Pseudopartition p = b;
            p.add(0, zeros);
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All pseudopartitions with size <= max_size and at most max_zero_count zeros.
inline std::vector<Pseudopartition> enumerate_up_to(unsigned max_size, unsigned max_zero_count) {
    std::vector<Pseudopartition> out;
    for (unsigned n = 0; n <= max_size; ++n) {
        auto part = enumerate(n, max_zero_count);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace vira
