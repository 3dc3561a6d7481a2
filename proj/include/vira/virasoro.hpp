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

// The Virasoro algebra and its universal enveloping algebra in the PBW basis
// z^t d_{i1} ... d_{is}, i1 <= ... <= is.

#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vira/scalar.hpp"

namespace vira {

struct PBWMonomial {
    unsigned z = 0;
    std::vector<int> word;  // non-decreasing generator indices

    static PBWMonomial identity() { return {}; }

    int weight() const {
        int w = 0;
        for (int k : word) w += k;
        return w;
    }
    bool is_ordered() const { return std::is_sorted(word.begin(), word.end()); }

    friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
    // Display order: longer words first, then words lexicographically, then
    // ascending z-power.
    friend std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b) {
        if (a.word.size() != b.word.size()) return b.word.size() <=> a.word.size();
        if (auto c = std::lexicographical_compare_three_way(a.word.begin(), a.word.end(), b.word.begin(), b.word.end()); c != 0)
            return c;
        return a.z <=> b.z;
    }

    /// `z^2*d-1^2*d3`; the identity prints as the empty string.
    std::string body() const {
        std::string out;
        auto push = [&](const std::string& s) {
            if (!out.empty()) out += "*";
            out += s;
        };
        if (z) push(detail::power_string("z", z));
        for (std::size_t i = 0; i < word.size();) {
            std::size_t j = i;
            while (j < word.size() && word[j] == word[i]) ++j;
            push(detail::power_string("d" + std::to_string(word[i]), static_cast<unsigned>(j - i)));
            i = j;
        }
        return out;
    }
};

/// Finite rational combination of PBW monomials.
class UEAElement {
  public:
    using Terms = std::map<PBWMonomial, Rational>;

    UEAElement() = default;
    UEAElement(const Rational& c) { add(PBWMonomial::identity(), c); }  // NOLINT
    UEAElement(int c) : UEAElement(Rational(c)) {}  // NOLINT

    /// A single monomial; the word must already be ordered.
    static UEAElement monomial(PBWMonomial m, const Rational& c = Rational(1)) {
        if (!m.is_ordered()) throw std::invalid_argument("UEAElement::monomial: word not in PBW order");
        UEAElement u;
        u.add(std::move(m), c);
        return u;
    }
    static UEAElement generator(int k) { return monomial({0, {k}}); }
    static UEAElement z_power(unsigned t) { return monomial({t, {}}); }
    static UEAElement from_poly(const Poly& p) {
        UEAElement u;
        for (std::size_t t = 0; t < p.coefficients().size(); ++t) u.add({static_cast<unsigned>(t), {}}, p.coefficients()[t]);
        return u;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coeff(const PBWMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational() : it->second;
    }

    void add(PBWMonomial m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// this += c * z^zshift * other
    void add_scaled(const UEAElement& other, const Rational& c, unsigned zshift = 0) {
        if (c.is_zero()) return;
        for (const auto& [m, v] : other.terms_) add({m.z + zshift, m.word}, v * c);
    }

    UEAElement& operator+=(const UEAElement& o) { add_scaled(o, Rational(1)); return *this; }
    UEAElement& operator-=(const UEAElement& o) { add_scaled(o, Rational(-1)); return *this; }
    UEAElement& operator*=(const Rational& c) {
        if (c.is_zero()) terms_.clear();
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator-(UEAElement a) { return a *= Rational(-1); }
    friend UEAElement operator*(const Rational& c, UEAElement a) { return a *= c; }
    friend bool operator==(const UEAElement&, const UEAElement&) = default;

    /// True when every term has the same weight; the zero element counts.
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int w = terms_.begin()->first.weight();
        return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return t.first.weight() == w; });
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) detail::append_term(out, c, m.body());
        return out;
    }

  private:
    Terms terms_;
};

/// [d_i, d_j] = (j - i) d_{i+j} + delta_{i+j,0} (i^3 - i)/12 z
inline UEAElement bracket(int i, int j) {
    UEAElement out;
    out.add({0, {i + j}}, Rational(j - i));
    if (i + j == 0) {
        const long li = i;
        out.add({1, {}}, Rational(mpz_class(li * li * li - li), mpz_class(12)));
    }
    return out;
}

/// PBW normal form of the word d_{w1} ... d_{wn} (coefficient 1, no z).
/// Rewrites the leftmost inversion d_a d_b (a > b) as d_b d_a + [d_a, d_b];
/// results are memoised per thread.
inline const UEAElement& normal_order(const std::vector<int>& word) {
    thread_local std::map<std::vector<int>, UEAElement> cache;
    if (auto it = cache.find(word); it != cache.end()) return it->second;

    UEAElement result;
    std::size_t i = 0;
    while (i + 1 < word.size() && word[i] <= word[i + 1]) ++i;
    if (i + 1 >= word.size()) {
        result.add({0, word}, Rational(1));
    } else {
        const int a = word[i], b = word[i + 1];
        std::vector<int> swapped = word;
        std::swap(swapped[i], swapped[i + 1]);
        result += normal_order(swapped);

        std::vector<int> merged(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
        merged.push_back(a + b);
        merged.insert(merged.end(), word.begin() + static_cast<std::ptrdiff_t>(i + 2), word.end());
        result.add_scaled(normal_order(merged), Rational(b - a));

        if (a + b == 0) {
            const long la = a;
            const Rational central(mpz_class(la * la * la - la), mpz_class(12));
            if (!central.is_zero()) {
                std::vector<int> rest(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
                rest.insert(rest.end(), word.begin() + static_cast<std::ptrdiff_t>(i + 2), word.end());
                result.add_scaled(normal_order(rest), central, 1);
            }
        }
    }
    return cache.emplace(word, std::move(result)).first->second;
}

/// A formal product c * z^t * d_{w1} ... d_{wn} with an arbitrary word.
struct FormalTerm {
    Rational coeff{1};
    unsigned z = 0;
    std::vector<int> word;
};

inline UEAElement straighten(std::span<const FormalTerm> terms) {
    UEAElement out;
    for (const auto& t : terms) out.add_scaled(normal_order(t.word), t.coeff, t.z);
    return out;
}

inline UEAElement straighten(const FormalTerm& term) { return straighten(std::span<const FormalTerm>(&term, 1)); }

inline UEAElement multiply(const UEAElement& u, const UEAElement& v) {
    UEAElement out;
    std::vector<int> word;
    for (const auto& [mu, cu] : u.terms()) {
        for (const auto& [mv, cv] : v.terms()) {
            word = mu.word;
            word.insert(word.end(), mv.word.begin(), mv.word.end());
            out.add_scaled(normal_order(word), cu * cv, mu.z + mv.z);
        }
    }
    return out;
}

inline UEAElement commutator(const UEAElement& u, const UEAElement& v) { return multiply(u, v) - multiply(v, u); }

/// ad(d_n)^k applied to u.
inline UEAElement ad_power(int n, unsigned k, UEAElement u) {
    const UEAElement dn = UEAElement::generator(n);
    for (unsigned i = 0; i < k && !u.is_zero(); ++i) u = commutator(dn, u);
    return u;
}

inline int weight(const PBWMonomial& m) { return m.weight(); }

}  // namespace vira
