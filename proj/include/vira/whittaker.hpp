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

// Whittaker modules: the universal module M_psi and its quotients
// M_psi / U(Vir) p(z) w, with the module action, degree statistics, the
// dot action and constructive extraction of Whittaker vectors.

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vira/partitions.hpp"
#include "vira/scalar.hpp"
#include "vira/virasoro.hpp"

namespace vira {

/// psi: n+ -> Q with psi(d1), psi(d2) nonzero and psi(d_n) = 0 for n >= 3.
class WhittakerHomomorphism {
  public:
    WhittakerHomomorphism(Rational psi1, Rational psi2) : psi1_(std::move(psi1)), psi2_(std::move(psi2)) {
        if (psi1_.is_zero() || psi2_.is_zero())
            throw DomainError("Whittaker homomorphism needs psi1 and psi2 nonzero (got psi1=" + psi1_.to_string() +
                              ", psi2=" + psi2_.to_string() + ")");
    }

    const Rational& psi1() const noexcept { return psi1_; }
    const Rational& psi2() const noexcept { return psi2_; }

    Rational operator()(int n) const {
        if (n == 1) return psi1_;
        if (n == 2) return psi2_;
        return Rational();
    }

    friend bool operator==(const WhittakerHomomorphism&, const WhittakerHomomorphism&) = default;

  private:
    Rational psi1_;
    Rational psi2_;
};

/// Either M_psi itself or M_psi / U(Vir) p(z) w for a monic p of degree >= 1.
/// L_{psi,xi} is the quotient by z - xi.
class ModuleContext {
  public:
    static ModuleContext universal(WhittakerHomomorphism psi) { return ModuleContext(std::move(psi), std::nullopt); }
    static ModuleContext poly_quotient(WhittakerHomomorphism psi, Poly p) {
        if (p.degree() < 1 || !p.is_monic())
            throw DomainError("quotient polynomial must be monic of degree >= 1, got " + p.to_string());
        return ModuleContext(std::move(psi), std::move(p));
    }
    static ModuleContext central(WhittakerHomomorphism psi, const Rational& xi) {
        return poly_quotient(std::move(psi), Poly::linear(xi));
    }

    const WhittakerHomomorphism& psi() const noexcept { return psi_; }
    bool is_universal() const noexcept { return !modulus_.has_value(); }
    /// The annihilating polynomial; only meaningful for quotients.
    const Poly& modulus() const {
        if (!modulus_) throw DomainError("universal module has no annihilating polynomial");
        return *modulus_;
    }
    /// Number of z-powers kept per pseudopartition, unbounded for M_psi.
    std::optional<unsigned> z_rank() const {
        if (!modulus_) return std::nullopt;
        return static_cast<unsigned>(modulus_->degree());
    }

    /// Representative of z^t modulo p (or z^t itself in M_psi).
    Poly reduce_z_power(unsigned t) const {
        if (!modulus_ || static_cast<Degree>(t) < modulus_->degree()) return Poly::monomial(Rational(1), t);
        if (modulus_->degree() == 1) return Poly(-modulus_->coeff(0)).pow(t);
        return poly_rem(Poly::monomial(Rational(1), t), *modulus_);
    }

    /// `M`, `L:xi=<r>` or `Q:p=<poly>`.
    std::string descriptor() const {
        if (!modulus_) return "M";
        if (modulus_->degree() == 1) return "L:xi=" + (-modulus_->coeff(0)).to_string();
        return "Q:p=" + modulus_->to_string();
    }

    friend bool operator==(const ModuleContext&, const ModuleContext&) = default;

  private:
    ModuleContext(WhittakerHomomorphism psi, std::optional<Poly> modulus)
        : psi_(std::move(psi)), modulus_(std::move(modulus)) {}

    WhittakerHomomorphism psi_;
    std::optional<Poly> modulus_;
};

/// Index of the basis vector z^t d_{-lambda} w.
struct BasisKey {
    Pseudopartition lambda;
    unsigned z = 0;

    friend bool operator==(const BasisKey&, const BasisKey&) = default;
    // Highest degree first, then descending lambda, then ascending z.
    friend std::strong_ordering operator<=>(const BasisKey& a, const BasisKey& b) {
        if (auto c = b.lambda <=> a.lambda; c != 0) return c;
        return a.z <=> b.z;
    }

    /// The ordered word of d_{-lambda} = ... d_{-2}^{l(2)} d_{-1}^{l(1)} d_0^{l(0)}.
    std::vector<int> word() const {
        std::vector<int> out;
        for (std::size_t k = lambda.span(); k-- > 0;) out.insert(out.end(), lambda.count(static_cast<unsigned>(k)), -static_cast<int>(k));
        return out;
    }

    std::string body() const {
        PBWMonomial m{z, word()};
        std::string b = m.body();
        return b.empty() ? "w" : b + "*w";
    }
};

class ModuleElement {
  public:
    using Terms = std::map<BasisKey, Rational>;

    explicit ModuleElement(ModuleContext ctx) : ctx_(std::move(ctx)) {}

    /// The cyclic Whittaker vector w (or its image).
    static ModuleElement generator(const ModuleContext& ctx, const Rational& c = Rational(1)) {
        return basis(ctx, Pseudopartition(), 0, c);
    }
    static ModuleElement basis(const ModuleContext& ctx, Pseudopartition lambda, unsigned t, const Rational& c = Rational(1)) {
        ModuleElement v(ctx);
        v.add(std::move(lambda), t, c);
        return v;
    }

    const ModuleContext& context() const noexcept { return ctx_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coeff(const Pseudopartition& lambda, unsigned t) const {
        auto it = terms_.find(BasisKey{lambda, t});
        return it == terms_.end() ? Rational() : it->second;
    }

    /// Adds c z^t d_{-lambda} w, reducing z^t modulo p in quotients.
    void add(const Pseudopartition& lambda, unsigned t, const Rational& c) {
        if (c.is_zero()) return;
        const auto rank = ctx_.z_rank();
        if (!rank || t < *rank) {
            add_raw(BasisKey{lambda, t}, c);
            return;
        }
        const Poly r = ctx_.reduce_z_power(t);
        for (std::size_t s = 0; s < r.coefficients().size(); ++s)
            add_raw(BasisKey{lambda, static_cast<unsigned>(s)}, c * r.coefficients()[s]);
    }

    void add_scaled(const ModuleElement& o, const Rational& c, unsigned zshift = 0) {
        check_context(o);
        if (c.is_zero()) return;
        for (const auto& [k, v] : o.terms_) add(k.lambda, k.z + zshift, v * c);
    }

    /// The S(z)-action: q(z) * this.
    ModuleElement times_poly(const Poly& q) const {
        ModuleElement out(ctx_);
        for (std::size_t s = 0; s < q.coefficients().size(); ++s)
            out.add_scaled(*this, q.coefficients()[s], static_cast<unsigned>(s));
        return out;
    }

    /// Coefficient polynomial in z attached to each pseudopartition.
    std::map<Pseudopartition, Poly> by_pseudopartition() const {
        std::map<Pseudopartition, std::vector<Rational>> acc;
        for (const auto& [k, c] : terms_) {
            auto& v = acc[k.lambda];
            if (v.size() <= k.z) v.resize(k.z + 1);
            v[k.z] = c;
        }
        std::map<Pseudopartition, Poly> out;
        for (auto& [l, v] : acc) out.emplace(l, Poly(std::move(v)));
        return out;
    }

    ModuleElement& operator+=(const ModuleElement& o) { add_scaled(o, Rational(1)); return *this; }
    ModuleElement& operator-=(const ModuleElement& o) { add_scaled(o, Rational(-1)); return *this; }
    ModuleElement& operator*=(const Rational& c) {
        if (c.is_zero()) terms_.clear();
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
    friend ModuleElement operator*(const Rational& c, ModuleElement a) { return a *= c; }
    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) detail::append_term(out, c, k.body());
        return out;
    }

  private:
    void add_raw(const BasisKey& key, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void check_context(const ModuleElement& o) const {
        if (!(o.ctx_ == ctx_)) throw DomainError("module elements from different contexts (" + ctx_.descriptor() + " vs " +
                                                 o.ctx_.descriptor() + ")");
    }

    ModuleContext ctx_;
    Terms terms_;
};

/// Image of the PBW-ordered element u under u -> u w in the given module:
/// trailing positive modes evaluate through psi, the rest is a basis vector.
inline ModuleElement map_from_universal(const UEAElement& u, const ModuleContext& target) {
    ModuleElement out(target);
    const auto& psi = target.psi();
    for (const auto& [m, c] : u.terms()) {
        Rational scale = c;
        Pseudopartition lambda;
        for (int k : m.word) {
            if (k > 0) scale *= psi(k);
            else lambda.add(static_cast<unsigned>(-k));
        }
        if (!m.is_ordered()) throw std::invalid_argument("map_from_universal: element not in PBW order");
        out.add(lambda, m.z, scale);
    }
    return out;
}

/// d_j acting on v.
inline ModuleElement act_generator(int j, const ModuleElement& v) {
    ModuleElement out(v.context());
    const auto& psi = v.context().psi();
    std::vector<int> word;
    for (const auto& [key, c] : v.terms()) {
        word.assign(1, j);
        const auto tail = key.word();
        word.insert(word.end(), tail.begin(), tail.end());
        for (const auto& [m, c2] : normal_order(word).terms()) {
            Rational scale = c * c2;
            Pseudopartition lambda;
            for (int k : m.word) {
                if (k > 0) scale *= psi(k);
                else lambda.add(static_cast<unsigned>(-k));
            }
            out.add(lambda, key.z + m.z, scale);
        }
    }
    return out;
}

/// The module action u . v, applying the generators of each monomial of u
/// from right to left.
inline ModuleElement act(const UEAElement& u, const ModuleElement& v) {
    ModuleElement out(v.context());
    for (const auto& [m, c] : u.terms()) {
        ModuleElement cur = v;
        for (auto it = m.word.rbegin(); it != m.word.rend() && !cur.is_zero(); ++it) cur = act_generator(*it, cur);
        out.add_scaled(cur, c, m.z);
    }
    return out;
}

/// Image of v under the quotient map into `target` (z-powers reduced mod p).
inline ModuleElement reduce_into(const ModuleElement& v, const ModuleContext& target) {
    if (!(v.context().psi() == target.psi())) throw DomainError("reduce_into: psi mismatch");
    ModuleElement out(target);
    for (const auto& [k, c] : v.terms()) out.add(k.lambda, k.z, c);
    return out;
}

inline Degree maxdeg(const ModuleElement& v) {
    Degree d = kMinusInfinity;
    for (const auto& [k, c] : v.terms()) d = std::max(d, static_cast<Degree>(k.lambda.size()));
    return d;
}

inline Degree max_d0(const ModuleElement& v) {
    Degree d = kMinusInfinity;
    for (const auto& [k, c] : v.terms()) d = std::max(d, static_cast<Degree>(k.lambda.count(0)));
    return d;
}

/// d_n . v = d_n v - psi(d_n) v
inline ModuleElement dot_act(int n, const ModuleElement& v) {
    if (n < 1) throw DomainError("dot action is defined for d_n with n >= 1, got n=" + std::to_string(n));
    ModuleElement out = act_generator(n, v);
    out.add_scaled(v, -v.context().psi()(n));
    return out;
}

/// d1 and d2 generate n+, so checking them suffices. Zero counts as a
/// (trivial) Whittaker vector.
inline bool is_whittaker_vector(const ModuleElement& v) {
    return dot_act(1, v).is_zero() && dot_act(2, v).is_zero();
}

/// (maxdeg, largest d_0 exponent among the terms of maximal degree).
struct ReductionMeasure {
    Degree maxdeg = kMinusInfinity;
    Degree top_d0 = kMinusInfinity;

    friend bool operator==(const ReductionMeasure&, const ReductionMeasure&) = default;
    friend auto operator<=>(const ReductionMeasure&, const ReductionMeasure&) = default;
};

inline ReductionMeasure reduction_measure(const ModuleElement& v) {
    ReductionMeasure m;
    m.maxdeg = maxdeg(v);
    for (const auto& [k, c] : v.terms())
        if (static_cast<Degree>(k.lambda.size()) == m.maxdeg) m.top_d0 = std::max(m.top_d0, static_cast<Degree>(k.lambda.count(0)));
    return m;
}

struct ReductionStep {
    int op = 0;  // n in d_n - psi_n
    ReductionMeasure before;
    ReductionMeasure after;
};

struct ReductionResult {
    std::vector<ReductionStep> trace;
    ModuleElement result;
};

/// Drives a nonzero v to a nonzero Whittaker vector in U(Vir) v by repeatedly
/// applying d_{k+2} - psi_{k+2}, k the smallest part occurring among the
/// terms of maximal degree.
inline ReductionResult whittaker_reduce(const ModuleElement& v) {
    if (v.is_zero()) throw DomainError("whittaker_reduce needs a nonzero element");
    const Degree n0 = maxdeg(v), z0 = max_d0(v);
    const long cap = static_cast<long>(n0 + 1) * static_cast<long>(z0 + n0 + 2);

    ReductionResult out{{}, v};
    while (!is_whittaker_vector(out.result)) {
        if (static_cast<long>(out.trace.size()) >= cap)
            throw InternalError("whittaker_reduce exceeded its iteration cap of " + std::to_string(cap));
        const ReductionMeasure before = reduction_measure(out.result);
        std::optional<unsigned> k;
        for (const auto& [key, c] : out.result.terms()) {
            if (static_cast<Degree>(key.lambda.size()) != before.maxdeg || key.lambda.empty()) continue;
            const unsigned part = key.lambda.min_part();
            if (!k || part < *k) k = part;
        }
        if (!k) throw InternalError("non-Whittaker element without d_{-lambda} terms: " + out.result.to_string());
        const int op = static_cast<int>(*k) + 2;
        ModuleElement next = dot_act(op, out.result);
        const ReductionMeasure after = reduction_measure(next);
        if (next.is_zero() || !(after < before))
            throw InternalError("reduction measure did not decrease applying d" + std::to_string(op) + " to " +
                                out.result.to_string());
        out.trace.push_back({op, before, after});
        out.result = std::move(next);
    }
    return out;
}

struct NilpotencyResult {
    unsigned index = 0;        // least k with (d_n - psi_n)^k d_{-lambda} w = 0
    unsigned bound = 0;  // least k with n k > |lambda| + 2 #(lambda)
};

/// Nilpotency index of d_n under the dot action on d_{-lambda} w in M_psi.
inline NilpotencyResult nilpotency_index(int n, const Pseudopartition& lambda, const WhittakerHomomorphism& psi) {
    if (n < 1) throw DomainError("nilpotency index needs n >= 1");
    const unsigned excess = lambda.size() + 2 * lambda.parts();
    NilpotencyResult r;
    r.bound = excess / static_cast<unsigned>(n) + 1;
    const auto ctx = ModuleContext::universal(psi);
    ModuleElement cur = ModuleElement::basis(ctx, lambda, 0);
    const unsigned limit = 2 * r.bound + 8;
    while (!cur.is_zero()) {
        if (r.index >= limit) throw InternalError("dot action of d" + std::to_string(n) + " not nilpotent on " + lambda.to_string());
        cur = dot_act(n, cur);
        ++r.index;
    }
    return r;
}

}  // namespace vira
