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

// Structural procedures over Whittaker modules: the Whittaker-vector
// solver, degree and leading-term verifiers, dot-orbits, the primary decomposition of cyclic
// Whittaker modules, composition series, annihilator normal forms and the
// freeness check for submodules of M_psi.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "vira/linalg.hpp"
#include "vira/partitions.hpp"
#include "vira/scalar.hpp"
#include "vira/virasoro.hpp"
#include "vira/whittaker.hpp"

namespace vira {

/// Finite window of basis vectors z^t d_{-lambda} w: |lambda| <= max_degree,
/// lambda(0) <= max_zero_count, t <= max_z_power (quotients use t < deg p).
struct TruncationSpec {
    unsigned max_degree = 0;
    unsigned max_zero_count = 0;
    unsigned max_z_power = 0;
};

inline std::vector<BasisKey> truncated_basis(const ModuleContext& ctx, const TruncationSpec& trunc) {
    const unsigned zcount = ctx.z_rank().value_or(trunc.max_z_power + 1);
    std::vector<BasisKey> out;
    for (const auto& lambda : enumerate_up_to(trunc.max_degree, trunc.max_zero_count))
        for (unsigned t = 0; t < zcount; ++t) out.push_back({lambda, t});
    std::sort(out.begin(), out.end());
    return out;
}

inline SparseVector<BasisKey> coordinates(const ModuleElement& v) { return {v.terms().begin(), v.terms().end()}; }

/// Basis of the Whittaker vectors inside the span of the truncated basis.
/// The conditions d1.v = d2.v = 0 are imposed on the exact images.
inline std::vector<ModuleElement> whittaker_solve(const ModuleContext& ctx, const TruncationSpec& trunc) {
    const auto basis = truncated_basis(ctx, trunc);
    std::map<std::pair<int, BasisKey>, std::size_t> row_of;
    std::vector<SparseVector<std::size_t>> rows;
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto b = ModuleElement::basis(ctx, basis[col].lambda, basis[col].z);
        for (int n : {1, 2}) {
            const ModuleElement image = dot_act(n, b);
            for (const auto& [key, c] : image.terms()) {
                auto [it, inserted] = row_of.try_emplace({n, key}, rows.size());
                if (inserted) rows.emplace_back();
                rows[it->second][col] = c;
            }
        }
    }
    std::vector<ModuleElement> out;
    for (const auto& sol : sparse_nullspace(rows, basis.size())) {
        ModuleElement v(ctx);
        for (const auto& [col, c] : sol) v.add(basis[col].lambda, basis[col].z, c);
        out.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verifiers. Failure is a report outcome, never an exception.

struct LeadingTermReport {
    unsigned k = 0;
    unsigned a = 0;
    ModuleElement lhs;           // [d_{k+2}, d_{-k}^a] w
    Rational leading_coeff;      // -a (2k+2) psi2
    ModuleElement leading;       // leading_coeff * d_{-k}^{a-1} w
    ModuleElement remainder;     // lhs - leading
    Degree remainder_stat = kMinusInfinity;  // maxdeg (k > 0) or max_d0 (k = 0)
    Degree bound = 0;                        // k (a - 1) or a - 1, strict
    bool pass = false;
};

/// [d_{k+2}, d_{-k}^a] w = v - a (2k+2) psi2 d_{-k}^{a-1} w with
/// maxdeg(v) < k(a-1) for k > 0 and max_d0(v) < a-1 for k = 0.
inline LeadingTermReport verify_leading_term(unsigned k, unsigned a, const WhittakerHomomorphism& psi) {
    if (a == 0) throw DomainError("leading-term check needs a >= 1");
    const auto ctx = ModuleContext::universal(psi);
    Pseudopartition power;
    power.add(k, a);
    Pseudopartition lower;
    lower.add(k, a - 1);
    LeadingTermReport r{k, a, ModuleElement(ctx), Rational(), ModuleElement(ctx), ModuleElement(ctx)};
    r.lhs = dot_act(static_cast<int>(k) + 2, ModuleElement::basis(ctx, power, 0));
    r.leading_coeff = -Rational(static_cast<long>(a) * (2 * static_cast<long>(k) + 2)) * psi.psi2();
    r.leading = ModuleElement::basis(ctx, lower, 0, r.leading_coeff);
    r.remainder = r.lhs - r.leading;
    if (k > 0) {
        r.remainder_stat = maxdeg(r.remainder);
        r.bound = static_cast<Degree>(k * (a - 1));
    } else {
        r.remainder_stat = max_d0(r.remainder);
        r.bound = static_cast<Degree>(a - 1);
    }
    r.pass = r.remainder_stat < r.bound;
    return r;
}

struct DegreeBoundsReport {
    unsigned m = 0;
    Pseudopartition lambda;
    ModuleElement bracket;              // [d_m, d_{-lambda}] w
    Degree observed = kMinusInfinity;   // maxdeg of bracket
    Degree bound = 0;                   // |lambda| - m + 2
    bool part_i = false;
    bool part_ii_applies = false;       // m = k + 2, k the smallest part
    ModuleElement leading;
    ModuleElement remainder;
    bool part_ii = true;
    bool pass = false;
};

/// maxdeg([d_m, d_{-lambda}] w) <= |lambda| - m + 2, and, when m = k + 2 for
/// the smallest part k of lambda, the leading term
/// -lambda(k) psi2 (2k+2) d_{-lambda'} w with lambda' = lambda minus one k.
inline DegreeBoundsReport verify_degree_bounds(unsigned m, const Pseudopartition& lambda, const WhittakerHomomorphism& psi) {
    if (m == 0) throw DomainError("degree bounds need m >= 1");
    if (lambda.empty()) throw DomainError("degree bounds need lambda != 0-bar");
    const auto ctx = ModuleContext::universal(psi);
    DegreeBoundsReport r{m, lambda, ModuleElement(ctx), kMinusInfinity, 0, false, false, ModuleElement(ctx), ModuleElement(ctx)};
    r.bracket = dot_act(static_cast<int>(m), ModuleElement::basis(ctx, lambda, 0));
    r.observed = maxdeg(r.bracket);
    r.bound = static_cast<Degree>(lambda.size()) - static_cast<Degree>(m) + 2;
    r.part_i = r.observed <= r.bound;

    const unsigned k = lambda.min_part();
    r.part_ii_applies = (m == k + 2);
    if (r.part_ii_applies) {
        Pseudopartition reduced = lambda;
        reduced.remove(k);
        const Rational c = -Rational(static_cast<long>(lambda.count(k)) * (2 * static_cast<long>(k) + 2)) * psi.psi2();
        r.leading = ModuleElement::basis(ctx, reduced, 0, c);
        r.remainder = r.bracket - r.leading;
        const auto top = static_cast<Degree>(lambda.size() - k);
        if (k > 0) {
            r.part_ii = maxdeg(r.remainder) < top;
        } else {
            // v = v' + v'' with maxdeg(v') < |lambda| and max_d0(v'') < lambda(0) - 1
            const auto d0_bound = static_cast<Degree>(lambda.count(0)) - 1;
            r.part_ii = std::all_of(r.remainder.terms().begin(), r.remainder.terms().end(), [&](const auto& t) {
                return static_cast<Degree>(t.first.lambda.size()) < top ||
                       static_cast<Degree>(t.first.lambda.count(0)) < d0_bound;
            });
        }
    }
    r.pass = r.part_i && r.part_ii;
    return r;
}

struct DotSpanReport {
    unsigned n = 0;
    unsigned i = 0;
    Pseudopartition lambda;
    ModuleElement image;              // d_n . (z^i d_{-lambda} w)
    unsigned bound = 0;               // |lambda| + lambda(0)
    bool must_vanish = false;         // n > |lambda| + 2
    std::vector<BasisKey> violations;
    bool pass = false;
};

/// Every term z^j d_{-mu} w of d_n . (z^i d_{-lambda} w) has
/// |mu| + mu(0) <= |lambda| + lambda(0) and j in {i, i+1}; the image is 0
/// when n > |lambda| + 2.
inline DotSpanReport verify_dot_span(unsigned n, unsigned i, const Pseudopartition& lambda, const WhittakerHomomorphism& psi) {
    if (n == 0) throw DomainError("dot span check needs n >= 1");
    const auto ctx = ModuleContext::universal(psi);
    DotSpanReport r{n, i, lambda, ModuleElement(ctx), 0, false, {}, false};
    r.image = dot_act(static_cast<int>(n), ModuleElement::basis(ctx, lambda, i));
    r.bound = lambda.size() + lambda.count(0);
    r.must_vanish = n > lambda.size() + 2;
    for (const auto& [key, c] : r.image.terms()) {
        const bool ok = key.lambda.size() + key.lambda.count(0) <= r.bound && (key.z == i || key.z == i + 1);
        if (!ok) r.violations.push_back(key);
    }
    r.pass = r.violations.empty() && (!r.must_vanish || r.image.is_zero());
    return r;
}

struct OrbitResult {
    std::size_t dimension = 0;
    std::vector<ModuleElement> spanning_set;
};

/// Dimension of U(n+) . v under the dot action. Only d_n with
/// n <= maxdeg + 2 can act nontrivially on an element.
inline OrbitResult dot_orbit_dimension(const ModuleElement& v) {
    if (v.is_zero()) throw DomainError("dot orbit needs a nonzero element");
    Echelon<BasisKey> span;
    OrbitResult out;
    span.insert(coordinates(v));
    out.spanning_set.push_back(v);
    for (std::size_t next = 0; next < out.spanning_set.size(); ++next) {
        const ModuleElement x = out.spanning_set[next];
        const Degree cutoff = maxdeg(x) + 2;
        for (int n = 1; n <= cutoff; ++n) {
            ModuleElement y = dot_act(n, x);
            if (!y.is_zero() && span.insert(coordinates(y))) out.spanning_set.push_back(std::move(y));
        }
    }
    out.dimension = out.spanning_set.size();
    return out;
}

// ---------------------------------------------------------------------------
// Cyclic Whittaker modules with annihilator p(z).

struct DecompositionComponent {
    Rational root;
    unsigned multiplicity = 0;   // composition length of the component
    Poly cofactor;               // p_j = prod_{i != j} (z - xi_i)^{a_i}
    Poly bezout;                 // q_j, with sum_j q_j p_j = 1
    ModuleElement generator;     // w_j = p_j(z) w
    std::size_t window_rank = 0; // dimension of U(Vir) w_j inside the window
};

struct DecompositionReport {
    Poly modulus;
    TruncationSpec window;
    std::vector<DecompositionComponent> components;
    bool bezout_identity = false;      // sum q_j p_j = 1 exactly
    bool cross_annihilation = false;   // p_j w_i = 0 for i != j
    bool idempotence = false;          // w_i = q_i p_i w_i
    bool annihilators = false;         // Ann_{S(z)}(w_j) = (z - xi_j)^{a_j}
    std::size_t ambient_dimension = 0; // truncated dimension of M_psi / p
    std::size_t union_rank = 0;
    bool dimensions_add = false;
    bool pass = false;
};

/// V = M_psi / U(Vir) p(z) w splits as the direct sum of U(Vir) p_j(z) w.
inline DecompositionReport decompose(const WhittakerHomomorphism& psi, const Poly& p,
                                     const TruncationSpec& window = {3, 1, 0}) {
    const auto factors = poly_linear_factorization(p);
    const auto ctx = ModuleContext::poly_quotient(psi, p);
    const auto w = ModuleElement::generator(ctx);
    DecompositionReport r{p, window, {}};

    for (std::size_t j = 0; j < factors.size(); ++j) {
        Poly cofactor(1);
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (i != j) cofactor *= Poly::linear(factors[i].root).pow(factors[i].multiplicity);
        const Poly local = Poly::linear(factors[j].root).pow(factors[j].multiplicity);
        // q_j inverts p_j modulo (z - xi_j)^{a_j}; deg q_j < a_j makes the sum exact.
        const Bezout bz = poly_ext_gcd(cofactor, local);
        if (!(bz.gcd == Poly(1))) throw InternalError("cofactor not coprime to its local factor");
        const Poly q = poly_rem(bz.s, local);
        r.components.push_back({factors[j].root, factors[j].multiplicity, cofactor, q, w.times_poly(cofactor)});
    }

    Poly sum;
    for (const auto& c : r.components) sum += c.bezout * c.cofactor;
    r.bezout_identity = sum == Poly(1);

    r.cross_annihilation = true;
    r.idempotence = true;
    r.annihilators = true;
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        const auto& ci = r.components[i];
        for (std::size_t j = 0; j < r.components.size(); ++j)
            if (i != j && !ci.generator.times_poly(r.components[j].cofactor).is_zero()) r.cross_annihilation = false;
        if (!(ci.generator.times_poly(ci.bezout * ci.cofactor) == ci.generator)) r.idempotence = false;
        const Poly lin = Poly::linear(ci.root);
        if (!ci.generator.times_poly(lin.pow(ci.multiplicity)).is_zero() ||
            ci.generator.times_poly(lin.pow(ci.multiplicity - 1)).is_zero())
            r.annihilators = false;
    }

    // U(Vir) w_j meets the window in span{z^t d_{-lambda} w_j}.
    const auto lambdas = enumerate_up_to(window.max_degree, window.max_zero_count);
    const auto deg = static_cast<unsigned>(p.degree());
    r.ambient_dimension = lambdas.size() * deg;
    Echelon<BasisKey> all;
    std::size_t rank_sum = 0;
    bool local_dims = true;
    for (auto& c : r.components) {
        Echelon<BasisKey> part;
        for (const auto& lambda : lambdas) {
            const ModuleElement shifted = act(UEAElement::monomial({0, BasisKey{lambda, 0}.word()}), c.generator);
            for (unsigned t = 0; t < deg; ++t) {
                const auto coords = coordinates(shifted.times_poly(Poly::monomial(Rational(1), t)));
                part.insert(coords);
                all.insert(coords);
            }
        }
        c.window_rank = part.rank();
        rank_sum += c.window_rank;
        // the truncated dimension of M_psi / (z - xi_j)^{a_j}
        if (c.window_rank != lambdas.size() * c.multiplicity) local_dims = false;
    }
    r.union_rank = all.rank();
    r.dimensions_add = local_dims && rank_sum == r.ambient_dimension && r.union_rank == r.ambient_dimension;
    r.pass = r.bezout_identity && r.cross_annihilation && r.idempotence && r.annihilators && r.dimensions_add;
    return r;
}

/// Coefficients of f in powers of (z - xi).
inline Poly taylor_shift(const Poly& f, const Rational& xi) {
    Poly g;
    const Poly y_plus_xi({xi, Rational(1)});
    for (std::size_t k = f.coefficients().size(); k-- > 0;) g = g * y_plus_xi + Poly(f.coefficients()[k]);
    return g;
}

struct CompositionSeriesReport {
    Rational xi;
    unsigned length = 0;
    TruncationSpec window;
    std::vector<ModuleElement> generators;   // w_i = (z - xi)^i w, i = 0..a
    bool generators_nonzero = false;         // w_i != 0 for i < a
    bool terminal_zero = false;              // w_a = 0
    std::vector<bool> strict;                // w_i not in the window of V_{i+1}
    std::vector<std::size_t> quotient_whittaker_dims;
    bool pass = false;
};

namespace detail {

// Whittaker vectors of V_i / V_{i+1} inside M_psi / (z - xi)^a, searched among
// representatives sum c_lambda (z - xi)^i d_{-lambda} w. Membership of the
// images in V_{i+1} means every (z - xi)-adic digit below i+1 vanishes.
inline std::size_t layer_whittaker_dimension(const ModuleContext& ctx, const Rational& xi, unsigned i,
                                             const std::vector<Pseudopartition>& lambdas) {
    const Poly shift = Poly::linear(xi).pow(i);
    std::map<std::tuple<int, Pseudopartition, unsigned>, std::size_t> row_of;
    std::vector<SparseVector<std::size_t>> rows;
    for (std::size_t col = 0; col < lambdas.size(); ++col) {
        const auto rep = ModuleElement::basis(ctx, lambdas[col], 0).times_poly(shift);
        for (int n : {1, 2}) {
            for (const auto& [mu, f] : dot_act(n, rep).by_pseudopartition()) {
                const Poly digits = taylor_shift(f, xi);
                for (unsigned s = 0; s <= i; ++s) {
                    const Rational c = digits.coeff(s);
                    if (c.is_zero()) continue;
                    auto [it, inserted] = row_of.try_emplace({n, mu, s}, rows.size());
                    if (inserted) rows.emplace_back();
                    rows[it->second][col] = c;
                }
            }
        }
    }
    return sparse_nullspace(rows, lambdas.size()).size();
}

}  // namespace detail

/// V = M_psi / (z - xi)^a w with V_i = U(Vir)(z - xi)^i w.
inline CompositionSeriesReport composition_series(const WhittakerHomomorphism& psi, const Rational& xi, unsigned a,
                                                  const TruncationSpec& window = {4, 2, 0}) {
    if (a == 0) throw DomainError("composition series needs a >= 1");
    const Poly lin = Poly::linear(xi);
    const auto ctx = ModuleContext::poly_quotient(psi, lin.pow(a));
    const auto w = ModuleElement::generator(ctx);
    CompositionSeriesReport r{xi, a, window, {}, false, false, {}, {}};
    for (unsigned i = 0; i <= a; ++i) r.generators.push_back(w.times_poly(lin.pow(i)));
    r.generators_nonzero = std::none_of(r.generators.begin(), r.generators.end() - 1, [](const auto& g) { return g.is_zero(); });
    r.terminal_zero = r.generators.back().is_zero();

    const auto lambdas = enumerate_up_to(window.max_degree, window.max_zero_count);
    for (unsigned i = 0; i < a; ++i) {
        Echelon<BasisKey> next;
        for (const auto& lambda : lambdas) {
            const ModuleElement shifted = act(UEAElement::monomial({0, BasisKey{lambda, 0}.word()}), r.generators[i + 1]);
            for (unsigned t = 0; t < a; ++t) next.insert(coordinates(shifted.times_poly(Poly::monomial(Rational(1), t))));
        }
        r.strict.push_back(!next.contains(coordinates(r.generators[i])));
        r.quotient_whittaker_dims.push_back(detail::layer_whittaker_dimension(ctx, xi, i, lambdas));
    }
    r.pass = r.generators_nonzero && r.terminal_zero &&
             std::all_of(r.strict.begin(), r.strict.end(), [](bool b) { return b; }) &&
             std::all_of(r.quotient_whittaker_dims.begin(), r.quotient_whittaker_dims.end(), [](std::size_t d) { return d == 1; });
    return r;
}

struct AnnihilatorForm {
    UEAElement u0;                      // coefficient of p(z)
    std::map<int, UEAElement> tail;     // i -> u_i, coefficient of (d_i - psi_i)
    UEAElement residual;                // in span{z^t d_{-lambda} : t < deg p}
};

/// Writes u = u0 p(z) + sum_i u_i (d_i - psi_i) + residual in U(Vir).
inline AnnihilatorForm annihilator_normal_form(const UEAElement& u, const WhittakerHomomorphism& psi, const Poly& p) {
    if (p.degree() < 1 || !p.is_monic()) throw DomainError("annihilator normal form needs monic p of degree >= 1");
    AnnihilatorForm out;
    for (const auto& [m, c] : u.terms()) {
        const auto split = std::find_if(m.word.begin(), m.word.end(), [](int k) { return k > 0; });
        std::vector<int> prefix(m.word.begin(), m.word.end());
        Rational coeff = c;
        // peel d_j = (d_j - psi_j) + psi_j from the right
        while (prefix.size() > static_cast<std::size_t>(split - m.word.begin())) {
            const int j = prefix.back();
            prefix.pop_back();
            out.tail[j].add({m.z, prefix}, coeff);
            coeff *= psi(j);
            if (coeff.is_zero()) break;
        }
        if (coeff.is_zero()) continue;
        auto [quot, rem] = poly_divmod(Poly::monomial(Rational(1), m.z), p);
        for (std::size_t s = 0; s < quot.coefficients().size(); ++s)
            out.u0.add({static_cast<unsigned>(s), prefix}, coeff * quot.coefficients()[s]);
        for (std::size_t s = 0; s < rem.coefficients().size(); ++s)
            out.residual.add({static_cast<unsigned>(s), prefix}, coeff * rem.coefficients()[s]);
    }
    for (auto it = out.tail.begin(); it != out.tail.end();) it = it->second.is_zero() ? out.tail.erase(it) : std::next(it);
    return out;
}

/// u0 p + sum u_i (d_i - psi_i) + residual, straightened.
inline UEAElement reexpand(const AnnihilatorForm& f, const WhittakerHomomorphism& psi, const Poly& p) {
    UEAElement out = multiply(f.u0, UEAElement::from_poly(p));
    for (const auto& [i, ui] : f.tail) out += multiply(ui, UEAElement::generator(i) - UEAElement(psi(i)));
    return out + f.residual;
}

struct FreenessReport {
    Poly q;
    TruncationSpec window;
    std::size_t vectors = 0;
    std::size_t rank = 0;
    bool pass = false;
};

/// The vectors z^t d_{-lambda} (q(z) w) over the window are linearly
/// independent in M_psi, so U(Vir) q(z) w is free on the PBW basis shape.
inline FreenessReport verify_submodule_free(const WhittakerHomomorphism& psi, const Poly& q, const TruncationSpec& trunc) {
    if (q.is_zero()) throw DomainError("submodule freeness needs q != 0");
    const auto ctx = ModuleContext::universal(psi);
    const auto gen = ModuleElement::generator(ctx).times_poly(q);
    FreenessReport r{q, trunc};
    Echelon<BasisKey> span;
    for (const auto& key : truncated_basis(ctx, trunc)) {
        const auto image = act(UEAElement::monomial({key.z, key.word()}), gen);
        span.insert(coordinates(image));
        ++r.vectors;
    }
    r.rank = span.rank();
    r.pass = r.rank == r.vectors;
    return r;
}

}  // namespace vira
