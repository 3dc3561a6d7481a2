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

// The acceptance grid: thirteen exact checks over seeded samples, shared by
// `vira verify all` and the acceptance test binary.

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vira/analysis.hpp"
#include "vira/expression.hpp"
#include "vira/sampling.hpp"
#include "vira/witt.hpp"

namespace vira::acceptance {

struct Emitted {
    enum class Kind { Algebra, Vector, Polynomial };
    Kind kind = Kind::Algebra;
    std::string text;
    std::optional<ModuleContext> context;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool checks_pass = false;
    double seconds = 0;
    double limit = 0;
    std::size_t cases = 0;
    std::string detail;  // first failing case, if any

    bool pass() const { return checks_pass && seconds < limit; }
};

/// Runs the CLI on an argument vector and returns its exit code.
using ExitProbe = std::function<int(const std::vector<std::string>&)>;

struct Options {
    std::uint64_t seed = 20240917;
    std::set<int> only;  // empty: all criteria
};

inline const std::vector<std::pair<int, std::string>>& criteria() {
    static const std::vector<std::pair<int, std::string>> list{
        {1, "cocycle soundness"},       {2, "PBW/action coherence"},    {3, "leading-term grid"},
        {4, "degree-bounds grid"},      {5, "Whittaker dimensions"},     {6, "local nilpotency"},
        {7, "vanishing bound"},         {8, "constructive simplicity"}, {9, "decomposition"},
        {10, "composition series"},     {11, "annihilator"},             {12, "Witt quotient"},
        {13, "CLI round-trip and exit codes"}};
    return list;
}

namespace detail {

class Tally {
  public:
    void check(bool ok, const std::function<std::string()>& describe) {
        ++cases_;
        if (!ok && failure_.empty()) failure_ = describe();
    }
    bool ok() const { return failure_.empty(); }
    std::size_t cases() const { return cases_; }
    const std::string& failure() const { return failure_; }

  private:
    std::size_t cases_ = 0;
    std::string failure_;
};

inline Rational rat(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

inline std::vector<WhittakerHomomorphism> psi_samples() {
    return {WhittakerHomomorphism(rat(1), rat(1)), WhittakerHomomorphism(rat(2), rat(-3, 2))};
}

inline std::string psi_text(const WhittakerHomomorphism& psi) {
    return "psi=(" + psi.psi1().to_string() + "," + psi.psi2().to_string() + ")";
}

}  // namespace detail

class Suite {
  public:
    Suite(Options options, ExitProbe probe) : options_(std::move(options)), probe_(std::move(probe)) {}

    std::vector<CriterionResult> run() {
        std::vector<CriterionResult> out;
        for (const auto& [id, title] : criteria()) {
            if (!options_.only.empty() && !options_.only.count(id)) continue;
            CriterionResult r;
            r.id = id;
            r.title = title;
            r.limit = kLimits[static_cast<std::size_t>(id - 1)];
            detail::Tally tally;
            const auto start = std::chrono::steady_clock::now();
            try {
                dispatch(id, tally);
            } catch (const std::exception& e) {
                tally.check(false, [&] { return std::string("exception: ") + e.what(); });
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            r.checks_pass = tally.ok();
            r.cases = tally.cases();
            r.detail = tally.failure();
            if (r.checks_pass && r.seconds >= r.limit)
                r.detail = "exceeded time limit of " + std::to_string(static_cast<int>(r.limit)) + " s";
            out.push_back(std::move(r));
        }
        return out;
    }

    const std::vector<Emitted>& emitted() const noexcept { return emitted_; }

  private:
    static constexpr double kLimits[13] = {5, 20, 10, 15, 30, 10, 5, 20, 5, 10, 10, 5, 10};

    sampling::Rng rng(int id) const { return sampling::Rng(options_.seed + static_cast<std::uint64_t>(id)); }

    void emit(const UEAElement& u) { emitted_.push_back({Emitted::Kind::Algebra, u.to_string(), std::nullopt}); }
    void emit(const ModuleElement& v) { emitted_.push_back({Emitted::Kind::Vector, v.to_string(), v.context()}); }
    void emit(const Poly& p) { emitted_.push_back({Emitted::Kind::Polynomial, p.to_string(), std::nullopt}); }

    void dispatch(int id, detail::Tally& t) {
        switch (id) {
            case 1: return cocycle(t);
            case 2: return coherence(t);
            case 3: return leading_terms(t);
            case 4: return degree_bounds(t);
            case 5: return dimensions(t);
            case 6: return nilpotency(t);
            case 7: return vanishing(t);
            case 8: return simplicity(t);
            case 9: return decomposition(t);
            case 10: return series(t);
            case 11: return annihilator(t);
            case 12: return witt(t);
            case 13: return cli(t);
            default: throw InternalError("unknown criterion " + std::to_string(id));
        }
    }

    void cocycle(detail::Tally& t) {
        const auto d = [](int k) { return UEAElement::generator(k); };
        for (int i = -6; i <= 6; ++i)
            for (int j = -6; j <= 6; ++j)
                for (int k = -6; k <= 6; ++k) {
                    const UEAElement jac = commutator(d(i), bracket(j, k)) + commutator(d(j), bracket(k, i)) +
                                           commutator(d(k), bracket(i, j));
                    t.check(jac.is_zero(), [&] { return "Jacobi fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                                        std::to_string(k) + "): " + jac.to_string(); });
                }
        for (int i = -8; i <= 8; ++i)
            for (int j = -8; j <= 8; ++j) {
                const UEAElement straight = commutator(d(i), d(j));
                emit(straight);
                emit(multiply(d(i), d(j)));
                t.check((bracket(i, j) + bracket(j, i)).is_zero() && straight == bracket(i, j),
                        [&] { return "antisymmetry fails at (" + std::to_string(i) + "," + std::to_string(j) + ")"; });
            }
    }

    void coherence(detail::Tally& t) {
        auto r = rng(2);
        for (const auto& psi : detail::psi_samples()) {
            const std::vector<ModuleContext> contexts{ModuleContext::universal(psi), ModuleContext::central(psi, Rational(0)),
                                                      ModuleContext::central(psi, detail::rat(5, 7))};
            for (const auto& ctx : contexts)
                for (int s = 0; s < 200; ++s) {
                    const UEAElement u = sampling::random_uea(r, 2, 4, -3, 3, 1);
                    const UEAElement v = sampling::random_uea(r, 2, 4, -3, 3, 1);
                    const ModuleElement m = sampling::random_module_element(r, ctx, 2, 3, 1, 1);
                    const ModuleElement lhs = act(multiply(u, v), m);
                    const ModuleElement rhs = act(u, act(v, m));
                    if (s % 20 == 0) emit(lhs), emit(u);
                    t.check(lhs == rhs, [&] {
                        return ctx.descriptor() + " " + detail::psi_text(psi) + ": u=" + u.to_string() + " v=" + v.to_string() +
                               " m=" + m.to_string();
                    });
                }
        }
    }

    void leading_terms(detail::Tally& t) {
        for (const auto& psi : detail::psi_samples())
            for (unsigned k = 0; k <= 4; ++k)
                for (unsigned a = 1; a <= 4; ++a) {
                    const auto rep = verify_leading_term(k, a, psi);
                    Pseudopartition lower;
                    lower.add(k, a - 1);
                    const Rational expected = -Rational(static_cast<long>(a * (2 * k + 2))) * psi.psi2();
                    emit(rep.lhs);
                    emit(rep.remainder);
                    t.check(rep.pass && rep.lhs.coeff(lower, 0) == expected, [&] {
                        return "k=" + std::to_string(k) + " a=" + std::to_string(a) + " " + detail::psi_text(psi) +
                               ": lhs=" + rep.lhs.to_string();
                    });
                }
    }

    void degree_bounds(detail::Tally& t) {
        for (const auto& psi : detail::psi_samples())
            for (const auto& lambda : enumerate_up_to(6, 2)) {
                if (lambda.empty()) continue;
                for (unsigned m = 1; m <= 8; ++m) {
                    const auto rep = verify_degree_bounds(m, lambda, psi);
                    if (rep.part_ii_applies) emit(rep.remainder);
                    t.check(rep.pass, [&] {
                        return "m=" + std::to_string(m) + " lambda=" + lambda.to_string() + " " + detail::psi_text(psi) +
                               ": bracket=" + rep.bracket.to_string();
                    });
                }
                // part (ii) is exercised at m = k + 2 for every lambda
                const auto rep = verify_degree_bounds(lambda.min_part() + 2, lambda, psi);
                t.check(rep.part_ii_applies && rep.part_ii, [&] { return "part (ii) at lambda=" + lambda.to_string(); });
            }
    }

    void dimensions(detail::Tally& t) {
        const Poly z1 = Poly::linear(Rational(1));
        const std::vector<Poly> moduli{z1.pow(2), z1 * Poly::linear(Rational(2)), z1.pow(2) * Poly::linear(Rational(-3))};
        for (const auto& psi : detail::psi_samples())
            for (unsigned N = 3; N <= 5; ++N)
                for (unsigned Z = 1; Z <= 2; ++Z) {
                    auto expect = [&](const ModuleContext& ctx, unsigned T, std::size_t dim) {
                        const auto sols = whittaker_solve(ctx, {N, Z, T});
                        bool ok = sols.size() == dim;
                        for (const auto& v : sols) {
                            ok = ok && is_whittaker_vector(v);
                            emit(v);
                        }
                        t.check(ok, [&] {
                            return ctx.descriptor() + " N=" + std::to_string(N) + " Z=" + std::to_string(Z) + " T=" +
                                   std::to_string(T) + ": dimension " + std::to_string(sols.size()) + ", expected " +
                                   std::to_string(dim);
                        });
                    };
                    for (unsigned T = 0; T <= 3; ++T) expect(ModuleContext::universal(psi), T, T + 1);
                    for (const auto& xi : {Rational(0), detail::rat(5, 7)}) expect(ModuleContext::central(psi, xi), 0, 1);
                    for (const auto& p : moduli)
                        expect(ModuleContext::poly_quotient(psi, p), 0, static_cast<std::size_t>(p.degree()));
                }
    }

    void nilpotency(detail::Tally& t) {
        for (const auto& psi : detail::psi_samples()) {
            const auto ctx = ModuleContext::universal(psi);
            for (const auto& lambda : enumerate_up_to(4, 2))
                for (int n = 1; n <= 4; ++n) {
                    const unsigned x = lambda.size() + 2 * lambda.parts();
                    const unsigned bound = (x + static_cast<unsigned>(n) - 1) / static_cast<unsigned>(n) + 1;
                    const auto res = nilpotency_index(n, lambda, psi);
                    ModuleElement power = ModuleElement::basis(ctx, lambda, 0);
                    for (unsigned s = 0; s < bound; ++s) power = dot_act(n, power);
                    t.check(res.index <= bound && power.is_zero(), [&] {
                        return "n=" + std::to_string(n) + " lambda=" + lambda.to_string() + ": index " +
                               std::to_string(res.index) + " > bound " + std::to_string(bound);
                    });
                }
        }
    }

    void vanishing(detail::Tally& t) {
        for (const auto& psi : detail::psi_samples()) {
            const auto ctx = ModuleContext::universal(psi);
            for (const auto& lambda : enumerate_up_to(4, 2))
                for (unsigned i = 0; i <= 2; ++i)
                    for (unsigned n = lambda.size() + 3; n <= lambda.size() + 6; ++n) {
                        const ModuleElement image = dot_act(static_cast<int>(n), ModuleElement::basis(ctx, lambda, i));
                        t.check(image.is_zero(), [&] {
                            return "n=" + std::to_string(n) + " i=" + std::to_string(i) + " lambda=" + lambda.to_string() +
                                   ": " + image.to_string();
                        });
                    }
        }
    }

    void simplicity(detail::Tally& t) {
        auto r = rng(8);
        const auto psis = detail::psi_samples();
        for (int s = 0; s < 100; ++s) {
            const auto& psi = psis[static_cast<std::size_t>(s) % psis.size()];
            const auto ctx = ModuleContext::central(psi, s % 4 < 2 ? detail::rat(5, 7) : Rational(0));
            const ModuleElement v = sampling::random_module_element(r, ctx, 4, 4, 2, 0);
            const long cap = static_cast<long>(maxdeg(v) + 1) * static_cast<long>(max_d0(v) + maxdeg(v) + 2);
            const auto res = whittaker_reduce(v);
            bool ok = static_cast<long>(res.trace.size()) <= cap && res.result.size() == 1 &&
                      res.result.terms().begin()->first == BasisKey{Pseudopartition(), 0};
            ReductionMeasure prev = reduction_measure(v);
            for (const auto& step : res.trace) {
                ok = ok && step.before == prev && step.after < step.before;
                prev = step.after;
            }
            emit(v);
            emit(res.result);
            t.check(ok, [&] { return ctx.descriptor() + ": " + v.to_string() + " reduced to " + res.result.to_string(); });
        }
    }

    void decomposition(detail::Tally& t) {
        const Poly p = Poly::linear(Rational(1)).pow(2) * Poly::linear(Rational(-3));
        for (const auto& psi : detail::psi_samples()) {
            const auto rep = decompose(psi, p);
            Poly sum;
            for (const auto& c : rep.components) {
                sum += c.bezout * c.cofactor;
                emit(c.bezout);
                emit(c.cofactor);
                emit(c.generator);
            }
            t.check(sum == Poly(1) && rep.bezout_identity, [&] { return "Bezout sum is " + sum.to_string(); });
            t.check(rep.cross_annihilation, [] { return std::string("cross annihilation fails"); });
            t.check(rep.idempotence, [] { return std::string("projection idempotence fails"); });
            t.check(rep.dimensions_add, [&] {
                return "truncated dimensions do not add: union rank " + std::to_string(rep.union_rank) + " vs ambient " +
                       std::to_string(rep.ambient_dimension);
            });
        }
    }

    void series(detail::Tally& t) {
        for (const auto& psi : detail::psi_samples())
            for (const auto& [xi, a] : std::vector<std::pair<Rational, unsigned>>{{Rational(0), 2}, {Rational(1), 3}}) {
                const auto rep = composition_series(psi, xi, a);
                for (const auto& g : rep.generators) emit(g);
                t.check(rep.pass, [&] {
                    std::ostringstream os;
                    os << "xi=" << xi.to_string() << " a=" << a << ": dims";
                    for (auto dim : rep.quotient_whittaker_dims) os << ' ' << dim;
                    return os.str();
                });
            }
    }

    void annihilator(detail::Tally& t) {
        auto r = rng(11);
        const WhittakerHomomorphism psi(detail::rat(2), detail::rat(-3, 2));
        std::uniform_int_distribution<int> mode(1, 3);
        for (const Poly& p : {Poly::linear(detail::rat(5, 7)), Poly::linear(Rational(1)) * Poly::linear(Rational(2))}) {
            const auto ctx = ModuleContext::poly_quotient(psi, p);
            const auto w = ModuleElement::generator(ctx);
            for (int s = 0; s < 50; ++s) {
                UEAElement u = sampling::random_uea(r, 3, 3, -3, 3, 2);
                if (s % 2) {
                    // u p(z) + u' (d_k - psi_k) lies in the annihilator
                    const int k = mode(r);
                    u = multiply(u, UEAElement::from_poly(p)) +
                        multiply(sampling::random_uea(r, 2, 2, -3, 3, 1), UEAElement::generator(k) - UEAElement(psi(k)));
                }
                const auto form = annihilator_normal_form(u, psi, p);
                const bool kills = act(u, w).is_zero();
                emit(u);
                emit(form.residual);
                t.check(reexpand(form, psi, p) == u && form.residual.is_zero() == kills && (s % 2 == 0 || kills),
                        [&] { return "p=" + p.to_string() + " u=" + u.to_string(); });
            }
        }
    }

    void witt(detail::Tally& t) {
        std::size_t central_killed = 0;
        for (int i = -6; i <= 6; ++i)
            for (int j = -6; j <= 6; ++j) {
                const UEAElement s = commutator(UEAElement::generator(i), UEAElement::generator(j));
                const WittElement image = project(s);
                bool has_central = false;
                for (const auto& [m, c] : s.terms()) has_central = has_central || m.z > 0;
                if (has_central) ++central_killed;
                emit(image.lift());
                t.check(image.lift() == Rational(j - i) * UEAElement::generator(i + j),
                        [&] { return "projection of [d" + std::to_string(i) + ",d" + std::to_string(j) + "] is " + image.to_string(); });
            }
        t.check(central_killed > 0, [] { return std::string("no central terms were produced"); });

        auto r = rng(12);
        const auto psis = detail::psi_samples();
        for (int s = 0; s < 50; ++s) {
            const auto ctx = ModuleContext::central(psis[static_cast<std::size_t>(s) % 2], Rational(0));
            const UEAElement u = sampling::random_uea(r, 3, 3, -3, 3, 1);
            const ModuleElement v = sampling::random_module_element(r, ctx, 3, 3, 1, 0);
            const ModuleElement lhs = witt_act(project(u), v);
            emit(lhs);
            t.check(lhs == act(u, v), [&] { return "u=" + u.to_string() + " v=" + v.to_string(); });
        }
    }

    void cli(detail::Tally& t) {
        for (const auto& e : emitted_) {
            std::string back;
            try {
                switch (e.kind) {
                    case Emitted::Kind::Algebra: back = parse_uea(e.text).to_string(); break;
                    case Emitted::Kind::Vector: back = parse_module_element(e.text, *e.context).to_string(); break;
                    case Emitted::Kind::Polynomial: back = parse_poly(e.text).to_string(); break;
                }
            } catch (const std::exception& ex) {
                back = std::string("<error: ") + ex.what() + ">";
            }
            t.check(back == e.text, [&] { return "round trip of '" + e.text + "' gave '" + back + "'"; });
        }
        if (!probe_) {
            t.check(false, [] { return std::string("no CLI probe available"); });
            return;
        }
        const std::vector<std::pair<std::vector<std::string>, int>> calls{
            {{"verify", "whittaker", "d-1*w", "--module", "L:xi=0"}, 1},
            {{"verify", "whittaker", "w", "--module", "L:xi=0"}, 0},
            {{"decompose", "--p", "z^2+1"}, 3},
            {{"straighten", "d"}, 2},
            {{"straighten", "d2*d-2"}, 0},
        };
        for (const auto& [args, code] : calls) {
            const int got = probe_(args);
            t.check(got == code, [&] {
                std::string line = "vira";
                for (const auto& a : args) line += " '" + a + "'";
                return line + " exited " + std::to_string(got) + ", expected " + std::to_string(code);
            });
        }
    }

    Options options_;
    ExitProbe probe_;
    std::vector<Emitted> emitted_;
};

/// `criterion  3  leading-term grid ........ PASS  0.01 s / 10 s  (40 cases)`
inline std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    std::string title = r.title + " ";
    if (title.size() < 34) title += std::string(34 - title.size(), '.');
    char timing[64];
    std::snprintf(timing, sizeof timing, "%7.2f s / %2.0f s", r.seconds, r.limit);
    os << "criterion " << (r.id < 10 ? " " : "") << r.id << "  " << title << ' ' << (r.pass() ? "PASS" : "FAIL") << "  "
       << timing << "  (" << r.cases << " cases)";
    if (!r.pass()) os << "\n    " << r.detail;
    return os.str();
}

}  // namespace vira::acceptance
