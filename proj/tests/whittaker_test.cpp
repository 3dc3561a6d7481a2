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

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "vira/whittaker.hpp"

using namespace vira;
using vira::testing::d;
using vira::testing::q;
using vira::testing::zpow;

namespace {

const WhittakerHomomorphism kPsi(q(2), q(-3, 2));
const Rational kXi = q(5, 7);

Pseudopartition P(std::vector<unsigned> parts) { return Pseudopartition::from_parts(parts); }

ModuleElement basis(const ModuleContext& ctx, std::vector<unsigned> parts, unsigned t = 0, const Rational& c = Rational(1)) {
    return ModuleElement::basis(ctx, P(std::move(parts)), t, c);
}

}  // namespace

TEST(WhittakerHomomorphism, RejectsSingular) {
    EXPECT_THROW(WhittakerHomomorphism(q(0), q(1)), DomainError);
    EXPECT_THROW(WhittakerHomomorphism(q(1), q(0)), DomainError);
    EXPECT_EQ(kPsi(1), q(2));
    EXPECT_EQ(kPsi(2), q(-3, 2));
    EXPECT_EQ(kPsi(3), q(0));
    EXPECT_EQ(kPsi(17), q(0));
}

TEST(ModuleContext, Descriptors) {
    EXPECT_EQ(ModuleContext::universal(kPsi).descriptor(), "M");
    EXPECT_EQ(ModuleContext::central(kPsi, kXi).descriptor(), "L:xi=5/7");
    EXPECT_EQ(ModuleContext::poly_quotient(kPsi, (Poly::z() - Poly(1)).pow(2)).descriptor(), "Q:p=z^2 - 2*z + 1");
    EXPECT_THROW(ModuleContext::poly_quotient(kPsi, Poly(1)), DomainError);
    EXPECT_THROW(ModuleContext::poly_quotient(kPsi, Poly(2) * Poly::z()), DomainError);
}

TEST(Act, Examples) {
    const auto M = ModuleContext::universal(kPsi);
    const auto w = ModuleElement::generator(M);
    EXPECT_EQ(act(d(1), w), kPsi.psi1() * w);
    EXPECT_EQ(act(d(2), basis(M, {1})), kPsi.psi2() * basis(M, {1}) - 3 * kPsi.psi1() * w);
    EXPECT_EQ(act(d(2), basis(M, {2})), kPsi.psi2() * basis(M, {2}) - 4 * basis(M, {0}) + q(1, 2) * basis(M, {}, 1));

    const auto L = ModuleContext::central(kPsi, kXi);
    EXPECT_EQ(act(d(2), basis(L, {2})),
              kPsi.psi2() * basis(L, {2}) - 4 * basis(L, {0}) + (kXi / Rational(2)) * ModuleElement::generator(L));
}

TEST(Act, TextForm) {
    const auto M = ModuleContext::universal(WhittakerHomomorphism(q(1), q(1)));
    ModuleElement v(M);
    v.add(P({0, 3, 3}), 0, q(1));
    v.add(P({}), 2, q(3, 4));
    EXPECT_EQ(v.to_string(), "d-3^2*d0*w + (3/4)*z^2*w");
    EXPECT_EQ(ModuleElement(M).to_string(), "0");
}

TEST(Degrees, Examples) {
    const auto M = ModuleContext::universal(kPsi);
    EXPECT_EQ(maxdeg(ModuleElement(M)), kMinusInfinity);
    EXPECT_EQ(maxdeg(basis(M, {}, 5)), 0);
    EXPECT_EQ(maxdeg(basis(M, {1, 2}) + basis(M, {}, 1)), 3);
    EXPECT_EQ(max_d0(basis(M, {0, 0}) + basis(M, {1})), 2);
    EXPECT_EQ(max_d0(ModuleElement::generator(M)), 0);
    EXPECT_EQ(max_d0(ModuleElement(M)), kMinusInfinity);
}

TEST(DotAct, Examples) {
    const auto M = ModuleContext::universal(kPsi);
    const auto w = ModuleElement::generator(M);
    EXPECT_TRUE(dot_act(1, w).is_zero());
    EXPECT_EQ(dot_act(1, basis(M, {1})), -2 * basis(M, {0}));
    for (int n = 1; n <= 5; ++n)
        for (unsigned i = 0; i <= 3; ++i)
            EXPECT_EQ(dot_act(n, basis(M, {0, 1, 2}, i)), dot_act(n, basis(M, {0, 1, 2})).times_poly(Poly::monomial(1, i)));
    EXPECT_THROW(dot_act(0, w), DomainError);
}

TEST(IsWhittakerVector, Examples) {
    const auto M = ModuleContext::universal(kPsi);
    EXPECT_TRUE(is_whittaker_vector(ModuleElement::generator(M)));
    EXPECT_TRUE(is_whittaker_vector(basis(M, {}, 2)));
    EXPECT_FALSE(is_whittaker_vector(basis(M, {1})));
    EXPECT_TRUE(is_whittaker_vector(ModuleElement(M)));
}

TEST(WhittakerReduce, Examples) {
    const auto L = ModuleContext::central(kPsi, kXi);
    const auto wbar = ModuleElement::generator(L);

    auto r0 = whittaker_reduce(wbar);
    EXPECT_TRUE(r0.trace.empty());
    EXPECT_EQ(r0.result, wbar);

    auto r1 = whittaker_reduce(basis(L, {1}));
    ASSERT_EQ(r1.trace.size(), 1u);
    EXPECT_EQ(r1.trace[0].op, 3);
    EXPECT_EQ(r1.result, -4 * kPsi.psi2() * wbar);

    auto r2 = whittaker_reduce(basis(L, {0}));
    ASSERT_EQ(r2.trace.size(), 1u);
    EXPECT_EQ(r2.trace[0].op, 2);
    EXPECT_EQ(r2.result, -2 * kPsi.psi2() * wbar);

    EXPECT_THROW(whittaker_reduce(ModuleElement(L)), DomainError);
}

TEST(NilpotencyIndex, Examples) {
    auto a = nilpotency_index(1, P({1}), kPsi);
    EXPECT_EQ(a.index, 3u);
    EXPECT_EQ(a.bound, 4u);
    EXPECT_EQ(nilpotency_index(1, P({}), kPsi).index, 1u);
    auto b = nilpotency_index(4, P({1}), kPsi);
    EXPECT_EQ(b.index, 1u);
    EXPECT_LE(b.index, b.bound);
}

TEST(MapFromUniversal, Examples) {
    const auto M = ModuleContext::universal(kPsi);
    const auto L = ModuleContext::central(kPsi, kXi);
    EXPECT_EQ(map_from_universal(UEAElement(1), L), ModuleElement::generator(L));
    EXPECT_EQ(map_from_universal(zpow(2), L), kXi.pow(2) * ModuleElement::generator(L));
    EXPECT_EQ(map_from_universal(multiply(d(-1), d(1)), M), kPsi.psi1() * basis(M, {1}));
}

TEST(WhittakerProperty, ModuleAxiomBothContexts) {
    std::mt19937_64 rng(31);
    const std::vector<ModuleContext> ctxs{ModuleContext::universal(kPsi), ModuleContext::central(kPsi, kXi),
                                          ModuleContext::poly_quotient(kPsi, (Poly::z() - Poly(1)).pow(2))};
    for (int iter = 0; iter < 60; ++iter) {
        const auto u = vira::testing::random_uea(rng, 2, 2, -3, 3);
        const auto v = vira::testing::random_uea(rng, 2, 2, -3, 3);
        for (const auto& ctx : ctxs) {
            const auto m = vira::testing::random_module_element(rng, ctx, 2, 3, 1, 1);
            EXPECT_EQ(act(multiply(u, v), m), act(u, act(v, m)));
        }
    }
}

TEST(WhittakerProperty, ActAgreesWithStraightenedProduct) {
    // Independent route: straighten u * z^t d_{-lambda} and evaluate on w.
    std::mt19937_64 rng(32);
    const auto M = ModuleContext::universal(kPsi);
    for (int iter = 0; iter < 100; ++iter) {
        const auto u = vira::testing::random_uea(rng, 3, 3, -3, 4);
        const auto lambda = vira::testing::random_pseudopartition(rng, 4, 2);
        const BasisKey key{lambda, 1};
        const auto via_product = map_from_universal(multiply(u, UEAElement::monomial({key.z, key.word()})), M);
        EXPECT_EQ(act(u, ModuleElement::basis(M, lambda, 1)), via_product);
    }
}

TEST(WhittakerProperty, BasisFreeness) {
    std::mt19937_64 rng(33);
    const auto M = ModuleContext::universal(kPsi);
    for (int iter = 0; iter < 100; ++iter) {
        const auto u = vira::testing::random_uea(rng, 4, 4, -4, 0, 3);
        const auto image = map_from_universal(u, M);
        EXPECT_EQ(image.is_zero(), u.is_zero());
        for (const auto& [m, c] : u.terms()) {
            Pseudopartition lambda;
            for (int k : m.word) lambda.add(static_cast<unsigned>(-k));
            EXPECT_EQ(image.coeff(lambda, m.z), c);
        }
    }
}

TEST(WhittakerProperty, QuotientConsistency) {
    std::mt19937_64 rng(34);
    const auto M = ModuleContext::universal(kPsi);
    const auto Q = ModuleContext::poly_quotient(kPsi, Poly::linear(q(1)) * Poly::linear(q(-2)) * Poly::z());
    for (int iter = 0; iter < 100; ++iter) {
        const auto u = vira::testing::random_uea(rng, 2, 3, -3, 4, 4);
        const auto m = vira::testing::random_module_element(rng, M, 3, 3, 2, 4);
        EXPECT_EQ(act(u, reduce_into(m, Q)), reduce_into(act(u, m), Q));
    }
}

TEST(WhittakerProperty, DegreeBoundUnderAction) {
    std::mt19937_64 rng(35);
    const auto M = ModuleContext::universal(kPsi);
    for (int iter = 0; iter < 100; ++iter) {
        const auto v = vira::testing::random_module_element(rng, M, 3, 5, 2, 2);
        for (int m = 1; m <= 8; ++m) EXPECT_LE(maxdeg(act(d(m), v)), maxdeg(v) - m + 2);
    }
}

TEST(WhittakerProperty, DotActionVanishesBeyondDegreePlusTwo) {
    const auto M = ModuleContext::universal(kPsi);
    for (unsigned size = 0; size <= 5; ++size)
        for (const auto& lambda : enumerate(size, 2))
            for (unsigned i = 0; i <= 2; ++i)
                for (int n = static_cast<int>(size) + 3; n <= static_cast<int>(size) + 6; ++n)
                    EXPECT_TRUE(dot_act(n, ModuleElement::basis(M, lambda, i)).is_zero());
}

TEST(WhittakerProperty, ReduceReachesScalarMultipleOfGenerator) {
    std::mt19937_64 rng(36);
    for (const Rational& xi : {q(0), kXi, q(-3)}) {
        const auto L = ModuleContext::central(kPsi, xi);
        for (int iter = 0; iter < 40; ++iter) {
            const auto v = vira::testing::random_module_element(rng, L, 4, 4, 2, 0);
            const auto r = whittaker_reduce(v);
            EXPECT_TRUE(is_whittaker_vector(r.result));
            ASSERT_FALSE(r.result.is_zero());
            ASSERT_EQ(r.result.size(), 1u);
            EXPECT_EQ(r.result.terms().begin()->first, (BasisKey{Pseudopartition(), 0}));
            for (const auto& step : r.trace) EXPECT_LT(step.after, step.before);
        }
    }
}

TEST(WhittakerProperty, ReduceInUniversalLandsInSz) {
    std::mt19937_64 rng(37);
    const auto M = ModuleContext::universal(kPsi);
    for (int iter = 0; iter < 30; ++iter) {
        const auto r = whittaker_reduce(vira::testing::random_module_element(rng, M, 3, 4, 2, 2));
        ASSERT_FALSE(r.result.is_zero());
        for (const auto& [key, c] : r.result.terms()) EXPECT_TRUE(key.lambda.empty());
    }
}

TEST(WhittakerProperty, NilpotencyWithinBound) {
    for (int n = 1; n <= 4; ++n)
        for (unsigned size = 0; size <= 4; ++size)
            for (const auto& lambda : enumerate(size, 2)) {
                const auto r = nilpotency_index(n, lambda, kPsi);
                EXPECT_GE(r.index, 1u);
                EXPECT_LE(r.index, r.bound) << "n=" << n << " lambda=" << lambda.to_string();
            }
}
