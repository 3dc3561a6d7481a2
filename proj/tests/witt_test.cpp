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
#include "vira/analysis.hpp"
#include "vira/witt.hpp"

using namespace vira;
using vira::testing::d;
using vira::testing::q;
using vira::testing::zpow;

namespace {
const WhittakerHomomorphism kPsi(q(2), q(-3, 2));
}

TEST(Project, Examples) {
    const UEAElement s = straighten(FormalTerm{1, 0, {2, -2}});
    EXPECT_EQ(project(s).lift(), UEAElement::monomial({0, {-2, 2}}) - 4 * d(0));
    EXPECT_TRUE(project(zpow(3)).is_zero());
    EXPECT_EQ(project(d(5)).lift(), d(5));
    EXPECT_THROW(WittElement::from_z_free(zpow(1)), DomainError);
}

TEST(WittAct, Examples) {
    const auto W = ModuleContext::central(kPsi, q(0));
    const auto w = ModuleElement::generator(W);
    const auto dm2 = ModuleElement::basis(W, Pseudopartition::from_parts({2}), 0);
    EXPECT_EQ(witt_act(project(d(2)), dm2), kPsi.psi2() * dm2 - 4 * ModuleElement::basis(W, Pseudopartition::from_parts({0}), 0));
    EXPECT_EQ(witt_act(project(d(1)), w), kPsi.psi1() * w);
    EXPECT_TRUE(witt_act(project(multiply(zpow(1), d(-1))), w).is_zero());

    const auto L = ModuleContext::central(kPsi, q(1));
    EXPECT_THROW(witt_act(project(d(1)), ModuleElement::generator(L)), DomainError);
    EXPECT_THROW(witt_act(project(d(1)), ModuleElement::generator(ModuleContext::universal(kPsi))), DomainError);
}

TEST(WittProperty, ProjectionIsLieHomomorphism) {
    for (int i = -6; i <= 6; ++i)
        for (int j = -6; j <= 6; ++j) {
            const auto s = straighten(FormalTerm{1, 0, {i, j}}) - straighten(FormalTerm{1, 0, {j, i}});
            EXPECT_EQ(project(s).lift(), Rational(j - i) * d(i + j));
            EXPECT_EQ(witt_bracket(i, j), project(s));
        }
}

TEST(WittProperty, ActionAgreesWithVirasoro) {
    std::mt19937_64 rng(61);
    const auto W = ModuleContext::central(kPsi, q(0));
    for (int iter = 0; iter < 50; ++iter) {
        const auto u = vira::testing::random_uea(rng, 3, 3, -3, 3, 2);
        const auto v = vira::testing::random_module_element(rng, W, 3, 3, 1, 0);
        EXPECT_EQ(witt_act(project(u), v), act(u, v));
    }
}

TEST(WittProperty, SimpleAtWhittakerLevel) {
    const auto W = ModuleContext::central(kPsi, q(0));
    const auto sols = whittaker_solve(W, {4, 2, 0});
    ASSERT_EQ(sols.size(), 1u);
    EXPECT_EQ(sols[0], ModuleElement::generator(W));
}
