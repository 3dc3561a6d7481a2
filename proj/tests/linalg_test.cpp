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

#include "vira/linalg.hpp"

using namespace vira;

TEST(Nullspace, Examples) {
    EXPECT_TRUE(nullspace(RationalMatrix::identity(3)).empty());

    auto z = nullspace(RationalMatrix(2, 3));
    ASSERT_EQ(z.size(), 3u);
    EXPECT_EQ(rank(RationalMatrix(2, 3)), 0u);

    const RationalMatrix ones{{Rational(1), Rational(1)}};
    auto n = nullspace(ones);
    ASSERT_EQ(n.size(), 1u);
    // reduced-echelon normalisation: 1 on the free column
    EXPECT_EQ(n[0], (std::vector<Rational>{Rational(-1), Rational(1)}));
    EXPECT_EQ(n[0][0] + n[0][1], Rational(0));
}

TEST(Echelon, SpanMembership) {
    Echelon<int> e;
    EXPECT_TRUE(e.insert({{0, Rational(1)}, {2, Rational(3)}}));
    EXPECT_TRUE(e.insert({{1, Rational(2)}}));
    EXPECT_FALSE(e.insert({{0, Rational(2)}, {1, Rational(4)}, {2, Rational(6)}}));
    EXPECT_TRUE(e.contains({{1, Rational(-1)}}));
    EXPECT_FALSE(e.contains({{2, Rational(1)}}));
    EXPECT_EQ(e.rank(), 2u);
}

TEST(NullspaceProperty, KernelAndRankNullity) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> dim(1, 7), val(-3, 3), zero(0, 2);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
        RationalMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (zero(rng)) m(i, j) = Rational(val(rng));
        const auto basis = nullspace(m);
        for (const auto& v : basis)
            for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
        EXPECT_EQ(rank(m) + basis.size(), c);
    }
}
