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

#include <algorithm>
#include <random>
#include <set>

#include "vira/partitions.hpp"

using vira::Pseudopartition;

namespace {

// Generate-and-filter oracle: every composition of n, sorted, deduplicated.
std::size_t brute_partition_count(unsigned n) {
    if (n == 0) return 1;
    std::set<std::vector<unsigned>> seen;
    for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
        std::vector<unsigned> parts;
        unsigned run = 1;
        for (unsigned i = 0; i + 1 < n; ++i) {
            if (mask & (1U << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        std::sort(parts.begin(), parts.end());
        seen.insert(parts);
    }
    return seen.size();
}

}  // namespace

TEST(Pseudopartition, Stats) {
    auto s = vira::stats(Pseudopartition::from_parts({0, 0, 1, 3}));
    EXPECT_EQ(s.size, 4u);
    EXPECT_EQ(s.parts, 4u);
    auto e = vira::stats(Pseudopartition());
    EXPECT_EQ(e.size, 0u);
    EXPECT_EQ(e.parts, 0u);
    auto t = vira::stats(Pseudopartition::from_parts({2, 2, 2}));
    EXPECT_EQ(t.size, 6u);
    EXPECT_EQ(t.parts, 3u);
}

TEST(Pseudopartition, TextForms) {
    const auto p = Pseudopartition::from_parts({0, 0, 1, 3});
    EXPECT_EQ(p.to_string(), "(0^2,1,3)");
    EXPECT_EQ(Pseudopartition::parse("0^2 1 3"), p);
    EXPECT_EQ(Pseudopartition::parse("(0^2,1,3)"), p);
    EXPECT_EQ(Pseudopartition().to_string(), "()");
    EXPECT_EQ(Pseudopartition::parse("()"), Pseudopartition());
    EXPECT_THROW(Pseudopartition::parse("(1,"), vira::ParseError);
    EXPECT_THROW(Pseudopartition::parse("a"), vira::ParseError);
    EXPECT_TRUE(Pseudopartition::parse("1 2").is_partition());
    EXPECT_FALSE(p.is_partition());
}

TEST(Enumerate, Examples) {
    auto two = vira::enumerate(2, 0);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0], Pseudopartition::from_parts({2}));
    EXPECT_EQ(two[1], Pseudopartition::from_parts({1, 1}));

    auto zero = vira::enumerate(0, 1);
    ASSERT_EQ(zero.size(), 2u);
    EXPECT_EQ(zero[0], Pseudopartition());
    EXPECT_EQ(zero[1], Pseudopartition::from_parts({0}));

    EXPECT_EQ(vira::enumerate(3, 0).size(), 3u);
}

TEST(Enumerate, MatchesPartitionFunction) {
    for (unsigned n = 0; n <= 12; ++n) {
        const std::size_t p = brute_partition_count(n);
        EXPECT_EQ(vira::enumerate(n, 0).size(), p) << "n=" << n;
        for (unsigned m = 0; m <= 3; ++m) {
            const auto all = vira::enumerate(n, m);
            EXPECT_EQ(all.size(), (m + 1) * p);
            EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
            EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
            for (const auto& l : all) {
                EXPECT_EQ(l.size(), n);
                EXPECT_LE(l.count(0), m);
            }
        }
    }
}

TEST(PseudopartitionProperty, StatsAdditiveUnderUnion) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<unsigned> len(0, 6), part(0, 7);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<unsigned> a(len(rng)), b(len(rng));
        for (auto& x : a) x = part(rng);
        for (auto& x : b) x = part(rng);
        const auto pa = Pseudopartition::from_parts(a), pb = Pseudopartition::from_parts(b);
        const auto u = pa + pb;
        EXPECT_EQ(u.size(), pa.size() + pb.size());
        EXPECT_EQ(u.parts(), pa.parts() + pb.parts());
        EXPECT_EQ(Pseudopartition::parse(u.to_string()), u);
    }
}
