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

// Seeded random elements for property checks.

#pragma once

#include <random>
#include <vector>

#include "vira/partitions.hpp"
#include "vira/virasoro.hpp"
#include "vira/whittaker.hpp"

namespace vira::sampling {

using Rng = std::mt19937_64;

/// 1..max_terms straightened words of length <= max_len over indices in
/// [lo, hi], times z^t with t <= max_z and a coefficient in {+-1..4}/{1,2}.
inline UEAElement random_uea(Rng& rng, int max_terms, int max_len, int lo, int hi, unsigned max_z = 0) {
    std::uniform_int_distribution<int> nterms(1, max_terms), len(0, max_len), idx(lo, hi), coef(1, 4), sign(0, 1), den(1, 2);
    std::uniform_int_distribution<unsigned> zp(0, max_z);
    UEAElement u;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<int> w(static_cast<std::size_t>(len(rng)));
        for (auto& x : w) x = idx(rng);
        const Rational c(mpz_class(sign(rng) ? coef(rng) : -coef(rng)), mpz_class(den(rng)));
        u.add_scaled(normal_order(w), c, zp(rng));
    }
    return u;
}

inline Pseudopartition random_pseudopartition(Rng& rng, unsigned max_size, unsigned max_zeros) {
    std::uniform_int_distribution<unsigned> size(0, max_size), zeros(0, max_zeros);
    const auto all = enumerate(size(rng), zeros(rng));
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

/// Nonzero combination of basis vectors z^t d_{-lambda} w with
/// |lambda| <= max_size, lambda(0) <= max_zeros, t <= max_z.
inline ModuleElement random_module_element(Rng& rng, const ModuleContext& ctx, int max_terms, unsigned max_size,
                                           unsigned max_zeros, unsigned max_z) {
    std::uniform_int_distribution<int> nterms(1, max_terms), coef(1, 5), sign(0, 1);
    std::uniform_int_distribution<unsigned> zp(0, max_z);
    ModuleElement v(ctx);
    while (v.is_zero()) {
        const int n = nterms(rng);
        for (int t = 0; t < n; ++t)
            v.add(random_pseudopartition(rng, max_size, max_zeros), zp(rng), Rational(sign(rng) ? coef(rng) : -coef(rng)));
    }
    return v;
}

}  // namespace vira::sampling
