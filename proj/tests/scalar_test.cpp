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

#include "vira/scalar.hpp"

using vira::Poly;
using vira::Rational;

namespace {

Poly z() { return Poly::z(); }
Poly c(long v) { return Poly(Rational(v)); }
Rational q(long n, long d) { return Rational(mpz_class(n), mpz_class(d)); }

Poly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(-9, 9);
    std::vector<Rational> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : v) x = Rational(coef(rng));
    return Poly(std::move(v));
}

}  // namespace

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(q(6, -4).to_string(), "-3/2");
    EXPECT_EQ(q(0, 7).to_string(), "0");
    EXPECT_EQ(q(0, 7).denominator(), 1);
    EXPECT_EQ(Rational::parse("-10/4"), q(-5, 2));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_THROW(Rational::parse("1/0"), vira::DomainError);
    EXPECT_THROW(Rational::parse("x"), vira::ParseError);
    EXPECT_THROW(Rational(1) / Rational(0), vira::DomainError);
}

TEST(Poly, DivmodExamples) {
    auto [qq, r] = vira::poly_divmod(z() * z(), z() - c(1));
    EXPECT_EQ(qq, z() + c(1));
    EXPECT_EQ(r, c(1));

    const Poly p = z() * z() * z() - c(3) * z() + c(2);
    auto unit = vira::poly_divmod(p, c(1));
    EXPECT_EQ(unit.quotient, p);
    EXPECT_TRUE(unit.remainder.is_zero());

    const Poly lin = z() - Poly(q(5, 7));
    auto self = vira::poly_divmod(lin, lin);
    EXPECT_EQ(self.quotient, c(1));
    EXPECT_TRUE(self.remainder.is_zero());

    EXPECT_THROW(vira::poly_divmod(p, Poly()), vira::DomainError);
}

TEST(Poly, ZeroDegreeIsBelowEverything) {
    EXPECT_EQ(Poly().degree(), vira::kMinusInfinity);
    EXPECT_LT(Poly().degree(), c(3).degree());
    EXPECT_EQ(c(3).degree(), 0);
}

TEST(Poly, ExtGcdExamples) {
    // (z-1) - (z-2) = 1, and the Bezout pair with deg s < 1, deg t < 1 is unique.
    auto b1 = vira::poly_ext_gcd(z() - c(1), z() - c(2));
    EXPECT_EQ(b1.gcd, c(1));
    EXPECT_EQ(b1.s, c(1));
    EXPECT_EQ(b1.t, c(-1));

    auto b2 = vira::poly_ext_gcd(z() * z(), z());
    EXPECT_EQ(b2.gcd, z());
    EXPECT_TRUE(b2.s.is_zero());
    EXPECT_EQ(b2.t, c(1));

    const Poly a = (z() - c(1)).pow(2), b = z() + c(3);
    auto b3 = vira::poly_ext_gcd(a, b);
    EXPECT_EQ(b3.gcd, c(1));
    EXPECT_EQ(b3.s, Poly(q(1, 16)));
    EXPECT_EQ(b3.t, Poly({q(5, 16), q(-1, 16)}));
    EXPECT_EQ(b3.s * a + b3.t * b, c(1));

    EXPECT_THROW(vira::poly_ext_gcd(Poly(), Poly()), vira::DomainError);
}

TEST(Poly, LinearFactorization) {
    auto f = vira::poly_linear_factorization((z() - c(1)).pow(2) * (z() + c(3)));
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0], (vira::LinearFactor{Rational(-3), 1}));
    EXPECT_EQ(f[1], (vira::LinearFactor{Rational(1), 2}));

    auto g = vira::poly_linear_factorization(z());
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g[0], (vira::LinearFactor{Rational(0), 1}));

    EXPECT_THROW(vira::poly_linear_factorization(z() * z() + c(1)), vira::NotSplitError);
    EXPECT_THROW(vira::poly_linear_factorization(c(2) * z()), vira::DomainError);

    // fractional roots via the rational root theorem
    const Poly h = (z() - Poly(q(2, 3))) * (z() + Poly(q(5, 7))).pow(3) * z();
    Poly back(1);
    for (const auto& lf : vira::poly_linear_factorization(h)) back *= Poly::linear(lf.root).pow(lf.multiplicity);
    EXPECT_EQ(back, h);
}

TEST(Poly, Printing) {
    EXPECT_EQ(((z() - c(1)).pow(2)).to_string(), "z^2 - 2*z + 1");
    EXPECT_EQ(Poly({q(5, 16), q(-1, 16)}).to_string(), "-(1/16)*z + (5/16)");
    EXPECT_EQ(Poly().to_string(), "0");
}

TEST(PolyProperty, DivmodReconstruction) {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 300; ++iter) {
        const Poly a = random_poly(rng, 6);
        Poly b = random_poly(rng, 6);
        if (b.is_zero()) b = c(1);
        auto [qq, r] = vira::poly_divmod(a, b);
        EXPECT_EQ(qq * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
}

TEST(PolyProperty, ExtGcdIdentity) {
    std::mt19937_64 rng(12);
    for (int iter = 0; iter < 300; ++iter) {
        const Poly a = random_poly(rng, 6), b = random_poly(rng, 6);
        if (a.is_zero() && b.is_zero()) continue;
        auto bz = vira::poly_ext_gcd(a, b);
        EXPECT_TRUE(bz.gcd.is_monic());
        EXPECT_EQ(bz.s * a + bz.t * b, bz.gcd);
        if (!a.is_zero()) {
            EXPECT_TRUE(vira::poly_rem(a, bz.gcd).is_zero());
        }
        if (!b.is_zero()) {
            EXPECT_TRUE(vira::poly_rem(b, bz.gcd).is_zero());
        }
    }
}

TEST(PolyProperty, FactorizationReexpands) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> nroots(1, 4), num(-6, 6), den(1, 3), mult(1, 3);
    for (int iter = 0; iter < 100; ++iter) {
        Poly p(1);
        const int k = nroots(rng);
        for (int i = 0; i < k; ++i) p *= Poly::linear(q(num(rng), den(rng))).pow(static_cast<unsigned>(mult(rng)));
        Poly back(1);
        const auto f = vira::poly_linear_factorization(p);
        for (std::size_t i = 1; i < f.size(); ++i) EXPECT_LT(f[i - 1].root, f[i].root);
        for (const auto& lf : f) back *= Poly::linear(lf.root).pow(lf.multiplicity);
        EXPECT_EQ(back, p);
    }
}
