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

// Exact scalars: arbitrary-precision rationals and polynomials in the
// central variable z.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vira/errors.hpp"

namespace vira {

// Degrees and similar statistics use this sentinel for the zero object, so
// that it compares below every real degree.
using Degree = int;
inline constexpr Degree kMinusInfinity = std::numeric_limits<int>::min();

inline std::string degree_to_string(Degree d) {
    return d == kMinusInfinity ? std::string("-inf") : std::to_string(d);
}

/// Canonical rational number (reduced, positive denominator) backed by GMP.
class Rational {
  public:
    Rational() = default;
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : value_(static_cast<long>(v)) {}  // NOLINT
    Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        value_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

    /// Parses `p` or `p/q` with an optional leading sign.
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto slash = s.find('/');
        auto valid_int = [](std::string_view t, bool allow_sign) {
            if (!t.empty() && allow_sign && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
            return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
        };
        std::string num = s.substr(0, slash);
        if (!num.empty() && num[0] == '+') num.erase(0, 1);
        if (!valid_int(num, true)) throw ParseError("invalid rational '" + s + "'", 0, {"integer"});
        if (slash == std::string::npos) return Rational(mpz_class(num), mpz_class(1));
        std::string den = s.substr(slash + 1);
        if (!valid_int(den, false)) throw ParseError("invalid rational '" + s + "'", slash + 1, {"natural number"});
        if (mpz_class(den) == 0) throw DomainError("rational with zero denominator");
        return Rational(mpz_class(num), mpz_class(den));
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    Rational pow(unsigned e) const {
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
        return Rational(n, d);
    }

    std::string to_string() const { return value_.get_str(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  private:
    mpq_class value_;
};

namespace detail {

// Appends `c*body` to a `+`/`-` joined sum. Fractions are parenthesised so
// the output reparses unambiguously; an empty body means a constant term.
inline void append_term(std::string& out, const Rational& c, const std::string& body) {
    const bool first = out.empty();
    if (c.sign() < 0) out += first ? "-" : " - ";
    else if (!first) out += " + ";
    const Rational a = c.abs();
    const std::string mag = a.is_integer() ? a.to_string() : "(" + a.to_string() + ")";
    if (body.empty()) out += mag;
    else if (a == Rational(1)) out += body;
    else out += mag + "*" + body;
}

inline std::string power_string(const std::string& base, unsigned e) {
    return e == 1 ? base : base + "^" + std::to_string(e);
}

}  // namespace detail

/// Polynomial in z with rational coefficients; coefficient i is the z^i one.
class Poly {
  public:
    Poly() = default;
    Poly(const Rational& c) { if (!c.is_zero()) coeffs_.push_back(c); }  // NOLINT
    Poly(int c) : Poly(Rational(c)) {}  // NOLINT
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly z() { return monomial(Rational(1), 1); }
    static Poly monomial(const Rational& c, unsigned k) {
        if (c.is_zero()) return {};
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }
    /// The monic linear polynomial z - root.
    static Poly linear(const Rational& root) { return Poly({-root, Rational(1)}); }

    Degree degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<Degree>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }
    Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }

    Poly monic() const {
        if (is_zero()) return {};
        return *this * Poly(Rational(1) / leading());
    }

    Rational eval(const Rational& x) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly pow(unsigned e) const {
        Poly result(1), base = *this;
        while (e) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e) base *= base;
        }
        return result;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) { return *this += -o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(v));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Descending powers, e.g. `z^2 - 2*z + 1`.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            if (coeffs_[k].is_zero()) continue;
            detail::append_term(out, coeffs_[k], k == 0 ? std::string() : detail::power_string("z", static_cast<unsigned>(k)));
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

inline PolyDivision poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const Degree db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational lead = b.leading();
    const auto& bc = b.coefficients();
    for (Degree k = a.degree(); k >= db; --k) {
        const Rational c = rem[static_cast<std::size_t>(k)] / lead;
        if (c.is_zero()) continue;
        quot[static_cast<std::size_t>(k - db)] = c;
        for (Degree j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * bc[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

inline Poly poly_rem(const Poly& a, const Poly& b) { return poly_divmod(a, b).remainder; }

struct Bezout {
    Poly gcd;  // monic
    Poly s;
    Poly t;
};

/// Extended Euclid over Q[z]: s*a + t*b = gcd, gcd monic.
inline Bezout poly_ext_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
    Poly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    const Poly scale(Rational(1) / r0.leading());
    return {r0 * scale, s0 * scale, t0 * scale};
}

struct LinearFactor {
    Rational root;
    unsigned multiplicity = 0;
    friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Integer coefficients of c*p for the smallest positive c clearing denominators.
inline std::vector<mpz_class> integer_form(const Poly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> out;
    for (const auto& c : p.coefficients()) out.push_back(c.numerator() * (l / c.denominator()));
    return out;
}

}  // namespace detail

/// Splits a monic polynomial into linear factors over Q, roots ascending.
/// Throws NotSplitError when some irreducible factor has degree > 1.
inline std::vector<LinearFactor> poly_linear_factorization(const Poly& p) {
    if (p.degree() < 1) throw DomainError("factorization needs degree >= 1, got " + p.to_string());
    if (!p.is_monic()) throw DomainError("factorization needs a monic polynomial, got " + p.to_string());
    std::map<Rational, unsigned> roots;
    Poly rest = p;
    const auto divide_out = [&](const Rational& r) {
        const Poly lin = Poly::linear(r);
        while (rest.degree() >= 1 && rest.eval(r).is_zero()) {
            rest = poly_divmod(rest, lin).quotient;
            ++roots[r];
        }
    };
    while (rest.degree() >= 1) {
        if (rest.coeff(0).is_zero()) {
            divide_out(Rational(0));
            continue;
        }
        const auto ints = detail::integer_form(rest);
        bool found = false;
        for (const auto& num : detail::positive_divisors(ints.front())) {
            for (const auto& den : detail::positive_divisors(ints.back())) {
                for (int sgn : {1, -1}) {
                    const Rational r(num * sgn, den);
                    if (rest.eval(r).is_zero()) {
                        divide_out(r);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) throw NotSplitError("polynomial " + p.to_string() + " does not split into linear factors over Q");
    }
    std::vector<LinearFactor> out;
    for (const auto& [r, m] : roots) out.push_back({r, m});
    return out;
}

}  // namespace vira
