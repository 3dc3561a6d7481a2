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

// Text syntax for elements of U(Vir), of the Whittaker modules and of Q[z].
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := 'd' int | 'z' | 'w' | rational | '(' expr ')'
//   rational := int ('/' nat)?
//
// The index of a generator belongs to its token, so `d-3` is d_{-3} and no
// whitespace may separate `d` from its index.

#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "vira/errors.hpp"
#include "vira/virasoro.hpp"
#include "vira/whittaker.hpp"

namespace vira {

struct ExpressionNode {
    enum class Kind { Sum, Product, Power, Generator, Central, Vector, Number };

    Kind kind = Kind::Number;
    std::size_t offset = 0;
    std::vector<ExpressionNode> children;
    std::vector<int> signs;  // Sum only: +1 / -1 per child
    int index = 0;           // Generator
    unsigned exponent = 1;   // Power
    Rational value;          // Number

    static ExpressionNode make(Kind kind, std::size_t offset) {
        ExpressionNode n;
        n.kind = kind;
        n.offset = offset;
        return n;
    }
};

/// Parsed expression; `root` is always a Sum.
struct Expression {
    std::string text;
    ExpressionNode root;
};

namespace detail {

class ExpressionParser {
  public:
    explicit ExpressionParser(std::string_view text) : s_(text) {}

    ExpressionNode parse() {
        ExpressionNode e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected input", {"'+'", "'-'", "'*'", "'^'", "end of input"});
        return e;
    }

  private:
    static constexpr unsigned kMaxExponent = 256;

    [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
        throw ParseError(what, pos_, std::move(expected));
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    bool digit_at(std::size_t i) const { return i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i])); }

    std::string_view digits() {
        const std::size_t start = pos_;
        while (digit_at(pos_)) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    ExpressionNode expr() {
        skip_ws();
        ExpressionNode sum = ExpressionNode::make(ExpressionNode::Kind::Sum, pos_);
        int sign = 1;
        if (peek('+') || peek('-')) {
            sign = peek('-') ? -1 : 1;
            ++pos_;
        }
        sum.children.push_back(term());
        sum.signs.push_back(sign);
        for (;;) {
            skip_ws();
            if (!peek('+') && !peek('-')) break;
            sum.signs.push_back(peek('-') ? -1 : 1);
            ++pos_;
            sum.children.push_back(term());
        }
        return sum;
    }

    ExpressionNode term() {
        skip_ws();
        ExpressionNode prod = ExpressionNode::make(ExpressionNode::Kind::Product, pos_);
        prod.children.push_back(factor());
        for (;;) {
            skip_ws();
            if (!peek('*')) break;
            ++pos_;
            prod.children.push_back(factor());
        }
        return prod;
    }

    ExpressionNode factor() {
        ExpressionNode a = atom();
        skip_ws();
        if (!peek('^')) return a;
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const auto text = digits();
        if (text.empty()) fail("expected exponent", {"natural number"});
        unsigned e = 0;
        if (std::from_chars(text.data(), text.data() + text.size(), e).ec != std::errc() || e > kMaxExponent) {
            pos_ = at;
            fail("exponent too large", {"natural number <= " + std::to_string(kMaxExponent)});
        }
        ExpressionNode p = ExpressionNode::make(ExpressionNode::Kind::Power, a.offset);
        p.exponent = e;
        p.children.push_back(std::move(a));
        return p;
    }

    ExpressionNode atom() {
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ >= s_.size()) fail("unexpected end of input", {"'d' index", "'z'", "'w'", "rational", "'('"});
        const char c = s_[pos_];
        if (c == 'd') {
            ++pos_;
            ExpressionNode g = ExpressionNode::make(ExpressionNode::Kind::Generator, at);
            g.index = integer("generator index");
            return g;
        }
        if (c == 'z' || c == 'w') {
            ++pos_;
            return ExpressionNode::make(c == 'z' ? ExpressionNode::Kind::Central : ExpressionNode::Kind::Vector, at);
        }
        if (c == '(') {
            ++pos_;
            ExpressionNode inner = expr();
            skip_ws();
            if (!peek(')')) fail("unbalanced parenthesis", {"')'"});
            ++pos_;
            inner.offset = at;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || ((c == '-' || c == '+') && digit_at(pos_ + 1))) {
            ExpressionNode n = ExpressionNode::make(ExpressionNode::Kind::Number, at);
            std::string num(1, c);
            ++pos_;
            num += digits();
            std::string den = "1";
            if (peek('/')) {
                ++pos_;
                const std::size_t den_at = pos_;
                den = std::string(digits());
                if (den.empty()) fail("expected denominator", {"natural number"});
                if (den.find_first_not_of('0') == std::string::npos) {
                    pos_ = den_at;
                    fail("zero denominator", {"positive natural number"});
                }
            }
            n.value = Rational(mpz_class(num), mpz_class(den));
            return n;
        }
        fail(std::string("unexpected character '") + c + "'", {"'d' index", "'z'", "'w'", "rational", "'('"});
    }

    int integer(const char* what) {
        const std::size_t start = pos_;
        if (peek('-') || peek('+')) ++pos_;
        if (!digit_at(pos_)) {
            pos_ = start;
            fail(std::string("expected ") + what, {"integer"});
        }
        digits();
        int v = 0;
        const char* b = s_.data() + start + (s_[start] == '+' ? 1 : 0);
        if (std::from_chars(b, s_.data() + pos_, v).ec != std::errc() || v < -100000 || v > 100000) {
            pos_ = start;
            fail(std::string(what) + " out of range", {"integer in [-100000, 100000]"});
        }
        return v;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

// u, or u.w when `vector` is set.
struct ExpressionValue {
    UEAElement u;
    bool vector = false;
};

inline ExpressionValue evaluate(const ExpressionNode& n) {
    using K = ExpressionNode::Kind;
    switch (n.kind) {
        case K::Number: return {UEAElement(n.value)};
        case K::Generator: return {UEAElement::generator(n.index)};
        case K::Central: return {UEAElement::z_power(1)};
        case K::Vector: return {UEAElement(1), true};
        case K::Power: {
            ExpressionValue base = evaluate(n.children.front());
            if (base.vector) throw SemanticError("power of a module vector", n.offset, {"factor without 'w'"});
            UEAElement out(1);
            for (unsigned i = 0; i < n.exponent; ++i) out = multiply(out, base.u);
            return {std::move(out)};
        }
        case K::Product: {
            ExpressionValue out{UEAElement(1)};
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                ExpressionValue f = evaluate(n.children[i]);
                if (f.vector && i + 1 != n.children.size())
                    throw SemanticError("'w' must be the rightmost factor", n.children[i].offset, {"factor without 'w'"});
                out.u = multiply(out.u, f.u);
                out.vector = f.vector;
            }
            return out;
        }
        case K::Sum: {
            ExpressionValue out;
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                ExpressionValue t = evaluate(n.children[i]);
                if (i == 0) out.vector = t.vector;
                else if (t.vector != out.vector)
                    throw SemanticError("cannot add module vectors and algebra elements", n.children[i].offset,
                                        {out.vector ? "term ending in 'w'" : "term without 'w'"});
                out.u.add_scaled(t.u, Rational(n.signs[i]));
            }
            return out;
        }
    }
    throw InternalError("unknown expression node");
}

inline const ExpressionNode* find_kind(const ExpressionNode& n, ExpressionNode::Kind k) {
    if (n.kind == k) return &n;
    for (const auto& c : n.children)
        if (const auto* hit = find_kind(c, k)) return hit;
    return nullptr;
}

}  // namespace detail

inline Expression parse_expression(std::string_view text) {
    return {std::string(text), detail::ExpressionParser(text).parse()};
}

/// An element of U(Vir); `w` is rejected.
inline UEAElement evaluate_uea(const Expression& e) {
    if (const auto* w = detail::find_kind(e.root, ExpressionNode::Kind::Vector))
        throw SemanticError("'w' is not allowed in an element of U(Vir)", w->offset, {"'d' index", "'z'", "rational"});
    return detail::evaluate(e.root).u;
}

/// u.w in `ctx`; every term must end in `w` (the literal 0 is also accepted).
inline ModuleElement evaluate_module(const Expression& e, const ModuleContext& ctx) {
    auto v = detail::evaluate(e.root);
    if (!v.vector) {
        if (v.u.is_zero()) return ModuleElement(ctx);
        throw SemanticError("module element terms must end in 'w'", e.root.offset, {"term ending in 'w'"});
    }
    return map_from_universal(v.u, ctx);
}

/// A polynomial in z; generators and `w` are rejected.
inline Poly evaluate_poly(const Expression& e) {
    for (auto k : {ExpressionNode::Kind::Vector, ExpressionNode::Kind::Generator})
        if (const auto* bad = detail::find_kind(e.root, k))
            throw SemanticError("only 'z' and rationals may appear in a polynomial", bad->offset, {"'z'", "rational"});
    const UEAElement u = detail::evaluate(e.root).u;
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : u.terms()) {
        if (coeffs.size() <= m.z) coeffs.resize(m.z + 1);
        coeffs[m.z] += c;
    }
    return Poly(std::move(coeffs));
}

inline UEAElement parse_uea(std::string_view text) { return evaluate_uea(parse_expression(text)); }
inline ModuleElement parse_module_element(std::string_view text, const ModuleContext& ctx) {
    return evaluate_module(parse_expression(text), ctx);
}
inline Poly parse_poly(std::string_view text) { return evaluate_poly(parse_expression(text)); }

inline Rational parse_rational(std::string_view text) {
    const Poly p = parse_poly(text);
    if (p.degree() > 0) throw SemanticError("expected a rational number", 0, {"rational"});
    return p.coeff(0);
}

/// `M`, `L:xi=<rational>`, `Q:p=<poly>` or `W` (the quotient by z).
inline ModuleContext parse_context(std::string_view text, const WhittakerHomomorphism& psi) {
    auto strip = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    const auto t = strip(text);
    if (t == "M") return ModuleContext::universal(psi);
    if (t == "W") return ModuleContext::central(psi, Rational(0));
    auto rest = [&](std::string_view prefix) { return t.substr(prefix.size()); };
    try {
        if (t.starts_with("L:xi=")) return ModuleContext::central(psi, parse_rational(rest("L:xi=")));
        if (t.starts_with("Q:p=")) return ModuleContext::poly_quotient(psi, parse_poly(rest("Q:p=")));
    } catch (const ParseError& e) {
        const std::size_t shift = static_cast<std::size_t>(t.data() - text.data()) + (t[0] == 'L' ? 5 : 4);
        throw ParseError("bad module descriptor", e.offset() + shift, e.expected());
    }
    throw ParseError("unknown module descriptor '" + std::string(t) + "'", 0, {"M", "L:xi=<rational>", "Q:p=<poly>", "W"});
}

}  // namespace vira
