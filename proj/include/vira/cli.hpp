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

// The `vira` command-line front end.
//
// Exit codes: 0 success, 1 a verify/solve assertion failed, 2 parse or usage
// error, 3 domain error, 4 internal error.

#pragma once

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vira/acceptance.hpp"
#include "vira/analysis.hpp"
#include "vira/expression.hpp"
#include "vira/report.hpp"
#include "vira/witt.hpp"

namespace vira::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kParseError = 2, kDomainError = 3, kInternalError = 4 };

struct RunOptions {
    bool color = false;
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& options = {});

namespace detail {

using report::Json;
using report::Report;

struct Config {
    std::string psi1 = "1";
    std::string psi2 = "1";
    std::string module = "M";
    unsigned maxdeg = 4;
    unsigned zerocap = 2;
    unsigned zcap = 0;
    bool json = false;
    std::uint64_t seed = acceptance::Options{}.seed;

    std::vector<std::string> exprs;
    std::string p;
    std::string q = "z-1";
    std::string xi = "0";
    std::string lambda;
    std::optional<unsigned> k, a, m, n, i;
    std::optional<std::size_t> expect;

    // set when the corresponding flag was given explicitly
    bool has_module = false;
    bool has_window = false;
};

inline WhittakerHomomorphism psi(const Config& c) {
    return WhittakerHomomorphism(parse_rational(c.psi1), parse_rational(c.psi2));
}

inline void psi_param(Report& r, const WhittakerHomomorphism& psi) {
    r.param("psi", Json{{"psi1", psi.psi1().to_string()}, {"psi2", psi.psi2().to_string()}},
            "psi1=" + psi.psi1().to_string() + " psi2=" + psi.psi2().to_string());
}

inline TruncationSpec window(const Config& c, const TruncationSpec& fallback) {
    return c.has_window ? TruncationSpec{c.maxdeg, c.zerocap, c.zcap} : fallback;
}

inline void window_param(Report& r, const TruncationSpec& t) {
    r.param("window", Json{{"maxdeg", t.max_degree}, {"zerocap", t.max_zero_count}, {"zcap", t.max_z_power}},
            "maxdeg=" + std::to_string(t.max_degree) + " zerocap=" + std::to_string(t.max_zero_count) +
                " zcap=" + std::to_string(t.max_z_power));
}

inline Pseudopartition lambda_of(const Config& c) {
    if (c.lambda.empty()) throw ParseError("missing --lambda", 0, {"pseudopartition such as (0,1^2,3)"});
    return Pseudopartition::parse(c.lambda);
}

inline const std::string& expr(const Config& c, std::size_t index, const char* what) {
    if (c.exprs.size() <= index) throw ParseError(std::string("missing ") + what, 0, {what});
    return c.exprs[index];
}

inline std::vector<std::string> texts(const std::vector<ModuleElement>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(v.to_string());
    return out;
}

inline Json element_list(const std::vector<ModuleElement>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(report::element_json(v));
    return out;
}

// Parenthesised unless the polynomial prints as a single unsigned factor.
inline std::string factor_text(const Poly& p) {
    const std::string t = p.to_string();
    const bool single = t.find(' ') == std::string::npos && t.front() != '-';
    return single ? t : "(" + t + ")";
}

inline std::string measure_text(const ReductionMeasure& m) {
    return "(" + degree_to_string(m.maxdeg) + "," + degree_to_string(m.top_d0) + ")";
}

// Accumulates a grid of cells, keeping the failing ones for display.
struct Grid {
    std::size_t cells = 0;
    std::vector<std::string> failures;
    Json failing = Json::array();

    void add(bool ok, const std::function<std::string()>& describe, const std::function<Json()>& witness) {
        ++cells;
        if (ok) return;
        failures.push_back(describe());
        failing.push_back(witness());
    }
    void finish(Report& r) {
        r.row("cells", std::to_string(cells));
        r.row("failing", failures.empty() ? std::vector<std::string>{"0"} : failures);
        r.witness()["cells"] = cells;
        r.witness()["failing"] = failing;
        r.set_pass(failures.empty());
    }
};

// --- verbs -----------------------------------------------------------------

inline Report straighten_verb(const Config& c) {
    Report r("straighten");
    const auto& text = expr(c, 0, "expression");
    r.param("expression", text);
    const UEAElement u = parse_uea(text);
    r.row("result", u.to_string());
    r.witness() = {{"result", report::algebra_json(u)}, {"text", u.to_string()}};
    return r;
}

inline Report act_verb(const Config& c) {
    Report r("act");
    const auto ps = psi(c);
    const auto ctx = parse_context(c.module, ps);
    psi_param(r, ps);
    r.param("module", ctx.descriptor());
    ModuleElement result(ctx);
    if (c.exprs.size() >= 2) {
        r.param("u", c.exprs[0]);
        r.param("v", c.exprs[1]);
        result = act(parse_uea(c.exprs[0]), parse_module_element(c.exprs[1], ctx));
    } else {
        r.param("expression", expr(c, 0, "expression"));
        result = parse_module_element(c.exprs[0], ctx);
    }
    r.row("result", result.to_string());
    r.witness() = {{"result", report::element_json(result)}, {"text", result.to_string()}};
    return r;
}

inline Report solve_verb(const Config& c) {
    Report r("solve");
    const auto ps = psi(c);
    const auto ctx = parse_context(c.module, ps);
    const TruncationSpec t{c.maxdeg, c.zerocap, c.zcap};
    psi_param(r, ps);
    r.param("module", ctx.descriptor());
    window_param(r, t);
    const auto sols = whittaker_solve(ctx, t);
    // predicted: z^t w for t <= zcap in M, and deg p in a quotient
    const std::size_t predicted = ctx.is_universal() ? c.zcap + 1 : static_cast<std::size_t>(ctx.modulus().degree());
    const std::size_t expected = c.expect.value_or(predicted);
    bool all_whittaker = true;
    for (const auto& v : sols) all_whittaker = all_whittaker && is_whittaker_vector(v);
    r.row("dimension", std::to_string(sols.size()));
    r.row("expected", std::to_string(expected));
    r.row("basis", texts(sols));
    r.witness() = {{"dimension", sols.size()},
                   {"expected", expected},
                   {"basis", element_list(sols)},
                   {"basis_text", texts(sols)},
                   {"all_whittaker", all_whittaker}};
    r.set_pass(sols.size() == expected && all_whittaker);
    return r;
}

inline Report verify_leading_term_verb(const Config& c) {
    Report r("verify leading-term");
    const auto ps = psi(c);
    psi_param(r, ps);
    std::vector<unsigned> ks, as;
    if (c.k) ks = {*c.k};
    else ks = {0, 1, 2, 3, 4};
    if (c.a) as = {*c.a};
    else as = {1, 2, 3, 4};
    Json cells = Json::array();
    bool ok = true;
    for (unsigned k : ks)
        for (unsigned a : as) {
            const auto rep = verify_leading_term(k, a, ps);
            ok = ok && rep.pass;
            const std::string stat = k > 0 ? "maxdeg" : "max_d0";
            r.row("k=" + std::to_string(k) + " a=" + std::to_string(a),
                  std::vector<std::string>{"leading   " + rep.leading.to_string(),
                                           "remainder " + rep.remainder.to_string(),
                                           stat + "(remainder) = " + degree_to_string(rep.remainder_stat) + " < " +
                                               std::to_string(rep.bound) + (rep.pass ? "  ok" : "  VIOLATED")});
            cells.push_back({{"k", k},
                             {"a", a},
                             {"lhs", report::element_json(rep.lhs)},
                             {"leading_coeff", rep.leading_coeff.to_string()},
                             {"remainder", report::element_json(rep.remainder)},
                             {"remainder_stat", degree_to_string(rep.remainder_stat)},
                             {"bound", rep.bound},
                             {"pass", rep.pass}});
        }
    r.witness()["cells"] = cells;
    r.set_pass(ok);
    return r;
}

inline Report verify_degree_bounds_verb(const Config& c) {
    Report r("verify degree-bounds");
    const auto ps = psi(c);
    psi_param(r, ps);
    if (c.m && !c.lambda.empty()) {
        const auto lambda = lambda_of(c);
        r.param("m", *c.m);
        r.param("lambda", lambda.to_string());
        const auto rep = verify_degree_bounds(*c.m, lambda, ps);
        r.row("bracket", rep.bracket.to_string());
        r.row("part (i)", "maxdeg " + degree_to_string(rep.observed) + " <= " + std::to_string(rep.bound) +
                              (rep.part_i ? "  ok" : "  VIOLATED"));
        Json w{{"bracket", report::element_json(rep.bracket)},
               {"observed", degree_to_string(rep.observed)},
               {"bound", rep.bound},
               {"part_i", rep.part_i},
               {"part_ii_applies", rep.part_ii_applies}};
        if (rep.part_ii_applies) {
            r.row("part (ii)", std::vector<std::string>{"leading   " + rep.leading.to_string(),
                                                        "remainder " + rep.remainder.to_string() +
                                                            (rep.part_ii ? "  ok" : "  VIOLATED")});
            w["leading"] = report::element_json(rep.leading);
            w["remainder"] = report::element_json(rep.remainder);
            w["part_ii"] = rep.part_ii;
        } else {
            r.row("part (ii)", "not applicable (m != k+2)");
        }
        r.witness() = w;
        r.set_pass(rep.pass);
        return r;
    }
    const TruncationSpec t = window(c, {6, 2, 0});
    window_param(r, t);
    Grid g;
    for (const auto& lambda : enumerate_up_to(t.max_degree, t.max_zero_count)) {
        if (lambda.empty()) continue;
        for (unsigned m = 1; m <= t.max_degree + 2; ++m) {
            const auto rep = verify_degree_bounds(m, lambda, ps);
            g.add(rep.pass, [&] { return "m=" + std::to_string(m) + " lambda=" + lambda.to_string(); },
                  [&] { return Json{{"m", m}, {"lambda", lambda.to_string()}, {"bracket", rep.bracket.to_string()}}; });
        }
    }
    g.finish(r);
    return r;
}

inline Report verify_dot_span_verb(const Config& c) {
    Report r("verify dot-span");
    const auto ps = psi(c);
    psi_param(r, ps);
    if (c.n && !c.lambda.empty()) {
        const auto lambda = lambda_of(c);
        const unsigned i = c.i.value_or(0);
        r.param("n", *c.n);
        r.param("i", i);
        r.param("lambda", lambda.to_string());
        const auto rep = verify_dot_span(*c.n, i, lambda, ps);
        r.row("image", rep.image.to_string());
        r.row("bound", "|mu| + mu(0) <= " + std::to_string(rep.bound) + ", z-power in {" + std::to_string(i) + "," +
                           std::to_string(i + 1) + "}");
        r.row("must vanish", rep.must_vanish ? "yes" : "no");
        std::vector<std::string> bad;
        for (const auto& key : rep.violations) bad.push_back(key.body());
        r.row("violations", bad);
        r.witness() = {{"image", report::element_json(rep.image)}, {"bound", rep.bound}, {"must_vanish", rep.must_vanish}};
        r.set_pass(rep.pass);
        return r;
    }
    const TruncationSpec t = window(c, {4, 2, 2});
    window_param(r, t);
    Grid g;
    for (const auto& lambda : enumerate_up_to(t.max_degree, t.max_zero_count))
        for (unsigned i = 0; i <= t.max_z_power; ++i)
            for (unsigned n = 1; n <= lambda.size() + 4; ++n) {
                const auto rep = verify_dot_span(n, i, lambda, ps);
                g.add(rep.pass,
                      [&] { return "n=" + std::to_string(n) + " i=" + std::to_string(i) + " lambda=" + lambda.to_string(); },
                      [&] { return Json{{"n", n}, {"i", i}, {"lambda", lambda.to_string()}, {"image", rep.image.to_string()}}; });
            }
    g.finish(r);
    return r;
}

inline Report verify_nilpotency_verb(const Config& c) {
    Report r("verify nilpotency");
    const auto ps = psi(c);
    psi_param(r, ps);
    auto bound = [](unsigned n, const Pseudopartition& l) { return (l.size() + 2 * l.parts() + n - 1) / n + 1; };
    if (c.n && !c.lambda.empty()) {
        const auto lambda = lambda_of(c);
        r.param("n", *c.n);
        r.param("lambda", lambda.to_string());
        const auto res = nilpotency_index(static_cast<int>(*c.n), lambda, ps);
        const unsigned b = bound(*c.n, lambda);
        r.row("index", std::to_string(res.index));
        r.row("bound", std::to_string(b));
        r.witness() = {{"index", res.index}, {"bound", b}};
        r.set_pass(res.index <= b);
        return r;
    }
    const TruncationSpec t = window(c, {4, 2, 0});
    window_param(r, t);
    Grid g;
    for (const auto& lambda : enumerate_up_to(t.max_degree, t.max_zero_count))
        for (unsigned n = 1; n <= 4; ++n) {
            const auto res = nilpotency_index(static_cast<int>(n), lambda, ps);
            g.add(res.index <= bound(n, lambda), [&] { return "n=" + std::to_string(n) + " lambda=" + lambda.to_string(); },
                  [&] { return Json{{"n", n}, {"lambda", lambda.to_string()}, {"index", res.index}}; });
        }
    g.finish(r);
    return r;
}

inline Report verify_submodule_free_verb(const Config& c) {
    Report r("verify submodule-free");
    const auto ps = psi(c);
    const Poly q = parse_poly(c.q);
    const TruncationSpec t = window(c, {3, 1, 1});
    psi_param(r, ps);
    r.param("q", q.to_string());
    window_param(r, t);
    const auto rep = verify_submodule_free(ps, q, t);
    r.row("vectors", std::to_string(rep.vectors));
    r.row("rank", std::to_string(rep.rank));
    r.witness() = {{"vectors", rep.vectors}, {"rank", rep.rank}};
    r.set_pass(rep.pass);
    return r;
}

inline Report verify_whittaker_verb(const Config& c) {
    Report r("verify whittaker");
    const auto ps = psi(c);
    const auto ctx = parse_context(c.module, ps);
    psi_param(r, ps);
    r.param("module", ctx.descriptor());
    r.param("expression", expr(c, 0, "module element"));
    const auto v = parse_module_element(c.exprs[0], ctx);
    const auto d1 = dot_act(1, v), d2 = dot_act(2, v);
    r.row("element", v.to_string());
    r.row("(d1 - psi1).v", d1.to_string());
    r.row("(d2 - psi2).v", d2.to_string());
    r.witness() = {{"element", report::element_json(v)}, {"d1", report::element_json(d1)}, {"d2", report::element_json(d2)}};
    r.set_pass(d1.is_zero() && d2.is_zero());
    return r;
}

inline Report verify_all_verb(const Config& c) {
    Report r("verify all");
    r.param("seed", c.seed);
    acceptance::Suite suite({c.seed, {}}, [](const std::vector<std::string>& args) {
        std::ostringstream sink, sink_err;
        return run(args, sink, sink_err);
    });
    const auto results = suite.run();
    Json list = Json::array();
    bool ok = true;
    for (const auto& res : results) {
        ok = ok && res.pass();
        r.line(acceptance::format_line(res));
        list.push_back({{"id", res.id},
                        {"title", res.title},
                        {"pass", res.pass()},
                        {"seconds", res.seconds},
                        {"limit", res.limit},
                        {"cases", res.cases},
                        {"detail", res.detail}});
    }
    r.witness()["criteria"] = list;
    r.set_pass(ok);
    return r;
}

inline Report decompose_verb(const Config& c) {
    Report r("decompose");
    const auto ps = psi(c);
    if (c.p.empty()) throw ParseError("missing --p", 0, {"monic polynomial in z"});
    const Poly p = parse_poly(c.p);
    const TruncationSpec t = window(c, {3, 1, 0});
    psi_param(r, ps);
    r.param("p", p.to_string());
    window_param(r, t);
    const auto rep = decompose(ps, p, t);
    Json comps = Json::array();
    std::string certificate;
    for (std::size_t j = 0; j < rep.components.size(); ++j) {
        const auto& cj = rep.components[j];
        r.row("component " + std::to_string(j + 1),
              std::vector<std::string>{"root " + cj.root.to_string() + ", multiplicity " + std::to_string(cj.multiplicity),
                                       "p_j = " + cj.cofactor.to_string(), "q_j = " + cj.bezout.to_string(),
                                       "w_j = " + cj.generator.to_string(),
                                       "window rank " + std::to_string(cj.window_rank)});
        if (!certificate.empty()) certificate += " + ";
        certificate += factor_text(cj.bezout) + "*" + factor_text(cj.cofactor);
        comps.push_back({{"root", cj.root.to_string()},
                         {"multiplicity", cj.multiplicity},
                         {"cofactor", report::poly_json(cj.cofactor)},
                         {"bezout", report::poly_json(cj.bezout)},
                         {"generator", report::element_json(cj.generator)},
                         {"window_rank", cj.window_rank}});
    }
    auto yes = [](bool b) { return std::string(b ? "holds" : "FAILS"); };
    r.row("bezout", certificate + " = 1  " + yes(rep.bezout_identity));
    r.row("cross annihilation", yes(rep.cross_annihilation));
    r.row("idempotence", yes(rep.idempotence));
    r.row("annihilators", yes(rep.annihilators));
    r.row("dimensions", "ambient " + std::to_string(rep.ambient_dimension) + ", union rank " +
                            std::to_string(rep.union_rank) + "  " + yes(rep.dimensions_add));
    r.witness() = {{"components", comps},
                   {"bezout_identity", rep.bezout_identity},
                   {"cross_annihilation", rep.cross_annihilation},
                   {"idempotence", rep.idempotence},
                   {"annihilators", rep.annihilators},
                   {"ambient_dimension", rep.ambient_dimension},
                   {"union_rank", rep.union_rank},
                   {"dimensions_add", rep.dimensions_add}};
    r.set_pass(rep.pass);
    return r;
}

inline Report series_verb(const Config& c) {
    Report r("series");
    const auto ps = psi(c);
    const Rational xi = parse_rational(c.xi);
    const unsigned a = c.a.value_or(2);
    const TruncationSpec t = window(c, {4, 2, 0});
    psi_param(r, ps);
    r.param("xi", xi.to_string());
    r.param("a", a);
    window_param(r, t);
    const auto rep = composition_series(ps, xi, a, t);
    std::vector<std::string> gens, layers;
    for (std::size_t i = 0; i < rep.generators.size(); ++i)
        gens.push_back("w" + std::to_string(i) + " = " + rep.generators[i].to_string());
    Json layer_json = Json::array();
    for (std::size_t i = 0; i < rep.strict.size(); ++i) {
        layers.push_back("V" + std::to_string(i) + "/V" + std::to_string(i + 1) + ": " +
                         (rep.strict[i] ? "strict" : "NOT strict") + ", Whittaker dimension " +
                         std::to_string(rep.quotient_whittaker_dims[i]));
        layer_json.push_back({{"strict", static_cast<bool>(rep.strict[i])}, {"whittaker_dimension", rep.quotient_whittaker_dims[i]}});
    }
    r.row("generators", gens);
    r.row("layers", layers);
    r.witness() = {{"generators", element_list(rep.generators)},
                   {"generators_nonzero", rep.generators_nonzero},
                   {"terminal_zero", rep.terminal_zero},
                   {"layers", layer_json}};
    r.set_pass(rep.pass);
    return r;
}

inline Report annihilate_verb(const Config& c) {
    Report r("annihilate");
    const auto ps = psi(c);
    Poly p;
    if (!c.p.empty()) p = parse_poly(c.p);
    else p = parse_context(c.module, ps).modulus();
    psi_param(r, ps);
    r.param("p", p.to_string());
    r.param("expression", expr(c, 0, "element of U(Vir)"));
    const UEAElement u = parse_uea(c.exprs[0]);
    const auto form = annihilator_normal_form(u, ps, p);
    const bool exact = reexpand(form, ps, p) == u;
    std::vector<std::string> tail;
    Json tail_json = Json::object();
    for (const auto& [i, ui] : form.tail) {
        tail.push_back("(d" + std::to_string(i) + " - psi" + std::to_string(i) + "): " + ui.to_string());
        tail_json[std::to_string(i)] = report::algebra_json(ui);
    }
    r.row("u0 (times p)", form.u0.to_string());
    r.row("tail", tail);
    r.row("residual", form.residual.to_string());
    r.row("annihilates w", form.residual.is_zero() ? "yes" : "no");
    r.row("re-expansion", exact ? "exact" : "MISMATCH");
    r.witness() = {{"u0", report::algebra_json(form.u0)},
                   {"tail", tail_json},
                   {"residual", report::algebra_json(form.residual)},
                   {"residual_text", form.residual.to_string()},
                   {"in_annihilator", form.residual.is_zero()},
                   {"reexpansion_exact", exact}};
    r.set_pass(exact);
    return r;
}

inline Report reduce_verb(const Config& c) {
    Report r("reduce");
    const auto ps = psi(c);
    const auto ctx = parse_context(c.module, ps);
    psi_param(r, ps);
    r.param("module", ctx.descriptor());
    r.param("expression", expr(c, 0, "module element"));
    const auto v = parse_module_element(c.exprs[0], ctx);
    const auto res = whittaker_reduce(v);
    std::vector<std::string> steps;
    Json trace = Json::array();
    for (const auto& s : res.trace) {
        steps.push_back("apply d" + std::to_string(s.op) + " - psi" + std::to_string(s.op) + "  measure " +
                        measure_text(s.before) + " -> " + measure_text(s.after));
        trace.push_back({{"op", s.op}, {"before", measure_text(s.before)}, {"after", measure_text(s.after)}});
    }
    r.row("start", v.to_string());
    r.row("steps", steps);
    r.row("result", res.result.to_string());
    r.witness() = {{"trace", trace}, {"result", report::element_json(res.result)}, {"text", res.result.to_string()}};
    r.set_pass(!res.result.is_zero() && is_whittaker_vector(res.result));
    return r;
}

inline Report orbit_verb(const Config& c) {
    Report r("orbit");
    const auto ps = psi(c);
    const auto ctx = parse_context(c.module, ps);
    psi_param(r, ps);
    r.param("module", ctx.descriptor());
    r.param("expression", expr(c, 0, "module element"));
    const auto o = dot_orbit_dimension(parse_module_element(c.exprs[0], ctx));
    r.row("dimension", std::to_string(o.dimension));
    r.row("spanning set", texts(o.spanning_set));
    r.witness() = {{"dimension", o.dimension}, {"spanning_set", element_list(o.spanning_set)}};
    return r;
}

inline Report witt_verb(const Config& c) {
    Report r("witt");
    const auto& text = expr(c, 0, "element of U(Vir)");
    r.param("u", text);
    const WittElement u = project(parse_uea(text));
    r.row("projection", u.to_string());
    r.witness() = {{"projection", report::algebra_json(u.lift())}, {"text", u.to_string()}};
    if (c.exprs.size() >= 2) {
        const auto ps = psi(c);
        const auto ctx = parse_context(c.has_module ? c.module : "W", ps);
        psi_param(r, ps);
        r.param("module", ctx.descriptor());
        r.param("v", c.exprs[1]);
        const auto result = witt_act(u, parse_module_element(c.exprs[1], ctx));
        r.row("result", result.to_string());
        r.witness()["result"] = report::element_json(result);
        r.witness()["result_text"] = result.to_string();
    }
    return r;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& options) {
    using detail::Report;
    detail::Config cfg;
    CLI::App app{"Exact computations in Whittaker modules for the Virasoro algebra", "vira"};
    app.require_subcommand(1);
    app.add_option("--psi1", cfg.psi1, "psi(d1), a nonzero rational")->capture_default_str();
    app.add_option("--psi2", cfg.psi2, "psi(d2), a nonzero rational")->capture_default_str();
    auto* module_opt = app.add_option("--module", cfg.module, "M | L:xi=<r> | Q:p=<poly> | W")->capture_default_str();
    auto* maxdeg_opt = app.add_option("--maxdeg", cfg.maxdeg, "truncation: |lambda| <= maxdeg")->capture_default_str();
    auto* zerocap_opt = app.add_option("--zerocap", cfg.zerocap, "truncation: lambda(0) <= zerocap")->capture_default_str();
    auto* zcap_opt = app.add_option("--zcap", cfg.zcap, "truncation: z-power <= zcap (universal module)")->capture_default_str();
    app.add_flag("--json", cfg.json, "emit a JSON report");
    app.add_option("--seed", cfg.seed, "seed for randomised checks")->capture_default_str();

    enum class Verb { None, Straighten, Act, Solve, LeadingTerm, DegreeBounds, DotSpan, Nilpotency, SubmoduleFree, Whittaker,
                      All, Decompose, Series, Annihilate, Reduce, Orbit, Witt };
    Verb verb = Verb::None;
    auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help, Verb v) {
        auto* s = parent->add_subcommand(name, help);
        s->fallthrough();
        s->callback([&verb, v] { verb = v; });
        return s;
    };
    auto exprs = [&](CLI::App* s, const std::string& help) { s->add_option("expressions", cfg.exprs, help); };

    exprs(sub(&app, "straighten", "PBW normal form of an element of U(Vir)", Verb::Straighten), "element of U(Vir)");
    exprs(sub(&app, "act", "evaluate u.w, or u acting on v, in --module", Verb::Act), "u.w  |  u v");
    auto* solve = sub(&app, "solve", "Whittaker vectors inside the truncation window", Verb::Solve);
    solve->add_option("--expect", cfg.expect, "expected dimension (default: the predicted one)");

    auto* verify = app.add_subcommand("verify", "structural checks");
    verify->fallthrough();
    verify->require_subcommand(1);
    auto* leading = sub(verify, "leading-term", "leading term of [d_{k+2}, d_{-k}^a] w", Verb::LeadingTerm);
    leading->add_option("--k", cfg.k, "k >= 0 (default: grid 0..4)");
    leading->add_option("--a", cfg.a, "a >= 1 (default: grid 1..4)")->check(CLI::PositiveNumber);
    auto* bounds = sub(verify, "degree-bounds", "maxdeg([d_m, d_{-lambda}] w) bound and leading term", Verb::DegreeBounds);
    bounds->add_option("--m", cfg.m, "m >= 1")->check(CLI::PositiveNumber);
    bounds->add_option("--lambda", cfg.lambda, "pseudopartition, e.g. (0,1^2)");
    auto* span = sub(verify, "dot-span", "support of d_n . z^i d_{-lambda} w", Verb::DotSpan);
    span->add_option("--n", cfg.n, "n >= 1")->check(CLI::PositiveNumber);
    span->add_option("--i", cfg.i, "z-power i");
    span->add_option("--lambda", cfg.lambda, "pseudopartition");
    auto* nil = sub(verify, "nilpotency", "local nilpotency of the dot action", Verb::Nilpotency);
    nil->add_option("--n", cfg.n, "n >= 1")->check(CLI::PositiveNumber);
    nil->add_option("--lambda", cfg.lambda, "pseudopartition");
    auto* freeness = sub(verify, "submodule-free", "U(Vir) q(z) w is free over the window", Verb::SubmoduleFree);
    freeness->add_option("--q", cfg.q, "polynomial q(z)")->capture_default_str();
    exprs(sub(verify, "whittaker", "is the element a Whittaker vector?", Verb::Whittaker), "module element");
    sub(verify, "all", "run the full acceptance grid", Verb::All);

    auto* dec = sub(&app, "decompose", "split M_psi / p(z) w into local components", Verb::Decompose);
    dec->add_option("--p", cfg.p, "monic polynomial splitting over Q");
    auto* ser = sub(&app, "series", "composition series of M_psi / (z - xi)^a w", Verb::Series);
    ser->add_option("--xi", cfg.xi, "root xi")->capture_default_str();
    ser->add_option("--a", cfg.a, "multiplicity a >= 1")->check(CLI::PositiveNumber);
    auto* ann = sub(&app, "annihilate", "normal form modulo the annihilator of w", Verb::Annihilate);
    ann->add_option("--p", cfg.p, "annihilating polynomial (default: from --module)");
    exprs(ann, "element of U(Vir)");
    exprs(sub(&app, "reduce", "drive a nonzero element to a Whittaker vector", Verb::Reduce), "module element");
    exprs(sub(&app, "orbit", "dimension of U(n+) . v under the dot action", Verb::Orbit), "module element");
    exprs(sub(&app, "witt", "project to U(W); with v, act on L_{psi,0}", Verb::Witt), "u [v]");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "vira: usage error: " << e.what() << "\n";
        return kParseError;
    }
    cfg.has_module = module_opt->count() > 0;
    cfg.has_window = maxdeg_opt->count() + zerocap_opt->count() + zcap_opt->count() > 0;

    const bool checks_assert = verb == Verb::Solve || (verb >= Verb::LeadingTerm && verb <= Verb::All);
    try {
        std::optional<Report> rep;
        switch (verb) {
            case Verb::Straighten: rep = detail::straighten_verb(cfg); break;
            case Verb::Act: rep = detail::act_verb(cfg); break;
            case Verb::Solve: rep = detail::solve_verb(cfg); break;
            case Verb::LeadingTerm: rep = detail::verify_leading_term_verb(cfg); break;
            case Verb::DegreeBounds: rep = detail::verify_degree_bounds_verb(cfg); break;
            case Verb::DotSpan: rep = detail::verify_dot_span_verb(cfg); break;
            case Verb::Nilpotency: rep = detail::verify_nilpotency_verb(cfg); break;
            case Verb::SubmoduleFree: rep = detail::verify_submodule_free_verb(cfg); break;
            case Verb::Whittaker: rep = detail::verify_whittaker_verb(cfg); break;
            case Verb::All: rep = detail::verify_all_verb(cfg); break;
            case Verb::Decompose: rep = detail::decompose_verb(cfg); break;
            case Verb::Series: rep = detail::series_verb(cfg); break;
            case Verb::Annihilate: rep = detail::annihilate_verb(cfg); break;
            case Verb::Reduce: rep = detail::reduce_verb(cfg); break;
            case Verb::Orbit: rep = detail::orbit_verb(cfg); break;
            case Verb::Witt: rep = detail::witt_verb(cfg); break;
            case Verb::None: err << "vira: no command given\n"; return kParseError;
        }
        if (cfg.json) out << rep->to_json().dump(2) << "\n";
        else out << rep->to_text(options.color);
        if (rep->pass()) return kOk;
        if (checks_assert) return kFailed;
        err << "vira: internal consistency check failed in " << rep->check() << "\n";
        return kInternalError;
    } catch (const ParseError& e) {
        err << "vira: parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const DomainError& e) {
        err << "vira: domain error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        err << "vira: internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace vira::cli
