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

// Reports emitted by the command-line front end: a JSON document
// {"check", "params", "pass", "witness"} or aligned `key  value` text.

#pragma once

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vira/virasoro.hpp"
#include "vira/whittaker.hpp"

namespace vira::report {

using Json = nlohmann::ordered_json;

/// {"terms":[{"z": t, "lambda": [parts ascending], "coeff": "p/q"}]}
inline Json element_json(const ModuleElement& v) {
    Json terms = Json::array();
    for (const auto& [key, c] : v.terms()) {
        Json parts = Json::array();
        for (unsigned k : key.lambda.parts_ascending()) parts.push_back(k);
        terms.push_back({{"z", key.z}, {"lambda", std::move(parts)}, {"coeff", c.to_string()}});
    }
    return {{"terms", std::move(terms)}};
}

/// {"terms":[{"z": t, "word": [ordered indices], "coeff": "p/q"}]}
inline Json algebra_json(const UEAElement& u) {
    Json terms = Json::array();
    for (const auto& [m, c] : u.terms()) terms.push_back({{"z", m.z}, {"word", m.word}, {"coeff", c.to_string()}});
    return {{"terms", std::move(terms)}};
}

/// Coefficients from the constant term up.
inline Json poly_json(const Poly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.to_string());
    return {{"coeffs", std::move(coeffs)}, {"text", p.to_string()}};
}

/// Colour is used on terminals unless VIRA_COLOR=0; VIRA_COLOR=1 forces it.
inline bool color_enabled(bool is_terminal) {
    const char* env = std::getenv("VIRA_COLOR");
    if (env && std::string(env) == "0") return false;
    if (env && std::string(env) == "1") return true;
    return is_terminal;
}

class Report {
  public:
    explicit Report(std::string check) : check_(std::move(check)) {}

    const std::string& check() const noexcept { return check_; }
    bool pass() const noexcept { return pass_; }
    void set_pass(bool pass) { pass_ = pass; }

    /// A parameter shown in both renderings.
    void param(const std::string& key, Json value, std::string text = {}) {
        if (text.empty()) text = value.is_string() ? value.get<std::string>() : value.dump();
        params_[key] = std::move(value);
        rows_.push_back({key, {std::move(text)}});
    }

    Json& witness() noexcept { return witness_; }

    void row(const std::string& key, std::string value) { rows_.push_back({key, {std::move(value)}}); }
    void row(const std::string& key, std::vector<std::string> values) {
        if (values.empty()) values.push_back("(none)");
        rows_.push_back({key, std::move(values)});
    }
    /// Free-form lines printed before the verdict.
    void line(std::string text) { rows_.push_back({"", {std::move(text)}}); }

    Json to_json() const {
        return {{"check", check_}, {"params", params_}, {"pass", pass_}, {"witness", witness_}};
    }

    std::string to_text(bool color) const {
        std::size_t width = std::string("verdict").size();
        for (const auto& [k, v] : rows_) width = std::max(width, k.size());
        width += 2;
        std::string out;
        auto emit = [&](const std::string& key, const std::string& value) {
            out += key + std::string(width - key.size(), ' ') + value + "\n";
        };
        emit("check", check_);
        for (const auto& [key, values] : rows_) {
            if (key.empty()) {
                out += values.front() + "\n";
                continue;
            }
            for (std::size_t i = 0; i < values.size(); ++i) emit(i ? "" : key, values[i]);
        }
        std::string verdict = pass_ ? "PASS" : "FAIL";
        if (color) verdict = (pass_ ? "\x1b[32m" : "\x1b[31m") + verdict + "\x1b[0m";
        emit("verdict", verdict);
        return out;
    }

  private:
    std::string check_;
    Json params_ = Json::object();
    bool pass_ = true;
    Json witness_ = Json::object();
    std::vector<std::pair<std::string, std::vector<std::string>>> rows_;
};

}  // namespace vira::report
