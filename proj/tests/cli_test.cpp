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

#include <json.hpp>
#include <sstream>

#include "vira/cli.hpp"

using vira::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result vira_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string row(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (line.rfind(key, 0) == 0) {
            const auto start = line.find_first_not_of(' ', key.size());
            return start == std::string::npos ? "" : line.substr(start);
        }
    return "<missing " + key + ">";
}

}  // namespace

TEST(Cli, StraightenExample) {
    const auto r = vira_run({"straighten", "d2*d-2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(row(r.out, "result"), "d-2*d2 - 4*d0 + (1/2)*z");
}

TEST(Cli, SolveExample) {
    const auto r = vira_run({"solve", "--module", "L:xi=0", "--psi1", "1", "--psi2", "1", "--maxdeg", "5", "--zerocap", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(row(r.out, "dimension"), "1");
    EXPECT_EQ(row(r.out, "basis"), "w");
}

TEST(Cli, SolveExpectationFailureExitsOne) {
    EXPECT_EQ(vira_run({"solve", "--maxdeg", "3", "--zcap", "1"}).code, 0);
    EXPECT_EQ(vira_run({"solve", "--maxdeg", "3", "--zcap", "1", "--expect", "1"}).code, 1);
}

TEST(Cli, DecomposeExample) {
    const auto r = vira_run({"decompose", "--psi1", "1", "--psi2", "1", "--p", "(z-1)^2*(z+3)", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    ASSERT_EQ(j["witness"]["components"].size(), 2u);
    EXPECT_EQ(j["witness"]["components"][0]["root"], "-3");
    EXPECT_EQ(j["witness"]["components"][0]["bezout"]["text"], "(1/16)");
    EXPECT_EQ(j["witness"]["components"][1]["bezout"]["text"], "-(1/16)*z + (5/16)");
    EXPECT_TRUE(j["witness"]["bezout_identity"].get<bool>());
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(vira_run({"verify", "whittaker", "d-1*w", "--module", "L:xi=0"}).code, 1);
    EXPECT_EQ(vira_run({"verify", "whittaker", "w", "--module", "L:xi=0"}).code, 0);
    EXPECT_EQ(vira_run({"decompose", "--p", "z^2+1"}).code, 3);
    EXPECT_EQ(vira_run({"decompose", "--p", "2*z"}).code, 3);
    EXPECT_EQ(vira_run({"act", "--psi1", "0", "w"}).code, 3);
    EXPECT_EQ(vira_run({"witt", "d1", "w", "--module", "L:xi=1"}).code, 3);
    EXPECT_EQ(vira_run({"straighten", "d"}).code, 2);
    EXPECT_EQ(vira_run({"straighten", "d1*w"}).code, 2);
    EXPECT_EQ(vira_run({"act", "--module", "X", "w"}).code, 2);
    EXPECT_EQ(vira_run({"nonsense"}).code, 2);
    EXPECT_EQ(vira_run({}).code, 2);
    EXPECT_EQ(vira_run({"--help"}).code, 0);
}

TEST(Cli, ParseErrorReportsOffset) {
    const auto r = vira_run({"straighten", "d"});
    EXPECT_NE(r.err.find("offset 1"), std::string::npos);
    EXPECT_NE(r.err.find("integer"), std::string::npos);
}

TEST(Cli, JsonAndTextAgree) {
    const std::vector<std::vector<std::string>> commands{
        {"verify", "leading-term"},
        {"verify", "whittaker", "d-1*w", "--module", "L:xi=0"},
        {"verify", "degree-bounds", "--m", "3", "--lambda", "(1,2)"},
        {"series", "--xi", "1", "--a", "3"},
        {"reduce", "--module", "L:xi=5/7", "d-1^2*w + d-3*w"},
    };
    for (auto args : commands) {
        const auto text = vira_run(args);
        args.push_back("--json");
        const auto js = vira_run(args);
        const auto j = nlohmann::json::parse(js.out);
        EXPECT_EQ(text.code, js.code);
        EXPECT_EQ(row(text.out, "verdict"), j["pass"].get<bool>() ? "PASS" : "FAIL");
        for (const char* key : {"check", "params", "pass", "witness"}) EXPECT_TRUE(j.contains(key)) << key;
    }
}

TEST(Cli, ElementSchema) {
    const auto r = vira_run({"act", "--json", "(3/4)*z^2*w + d-1*d0^2*w"});
    const auto j = nlohmann::json::parse(r.out);
    const auto& terms = j["witness"]["result"]["terms"];
    ASSERT_EQ(terms.size(), 2u);
    EXPECT_EQ(terms[0]["lambda"], nlohmann::json::array({0, 0, 1}));
    EXPECT_EQ(terms[0]["z"], 0);
    EXPECT_EQ(terms[0]["coeff"], "1");
    EXPECT_EQ(terms[1]["lambda"], nlohmann::json::array());
    EXPECT_EQ(terms[1]["z"], 2);
    EXPECT_EQ(terms[1]["coeff"], "3/4");
}

TEST(Cli, ReduceAndOrbit) {
    EXPECT_EQ(row(vira_run({"orbit", "d-1*w"}).out, "dimension"), "3");
    const auto r = vira_run({"reduce", "--module", "L:xi=5/7", "--psi1", "2", "--psi2", "-3/2", "d-1*w"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(row(r.out, "result"), "6*w");  // [d3, d-1] w = -4 psi2 w
}

TEST(Cli, NoColorWithoutTerminal) {
    std::ostringstream out, err;
    run({"verify", "leading-term", "--k", "1", "--a", "1"}, out, err, {false});
    EXPECT_EQ(out.str().find("\x1b["), std::string::npos);
    std::ostringstream colored;
    run({"verify", "leading-term", "--k", "1", "--a", "1"}, colored, err, {true});
    EXPECT_NE(colored.str().find("\x1b[32mPASS"), std::string::npos);
}
