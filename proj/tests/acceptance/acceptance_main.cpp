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

// Acceptance grid: prints one PASS/FAIL line per criterion and fails the
// process if any criterion fails.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "vira/cli.hpp"

int main(int argc, char** argv) {
    vira::acceptance::Options options;
    if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
    vira::acceptance::Suite suite(options, [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        return vira::cli::run(args, out, err);
    });
    bool ok = true;
    for (const auto& r : suite.run()) {
        ok = ok && r.pass();
        std::cout << vira::acceptance::format_line(r) << std::endl;
    }
    std::cout << (ok ? "all criteria PASS" : "some criteria FAIL") << std::endl;
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
