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

// A short tour: straighten a product, act on the Whittaker vector, find the
// Whittaker vectors of a simple quotient and split a reducible one.

#include <iostream>

#include "vira/analysis.hpp"
#include "vira/expression.hpp"

int main() {
    using namespace vira;

    std::cout << "d2*d-2 = " << parse_uea("d2*d-2").to_string() << "\n";

    const WhittakerHomomorphism psi(Rational(2), Rational::parse("-3/2"));
    const auto M = ModuleContext::universal(psi);
    const auto v = parse_module_element("d-1^2*w", M);
    std::cout << "d3 . " << v.to_string() << " = " << act(UEAElement::generator(3), v).to_string() << "\n";

    const auto L = ModuleContext::central(psi, Rational::parse("5/7"));
    const auto reduced = whittaker_reduce(parse_module_element("d-3*w + z*d-1*w", L));
    std::cout << "reduced in " << L.descriptor() << " after " << reduced.trace.size()
              << " steps: " << reduced.result.to_string() << "\n";

    const auto sols = whittaker_solve(L, {4, 2, 0});
    std::cout << "Whittaker vectors in " << L.descriptor() << ": " << sols.size() << "\n";

    const auto split = decompose(psi, parse_poly("(z-1)^2*(z+3)"));
    for (const auto& c : split.components)
        std::cout << "component at " << c.root.to_string() << " (length " << c.multiplicity
                  << "), q = " << c.bezout.to_string() << "\n";
    return split.pass ? 0 : 1;
}
