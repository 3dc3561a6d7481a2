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

// The Witt algebra as Vir / Cz and L_{psi,0} viewed as a Witt module.

#pragma once

#include <string>

#include "vira/virasoro.hpp"
#include "vira/whittaker.hpp"

namespace vira {

/// Element of U(W): a UEAElement with no z-powers.
class WittElement {
  public:
    WittElement() = default;

    /// Adopts u, which must be z-free.
    static WittElement from_z_free(UEAElement u) {
        for (const auto& [m, c] : u.terms())
            if (m.z != 0) throw DomainError("Witt elements cannot contain the central element z");
        WittElement w;
        w.value_ = std::move(u);
        return w;
    }

    const UEAElement& lift() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }
    std::string to_string() const { return value_.to_string(); }
    friend bool operator==(const WittElement&, const WittElement&) = default;

  private:
    UEAElement value_;
};

/// The quotient map rho: sets z = 0.
inline WittElement project(const UEAElement& u) {
    UEAElement out;
    for (const auto& [m, c] : u.terms())
        if (m.z == 0) out.add(m, c);
    return WittElement::from_z_free(std::move(out));
}

/// Witt bracket [d_i, d_j] = (j - i) d_{i+j}.
inline WittElement witt_bracket(int i, int j) {
    return project(bracket(i, j));
}

inline bool is_witt_context(const ModuleContext& ctx) {
    return !ctx.is_universal() && ctx.modulus() == Poly::z();
}

/// Action of U(W) on L_{psi,0}; z acts as 0 there so any preimage works.
inline ModuleElement witt_act(const WittElement& u, const ModuleElement& v) {
    if (!is_witt_context(v.context()))
        throw DomainError("Witt action needs central character 0 (module W or L:xi=0), got " + v.context().descriptor());
    return act(u.lift(), v);
}

}  // namespace vira
