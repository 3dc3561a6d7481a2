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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vira {

// Inputs outside the engine's scope: singular psi, polynomials that do not
// split over Q, operations in the wrong module context.
class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NotSplitError : public DomainError {
  public:
    using DomainError::DomainError;
};

// Raised when an algorithmic invariant the engine relies on is violated.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, std::size_t offset, std::vector<std::string> expected = {})
        : std::runtime_error(format(message, offset, expected)), offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

  private:
    static std::string format(const std::string& message, std::size_t offset,
                              const std::vector<std::string>& expected) {
        std::string out = message + " at offset " + std::to_string(offset);
        if (!expected.empty()) {
            out += " (expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i) out += ", ";
                out += expected[i];
            }
            out += ")";
        }
        return out;
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
};

// Well-formed syntax that is meaningless in its position, e.g. `w` where an
// element of U(Vir) is required.
class SemanticError : public ParseError {
  public:
    using ParseError::ParseError;
};

}  // namespace vira
