// Copyright 2026 The falqon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace falqon {

/// Precondition violated by a caller-supplied value.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed input that breaks a domain invariant (duplicate edge, ...).
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input. Carries the 1-based line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// An iterative method did not reach its tolerance.
class NumericalFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A randomized generator exhausted its retry budget.
class GenerationFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace falqon
