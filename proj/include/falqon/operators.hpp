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
#include <span>
#include <vector>

namespace falqon {

/// Largest register the library will allocate.
inline constexpr std::size_t kMaxQubits = 12;

[[nodiscard]] constexpr std::size_t dimension_of(std::size_t n_qubits) noexcept {
    return std::size_t{1} << n_qubits;
}

/**
 * Real diagonal operator in the computational basis.
 *
 * Basis index i encodes the bitstring with qubit 0 as the least significant
 * bit. Entries must be finite.
 */
class DiagonalHamiltonian {
  public:
    DiagonalHamiltonian(std::size_t n_qubits, std::vector<double> diag);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return diag_.size(); }
    [[nodiscard]] std::span<const double> diag() const noexcept { return diag_; }
    [[nodiscard]] double operator[](std::size_t i) const { return diag_[i]; }

  private:
    std::size_t n_qubits_;
    std::vector<double> diag_;
};

struct XTerm {
    std::size_t qubit;
    double coefficient;
};

/// Weighted sum of single-qubit Pauli-X terms on distinct qubits.
class DriverHamiltonian {
  public:
    DriverHamiltonian(std::size_t n_qubits, std::vector<XTerm> terms);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::span<const XTerm> terms() const noexcept { return terms_; }

  private:
    std::size_t n_qubits_;
    std::vector<XTerm> terms_;
};

} // namespace falqon
