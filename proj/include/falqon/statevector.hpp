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

/**
 * @file
 * Dense statevector and the structured operations the feedback loop needs.
 *
 * Gate functions mutate a caller-owned state in place. Amplitude index i
 * encodes a bitstring with qubit 0 as the least significant bit.
 */

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "falqon/operators.hpp"

namespace falqon {

using Complex = std::complex<double>;

class StateVector {
  public:
    /// Takes ownership of amplitudes; their count must be 2^n_qubits.
    StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }

    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }

    [[nodiscard]] const Complex &operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm() const;

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

/// Equal superposition over all 2^n basis states, 1 <= n <= kMaxQubits.
[[nodiscard]] StateVector uniform_state(std::size_t n_qubits);

/// Computational basis state |index>.
[[nodiscard]] StateVector basis_state(std::size_t n_qubits, std::size_t index);

/// state <- exp(-i * scale * H_p) state.
void apply_diagonal_phase(StateVector &state, const DiagonalHamiltonian &diag, double scale);

/// state <- exp(-i * angle * H_d) state, applied exactly as one rotation per X term.
void apply_x_rotations(StateVector &state, const DriverHamiltonian &driver, double angle);

/// <psi|H_p|psi>.
[[nodiscard]] double expectation_diagonal(const StateVector &state,
                                          const DiagonalHamiltonian &diag);

/**
 * Commutator expectation <psi| i[H_d, H_p] |psi>.
 *
 * Evaluated as -2 Im <psi| H_d H_p |psi> with one diagonal scaling and one
 * driver application; the commutator is never materialized.
 */
[[nodiscard]] double a_value(const StateVector &state, const DiagonalHamiltonian &diag,
                             const DriverHamiltonian &driver);

/// sum_i conj(a_i) b_i.
[[nodiscard]] Complex inner_product(const StateVector &a, const StateVector &b);

/// out <- H_d in. Buffers must both have the driver's dimension.
void apply_driver(std::span<const Complex> in, std::span<Complex> out,
                  const DriverHamiltonian &driver);

} // namespace falqon
