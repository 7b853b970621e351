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
 * MaxCut problem Hamiltonian, transverse-field driver, and the spectral
 * quantities used by the analysis layer.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "falqon/graph.hpp"
#include "falqon/operators.hpp"
#include "falqon/statevector.hpp"

namespace falqon {

/// Absolute tolerance for treating two energies as equal.
inline constexpr double kDegeneracyTolerance = 1e-12;

/**
 * diag[x] = sum over edges of w_uv (z_u z_v - 1) / 2 with z_i = 1 - 2 bit_i(x),
 * so diag[x] is minus the cut weight of partition x.
 */
[[nodiscard]] DiagonalHamiltonian maxcut_hamiltonian(const Graph &graph);

/// H_d = sum_i X_i over n qubits.
[[nodiscard]] DriverHamiltonian driver_x(std::size_t n_qubits);

struct GroundEnergy {
    double energy;
    std::vector<std::size_t> states;
};

/// Minimum entry and every index within kDegeneracyTolerance of it.
[[nodiscard]] GroundEnergy ground_energy(const DiagonalHamiltonian &diag);

struct SpectralNormOptions {
    int max_iterations = 5000;      // capped at the dimension
    double relative_tolerance = 1e-10; // on the Ritz residual
    std::uint64_t seed = 0x5eed;   // start vector
};

/**
 * ||H_p + beta H_d||_2, the largest |eigenvalue| of the (real symmetric) sum.
 *
 * Lanczos with full reorthogonalization, using only products with the
 * operator. Stops when the residual of the extreme Ritz pair is below the
 * relative tolerance. Plain power iteration stalls when the two largest
 * magnitudes nearly coincide, which happens along feedback trajectories.
 * Throws NumericalFailure if the cap is reached first.
 */
[[nodiscard]] double spectral_norm(const DiagonalHamiltonian &diag,
                                   const DriverHamiltonian &driver, double beta,
                                   const SpectralNormOptions &options = {});

struct SpectrumReport {
    double ground_energy;
    std::vector<std::size_t> ground_states;
    double first_excited_energy;
    bool degenerate_eigenvalues;
    bool degenerate_gaps;
    bool driver_connected;
    bool initial_energy_ok;
};

/// Convergence-assumption diagnostics, evaluated exactly from the diagonal.
[[nodiscard]] SpectrumReport assumption_report(const DiagonalHamiltonian &diag,
                                               const DriverHamiltonian &driver,
                                               const StateVector &initial);

} // namespace falqon
