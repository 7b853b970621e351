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
#include "falqon/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "falqon/error.hpp"

namespace falqon {

namespace {

void require_dimension(std::size_t got, std::size_t want, const char *what) {
    if (got != want) {
        throw InvalidArgument(std::string(what) + ": dimension mismatch (" +
                              std::to_string(got) + " vs " + std::to_string(want) + ")");
    }
}

void require_qubits(std::size_t n) {
    if (n < 1 || n > kMaxQubits) {
        throw InvalidArgument("qubit count " + std::to_string(n) + " outside [1, " +
                              std::to_string(kMaxQubits) + "]");
    }
}

} // namespace

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    require_qubits(n_qubits_);
    require_dimension(amps_.size(), dimension_of(n_qubits_), "StateVector");
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto &a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

StateVector uniform_state(std::size_t n_qubits) {
    require_qubits(n_qubits);
    const std::size_t dim = dimension_of(n_qubits);
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    return {n_qubits, std::vector<Complex>(dim, Complex{amp, 0.0})};
}

StateVector basis_state(std::size_t n_qubits, std::size_t index) {
    require_qubits(n_qubits);
    const std::size_t dim = dimension_of(n_qubits);
    if (index >= dim) {
        throw InvalidArgument("basis index " + std::to_string(index) + " out of range");
    }
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return {n_qubits, std::move(amps)};
}

void apply_diagonal_phase(StateVector &state, const DiagonalHamiltonian &diag, double scale) {
    require_dimension(state.dimension(), diag.dimension(), "apply_diagonal_phase");
    auto amps = state.amplitudes();
    const auto d = diag.diag();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double phase = -scale * d[i];
        amps[i] *= Complex{std::cos(phase), std::sin(phase)};
    }
}

void apply_x_rotations(StateVector &state, const DriverHamiltonian &driver, double angle) {
    require_dimension(state.n_qubits(), driver.n_qubits(), "apply_x_rotations");
    auto amps = state.amplitudes();
    for (const auto &term : driver.terms()) {
        // exp(-i theta X) = cos(theta) I - i sin(theta) X
        const double theta = angle * term.coefficient;
        const double c = std::cos(theta);
        const Complex s{0.0, -std::sin(theta)};
        const std::size_t bit = std::size_t{1} << term.qubit;
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if ((i & bit) != 0U) {
                continue;
            }
            const Complex a0 = amps[i];
            const Complex a1 = amps[i | bit];
            amps[i] = c * a0 + s * a1;
            amps[i | bit] = s * a0 + c * a1;
        }
    }
}

double expectation_diagonal(const StateVector &state, const DiagonalHamiltonian &diag) {
    require_dimension(state.dimension(), diag.dimension(), "expectation_diagonal");
    const auto d = diag.diag();
    double sum = 0.0;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        sum += std::norm(state[i]) * d[i];
    }
    return sum;
}

void apply_driver(std::span<const Complex> in, std::span<Complex> out,
                  const DriverHamiltonian &driver) {
    const std::size_t dim = dimension_of(driver.n_qubits());
    require_dimension(in.size(), dim, "apply_driver");
    require_dimension(out.size(), dim, "apply_driver");
    std::fill(out.begin(), out.end(), Complex{});
    for (const auto &term : driver.terms()) {
        const std::size_t bit = std::size_t{1} << term.qubit;
        for (std::size_t i = 0; i < dim; ++i) {
            out[i] += term.coefficient * in[i ^ bit];
        }
    }
}

double a_value(const StateVector &state, const DiagonalHamiltonian &diag,
               const DriverHamiltonian &driver) {
    require_dimension(state.dimension(), diag.dimension(), "a_value");
    require_dimension(state.n_qubits(), driver.n_qubits(), "a_value");
    const std::size_t dim = state.dimension();
    std::vector<Complex> hp_psi(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        hp_psi[i] = diag[i] * state[i];
    }
    std::vector<Complex> hd_hp_psi(dim);
    apply_driver(hp_psi, hd_hp_psi, driver);
    Complex z{};
    for (std::size_t i = 0; i < dim; ++i) {
        z += std::conj(state[i]) * hd_hp_psi[i];
    }
    return -2.0 * z.imag();
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    require_dimension(a.dimension(), b.dimension(), "inner_product");
    Complex sum{};
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

} // namespace falqon
