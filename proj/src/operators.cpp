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
#include "falqon/operators.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "falqon/error.hpp"

namespace falqon {

DiagonalHamiltonian::DiagonalHamiltonian(std::size_t n_qubits, std::vector<double> diag)
    : n_qubits_(n_qubits), diag_(std::move(diag)) {
    if (n_qubits_ < 1 || n_qubits_ > kMaxQubits) {
        throw InvalidArgument("diagonal Hamiltonian: qubit count " + std::to_string(n_qubits_) +
                              " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (diag_.size() != dimension_of(n_qubits_)) {
        throw InvalidArgument("diagonal Hamiltonian: expected " +
                              std::to_string(dimension_of(n_qubits_)) + " entries, got " +
                              std::to_string(diag_.size()));
    }
    for (double d : diag_) {
        if (!std::isfinite(d)) {
            throw InvalidArgument("diagonal Hamiltonian: non-finite entry");
        }
    }
}

DriverHamiltonian::DriverHamiltonian(std::size_t n_qubits, std::vector<XTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
    if (n_qubits_ < 1 || n_qubits_ > kMaxQubits) {
        throw InvalidArgument("driver Hamiltonian: qubit count " + std::to_string(n_qubits_) +
                              " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    std::vector<bool> seen(n_qubits_, false);
    for (const auto &term : terms_) {
        if (term.qubit >= n_qubits_) {
            throw InvalidArgument("driver Hamiltonian: qubit index " +
                                  std::to_string(term.qubit) + " out of range");
        }
        if (seen[term.qubit]) {
            throw InvalidArgument("driver Hamiltonian: duplicate term on qubit " +
                                  std::to_string(term.qubit));
        }
        if (!std::isfinite(term.coefficient)) {
            throw InvalidArgument("driver Hamiltonian: non-finite coefficient");
        }
        seen[term.qubit] = true;
    }
}

} // namespace falqon
