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
#include "falqon/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "falqon/error.hpp"
#include "falqon/rng.hpp"

namespace falqon {

DiagonalHamiltonian maxcut_hamiltonian(const Graph &graph) {
    const std::size_t n = graph.n_nodes();
    if (n > kMaxQubits) {
        throw InvalidArgument("maxcut_hamiltonian: " + std::to_string(n) +
                              " nodes exceeds the register cap " + std::to_string(kMaxQubits));
    }
    std::vector<double> diag(dimension_of(n), 0.0);
    for (std::size_t x = 0; x < diag.size(); ++x) {
        double energy = 0.0;
        for (const auto &e : graph.edges()) {
            const double zu = ((x >> e.u) & 1U) != 0U ? -1.0 : 1.0;
            const double zv = ((x >> e.v) & 1U) != 0U ? -1.0 : 1.0;
            energy += e.weight * (zu * zv - 1.0) / 2.0;
        }
        diag[x] = energy;
    }
    return {n, std::move(diag)};
}

DriverHamiltonian driver_x(std::size_t n_qubits) {
    if (n_qubits < 1) {
        throw InvalidArgument("driver_x: need at least one qubit");
    }
    std::vector<XTerm> terms;
    terms.reserve(n_qubits);
    for (std::size_t q = 0; q < n_qubits; ++q) {
        terms.push_back({q, 1.0});
    }
    return {n_qubits, std::move(terms)};
}

GroundEnergy ground_energy(const DiagonalHamiltonian &diag) {
    const auto d = diag.diag();
    const double lowest = *std::min_element(d.begin(), d.end());
    GroundEnergy out{lowest, {}};
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (std::abs(d[i] - lowest) <= kDegeneracyTolerance) {
            out.states.push_back(i);
        }
    }
    return out;
}

namespace {

// out <- (H_p + beta H_d) in, real arithmetic.
void apply_sum(const DiagonalHamiltonian &diag, const DriverHamiltonian &driver, double beta,
               const std::vector<double> &in, std::vector<double> &out) {
    const auto d = diag.diag();
    for (std::size_t i = 0; i < in.size(); ++i) {
        out[i] = d[i] * in[i];
    }
    if (beta == 0.0) {
        return;
    }
    for (const auto &term : driver.terms()) {
        const std::size_t bit = std::size_t{1} << term.qubit;
        const double c = beta * term.coefficient;
        for (std::size_t i = 0; i < in.size(); ++i) {
            out[i] += c * in[i ^ bit];
        }
    }
}

double dot(const std::vector<double> &a, const std::vector<double> &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

double norm2(const std::vector<double> &v) { return std::sqrt(dot(v, v)); }

} // namespace

double spectral_norm(const DiagonalHamiltonian &diag, const DriverHamiltonian &driver,
                     double beta, const SpectralNormOptions &options) {
    if (diag.n_qubits() != driver.n_qubits()) {
        throw InvalidArgument("spectral_norm: dimension mismatch");
    }
    const std::size_t dim = diag.dimension();
    const std::size_t max_steps =
        std::min<std::size_t>(dim, static_cast<std::size_t>(options.max_iterations));

    rng::Engine engine(options.seed);
    std::vector<std::vector<double>> basis;
    basis.reserve(max_steps);
    std::vector<double> q(dim);
    for (auto &x : q) {
        x = 2.0 * rng::uniform01(engine) - 1.0;
    }
    const double start_len = norm2(q);
    for (auto &x : q) {
        x /= start_len;
    }

    std::vector<double> alpha;
    std::vector<double> off; // off[j] couples basis j and j + 1
    std::vector<double> w(dim);
    double estimate = 0.0;
    double residual = 0.0;
    for (std::size_t j = 0; j < max_steps; ++j) {
        basis.push_back(q);
        apply_sum(diag, driver, beta, basis[j], w);
        const double a = dot(basis[j], w);
        alpha.push_back(a);
        // Three-term recurrence, then two passes of full reorthogonalization.
        for (std::size_t i = 0; i < dim; ++i) {
            w[i] -= a * basis[j][i] + (j > 0 ? off[j - 1] * basis[j - 1][i] : 0.0);
        }
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &b : basis) {
                const double c = dot(b, w);
                for (std::size_t i = 0; i < dim; ++i) {
                    w[i] -= c * b[i];
                }
            }
        }
        const double next = norm2(w);

        Eigen::VectorXd t_diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), alpha.size());
        Eigen::VectorXd t_off = Eigen::Map<const Eigen::VectorXd>(off.data(), off.size());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz;
        ritz.computeFromTridiagonal(t_diag, t_off, Eigen::ComputeEigenvectors);
        if (ritz.info() != Eigen::Success) {
            throw NumericalFailure("spectral_norm: tridiagonal eigensolve failed");
        }
        const auto &values = ritz.eigenvalues();
        const Eigen::Index k = values.size() - 1;
        const Eigen::Index extreme = std::abs(values(0)) >= std::abs(values(k)) ? 0 : k;
        estimate = std::abs(values(extreme));
        // |theta - lambda| <= ||M y - theta y|| = next * |last component of s|.
        residual = next * std::abs(ritz.eigenvectors()(k, extreme));

        if (estimate == 0.0 && next == 0.0) {
            return 0.0;
        }
        if (residual <= options.relative_tolerance * estimate || next == 0.0) {
            return estimate;
        }
        off.push_back(next);
        for (std::size_t i = 0; i < dim; ++i) {
            q[i] = w[i] / next;
        }
    }
    if (basis.size() == dim) {
        // The Krylov space is the whole space; the Ritz values are exact.
        return estimate;
    }
    throw NumericalFailure("spectral_norm: Lanczos did not converge in " +
                           std::to_string(max_steps) + " steps (estimate " +
                           std::to_string(estimate) + ", residual " + std::to_string(residual) +
                           ")");
}

SpectrumReport assumption_report(const DiagonalHamiltonian &diag,
                                 const DriverHamiltonian &driver, const StateVector &initial) {
    if (diag.n_qubits() != driver.n_qubits() || diag.dimension() != initial.dimension()) {
        throw InvalidArgument("assumption_report: dimension mismatch");
    }
    SpectrumReport report{};
    auto ground = ground_energy(diag);
    report.ground_energy = ground.energy;
    report.ground_states = std::move(ground.states);

    std::vector<double> sorted(diag.diag().begin(), diag.diag().end());
    std::sort(sorted.begin(), sorted.end());

    report.first_excited_energy = report.ground_energy;
    for (double e : sorted) {
        if (e - report.ground_energy > kDegeneracyTolerance) {
            report.first_excited_energy = e;
            break;
        }
    }

    report.degenerate_eigenvalues = false;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] - sorted[i - 1] <= kDegeneracyTolerance) {
            report.degenerate_eigenvalues = true;
            break;
        }
    }

    // Repeated eigenvalues already force a repeated gap (p_a - p_c = p_b - p_c).
    report.degenerate_gaps = report.degenerate_eigenvalues;
    if (!report.degenerate_gaps) {
        std::vector<double> gaps;
        gaps.reserve(sorted.size() * (sorted.size() - 1) / 2);
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            for (std::size_t j = i + 1; j < sorted.size(); ++j) {
                gaps.push_back(sorted[j] - sorted[i]);
            }
        }
        std::sort(gaps.begin(), gaps.end());
        for (std::size_t i = 1; i < gaps.size(); ++i) {
            if (gaps[i] - gaps[i - 1] <= kDegeneracyTolerance) {
                report.degenerate_gaps = true;
                break;
            }
        }
    }

    // <x|H_d|y> is nonzero only when x and y differ in exactly one bit that
    // carries a nonzero X term, so every pair is coupled only for one qubit.
    const auto terms = driver.terms();
    report.driver_connected = driver.n_qubits() == 1 &&
                              std::any_of(terms.begin(), terms.end(),
                                          [](const XTerm &t) { return t.coefficient != 0.0; });

    const double v0 = expectation_diagonal(initial, diag);
    report.initial_energy_ok =
        report.ground_energy < v0 && v0 < report.first_excited_energy;
    return report;
}

} // namespace falqon
