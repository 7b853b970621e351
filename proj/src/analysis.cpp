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
#include "falqon/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "falqon/error.hpp"

namespace falqon {

namespace {

struct MeanStd {
    double mean;
    std::optional<double> std;
};

MeanStd mean_std(std::span<const double> xs) {
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
    }
    const double mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2) {
        return {mean, std::nullopt};
    }
    double ss = 0.0;
    for (double x : xs) {
        ss += (x - mean) * (x - mean);
    }
    return {mean, std::sqrt(ss / static_cast<double>(xs.size() - 1))};
}

} // namespace

FidelityBound fidelity_bound(double l_falqon, double epsilon_bar) {
    const double raw = 1.0 - l_falqon * l_falqon * epsilon_bar * epsilon_bar / 2.0;
    return {std::clamp(raw, 0.0, 1.0), raw <= 0.0};
}

LipschitzReport lipschitz_bound(std::span<const double> betas, double delta_t,
                                const DiagonalHamiltonian &diag, const DriverHamiltonian &driver,
                                double epsilon_bar) {
    if (betas.empty()) {
        throw InvalidArgument("lipschitz_bound: empty control sequence");
    }
    LipschitzReport report{{}, 0.0, epsilon_bar, 1.0, false};
    report.per_layer_norms.reserve(betas.size());
    double sum = 0.0;
    for (double beta : betas) {
        const double norm = spectral_norm(diag, driver, beta);
        report.per_layer_norms.push_back(norm);
        sum += norm;
    }
    report.l_falqon = delta_t * sum;
    const auto bound = fidelity_bound(report.l_falqon, epsilon_bar);
    report.fidelity_lower_bound = bound.value;
    report.vacuous = bound.vacuous;
    return report;
}

LipschitzReport lipschitz_bound(const RunTrace &trace, double delta_t,
                                const DiagonalHamiltonian &diag, const DriverHamiltonian &driver,
                                double epsilon_bar) {
    const auto betas = trace.betas();
    return lipschitz_bound(betas, delta_t, diag, driver, epsilon_bar);
}

StateVector replay(std::span<const double> betas, std::span<const double> epsilons,
                   double delta_t, const DiagonalHamiltonian &diag,
                   const DriverHamiltonian &driver) {
    if (betas.size() != epsilons.size()) {
        throw InvalidArgument("replay: " + std::to_string(betas.size()) + " controls but " +
                              std::to_string(epsilons.size()) + " error values");
    }
    auto state = uniform_state(diag.n_qubits());
    for (std::size_t t = 0; t < betas.size(); ++t) {
        layer(state, betas[t], delta_t, epsilons[t], diag, driver);
    }
    return state;
}

double replay_fidelity(std::span<const double> betas, std::span<const double> epsilons,
                       double delta_t, const DiagonalHamiltonian &diag,
                       const DriverHamiltonian &driver) {
    const std::vector<double> zeros(betas.size(), 0.0);
    const auto ideal = replay(betas, zeros, delta_t, diag, driver);
    const auto noisy = replay(betas, epsilons, delta_t, diag, driver);
    return std::abs(inner_product(ideal, noisy));
}

FidelityDraws sample_replay_fidelity(std::span<const double> betas, double delta_t,
                                     const DiagonalHamiltonian &diag,
                                     const DriverHamiltonian &driver, double epsilon_bar,
                                     std::size_t draws, std::uint64_t seed) {
    if (draws < 1) {
        throw InvalidArgument("sample_replay_fidelity: need at least one draw");
    }
    const NoiseModel model{NoiseKind::independent, epsilon_bar, seed};
    const std::vector<double> zeros(betas.size(), 0.0);
    const auto ideal = replay(betas, zeros, delta_t, diag, driver);
    FidelityDraws out{1.0, 0.0, draws};
    double sum = 0.0;
    double lowest = 0.0;
    for (std::size_t k = 1; k <= draws; ++k) {
        const auto eps = trajectory(model, betas.size(), k);
        const double f = std::abs(inner_product(ideal, replay(betas, eps, delta_t, diag, driver)));
        lowest = k == 1 ? f : std::min(lowest, f);
        sum += f;
    }
    out.min_fidelity = lowest;
    out.mean_fidelity = sum / static_cast<double>(draws);
    return out;
}

SweepSummary aggregate(std::span<const RunTrace> runs, double ground_energy) {
    if (runs.empty()) {
        throw InvalidArgument("aggregate: no runs");
    }
    const auto &first = runs.front().config;
    std::vector<double> errors;
    errors.reserve(runs.size());
    double fidelity_sum = 0.0;
    for (const auto &run : runs) {
        const auto &c = run.config;
        if (c.graph.n_nodes() != first.graph.n_nodes() || c.depth != first.depth ||
            c.noise.kind != first.noise.kind || c.noise.epsilon_bar != first.noise.epsilon_bar ||
            c.law.lambda != first.law.lambda || run.layers.size() != first.depth) {
            throw InvalidArgument("aggregate: runs do not share one configuration shape");
        }
        const double err = run.layers.back().cost - ground_energy;
        if (err < -1e-9) {
            throw NumericalFailure("aggregate: final cost " + std::to_string(run.layers.back().cost) +
                                   " below ground energy " + std::to_string(ground_energy));
        }
        errors.push_back(err);

        const auto diag = maxcut_hamiltonian(c.graph);
        const auto driver = driver_x(c.graph.n_nodes());
        const auto betas = run.betas();
        const std::vector<double> zeros(betas.size(), 0.0);
        const auto ideal = replay(betas, zeros, c.delta_t, diag, driver);
        fidelity_sum += std::abs(inner_product(ideal, run.final_state));
    }
    const auto stats = mean_std(errors);
    return {first.noise.epsilon_bar, first.law.lambda,  runs.size(), stats.mean, stats.std,
            fidelity_sum / static_cast<double>(runs.size())};
}

LayerStatistics layer_statistics(std::span<const RunTrace> runs, double ground_energy) {
    if (runs.empty()) {
        throw InvalidArgument("layer_statistics: no runs");
    }
    const std::size_t depth = runs.front().layers.size();
    LayerStatistics out{std::vector<double>(depth), std::vector<double>(depth, 0.0)};
    std::vector<double> column(runs.size());
    for (std::size_t t = 0; t < depth; ++t) {
        for (std::size_t r = 0; r < runs.size(); ++r) {
            if (runs[r].layers.size() != depth) {
                throw InvalidArgument("layer_statistics: runs have different depths");
            }
            column[r] = runs[r].layers[t].cost - ground_energy;
        }
        const auto stats = mean_std(column);
        out.mean_cost_error[t] = stats.mean;
        out.std_cost_error[t] = stats.std.value_or(0.0);
    }
    return out;
}

double success_probability(const StateVector &state, std::span<const std::size_t> ground_states) {
    double p = 0.0;
    for (std::size_t i : ground_states) {
        if (i >= state.dimension()) {
            throw InvalidArgument("success_probability: basis index " + std::to_string(i) +
                                  " out of range");
        }
        p += std::norm(state[i]);
    }
    return p;
}

} // namespace falqon
