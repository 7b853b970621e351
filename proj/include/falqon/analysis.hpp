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
 * Post-run analysis: the Lipschitz fidelity bound, open-loop replay of a
 * control sequence under a given error vector, and seed aggregation.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "falqon/engine.hpp"

namespace falqon {

struct LipschitzReport {
    std::vector<double> per_layer_norms; // ||H_p + beta_t H_d||_2
    double l_falqon;                     // delta_t * sum of per_layer_norms
    double epsilon_bar;
    double fidelity_lower_bound; // max(0, 1 - l^2 eps^2 / 2)
    bool vacuous;                // the unclamped bound was <= 0
};

struct FidelityBound {
    double value; // clamped to [0, 1]
    bool vacuous;
};

/// max(0, 1 - l_falqon^2 epsilon_bar^2 / 2).
[[nodiscard]] FidelityBound fidelity_bound(double l_falqon, double epsilon_bar);

[[nodiscard]] LipschitzReport lipschitz_bound(std::span<const double> betas, double delta_t,
                                              const DiagonalHamiltonian &diag,
                                              const DriverHamiltonian &driver,
                                              double epsilon_bar);
[[nodiscard]] LipschitzReport lipschitz_bound(const RunTrace &trace, double delta_t,
                                              const DiagonalHamiltonian &diag,
                                              const DriverHamiltonian &driver,
                                              double epsilon_bar);

/// Applies the fixed layer sequence from the uniform state.
[[nodiscard]] StateVector replay(std::span<const double> betas,
                                 std::span<const double> epsilons, double delta_t,
                                 const DiagonalHamiltonian &diag,
                                 const DriverHamiltonian &driver);

/// |<replay(betas, 0) | replay(betas, epsilons)>|.
[[nodiscard]] double replay_fidelity(std::span<const double> betas,
                                     std::span<const double> epsilons, double delta_t,
                                     const DiagonalHamiltonian &diag,
                                     const DriverHamiltonian &driver);

struct FidelityDraws {
    double min_fidelity;
    double mean_fidelity;
    std::size_t draws;
};

/// Replays `betas` under `draws` error vectors sampled as independent noise
/// with the given seed (draw k uses rebuild index k, counted from 1).
[[nodiscard]] FidelityDraws sample_replay_fidelity(std::span<const double> betas,
                                                   double delta_t,
                                                   const DiagonalHamiltonian &diag,
                                                   const DriverHamiltonian &driver,
                                                   double epsilon_bar, std::size_t draws,
                                                   std::uint64_t seed);

struct SweepSummary {
    double epsilon_bar;
    double lambda;
    std::size_t n_seeds;
    double mean_final_cost_error;
    std::optional<double> std_final_cost_error; // sample std, needs >= 2 runs
    double mean_fidelity;
};

/// Final cost error v_depth - p_0 per run, their mean and sample standard
/// deviation. Fidelity is that of each final state against a noise-free
/// replay of the run's own control sequence.
[[nodiscard]] SweepSummary aggregate(std::span<const RunTrace> runs, double ground_energy);

struct LayerStatistics {
    std::vector<double> mean_cost_error;
    std::vector<double> std_cost_error; // zeros for a single run
};

/// Per-layer mean and sample std of cost - ground_energy across runs.
[[nodiscard]] LayerStatistics layer_statistics(std::span<const RunTrace> runs,
                                               double ground_energy);

[[nodiscard]] double success_probability(const StateVector &state,
                                         std::span<const std::size_t> ground_states);

} // namespace falqon
