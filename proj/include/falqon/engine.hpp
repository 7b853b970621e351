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
 * The feedback loop: Trotterized layers U_d(beta_t) U_p, with the control
 * for layer t+1 set from the commutator expectation measured after layer t.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "falqon/graph.hpp"
#include "falqon/hamiltonian.hpp"
#include "falqon/noise.hpp"
#include "falqon/statevector.hpp"

namespace falqon {

inline constexpr std::size_t kMaxDepth = 2000;
inline constexpr std::size_t kMaxDepthIndependent = 500;

/// beta = -w * A / (2 lambda). lambda = 1/2, w = 1 gives the standard beta = -A.
struct FeedbackLaw {
    double lambda = 0.5;
    double w = 1.0;
};

struct RunConfig {
    Graph graph;
    double delta_t = 0.05;
    std::size_t depth = 1;
    FeedbackLaw law{};
    NoiseModel noise{};

    /// Checks every precondition of the run functions; throws InvalidArgument.
    void validate() const;
};

struct LayerRecord {
    std::size_t t;
    double beta; // control applied in layer t
    double a;    // commutator expectation after layer t
    double cost; // <H_p> after layer t

    friend bool operator==(const LayerRecord &, const LayerRecord &) = default;
};

struct RunTrace {
    RunConfig config;
    std::vector<LayerRecord> layers;
    StateVector final_state;
    double ground_energy;
    std::vector<std::size_t> ground_states;
    /// Errors applied to the circuit that produced final_state: the master
    /// trajectory for systematic runs, the last rebuild's draw for
    /// independent runs, zeros otherwise. Rebuild t of an independent run
    /// used trajectory(noise, t, t).
    ErrorTrajectory final_epsilons;
    std::uint64_t layer_applications = 0;

    [[nodiscard]] std::vector<double> betas() const;
    [[nodiscard]] std::vector<double> costs() const;
};

/// state <- U_d((1+eps) beta dt) U_p((1+eps) dt) state.
void layer(StateVector &state, double beta, double delta_t, double epsilon,
           const DiagonalHamiltonian &diag, const DriverHamiltonian &driver);

[[nodiscard]] double feedback(double a, const FeedbackLaw &law);

/// Noise-free loop with incremental evolution.
[[nodiscard]] RunTrace run_nominal(const RunConfig &config);

/// Systematic noise. The master trajectory is drawn once up front; its
/// prefix property makes incremental evolution equal to rebuilding.
[[nodiscard]] RunTrace run_systematic(const RunConfig &config);

/// Systematic noise evaluated with a full rebuild per feedback step, for
/// checking the incremental shortcut.
[[nodiscard]] RunTrace run_systematic_rebuilt(const RunConfig &config);

/// Independent noise: step t rebuilds all t layers from the uniform state
/// with trajectory(noise, t, t). depth (depth + 1) / 2 layer applications.
[[nodiscard]] RunTrace run_independent(const RunConfig &config);

/// Dispatches on config.noise.kind.
[[nodiscard]] RunTrace run(const RunConfig &config);

} // namespace falqon
