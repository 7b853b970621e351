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
#include "falqon/engine.hpp"

#include <cmath>
#include <string>

#include "falqon/error.hpp"

namespace falqon {

void RunConfig::validate() const {
    if (graph.n_nodes() > kMaxQubits) {
        throw InvalidArgument("run config: " + std::to_string(graph.n_nodes()) +
                              " nodes exceeds cap " + std::to_string(kMaxQubits));
    }
    if (!std::isfinite(delta_t) || delta_t <= 0.0) {
        throw InvalidArgument("run config: delta_t must be positive");
    }
    if (depth < 1) {
        throw InvalidArgument("run config: depth must be >= 1");
    }
    const std::size_t cap =
        noise.kind == NoiseKind::independent ? kMaxDepthIndependent : kMaxDepth;
    if (depth > cap) {
        throw InvalidArgument("run config: depth " + std::to_string(depth) + " exceeds cap " +
                              std::to_string(cap) + " for noise kind " +
                              std::string(to_string(noise.kind)));
    }
    if (!std::isfinite(law.lambda) || law.lambda <= 0.0) {
        throw InvalidArgument("run config: lambda must be positive");
    }
    if (!std::isfinite(law.w) || law.w <= 0.0) {
        throw InvalidArgument("run config: w must be positive");
    }
    noise.validate();
}

std::vector<double> RunTrace::betas() const {
    std::vector<double> out;
    out.reserve(layers.size());
    for (const auto &r : layers) {
        out.push_back(r.beta);
    }
    return out;
}

std::vector<double> RunTrace::costs() const {
    std::vector<double> out;
    out.reserve(layers.size());
    for (const auto &r : layers) {
        out.push_back(r.cost);
    }
    return out;
}

void layer(StateVector &state, double beta, double delta_t, double epsilon,
           const DiagonalHamiltonian &diag, const DriverHamiltonian &driver) {
    const double gain = 1.0 + epsilon;
    apply_diagonal_phase(state, diag, gain * delta_t);
    apply_x_rotations(state, driver, gain * beta * delta_t);
}

double feedback(double a, const FeedbackLaw &law) { return -law.w * a / (2.0 * law.lambda); }

namespace {

struct Problem {
    DiagonalHamiltonian diag;
    DriverHamiltonian driver;
    GroundEnergy ground;
};

Problem make_problem(const RunConfig &config) {
    config.validate();
    auto diag = maxcut_hamiltonian(config.graph);
    auto driver = driver_x(config.graph.n_nodes());
    auto ground = ground_energy(diag);
    return {std::move(diag), std::move(driver), std::move(ground)};
}

RunTrace make_trace(const RunConfig &config, const Problem &problem) {
    RunTrace trace{config, {}, uniform_state(config.graph.n_nodes()),
                   problem.ground.energy, problem.ground.states, {}, 0};
    trace.layers.reserve(config.depth);
    return trace;
}

RunTrace run_incremental(const RunConfig &config, ErrorTrajectory eps) {
    const auto problem = make_problem(config);
    auto trace = make_trace(config, problem);
    auto &state = trace.final_state;
    double beta = 0.0;
    for (std::size_t t = 1; t <= config.depth; ++t) {
        layer(state, beta, config.delta_t, eps[t - 1], problem.diag, problem.driver);
        ++trace.layer_applications;
        const double a = a_value(state, problem.diag, problem.driver);
        trace.layers.push_back({t, beta, a, expectation_diagonal(state, problem.diag)});
        beta = feedback(a, config.law);
    }
    trace.final_epsilons = std::move(eps);
    return trace;
}

RunTrace run_rebuilt(const RunConfig &config) {
    const auto problem = make_problem(config);
    auto trace = make_trace(config, problem);
    const std::size_t n = config.graph.n_nodes();
    std::vector<double> betas{0.0};
    betas.reserve(config.depth + 1);
    for (std::size_t t = 1; t <= config.depth; ++t) {
        auto eps = trajectory(config.noise, t, t);
        auto state = uniform_state(n);
        for (std::size_t tau = 0; tau < t; ++tau) {
            layer(state, betas[tau], config.delta_t, eps[tau], problem.diag, problem.driver);
            ++trace.layer_applications;
        }
        const double a = a_value(state, problem.diag, problem.driver);
        trace.layers.push_back({t, betas[t - 1], a, expectation_diagonal(state, problem.diag)});
        betas.push_back(feedback(a, config.law));
        if (t == config.depth) {
            trace.final_state = std::move(state);
            trace.final_epsilons = std::move(eps);
        }
    }
    return trace;
}

void require_kind(const RunConfig &config, NoiseKind kind, const char *who) {
    if (config.noise.kind != kind) {
        throw InvalidArgument(std::string(who) + ": noise kind must be " +
                              std::string(to_string(kind)) + ", got " +
                              std::string(to_string(config.noise.kind)));
    }
}

} // namespace

RunTrace run_nominal(const RunConfig &config) {
    require_kind(config, NoiseKind::none, "run_nominal");
    config.validate();
    return run_incremental(config, ErrorTrajectory(config.depth, 0.0));
}

RunTrace run_systematic(const RunConfig &config) {
    require_kind(config, NoiseKind::systematic, "run_systematic");
    config.validate();
    return run_incremental(config, trajectory(config.noise, config.depth, 1));
}

RunTrace run_systematic_rebuilt(const RunConfig &config) {
    require_kind(config, NoiseKind::systematic, "run_systematic_rebuilt");
    return run_rebuilt(config);
}

RunTrace run_independent(const RunConfig &config) {
    require_kind(config, NoiseKind::independent, "run_independent");
    return run_rebuilt(config);
}

RunTrace run(const RunConfig &config) {
    switch (config.noise.kind) {
    case NoiseKind::none:
        return run_nominal(config);
    case NoiseKind::systematic:
        return run_systematic(config);
    case NoiseKind::independent:
        return run_independent(config);
    }
    throw InvalidArgument("run: unknown noise kind");
}

} // namespace falqon
