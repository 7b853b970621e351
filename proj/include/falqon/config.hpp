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
 * Experiment configuration shared by the CLI subcommands.
 *
 * A config is a JSON document; command-line flags override its fields.
 *
 *     {
 *       "graph": {"type": "regular", "n": 8, "d": 3, "seed": 42},
 *       "delta_t": 0.05, "depth": 1000, "lambda": 0.5, "w": 1.0,
 *       "noise": {"kind": "systematic", "epsilon_bar": 0.5, "seed": 1},
 *       "seeds": [1, 2, 3], "epsilon_bars": [0.1, 0.5], "lambdas": [0.5, 1.0],
 *       "draws": 100, "out": "results"
 *     }
 *
 * "graph" may instead be {"type": "er", "n": 8, "p": 0.5, "seed": 7} or
 * {"type": "file", "path": "reference.edges"}; a relative path in a config
 * file is resolved against the directory of that file.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "falqon/engine.hpp"
#include "falqon/graph.hpp"
#include "json.hpp"

namespace falqon::cli {

struct GraphSource {
    enum class Type { regular, er, file };
    Type type = Type::regular;
    std::size_t n = 8;
    std::size_t d = 3;
    double p = 0.5;
    std::uint64_t seed = 42;
    std::string path;

    [[nodiscard]] Graph build() const;
};

struct ExperimentConfig {
    GraphSource graph;
    double delta_t = 0.05;
    std::size_t depth = 200;
    double lambda = 0.5;
    double w = 1.0;
    NoiseModel noise;
    std::vector<std::uint64_t> seeds;
    std::vector<double> epsilon_bars;
    std::vector<double> lambdas;
    std::size_t draws = 100;
    std::string out_dir;

    /// Run configuration for one (epsilon_bar, lambda, noise seed) cell.
    [[nodiscard]] RunConfig run_config(const Graph &g, double epsilon_bar, double lambda,
                                       std::uint64_t noise_seed) const;
    [[nodiscard]] RunConfig run_config(const Graph &g) const;

    /// Every module precondition that can be checked before running.
    /// Throws InvalidArgument.
    void validate() const;
};

/// Parses a config document; unknown keys are rejected.
[[nodiscard]] ExperimentConfig config_from_json(const nlohmann::json &doc,
                                                const std::string &base_dir = "");
[[nodiscard]] ExperimentConfig load_config(const std::string &path);

/// Echo of the experiment parameters (no output paths).
[[nodiscard]] nlohmann::json config_to_json(const ExperimentConfig &config);

} // namespace falqon::cli
