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
#include "falqon/noise.hpp"

#include <cmath>

#include "falqon/error.hpp"
#include "falqon/rng.hpp"

namespace falqon {

std::string_view to_string(NoiseKind kind) noexcept {
    switch (kind) {
    case NoiseKind::none:
        return "none";
    case NoiseKind::systematic:
        return "systematic";
    case NoiseKind::independent:
        return "independent";
    }
    return "none";
}

NoiseKind parse_noise_kind(std::string_view name) {
    if (name == "none") {
        return NoiseKind::none;
    }
    if (name == "systematic") {
        return NoiseKind::systematic;
    }
    if (name == "independent") {
        return NoiseKind::independent;
    }
    throw InvalidArgument("unknown noise kind '" + std::string(name) +
                          "' (expected none, systematic or independent)");
}

void NoiseModel::validate() const {
    if (!std::isfinite(epsilon_bar) || epsilon_bar < 0.0) {
        throw InvalidArgument("noise: epsilon_bar must be a nonnegative real");
    }
    if (kind != NoiseKind::none && epsilon_bar >= 1.0) {
        throw InvalidArgument("noise: epsilon_bar must be < 1 so that 1 + eps stays positive");
    }
}

ErrorTrajectory trajectory(const NoiseModel &model, std::size_t depth,
                           std::uint64_t rebuild_index) {
    model.validate();
    if (depth < 1) {
        throw InvalidArgument("trajectory: depth must be >= 1");
    }
    ErrorTrajectory eps(depth, 0.0);
    switch (model.kind) {
    case NoiseKind::none:
        break;
    case NoiseKind::systematic: {
        rng::Engine engine(model.seed);
        for (auto &e : eps) {
            e = model.epsilon_bar * (2.0 * rng::uniform01(engine) - 1.0);
        }
        break;
    }
    case NoiseKind::independent:
        for (std::size_t tau = 0; tau < depth; ++tau) {
            const double u = rng::to_unit(rng::counter_draw(model.seed, rebuild_index, tau + 1));
            eps[tau] = model.epsilon_bar * (2.0 * u - 1.0);
        }
        break;
    }
    return eps;
}

} // namespace falqon
