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
 * Coherent control errors: each layer's generator is scaled by (1 + eps).
 *
 * Sampling schemes (eps uniform on [-eps_bar, eps_bar] in both):
 *  - systematic: eps_tau = eps_bar * (2 u - 1), u drawn from mt19937_64(seed)
 *    in order tau = 1, 2, ... Every rebuild sees the same master prefix.
 *  - independent: u = to_unit(counter_draw(seed, rebuild_index, tau)), so
 *    each (rebuild, layer) pair has its own stream with no shared state.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace falqon {

enum class NoiseKind { none, systematic, independent };

[[nodiscard]] std::string_view to_string(NoiseKind kind) noexcept;
/// Throws InvalidArgument for unknown names.
[[nodiscard]] NoiseKind parse_noise_kind(std::string_view name);

struct NoiseModel {
    NoiseKind kind = NoiseKind::none;
    double epsilon_bar = 0.0;
    std::uint64_t seed = 0;

    /// epsilon_bar finite and >= 0, and < 1 unless kind is none.
    void validate() const;
};

/// Per-layer error values eps_1..eps_depth.
using ErrorTrajectory = std::vector<double>;

/// rebuild_index counts circuit rebuilds from 1; it only matters for the
/// independent kind.
[[nodiscard]] ErrorTrajectory trajectory(const NoiseModel &model, std::size_t depth,
                                         std::uint64_t rebuild_index);

} // namespace falqon
