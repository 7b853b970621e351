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
 * Portable random number helpers.
 *
 * Every random quantity in the library is derived from either
 *  - std::mt19937_64, whose output sequence is fixed by the C++ standard, or
 *  - the SplitMix64 finalizer used as a counter-based hash.
 *
 * The standard <random> distributions are implementation defined, so the
 * conversions to reals and bounded integers are done here by hand. Results
 * are therefore bit-identical across compilers and platforms.
 */

#include <cstdint>
#include <random>

namespace falqon::rng {

using Engine = std::mt19937_64;

/// SplitMix64 output function (Steele, Lea, Flood 2014).
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

/**
 * Counter-based 64-bit draw keyed by (seed, stream, counter).
 *
 * Computed as mix64(mix64(mix64(seed) ^ stream) ^ counter). No state is
 * shared between calls, so draws can be made in any order or in parallel.
 */
[[nodiscard]] constexpr std::uint64_t counter_draw(std::uint64_t seed,
                                                   std::uint64_t stream,
                                                   std::uint64_t counter) noexcept {
    return mix64(mix64(mix64(seed) ^ stream) ^ counter);
}

/// Top 53 bits mapped to [0, 1).
[[nodiscard]] constexpr double to_unit(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11U) * 0x1.0p-53;
}

[[nodiscard]] inline double uniform01(Engine &engine) { return to_unit(engine()); }

/// Unbiased integer in [0, bound) by rejection. bound must be positive.
[[nodiscard]] inline std::uint64_t uniform_below(Engine &engine, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = engine();
    while (x >= limit) {
        x = engine();
    }
    return x % bound;
}

} // namespace falqon::rng
