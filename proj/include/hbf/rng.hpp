// hbf - Tensor-based hybrid beamforming design and simulation library
// Copyright (C) 2026 The hbf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <random>

namespace hbf
{
    /// Random engine used throughout. One instance per trial; never shared.
    using Rng = std::mt19937_64;

    /// SplitMix64 output function (Steele, Lea, Flood 2014).
    std::uint64_t mix64(std::uint64_t x) noexcept;

    /// Child seed for sub-stream `stream` of `seed`:
    ///
    ///     split_seed(seed, stream) = mix64(seed + 0x9E3779B97F4A7C15 * (stream + 1))
    ///
    /// This function is part of the reproducibility contract and must not change.
    std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

    // Sub-stream indices used under a per-trial seed.
    inline constexpr std::uint64_t kChannelStream = 0;
    inline constexpr std::uint64_t kDesignStream = 1;
}
