// SPDX-License-Identifier: Apache-2.0
//
// mmcr - hybrid precoding simulator for mmWave MIMO cognitive radio downlinks
// Copyright (C) 2026 The mmcr Authors
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
#include "mmcr/rng.hpp"

#include <cmath>
#include <numbers>

namespace mmcr
{

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_index, std::uint64_t stream) noexcept
{
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h ^ trial_index);
    h = splitmix64(h ^ stream);
    return h;
}

Rng make_rng(std::uint64_t master_seed, std::uint64_t trial_index, std::uint64_t stream)
{
    return Rng(derive_seed(master_seed, trial_index, stream));
}

Complex complex_gaussian(Rng &rng, double variance)
{
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5 * variance));
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

double uniform_angle(Rng &rng)
{
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
    double a = uniform(rng);
    // uniform_real_distribution may round up to the upper bound
    if (a >= 2.0 * std::numbers::pi)
        a = 0.0;
    return a;
}

} // namespace mmcr
