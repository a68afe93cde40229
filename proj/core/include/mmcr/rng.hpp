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
#ifndef MMCR_RNG_HPP
#define MMCR_RNG_HPP

#include "mmcr/types.hpp"

#include <cstdint>
#include <random>

namespace mmcr
{

using Rng = std::mt19937_64;

// Stream identifiers for draws that are not tied to a secondary user index.
inline constexpr std::uint64_t kPrimaryUserStream = 0x1'0000'0000ULL;
inline constexpr std::uint64_t kBlindPrecoderStream = 0x2'0000'0000ULL;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Stable seed for one (trial, stream) pair. Independent of evaluation order, so
// trials may run on any thread.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_index, std::uint64_t stream) noexcept;

Rng make_rng(std::uint64_t master_seed, std::uint64_t trial_index, std::uint64_t stream);

// Circularly-symmetric complex Gaussian CN(0, variance).
Complex complex_gaussian(Rng &rng, double variance = 1.0);

// Uniform on [0, 2 pi).
double uniform_angle(Rng &rng);

} // namespace mmcr

#endif
