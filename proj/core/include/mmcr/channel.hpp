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
#ifndef MMCR_CHANNEL_HPP
#define MMCR_CHANNEL_HPP

#include "mmcr/rng.hpp"
#include "mmcr/types.hpp"

#include <vector>

namespace mmcr
{

// One realization of a narrowband geometric (few-scatterer) channel: a complex
// gain, an arrival angle and a departure angle per propagation path.
struct GeometricChannelDraw
{
    std::vector<Complex> gains;
    std::vector<double> aoa; // radians, [0, 2 pi)
    std::vector<double> aod; // radians, [0, 2 pi)

    std::size_t paths() const noexcept { return gains.size(); }
};

// ULA response, n x 1 with unit norm: entry m is exp(j 2 pi spacing m sin(angle)) / sqrt(n).
ComplexMatrix steering_vector(double angle, std::size_t n, double spacing_ratio);

GeometricChannelDraw draw_geometric(Rng &rng, std::size_t paths, double path_gain_var);

// sqrt(n_tx n_rx / L) * sum_l gain_l a_rx(aoa_l) a_tx(aod_l)^H, shape n_rx x n_tx.
ComplexMatrix generate_mmwave_channel(const GeometricChannelDraw &draw, std::size_t n_tx, std::size_t n_rx,
                                      double spacing_ratio);

// i.i.d. CN(0, 1) entries.
ComplexMatrix generate_rayleigh_channel(std::size_t n_rx, std::size_t n_tx, Rng &rng);

} // namespace mmcr

#endif
