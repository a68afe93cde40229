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
#include "mmcr/channel.hpp"

#include <cmath>
#include <numbers>

namespace mmcr
{

ComplexMatrix steering_vector(double angle, std::size_t n, double spacing_ratio)
{
    if (n == 0)
        throw InvalidDimension("steering_vector: antenna count must be at least 1");
    if (!(spacing_ratio > 0.0))
        throw InvalidParameter("steering_vector: spacing ratio must be positive");

    const double phase_step = 2.0 * std::numbers::pi * spacing_ratio * std::sin(angle);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    ComplexMatrix a(static_cast<Eigen::Index>(n), 1);
    for (std::size_t m = 0; m < n; ++m)
        a(static_cast<Eigen::Index>(m), 0) = std::polar(scale, phase_step * static_cast<double>(m));
    return a;
}

GeometricChannelDraw draw_geometric(Rng &rng, std::size_t paths, double path_gain_var)
{
    if (paths == 0)
        throw InvalidParameter("draw_geometric: at least one path is required");
    GeometricChannelDraw draw;
    draw.gains.reserve(paths);
    draw.aoa.reserve(paths);
    draw.aod.reserve(paths);
    for (std::size_t l = 0; l < paths; ++l)
    {
        draw.gains.push_back(complex_gaussian(rng, path_gain_var));
        draw.aoa.push_back(uniform_angle(rng));
        draw.aod.push_back(uniform_angle(rng));
    }
    return draw;
}

ComplexMatrix generate_mmwave_channel(const GeometricChannelDraw &draw, std::size_t n_tx, std::size_t n_rx,
                                      double spacing_ratio)
{
    const std::size_t paths = draw.paths();
    if (paths == 0)
        throw InvalidParameter("generate_mmwave_channel: draw has no paths");
    if (draw.aoa.size() != paths || draw.aod.size() != paths)
        throw InvalidParameter("generate_mmwave_channel: gains and angle lists differ in length");
    if (n_tx == 0 || n_rx == 0)
        throw InvalidDimension("generate_mmwave_channel: antenna counts must be at least 1");

    ComplexMatrix h = ComplexMatrix::Zero(static_cast<Eigen::Index>(n_rx), static_cast<Eigen::Index>(n_tx));
    for (std::size_t l = 0; l < paths; ++l)
    {
        const ComplexMatrix a_r = steering_vector(draw.aoa[l], n_rx, spacing_ratio);
        const ComplexMatrix a_t = steering_vector(draw.aod[l], n_tx, spacing_ratio);
        h.noalias() += draw.gains[l] * (a_r * a_t.adjoint());
    }
    h *= std::sqrt(static_cast<double>(n_tx * n_rx) / static_cast<double>(paths));
    return h;
}

ComplexMatrix generate_rayleigh_channel(std::size_t n_rx, std::size_t n_tx, Rng &rng)
{
    if (n_tx == 0 || n_rx == 0)
        throw InvalidDimension("generate_rayleigh_channel: dimensions must be at least 1");
    ComplexMatrix h(static_cast<Eigen::Index>(n_rx), static_cast<Eigen::Index>(n_tx));
    // row-major fill order fixes the mapping from RNG stream to entries
    for (Eigen::Index r = 0; r < h.rows(); ++r)
        for (Eigen::Index c = 0; c < h.cols(); ++c)
            h(r, c) = complex_gaussian(rng, 1.0);
    return h;
}

} // namespace mmcr
