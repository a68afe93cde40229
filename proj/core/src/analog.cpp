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
#include "mmcr/analog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace mmcr
{

std::optional<double> Codebook::arrival_angle(std::size_t i) const
{
    if (i >= grid_angles.size())
        throw InvalidDimension("Codebook::arrival_angle: index out of range");
    // wrap to (-pi, pi]
    double zeta = grid_angles[i];
    if (zeta > std::numbers::pi)
        zeta -= 2.0 * std::numbers::pi;
    const double s = zeta / (2.0 * std::numbers::pi * spacing_ratio);
    if (s < -1.0 || s > 1.0)
        return std::nullopt;
    return std::asin(s);
}

Codebook build_codebook(std::size_t n_rx, double spacing_ratio)
{
    if (n_rx == 0)
        throw InvalidDimension("build_codebook: n_rx must be at least 1");
    if (!(spacing_ratio > 0.0))
        throw InvalidParameter("build_codebook: spacing ratio must be positive");

    const auto n = static_cast<Eigen::Index>(n_rx);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_rx));

    Codebook cb;
    cb.spacing_ratio = spacing_ratio;
    cb.vectors.resize(n, n);
    cb.grid_angles.resize(n_rx);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        const double zeta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_rx);
        cb.grid_angles[static_cast<std::size_t>(i)] = zeta;
        for (Eigen::Index m = 0; m < n; ++m)
        {
            // reduce m*i mod N before scaling so the phases are exact DFT roots
            const auto k = (m * i) % n;
            const double phase = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_rx);
            cb.vectors(m, i) = std::polar(scale, phase);
        }
    }
    return cb;
}

std::vector<double> codebook_scores(const ComplexMatrix &channel, const Codebook &codebook)
{
    if (channel.rows() != codebook.vectors.rows())
        throw InvalidDimension("codebook_scores: channel rows must equal codebook length");
    const ComplexMatrix proj = codebook.vectors.adjoint() * channel;
    std::vector<double> scores(codebook.size());
    for (Eigen::Index i = 0; i < proj.rows(); ++i)
        scores[static_cast<std::size_t>(i)] = proj.row(i).squaredNorm();
    return scores;
}

CombinerSelection select_analog_combiner(const ComplexMatrix &channel, std::size_t m_rx, const Codebook &codebook)
{
    if (m_rx == 0 || m_rx > codebook.size())
        throw InvalidDimension("select_analog_combiner: need 1 <= M_r <= N_r");

    CombinerSelection sel;
    sel.scores = codebook_scores(channel, codebook);

    std::vector<std::size_t> order(codebook.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return sel.scores[a] > sel.scores[b]; });

    sel.chosen_indices.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m_rx));
    sel.combiner.resize(codebook.vectors.rows(), static_cast<Eigen::Index>(m_rx));
    for (std::size_t m = 0; m < m_rx; ++m)
        sel.combiner.col(static_cast<Eigen::Index>(m)) =
            codebook.vectors.col(static_cast<Eigen::Index>(sel.chosen_indices[m]));
    return sel;
}

ComplexMatrix stack_combined_channels(const MatrixList &combiners, const MatrixList &channels)
{
    if (combiners.size() != channels.size() || channels.empty())
        throw InvalidDimension("stack_combined_channels: need one combiner per channel");
    const Eigen::Index n_tx = channels.front().cols();
    MatrixList blocks;
    blocks.reserve(channels.size());
    for (std::size_t k = 0; k < channels.size(); ++k)
    {
        if (channels[k].cols() != n_tx)
            throw InvalidDimension("stack_combined_channels: channels differ in transmit dimension");
        if (combiners[k].rows() != channels[k].rows())
            throw InvalidDimension("stack_combined_channels: combiner rows must equal receive antennas");
        if (combiners[k].cols() != combiners.front().cols())
            throw InvalidDimension("stack_combined_channels: users differ in RF chain count");
        blocks.push_back(combiners[k].adjoint() * channels[k]);
    }
    Eigen::Index rows = 0;
    for (const auto &b : blocks)
        rows += b.rows();
    ComplexMatrix out(rows, n_tx);
    Eigen::Index r = 0;
    for (const auto &b : blocks)
    {
        out.middleRows(r, b.rows()) = b;
        r += b.rows();
    }
    return out;
}

ComplexMatrix build_analog_precoder(const MatrixList &combiners, const MatrixList &channels)
{
    const ComplexMatrix stacked = stack_combined_channels(combiners, channels);
    const Eigen::Index n_tx = stacked.cols();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_tx));

    ComplexMatrix f(n_tx, stacked.rows());
    for (Eigen::Index i = 0; i < n_tx; ++i)
        for (Eigen::Index j = 0; j < stacked.rows(); ++j)
        {
            const Complex c = stacked(j, i);
            const double phase = std::abs(c) > 0.0 ? std::arg(c) : 0.0;
            f(i, j) = std::polar(scale, -phase);
        }
    return f;
}

} // namespace mmcr
