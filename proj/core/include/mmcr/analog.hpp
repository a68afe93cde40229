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
#ifndef MMCR_ANALOG_HPP
#define MMCR_ANALOG_HPP

#include "mmcr/types.hpp"

#include <optional>
#include <vector>

namespace mmcr
{

/// Receive-side beam codebook: N_r phase-progression vectors
/// a(zeta_i) = [1, e^{j zeta_i}, ..., e^{j (N_r-1) zeta_i}]^T / sqrt(N_r) with
/// zeta_i = 2 pi i / N_r (0-based i). The columns form a unitary DFT basis.
struct Codebook
{
    ComplexMatrix vectors;           // N_r x N_r, column i is a(zeta_i)
    std::vector<double> grid_angles; // zeta_i
    double spacing_ratio = 0.5;

    std::size_t size() const noexcept { return grid_angles.size(); }

    /// Arrival angle theta in [-pi/2, pi/2] whose ULA steering vector equals
    /// column i, if the array spacing can realize that phase progression.
    std::optional<double> arrival_angle(std::size_t i) const;
};

struct CombinerSelection
{
    ComplexMatrix combiner;                 // N_r x M_r
    std::vector<std::size_t> chosen_indices; // descending score order
    std::vector<double> scores;             // one per codebook entry
};

Codebook build_codebook(std::size_t n_rx, double spacing_ratio);

/// Per-beam captured energy sum_j |a_i^H h_j|^2 over the columns of the channel.
std::vector<double> codebook_scores(const ComplexMatrix &channel, const Codebook &codebook);

/// Picks the m_rx highest-scoring codebook beams. The objective is separable
/// across beams, so greedy top-m_rx selection is exact. Ties go to the lower index.
CombinerSelection select_analog_combiner(const ComplexMatrix &channel, std::size_t m_rx, const Codebook &codebook);

/// Stacks W_k^H H_k over all users (K M_r x N_t).
ComplexMatrix stack_combined_channels(const MatrixList &combiners, const MatrixList &channels);

/// Phase-only RF precoder, N_t x K M_r. Entry (i, j) is exp(-j arg(c_{j,i})) / sqrt(N_t)
/// where c is the stacked combined channel, so each RF chain co-phases the
/// antenna contributions of its own receive beam. arg(0) is taken as 0.
ComplexMatrix build_analog_precoder(const MatrixList &combiners, const MatrixList &channels);

} // namespace mmcr

#endif
