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
#ifndef MMCR_DIGITAL_HPP
#define MMCR_DIGITAL_HPP

#include "mmcr/types.hpp"

namespace mmcr
{

// Baseband-equivalent channels W_k^H H_k F, one M_r x M_t matrix per user.
struct EffectiveChannelSet
{
    MatrixList per_user;

    std::size_t users() const noexcept { return per_user.size(); }
    ComplexMatrix stacked() const;
};

struct BdSolution
{
    MatrixList precoders;       // B_k, M_t x D
    MatrixList combiners;       // T_k, M_r x D
    StreamArray singular_values; // K x D, descending per row
    MatrixList null_bases;      // orthonormal basis of the other users' null space, M_t x nullity
    // Streams whose singular value was zeroed under BdOptions::zero_rank_deficient_streams.
    std::size_t zeroed_streams = 0;
};

struct BdOptions
{
    // Relative threshold (against the largest singular value) for numerical rank.
    double rank_tol = 1e-8;
    // When a user's interference-free channel supports fewer than D streams, keep
    // the surplus streams with singular value 0 instead of raising RankDeficiency.
    bool zero_rank_deficient_streams = false;
};

EffectiveChannelSet effective_channels(const MatrixList &channels, const ComplexMatrix &analog_precoder,
                                       const MatrixList &combiners);

// Rows of every other user's effective channel, ascending user order. For a single
// user this is a 0 x M_t matrix.
ComplexMatrix stack_interference(std::size_t user, const EffectiveChannelSet &eff);

/// Block diagonalization. For each user k the precoder lives in the null space of
/// the stacked channels of all other users, so T_j^H H~_j B_k = 0 for j != k.
/// Inside that null space an SVD of H~_k V0_k gives the D strongest stream pairs:
/// B_k = V0_k V_k(:, 1:D) and T_k = U_k(:, 1:D).
///
/// The null basis spans the full numerical null space of the interference stack.
/// With M_t = K M_r and a full-rank stack this is exactly M_r columns; for a single
/// user it is the whole transmit space. Throws RankDeficiency when the null space
/// has fewer than M_r dimensions, or when H~_k V0_k has rank below D (unless
/// zero_rank_deficient_streams is set).
BdSolution bd_design(const EffectiveChannelSet &eff, std::size_t streams, const BdOptions &options = {});

} // namespace mmcr

#endif
