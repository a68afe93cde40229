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
#ifndef MMCR_BASELINES_HPP
#define MMCR_BASELINES_HPP

#include "mmcr/digital.hpp"
#include "mmcr/power.hpp"
#include "mmcr/rng.hpp"
#include "mmcr/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mmcr
{

enum class SchemeId
{
    adpc,           // analog phase alignment + codebook combining + block diagonalization
    fd_bd,          // block diagonalization on the raw channels, no analog stage
    right_singular, // per-user SVD precoding, no inter-user nulling
    blind,          // random constant-modulus beams, equal power
};

std::string_view to_string(SchemeId id);
std::optional<SchemeId> parse_scheme(std::string_view name);

struct SchemeResult
{
    SchemeId scheme = SchemeId::adpc;
    double sum_rate = 0.0;           // bits/s/Hz
    double total_interference = 0.0; // linear, at the primary user
    bool feasible = true;
    std::string discard_reason;
    bool cap_active = false;
};

struct SchemeParams
{
    std::size_t streams = 2;
    std::size_t rf_rx = 2;       // RF chains per user, analog scheme only
    double spacing_ratio = 0.5;  // codebook construction
    double noise_var = 1.0;
    PowerOptions power;
    BdOptions bd;
};

// Every stage of the hybrid design for one channel realization.
struct PrecodingSolution
{
    ComplexMatrix analog_precoder;  // F, N_t x K M_r
    MatrixList analog_combiners;    // W_k, N_r x M_r
    EffectiveChannelSet effective;  // W_k^H H_k F
    BdSolution digital;             // B_k, T_k, singular values
    StreamArray gamma;              // interference gains, K x D
};

PrecodingSolution design_adpc(const MatrixList &channels, const ComplexMatrix &primary_channel,
                              const SchemeParams &params);

// Every scheme below comes in two forms. The span overload designs the precoders once
// for the channel realization and evaluates each interference budget against that
// design, returning one result per budget in order.

SchemeResult adpc(const MatrixList &channels, const ComplexMatrix &primary_channel, double i_th,
                  const SchemeParams &params);
std::vector<SchemeResult> adpc(const MatrixList &channels, const ComplexMatrix &primary_channel,
                               std::span<const double> i_th_values, const SchemeParams &params);

/// Block diagonalization applied directly to the N_r x N_t channels (F = I, W_k = I),
/// followed by the same interference-constrained allocation as the hybrid scheme.
/// Stands in for the fully digital block-diagonalization comparison; it is not a
/// reimplementation of any particular published hybrid-BD algorithm.
SchemeResult full_digital_bd(const MatrixList &channels, const ComplexMatrix &primary_channel, double i_th,
                             const SchemeParams &params);
std::vector<SchemeResult> full_digital_bd(const MatrixList &channels, const ComplexMatrix &primary_channel,
                                          std::span<const double> i_th_values, const SchemeParams &params);

/// Each user is precoded with the top-D right singular vectors of its own channel and
/// combined with the matching left singular vectors. Nothing nulls inter-user
/// interference. Powers follow the water-filling rule on the per-user singular
/// values; the rate then charges the residual interference as Gaussian noise:
///   log2(1 + P s^2 / (noise + sum of other users' received power)).
SchemeResult right_singular_precoding(const MatrixList &channels, const ComplexMatrix &primary_channel, double i_th,
                                      const SchemeParams &params);
std::vector<SchemeResult> right_singular_precoding(const MatrixList &channels, const ComplexMatrix &primary_channel,
                                                   std::span<const double> i_th_values, const SchemeParams &params);

/// Uncoordinated transmission: each stream gets a random constant-modulus beam
/// e^{j phi}/sqrt(N_t), all K D streams share one power level scaled so the primary
/// user receives exactly i_th, and each user combines with a matched filter. Every
/// other stream, including the user's own, counts as interference.
SchemeResult blind_transmission(const MatrixList &channels, const ComplexMatrix &primary_channel, double i_th,
                                const SchemeParams &params, Rng &rng);
std::vector<SchemeResult> blind_transmission(const MatrixList &channels, const ComplexMatrix &primary_channel,
                                             std::span<const double> i_th_values, const SchemeParams &params,
                                             Rng &rng);

} // namespace mmcr

#endif
