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
#ifndef MMCR_POWER_HPP
#define MMCR_POWER_HPP

#include "mmcr/types.hpp"

namespace mmcr
{

struct StreamGains
{
    StreamArray sigma_sq; // effective channel gains, K x D
    StreamArray gamma;    // interference gains toward the primary user, K x D
};

struct PowerAllocation
{
    StreamArray powers;             // K x D, linear
    double lambda = 0.0;            // multiplier of the interference constraint
    double total_interference = 0.0;
    double sum_rate = 0.0;          // bits/s/Hz
    // Set when some stream with positive gain sees no interference cost and was
    // clamped to PowerOptions::p_max.
    bool cap_active = false;
};

struct PowerOptions
{
    double p_max = 1e6;               // per-stream cap, only reached by zero-interference streams
    double min_gain = 1e-12;          // streams with sigma^2 below this get no power
    double bisection_rel_width = 1e-10;
};

double db_to_linear(double db);

// gamma_{k,d} = || G_0 F b_{k,d} ||^2, the d-th diagonal entry of
// B_k^H F^H G_0^H G_0 F B_k.
StreamArray interference_gains(const MatrixList &precoders, const ComplexMatrix &analog_precoder,
                               const ComplexMatrix &primary_channel);

double sum_rate(const StreamArray &powers, const StreamArray &sigma_sq);

double total_interference(const StreamArray &powers, const StreamArray &gamma);

/// Sum-rate maximization under the interference budget i_th (linear):
///   maximize sum log2(1 + P sigma^2)  s.t.  sum P gamma <= i_th, P >= 0.
/// The optimum has the water-filling form P = max(0, 1/(lambda gamma) - 1/sigma^2).
/// lambda is located by bisection on the strictly decreasing map lambda -> total
/// interference, then snapped to the closed form for the active set it identifies.
PowerAllocation optimal_power_allocation(const StreamGains &gains, double i_th, const PowerOptions &options = {});

} // namespace mmcr

#endif
