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

#ifndef MMCR_SWEEP_HPP
#define MMCR_SWEEP_HPP

#include "mmcr/baselines.hpp"
#include "mmcr/config.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mmcr
{

struct SweepRow
{
    SchemeId scheme = SchemeId::adpc;
    double i_th_db = 0.0;
    std::size_t k = 0;
    std::size_t trial = 0;
    double sum_rate = 0.0;
    double total_interference = 0.0;
    bool feasible = true;
    std::string discard_reason;
    bool cap_active = false; // not part of the CSV schema
};

struct AggregateRow
{
    SchemeId scheme = SchemeId::adpc;
    double i_th_db = 0.0;
    std::size_t k = 0;
    std::size_t trials_used = 0;
    std::size_t trials_discarded = 0;
    double mean_sum_rate = 0.0;
    double stderr_sum_rate = 0.0; // sample standard deviation / sqrt(n); 0 when n < 2
};

struct SweepResult
{
    std::vector<SweepRow> rows;
    std::vector<AggregateRow> aggregates;
};

// All channels of one trial: K secondary users plus the primary user.
struct TrialChannels
{
    MatrixList secondary;
    ComplexMatrix primary;
};

// Channels depend only on (master seed, trial index, user index), so the same
// trial sees the same realization at every threshold and for every scheme; with a
// larger K, the first users keep their channels.
TrialChannels draw_trial_channels(const SweepSpec &spec, std::size_t users, std::size_t trial_index);

// One row per requested scheme, in the order of SweepSpec::schemes. Scheme failures are
// reported as discarded rows and never escape.
std::vector<SweepRow> run_trial(const SweepSpec &spec, const SweepPoint &point, std::size_t trial_index);

// run_trial for several thresholds at one K, sharing the channel draw and each
// scheme's precoder design. Rows are grouped by threshold (in the given order), then
// by scheme.
std::vector<SweepRow> run_trial_thresholds(const SweepSpec &spec, std::size_t users,
                                           std::span<const double> thresholds_db, std::size_t trial_index);

// Rows ordered by (point, trial, scheme). The result does not depend on threads.
SweepResult run_sweep(const SweepSpec &spec, std::size_t threads = 1);

// One aggregate per (point, scheme), points in sweep order.
std::vector<AggregateRow> aggregate(const SweepSpec &spec, const std::vector<SweepRow> &rows);

} // namespace mmcr

#endif
