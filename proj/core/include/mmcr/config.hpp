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
#ifndef MMCR_CONFIG_HPP
#define MMCR_CONFIG_HPP

#include "mmcr/baselines.hpp"
#include "mmcr/types.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mmcr
{

class ConfigError : public std::runtime_error
{
public:
    explicit ConfigError(const std::string &what, std::optional<std::size_t> line = std::nullopt);

    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    std::optional<std::size_t> line_;
};

enum class ChannelModel
{
    geometric,
    rayleigh,
};

std::string_view to_string(ChannelModel model);

struct SweepPoint
{
    std::size_t users = 0;
    double i_th_db = 0.0;
};

struct SweepSpec
{
    HybridConfig config;
    // When set, the base-station RF chain count follows K * M_r for every swept K.
    bool rf_tx_auto = false;
    ChannelModel channel_model = ChannelModel::geometric;
    std::vector<SchemeId> schemes{SchemeId::adpc, SchemeId::fd_bd, SchemeId::right_singular, SchemeId::blind};
    std::vector<double> i_th_db{0, 2, 4, 6, 8, 10, 12};
    std::vector<std::size_t> k_values;
    std::size_t trials = 200;
    std::uint64_t master_seed = 1;
    double p_max = 1e6;
    bool zero_rank_deficient_streams = false;

    bool has_scheme(SchemeId id) const;

    // Cartesian product (K outer, threshold inner). An empty k_values list means the
    // configured K; an empty threshold list means 12 dB.
    std::vector<SweepPoint> points() const;

    // System configuration at a sweep point with K overridden.
    HybridConfig config_for(std::size_t users) const;

    SchemeParams scheme_params() const;
};

inline constexpr double kDefaultThresholdDb = 12.0;

/// Checks every dimension constraint of one system configuration. Messages name the
/// violated relation, e.g. "K*D <= M_t <= N_t".
void validate_config(const HybridConfig &config, bool hybrid_scheme, ChannelModel model);

/// Validates the whole spec, including each swept K.
void validate_spec(const SweepSpec &spec);

/// Parses flat "key = value" text. '#' starts a comment; lists are comma separated.
/// Keys that are absent keep the defaults of the 4x32, K = 8 preset.
SweepSpec parse_config(std::string_view text);

SweepSpec load_config_file(const std::string &path);

// Human-readable summary of derived dimensions for the validate command.
std::string describe(const SweepSpec &spec);

} // namespace mmcr

#endif
