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

#include "mmcr/sweep.hpp"

#include "mmcr/channel.hpp"
#include "mmcr/power.hpp"
#include "mmcr/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

namespace mmcr
{

namespace
{

ComplexMatrix draw_link(const SweepSpec &spec, std::size_t n_rx, Rng &rng)
{
    const auto &c = spec.config;
    if (spec.channel_model == ChannelModel::rayleigh)
        return generate_rayleigh_channel(n_rx, c.n_tx, rng);
    const auto draw = draw_geometric(rng, c.paths, c.path_gain_var);
    return generate_mmwave_channel(draw, c.n_tx, n_rx, c.spacing_ratio);
}

} // namespace

TrialChannels draw_trial_channels(const SweepSpec &spec, std::size_t users, std::size_t trial_index)
{
    TrialChannels ch;
    ch.secondary.reserve(users);
    for (std::size_t k = 0; k < users; ++k)
    {
        auto rng = make_rng(spec.master_seed, trial_index, k);
        ch.secondary.push_back(draw_link(spec, spec.config.n_rx, rng));
    }
    auto rng = make_rng(spec.master_seed, trial_index, kPrimaryUserStream);
    ch.primary = draw_link(spec, spec.config.n_rx_primary, rng);
    return ch;
}

std::vector<SweepRow> run_trial_thresholds(const SweepSpec &spec, std::size_t users,
                                           std::span<const double> thresholds_db, std::size_t trial_index)
{
    const std::size_t n_th = thresholds_db.size();
    const std::size_t n_schemes = spec.schemes.size();
    std::vector<SweepRow> rows(n_th * n_schemes);
    for (std::size_t t = 0; t < n_th; ++t)
        for (std::size_t s = 0; s < n_schemes; ++s)
        {
            auto &row = rows[t * n_schemes + s];
            row.scheme = spec.schemes[s];
            row.i_th_db = thresholds_db[t];
            row.k = users;
            row.trial = trial_index;
        }

    std::vector<double> i_th(n_th);
    for (std::size_t t = 0; t < n_th; ++t)
        i_th[t] = db_to_linear(thresholds_db[t]);
    const SchemeParams params = spec.scheme_params();

    std::optional<TrialChannels> channels;
    std::string draw_error;
    try
    {
        channels = draw_trial_channels(spec, users, trial_index);
    }
    catch (const std::exception &e)
    {
        draw_error = e.what();
    }

    for (std::size_t s = 0; s < n_schemes; ++s)
    {
        const SchemeId scheme = spec.schemes[s];
        std::vector<SchemeResult> results;
        std::string failure;
        if (!channels)
            failure = "channel generation failed: " + draw_error;
        else
        {
            try
            {
                const auto &h = channels->secondary;
                const auto &g0 = channels->primary;
                switch (scheme)
                {
                case SchemeId::adpc:
                    results = adpc(h, g0, i_th, params);
                    break;
                case SchemeId::fd_bd:
                    results = full_digital_bd(h, g0, i_th, params);
                    break;
                case SchemeId::right_singular:
                    results = right_singular_precoding(h, g0, i_th, params);
                    break;
                case SchemeId::blind: {
                    auto rng = make_rng(spec.master_seed, trial_index, kBlindPrecoderStream);
                    results = blind_transmission(h, g0, i_th, params, rng);
                    break;
                }
                }
            }
            catch (const std::exception &e)
            {
                failure = e.what();
            }
        }

        for (std::size_t t = 0; t < n_th; ++t)
        {
            auto &row = rows[t * n_schemes + s];
            if (!failure.empty() || results.size() != n_th)
            {
                row.feasible = false;
                row.discard_reason = failure.empty() ? "scheme returned no result" : failure;
                continue;
            }
            const auto &r = results[t];
            row.feasible = r.feasible;
            row.discard_reason = r.discard_reason;
            row.cap_active = r.cap_active;
            if (r.feasible && !(std::isfinite(r.sum_rate) && std::isfinite(r.total_interference)))
            {
                row.feasible = false;
                row.discard_reason = "non-finite result";
            }
            if (row.feasible)
            {
                row.sum_rate = r.sum_rate;
                row.total_interference = r.total_interference;
            }
        }
    }
    return rows;
}

std::vector<SweepRow> run_trial(const SweepSpec &spec, const SweepPoint &point, std::size_t trial_index)
{
    return run_trial_thresholds(spec, point.users, std::span<const double>(&point.i_th_db, 1), trial_index);
}

SweepResult run_sweep(const SweepSpec &spec, std::size_t threads)
{
    const std::vector<std::size_t> ks =
        spec.k_values.empty() ? std::vector<std::size_t>{spec.config.users} : spec.k_values;
    const std::vector<double> thresholds =
        spec.i_th_db.empty() ? std::vector<double>{kDefaultThresholdDb} : spec.i_th_db;
    const std::size_t trials = spec.trials;
    const std::size_t n_th = thresholds.size();
    const std::size_t n_schemes = spec.schemes.size();

    // one work unit per (K, trial); each yields rows for every threshold
    const std::size_t units = ks.size() * trials;
    std::vector<std::vector<SweepRow>> per_unit(units);
    auto work = [&](std::size_t unit) {
        per_unit[unit] = run_trial_thresholds(spec, ks[unit / trials], thresholds, unit % trials);
    };

    threads = std::max<std::size_t>(1, std::min(threads, units));
    if (threads == 1)
    {
        for (std::size_t u = 0; u < units; ++u)
            work(u);
    }
    else
    {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t u = next++; u < units; u = next++)
                    work(u);
            });
        for (auto &th : pool)
            th.join();
    }

    // reorder to (K, threshold, trial, scheme)
    SweepResult out;
    out.rows.reserve(units * n_th * n_schemes);
    for (std::size_t ki = 0; ki < ks.size(); ++ki)
        for (std::size_t t = 0; t < n_th; ++t)
            for (std::size_t trial = 0; trial < trials; ++trial)
            {
                auto &unit_rows = per_unit[ki * trials + trial];
                for (std::size_t s = 0; s < n_schemes; ++s)
                    out.rows.push_back(std::move(unit_rows[t * n_schemes + s]));
            }
    out.aggregates = aggregate(spec, out.rows);
    return out;
}

std::vector<AggregateRow> aggregate(const SweepSpec &spec, const std::vector<SweepRow> &rows)
{
    std::vector<AggregateRow> out;
    for (const auto &point : spec.points())
        for (const auto scheme : spec.schemes)
        {
            AggregateRow agg;
            agg.scheme = scheme;
            agg.i_th_db = point.i_th_db;
            agg.k = point.users;

            std::vector<double> values;
            for (const auto &row : rows)
            {
                if (row.scheme != scheme || row.k != point.users || row.i_th_db != point.i_th_db)
                    continue;
                if (row.feasible)
                    values.push_back(row.sum_rate);
                else
                    ++agg.trials_discarded;
            }
            agg.trials_used = values.size();
            if (!values.empty())
            {
                double sum = 0.0;
                for (const double v : values)
                    sum += v;
                agg.mean_sum_rate = sum / static_cast<double>(values.size());
                if (values.size() > 1)
                {
                    double ss = 0.0;
                    for (const double v : values)
                        ss += (v - agg.mean_sum_rate) * (v - agg.mean_sum_rate);
                    const double n = static_cast<double>(values.size());
                    agg.stderr_sum_rate = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
                }
            }
            out.push_back(agg);
        }
    return out;
}

} // namespace mmcr
