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
#include "mmcr/baselines.hpp"

#include "mmcr/analog.hpp"
#include "mmcr/linalg.hpp"

#include <cmath>
#include <numbers>

namespace mmcr
{

std::string_view to_string(SchemeId id)
{
    switch (id)
    {
    case SchemeId::adpc:
        return "adpc";
    case SchemeId::fd_bd:
        return "fd_bd";
    case SchemeId::right_singular:
        return "right_singular";
    case SchemeId::blind:
        return "blind";
    }
    return "unknown";
}

std::optional<SchemeId> parse_scheme(std::string_view name)
{
    for (auto id : {SchemeId::adpc, SchemeId::fd_bd, SchemeId::right_singular, SchemeId::blind})
        if (to_string(id) == name)
            return id;
    return std::nullopt;
}

namespace
{

void check_channels(const MatrixList &channels, const ComplexMatrix &primary_channel)
{
    if (channels.empty())
        throw InvalidDimension("no secondary-user channels");
    const auto n_rx = channels.front().rows();
    const auto n_tx = channels.front().cols();
    for (const auto &h : channels)
        if (h.rows() != n_rx || h.cols() != n_tx)
            throw InvalidDimension("secondary-user channels differ in shape");
    if (primary_channel.cols() != n_tx)
        throw InvalidDimension("primary channel does not match transmit antennas");
}

StreamGains noise_normalized(const StreamArray &singular_values, const StreamArray &gamma, double noise_var)
{
    return {singular_values.square() / noise_var, gamma};
}

SchemeResult from_allocation(SchemeId id, const PowerAllocation &alloc)
{
    SchemeResult r;
    r.scheme = id;
    r.sum_rate = alloc.sum_rate;
    r.total_interference = alloc.total_interference;
    r.cap_active = alloc.cap_active;
    return r;
}

SchemeResult discarded(SchemeId id, const std::string &reason)
{
    SchemeResult r;
    r.scheme = id;
    r.feasible = false;
    r.discard_reason = reason;
    return r;
}

// Per-stream SINR rate for schemes that leave residual interference.
// precoders[k] is N_t x D (unit-norm columns), combiners[k] is N_r x D.
double sinr_sum_rate(const MatrixList &channels, const MatrixList &precoders, const MatrixList &combiners,
                     const StreamArray &powers, double noise_var, bool same_user_interferes)
{
    const auto users = static_cast<Eigen::Index>(channels.size());
    const Eigen::Index streams = powers.cols();
    double rate = 0.0;
    for (Eigen::Index k = 0; k < users; ++k)
    {
        const auto uk = static_cast<std::size_t>(k);
        // gains(d, j * D + d') = |u_{k,d}^H H_k v_{j,d'}|^2
        for (Eigen::Index d = 0; d < streams; ++d)
        {
            const ComplexVector u = combiners[uk].col(d);
            const Eigen::RowVectorXcd uh = u.adjoint() * channels[uk];
            double signal = 0.0;
            double interference = 0.0;
            for (Eigen::Index j = 0; j < users; ++j)
            {
                const auto uj = static_cast<std::size_t>(j);
                const Eigen::RowVectorXcd g = uh * precoders[uj];
                for (Eigen::Index e = 0; e < streams; ++e)
                {
                    const double p = powers(j, e) * std::norm(g(e));
                    if (j == k && e == d)
                        signal = p;
                    else if (j != k || same_user_interferes)
                        interference += p;
                }
            }
            if (signal > 0.0)
                rate += std::log2(1.0 + signal / (noise_var * u.squaredNorm() + interference));
        }
    }
    return rate;
}

} // namespace

PrecodingSolution design_adpc(const MatrixList &channels, const ComplexMatrix &primary_channel,
                              const SchemeParams &params)
{
    check_channels(channels, primary_channel);
    const auto n_rx = static_cast<std::size_t>(channels.front().rows());
    const Codebook codebook = build_codebook(n_rx, params.spacing_ratio);

    PrecodingSolution sol;
    sol.analog_combiners.reserve(channels.size());
    for (const auto &h : channels)
        sol.analog_combiners.push_back(select_analog_combiner(h, params.rf_rx, codebook).combiner);
    sol.analog_precoder = build_analog_precoder(sol.analog_combiners, channels);
    sol.effective = effective_channels(channels, sol.analog_precoder, sol.analog_combiners);
    sol.digital = bd_design(sol.effective, params.streams, params.bd);
    sol.gamma = interference_gains(sol.digital.precoders, sol.analog_precoder, primary_channel);
    return sol;
}

namespace
{

std::vector<SchemeResult> discarded_all(SchemeId id, std::size_t n, const std::string &reason)
{
    return std::vector<SchemeResult>(n, discarded(id, reason));
}

std::vector<SchemeResult> allocate_each(SchemeId id, const StreamGains &gains, std::span<const double> i_th_values,
                                        const PowerOptions &options)
{
    std::vector<SchemeResult> out;
    out.reserve(i_th_values.size());
    for (const double i_th : i_th_values)
        out.push_back(from_allocation(id, optimal_power_allocation(gains, i_th, options)));
    return out;
}

SchemeResult single(std::vector<SchemeResult> results)
{
    return std::move(results.front());
}

} // namespace

std::vector<SchemeResult> adpc(const MatrixList &channels, const ComplexMatrix &primary_channel,
                               std::span<const double> i_th_values, const SchemeParams &params)
{
    PrecodingSolution sol;
    try
    {
        sol = design_adpc(channels, primary_channel, params);
    }
    catch (const RankDeficiency &e)
    {
        return discarded_all(SchemeId::adpc, i_th_values.size(), e.what());
    }
    return allocate_each(SchemeId::adpc, noise_normalized(sol.digital.singular_values, sol.gamma, params.noise_var),
                         i_th_values, params.power);
}

SchemeResult adpc(const MatrixList &channels, const ComplexMatrix &primary_channel, double i_th,
                  const SchemeParams &params)
{
    return single(adpc(channels, primary_channel, std::span<const double>(&i_th, 1), params));
}

std::vector<SchemeResult> full_digital_bd(const MatrixList &channels, const ComplexMatrix &primary_channel,
                                          std::span<const double> i_th_values, const SchemeParams &params)
{
    check_channels(channels, primary_channel);
    EffectiveChannelSet eff{channels};
    BdSolution bd;
    try
    {
        bd = bd_design(eff, params.streams, params.bd);
    }
    catch (const RankDeficiency &e)
    {
        return discarded_all(SchemeId::fd_bd, i_th_values.size(), e.what());
    }
    const auto n_tx = channels.front().cols();
    const StreamArray gamma = interference_gains(bd.precoders, ComplexMatrix::Identity(n_tx, n_tx), primary_channel);
    return allocate_each(SchemeId::fd_bd, noise_normalized(bd.singular_values, gamma, params.noise_var), i_th_values,
                         params.power);
}

SchemeResult full_digital_bd(const MatrixList &channels, const ComplexMatrix &primary_channel, double i_th,
                             const SchemeParams &params)
{
    return single(full_digital_bd(channels, primary_channel, std::span<const double>(&i_th, 1), params));
}

std::vector<SchemeResult> right_singular_precoding(const MatrixList &channels, const ComplexMatrix &primary_channel,
                                                   std::span<const double> i_th_values, const SchemeParams &params)
{
    check_channels(channels, primary_channel);
    const auto d = static_cast<Eigen::Index>(params.streams);
    const auto n_rx = channels.front().rows();
    const auto n_tx = channels.front().cols();
    if (d == 0 || d > std::min(n_rx, n_tx))
        throw InvalidDimension("right_singular_precoding: need 1 <= D <= min(N_r, N_t)");

    const auto users = static_cast<Eigen::Index>(channels.size());
    MatrixList precoders, combiners;
    StreamArray singular(users, d);
    for (Eigen::Index k = 0; k < users; ++k)
    {
        const Svd svd = svd_full(channels[static_cast<std::size_t>(k)]);
        precoders.push_back(svd.v.leftCols(d));
        combiners.push_back(svd.u.leftCols(d));
        singular.row(k) = svd.s.head(d).transpose().array();
    }
    const StreamArray gamma = interference_gains(precoders, ComplexMatrix::Identity(n_tx, n_tx), primary_channel);
    const StreamGains gains = noise_normalized(singular, gamma, params.noise_var);

    std::vector<SchemeResult> out;
    out.reserve(i_th_values.size());
    for (const double i_th : i_th_values)
    {
        const auto alloc = optimal_power_allocation(gains, i_th, params.power);
        SchemeResult r = from_allocation(SchemeId::right_singular, alloc);
        r.sum_rate = sinr_sum_rate(channels, precoders, combiners, alloc.powers, params.noise_var, false);
        out.push_back(std::move(r));
    }
    return out;
}

SchemeResult right_singular_precoding(const MatrixList &channels, const ComplexMatrix &primary_channel, double i_th,
                                      const SchemeParams &params)
{
    return single(right_singular_precoding(channels, primary_channel, std::span<const double>(&i_th, 1), params));
}

std::vector<SchemeResult> blind_transmission(const MatrixList &channels, const ComplexMatrix &primary_channel,
                                             std::span<const double> i_th_values, const SchemeParams &params,
                                             Rng &rng)
{
    check_channels(channels, primary_channel);
    for (const double i_th : i_th_values)
        if (!std::isfinite(i_th) || i_th < 0.0)
            throw InvalidParameter("blind_transmission: interference budget must be finite and >= 0");
    const auto d = static_cast<Eigen::Index>(params.streams);
    if (d == 0)
        throw InvalidDimension("blind_transmission: need at least one stream");
    const auto n_tx = channels.front().cols();
    const auto users = static_cast<Eigen::Index>(channels.size());
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_tx));
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);

    MatrixList precoders, combiners;
    for (Eigen::Index k = 0; k < users; ++k)
    {
        ComplexMatrix v(n_tx, d);
        for (Eigen::Index c = 0; c < d; ++c)
            for (Eigen::Index i = 0; i < n_tx; ++i)
                v(i, c) = std::polar(scale, phase(rng));
        const ComplexMatrix received = channels[static_cast<std::size_t>(k)] * v;
        ComplexMatrix u(received.rows(), d);
        for (Eigen::Index c = 0; c < d; ++c)
        {
            const double norm = received.col(c).norm();
            u.col(c) = norm > 0.0 ? ComplexVector(received.col(c) / norm) : ComplexVector::Zero(received.rows());
        }
        precoders.push_back(std::move(v));
        combiners.push_back(std::move(u));
    }

    const StreamArray gamma = interference_gains(precoders, ComplexMatrix::Identity(n_tx, n_tx), primary_channel);
    const double gamma_sum = gamma.sum();

    std::vector<SchemeResult> out;
    out.reserve(i_th_values.size());
    for (const double i_th : i_th_values)
    {
        SchemeResult r;
        r.scheme = SchemeId::blind;
        double level = 0.0;
        if (i_th > 0.0)
        {
            if (gamma_sum > 0.0)
                level = i_th / gamma_sum;
            else
            {
                level = params.power.p_max;
                r.cap_active = true;
            }
        }
        const StreamArray powers = StreamArray::Constant(users, d, level);
        r.total_interference = total_interference(powers, gamma);
        r.sum_rate = sinr_sum_rate(channels, precoders, combiners, powers, params.noise_var, true);
        out.push_back(std::move(r));
    }
    return out;
}

SchemeResult blind_transmission(const MatrixList &channels, const ComplexMatrix &primary_channel, double i_th,
                                const SchemeParams &params, Rng &rng)
{
    return single(blind_transmission(channels, primary_channel, std::span<const double>(&i_th, 1), params, rng));
}

} // namespace mmcr
