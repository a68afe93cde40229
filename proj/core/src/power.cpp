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
#include "mmcr/power.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace mmcr
{

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

StreamArray interference_gains(const MatrixList &precoders, const ComplexMatrix &analog_precoder,
                               const ComplexMatrix &primary_channel)
{
    if (precoders.empty())
        throw InvalidDimension("interference_gains: no precoders");
    if (primary_channel.cols() != analog_precoder.rows())
        throw InvalidDimension("interference_gains: primary channel does not match transmit antennas");
    const Eigen::Index streams = precoders.front().cols();
    const ComplexMatrix leak = primary_channel * analog_precoder;

    StreamArray gamma(static_cast<Eigen::Index>(precoders.size()), streams);
    for (std::size_t k = 0; k < precoders.size(); ++k)
    {
        const auto &b = precoders[k];
        if (b.rows() != analog_precoder.cols() || b.cols() != streams)
            throw InvalidDimension("interference_gains: precoder shape mismatch");
        const ComplexMatrix received = leak * b;
        for (Eigen::Index d = 0; d < streams; ++d)
            gamma(static_cast<Eigen::Index>(k), d) = std::max(0.0, received.col(d).squaredNorm());
    }
    return gamma;
}

double sum_rate(const StreamArray &powers, const StreamArray &sigma_sq)
{
    if (powers.rows() != sigma_sq.rows() || powers.cols() != sigma_sq.cols())
        throw InvalidDimension("sum_rate: shape mismatch");
    if ((powers < 0.0).any())
        throw InvalidParameter("sum_rate: negative power");
    double rate = 0.0;
    for (Eigen::Index i = 0; i < powers.size(); ++i)
        rate += std::log2(1.0 + powers(i) * sigma_sq(i));
    return rate;
}

double total_interference(const StreamArray &powers, const StreamArray &gamma)
{
    if (powers.rows() != gamma.rows() || powers.cols() != gamma.cols())
        throw InvalidDimension("total_interference: shape mismatch");
    return (powers * gamma).sum();
}

namespace
{

struct CostedStream
{
    Eigen::Index index;
    double sigma_sq;
    double gamma;
    double cost() const { return gamma / sigma_sq; } // inverse of the activation threshold
};

double interference_at(const std::vector<CostedStream> &streams, double lambda)
{
    const double level = 1.0 / lambda;
    double total = 0.0;
    for (const auto &s : streams)
        total += std::max(0.0, level - s.cost());
    return total;
}

} // namespace

PowerAllocation optimal_power_allocation(const StreamGains &gains, double i_th, const PowerOptions &options)
{
    const auto &sigma_sq = gains.sigma_sq;
    const auto &gamma = gains.gamma;
    if (sigma_sq.rows() != gamma.rows() || sigma_sq.cols() != gamma.cols())
        throw InvalidDimension("optimal_power_allocation: gain arrays differ in shape");
    if (!std::isfinite(i_th) || i_th < 0.0)
        throw InvalidParameter("optimal_power_allocation: interference budget must be finite and >= 0");
    if (!sigma_sq.allFinite() || !gamma.allFinite() || (sigma_sq < 0.0).any() || (gamma < 0.0).any())
        throw InvalidParameter("optimal_power_allocation: gains must be finite and nonnegative");

    PowerAllocation out;
    out.powers = StreamArray::Zero(sigma_sq.rows(), sigma_sq.cols());

    std::vector<CostedStream> costed;
    std::vector<Eigen::Index> free_streams;
    for (Eigen::Index i = 0; i < sigma_sq.size(); ++i)
    {
        if (!(sigma_sq(i) > options.min_gain))
            continue;
        if (gamma(i) > 0.0)
            costed.push_back({i, sigma_sq(i), gamma(i)});
        else
            free_streams.push_back(i);
    }
    if (costed.empty() && free_streams.empty())
        throw InvalidParameter("optimal_power_allocation: no stream has positive gain");

    if (i_th == 0.0)
    {
        out.lambda = std::numeric_limits<double>::infinity();
        return out;
    }

    for (const auto i : free_streams)
        out.powers(i) = options.p_max;
    out.cap_active = !free_streams.empty();

    if (!costed.empty())
    {
        const auto n = static_cast<double>(costed.size());
        double cost_sum = 0.0;
        double min_cost = std::numeric_limits<double>::infinity();
        for (const auto &s : costed)
        {
            cost_sum += s.cost();
            min_cost = std::min(min_cost, s.cost());
        }
        // interference(hi) = 0 <= i_th <= interference(lo)
        double hi = 1.0 / min_cost;
        double lo = n / (i_th + cost_sum);
        while (hi - lo > options.bisection_rel_width * hi)
        {
            const double mid = 0.5 * (lo + hi);
            if (interference_at(costed, mid) > i_th)
                lo = mid;
            else
                hi = mid;
        }
        double lambda = hi;

        // Snap to the exact multiplier of the identified active set.
        const double level_guess = 1.0 / (0.5 * (lo + hi));
        double active_cost = 0.0;
        std::size_t active = 0;
        for (const auto &s : costed)
            if (s.cost() < level_guess)
            {
                active_cost += s.cost();
                ++active;
            }
        if (active > 0)
        {
            const double level = (i_th + active_cost) / static_cast<double>(active);
            bool consistent = true;
            for (const auto &s : costed)
            {
                const bool is_active = s.cost() < level_guess;
                if (is_active != (s.cost() < level))
                    consistent = false;
            }
            if (consistent)
                lambda = 1.0 / level;
        }

        out.lambda = lambda;
        for (const auto &s : costed)
        {
            if (lambda < s.sigma_sq / s.gamma)
                out.powers(s.index) = std::max(0.0, 1.0 / (lambda * s.gamma) - 1.0 / s.sigma_sq);
        }
    }

    out.total_interference = total_interference(out.powers, gamma);
    out.sum_rate = sum_rate(out.powers, sigma_sq);
    return out;
}

} // namespace mmcr
