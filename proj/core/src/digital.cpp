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
#include "mmcr/digital.hpp"

#include "mmcr/linalg.hpp"

#include <string>

namespace mmcr
{

ComplexMatrix EffectiveChannelSet::stacked() const
{
    if (per_user.empty())
        return {};
    return vstack(per_user, static_cast<std::size_t>(per_user.front().cols()));
}

EffectiveChannelSet effective_channels(const MatrixList &channels, const ComplexMatrix &analog_precoder,
                                       const MatrixList &combiners)
{
    if (channels.size() != combiners.size())
        throw InvalidDimension("effective_channels: need one combiner per channel");
    EffectiveChannelSet eff;
    eff.per_user.reserve(channels.size());
    for (std::size_t k = 0; k < channels.size(); ++k)
    {
        const auto &h = channels[k];
        const auto &w = combiners[k];
        if (w.rows() != h.rows() || h.cols() != analog_precoder.rows())
            throw InvalidDimension("effective_channels: dimension mismatch for user " + std::to_string(k));
        if (k > 0 && w.cols() != combiners.front().cols())
            throw InvalidDimension("effective_channels: users differ in RF chain count");
        eff.per_user.push_back(w.adjoint() * h * analog_precoder);
    }
    return eff;
}

ComplexMatrix stack_interference(std::size_t user, const EffectiveChannelSet &eff)
{
    if (user >= eff.users())
        throw InvalidDimension("stack_interference: user index out of range");
    const auto cols = static_cast<std::size_t>(eff.per_user.front().cols());
    MatrixList others;
    others.reserve(eff.users() - 1);
    for (std::size_t j = 0; j < eff.users(); ++j)
        if (j != user)
            others.push_back(eff.per_user[j]);
    return vstack(others, cols);
}

BdSolution bd_design(const EffectiveChannelSet &eff, std::size_t streams, const BdOptions &options)
{
    const std::size_t users = eff.users();
    if (users == 0)
        throw InvalidDimension("bd_design: no users");
    const Eigen::Index m_rx = eff.per_user.front().rows();
    const Eigen::Index m_tx = eff.per_user.front().cols();
    for (const auto &h : eff.per_user)
        if (h.rows() != m_rx || h.cols() != m_tx)
            throw InvalidDimension("bd_design: effective channels differ in shape");
    const auto d = static_cast<Eigen::Index>(streams);
    if (d == 0 || d > m_rx)
        throw InvalidDimension("bd_design: need 1 <= D <= M_r");

    BdSolution sol;
    sol.singular_values = StreamArray::Zero(static_cast<Eigen::Index>(users), d);
    sol.precoders.reserve(users);
    sol.combiners.reserve(users);
    sol.null_bases.reserve(users);

    for (std::size_t k = 0; k < users; ++k)
    {
        const ComplexMatrix interference = stack_interference(k, eff);

        ComplexMatrix null_basis;
        if (interference.rows() == 0)
        {
            null_basis = ComplexMatrix::Identity(m_tx, m_tx);
        }
        else
        {
            const Svd svd = svd_full(interference);
            const auto rank = static_cast<Eigen::Index>(numerical_rank(svd.s, options.rank_tol));
            const Eigen::Index nullity = m_tx - rank;
            if (nullity < m_rx)
                throw RankDeficiency(k, static_cast<std::size_t>(rank),
                                     "bd_design: interference stack of user " + std::to_string(k) + " has rank " +
                                         std::to_string(rank) + ", leaving a null space smaller than M_r");
            null_basis = svd.v.rightCols(nullity);
        }

        const ComplexMatrix projected = eff.per_user[k] * null_basis;
        const Svd inner = svd_full(projected);

        // rank relative to the user's own channel strength
        const Eigen::VectorXd own = eff.per_user[k].jacobiSvd().singularValues();
        const double reference = own.size() > 0 ? own(0) : 0.0;
        Eigen::Index stream_rank = 0;
        for (Eigen::Index i = 0; i < inner.s.size(); ++i)
            if (reference > 0.0 && inner.s(i) > options.rank_tol * reference)
                ++stream_rank;
        if (stream_rank < d && !options.zero_rank_deficient_streams)
            throw RankDeficiency(k, static_cast<std::size_t>(stream_rank),
                                 "bd_design: user " + std::to_string(k) + " supports only " +
                                     std::to_string(stream_rank) + " of " + std::to_string(d) + " streams");

        for (Eigen::Index i = 0; i < d; ++i)
        {
            const bool usable = i < stream_rank;
            sol.singular_values(static_cast<Eigen::Index>(k), i) = usable ? inner.s(i) : 0.0;
            if (!usable)
                ++sol.zeroed_streams;
        }
        sol.precoders.push_back(null_basis * inner.v.leftCols(d));
        sol.combiners.push_back(inner.u.leftCols(d));
        sol.null_bases.push_back(std::move(null_basis));
    }
    return sol;
}

} // namespace mmcr
