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

#ifndef MMCR_TYPES_HPP
#define MMCR_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmcr
{

using Complex = std::complex<double>;

// Dense complex matrix; column-major storage, rows() x cols() entries.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Per-stream real quantities indexed [user, stream] (K x D).
using StreamArray = Eigen::ArrayXXd;

using MatrixList = std::vector<ComplexMatrix>;

// ---- errors ------------------------------------------------------------

class InvalidDimension : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidParameter : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Raised by the block-diagonalization stage when a user's interference null
// space or its effective channel does not have the rank the design needs.
class RankDeficiency : public std::runtime_error
{
public:
    RankDeficiency(std::size_t user, std::size_t observed_rank, const std::string &what)
        : std::runtime_error(what), user_(user), observed_rank_(observed_rank)
    {
    }

    std::size_t user() const noexcept { return user_; }
    std::size_t observed_rank() const noexcept { return observed_rank_; }

private:
    std::size_t user_;
    std::size_t observed_rank_;
};

// File could not be opened, read or written. what() names the path.
class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// ---- system configuration ---------------------------------------------

struct HybridConfig
{
    std::size_t n_tx = 32;         // antennas at the base station
    std::size_t n_rx = 4;          // antennas per secondary user
    std::size_t n_rx_primary = 4;  // antennas at the primary user
    std::size_t rf_tx = 16;        // RF chains at the base station
    std::size_t rf_rx = 2;         // RF chains per secondary user
    std::size_t users = 8;
    std::size_t streams = 2;       // streams per user
    std::size_t paths = 3;         // propagation paths per link (geometric model)
    double path_gain_var = 1.0;
    double spacing_ratio = 0.5;    // antenna spacing over wavelength
    double noise_var = 1.0;
};

} // namespace mmcr

#endif
