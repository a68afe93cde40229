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

#include "mmcr/analog.hpp"
#include "mmcr/channel.hpp"
#include "mmcr/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

using namespace mmcr;

TEST_CASE("build_codebook: two antennas")
{
    const auto cb = build_codebook(2, 0.5);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(cb.vectors(0, 0) - Complex(r, 0)) < 1e-15);
    CHECK(std::abs(cb.vectors(1, 0) - Complex(r, 0)) < 1e-15);
    CHECK(std::abs(cb.vectors(0, 1) - Complex(r, 0)) < 1e-15);
    CHECK(std::abs(cb.vectors(1, 1) - Complex(-r, 0)) < 1e-15);
    CHECK(cb.grid_angles == std::vector<double>{0.0, std::numbers::pi});
}

TEST_CASE("build_codebook: four antennas give the DFT basis")
{
    const auto cb = build_codebook(4, 0.5);
    const Complex j(0.0, 1.0);
    // column i = [1, j^i, j^{2i}, j^{3i}] / 2
    for (int i = 0; i < 4; ++i)
        for (int m = 0; m < 4; ++m)
            CHECK(std::abs(cb.vectors(m, i) - std::pow(j, m * i) / 2.0) < 1e-14);
}

TEST_CASE("build_codebook: Gram matrix is the identity")
{
    for (const std::size_t n : {2u, 4u, 8u, 16u})
    {
        const auto cb = build_codebook(n, 0.5);
        const ComplexMatrix gram = oracle::naive_multiply(oracle::naive_adjoint(cb.vectors), cb.vectors);
        CHECK((gram - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-12);
        // constant modulus
        CHECK((cb.vectors.cwiseAbs().array() - 1.0 / std::sqrt(double(n))).abs().maxCoeff() <= 1e-15);
    }
    CHECK_THROWS_AS(build_codebook(0, 0.5), InvalidDimension);
}

TEST_CASE("Codebook::arrival_angle reproduces the codebook vectors")
{
    const auto cb = build_codebook(8, 0.5);
    for (std::size_t i = 0; i < 8; ++i)
    {
        const auto theta = cb.arrival_angle(i);
        REQUIRE(theta.has_value());
        const auto a = steering_vector(*theta, 8, 0.5);
        CHECK((a - cb.vectors.col(static_cast<Eigen::Index>(i))).norm() < 1e-12);
    }
    // quarter-wavelength spacing cannot realize phase steps beyond pi/2
    const auto narrow = build_codebook(4, 0.25);
    CHECK(narrow.arrival_angle(1).has_value());
    CHECK_FALSE(narrow.arrival_angle(2).has_value());
}

TEST_CASE("select_analog_combiner: all beams when M_r = N_r")
{
    std::mt19937_64 rng(1);
    const auto cb = build_codebook(4, 0.5);
    const auto h = oracle::random_matrix(rng, 4, 16);
    const auto sel = select_analog_combiner(h, 4, cb);
    CHECK(std::set<std::size_t>(sel.chosen_indices.begin(), sel.chosen_indices.end()).size() == 4);
    CHECK((sel.combiner.adjoint() * sel.combiner - ComplexMatrix::Identity(4, 4)).norm() <= 1e-12);
    CHECK((sel.combiner * sel.combiner.adjoint() - ComplexMatrix::Identity(4, 4)).norm() <= 1e-12);
}

TEST_CASE("select_analog_combiner: matches exhaustive subset search")
{
    std::mt19937_64 rng(2);
    const auto cb = build_codebook(4, 0.5);
    for (int t = 0; t < 200; ++t)
    {
        const auto h = oracle::random_matrix(rng, 4, 8);
        const auto sel = select_analog_combiner(h, 2, cb);
        std::vector<double> energy(4);
        for (int i = 0; i < 4; ++i)
            energy[i] = oracle::beam_energy(cb.vectors.col(i), h);
        const double best = oracle::best_subset_score(energy, 2);
        double chosen = 0.0;
        for (const auto i : sel.chosen_indices)
            chosen += energy[i];
        CHECK(chosen == doctest::Approx(best).epsilon(1e-12));
        CHECK(sel.scores[sel.chosen_indices[0]] >= sel.scores[sel.chosen_indices[1]]);
    }
}

TEST_CASE("select_analog_combiner: on-grid single path picks its beam first")
{
    const std::size_t n_rx = 8;
    const auto cb = build_codebook(n_rx, 0.5);
    Rng rng(4);
    for (std::size_t i = 0; i < n_rx; ++i)
    {
        const double theta = *cb.arrival_angle(i);
        GeometricChannelDraw draw{{complex_gaussian(rng)}, {theta}, {uniform_angle(rng)}};
        const auto h = generate_mmwave_channel(draw, 16, n_rx, 0.5);
        const auto sel = select_analog_combiner(h, 2, cb);
        CHECK(sel.chosen_indices.front() == i);
        // the matching beam captures all channel energy
        CHECK(sel.scores[i] == doctest::Approx(h.squaredNorm()).epsilon(1e-10));
    }
}

TEST_CASE("select_analog_combiner: ties resolve to the lower index")
{
    const auto cb = build_codebook(4, 0.5);
    const ComplexMatrix zero = ComplexMatrix::Zero(4, 3);
    const auto sel = select_analog_combiner(zero, 3, cb);
    CHECK(sel.chosen_indices == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("select_analog_combiner: errors and invariants")
{
    const auto cb = build_codebook(4, 0.5);
    std::mt19937_64 rng(5);
    const auto h = oracle::random_matrix(rng, 4, 8);
    CHECK_THROWS_AS(select_analog_combiner(h, 5, cb), InvalidDimension);
    CHECK_THROWS_AS(select_analog_combiner(h, 0, cb), InvalidDimension);
    CHECK_THROWS_AS(select_analog_combiner(oracle::random_matrix(rng, 3, 8), 2, cb), InvalidDimension);

    const auto sel = select_analog_combiner(h, 3, cb);
    CHECK((sel.combiner.cwiseAbs().array() - 0.5).abs().maxCoeff() <= 1e-15);
    CHECK((sel.combiner.adjoint() * sel.combiner - ComplexMatrix::Identity(3, 3)).norm() <= 1e-12);
}

TEST_CASE("select_analog_combiner: greedy equals exhaustive for N_r <= 8")
{
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<std::size_t> nr_dist(1, 8);
    for (int t = 0; t < 300; ++t)
    {
        const std::size_t n_rx = nr_dist(rng);
        const std::size_t m_rx = std::uniform_int_distribution<std::size_t>(1, n_rx)(rng);
        const auto cb = build_codebook(n_rx, 0.5);
        const auto h = oracle::random_matrix(rng, static_cast<Eigen::Index>(n_rx), 12);
        const auto sel = select_analog_combiner(h, m_rx, cb);
        std::vector<double> energy(n_rx);
        for (std::size_t i = 0; i < n_rx; ++i)
            energy[i] = oracle::beam_energy(cb.vectors.col(static_cast<Eigen::Index>(i)), h);
        double chosen = 0.0;
        for (const auto i : sel.chosen_indices)
            chosen += energy[i];
        CHECK(chosen == doctest::Approx(oracle::best_subset_score(energy, m_rx)).epsilon(1e-12));
    }
}

TEST_CASE("select_analog_combiner: positive scaling keeps the selection")
{
    std::mt19937_64 rng(8);
    const auto cb = build_codebook(8, 0.5);
    for (int t = 0; t < 100; ++t)
    {
        const auto h = oracle::random_matrix(rng, 8, 16);
        const auto base = select_analog_combiner(h, 3, cb).chosen_indices;
        for (const double c : {1e-6, 0.37, 3.0, 1e5})
            CHECK(select_analog_combiner(c * h, 3, cb).chosen_indices == base);
    }
}

TEST_CASE("build_analog_precoder: constant modulus")
{
    std::mt19937_64 rng(9);
    const auto cb = build_codebook(4, 0.5);
    MatrixList channels, combiners;
    for (int k = 0; k < 3; ++k)
    {
        channels.push_back(oracle::random_matrix(rng, 4, 16));
        combiners.push_back(select_analog_combiner(channels.back(), 2, cb).combiner);
    }
    const auto f = build_analog_precoder(combiners, channels);
    REQUIRE(f.rows() == 16);
    REQUIRE(f.cols() == 6);
    CHECK((f.cwiseAbs().array() - 0.25).abs().maxCoeff() <= 1e-14);
}

TEST_CASE("build_analog_precoder: phase alignment makes the equivalent diagonal real")
{
    // 2 users, N_t = 4: diag(H_comb F) must equal the row sums of |H_comb| / sqrt(N_t)
    std::mt19937_64 rng(10);
    const auto cb = build_codebook(4, 0.5);
    MatrixList channels, combiners;
    for (int k = 0; k < 2; ++k)
    {
        channels.push_back(oracle::random_matrix(rng, 4, 4));
        combiners.push_back(select_analog_combiner(channels.back(), 2, cb).combiner);
    }
    const auto f = build_analog_precoder(combiners, channels);

    ComplexMatrix combined(4, 4);
    for (int k = 0; k < 2; ++k)
        combined.middleRows(2 * k, 2) =
            oracle::naive_multiply(oracle::naive_adjoint(combiners[k]), channels[k]);
    const ComplexMatrix equivalent = oracle::naive_multiply(combined, f);
    for (Eigen::Index i = 0; i < 4; ++i)
    {
        double row_sum = 0.0;
        for (Eigen::Index j = 0; j < 4; ++j)
            row_sum += std::abs(combined(i, j));
        const double expected = row_sum / 2.0;
        CHECK(std::abs(equivalent(i, i).imag()) <= 1e-10 * expected);
        CHECK(equivalent(i, i).real() == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("build_analog_precoder: single antenna, single chain")
{
    const ComplexMatrix h = (ComplexMatrix(1, 1) << Complex(-0.6, 0.8)).finished();
    const ComplexMatrix w = ComplexMatrix::Ones(1, 1);
    const auto f = build_analog_precoder({w}, {h});
    CHECK(std::abs(f(0, 0) - std::conj(h(0, 0)) / std::abs(h(0, 0))) < 1e-15);
    const Complex eq = (w.adjoint() * h * f)(0, 0);
    CHECK(std::abs(eq - Complex(1.0, 0.0)) < 1e-15);
}

TEST_CASE("build_analog_precoder: zero entries use zero phase")
{
    ComplexMatrix h = ComplexMatrix::Zero(2, 3);
    h(0, 1) = Complex(0.0, 2.0);
    const ComplexMatrix w = build_codebook(2, 0.5).vectors.leftCols(1);
    const auto f = build_analog_precoder({w}, {h});
    const double s = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(f(0, 0) - Complex(s, 0.0)) < 1e-15);
    CHECK(std::abs(f(2, 0) - Complex(s, 0.0)) < 1e-15);
    CHECK(f.allFinite());
}

TEST_CASE("build_analog_precoder: dimension mismatch")
{
    std::mt19937_64 rng(12);
    const auto h1 = oracle::random_matrix(rng, 4, 8);
    const auto h2 = oracle::random_matrix(rng, 4, 6);
    const ComplexMatrix w = build_codebook(4, 0.5).vectors.leftCols(2);
    CHECK_THROWS_AS(build_analog_precoder({w, w}, {h1, h2}), InvalidDimension);
    CHECK_THROWS_AS(build_analog_precoder({w}, {h1, h1}), InvalidDimension);
    CHECK_THROWS_AS(build_analog_precoder({w.topRows(3)}, {h1}), InvalidDimension);
}
