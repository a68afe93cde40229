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

#include "mmcr/mmcr.hpp"

#include <benchmark/benchmark.h>

using namespace mmcr;

namespace
{

SweepSpec preset(std::size_t n_tx, std::size_t n_rx, std::size_t rf_rx, std::size_t streams)
{
    SweepSpec spec;
    spec.config.n_tx = n_tx;
    spec.config.n_rx = n_rx;
    spec.config.n_rx_primary = n_rx;
    spec.config.rf_rx = rf_rx;
    spec.config.streams = streams;
    spec.config.users = 8;
    spec.config.rf_tx = 8 * rf_rx;
    return spec;
}

void BM_DesignAdpc(benchmark::State &state)
{
    const auto spec = state.range(0) == 0 ? preset(32, 4, 2, 2) : preset(128, 16, 2, 2);
    const auto ch = draw_trial_channels(spec, spec.config.users, 0);
    const auto params = spec.scheme_params();
    for (auto _ : state)
        benchmark::DoNotOptimize(design_adpc(ch.secondary, ch.primary, params));
}
BENCHMARK(BM_DesignAdpc)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_BlockDiagonalization(benchmark::State &state)
{
    const auto users = static_cast<std::size_t>(state.range(0));
    SweepSpec spec = preset(128, 16, 2, 2);
    spec.config.users = users;
    const auto ch = draw_trial_channels(spec, users, 0);
    const auto sol = design_adpc(ch.secondary, ch.primary, spec.scheme_params());
    for (auto _ : state)
        benchmark::DoNotOptimize(bd_design(sol.effective, 2));
}
BENCHMARK(BM_BlockDiagonalization)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_FullDigitalBd(benchmark::State &state)
{
    const auto spec = preset(128, 16, 2, 2);
    const auto ch = draw_trial_channels(spec, spec.config.users, 0);
    const auto params = spec.scheme_params();
    for (auto _ : state)
        benchmark::DoNotOptimize(full_digital_bd(ch.secondary, ch.primary, 10.0, params));
}
BENCHMARK(BM_FullDigitalBd)->Unit(benchmark::kMillisecond);

void BM_PowerAllocation(benchmark::State &state)
{
    const auto n = static_cast<Eigen::Index>(state.range(0));
    Rng rng(1);
    std::exponential_distribution<double> e(1.0);
    StreamGains gains{StreamArray(n, 2), StreamArray(n, 2)};
    for (Eigen::Index i = 0; i < gains.sigma_sq.size(); ++i)
    {
        gains.sigma_sq(i) = e(rng);
        gains.gamma(i) = e(rng);
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(optimal_power_allocation(gains, 10.0));
}
BENCHMARK(BM_PowerAllocation)->Arg(2)->Arg(8)->Arg(32);

void BM_TrialAllSchemes(benchmark::State &state)
{
    SweepSpec spec = preset(32, 4, 2, 2);
    const std::vector<double> thresholds{0, 2, 4, 6, 8, 10, 12};
    std::size_t trial = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_trial_thresholds(spec, spec.config.users, thresholds, trial++));
}
BENCHMARK(BM_TrialAllSchemes)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
