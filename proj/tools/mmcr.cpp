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

// Command-line front end:
//   mmcr simulate --config <path> [--out-dir <path>] [--seed <u64>] [--threads <n>] [--plot]
//   mmcr validate --config <path>
// Exit codes: 0 success, 1 configuration error, 2 I/O error.

#include "mmcr/mmcr.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <thread>

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

int run_validate(const std::string &config_path)
{
    const auto spec = mmcr::load_config_file(config_path);
    std::cout << "config OK: " << config_path << "\n" << mmcr::describe(spec);
    return kExitOk;
}

int run_simulate(const std::string &config_path, const std::string &out_dir, std::optional<std::uint64_t> seed,
                 std::size_t threads, bool plot)
{
    auto spec = mmcr::load_config_file(config_path);
    if (seed)
        spec.master_seed = *seed;

    const auto start = std::chrono::steady_clock::now();
    const auto result = mmcr::run_sweep(spec, threads);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    mmcr::write_csv(result.rows, result.aggregates, out_dir);
    const auto dir = std::filesystem::path(out_dir.empty() ? "." : out_dir);
    if (plot)
        mmcr::emit_plot(result.aggregates, (dir / "sum_rate.svg").string());

    std::size_t discarded = 0;
    for (const auto &r : result.rows)
        discarded += r.feasible ? 0 : 1;
    std::cerr << result.rows.size() << " rows (" << discarded << " discarded) in " << seconds << " s -> "
              << (dir / mmcr::kRowsFile).string() << "\n";
    for (const auto &a : result.aggregates)
        std::cerr << "  " << mmcr::to_string(a.scheme) << "  K=" << a.k << "  I_th=" << a.i_th_db
                  << " dB  mean=" << a.mean_sum_rate << " +/- " << a.stderr_sum_rate << "  (" << a.trials_used
                  << " used, " << a.trials_discarded << " discarded)\n";
    return kExitOk;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Hybrid precoding sum-rate simulator for mmWave MIMO cognitive radio downlinks"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    bool plot = false;

    auto *simulate = app.add_subcommand("simulate", "Run a Monte-Carlo sweep and write CSV (and optionally SVG)");
    simulate->add_option("--config", config_path, "Configuration file")->required();
    simulate->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
    auto *seed_opt = simulate->add_option("--seed", seed, "Override master_seed");
    simulate->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    simulate->add_flag("--plot", plot, "Also write sum_rate.svg");

    auto *validate = app.add_subcommand("validate", "Check a configuration and print derived dimensions");
    validate->add_option("--config", config_path, "Configuration file")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try
    {
        if (*validate)
            return run_validate(config_path);
        return run_simulate(config_path, out_dir, *seed_opt ? std::optional<std::uint64_t>(seed) : std::nullopt,
                            threads, plot);
    }
    catch (const mmcr::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    catch (const mmcr::IoError &e)
    {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
