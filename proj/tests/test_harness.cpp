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

#include "mmcr/config.hpp"
#include "mmcr/csv.hpp"
#include "mmcr/plot.hpp"
#include "mmcr/sweep.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

using namespace mmcr;

namespace
{

const char *kSmallConfig = R"(# small preset
n_tx = 16
n_rx = 4
rf_tx = 8
rf_rx = 2
users = 4
streams = 2
paths = 3
schemes = adpc, fd_bd, right_singular, blind
i_th_db = 0, 6, 12
trials = 6
master_seed = 7
)";

std::string error_of(std::string_view text)
{
    try
    {
        (void)parse_config(text);
    }
    catch (const ConfigError &e)
    {
        return e.what();
    }
    return {};
}

std::string rows_text(const SweepResult &r)
{
    std::ostringstream os;
    write_rows_csv(os, r.rows);
    return os.str();
}

std::string aggregates_text(const SweepResult &r)
{
    std::ostringstream os;
    write_aggregates_csv(os, r.aggregates);
    return os.str();
}

std::size_t count_of(const std::string &text, const std::string &needle)
{
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++n;
    return n;
}

} // namespace

TEST_CASE("parse_config: defaults and overrides")
{
    const auto spec = parse_config(kSmallConfig);
    CHECK(spec.config.n_tx == 16);
    CHECK(spec.config.rf_tx == 8);
    CHECK(spec.config.n_rx_primary == 4);
    CHECK(spec.trials == 6);
    CHECK(spec.master_seed == 7);
    CHECK(spec.schemes.size() == 4);
    CHECK(spec.i_th_db == std::vector<double>{0, 6, 12});
    CHECK(spec.points().size() == 3);

    const auto defaults = parse_config("");
    CHECK(defaults.config.n_tx == 32);
    CHECK(defaults.config.users == 8);
    CHECK(defaults.i_th_db.size() == 7);
}

TEST_CASE("parse_config: rf_tx auto follows K across a K sweep")
{
    const auto spec = parse_config(R"(
n_tx = 128
n_rx = 16
rf_tx = auto
rf_rx = 4
streams = 4
k_values = 2, 4, 6, 8
i_th_db =
rank_deficient_streams = zero
)");
    CHECK(spec.rf_tx_auto);
    CHECK(spec.zero_rank_deficient_streams);
    const auto points = spec.points();
    REQUIRE(points.size() == 4);
    CHECK(points[0].i_th_db == kDefaultThresholdDb);
    CHECK(spec.config_for(6).rf_tx == 24);
    CHECK(spec.config_for(8).rf_tx == 32);
}

TEST_CASE("parse_config: dimension constraints name the violated relation")
{
    CHECK(error_of("n_tx = 32\nrf_tx = 8\nusers = 8\nrf_rx = 1\nstreams = 2\n").find("K*D <= M_t <= N_t") !=
          std::string::npos);
    CHECK(error_of("rf_tx = 40\nusers = 20\nrf_rx = 2\n").find("K*D <= M_t <= N_t") != std::string::npos);
    CHECK(error_of("streams = 3\nrf_tx = 24\n").find("D <= M_r <= N_r") != std::string::npos);
    CHECK(error_of("rf_rx = 5\n").find("D <= M_r <= N_r") != std::string::npos);
    CHECK(error_of("rf_tx = 20\n").find("M_t = K*M_r") != std::string::npos);
    // without the hybrid scheme M_t is free
    CHECK(error_of("rf_tx = 20\nschemes = fd_bd, blind\n").empty());
    CHECK(error_of("paths = 5\n").find("L <= N_r") != std::string::npos);
    CHECK(error_of("paths = 5\nchannel_model = rayleigh\n").empty());
    CHECK(error_of("users = 0\n").find("at least 1") != std::string::npos);
}

TEST_CASE("parse_config: syntax errors carry line numbers")
{
    CHECK(error_of("n_tx = 32\nbogus = 1\n").rfind("line 2: unknown key 'bogus'", 0) == 0);
    CHECK(error_of("n_tx = 32\nn_tx = 16\n").rfind("line 2: duplicate key", 0) == 0);
    CHECK(error_of("\n\nn_tx = abc\n").rfind("line 3:", 0) == 0);
    CHECK(error_of("n_tx 32\n").rfind("line 1: expected 'key = value'", 0) == 0);
    CHECK(error_of("users = -2\n").find("non-negative integer") != std::string::npos);
    CHECK(error_of("schemes = adpc, fancy\n").find("unknown scheme 'fancy'") != std::string::npos);
    CHECK(error_of("schemes = adpc, adpc\n").find("listed twice") != std::string::npos);
    CHECK(error_of("channel_model = ricean\n").find("channel_model") != std::string::npos);
    CHECK(error_of("rank_deficient_streams = maybe\n").find("discard") != std::string::npos);
    try
    {
        (void)parse_config("x = 1\n");
        FAIL("expected ConfigError");
    }
    catch (const ConfigError &e)
    {
        CHECK(e.line() == 1u);
    }
}

TEST_CASE("parse_config: sweep-level validation")
{
    CHECK(error_of("trials = 0\n").find("trials") != std::string::npos);
    CHECK(error_of("schemes =\n").find("scheme") != std::string::npos);
    CHECK(error_of("i_th_db =\n").find("non-empty") != std::string::npos);
    CHECK(error_of("i_th_db = 1, 1\n").find("duplicate") != std::string::npos);
    CHECK(error_of("i_th_db = inf\n").find("finite") != std::string::npos);
    CHECK(error_of("k_values = 2, 2\nrf_tx = auto\n").find("duplicate") != std::string::npos);
    CHECK(error_of("p_max = 0\n").find("p_max") != std::string::npos);
    CHECK(error_of("noise_var = 0\n").find("noise_var") != std::string::npos);
    // K sweep without auto M_t violates M_t = K*M_r at the other K values
    CHECK(error_of("k_values = 4, 8\n").find("M_t = K*M_r") != std::string::npos);
}

TEST_CASE("load_config_file: missing file is an I/O error")
{
    CHECK_THROWS_AS(load_config_file("/nonexistent/dir/none.cfg"), IoError);
    const auto dir = std::filesystem::temp_directory_path() / "mmcr_test_cfg";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "small.cfg").string();
    std::ofstream(path) << kSmallConfig;
    CHECK(load_config_file(path).trials == 6);
    CHECK(describe(load_config_file(path)).find("K = 4") != std::string::npos);
}

TEST_CASE("sweep: rows are ordered and complete")
{
    const auto spec = parse_config(kSmallConfig);
    const auto result = run_sweep(spec, 1);
    REQUIRE(result.rows.size() == 3 * 6 * 4);
    REQUIRE(result.aggregates.size() == 3 * 4);
    std::size_t i = 0;
    for (const double th : spec.i_th_db)
        for (std::size_t trial = 0; trial < 6; ++trial)
            for (const auto scheme : spec.schemes)
            {
                const auto &row = result.rows[i++];
                CHECK(row.i_th_db == th);
                CHECK(row.trial == trial);
                CHECK(row.scheme == scheme);
                CHECK(row.k == 4);
            }
    for (const auto &agg : result.aggregates)
        CHECK(agg.trials_used + agg.trials_discarded == 6);
}

TEST_CASE("sweep: thread count does not change the output")
{
    const auto spec = parse_config(kSmallConfig);
    const auto one = run_sweep(spec, 1);
    for (const std::size_t threads : {2u, 3u, 8u})
    {
        const auto many = run_sweep(spec, threads);
        CHECK(rows_text(one) == rows_text(many));
        CHECK(aggregates_text(one) == aggregates_text(many));
    }
}

TEST_CASE("sweep: a trial replays from the master seed alone")
{
    const auto spec = parse_config(kSmallConfig);
    const auto full = run_sweep(spec, 1);
    const auto rows = run_trial(spec, SweepPoint{4, 6.0}, 3);
    REQUIRE(rows.size() == 4);
    for (const auto &row : rows)
    {
        bool found = false;
        for (const auto &f : full.rows)
            if (f.trial == 3 && f.i_th_db == 6.0 && f.scheme == row.scheme)
            {
                CHECK(f.sum_rate == row.sum_rate);
                CHECK(f.total_interference == row.total_interference);
                found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("sweep: common channels across thresholds and prefix-stable users")
{
    const auto spec = parse_config(kSmallConfig);
    const auto a = draw_trial_channels(spec, 4, 2);
    const auto b = draw_trial_channels(spec, 4, 2);
    const auto c = draw_trial_channels(spec, 2, 2);
    const auto d = draw_trial_channels(spec, 4, 3);
    CHECK(a.secondary[3] == b.secondary[3]);
    CHECK(a.primary == b.primary);
    CHECK(a.secondary[1] == c.secondary[1]);
    CHECK(a.primary == c.primary);
    CHECK(a.secondary[0] != d.secondary[0]);
    CHECK(a.primary.rows() == 4);
    CHECK(a.primary.cols() == 16);
}

TEST_CASE("sweep: feasible hybrid rows meet the interference budget with equality")
{
    const auto spec = parse_config(kSmallConfig);
    const auto result = run_sweep(spec, 1);
    for (const auto &row : result.rows)
    {
        if (!row.feasible)
        {
            CHECK_FALSE(row.discard_reason.empty());
            continue;
        }
        CHECK(std::isfinite(row.sum_rate));
        CHECK(row.sum_rate >= 0.0);
        if (row.scheme != SchemeId::right_singular && !row.cap_active)
        {
            const double budget = std::pow(10.0, row.i_th_db / 10.0);
            CHECK(std::abs(row.total_interference - budget) <= 1e-6 * budget);
        }
    }
}

TEST_CASE("aggregate: mean and standard error")
{
    SweepSpec spec;
    spec.schemes = {SchemeId::adpc};
    spec.i_th_db = {0.0};
    std::vector<SweepRow> rows;
    for (const double v : {1.0, 2.0, 3.0, 4.0})
    {
        SweepRow r;
        r.i_th_db = 0.0;
        r.k = spec.config.users;
        r.sum_rate = v;
        rows.push_back(r);
    }
    SweepRow bad;
    bad.k = spec.config.users;
    bad.feasible = false;
    bad.discard_reason = "x";
    rows.push_back(bad);
    const auto agg = aggregate(spec, rows);
    REQUIRE(agg.size() == 1);
    CHECK(agg[0].trials_used == 4);
    CHECK(agg[0].trials_discarded == 1);
    CHECK(agg[0].mean_sum_rate == 2.5);
    CHECK(agg[0].stderr_sum_rate == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0).epsilon(1e-14));

    rows.resize(1);
    CHECK(aggregate(spec, rows)[0].stderr_sum_rate == 0.0);
}

TEST_CASE("csv: number formatting round-trips")
{
    for (const double v : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 1e-300, 6.02214076e23,
                           std::numeric_limits<double>::max(), std::numeric_limits<double>::denorm_min()})
        CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
    CHECK(format_double(12.0) == "12");
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("csv: quoting")
{
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
    const auto records = parse_csv("a,\"b,c\",\"d\"\"e\"\nx,,\"multi\nline\"\n");
    REQUIRE(records.size() == 2);
    CHECK(records[0] == std::vector<std::string>{"a", "b,c", "d\"e"});
    CHECK(records[1] == std::vector<std::string>{"x", "", "multi\nline"});
}

TEST_CASE("csv: headers and round trip")
{
    auto spec = parse_config(kSmallConfig);
    spec.trials = 3;
    auto result = run_sweep(spec, 1);
    result.rows[1].feasible = false;
    result.rows[1].sum_rate = 0.0;
    result.rows[1].total_interference = 0.0;
    result.rows[1].discard_reason = "user 1, stream \"2\", rank 1";

    const auto rows = rows_text(result);
    CHECK(rows.rfind(std::string(kRowsHeader) + "\n", 0) == 0);
    CHECK(rows.find('\r') == std::string::npos);
    const auto back = read_rows_csv(rows);
    REQUIRE(back.size() == result.rows.size());
    for (std::size_t i = 0; i < back.size(); ++i)
    {
        CHECK(back[i].scheme == result.rows[i].scheme);
        CHECK(back[i].i_th_db == result.rows[i].i_th_db);
        CHECK(back[i].k == result.rows[i].k);
        CHECK(back[i].trial == result.rows[i].trial);
        CHECK(back[i].sum_rate == result.rows[i].sum_rate);
        CHECK(back[i].total_interference == result.rows[i].total_interference);
        CHECK(back[i].feasible == result.rows[i].feasible);
        CHECK(back[i].discard_reason == result.rows[i].discard_reason);
    }

    const auto aggs = aggregates_text(result);
    CHECK(aggs.rfind(std::string(kAggregatesHeader) + "\n", 0) == 0);
    const auto back_aggs = read_aggregates_csv(aggs);
    REQUIRE(back_aggs.size() == result.aggregates.size());
    for (std::size_t i = 0; i < back_aggs.size(); ++i)
    {
        CHECK(back_aggs[i].mean_sum_rate == result.aggregates[i].mean_sum_rate);
        CHECK(back_aggs[i].stderr_sum_rate == result.aggregates[i].stderr_sum_rate);
        CHECK(back_aggs[i].trials_used == result.aggregates[i].trials_used);
    }

    CHECK_THROWS(read_rows_csv(""));
    CHECK_THROWS(read_rows_csv("wrong,header\n"));
    CHECK_THROWS(read_aggregates_csv(rows));
}

TEST_CASE("csv: write_csv creates the directory and reports I/O failures")
{
    const auto dir = std::filesystem::temp_directory_path() / "mmcr_test_csv" / "nested";
    std::filesystem::remove_all(dir.parent_path());
    auto spec = parse_config(kSmallConfig);
    spec.trials = 2;
    const auto result = run_sweep(spec, 1);
    write_csv(result.rows, result.aggregates, dir.string());
    CHECK(std::filesystem::exists(dir / kRowsFile));
    CHECK(std::filesystem::exists(dir / kAggregatesFile));

    // a regular file where the directory should be
    const auto blocker = dir / "blocker";
    std::ofstream(blocker) << "x";
    CHECK_THROWS_AS(write_csv(result.rows, result.aggregates, (blocker / "sub").string()), IoError);
}

TEST_CASE("plot: axis choice and padded range")
{
    std::vector<AggregateRow> th(2), ks(2);
    th[0].i_th_db = 0;
    th[1].i_th_db = 2;
    th[0].k = th[1].k = 8;
    ks[0].k = 2;
    ks[1].k = 4;
    ks[0].i_th_db = ks[1].i_th_db = 12;
    CHECK(choose_axis(th) == PlotAxis::threshold_db);
    CHECK(choose_axis(ks) == PlotAxis::users);

    const auto r = padded_range(0.0, 10.0);
    CHECK(r.lo == doctest::Approx(-0.5));
    CHECK(r.hi == doctest::Approx(10.5));
    const auto flat = padded_range(4.0, 4.0);
    CHECK(flat.lo == doctest::Approx(3.8));
    CHECK(flat.hi == doctest::Approx(4.2));
    const auto zero = padded_range(0.0, 0.0);
    CHECK(zero.lo == doctest::Approx(-0.05));
    CHECK(zero.hi == doctest::Approx(0.05));
}

TEST_CASE("plot: one polyline per scheme and one marker per point")
{
    const auto spec = parse_config(kSmallConfig);
    const auto result = run_sweep(spec, 1);
    const auto svg = render_plot_svg(result.aggregates);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count_of(svg, "class=\"series\"") == 4);
    std::size_t used = 0;
    for (const auto &a : result.aggregates)
        used += a.trials_used > 0 ? 1 : 0;
    CHECK(count_of(svg, "class=\"marker\"") == used);
    for (const auto scheme : spec.schemes)
        CHECK(svg.find(std::string(to_string(scheme))) != std::string::npos);
}

TEST_CASE("plot: single point series, empty data and output errors")
{
    AggregateRow only;
    only.scheme = SchemeId::adpc;
    only.k = 4;
    only.i_th_db = 12;
    only.trials_used = 3;
    only.mean_sum_rate = 5.0;
    const auto svg = render_plot_svg({only});
    CHECK(count_of(svg, "class=\"series\"") == 0);
    CHECK(count_of(svg, "class=\"marker\"") == 1);

    AggregateRow empty = only;
    empty.trials_used = 0;
    CHECK_THROWS_AS(render_plot_svg({empty}), InvalidParameter);
    CHECK_THROWS_AS(render_plot_svg({}), InvalidParameter);
    CHECK_THROWS_AS(emit_plot({only}, "/nonexistent/dir/plot.svg"), IoError);
}
