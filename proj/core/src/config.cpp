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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <type_traits>

namespace mmcr
{

ConfigError::ConfigError(const std::string &what, std::optional<std::size_t> line)
    : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + what : what), line_(line)
{
}

std::string_view to_string(ChannelModel model)
{
    return model == ChannelModel::geometric ? "geometric" : "rayleigh";
}

bool SweepSpec::has_scheme(SchemeId id) const
{
    return std::find(schemes.begin(), schemes.end(), id) != schemes.end();
}

std::vector<SweepPoint> SweepSpec::points() const
{
    const std::vector<std::size_t> ks = k_values.empty() ? std::vector<std::size_t>{config.users} : k_values;
    const std::vector<double> ths = i_th_db.empty() ? std::vector<double>{kDefaultThresholdDb} : i_th_db;
    std::vector<SweepPoint> out;
    out.reserve(ks.size() * ths.size());
    for (const auto k : ks)
        for (const auto t : ths)
            out.push_back({k, t});
    return out;
}

HybridConfig SweepSpec::config_for(std::size_t users) const
{
    HybridConfig c = config;
    c.users = users;
    if (rf_tx_auto)
        c.rf_tx = users * c.rf_rx;
    return c;
}

SchemeParams SweepSpec::scheme_params() const
{
    SchemeParams p;
    p.streams = config.streams;
    p.rf_rx = config.rf_rx;
    p.spacing_ratio = config.spacing_ratio;
    p.noise_var = config.noise_var;
    p.power.p_max = p_max;
    p.bd.zero_rank_deficient_streams = zero_rank_deficient_streams;
    return p;
}

namespace
{

std::string dims(const HybridConfig &c)
{
    std::ostringstream os;
    os << "(N_t=" << c.n_tx << ", N_r=" << c.n_rx << ", M_t=" << c.rf_tx << ", M_r=" << c.rf_rx
       << ", K=" << c.users << ", D=" << c.streams << ", L=" << c.paths << ")";
    return os.str();
}

} // namespace

void validate_config(const HybridConfig &c, bool hybrid_scheme, ChannelModel model)
{
    if (c.n_tx == 0 || c.n_rx == 0 || c.n_rx_primary == 0 || c.rf_tx == 0 || c.rf_rx == 0 || c.users == 0 ||
        c.streams == 0)
        throw ConfigError("all antenna, RF chain, user and stream counts must be at least 1 " + dims(c));
    if (!(c.users * c.streams <= c.rf_tx && c.rf_tx <= c.n_tx))
        throw ConfigError("constraint K*D <= M_t <= N_t violated " + dims(c));
    if (!(c.streams <= c.rf_rx && c.rf_rx <= c.n_rx))
        throw ConfigError("constraint D <= M_r <= N_r violated " + dims(c));
    if (hybrid_scheme && c.rf_tx != c.users * c.rf_rx)
        throw ConfigError("constraint M_t = K*M_r (required by the adpc scheme) violated " + dims(c));
    if (model == ChannelModel::geometric)
    {
        if (c.paths == 0)
            throw ConfigError("geometric channels need at least one path " + dims(c));
        if (c.paths > c.n_rx)
            throw ConfigError("constraint L <= N_r violated " + dims(c));
    }
    if (!(c.path_gain_var > 0.0))
        throw ConfigError("path_gain_var must be positive");
    if (!(c.spacing_ratio > 0.0))
        throw ConfigError("spacing_ratio must be positive");
    if (!(c.noise_var > 0.0))
        throw ConfigError("noise_var must be positive");
}

void validate_spec(const SweepSpec &spec)
{
    if (spec.trials == 0)
        throw ConfigError("trials must be at least 1");
    if (spec.schemes.empty())
        throw ConfigError("at least one scheme is required");
    if (spec.i_th_db.empty() && spec.k_values.empty())
        throw ConfigError("i_th_db or k_values must be non-empty");
    if (!(spec.p_max > 0.0))
        throw ConfigError("p_max must be positive");
    for (const double t : spec.i_th_db)
        if (!std::isfinite(t))
            throw ConfigError("i_th_db values must be finite");
    if (std::set<double>(spec.i_th_db.begin(), spec.i_th_db.end()).size() != spec.i_th_db.size())
        throw ConfigError("i_th_db contains duplicate thresholds");
    if (std::set<std::size_t>(spec.k_values.begin(), spec.k_values.end()).size() != spec.k_values.size())
        throw ConfigError("k_values contains duplicate entries");
    const bool hybrid = spec.has_scheme(SchemeId::adpc);
    for (const auto &p : spec.points())
        validate_config(spec.config_for(p.users), hybrid, spec.channel_model);
}

namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_list(std::string_view s)
{
    std::vector<std::string_view> out;
    if (trim(s).empty())
        return out;
    std::size_t start = 0;
    while (true)
    {
        const auto comma = s.find(',', start);
        out.push_back(trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view text, std::string_view key, std::size_t line)
{
    T value{};
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    if constexpr (std::is_unsigned_v<T>)
    {
        if (!text.empty() && text.front() == '-')
            throw ConfigError(std::string(key) + ": expected a non-negative integer, got '" + std::string(text) + "'",
                              line);
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty())
        throw ConfigError(std::string(key) + ": cannot parse '" + std::string(text) + "' as a number", line);
    return value;
}

} // namespace

SweepSpec parse_config(std::string_view text)
{
    SweepSpec spec;
    std::optional<std::size_t> n_rx_primary;
    std::set<std::string, std::less<>> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("expected 'key = value', got '" + std::string(line) + "'", line_no);
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("missing key before '='", line_no);
        if (!seen.insert(std::string(key)).second)
            throw ConfigError("duplicate key '" + std::string(key) + "'", line_no);

        auto as_size = [&] { return parse_number<std::size_t>(value, key, line_no); };
        auto as_double = [&] { return parse_number<double>(value, key, line_no); };

        if (key == "n_tx")
            spec.config.n_tx = as_size();
        else if (key == "n_rx")
            spec.config.n_rx = as_size();
        else if (key == "n_rx_primary")
            n_rx_primary = as_size();
        else if (key == "rf_tx")
        {
            if (value == "auto")
                spec.rf_tx_auto = true;
            else
                spec.config.rf_tx = as_size();
        }
        else if (key == "rf_rx")
            spec.config.rf_rx = as_size();
        else if (key == "users")
            spec.config.users = as_size();
        else if (key == "streams")
            spec.config.streams = as_size();
        else if (key == "paths")
            spec.config.paths = as_size();
        else if (key == "path_gain_var")
            spec.config.path_gain_var = as_double();
        else if (key == "spacing_ratio")
            spec.config.spacing_ratio = as_double();
        else if (key == "noise_var")
            spec.config.noise_var = as_double();
        else if (key == "p_max")
            spec.p_max = as_double();
        else if (key == "trials")
            spec.trials = as_size();
        else if (key == "master_seed")
            spec.master_seed = parse_number<std::uint64_t>(value, key, line_no);
        else if (key == "channel_model")
        {
            if (value == "geometric")
                spec.channel_model = ChannelModel::geometric;
            else if (value == "rayleigh")
                spec.channel_model = ChannelModel::rayleigh;
            else
                throw ConfigError("channel_model must be 'geometric' or 'rayleigh'", line_no);
        }
        else if (key == "schemes")
        {
            spec.schemes.clear();
            for (const auto item : split_list(value))
            {
                const auto id = parse_scheme(item);
                if (!id)
                    throw ConfigError("unknown scheme '" + std::string(item) +
                                          "' (expected adpc, fd_bd, right_singular, blind)",
                                      line_no);
                if (std::find(spec.schemes.begin(), spec.schemes.end(), *id) != spec.schemes.end())
                    throw ConfigError("scheme '" + std::string(item) + "' listed twice", line_no);
                spec.schemes.push_back(*id);
            }
        }
        else if (key == "i_th_db")
        {
            spec.i_th_db.clear();
            for (const auto item : split_list(value))
                spec.i_th_db.push_back(parse_number<double>(item, key, line_no));
        }
        else if (key == "k_values")
        {
            spec.k_values.clear();
            for (const auto item : split_list(value))
                spec.k_values.push_back(parse_number<std::size_t>(item, key, line_no));
        }
        else if (key == "rank_deficient_streams")
        {
            if (value == "discard")
                spec.zero_rank_deficient_streams = false;
            else if (value == "zero")
                spec.zero_rank_deficient_streams = true;
            else
                throw ConfigError("rank_deficient_streams must be 'discard' or 'zero'", line_no);
        }
        else
            throw ConfigError("unknown key '" + std::string(key) + "'", line_no);
    }

    spec.config.n_rx_primary = n_rx_primary.value_or(spec.config.n_rx);
    if (spec.rf_tx_auto)
        spec.config.rf_tx = spec.config.users * spec.config.rf_rx;
    validate_spec(spec);
    return spec;
}

SweepSpec load_config_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw IoError("error reading config file '" + path + "'");
    return parse_config(buffer.str());
}

std::string describe(const SweepSpec &spec)
{
    std::ostringstream os;
    const auto &c = spec.config;
    os << "channel model     : " << to_string(spec.channel_model) << "\n";
    os << "base station      : N_t = " << c.n_tx << " antennas, M_t = "
       << (spec.rf_tx_auto ? std::string("K*M_r") : std::to_string(c.rf_tx)) << " RF chains\n";
    os << "secondary users   : N_r = " << c.n_rx << " antennas, M_r = " << c.rf_rx << " RF chains, D = " << c.streams
       << " streams\n";
    os << "primary user      : N_r0 = " << c.n_rx_primary << " antennas\n";
    if (spec.channel_model == ChannelModel::geometric)
        os << "paths per link    : L = " << c.paths << ", path gain variance " << c.path_gain_var
           << ", spacing " << c.spacing_ratio << " wavelengths\n";
    os << "schemes           :";
    for (const auto s : spec.schemes)
        os << " " << to_string(s);
    os << "\n";
    os << "trials            : " << spec.trials << " per point, master seed " << spec.master_seed << "\n";
    os << "sweep points      :\n";
    for (const auto &p : spec.points())
    {
        const auto pc = spec.config_for(p.users);
        os << "  K = " << p.users << ", I_th = " << p.i_th_db << " dB -> M_t = " << pc.rf_tx
           << ", F is " << pc.n_tx << "x" << pc.users * pc.rf_rx << ", effective channel " << pc.rf_rx << "x"
           << pc.rf_tx << " per user, " << pc.users * pc.streams << " streams\n";
    }
    return os.str();
}

} // namespace mmcr
