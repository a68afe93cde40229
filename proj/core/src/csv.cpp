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

#include "mmcr/csv.hpp"

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <system_error>

namespace mmcr
{

std::string format_double(double value)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf.data(), ptr);
}

std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(text);
    std::string out = "\"";
    for (const char c : text)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_rows_csv(std::ostream &os, const std::vector<SweepRow> &rows)
{
    os << kRowsHeader << '\n';
    for (const auto &r : rows)
    {
        os << to_string(r.scheme) << ',' << format_double(r.i_th_db) << ',' << r.k << ',' << r.trial << ','
           << format_double(r.sum_rate) << ',' << format_double(r.total_interference) << ','
           << (r.feasible ? "true" : "false") << ',' << csv_field(r.discard_reason) << '\n';
    }
}

void write_aggregates_csv(std::ostream &os, const std::vector<AggregateRow> &aggregates)
{
    os << kAggregatesHeader << '\n';
    for (const auto &a : aggregates)
    {
        os << to_string(a.scheme) << ',' << format_double(a.i_th_db) << ',' << a.k << ',' << a.trials_used << ','
           << a.trials_discarded << ',' << format_double(a.mean_sum_rate) << ',' << format_double(a.stderr_sum_rate)
           << '\n';
    }
}

namespace
{

template <typename Writer>
void write_file(const std::filesystem::path &path, Writer &&writer)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    writer(out);
    out.flush();
    if (!out)
        throw IoError("error writing '" + path.string() + "'");
}

} // namespace

void write_csv(const std::vector<SweepRow> &rows, const std::vector<AggregateRow> &aggregates,
               const std::string &out_dir)
{
    const std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
    write_file(dir / kRowsFile, [&](std::ostream &os) { write_rows_csv(os, rows); });
    write_file(dir / kAggregatesFile, [&](std::ostream &os) { write_aggregates_csv(os, aggregates); });
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text)
{
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;

    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i)
    {
        const char c = text[i];
        if (in_quotes)
        {
            if (c == '"')
            {
                if (i + 1 < text.size() && text[i + 1] == '"')
                {
                    field += '"';
                    ++i;
                }
                else
                    in_quotes = false;
            }
            else
                field += c;
            continue;
        }
        switch (c)
        {
        case '"':
            in_quotes = true;
            field_started = true;
            break;
        case ',':
            end_field();
            field_started = true;
            break;
        case '\r':
            break;
        case '\n':
            end_record();
            break;
        default:
            field += c;
            field_started = true;
        }
    }
    if (in_quotes)
        throw std::runtime_error("parse_csv: unterminated quoted field");
    if (field_started || !record.empty())
        end_record();
    return records;
}

namespace
{

template <typename T>
T parse_field(const std::string &s)
{
    T value{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::runtime_error("cannot parse CSV field '" + s + "'");
    return value;
}

SchemeId parse_scheme_field(const std::string &s)
{
    const auto id = parse_scheme(s);
    if (!id)
        throw std::runtime_error("unknown scheme '" + s + "' in CSV");
    return *id;
}

void check_header(const std::vector<std::vector<std::string>> &records, std::string_view header)
{
    if (records.empty())
        throw std::runtime_error("CSV is empty");
    std::string joined;
    for (std::size_t i = 0; i < records.front().size(); ++i)
        joined += (i ? "," : "") + records.front()[i];
    if (joined != header)
        throw std::runtime_error("unexpected CSV header '" + joined + "'");
}

} // namespace

std::vector<SweepRow> read_rows_csv(std::string_view text)
{
    const auto records = parse_csv(text);
    check_header(records, kRowsHeader);
    std::vector<SweepRow> rows;
    for (std::size_t i = 1; i < records.size(); ++i)
    {
        const auto &f = records[i];
        if (f.size() != 8)
            throw std::runtime_error("rows CSV: record " + std::to_string(i) + " has " + std::to_string(f.size()) +
                                     " fields");
        SweepRow r;
        r.scheme = parse_scheme_field(f[0]);
        r.i_th_db = parse_field<double>(f[1]);
        r.k = parse_field<std::size_t>(f[2]);
        r.trial = parse_field<std::size_t>(f[3]);
        r.sum_rate = parse_field<double>(f[4]);
        r.total_interference = parse_field<double>(f[5]);
        if (f[6] != "true" && f[6] != "false")
            throw std::runtime_error("rows CSV: feasible must be true or false");
        r.feasible = f[6] == "true";
        r.discard_reason = f[7];
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<AggregateRow> read_aggregates_csv(std::string_view text)
{
    const auto records = parse_csv(text);
    check_header(records, kAggregatesHeader);
    std::vector<AggregateRow> out;
    for (std::size_t i = 1; i < records.size(); ++i)
    {
        const auto &f = records[i];
        if (f.size() != 7)
            throw std::runtime_error("aggregates CSV: record " + std::to_string(i) + " has wrong field count");
        AggregateRow a;
        a.scheme = parse_scheme_field(f[0]);
        a.i_th_db = parse_field<double>(f[1]);
        a.k = parse_field<std::size_t>(f[2]);
        a.trials_used = parse_field<std::size_t>(f[3]);
        a.trials_discarded = parse_field<std::size_t>(f[4]);
        a.mean_sum_rate = parse_field<double>(f[5]);
        a.stderr_sum_rate = parse_field<double>(f[6]);
        out.push_back(a);
    }
    return out;
}

} // namespace mmcr
