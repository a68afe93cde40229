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

#ifndef MMCR_CSV_HPP
#define MMCR_CSV_HPP

#include "mmcr/sweep.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mmcr
{

inline constexpr std::string_view kRowsHeader =
    "scheme,i_th_db,k,trial,sum_rate_bps_hz,total_interference,feasible,discard_reason";
inline constexpr std::string_view kAggregatesHeader =
    "scheme,i_th_db,k,trials_used,trials_discarded,mean_sum_rate,stderr_sum_rate";

inline constexpr std::string_view kRowsFile = "rows.csv";
inline constexpr std::string_view kAggregatesFile = "aggregates.csv";

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

// Quotes a field when it contains a comma, double quote, CR or LF (RFC 4180).
std::string csv_field(std::string_view text);

void write_rows_csv(std::ostream &os, const std::vector<SweepRow> &rows);
void write_aggregates_csv(std::ostream &os, const std::vector<AggregateRow> &aggregates);

// Writes rows.csv and aggregates.csv into out_dir, creating it if needed.
// Throws IoError naming the offending path.
void write_csv(const std::vector<SweepRow> &rows, const std::vector<AggregateRow> &aggregates,
               const std::string &out_dir);

// Splits RFC 4180 text into records of fields.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

std::vector<SweepRow> read_rows_csv(std::string_view text);
std::vector<AggregateRow> read_aggregates_csv(std::string_view text);

} // namespace mmcr

#endif
