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

#ifndef MMCR_PLOT_HPP
#define MMCR_PLOT_HPP

#include "mmcr/sweep.hpp"

#include <string>
#include <vector>

namespace mmcr
{

enum class PlotAxis
{
    threshold_db,
    users,
};

struct AxisRange
{
    double lo = 0.0;
    double hi = 1.0;
};

// users when the aggregates sweep several K at a single threshold, else threshold_db.
PlotAxis choose_axis(const std::vector<AggregateRow> &aggregates);

// [min, max] of the values widened by 5% of the span on each side. A degenerate
// span widens by 5% of |value| (or 1 when the value is 0).
AxisRange padded_range(double min_value, double max_value);

/// Standalone SVG line chart: one polyline per scheme (per scheme and fixed
/// coordinate when both K and the threshold vary), mean sum-rate on y with
/// standard-error bars. Series with a single point are drawn as a marker only.
/// Aggregates with no usable trials are skipped; throws InvalidParameter when
/// nothing remains.
std::string render_plot_svg(const std::vector<AggregateRow> &aggregates);

// Throws IoError naming the path on failure.
void emit_plot(const std::vector<AggregateRow> &aggregates, const std::string &path);

} // namespace mmcr

#endif
