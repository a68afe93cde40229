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

#include "mmcr/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace mmcr
{

PlotAxis choose_axis(const std::vector<AggregateRow> &aggregates)
{
    std::set<std::size_t> ks;
    std::set<double> thresholds;
    for (const auto &a : aggregates)
    {
        ks.insert(a.k);
        thresholds.insert(a.i_th_db);
    }
    return ks.size() > 1 && thresholds.size() == 1 ? PlotAxis::users : PlotAxis::threshold_db;
}

AxisRange padded_range(double min_value, double max_value)
{
    double span = max_value - min_value;
    if (!(span > 0.0))
    {
        const double mag = std::abs(min_value);
        span = mag > 0.0 ? mag : 1.0;
    }
    return {min_value - 0.05 * span, max_value + 0.05 * span};
}

namespace
{

constexpr double kWidth = 760.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 180.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr const char *kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

struct Point
{
    double x, y, se;
};

std::string num(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::string escape_xml(const std::string &s)
{
    std::string out;
    for (const char c : s)
    {
        switch (c)
        {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::vector<double> ticks(const AxisRange &r, int target = 6)
{
    const double span = r.hi - r.lo;
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (const double m : {1.0, 2.0, 2.5, 5.0, 10.0})
        if (m * mag >= raw)
        {
            step = m * mag;
            break;
        }
    std::vector<double> out;
    for (double t = std::ceil(r.lo / step) * step; t <= r.hi + 1e-9 * span; t += step)
        out.push_back(std::abs(t) < 1e-12 * span ? 0.0 : t);
    return out;
}

} // namespace

std::string render_plot_svg(const std::vector<AggregateRow> &aggregates)
{
    const PlotAxis axis = choose_axis(aggregates);
    std::set<std::size_t> ks;
    std::set<double> thresholds;
    for (const auto &a : aggregates)
    {
        ks.insert(a.k);
        thresholds.insert(a.i_th_db);
    }

    // Series keyed by first appearance so the legend follows the sweep order.
    std::vector<std::string> order;
    std::map<std::string, std::vector<Point>> series;
    for (const auto &a : aggregates)
    {
        if (a.trials_used == 0)
            continue;
        std::string label(to_string(a.scheme));
        if (axis == PlotAxis::threshold_db && ks.size() > 1)
            label += " (K=" + std::to_string(a.k) + ")";
        if (axis == PlotAxis::users && thresholds.size() > 1)
            label += " (" + num(a.i_th_db) + " dB)";
        const double x = axis == PlotAxis::users ? static_cast<double>(a.k) : a.i_th_db;
        if (!series.count(label))
            order.push_back(label);
        series[label].push_back({x, a.mean_sum_rate, a.stderr_sum_rate});
    }
    if (series.empty())
        throw InvalidParameter("emit_plot: no data to plot");

    double x_min = INFINITY, x_max = -INFINITY, y_min = INFINITY, y_max = -INFINITY;
    for (auto &[label, pts] : series)
    {
        std::sort(pts.begin(), pts.end(), [](const Point &a, const Point &b) { return a.x < b.x; });
        for (const auto &p : pts)
        {
            x_min = std::min(x_min, p.x);
            x_max = std::max(x_max, p.x);
            y_min = std::min(y_min, p.y - p.se);
            y_max = std::max(y_max, p.y + p.se);
        }
    }
    const AxisRange xr = padded_range(x_min, x_max);
    const AxisRange yr = padded_range(y_min, y_max);

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    auto sy = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<!-- x-range " << num(xr.lo) << " " << num(xr.hi) << " y-range " << num(yr.lo) << " " << num(yr.hi)
        << " -->\n";

    // frame, grid and ticks
    svg << "<rect class=\"frame\" x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
        << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (const double t : ticks(xr))
    {
        const double x = sx(t);
        svg << "<line x1=\"" << num(x) << "\" y1=\"" << kTop << "\" x2=\"" << num(x) << "\" y2=\"" << kTop + plot_h
            << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << num(x) << "\" y=\"" << kTop + plot_h + 18 << "\" text-anchor=\"middle\">" << num(t)
            << "</text>\n";
    }
    for (const double t : ticks(yr))
    {
        const double y = sy(t);
        svg << "<line x1=\"" << kLeft << "\" y1=\"" << num(y) << "\" x2=\"" << kLeft + plot_w << "\" y2=\"" << num(y)
            << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">" << num(t)
            << "</text>\n";
    }
    svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 16 << "\" text-anchor=\"middle\">"
        << (axis == PlotAxis::users ? "number of secondary users K" : "interference threshold I_th (dB)")
        << "</text>\n";
    svg << "<text transform=\"translate(18," << kTop + plot_h / 2
        << ") rotate(-90)\" text-anchor=\"middle\">mean sum-rate (bits/s/Hz)</text>\n";

    for (std::size_t s = 0; s < order.size(); ++s)
    {
        const auto &pts = series[order[s]];
        const char *color = kPalette[s % std::size(kPalette)];
        if (pts.size() > 1)
        {
            svg << "<polyline class=\"series\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
            for (std::size_t i = 0; i < pts.size(); ++i)
                svg << (i ? " " : "") << num(sx(pts[i].x)) << "," << num(sy(pts[i].y));
            svg << "\"/>\n";
        }
        for (const auto &p : pts)
        {
            if (p.se > 0.0)
                svg << "<line class=\"errorbar\" x1=\"" << num(sx(p.x)) << "\" y1=\"" << num(sy(p.y - p.se))
                    << "\" x2=\"" << num(sx(p.x)) << "\" y2=\"" << num(sy(p.y + p.se)) << "\" stroke=\"" << color
                    << "\"/>\n";
            svg << "<circle class=\"marker\" cx=\"" << num(sx(p.x)) << "\" cy=\"" << num(sy(p.y))
                << "\" r=\"3.5\" fill=\"" << color << "\"/>\n";
        }
        const double ly = kTop + 14 + 20 * static_cast<double>(s);
        const double lx = kLeft + plot_w + 16;
        svg << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\"" << lx + 22 << "\" y2=\"" << ly - 4
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << lx + 28 << "\" y=\"" << ly << "\">" << escape_xml(order[s]) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit_plot(const std::vector<AggregateRow> &aggregates, const std::string &path)
{
    const std::string doc = render_plot_svg(aggregates);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << doc;
    out.flush();
    if (!out)
        throw IoError("error writing '" + path + "'");
}

} // namespace mmcr
