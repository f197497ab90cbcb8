// SPDX-License-Identifier: Apache-2.0
//
// ris-ambient: around-the-corner coverage from ambient scatter versus RIS
// Copyright (C) 2026 The ris-ambient Authors
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

#include "ris_ambient/sweep.hpp"
#include "ris_ambient/errors.hpp"
#include "ris_ambient/geometry.hpp"
#include "ris_ambient/ris_model.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ris_ambient
{

namespace
{

template <typename F>
MechanismGain guarded(F &&evaluate)
{
    try
    {
        return {evaluate(), {}};
    }
    catch (const ValidityError &e)
    {
        return {std::nullopt, e.code()};
    }
}

std::string number(double v)
{
    if (std::isnan(v))
        return {};
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void append_mechanism(std::string &row, const MechanismGain &m)
{
    row += ',';
    if (m.gain)
        row += number(m.gain->linear);
    row += ',';
    if (m.gain)
        row += number(m.gain->db);
    row += ',';
    row += m.reason;
}

void append_mechanism_header(std::string &header, const std::string &name)
{
    header += "," + name + "_lin," + name + "_db," + name + "_reason";
}

} // namespace

const char *version_string()
{
    return RIS_AMBIENT_VERSION;
}

SweepRow evaluate_mechanisms(const Scenario &scenario, double rx_distance_m)
{
    if (!(rx_distance_m > scenario.params().street_half_width_m))
        throw std::invalid_argument("receiver distance " + number(rx_distance_m) +
                                    " m is inside the intersection footprint");
    SweepRow row;
    row.rx_distance_m = rx_distance_m;

    const auto corners = corner_paths(scenario, rx_distance_m);
    const auto poles = pole_paths(scenario, rx_distance_m);
    double total = 0.0;
    for (size_t i = 0; i < 4; ++i)
    {
        row.corners[i] = guarded([&] { return diffraction_path_gain(corners[i], scenario); });
        row.poles[i] = guarded([&] { return pole_path_gain(poles[i], scenario); });
        if (row.corners[i].gain)
            total += row.corners[i].gain->linear;
        if (row.poles[i].gain)
            total += row.poles[i].gain->linear;
    }
    row.ambient_total = PathGain::from_linear(total);

    try
    {
        const RisPath ris = ris_path(scenario, rx_distance_m);
        row.ris_ideal = {ideal_ris_path_gain(ris, scenario), {}};
        row.ris_spread = {spread_ris_path_gain(ris, scenario), {}};
    }
    catch (const GeometryError &)
    {
        row.ris_ideal = {std::nullopt, "ris_geometry"};
        row.ris_spread = {std::nullopt, "ris_geometry"};
    }

    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    row.ris_advantage_db = row.ris_spread.gain ? row.ris_spread.gain->db - row.ambient_total.db : nan;
    row.ris_ideal_advantage_db = row.ris_ideal.gain ? row.ris_ideal.gain->db - row.ambient_total.db : nan;
    return row;
}

std::vector<double> default_sweep_distances()
{
    constexpr int points = 40;
    constexpr double first = 20.0;
    constexpr double last = 200.0;
    std::vector<double> out(points);
    const double step = std::log(last / first) / (points - 1);
    for (int i = 0; i < points; ++i)
        out[i] = first * std::exp(step * i);
    out.front() = first;
    out.back() = last;
    return out;
}

SweepResult run_sweep(const Scenario &scenario, std::span<const double> rx_distances_m)
{
    if (rx_distances_m.empty())
        throw std::invalid_argument("run_sweep: empty distance list");
    const double footprint = scenario.params().street_half_width_m;
    for (size_t i = 0; i < rx_distances_m.size(); ++i)
    {
        const double d = rx_distances_m[i];
        if (!std::isfinite(d) || d <= footprint)
            throw std::invalid_argument("run_sweep: distance " + number(d) + " m is inside the intersection footprint");
        if (i > 0 && !(d > rx_distances_m[i - 1]))
            throw std::invalid_argument("run_sweep: distances must be strictly increasing");
    }

    SweepResult result{{}, scenario, version_string()};
    result.rows.reserve(rx_distances_m.size());
    for (double d : rx_distances_m)
        result.rows.push_back(evaluate_mechanisms(scenario, d));
    return result;
}

std::string to_csv(const SweepResult &result)
{
    if (result.rows.empty())
        throw std::invalid_argument("to_csv: empty sweep result");

    std::string out;
    out += "# ris-ambient sweep\n";
    out += "# version = " + result.version + "\n";
    out += "# layout = Tx on street A centerline, Rx on street B centerline; distances measured from intersection center\n";
    out += "# linear columns are path gain P_R / (P_T G_T G_R); empty cells mark mechanisms outside their validity domain\n";
    const std::string config = to_config_text(result.scenario);
    size_t start = 0;
    while (start < config.size())
    {
        const size_t end = config.find('\n', start);
        const std::string line = config.substr(start, end - start);
        if (!line.empty())
            out += "# " + line + "\n";
        if (end == std::string::npos)
            break;
        start = end + 1;
    }
    out += "# derived wavelength_m = " + number(result.scenario.wavelength_m()) + "\n";
    for (const auto &o : result.scenario.overrides())
        out += "# override " + o + "\n";

    std::string header = "rx_distance_m";
    for (Corner c : all_corners)
        append_mechanism_header(header, "corner_" + std::string(to_string(c)));
    for (Corner c : all_corners)
        append_mechanism_header(header, "pole_" + std::string(to_string(c)));
    header += ",ambient_total_lin,ambient_total_db";
    append_mechanism_header(header, "ris_ideal");
    append_mechanism_header(header, "ris_spread");
    header += ",ris_advantage_db,ris_ideal_advantage_db\n";
    out += header;

    for (const auto &row : result.rows)
    {
        std::string line = number(row.rx_distance_m);
        for (const auto &m : row.corners)
            append_mechanism(line, m);
        for (const auto &m : row.poles)
            append_mechanism(line, m);
        line += "," + number(row.ambient_total.linear) + "," + number(row.ambient_total.db);
        append_mechanism(line, row.ris_ideal);
        append_mechanism(line, row.ris_spread);
        line += "," + number(row.ris_advantage_db) + "," + number(row.ris_ideal_advantage_db) + "\n";
        out += line;
    }
    return out;
}

} // namespace ris_ambient
