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

#include <catch_amalgamated.hpp>

#include "ris_ambient/ambient.hpp"
#include "ris_ambient/errors.hpp"
#include "ris_ambient/sweep.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace ris_ambient;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

std::vector<std::string> split(const std::string &line)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ','))
        out.push_back(cell);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

struct ParsedCsv
{
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string &name) const
    {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name)
                return i;
        throw std::out_of_range("no column " + name);
    }
};

ParsedCsv parse_csv(const std::string &text)
{
    ParsedCsv p;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
    {
        if (line.rfind("#", 0) == 0)
        {
            REQUIRE(p.header.empty());
            p.comments.push_back(line);
        }
        else if (p.header.empty())
            p.header = split(line);
        else
            p.rows.push_back(split(line));
    }
    return p;
}

Scenario canonical(double f_hz = 28e9, double radius = 0.12, double w = 0.3, double h = 0.3)
{
    ScenarioParams p;
    p.frequency_hz = f_hz;
    p.pole_radius_m = radius;
    p.ris_width_m = w;
    p.ris_height_m = h;
    return Scenario{p};
}

} // namespace

TEST_CASE("sweep - default distance grid")
{
    const auto d = default_sweep_distances();
    REQUIRE(d.size() == 40);
    CHECK(d.front() == 20.0);
    CHECK(d.back() == 200.0);
    for (std::size_t i = 1; i < d.size(); ++i)
    {
        CHECK(d[i] > d[i - 1]);
        CHECK_THAT(std::log(d[i] / d[i - 1]), WithinRel(std::log(10.0) / 39.0, 1e-9));
    }
}

TEST_CASE("sweep - argument errors")
{
    const Scenario s = canonical();
    const std::vector<double> empty;
    const std::vector<double> unsorted = {30.0, 20.0};
    const std::vector<double> repeated = {30.0, 30.0};
    const std::vector<double> inside = {5.0, 30.0};
    CHECK_THROWS_AS(run_sweep(s, empty), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(s, unsorted), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(s, repeated), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(s, inside), std::invalid_argument);
}

TEST_CASE("sweep - totals and advantages are consistent")
{
    const Scenario s = canonical();
    const auto d = default_sweep_distances();
    const SweepResult r = run_sweep(s, d);
    REQUIRE(r.rows.size() == 40);
    for (const auto &row : r.rows)
    {
        double sum = 0.0;
        for (const auto &m : row.corners)
        {
            REQUIRE(m.present());
            sum += m.gain->linear;
        }
        for (const auto &m : row.poles)
        {
            REQUIRE(m.present());
            sum += m.gain->linear;
        }
        CHECK_THAT(row.ambient_total.linear, WithinRel(sum, 1e-12));
        REQUIRE(row.ris_spread.present());
        CHECK_THAT(row.ris_advantage_db, WithinAbs(row.ris_spread.gain->db - row.ambient_total.db, 1e-9));
        CHECK_THAT(row.ris_ideal_advantage_db, WithinAbs(row.ris_ideal.gain->db - row.ambient_total.db, 1e-9));
        // spread penalty of a 0.3 m square RIS in this street
        CHECK_THAT(row.ris_ideal.gain->db - row.ris_spread.gain->db, WithinAbs(14.0216105, 1e-6));
    }
}

TEST_CASE("sweep - every mechanism weakens with distance")
{
    const SweepResult r = run_sweep(canonical(), default_sweep_distances());
    for (std::size_t i = 1; i < r.rows.size(); ++i)
    {
        const auto &a = r.rows[i - 1];
        const auto &b = r.rows[i];
        for (int c = 0; c < 4; ++c)
        {
            CHECK(b.corners[c].gain->linear < a.corners[c].gain->linear);
            CHECK(b.poles[c].gain->linear < a.poles[c].gain->linear);
        }
        CHECK(b.ambient_total.linear < a.ambient_total.linear);
        CHECK(b.ris_spread.gain->linear < a.ris_spread.gain->linear);
    }
}

TEST_CASE("sweep - soft polarization never beats hard")
{
    ScenarioParams p;
    p.polarization = Polarization::soft;
    const SweepResult soft = run_sweep(Scenario{p}, default_sweep_distances());
    const SweepResult hard = run_sweep(canonical(), default_sweep_distances());
    for (std::size_t i = 0; i < soft.rows.size(); ++i)
        CHECK(soft.rows[i].ambient_total.linear <= hard.rows[i].ambient_total.linear * (1.0 + 1e-12));
}

TEST_CASE("sweep - pole advantage over diffraction grows with frequency")
{
    const SweepResult lo = run_sweep(canonical(8e9), default_sweep_distances());
    const SweepResult hi = run_sweep(canonical(28e9), default_sweep_distances());
    auto gap = [](const SweepRow &row) {
        double c = 0.0, p = 0.0;
        for (const auto &m : row.corners)
            c += m.gain->linear;
        for (const auto &m : row.poles)
            p += m.gain->linear;
        return 10.0 * std::log10(p / c);
    };
    for (std::size_t i = 0; i < lo.rows.size(); ++i)
        CHECK(gap(hi.rows[i]) > gap(lo.rows[i]));
}

TEST_CASE("sweep - mechanisms outside their validity domain are reported, not evaluated")
{
    // ka < 20 at 8 GHz for a 10 cm pole
    const SweepRow row = evaluate_mechanisms(canonical(8e9, 0.1), 50.0);
    double corners = 0.0;
    for (const auto &m : row.corners)
        corners += m.gain->linear;
    for (const auto &m : row.poles)
    {
        CHECK_FALSE(m.present());
        CHECK(m.reason == "pole_below_high_frequency_limit");
    }
    CHECK_THAT(row.ambient_total.linear, WithinRel(corners, 1e-12));

    const std::vector<double> d = {50.0};
    const ParsedCsv csv = parse_csv(to_csv(run_sweep(canonical(8e9, 0.1), d)));
    REQUIRE(csv.rows.size() == 1);
    CHECK(csv.rows[0][csv.column("pole_nw_lin")].empty());
    CHECK(csv.rows[0][csv.column("pole_nw_db")].empty());
    CHECK(csv.rows[0][csv.column("pole_nw_reason")] == "pole_below_high_frequency_limit");
    CHECK(csv.rows[0][csv.column("corner_nw_reason")].empty());

    // a RIS too wide to be seen from the transmitter
    const SweepRow wide = evaluate_mechanisms(canonical(28e9, 0.12, 6.0, 0.3), 50.0);
    CHECK_FALSE(wide.ris_spread.present());
    CHECK(wide.ris_spread.reason == "ris_geometry");
    CHECK(std::isnan(wide.ris_advantage_db));
}

TEST_CASE("sweep - CSV layout and round trip")
{
    const Scenario s = build_scenario(to_config_text(canonical()), {"frequency_hz=8e9"});
    const SweepResult r = run_sweep(s, default_sweep_distances());
    const std::string text = to_csv(r);
    const ParsedCsv csv = parse_csv(text);

    REQUIRE(csv.rows.size() == 40);
    CHECK(csv.header.front() == "rx_distance_m");
    CHECK(csv.header.size() == 1 + 8 * 3 + 2 + 2 * 3 + 2);
    for (const auto &row : csv.rows)
        CHECK(row.size() == csv.header.size());

    bool saw_version = false, saw_freq = false, saw_override = false, saw_lambda = false;
    for (const auto &c : csv.comments)
    {
        saw_version |= c.find("version") != std::string::npos;
        saw_freq |= c == "# frequency_hz = 8e+09";
        saw_override |= c == "# override frequency_hz=8e9";
        saw_lambda |= c.find("wavelength_m") != std::string::npos;
    }
    CHECK(saw_version);
    CHECK(saw_freq);
    CHECK(saw_override);
    CHECK(saw_lambda);

    const std::size_t lin = csv.column("ambient_total_lin");
    const std::size_t db = csv.column("ambient_total_db");
    const std::size_t pl = csv.column("pole_se_lin");
    for (std::size_t i = 0; i < csv.rows.size(); ++i)
    {
        const double l = std::stod(csv.rows[i][lin]);
        CHECK_THAT(10.0 * std::log10(l), WithinAbs(std::stod(csv.rows[i][db]), 1e-9));
        CHECK_THAT(l, WithinRel(r.rows[i].ambient_total.linear, 1e-12));
        CHECK_THAT(std::stod(csv.rows[i][pl]), WithinRel(r.rows[i].poles[3].gain->linear, 1e-12));
        CHECK(std::stod(csv.rows[i][0]) == r.rows[i].rx_distance_m);
    }
    CHECK_THROWS_AS(to_csv(SweepResult{{}, s, version_string()}), std::invalid_argument);
}
