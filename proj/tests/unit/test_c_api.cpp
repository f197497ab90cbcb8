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

#include "ris_ambient/ris_ambient.h"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

struct ScenarioHandle
{
    ra_scenario *p = nullptr;
    ~ScenarioHandle() { ra_scenario_destroy(p); }
};

struct SweepHandle
{
    ra_sweep *p = nullptr;
    ~SweepHandle() { ra_sweep_destroy(p); }
};

const char *config_text = R"(
frequency_hz = 28e9
tx_corner_distance_m = 100
street_half_width_m = 10
pole_radius_m = 0.12
pole_setback_m = 1
absorption_np_per_m = 0.005
ris_width_m = 1
ris_height_m = 1
polarization = hard
[angle_spread]
azimuth_rms_rad = 0.24434609527920614
elevation_rms_rad = 0.010471975511965976
scattered_segments = both
)";

std::string read_string(auto &&call)
{
    size_t needed = 0;
    REQUIRE(call(nullptr, 0, &needed) == RA_ERR_BUFFER_TOO_SMALL);
    std::string buf(needed, '\0');
    REQUIRE(call(buf.data(), buf.size(), &needed) == RA_OK);
    buf.resize(needed - 1);
    return buf;
}

} // namespace

TEST_CASE("c api - version and status strings")
{
    CHECK(std::string(ra_version()).size() > 0);
    CHECK(std::string(ra_status_string(RA_OK)) == "ok");
    CHECK(std::string(ra_status_string(RA_ERR_IO)).size() > 0);
    CHECK(std::string(ra_status_string(static_cast<ra_status>(99))).size() > 0);
}

TEST_CASE("c api - scenario creation and errors")
{
    ScenarioHandle s;
    REQUIRE(ra_scenario_create(config_text, nullptr, 0, &s.p) == RA_OK);
    ra_scenario_info info{};
    REQUIRE(ra_scenario_get_info(s.p, &info) == RA_OK);
    CHECK(info.frequency_hz == 28e9);
    CHECK_THAT(info.wavelength_m, WithinRel(0.010707, 1e-4));
    CHECK(info.ris_width_m == 1.0);
    CHECK(info.scattered_segments == RA_SEGMENTS_BOTH);
    CHECK(info.polarization == RA_POLARIZATION_HARD);

    ra_scenario *bad = nullptr;
    const char *ov[] = {"pole_radius_m=-1"};
    CHECK(ra_scenario_create(config_text, ov, 1, &bad) == RA_ERR_CONFIG);
    CHECK(bad == nullptr);
    CHECK(std::string(ra_last_error_key()) == "pole_radius_m");
    CHECK(std::string(ra_last_error()).find("pole_radius_m") != std::string::npos);

    CHECK(ra_scenario_create(nullptr, nullptr, 0, &bad) == RA_ERR_INVALID_ARGUMENT);
    CHECK(ra_scenario_create(config_text, nullptr, 1, &bad) == RA_ERR_INVALID_ARGUMENT);
    CHECK(ra_scenario_create(config_text, nullptr, 0, nullptr) == RA_ERR_INVALID_ARGUMENT);
    CHECK(ra_scenario_get_info(nullptr, &info) == RA_ERR_INVALID_ARGUMENT);
    ra_scenario_destroy(nullptr);

    const char *ov2[] = {"frequency_hz=8e9", "polarization=soft"};
    ScenarioHandle t;
    REQUIRE(ra_scenario_create(config_text, ov2, 2, &t.p) == RA_OK);
    REQUIRE(ra_scenario_get_info(t.p, &info) == RA_OK);
    CHECK(info.frequency_hz == 8e9);
    CHECK(info.polarization == RA_POLARIZATION_SOFT);

    const std::string echo = read_string([&](char *b, size_t c, size_t *n) { return ra_scenario_echo(t.p, b, c, n); });
    CHECK(echo.find("frequency_hz = 8e+09") != std::string::npos);
    CHECK(echo.find("[angle_spread]") != std::string::npos);
}

TEST_CASE("c api - baseline scenario and coherence")
{
    ScenarioHandle s;
    REQUIRE(ra_scenario_baseline(&s.p) == RA_OK);
    ra_coherence_report c{};
    REQUIRE(ra_coherence(s.p, RA_SEGMENTS_FROM_SCENARIO, &c) == RA_OK);
    CHECK(c.segments == RA_SEGMENTS_BOTH);
    CHECK_THAT(c.w_coh_m, WithinRel(0.012360963849577776, 1e-12));
    CHECK_THAT(c.a_ris_m2, WithinRel(0.09, 1e-15));
    CHECK_THAT(c.degradation_min_db, WithinAbs(-14.0216105, 1e-6));
    CHECK_THAT(c.a_eff_exact_m2, WithinRel(0.00244555443004395, 1e-8));

    REQUIRE(ra_coherence(s.p, RA_SEGMENTS_NONE, &c) == RA_OK);
    CHECK(std::isinf(c.w_coh_m));
    CHECK(c.degradation_min_db == 0.0);
    CHECK(ra_coherence(s.p, 7, &c) == RA_ERR_INVALID_ARGUMENT);

    ra_segment_factor f{};
    REQUIRE(ra_one_segment_factor(s.p, &f) == RA_OK);
    CHECK(f.stated_upper_bound == 4.0);
    CHECK(f.exact_ratio > 1.0);
    CHECK(f.exact_ratio < 2.0);
}

TEST_CASE("c api - mechanisms and sweeps")
{
    ScenarioHandle s;
    REQUIRE(ra_scenario_baseline(&s.p) == RA_OK);
    ra_mechanisms m{};
    REQUIRE(ra_mechanisms_at(s.p, 50.0, &m) == RA_OK);
    CHECK(m.rx_distance_m == 50.0);
    double sum = 0.0;
    for (int i = 0; i < 4; ++i)
    {
        CHECK(m.corner[i].present == 1);
        CHECK(m.corner[i].reason[0] == '\0');
        sum += m.corner[i].linear + m.pole[i].linear;
    }
    CHECK_THAT(m.ambient_total.linear, WithinRel(sum, 1e-12));
    CHECK_THAT(m.ris_advantage_db, WithinAbs(m.ris_spread.db - m.ambient_total.db, 1e-9));
    CHECK(ra_mechanisms_at(s.p, 5.0, &m) == RA_ERR_INVALID_ARGUMENT);

    const char *ov[] = {"frequency_hz=8e9", "pole_radius_m=0.1"};
    ScenarioHandle low;
    REQUIRE(ra_scenario_create(config_text, ov, 2, &low.p) == RA_OK);
    REQUIRE(ra_mechanisms_at(low.p, 50.0, &m) == RA_OK);
    CHECK(m.pole[0].present == 0);
    CHECK(std::string(m.pole[0].reason) == "pole_below_high_frequency_limit");

    SweepHandle sw;
    REQUIRE(ra_sweep_run(s.p, nullptr, 0, &sw.p) == RA_OK);
    CHECK(ra_sweep_row_count(sw.p) == 40);
    REQUIRE(ra_sweep_get_row(sw.p, 39, &m) == RA_OK);
    CHECK(m.rx_distance_m == 200.0);
    CHECK(ra_sweep_get_row(sw.p, 40, &m) == RA_ERR_INVALID_ARGUMENT);
    CHECK(ra_sweep_row_count(nullptr) == 0);

    const std::string csv = read_string([&](char *b, size_t c, size_t *n) { return ra_sweep_csv(sw.p, b, c, n); });
    CHECK(csv.find("rx_distance_m,") != std::string::npos);

    const std::string path = "c_api_sweep.csv";
    REQUIRE(ra_sweep_write_csv(sw.p, path.c_str()) == RA_OK);
    std::FILE *fp = std::fopen(path.c_str(), "rb");
    REQUIRE(fp != nullptr);
    std::string disk;
    char chunk[4096];
    size_t got;
    while ((got = std::fread(chunk, 1, sizeof chunk, fp)) > 0)
        disk.append(chunk, got);
    std::fclose(fp);
    std::remove(path.c_str());
    CHECK(disk == csv);
    CHECK(ra_sweep_write_csv(sw.p, "/nonexistent-dir/out.csv") == RA_ERR_IO);

    const double bad[] = {30.0, 20.0};
    SweepHandle none;
    CHECK(ra_sweep_run(s.p, bad, 2, &none.p) == RA_ERR_INVALID_ARGUMENT);
    CHECK(none.p == nullptr);
    const double good[] = {20.0, 30.0};
    SweepHandle two;
    REQUIRE(ra_sweep_run(s.p, good, 2, &two.p) == RA_OK);
    CHECK(ra_sweep_row_count(two.p) == 2);
}

TEST_CASE("c api - Monte Carlo verification")
{
    ScenarioHandle s;
    REQUIRE(ra_scenario_baseline(&s.p) == RA_OK);
    ra_mc_options o;
    ra_mc_options_default(&o);
    CHECK(o.trials == 10000);
    CHECK(o.analytic_scale == 1.0);
    o.trials = 1000;
    o.aperture_w_m = 0.1;
    o.aperture_h_m = 0.1;
    o.threads = 1;

    ra_oracle_report r{};
    REQUIRE(ra_mc_verify(s.p, &o, &r) == RA_OK);
    CHECK(r.verdict == RA_VERDICT_PASS);
    CHECK(r.trials == 1000);
    CHECK(r.aperture_w_m == 0.1);

    const std::string text =
        read_string([&](char *b, size_t c, size_t *n) { return ra_oracle_report_text(&r, b, c, n); });
    CHECK(text.find("verdict: pass") != std::string::npos);
    const std::string row =
        read_string([&](char *b, size_t c, size_t *n) { return ra_oracle_report_csv(&r, 1, b, c, n); });
    CHECK(row.rfind("aperture_w,", 0) == 0);

    o.analytic_scale = 2.0;
    REQUIRE(ra_mc_verify(s.p, &o, &r) == RA_OK);
    CHECK(r.verdict == RA_VERDICT_FAIL);

    o.analytic_scale = 1.0;
    o.segments = RA_SEGMENTS_NONE;
    REQUIRE(ra_mc_verify(s.p, &o, &r) == RA_OK);
    CHECK(r.verdict == RA_VERDICT_DEGENERATE_PASS);

    o.trials = 10;
    CHECK(ra_mc_verify(s.p, &o, &r) == RA_ERR_INVALID_ARGUMENT);
    CHECK(ra_mc_verify(nullptr, &o, &r) == RA_ERR_INVALID_ARGUMENT);
}
