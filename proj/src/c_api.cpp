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

#include "ris_ambient/ris_ambient.h"

#include "ris_ambient/errors.hpp"
#include "ris_ambient/field_oracle.hpp"
#include "ris_ambient/ris_model.hpp"
#include "ris_ambient/scenario.hpp"
#include "ris_ambient/sweep.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <string>

using namespace ris_ambient;

struct ra_scenario
{
    Scenario value;
};

struct ra_sweep
{
    SweepResult value;
};

namespace
{

thread_local std::string last_error;
thread_local std::string last_error_key;

ra_status fail(ra_status status, std::string message, std::string key = {})
{
    last_error = std::move(message);
    last_error_key = std::move(key);
    return status;
}

// Runs body, mapping exceptions to status codes.
template <typename F>
ra_status guard(F &&body) noexcept
{
    try
    {
        last_error.clear();
        last_error_key.clear();
        return body();
    }
    catch (const ConfigError &e)
    {
        return fail(RA_ERR_CONFIG, e.what(), e.key());
    }
    catch (const GeometryError &e)
    {
        return fail(RA_ERR_GEOMETRY, e.what());
    }
    catch (const ValidityError &e)
    {
        return fail(RA_ERR_VALIDITY, e.what());
    }
    catch (const NumericError &e)
    {
        return fail(RA_ERR_NUMERIC, e.what());
    }
    catch (const std::invalid_argument &e)
    {
        return fail(RA_ERR_INVALID_ARGUMENT, e.what());
    }
    catch (const std::bad_alloc &)
    {
        return fail(RA_ERR_INTERNAL, "out of memory");
    }
    catch (const std::exception &e)
    {
        return fail(RA_ERR_INTERNAL, e.what());
    }
    catch (...)
    {
        return fail(RA_ERR_INTERNAL, "unknown error");
    }
}

ra_status copy_out(const std::string &text, char *buf, size_t capacity, size_t *needed)
{
    if (needed)
        *needed = text.size() + 1;
    if (capacity < text.size() + 1)
    {
        if (buf && capacity > 0)
            buf[0] = '\0';
        return fail(RA_ERR_BUFFER_TOO_SMALL, "buffer too small: need " + std::to_string(text.size() + 1) + " bytes");
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return RA_OK;
}

ScatteredSegments to_segments(int s)
{
    switch (s)
    {
    case RA_SEGMENTS_BOTH:
        return ScatteredSegments::both;
    case RA_SEGMENTS_RIS_TO_RX_ONLY:
        return ScatteredSegments::ris_to_rx_only;
    case RA_SEGMENTS_NONE:
        return ScatteredSegments::none;
    default:
        throw std::invalid_argument("unknown segment mode " + std::to_string(s));
    }
}

int from_segments(ScatteredSegments s)
{
    switch (s)
    {
    case ScatteredSegments::both:
        return RA_SEGMENTS_BOTH;
    case ScatteredSegments::ris_to_rx_only:
        return RA_SEGMENTS_RIS_TO_RX_ONLY;
    case ScatteredSegments::none:
        return RA_SEGMENTS_NONE;
    }
    return RA_SEGMENTS_BOTH;
}

ra_gain to_gain(const MechanismGain &m)
{
    ra_gain g{};
    g.present = m.present() ? 1 : 0;
    g.linear = m.gain ? m.gain->linear : NAN;
    g.db = m.gain ? m.gain->db : NAN;
    std::strncpy(g.reason, m.reason.c_str(), sizeof g.reason - 1);
    return g;
}

ra_mechanisms to_mechanisms(const SweepRow &row)
{
    ra_mechanisms out{};
    out.rx_distance_m = row.rx_distance_m;
    for (size_t i = 0; i < 4; ++i)
    {
        out.corner[i] = to_gain(row.corners[i]);
        out.pole[i] = to_gain(row.poles[i]);
    }
    out.ambient_total = to_gain(MechanismGain{row.ambient_total, {}});
    out.ris_ideal = to_gain(row.ris_ideal);
    out.ris_spread = to_gain(row.ris_spread);
    out.ris_advantage_db = row.ris_advantage_db;
    out.ris_ideal_advantage_db = row.ris_ideal_advantage_db;
    return out;
}

OracleReport from_c(const ra_oracle_report &r)
{
    OracleReport o;
    o.aperture_w_m = r.aperture_w_m;
    o.aperture_h_m = r.aperture_h_m;
    o.ny = r.ny;
    o.nz = r.nz;
    o.trials = r.trials;
    o.master_seed = r.master_seed;
    o.segments = to_segments(r.segments);
    o.mc_mean = r.mc_mean;
    o.std_err = r.std_err;
    o.analytic_exact = r.analytic_exact;
    o.analytic_min_approx = r.analytic_min_approx;
    o.z_score = r.z_score;
    o.jitter = r.jitter;
    o.verdict = r.verdict == RA_VERDICT_PASS   ? Verdict::pass
                : r.verdict == RA_VERDICT_DEGENERATE_PASS ? Verdict::degenerate_pass
                                                          : Verdict::fail;
    return o;
}

#define RA_REQUIRE(ptr)                                                                                                \
    do                                                                                                                 \
    {                                                                                                                  \
        if (!(ptr))                                                                                                    \
            return fail(RA_ERR_INVALID_ARGUMENT, #ptr " must not be NULL");                                            \
    } while (0)

} // namespace

extern "C" {

const char *ra_version(void)
{
    return version_string();
}

const char *ra_last_error(void)
{
    return last_error.c_str();
}

const char *ra_last_error_key(void)
{
    return last_error_key.c_str();
}

const char *ra_status_string(ra_status status)
{
    switch (status)
    {
    case RA_OK:
        return "ok";
    case RA_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case RA_ERR_CONFIG:
        return "configuration error";
    case RA_ERR_GEOMETRY:
        return "geometry error";
    case RA_ERR_VALIDITY:
        return "outside model validity";
    case RA_ERR_NUMERIC:
        return "numeric error";
    case RA_ERR_IO:
        return "I/O error";
    case RA_ERR_BUFFER_TOO_SMALL:
        return "buffer too small";
    case RA_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

ra_status ra_scenario_create(const char *config_text, const char *const *overrides, size_t n_overrides,
                             ra_scenario **out)
{
    return guard([&]() -> ra_status {
        RA_REQUIRE(config_text);
        RA_REQUIRE(out);
        *out = nullptr;
        std::vector<std::string> ov;
        for (size_t i = 0; i < n_overrides; ++i)
        {
            RA_REQUIRE(overrides && overrides[i]);
            ov.emplace_back(overrides[i]);
        }
        *out = new ra_scenario{build_scenario(config_text, ov)};
        return RA_OK;
    });
}

ra_status ra_scenario_baseline(ra_scenario **out)
{
    return guard([&]() -> ra_status {
        RA_REQUIRE(out);
        *out = new ra_scenario{Scenario(baseline_params())};
        return RA_OK;
    });
}

void ra_scenario_destroy(ra_scenario *scenario)
{
    delete scenario;
}

ra_status ra_scenario_get_info(const ra_scenario *scenario, ra_scenario_info *out)
{
    return guard([&]() -> ra_status {
        RA_REQUIRE(scenario);
        RA_REQUIRE(out);
        const auto &s = scenario->value;
        const auto &p = s.params();
        *out = ra_scenario_info{p.frequency_hz,
                                s.wavelength_m(),
                                s.wavenumber(),
                                p.tx_corner_distance_m,
                                p.street_half_width_m,
                                p.pole_radius_m,
                                p.pole_setback_m,
                                p.absorption_np_per_m,
                                p.ris_width_m,
                                p.ris_height_m,
                                p.angle_spread.azimuth_rms_rad,
                                p.angle_spread.elevation_rms_rad,
                                from_segments(p.angle_spread.scattered_segments),
                                p.polarization == Polarization::hard ? RA_POLARIZATION_HARD : RA_POLARIZATION_SOFT};
        return RA_OK;
    });
}

ra_status ra_scenario_echo(const ra_scenario *scenario, char *buf, size_t capacity, size_t *needed)
{
    return guard([&]() -> ra_status {
        RA_REQUIRE(scenario);
        std::string text = to_config_text(scenario->value);
        for (const auto &o : scenario->value.overrides())
            text += "# override " + o + "\n";
        return copy_out(text, buf, capacity, needed);
    });
}

ra_status ra_coherence(const ra_scenario *scenario, int segments, ra_coherence_report *out)
{
    return guard([&]() -> ra_status {
        RA_REQUIRE(scenario);
        RA_REQUIRE(out);
        const auto &s = scenario->value;
        AngleSpreadSpec spreads = s.angle_spread();
        if (segments != RA_SEGMENTS_FROM_SCENARIO)
            spreads.scattered_segments = to_segments(segments);
        const double w = s.params().ris_width_m;
        const double h = s.params().ris_height_m;
        const CoherenceScales scales = coherence_scales(s.wavelength_m(), spreads);
        const EffectiveArea area = effective_area(w, h, scales);
        const double exact = effective_area_exact(w, h, s.wavelength_m(), spreads);
        *out = ra_coherence_report{from_segments(spreads.scattered_segments),
                                   scales.w_coh_m,
                                   scales.h_coh_m,
                                   area.a_ris_m2,
                                   area.a_eff_m2,
                                   exact,
                                   area.degradation_db(),
                                   10.0 * std::log10(exact / area.a_ris_m2)};
        return RA_OK;
    });
}

ra_status ra_one_segment_factor(const ra_scenario *scenario, ra_segment_factor *out)
{
    return guard([&]() -> ra_status {
        RA_REQUIRE(scenario);
        RA_REQUIRE(out);
        const auto &s = scenario->value;
        const SegmentFactor f = one_segment_factor(s.params().ris_width_m, s.params().ris_height_m, s.wavelength_m(),
                                                   s.angle_spread().azimuth_rms_rad,
                                                   s.angle_spread().elevation_rms_rad);
        *out = ra_segment_factor{f.exact_ratio, f.min_approx_ratio, f.unclamped_ratio, SegmentFactor::stated_upper_bound};
        return RA_OK;
    });
}

ra_status ra_mechanisms_at(const ra_scenario *scenario, double rx_distance_m, ra_mechanisms *out)
{
    return guard([&]() -> ra_status {
        RA_REQUIRE(scenario);
        RA_REQUIRE(out);
        *out = to_mechanisms(evaluate_mechanisms(scenario->value, rx_distance_m));
        return RA_OK;
    });
}

ra_status ra_sweep_run(const ra_scenario *scenario, const double *distances, size_t n_distances, ra_sweep **out)
{
    return guard([&]() -> ra_status {
        RA_REQUIRE(scenario);
        RA_REQUIRE(out);
        *out = nullptr;
        std::vector<double> grid = distances ? std::vector<double>(distances, distances + n_distances)
                                             : default_sweep_distances();
        *out = new ra_sweep{run_sweep(scenario->value, grid)};
        return RA_OK;
    });
}

size_t ra_sweep_row_count(const ra_sweep *sweep)
{
    return sweep ? sweep->value.rows.size() : 0;
}

ra_status ra_sweep_get_row(const ra_sweep *sweep, size_t index, ra_mechanisms *out)
{
    return guard([&]() -> ra_status {
        RA_REQUIRE(sweep);
        RA_REQUIRE(out);
        if (index >= sweep->value.rows.size())
            return fail(RA_ERR_INVALID_ARGUMENT, "row index out of range");
        *out = to_mechanisms(sweep->value.rows[index]);
        return RA_OK;
    });
}

ra_status ra_sweep_csv(const ra_sweep *sweep, char *buf, size_t capacity, size_t *needed)
{
    return guard([&]() -> ra_status {
        RA_REQUIRE(sweep);
        return copy_out(to_csv(sweep->value), buf, capacity, needed);
    });
}

ra_status ra_sweep_write_csv(const ra_sweep *sweep, const char *path)
{
    return guard([&]() -> ra_status {
        RA_REQUIRE(sweep);
        RA_REQUIRE(path);
        const std::string csv = to_csv(sweep->value);
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        if (!file)
            return fail(RA_ERR_IO, std::string("cannot open '") + path + "' for writing");
        file.write(csv.data(), static_cast<std::streamsize>(csv.size()));
        file.close();
        if (!file)
            return fail(RA_ERR_IO, std::string("write to '") + path + "' failed");
        return RA_OK;
    });
}

void ra_sweep_destroy(ra_sweep *sweep)
{
    delete sweep;
}

void ra_mc_options_default(ra_mc_options *options)
{
    if (!options)
        return;
    *options = ra_mc_options{10000, 0x5eed2026ULL, 0, RA_SEGMENTS_FROM_SCENARIO, 0.0, 0.0, 1.0};
}

ra_status ra_mc_verify(const ra_scenario *scenario, const ra_mc_options *options, ra_oracle_report *out)
{
    return guard([&]() -> ra_status {
        RA_REQUIRE(scenario);
        RA_REQUIRE(options);
        RA_REQUIRE(out);
        const auto &s = scenario->value;
        AngleSpreadSpec spreads = s.angle_spread();
        if (options->segments != RA_SEGMENTS_FROM_SCENARIO)
            spreads.scattered_segments = to_segments(options->segments);
        const double w = options->aperture_w_m > 0.0 ? options->aperture_w_m : s.params().ris_width_m;
        const double h = options->aperture_h_m > 0.0 ? options->aperture_h_m : s.params().ris_height_m;

        const ApertureGrid grid = ApertureGrid::for_spreads(w, h, s.wavelength_m(), spreads);
        McEstimate est = mc_mean_power(grid, spreads, s.wavenumber(), options->trials, options->master_seed,
                                       McOptions{options->threads});
        est.analytic_prediction *= options->analytic_scale;
        const OracleReport r = oracle_report(est);

        *out = ra_oracle_report{r.aperture_w_m,
                                r.aperture_h_m,
                                r.ny,
                                r.nz,
                                r.trials,
                                r.master_seed,
                                from_segments(r.segments),
                                r.mc_mean,
                                r.std_err,
                                r.analytic_exact,
                                r.analytic_min_approx,
                                r.z_score,
                                r.jitter,
                                r.verdict == Verdict::pass            ? RA_VERDICT_PASS
                                : r.verdict == Verdict::degenerate_pass ? RA_VERDICT_DEGENERATE_PASS
                                                                        : RA_VERDICT_FAIL};
        return RA_OK;
    });
}

ra_status ra_oracle_report_text(const ra_oracle_report *report, char *buf, size_t capacity, size_t *needed)
{
    return guard([&]() -> ra_status {
        RA_REQUIRE(report);
        return copy_out(format_report(from_c(*report)), buf, capacity, needed);
    });
}

ra_status ra_oracle_report_csv(const ra_oracle_report *report, int with_header, char *buf, size_t capacity,
                               size_t *needed)
{
    return guard([&]() -> ra_status {
        RA_REQUIRE(report);
        std::string text = with_header ? report_csv_header() : std::string();
        text += report_csv_row(from_c(*report));
        return copy_out(text, buf, capacity, needed);
    });
}

} // extern "C"
