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

#include "ris_ambient/scenario.hpp"
#include "ris_ambient/errors.hpp"

#include <charconv>
#include <cmath>
#include <set>

namespace ris_ambient
{

namespace
{

void require_positive(const char *key, double v)
{
    if (!std::isfinite(v) || v <= 0.0)
        throw ConfigError(key, "must be a positive finite number, got " + std::to_string(v));
}

void require_non_negative(const char *key, double v)
{
    if (!std::isfinite(v) || v < 0.0)
        throw ConfigError(key, "must be a non-negative finite number, got " + std::to_string(v));
}

Polarization parse_polarization(const std::string &key, const std::string &text)
{
    if (text == "hard")
        return Polarization::hard;
    if (text == "soft")
        return Polarization::soft;
    throw ConfigError(key, "unknown polarization '" + text + "' (expected hard or soft)");
}

ScatteredSegments parse_segments(const std::string &key, const std::string &text)
{
    if (text == "both")
        return ScatteredSegments::both;
    if (text == "ris_to_rx_only")
        return ScatteredSegments::ris_to_rx_only;
    if (text == "none")
        return ScatteredSegments::none;
    throw ConfigError(key, "unknown segment mode '" + text + "' (expected both, ris_to_rx_only or none)");
}

// Shortest text that parses back to the same double.
std::string format_real(double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace

std::string_view to_string(Polarization p)
{
    return p == Polarization::hard ? "hard" : "soft";
}

std::string_view to_string(ScatteredSegments s)
{
    switch (s)
    {
    case ScatteredSegments::both:
        return "both";
    case ScatteredSegments::ris_to_rx_only:
        return "ris_to_rx_only";
    case ScatteredSegments::none:
        return "none";
    }
    return "both";
}

Scenario::Scenario(const ScenarioParams &p, std::vector<std::string> overrides)
    : params_(p), overrides_(std::move(overrides))
{
    require_positive("frequency_hz", p.frequency_hz);
    require_positive("tx_corner_distance_m", p.tx_corner_distance_m);
    require_positive("street_half_width_m", p.street_half_width_m);
    require_positive("pole_radius_m", p.pole_radius_m);
    require_positive("pole_setback_m", p.pole_setback_m);
    require_non_negative("absorption_np_per_m", p.absorption_np_per_m);
    require_positive("ris_width_m", p.ris_width_m);
    require_positive("ris_height_m", p.ris_height_m);
    require_non_negative("angle_spread.azimuth_rms_rad", p.angle_spread.azimuth_rms_rad);
    require_non_negative("angle_spread.elevation_rms_rad", p.angle_spread.elevation_rms_rad);

    // Pole sits on the corner diagonal, inside the intersection and clear of the wall.
    const double offset = p.pole_setback_m / std::sqrt(2.0);
    if (offset <= p.pole_radius_m)
        throw ConfigError("pole_setback_m", "pole would intersect the building (setback/sqrt(2) <= pole_radius_m)");
    if (offset >= p.street_half_width_m)
        throw ConfigError("pole_setback_m", "pole would lie beyond the street centerline");
    if (p.tx_corner_distance_m <= p.street_half_width_m)
        throw ConfigError("tx_corner_distance_m", "transmitter must be outside the intersection footprint");

    wavelength_m_ = speed_of_light_m_per_s / p.frequency_hz;
    wavenumber_ = 2.0 * pi / wavelength_m_;
}

Scenario Scenario::with_frequency(double frequency_hz) const
{
    ScenarioParams p = params_;
    p.frequency_hz = frequency_hz;
    return Scenario(p, overrides_);
}

Scenario Scenario::with_params(const ScenarioParams &params) const
{
    return Scenario(params, overrides_);
}

ScenarioParams baseline_params()
{
    return ScenarioParams{};
}

const std::vector<std::string> &scenario_keys()
{
    static const std::vector<std::string> keys = {
        "frequency_hz",
        "tx_corner_distance_m",
        "street_half_width_m",
        "pole_radius_m",
        "pole_setback_m",
        "absorption_np_per_m",
        "ris_width_m",
        "ris_height_m",
        "polarization",
        "angle_spread.azimuth_rms_rad",
        "angle_spread.elevation_rms_rad",
        "angle_spread.scattered_segments",
    };
    return keys;
}

Scenario build_scenario(const ConfigDocument &config)
{
    const auto &keys = scenario_keys();
    const std::set<std::string> known(keys.begin(), keys.end());
    for (const auto &e : config.entries())
        if (!known.count(e.key))
            throw ConfigError(e.key, "unknown key");

    auto get = [&](const std::string &key) -> const ConfigDocument::Entry & {
        const auto *e = config.find(key);
        if (!e)
            throw ConfigError(key, "required key is missing");
        return *e;
    };
    auto real = [&](const std::string &key) {
        const auto &e = get(key);
        if (e.quoted)
            throw ConfigError(key, "expected a number, got a string");
        return parse_real(key, e.value);
    };

    ScenarioParams p;
    p.frequency_hz = real("frequency_hz");
    p.tx_corner_distance_m = real("tx_corner_distance_m");
    p.street_half_width_m = real("street_half_width_m");
    p.pole_radius_m = real("pole_radius_m");
    p.pole_setback_m = real("pole_setback_m");
    p.absorption_np_per_m = real("absorption_np_per_m");
    p.ris_width_m = real("ris_width_m");
    p.ris_height_m = real("ris_height_m");
    p.polarization = parse_polarization("polarization", get("polarization").value);
    p.angle_spread.azimuth_rms_rad = real("angle_spread.azimuth_rms_rad");
    p.angle_spread.elevation_rms_rad = real("angle_spread.elevation_rms_rad");
    p.angle_spread.scattered_segments =
        parse_segments("angle_spread.scattered_segments", get("angle_spread.scattered_segments").value);

    return Scenario(p, config.overrides());
}

Scenario build_scenario(std::string_view config_text, const std::vector<std::string> &overrides)
{
    ConfigDocument doc = ConfigDocument::parse(config_text);
    for (const auto &o : overrides)
        doc.apply_override(o);
    return build_scenario(doc);
}

std::string to_config_text(const Scenario &scenario)
{
    const auto &p = scenario.params();
    std::string out;
    auto line = [&out](const char *key, const std::string &value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    line("frequency_hz", format_real(p.frequency_hz));
    line("tx_corner_distance_m", format_real(p.tx_corner_distance_m));
    line("street_half_width_m", format_real(p.street_half_width_m));
    line("pole_radius_m", format_real(p.pole_radius_m));
    line("pole_setback_m", format_real(p.pole_setback_m));
    line("absorption_np_per_m", format_real(p.absorption_np_per_m));
    line("ris_width_m", format_real(p.ris_width_m));
    line("ris_height_m", format_real(p.ris_height_m));
    line("polarization", "\"" + std::string(to_string(p.polarization)) + "\"");
    out += "\n[angle_spread]\n";
    line("azimuth_rms_rad", format_real(p.angle_spread.azimuth_rms_rad));
    line("elevation_rms_rad", format_real(p.angle_spread.elevation_rms_rad));
    line("scattered_segments", "\"" + std::string(to_string(p.angle_spread.scattered_segments)) + "\"");
    return out;
}

} // namespace ris_ambient
