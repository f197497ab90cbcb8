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

#pragma once

#include "ris_ambient/config.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ris_ambient
{

inline constexpr double speed_of_light_m_per_s = 299792458.0;
inline constexpr double pi = 3.14159265358979323846;

enum class Polarization
{
    hard,
    soft
};

// Which link segments carry scatter-induced angle spread.
enum class ScatteredSegments
{
    both,
    ris_to_rx_only, // Tx-RIS segment is clean LOS
    none
};

std::string_view to_string(Polarization p);
std::string_view to_string(ScatteredSegments s);

struct AngleSpreadSpec
{
    double azimuth_rms_rad = 0.0;
    double elevation_rms_rad = 0.0;
    ScatteredSegments scattered_segments = ScatteredSegments::both;

    // True when the aperture field carries any random de-coherence at all.
    bool decoheres() const noexcept
    {
        return scattered_segments != ScatteredSegments::none && (azimuth_rms_rad > 0.0 || elevation_rms_rad > 0.0);
    }
};

// Raw, unvalidated scenario fields. Names match the config keys.
struct ScenarioParams
{
    double frequency_hz = 28e9;
    double tx_corner_distance_m = 100.0;
    double street_half_width_m = 10.0;
    double pole_radius_m = 0.12;
    double pole_setback_m = 1.0;
    double absorption_np_per_m = 0.005;
    double ris_width_m = 0.3;
    double ris_height_m = 0.3;
    AngleSpreadSpec angle_spread{14.0 * pi / 180.0, 0.6 * pi / 180.0, ScatteredSegments::both};
    Polarization polarization = Polarization::hard;
};

// Validated street-intersection experiment. Immutable once built.
class Scenario
{
public:
    // Throws ConfigError naming the first offending field.
    explicit Scenario(const ScenarioParams &params, std::vector<std::string> overrides = {});

    const ScenarioParams &params() const noexcept { return params_; }
    const std::vector<std::string> &overrides() const noexcept { return overrides_; }

    double frequency_hz() const noexcept { return params_.frequency_hz; }
    double wavelength_m() const noexcept { return wavelength_m_; }
    double wavenumber() const noexcept { return wavenumber_; }
    double ris_area_m2() const noexcept { return params_.ris_width_m * params_.ris_height_m; }
    const AngleSpreadSpec &angle_spread() const noexcept { return params_.angle_spread; }

    // Copy with a different carrier frequency; everything else unchanged.
    Scenario with_frequency(double frequency_hz) const;
    Scenario with_params(const ScenarioParams &params) const;

private:
    ScenarioParams params_;
    std::vector<std::string> overrides_;
    double wavelength_m_ = 0.0;
    double wavenumber_ = 0.0;
};

// Reference baseline: 28 GHz, Tx 100 m from the intersection, 0.12 m poles, 0.005 Np/m,
// 0.3 m x 0.3 m RIS, 14 deg / 0.6 deg rms spreads on both segments, hard polarization.
ScenarioParams baseline_params();

// Every key build_scenario accepts, in canonical order.
const std::vector<std::string> &scenario_keys();

// All keys in scenario_keys() are required; unknown keys are rejected.
Scenario build_scenario(const ConfigDocument &config);
Scenario build_scenario(std::string_view config_text, const std::vector<std::string> &overrides = {});

// Canonical "key = value" text that build_scenario parses back to the same Scenario.
std::string to_config_text(const Scenario &scenario);

} // namespace ris_ambient
