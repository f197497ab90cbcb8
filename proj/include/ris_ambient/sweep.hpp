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

#include "ris_ambient/ambient.hpp"
#include "ris_ambient/scenario.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ris_ambient
{

// A mechanism evaluation that may have been skipped by a validity guard.
struct MechanismGain
{
    std::optional<PathGain> gain;
    std::string reason; // empty when present

    bool present() const noexcept { return gain.has_value(); }
};

struct SweepRow
{
    double rx_distance_m = 0.0;
    std::array<MechanismGain, 4> corners; // order of all_corners
    std::array<MechanismGain, 4> poles;
    PathGain ambient_total;               // incoherent sum of present corners and poles
    MechanismGain ris_ideal;
    MechanismGain ris_spread;
    double ris_advantage_db = 0.0;        // ris_spread.db - ambient_total.db (NaN if RIS absent)
    double ris_ideal_advantage_db = 0.0;  // ris_ideal.db - ambient_total.db
};

struct SweepResult
{
    std::vector<SweepRow> rows;
    Scenario scenario;
    std::string version;
};

// Evaluates every mechanism at one receiver distance. Validity failures become absent
// entries with a reason code; geometry errors propagate.
SweepRow evaluate_mechanisms(const Scenario &scenario, double rx_distance_m);

// 20 m to 200 m, logarithmic, 40 points, exact endpoints.
std::vector<double> default_sweep_distances();

// Distances must be non-empty, strictly increasing and beyond the intersection footprint.
SweepResult run_sweep(const Scenario &scenario, std::span<const double> rx_distances_m);

// '#' metadata block, one header row, one row per distance. Absent mechanisms leave the
// value cells empty and fill the sibling *_reason column.
std::string to_csv(const SweepResult &result);

const char *version_string();

} // namespace ris_ambient
