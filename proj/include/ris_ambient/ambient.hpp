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

#include "ris_ambient/geometry.hpp"
#include "ris_ambient/scenario.hpp"

#include <cmath>
#include <complex>
#include <limits>

namespace ris_ambient
{

// Received power normalized by P_T G_T G_R.
struct PathGain
{
    double linear = 0.0;
    double db = -std::numeric_limits<double>::infinity();

    static PathGain from_linear(double linear)
    {
        return {linear, 10.0 * std::log10(linear)};
    }
};

inline constexpr double building_corner_wedge_n = 1.5; // right-angle building corner

// Reject GTD evaluation when either cosine-difference denominator is smaller than this.
inline constexpr double gtd_boundary_epsilon = 1e-3;

struct DiffractionCoefficient
{
    std::complex<double> value;
    Polarization polarization = Polarization::hard;
    double wedge_n = building_corner_wedge_n;
};

// GTD wedge diffraction coefficient for exterior wedge angle n*pi.
// Hard polarization takes the + sign between the two terms, soft the - sign.
// Throws ValidityError("gtd_shadow_boundary") close to a shadow or reflection boundary.
DiffractionCoefficient gtd_coefficient(double phi_inc_rad, double phi_d_rad, double wedge_n, double wavenumber,
                                       Polarization polarization);

// lambda^2 |D|^2 exp(-kappa (r + r')) / (16 pi^2 r r' (r + r'))
PathGain diffraction_path_gain(const CornerPath &path, const Scenario &scenario);

// Bistatic scattering width pi a cos(phi'/2) of a conducting cylinder, metres.
// Valid only for ka > 20 and |pi - phi'| > (ka)^(-1/3); throws ValidityError otherwise.
double pole_scattering_width(double radius_m, double phi_prime_rad, double wavenumber);

// lambda^2 sigma exp(-kappa (r1 + r2)) / (2 pi (4 pi)^2 r1 r2 (r1 + r2))
PathGain pole_path_gain(const PolePath &path, const Scenario &scenario);

} // namespace ris_ambient
