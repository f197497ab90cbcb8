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

#include "ris_ambient/ambient.hpp"
#include "ris_ambient/errors.hpp"

#include <cstdio>

namespace ris_ambient
{

DiffractionCoefficient gtd_coefficient(double phi_inc_rad, double phi_d_rad, double wedge_n, double wavenumber,
                                       Polarization polarization)
{
    if (!(wedge_n > 0.0) || !(wavenumber > 0.0))
        throw std::invalid_argument("gtd_coefficient: wedge_n and wavenumber must be positive");

    const double c0 = std::cos(pi / wedge_n);
    const double den_minus = c0 - std::cos((phi_inc_rad - phi_d_rad) / wedge_n);
    const double den_plus = c0 - std::cos((phi_inc_rad + phi_d_rad) / wedge_n);
    if (std::abs(den_minus) < gtd_boundary_epsilon || std::abs(den_plus) < gtd_boundary_epsilon)
        throw ValidityError("gtd_shadow_boundary", "GTD invalid near shadow boundary");

    const double sign = polarization == Polarization::hard ? 1.0 : -1.0;
    const std::complex<double> phase = std::polar(1.0, pi / 4.0);
    const double prefactor = std::sin(pi / wedge_n) / (wedge_n * std::sqrt(2.0 * pi * wavenumber));
    return {phase * prefactor * (1.0 / den_minus + sign / den_plus), polarization, wedge_n};
}

PathGain diffraction_path_gain(const CornerPath &path, const Scenario &scenario)
{
    const auto d = gtd_coefficient(path.phi_inc_rad, path.phi_d_rad, building_corner_wedge_n, scenario.wavenumber(),
                                   scenario.params().polarization);
    const double lambda = scenario.wavelength_m();
    const double r = path.r_post_m;
    const double rp = path.r_pre_m;
    const double absorption = std::exp(-scenario.params().absorption_np_per_m * (r + rp));
    return PathGain::from_linear(lambda * lambda * std::norm(d.value) * absorption / (16.0 * pi * pi * r * rp * (r + rp)));
}

double pole_scattering_width(double radius_m, double phi_prime_rad, double wavenumber)
{
    const double ka = wavenumber * radius_m;
    if (!(ka > 20.0))
    {
        char buf[96];
        std::snprintf(buf, sizeof buf, "below high-frequency limit: ka = %.4g <= 20", ka);
        throw ValidityError("pole_below_high_frequency_limit", buf);
    }
    const double bound = std::cbrt(1.0 / ka);
    if (!(std::abs(pi - phi_prime_rad) > bound))
    {
        char buf[128];
        std::snprintf(buf, sizeof buf, "too close to forward scatter: |pi - phi'| = %.4g <= (ka)^(-1/3) = %.4g",
                      std::abs(pi - phi_prime_rad), bound);
        throw ValidityError("pole_forward_scatter", buf);
    }
    return pi * radius_m * std::cos(0.5 * phi_prime_rad);
}

PathGain pole_path_gain(const PolePath &path, const Scenario &scenario)
{
    const double sigma = pole_scattering_width(scenario.params().pole_radius_m, path.phi_prime_rad,
                                               scenario.wavenumber());
    const double lambda = scenario.wavelength_m();
    const double r1 = path.r1_m;
    const double r2 = path.r2_m;
    const double absorption = std::exp(-scenario.params().absorption_np_per_m * (r1 + r2));
    const double four_pi = 4.0 * pi;
    return PathGain::from_linear(lambda * lambda * sigma * absorption /
                                 (2.0 * pi * four_pi * four_pi * r1 * r2 * (r1 + r2)));
}

} // namespace ris_ambient
