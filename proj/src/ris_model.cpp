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

#include "ris_ambient/ris_model.hpp"
#include "ris_ambient/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cstdio>

namespace ris_ambient
{

namespace
{

constexpr double quadrature_tolerance = 1e-8;

// Exponent multiplier of x^2 in rho_inc * rho_scat along one aperture axis.
double product_decay(double wavenumber, double spread, ScatteredSegments mode)
{
    const double c = wavenumber * wavenumber * spread * spread;
    switch (mode)
    {
    case ScatteredSegments::both:
        return c; // rho^2
    case ScatteredSegments::ris_to_rx_only:
        return 0.5 * c; // rho_inc = 1
    case ScatteredSegments::none:
        return 0.0;
    }
    return c;
}

// (1/L) * integral_{-L}^{L} (L - |x|) exp(-c x^2) dx
double windowed_length(double length, double c)
{
    if (c == 0.0)
        return length;

    double error = 0.0;
    double l1 = 0.0;
    const auto f = [length, c](double x) { return (length - x) * std::exp(-c * x * x); };
    const double integral =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, length, 20, quadrature_tolerance, &error, &l1);
    if (!(error <= quadrature_tolerance * std::abs(integral)) && error > 1e-300)
    {
        char buf[160];
        std::snprintf(buf, sizeof buf, "effective_area_exact: quadrature reached relative error %.3g (requested %.1g)",
                      error / std::abs(integral), quadrature_tolerance);
        throw NumericError(buf);
    }
    return 2.0 * integral / length;
}

} // namespace

CoherenceScales coherence_scales(double wavelength_m, const AngleSpreadSpec &spreads)
{
    if (!(wavelength_m > 0.0))
        throw std::invalid_argument("coherence_scales: wavelength must be positive");
    if (spreads.azimuth_rms_rad < 0.0 || spreads.elevation_rms_rad < 0.0)
        throw std::invalid_argument("coherence_scales: spreads must be non-negative");

    CoherenceScales out;
    out.segment_mode = spreads.scattered_segments;
    if (spreads.scattered_segments == ScatteredSegments::none)
        return out;

    const double widen = spreads.scattered_segments == ScatteredSegments::ris_to_rx_only ? std::sqrt(2.0) : 1.0;
    const double base = wavelength_m / (2.0 * std::sqrt(pi));
    if (spreads.azimuth_rms_rad > 0.0)
        out.w_coh_m = widen * base / spreads.azimuth_rms_rad;
    if (spreads.elevation_rms_rad > 0.0)
        out.h_coh_m = widen * base / spreads.elevation_rms_rad;
    return out;
}

EffectiveArea effective_area(double width_m, double height_m, const CoherenceScales &scales)
{
    if (!(width_m > 0.0) || !(height_m > 0.0))
        throw std::invalid_argument("effective_area: RIS dimensions must be positive");
    return {std::min(scales.w_coh_m, width_m) * std::min(scales.h_coh_m, height_m), width_m * height_m};
}

double effective_area_exact(double width_m, double height_m, double wavelength_m, const AngleSpreadSpec &spreads)
{
    if (!(width_m > 0.0) || !(height_m > 0.0) || !(wavelength_m > 0.0))
        throw std::invalid_argument("effective_area_exact: dimensions and wavelength must be positive");
    const double k = 2.0 * pi / wavelength_m;
    const double cy = product_decay(k, spreads.azimuth_rms_rad, spreads.scattered_segments);
    const double cz = product_decay(k, spreads.elevation_rms_rad, spreads.scattered_segments);
    return windowed_length(width_m, cy) * windowed_length(height_m, cz);
}

PathGain ideal_ris_path_gain(const RisPath &path, const Scenario &scenario)
{
    const double area = scenario.ris_area_m2();
    const double cos_inc = std::cos(path.theta_inc_rad);
    const double four_pi = 4.0 * pi;
    const double absorption = std::exp(-scenario.params().absorption_np_per_m * (path.r_inc_m + path.r_scat_m));
    return PathGain::from_linear(area * area * cos_inc * cos_inc * absorption /
                                 (four_pi * four_pi * path.r_inc_m * path.r_inc_m * path.r_scat_m * path.r_scat_m));
}

PathGain spread_ris_path_gain(const RisPath &path, const Scenario &scenario)
{
    const auto &p = scenario.params();
    const EffectiveArea a =
        effective_area(p.ris_width_m, p.ris_height_m, coherence_scales(scenario.wavelength_m(), p.angle_spread));
    const double cos_inc = std::cos(path.theta_inc_rad);
    const double four_pi = 4.0 * pi;
    const double absorption = std::exp(-p.absorption_np_per_m * (path.r_inc_m + path.r_scat_m));
    return PathGain::from_linear(a.a_ris_m2 * a.a_eff_m2 * cos_inc * cos_inc * absorption /
                                 (four_pi * four_pi * path.r_inc_m * path.r_inc_m * path.r_scat_m * path.r_scat_m));
}

SegmentFactor one_segment_factor(double width_m, double height_m, double wavelength_m, double azimuth_rms_rad,
                                 double elevation_rms_rad)
{
    const AngleSpreadSpec both{azimuth_rms_rad, elevation_rms_rad, ScatteredSegments::both};
    const AngleSpreadSpec one{azimuth_rms_rad, elevation_rms_rad, ScatteredSegments::ris_to_rx_only};

    SegmentFactor f;
    f.exact_ratio = effective_area_exact(width_m, height_m, wavelength_m, one) /
                    effective_area_exact(width_m, height_m, wavelength_m, both);
    f.min_approx_ratio = effective_area(width_m, height_m, coherence_scales(wavelength_m, one)).a_eff_m2 /
                         effective_area(width_m, height_m, coherence_scales(wavelength_m, both)).a_eff_m2;
    f.unclamped_ratio = (azimuth_rms_rad > 0.0 ? std::sqrt(2.0) : 1.0) * (elevation_rms_rad > 0.0 ? std::sqrt(2.0) : 1.0);
    return f;
}

} // namespace ris_ambient
