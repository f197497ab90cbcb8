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

#include "ris_ambient/errors.hpp"
#include "ris_ambient/field_oracle.hpp"
#include "ris_ambient/ris_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

using namespace ris_ambient;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

const double deg = pi / 180.0;
const double lambda28 = speed_of_light_m_per_s / 28e9;
const double k28 = 2.0 * pi / lambda28;
const AngleSpreadSpec street{14.0 * deg, 0.6 * deg, ScatteredSegments::both};

} // namespace

TEST_CASE("oracle - grid construction")
{
    const ApertureGrid g = ApertureGrid::for_spreads(1.0, 1.0, lambda28, street);
    CHECK(g.ny == 324);
    CHECK(g.nz == 14);
    CHECK(g.adequately_sampled(lambda28, street));
    const ApertureGrid small = ApertureGrid::for_spreads(0.01, 0.01, lambda28, street);
    CHECK(small.ny == ApertureGrid::min_samples_per_axis);
    CHECK(small.nz == ApertureGrid::min_samples_per_axis);

    const auto y = g.y_coords();
    CHECK_THAT(y.front(), WithinAbs(-0.5 + 0.5 * g.dy_m, 1e-15));
    CHECK_THAT(y.back(), WithinAbs(0.5 - 0.5 * g.dy_m, 1e-14));
    CHECK_FALSE(ApertureGrid::uniform(1.0, 1.0, 8, 8).adequately_sampled(lambda28, street));
    CHECK_THROWS_AS(ApertureGrid::uniform(0.0, 1.0, 8, 8), std::invalid_argument);
}

TEST_CASE("oracle - correlation matrix")
{
    const std::vector<double> y = {0.0, 1e-3, 5e-3, 1.0};
    const Eigen::MatrixXd zero = correlation_matrix_1d(y, 0.0, k28);
    CHECK((zero.array() == 1.0).all());

    const double spread = 0.1;
    const double lag = std::sqrt(2.0) / (k28 * spread);
    const std::vector<double> pair = {0.0, lag};
    const Eigen::MatrixXd c = correlation_matrix_1d(pair, spread, k28);
    CHECK(c(0, 0) == 1.0);
    CHECK_THAT(c(0, 1), WithinRel(std::exp(-1.0), 1e-12));
    CHECK(c(0, 1) == c(1, 0));

    // decays below 1% once k * lag * spread passes sqrt(2 ln 100)
    const double edge = 3.0348542587702927 / (k28 * spread);
    const std::vector<double> near = {0.0, 0.99 * edge};
    const std::vector<double> far = {0.0, 1.01 * edge};
    CHECK(correlation_matrix_1d(near, spread, k28)(0, 1) > 0.01);
    CHECK(correlation_matrix_1d(far, spread, k28)(0, 1) < 0.01);

    const std::vector<double> unsorted = {0.0, 2.0, 1.0};
    CHECK_THROWS_AS(correlation_matrix_1d(unsorted, spread, k28), std::invalid_argument);
    CHECK_THROWS_AS(correlation_matrix_1d(pair, -0.1, k28), std::invalid_argument);
}

TEST_CASE("oracle - correlation factorization")
{
    const ApertureGrid g = ApertureGrid::for_spreads(0.3, 0.3, lambda28, street);
    const auto y = g.y_coords();
    const Eigen::MatrixXd c = correlation_matrix_1d(y, street.azimuth_rms_rad, k28);
    const CorrelationFactor f = factor_correlation(c);
    CHECK(f.jitter >= 1e-10);
    CHECK(f.jitter <= 1e-6);
    const Eigen::MatrixXd back = f.lower * f.lower.transpose();
    CHECK((back - c).cwiseAbs().maxCoeff() <= 2.0 * f.jitter);

    Eigen::MatrixXd bad(2, 2);
    bad << 1.0, 2.0, 2.0, 1.0;
    CHECK_THROWS_AS(factor_correlation(bad), NumericError);

    // zero spread factors exactly as a rank-one column of ones
    const CorrelationFactor ones = correlation_factor_1d(y, 0.0, k28);
    const Eigen::MatrixXd r = ones.lower * ones.lower.transpose();
    CHECK((r.array() - 1.0).abs().maxCoeff() < 1e-15);
    CHECK(ones.jitter == 0.0);
}

TEST_CASE("oracle - trial seeds are distinct and reproducible")
{
    CHECK(trial_seed(1, 0) == trial_seed(1, 0));
    CHECK(trial_seed(1, 0) != trial_seed(1, 1));
    CHECK(trial_seed(1, 0) != trial_seed(2, 0));
}

TEST_CASE("oracle - deterministic fields without spread")
{
    const ApertureGrid g = ApertureGrid::uniform(0.2, 0.1, 10, 8);
    const auto [inc, scat] = sample_field_pair(g, {0.0, 0.0, ScatteredSegments::both}, k28, 42);
    CHECK((inc.values.array() == std::complex<double>(1.0, 0.0)).all());
    CHECK((scat.values.array() == std::complex<double>(1.0, 0.0)).all());
    CHECK_THAT(std::abs(aperture_integral(inc, scat)), WithinRel(0.02, 1e-12));

    const auto [inc1, scat1] = sample_field_pair(g, {0.001, 0.0, ScatteredSegments::ris_to_rx_only}, k28, 42);
    CHECK((inc1.values.array() == std::complex<double>(1.0, 0.0)).all());
    CHECK_FALSE((scat1.values.array() == std::complex<double>(1.0, 0.0)).all());

    const FieldSampler none(g, {0.001, 0.001, ScatteredSegments::none}, k28);
    CHECK_FALSE(none.incident_random());
    CHECK_FALSE(none.scattered_random());
}

TEST_CASE("oracle - aperture integral")
{
    const ApertureGrid g = ApertureGrid::for_spreads(0.1, 0.1, lambda28, street);
    const FieldSampler sampler(g, street, k28);
    auto [inc, scat] = sampler.sample_pair(9);
    const std::complex<double> full = aperture_integral(inc, scat);
    CHECK_THAT(sampler.sample_power(9), WithinRel(std::norm(full), 1e-12));

    // with a flat scattered field the integral reduces to the plain sum
    scat.values.setOnes();
    CHECK_THAT(std::abs(aperture_integral(inc, scat) - g.dy_m * g.dz_m * inc.values.sum()), WithinAbs(0.0, 1e-15));

    // conjugate fields give a real, non-negative result
    FieldGrid conj = inc;
    conj.values = inc.values.conjugate();
    const std::complex<double> r = aperture_integral(inc, conj);
    CHECK(r.real() >= 0.0);
    CHECK_THAT(r.imag(), WithinAbs(0.0, 1e-15));

    FieldGrid other = inc;
    other.grid = ApertureGrid::uniform(0.1, 0.1, g.ny + 1, g.nz);
    other.values.resize(g.nz, g.ny + 1);
    CHECK_THROWS_AS(aperture_integral(inc, other), std::invalid_argument);

    CHECK_THROWS_AS(FieldSampler(ApertureGrid::uniform(0.3, 0.3, 8, 8), street, k28), std::invalid_argument);
}

TEST_CASE("oracle - field statistics")
{
    const ApertureGrid g = ApertureGrid::for_spreads(0.3, 0.3, lambda28, street);
    const FieldSampler sampler(g, street, k28);
    const auto y = g.y_coords();

    // a lag near one coherence scale
    const std::size_t i0 = 10;
    const double target = 1.0 / (k28 * street.azimuth_rms_rad);
    const std::size_t m = static_cast<std::size_t>(std::lround(target / g.dy_m));
    REQUIRE(m >= 2);
    const double lag = y[i0 + m] - y[i0];
    const double expected_corr = std::exp(-0.5 * k28 * k28 * lag * lag * street.azimuth_rms_rad * street.azimuth_rms_rad);

    const int trials = 10000;
    double power = 0.0;
    std::complex<double> mean = 0.0, cross = 0.0;
    std::array<int, 10> bins{};
    for (int t = 0; t < trials; ++t)
    {
        const auto [inc, scat] = sampler.sample_pair(trial_seed(77, static_cast<std::uint64_t>(t)));
        const std::complex<double> a = inc.values(3, i0);
        const std::complex<double> b = inc.values(3, i0 + m);
        mean += a;
        power += std::norm(a);
        cross += a * std::conj(b);
        // equiprobable bins of the unit exponential
        const double u = 1.0 - std::exp(-std::norm(scat.values(2, 40)));
        ++bins[std::min<std::size_t>(9, static_cast<std::size_t>(u * 10.0))];
    }
    CHECK_THAT(power / trials, WithinAbs(1.0, 0.05));
    CHECK(std::abs(mean / static_cast<double>(trials)) < 0.05);
    CHECK_THAT((cross / static_cast<double>(trials)).real(), WithinAbs(expected_corr, 0.03));
    CHECK_THAT((cross / static_cast<double>(trials)).imag(), WithinAbs(0.0, 0.03));

    double chi2 = 0.0;
    for (int n : bins)
        chi2 += (n - trials / 10.0) * (n - trials / 10.0) / (trials / 10.0);
    // 99th percentile of chi-squared with 9 degrees of freedom
    CHECK(chi2 < 21.665994333461924);
}

TEST_CASE("oracle - Monte Carlo estimator")
{
    const ApertureGrid g = ApertureGrid::for_spreads(0.1, 0.1, lambda28, street);

    SECTION("agrees with the exact effective area")
    {
        const McEstimate e = mc_mean_power(g, street, k28, 2000, 1234, McOptions{1});
        CHECK(e.trials == 2000);
        CHECK_THAT(e.analytic_prediction, WithinRel(0.01 * 0.00111800538762557, 1e-8));
        CHECK(oracle_report(e).verdict == Verdict::pass);
    }
    SECTION("independent of the worker count")
    {
        const McEstimate a = mc_mean_power(g, street, k28, 300, 99, McOptions{1});
        const McEstimate b = mc_mean_power(g, street, k28, 300, 99, McOptions{3});
        CHECK(a.mean_power == b.mean_power);
        CHECK(a.std_error == b.std_error);
    }
    SECTION("standard error shrinks as one over root N")
    {
        const McEstimate a = mc_mean_power(g, street, k28, 400, 5, McOptions{1});
        const McEstimate b = mc_mean_power(g, street, k28, 4000, 6, McOptions{1});
        CHECK_THAT(a.std_error / b.std_error, WithinRel(std::sqrt(10.0), 0.2));
    }
    SECTION("zero spread is exact")
    {
        const ApertureGrid u = ApertureGrid::uniform(0.1, 0.1, 8, 8);
        const McEstimate e = mc_mean_power(u, {0.0, 0.0, ScatteredSegments::both}, k28, 100, 1, McOptions{1});
        CHECK_THAT(e.mean_power, WithinRel(1e-4, 1e-12));
        CHECK(e.std_error == 0.0);
        CHECK(oracle_report(e).verdict == Verdict::degenerate_pass);
    }
    SECTION("too few trials")
    {
        CHECK_THROWS_AS(mc_mean_power(g, street, k28, 99, 1), std::invalid_argument);
    }
}

TEST_CASE("oracle - verdict rules")
{
    McEstimate e;
    e.grid = ApertureGrid::uniform(0.3, 0.3, 8, 8);
    e.analytic_prediction = 1.0;
    e.analytic_min_approx = 1.1;
    e.std_error = 0.1;
    e.trials = 10000;

    e.mean_power = 1.04;
    OracleReport r = oracle_report(e);
    CHECK_THAT(r.z_score, WithinAbs(0.4, 1e-12));
    CHECK(r.verdict == Verdict::pass);

    e.mean_power = 1.5;
    r = oracle_report(e);
    CHECK_THAT(r.z_score, WithinAbs(5.0, 1e-12));
    CHECK(r.verdict == Verdict::fail);

    e.mean_power = 0.7;
    CHECK(oracle_report(e).verdict == Verdict::fail);

    e.std_error = 0.0;
    e.mean_power = 1.0;
    CHECK(oracle_report(e).verdict == Verdict::degenerate_pass);
    e.mean_power = 1.001;
    CHECK(oracle_report(e).verdict == Verdict::fail);
}

TEST_CASE("oracle - report formats")
{
    McEstimate e;
    e.grid = ApertureGrid::uniform(0.3, 0.3, 98, 8);
    e.mean_power = 2.2e-4;
    e.std_error = 3e-6;
    e.analytic_prediction = 2.2e-4;
    e.analytic_min_approx = 3.2e-4;
    e.trials = 10000;
    const OracleReport r = oracle_report(e);

    CHECK(report_csv_header() ==
          "aperture_w,aperture_h,trials,mc_mean,std_err,analytic_exact,analytic_min_approx,z_score,verdict\n");
    const std::string row = report_csv_row(r);
    CHECK(std::count(row.begin(), row.end(), ',') == 8);
    CHECK(row.rfind("0.3,0.3,10000,", 0) == 0);
    CHECK(row.find("pass") != std::string::npos);

    const std::string text = format_report(r);
    CHECK(text.find("verdict: pass\n") != std::string::npos);
    CHECK(text.find("grid_samples: 98 x 8\n") != std::string::npos);
}
