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

#include "ris_ambient/scenario.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ris_ambient
{

// Cell-centred sampling of a w x h aperture. dy = w / ny, dz = h / nz.
struct ApertureGrid
{
    double width_m = 0.0;
    double height_m = 0.0;
    double dy_m = 0.0;
    double dz_m = 0.0;
    std::size_t ny = 0;
    std::size_t nz = 0;

    static ApertureGrid uniform(double width_m, double height_m, std::size_t ny, std::size_t nz);

    // Finest grid satisfying dy <= w_coh / 4 and dz <= h_coh / 4 (both-segment scales),
    // with at least min_samples_per_axis samples along each axis.
    static ApertureGrid for_spreads(double width_m, double height_m, double wavelength_m,
                                    const AngleSpreadSpec &spreads);

    static constexpr std::size_t min_samples_per_axis = 8;

    std::vector<double> y_coords() const;
    std::vector<double> z_coords() const;
    double area_m2() const { return width_m * height_m; }

    bool adequately_sampled(double wavelength_m, const AngleSpreadSpec &spreads) const;
    bool same_shape(const ApertureGrid &o) const
    {
        return ny == o.ny && nz == o.nz && dy_m == o.dy_m && dz_m == o.dz_m;
    }
};

enum class FieldRole
{
    incident,
    scattered
};

// values(iz, iy): nz rows (elevation), ny columns (azimuth).
struct FieldGrid
{
    Eigen::MatrixXcd values;
    ApertureGrid grid;
    FieldRole role = FieldRole::incident;
};

// C[i][j] = exp(-k^2 (x_i - x_j)^2 spread^2 / 2), unit diagonal.
Eigen::MatrixXd correlation_matrix_1d(std::span<const double> coords, double spread_rad, double wavenumber);

struct CorrelationFactor
{
    Eigen::MatrixXd lower; // lower * lower^T == regularized correlation
    double jitter = 0.0;   // diagonal loading that made the factorization succeed
};

// Cholesky with diagonal loading 1e-10, escalating x10 up to 1e-6.
// Throws NumericError reporting the last jitter tried.
CorrelationFactor factor_correlation(const Eigen::MatrixXd &correlation);

// Lower-triangular factor for one aperture axis; a zero spread gives the exact
// rank-one factor (first column of ones) with no jitter.
CorrelationFactor correlation_factor_1d(std::span<const double> coords, double spread_rad, double wavenumber);

// Deterministic 64-bit substream seed for one trial.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

// Draws independent correlated de-coherence fields on a fixed grid:
// X = L_z G L_y^T with G iid CN(0, 1). A segment without scatter yields X == 1.
class FieldSampler
{
public:
    FieldSampler(const ApertureGrid &grid, const AngleSpreadSpec &spreads, double wavenumber);

    std::pair<FieldGrid, FieldGrid> sample_pair(std::uint64_t seed) const;

    // |integral xi_inc xi_scat dA|^2 for the fields sample_pair(seed) would return.
    double sample_power(std::uint64_t seed) const;

    const ApertureGrid &grid() const noexcept { return grid_; }
    bool incident_random() const noexcept { return incident_random_; }
    bool scattered_random() const noexcept { return scattered_random_; }
    double jitter() const noexcept { return jitter_; }

private:
    ApertureGrid grid_;
    Eigen::MatrixXd lower_y_;
    Eigen::MatrixXd lower_z_;
    bool incident_random_ = false;
    bool scattered_random_ = false;
    double jitter_ = 0.0;
};

std::pair<FieldGrid, FieldGrid> sample_field_pair(const ApertureGrid &grid, const AngleSpreadSpec &spreads,
                                                  double wavenumber, std::uint64_t seed);

// dy dz sum xi_inc xi_scat. The deterministic plane-wave phase is already removed by the
// RIS, so it does not appear. Throws std::invalid_argument on grid mismatch.
std::complex<double> aperture_integral(const FieldGrid &xi_inc, const FieldGrid &xi_scat);

struct McOptions
{
    unsigned threads = 0; // 0: hardware concurrency, capped by RIS_AMBIENT_THREADS
};

struct McEstimate
{
    double mean_power = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    double analytic_prediction = 0.0;  // A_RIS * A_eff_exact
    double analytic_min_approx = 0.0;  // A_RIS * A_eff (min-approximation)
    std::uint64_t master_seed = 0;
    ApertureGrid grid;
    AngleSpreadSpec spreads;
    double wavenumber = 0.0;
    double jitter = 0.0;
};

// Worker count after applying RIS_AMBIENT_THREADS.
unsigned resolve_worker_count(unsigned requested);

// Mean of |aperture_integral|^2 over trials. Trial i uses trial_seed(master_seed, i);
// results are reduced in trial order, so the estimate does not depend on the worker count.
McEstimate mc_mean_power(const ApertureGrid &grid, const AngleSpreadSpec &spreads, double wavenumber,
                         std::uint64_t trials, std::uint64_t master_seed, const McOptions &options = {});

enum class Verdict
{
    pass,
    fail,
    degenerate_pass
};

std::string_view to_string(Verdict v);

struct OracleReport
{
    double aperture_w_m = 0.0;
    double aperture_h_m = 0.0;
    std::size_t ny = 0;
    std::size_t nz = 0;
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
    ScatteredSegments segments = ScatteredSegments::both;
    double mc_mean = 0.0;
    double std_err = 0.0;
    double analytic_exact = 0.0;
    double analytic_min_approx = 0.0;
    double z_score = 0.0;
    double jitter = 0.0;
    Verdict verdict = Verdict::fail;

    static constexpr double z_threshold = 3.0;
};

OracleReport oracle_report(const McEstimate &estimate);

std::string format_report(const OracleReport &report);
std::string report_csv_header();
std::string report_csv_row(const OracleReport &report);

} // namespace ris_ambient
