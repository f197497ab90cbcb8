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

#include "ris_ambient/field_oracle.hpp"
#include "ris_ambient/errors.hpp"
#include "ris_ambient/ris_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

namespace ris_ambient
{

namespace
{

std::size_t samples_for(double length, double scale)
{
    std::size_t n = ApertureGrid::min_samples_per_axis;
    if (std::isfinite(scale))
        n = std::max(n, static_cast<std::size_t>(std::ceil(length / (0.25 * scale) - 1e-9)));
    return n;
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Per-call scratch buffers, reused across trials by one worker.
struct Workspace
{
    Eigen::MatrixXd stacked; // [Re G; Im G], 2nz x ny
    Eigen::MatrixXd mixed;   // stacked * L_y^T
    Eigen::MatrixXd inc_re, inc_im, scat_re, scat_im;
};

void draw_field(std::mt19937_64 &rng, const Eigen::MatrixXd &lower_z, const Eigen::MatrixXd &lower_y, Workspace &ws,
                Eigen::MatrixXd &re, Eigen::MatrixXd &im)
{
    const Eigen::Index nz = lower_z.rows();
    const Eigen::Index ny = lower_y.rows();
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));

    ws.stacked.resize(2 * nz, ny);
    for (Eigen::Index iy = 0; iy < ny; ++iy)
        for (Eigen::Index iz = 0; iz < nz; ++iz)
        {
            ws.stacked(iz, iy) = normal(rng);
            ws.stacked(nz + iz, iy) = normal(rng);
        }

    ws.mixed.noalias() = ws.stacked * lower_y.transpose().triangularView<Eigen::Upper>();
    re.noalias() = lower_z.triangularView<Eigen::Lower>() * ws.mixed.topRows(nz);
    im.noalias() = lower_z.triangularView<Eigen::Lower>() * ws.mixed.bottomRows(nz);
}

std::string format_real(double v)
{
    // shortest text that reads back to the same double
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace

ApertureGrid ApertureGrid::uniform(double width_m, double height_m, std::size_t ny, std::size_t nz)
{
    if (!(width_m > 0.0) || !(height_m > 0.0) || ny == 0 || nz == 0)
        throw std::invalid_argument("ApertureGrid: dimensions and sample counts must be positive");
    return {width_m, height_m, width_m / static_cast<double>(ny), height_m / static_cast<double>(nz), ny, nz};
}

ApertureGrid ApertureGrid::for_spreads(double width_m, double height_m, double wavelength_m,
                                       const AngleSpreadSpec &spreads)
{
    AngleSpreadSpec field_spreads = spreads;
    field_spreads.scattered_segments = ScatteredSegments::both;
    const CoherenceScales s = coherence_scales(wavelength_m, field_spreads);
    return uniform(width_m, height_m, samples_for(width_m, s.w_coh_m), samples_for(height_m, s.h_coh_m));
}

std::vector<double> ApertureGrid::y_coords() const
{
    std::vector<double> out(ny);
    for (std::size_t i = 0; i < ny; ++i)
        out[i] = -0.5 * width_m + (static_cast<double>(i) + 0.5) * dy_m;
    return out;
}

std::vector<double> ApertureGrid::z_coords() const
{
    std::vector<double> out(nz);
    for (std::size_t i = 0; i < nz; ++i)
        out[i] = -0.5 * height_m + (static_cast<double>(i) + 0.5) * dz_m;
    return out;
}

bool ApertureGrid::adequately_sampled(double wavelength_m, const AngleSpreadSpec &spreads) const
{
    AngleSpreadSpec field_spreads = spreads;
    field_spreads.scattered_segments = ScatteredSegments::both;
    const CoherenceScales s = coherence_scales(wavelength_m, field_spreads);
    const double slack = 1.0 + 1e-9;
    return dy_m <= 0.25 * s.w_coh_m * slack && dz_m <= 0.25 * s.h_coh_m * slack;
}

Eigen::MatrixXd correlation_matrix_1d(std::span<const double> coords, double spread_rad, double wavenumber)
{
    if (spread_rad < 0.0)
        throw std::invalid_argument("correlation_matrix_1d: spread must be non-negative");
    if (!std::is_sorted(coords.begin(), coords.end()))
        throw std::invalid_argument("correlation_matrix_1d: coordinates must be sorted");

    const auto n = static_cast<Eigen::Index>(coords.size());
    const double c = 0.5 * wavenumber * wavenumber * spread_rad * spread_rad;
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        m(i, i) = 1.0;
        for (Eigen::Index j = 0; j < i; ++j)
        {
            const double d = coords[i] - coords[j];
            m(i, j) = m(j, i) = std::exp(-c * d * d);
        }
    }
    return m;
}

CorrelationFactor factor_correlation(const Eigen::MatrixXd &correlation)
{
    const Eigen::Index n = correlation.rows();
    double jitter = 1e-10;
    for (;;)
    {
        Eigen::MatrixXd loaded = correlation;
        loaded.diagonal().array() += jitter;
        Eigen::LLT<Eigen::MatrixXd> llt(loaded);
        if (llt.info() == Eigen::Success)
        {
            Eigen::MatrixXd lower = llt.matrixL();
            if (lower.allFinite())
                return {std::move(lower), jitter};
        }
        if (jitter >= 1e-6 * (1.0 - 1e-9))
            break;
        jitter *= 10.0;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "correlation factorization failed (n = %ld, last jitter %.1e)", static_cast<long>(n),
                  jitter);
    throw NumericError(buf);
}

CorrelationFactor correlation_factor_1d(std::span<const double> coords, double spread_rad, double wavenumber)
{
    if (spread_rad == 0.0)
    {
        const auto n = static_cast<Eigen::Index>(coords.size());
        Eigen::MatrixXd lower = Eigen::MatrixXd::Zero(n, n);
        lower.col(0).setOnes();
        return {std::move(lower), 0.0};
    }
    return factor_correlation(correlation_matrix_1d(coords, spread_rad, wavenumber));
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index)
{
    return splitmix64(splitmix64(master_seed) ^ (trial_index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
}

FieldSampler::FieldSampler(const ApertureGrid &grid, const AngleSpreadSpec &spreads, double wavenumber)
    : grid_(grid)
{
    if (!(wavenumber > 0.0))
        throw std::invalid_argument("FieldSampler: wavenumber must be positive");
    if (grid.ny == 0 || grid.nz == 0)
        throw std::invalid_argument("FieldSampler: empty grid");
    const double wavelength = 2.0 * pi / wavenumber;
    if (!grid.adequately_sampled(wavelength, spreads))
        throw std::invalid_argument("FieldSampler: grid spacing exceeds a quarter coherence scale");

    const bool decoheres = spreads.decoheres();
    incident_random_ = decoheres && spreads.scattered_segments == ScatteredSegments::both;
    scattered_random_ = decoheres;
    if (!decoheres)
        return;

    const auto ys = grid.y_coords();
    const auto zs = grid.z_coords();
    auto fy = correlation_factor_1d(ys, spreads.azimuth_rms_rad, wavenumber);
    auto fz = correlation_factor_1d(zs, spreads.elevation_rms_rad, wavenumber);
    lower_y_ = std::move(fy.lower);
    lower_z_ = std::move(fz.lower);
    jitter_ = std::max(fy.jitter, fz.jitter);
}

std::pair<FieldGrid, FieldGrid> FieldSampler::sample_pair(std::uint64_t seed) const
{
    const auto nz = static_cast<Eigen::Index>(grid_.nz);
    const auto ny = static_cast<Eigen::Index>(grid_.ny);
    std::mt19937_64 rng(seed);
    Workspace ws;

    auto make = [&](bool random, FieldRole role) {
        FieldGrid f{Eigen::MatrixXcd::Ones(nz, ny), grid_, role};
        if (random)
        {
            Eigen::MatrixXd re, im;
            draw_field(rng, lower_z_, lower_y_, ws, re, im);
            f.values.real() = re;
            f.values.imag() = im;
        }
        return f;
    };
    FieldGrid inc = make(incident_random_, FieldRole::incident);
    FieldGrid scat = make(scattered_random_, FieldRole::scattered);
    return {std::move(inc), std::move(scat)};
}

double FieldSampler::sample_power(std::uint64_t seed) const
{
    thread_local Workspace ws;
    std::mt19937_64 rng(seed);
    const double cell = grid_.dy_m * grid_.dz_m;

    if (!scattered_random_)
    {
        const double s = cell * static_cast<double>(grid_.ny * grid_.nz);
        return s * s;
    }

    draw_field(rng, lower_z_, lower_y_, ws, ws.scat_re, ws.scat_im);
    double sum_re = 0.0;
    double sum_im = 0.0;
    if (!incident_random_)
    {
        sum_re = ws.scat_re.sum();
        sum_im = ws.scat_im.sum();
    }
    else
    {
        // Draw order must match sample_pair: incident first, then scattered.
        ws.inc_re.swap(ws.scat_re);
        ws.inc_im.swap(ws.scat_im);
        draw_field(rng, lower_z_, lower_y_, ws, ws.scat_re, ws.scat_im);
        sum_re = (ws.inc_re.array() * ws.scat_re.array() - ws.inc_im.array() * ws.scat_im.array()).sum();
        sum_im = (ws.inc_re.array() * ws.scat_im.array() + ws.inc_im.array() * ws.scat_re.array()).sum();
    }
    sum_re *= cell;
    sum_im *= cell;
    return sum_re * sum_re + sum_im * sum_im;
}

std::pair<FieldGrid, FieldGrid> sample_field_pair(const ApertureGrid &grid, const AngleSpreadSpec &spreads,
                                                  double wavenumber, std::uint64_t seed)
{
    return FieldSampler(grid, spreads, wavenumber).sample_pair(seed);
}

std::complex<double> aperture_integral(const FieldGrid &xi_inc, const FieldGrid &xi_scat)
{
    if (!xi_inc.grid.same_shape(xi_scat.grid) || xi_inc.values.rows() != xi_scat.values.rows() ||
        xi_inc.values.cols() != xi_scat.values.cols())
        throw std::invalid_argument("aperture_integral: field grids differ in shape");
    return xi_inc.grid.dy_m * xi_inc.grid.dz_m * (xi_inc.values.array() * xi_scat.values.array()).sum();
}

unsigned resolve_worker_count(unsigned requested)
{
    unsigned n = requested > 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("RIS_AMBIENT_THREADS"))
    {
        char *end = nullptr;
        const unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0)
            n = std::min<unsigned long>(n, cap);
    }
    return std::max(1u, n);
}

McEstimate mc_mean_power(const ApertureGrid &grid, const AngleSpreadSpec &spreads, double wavenumber,
                         std::uint64_t trials, std::uint64_t master_seed, const McOptions &options)
{
    if (trials < 100)
        throw std::invalid_argument("mc_mean_power: at least 100 trials required");

    const FieldSampler sampler(grid, spreads, wavenumber);
    std::vector<double> powers(trials);

    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_worker_count(options.threads), trials));
    auto run = [&](unsigned w) {
        for (std::uint64_t i = w; i < trials; i += workers)
            powers[i] = sampler.sample_power(trial_seed(master_seed, i));
    };
    if (workers == 1)
    {
        run(0);
    }
    else
    {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
        for (auto &t : pool)
            t.join();
    }

    // Welford in trial order.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t i = 0; i < trials; ++i)
    {
        const double delta = powers[i] - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (powers[i] - mean);
    }
    const double variance = m2 / static_cast<double>(trials - 1);

    const double wavelength = 2.0 * pi / wavenumber;
    const double area = grid.area_m2();

    McEstimate est;
    est.mean_power = mean;
    est.std_error = std::sqrt(variance / static_cast<double>(trials));
    est.trials = trials;
    est.analytic_prediction = area * effective_area_exact(grid.width_m, grid.height_m, wavelength, spreads);
    est.analytic_min_approx =
        area * effective_area(grid.width_m, grid.height_m, coherence_scales(wavelength, spreads)).a_eff_m2;
    est.master_seed = master_seed;
    est.grid = grid;
    est.spreads = spreads;
    est.wavenumber = wavenumber;
    est.jitter = sampler.jitter();
    return est;
}

std::string_view to_string(Verdict v)
{
    switch (v)
    {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::degenerate_pass:
        return "degenerate-pass";
    }
    return "fail";
}

OracleReport oracle_report(const McEstimate &e)
{
    OracleReport r;
    r.aperture_w_m = e.grid.width_m;
    r.aperture_h_m = e.grid.height_m;
    r.ny = e.grid.ny;
    r.nz = e.grid.nz;
    r.trials = e.trials;
    r.master_seed = e.master_seed;
    r.segments = e.spreads.scattered_segments;
    r.mc_mean = e.mean_power;
    r.std_err = e.std_error;
    r.analytic_exact = e.analytic_prediction;
    r.analytic_min_approx = e.analytic_min_approx;
    r.jitter = e.jitter;

    if (e.std_error == 0.0)
    {
        const double scale = std::max(std::abs(e.mean_power), std::abs(e.analytic_prediction));
        const bool equal = std::abs(e.mean_power - e.analytic_prediction) <= 1e-12 * scale;
        r.z_score = equal ? 0.0 : std::copysign(INFINITY, e.mean_power - e.analytic_prediction);
        r.verdict = equal ? Verdict::degenerate_pass : Verdict::fail;
        return r;
    }
    r.z_score = (e.mean_power - e.analytic_prediction) / e.std_error;
    r.verdict = std::abs(r.z_score) <= OracleReport::z_threshold ? Verdict::pass : Verdict::fail;
    return r;
}

std::string format_report(const OracleReport &r)
{
    std::string out;
    auto line = [&out](const char *key, const std::string &value) {
        out += key;
        out += ": ";
        out += value;
        out += '\n';
    };
    line("aperture_w_m", format_real(r.aperture_w_m));
    line("aperture_h_m", format_real(r.aperture_h_m));
    line("grid_samples", std::to_string(r.ny) + " x " + std::to_string(r.nz));
    line("segments", std::string(to_string(r.segments)));
    line("trials", std::to_string(r.trials));
    line("master_seed", std::to_string(r.master_seed));
    line("mc_mean_power_m4", format_real(r.mc_mean));
    line("std_error_m4", format_real(r.std_err));
    line("analytic_exact_m4", format_real(r.analytic_exact));
    line("analytic_min_approx_m4", format_real(r.analytic_min_approx));
    line("mc_vs_min_approx_db", format_real(10.0 * std::log10(r.mc_mean / r.analytic_min_approx)));
    line("z_score", format_real(r.z_score));
    line("z_threshold", format_real(OracleReport::z_threshold));
    line("jitter", format_real(r.jitter));
    line("verdict", std::string(to_string(r.verdict)));
    return out;
}

std::string report_csv_header()
{
    return "aperture_w,aperture_h,trials,mc_mean,std_err,analytic_exact,analytic_min_approx,z_score,verdict\n";
}

std::string report_csv_row(const OracleReport &r)
{
    std::string out;
    for (double v : {r.aperture_w_m, r.aperture_h_m})
        out += format_real(v) + ",";
    out += std::to_string(r.trials) + ",";
    for (double v : {r.mc_mean, r.std_err, r.analytic_exact, r.analytic_min_approx, r.z_score})
        out += format_real(v) + ",";
    out += std::string(to_string(r.verdict)) + "\n";
    return out;
}

} // namespace ris_ambient
