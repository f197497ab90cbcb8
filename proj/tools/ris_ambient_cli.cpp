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

// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success/pass, 2 config or usage error, 3 I/O error, 4 verification fail.

#include "ris_ambient/ris_ambient.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_io = 3;
constexpr int exit_verify_fail = 4;
constexpr int exit_other = 1;

constexpr double rad_to_deg = 57.295779513082320876798154814105;

struct Invocation
{
    std::string config_path;
    std::vector<std::string> overrides;
    std::optional<std::uint64_t> seed;
    std::uint64_t trials = 10000;
    std::string output_path;
    double analytic_scale = 1.0; // test hook
};

struct CliError
{
    int code;
    std::string message;
};

using ScenarioPtr = std::unique_ptr<ra_scenario, decltype(&ra_scenario_destroy)>;
using SweepPtr = std::unique_ptr<ra_sweep, decltype(&ra_sweep_destroy)>;

int exit_code_for(ra_status s)
{
    switch (s)
    {
    case RA_OK:
        return exit_ok;
    case RA_ERR_CONFIG:
    case RA_ERR_INVALID_ARGUMENT:
    case RA_ERR_GEOMETRY:
        return exit_config;
    case RA_ERR_IO:
        return exit_io;
    default:
        return exit_other;
    }
}

void check(ra_status s)
{
    if (s == RA_OK)
        return;
    std::string msg = ra_last_error();
    const std::string key = ra_last_error_key();
    if (!key.empty() && msg.find(key) == std::string::npos)
        msg += " (key: " + key + ")";
    throw CliError{exit_code_for(s), std::string(ra_status_string(s)) + ": " + msg};
}

template <typename F>
std::string fetch_string(F &&call)
{
    size_t needed = 0;
    const ra_status probe = call(nullptr, 0, &needed);
    if (probe != RA_OK && probe != RA_ERR_BUFFER_TOO_SMALL)
        check(probe);
    std::string out(needed, '\0');
    check(call(out.data(), out.size(), &needed));
    out.resize(needed - 1);
    return out;
}

std::string baseline_text()
{
    ra_scenario *raw = nullptr;
    check(ra_scenario_baseline(&raw));
    ScenarioPtr base(raw, ra_scenario_destroy);
    return fetch_string([&](char *b, size_t c, size_t *n) { return ra_scenario_echo(base.get(), b, c, n); });
}

ScenarioPtr load_scenario(const Invocation &inv)
{
    std::string text;
    if (inv.config_path.empty())
    {
        text = baseline_text();
    }
    else
    {
        std::ifstream in(inv.config_path, std::ios::binary);
        if (!in)
            throw CliError{exit_io, "cannot read config file '" + inv.config_path + "'"};
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    std::vector<const char *> ov;
    for (const auto &o : inv.overrides)
        ov.push_back(o.c_str());
    ra_scenario *raw = nullptr;
    check(ra_scenario_create(text.c_str(), ov.data(), ov.size(), &raw));
    return ScenarioPtr(raw, ra_scenario_destroy);
}

std::string fmt(const char *format, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string length_or_inf(double v)
{
    return std::isfinite(v) ? fmt("%.6g m", v) : std::string("inf (zero spread)");
}

void print_metadata(std::ostream &os, const ra_scenario *scenario, const char *prefix)
{
    const std::string echo =
        fetch_string([&](char *b, size_t c, size_t *n) { return ra_scenario_echo(scenario, b, c, n); });
    std::istringstream lines(echo);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty())
            os << prefix << (line[0] == '#' ? line.substr(2) : line) << '\n';
}

int cmd_coherence(const Invocation &inv)
{
    ScenarioPtr sc = load_scenario(inv);
    ra_scenario_info info{};
    check(ra_scenario_get_info(sc.get(), &info));

    std::ostringstream os;
    os << "# ris-ambient " << ra_version() << " coherence\n";
    print_metadata(os, sc.get(), "# ");
    os << "wavelength: " << fmt("%.8g m", info.wavelength_m) << '\n';
    os << "wavenumber: " << fmt("%.8g rad/m", info.wavenumber_per_m) << '\n';
    os << "azimuth_rms: " << fmt("%.6g deg", info.azimuth_rms_rad * rad_to_deg) << '\n';
    os << "elevation_rms: " << fmt("%.6g deg", info.elevation_rms_rad * rad_to_deg) << '\n';
    os << "ris_area: " << fmt("%.6g m^2", info.ris_width_m * info.ris_height_m) << '\n';

    for (int mode : {RA_SEGMENTS_BOTH, RA_SEGMENTS_RIS_TO_RX_ONLY})
    {
        ra_coherence_report r{};
        check(ra_coherence(sc.get(), mode, &r));
        const char *name = mode == RA_SEGMENTS_BOTH ? "both" : "ris_to_rx_only";
        os << "[segments=" << name << "]\n";
        os << "  w_coh: " << length_or_inf(r.w_coh_m) << '\n';
        os << "  h_coh: " << length_or_inf(r.h_coh_m) << '\n';
        os << "  a_eff_min_approx: " << fmt("%.6g m^2", r.a_eff_min_m2) << '\n';
        os << "  a_eff_exact: " << fmt("%.6g m^2", r.a_eff_exact_m2) << '\n';
        os << "  degradation_min_approx: " << fmt("%.3f dB", r.degradation_min_db) << '\n';
        os << "  degradation_exact: " << fmt("%.3f dB", r.degradation_exact_db) << '\n';
    }

    if (!inv.output_path.empty())
    {
        std::ofstream out(inv.output_path, std::ios::binary | std::ios::trunc);
        out << os.str();
        if (!out)
            throw CliError{exit_io, "cannot write '" + inv.output_path + "'"};
    }
    std::cout << os.str();
    return exit_ok;
}

int cmd_sweep(const Invocation &inv)
{
    ScenarioPtr sc = load_scenario(inv);
    ra_sweep *raw = nullptr;
    check(ra_sweep_run(sc.get(), nullptr, 0, &raw));
    SweepPtr sweep(raw, ra_sweep_destroy);

    std::ostream &summary = inv.output_path.empty() || inv.output_path == "-" ? std::cerr : std::cout;
    if (inv.output_path.empty() || inv.output_path == "-")
        std::cout << fetch_string([&](char *b, size_t c, size_t *n) { return ra_sweep_csv(sweep.get(), b, c, n); });
    else
        check(ra_sweep_write_csv(sweep.get(), inv.output_path.c_str()));

    const size_t rows = ra_sweep_row_count(sweep.get());
    for (size_t i : {size_t{0}, rows - 1})
    {
        ra_mechanisms m{};
        check(ra_sweep_get_row(sweep.get(), i, &m));
        summary << "at " << fmt("%.0f m", m.rx_distance_m) << ": ambient " << fmt("%.2f dB", m.ambient_total.db)
                << ", ideal RIS advantage " << fmt("%+.2f dB", m.ris_ideal_advantage_db)
                << ", spread RIS advantage " << fmt("%+.2f dB", m.ris_advantage_db) << '\n';
    }
    summary << "rows: " << rows << '\n';
    return exit_ok;
}

int cmd_mc_verify(const Invocation &inv)
{
    ScenarioPtr sc = load_scenario(inv);
    ra_mc_options opt{};
    ra_mc_options_default(&opt);
    opt.trials = inv.trials;
    if (inv.seed)
        opt.master_seed = *inv.seed;
    opt.analytic_scale = inv.analytic_scale;

    ra_oracle_report report{};
    check(ra_mc_verify(sc.get(), &opt, &report));

    std::cout << "# ris-ambient " << ra_version() << " mc-verify\n";
    if (!inv.seed)
        std::cout << "# seed not given; using default master seed " << opt.master_seed << '\n';
    print_metadata(std::cout, sc.get(), "# ");
    std::cout << fetch_string([&](char *b, size_t c, size_t *n) { return ra_oracle_report_text(&report, b, c, n); });

    if (!inv.output_path.empty())
    {
        const std::string csv =
            fetch_string([&](char *b, size_t c, size_t *n) { return ra_oracle_report_csv(&report, 1, b, c, n); });
        std::ofstream out(inv.output_path, std::ios::binary | std::ios::trunc);
        out << csv;
        out.close();
        if (!out)
            throw CliError{exit_io, "cannot write '" + inv.output_path + "'"};
    }
    return report.verdict == RA_VERDICT_FAIL ? exit_verify_fail : exit_ok;
}

int cmd_compare(const Invocation &inv)
{
    ScenarioPtr sc = load_scenario(inv);
    ra_scenario_info info{};
    check(ra_scenario_get_info(sc.get(), &info));

    std::ostringstream os;
    os << "# ris-ambient " << ra_version() << " compare\n";
    print_metadata(os, sc.get(), "# ");
    static const char *corner_names[4] = {"nw", "ne", "sw", "se"};

    for (double d : {20.0, 200.0})
    {
        ra_mechanisms m{};
        check(ra_mechanisms_at(sc.get(), d, &m));
        os << "[rx_distance=" << fmt("%.0f m", d) << "]\n";
        double corners = 0.0;
        double poles = 0.0;
        for (int i = 0; i < 4; ++i)
        {
            os << "  corner_" << corner_names[i] << ": "
               << (m.corner[i].present ? fmt("%.2f dB", m.corner[i].db) : std::string("absent (") + m.corner[i].reason + ")")
               << '\n';
            if (m.corner[i].present)
                corners += m.corner[i].linear;
        }
        for (int i = 0; i < 4; ++i)
        {
            os << "  pole_" << corner_names[i] << ": "
               << (m.pole[i].present ? fmt("%.2f dB", m.pole[i].db) : std::string("absent (") + m.pole[i].reason + ")")
               << '\n';
            if (m.pole[i].present)
                poles += m.pole[i].linear;
        }
        os << "  corners_sum: " << fmt("%.2f dB", 10.0 * std::log10(corners)) << '\n';
        os << "  poles_sum: " << fmt("%.2f dB", 10.0 * std::log10(poles)) << '\n';
        os << "  ambient_total: " << fmt("%.2f dB", m.ambient_total.db) << '\n';
        if (m.ris_ideal.present)
        {
            os << "  ris_ideal: " << fmt("%.2f dB", m.ris_ideal.db) << '\n';
            os << "  ris_spread: " << fmt("%.2f dB", m.ris_spread.db) << '\n';
            os << "  ris_ideal_advantage: " << fmt("%+.2f dB", m.ris_ideal_advantage_db) << '\n';
            os << "  ris_spread_advantage: " << fmt("%+.2f dB", m.ris_advantage_db) << '\n';
        }
        else
        {
            os << "  ris: absent (" << m.ris_ideal.reason << ")\n";
        }
    }

    ra_segment_factor f{};
    check(ra_one_segment_factor(sc.get(), &f));
    os << "[one_segment_los]\n";
    os << "  a_eff_ratio_exact: " << fmt("%.4f", f.exact_ratio) << '\n';
    os << "  a_eff_ratio_min_approx: " << fmt("%.4f", f.min_approx_ratio) << '\n';
    os << "  a_eff_ratio_unclamped_gaussian: " << fmt("%.4f", f.unclamped_ratio) << '\n';
    os << "  a_eff_ratio_stated_upper_bound: " << fmt("%.4f", f.stated_upper_bound)
       << " (doubling of both coherence scales; not reproduced by the Gaussian correlation model)\n";

    if (!inv.output_path.empty())
    {
        std::ofstream out(inv.output_path, std::ios::binary | std::ios::trunc);
        out << os.str();
        if (!out)
            throw CliError{exit_io, "cannot write '" + inv.output_path + "'"};
    }
    std::cout << os.str();
    return exit_ok;
}

void add_common(CLI::App *cmd, Invocation &inv)
{
    cmd->add_option("--config", inv.config_path, "Scenario config file (key = value); built-in baseline if omitted");
    cmd->add_option("--override", inv.overrides, "Override a config key, dotted.key=value (repeatable)")
        ->take_all()
        ->allow_extra_args(false);
    cmd->add_option("--out", inv.output_path, "Output file");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"ris-ambient: around-the-corner path gain from ambient mechanisms versus a RIS"};
    app.set_version_flag("--version", std::string(ra_version()));
    app.require_subcommand(1);

    Invocation inv;
    auto *coherence = app.add_subcommand("coherence", "Coherence scales, effective area and RIS gain degradation");
    auto *sweep = app.add_subcommand("sweep", "Distance sweep of every mechanism, written as CSV");
    auto *mc = app.add_subcommand("mc-verify", "Monte Carlo check of the angle-spread degradation formula");
    auto *compare = app.add_subcommand("compare", "Mechanism breakdown at 20 m and 200 m, one-segment LOS factor");
    for (auto *cmd : {coherence, sweep, mc, compare})
        add_common(cmd, inv);
    mc->add_option("--seed", inv.seed, "Master seed (64-bit)");
    mc->add_option("--trials", inv.trials, "Number of Monte Carlo trials (>= 100)");
    mc->add_option("--analytic-scale", inv.analytic_scale, "Scale the analytic prediction (testing only)")
        ->group("");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_config;
    }

    try
    {
        if (coherence->parsed())
            return cmd_coherence(inv);
        if (sweep->parsed())
            return cmd_sweep(inv);
        if (mc->parsed())
            return cmd_mc_verify(inv);
        if (compare->parsed())
            return cmd_compare(inv);
    }
    catch (const CliError &e)
    {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    }
    return exit_other;
}
