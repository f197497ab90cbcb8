/* SPDX-License-Identifier: Apache-2.0
 *
 * ris-ambient: around-the-corner coverage from ambient scatter versus RIS
 * Copyright (C) 2026 The ris-ambient Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RIS_AMBIENT_H
#define RIS_AMBIENT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef RIS_AMBIENT_BUILDING_LIBRARY
#    define RA_API __declspec(dllexport)
#  else
#    define RA_API __declspec(dllimport)
#  endif
#else
#  define RA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns a status. On failure, ra_last_error() holds a message
 * for the calling thread and ra_last_error_key() the offending config key, if any. */
typedef enum ra_status
{
    RA_OK = 0,
    RA_ERR_INVALID_ARGUMENT = 1,
    RA_ERR_CONFIG = 2,
    RA_ERR_GEOMETRY = 3,
    RA_ERR_VALIDITY = 4,
    RA_ERR_NUMERIC = 5,
    RA_ERR_IO = 6,
    RA_ERR_BUFFER_TOO_SMALL = 7,
    RA_ERR_INTERNAL = 8
} ra_status;

typedef enum ra_segments
{
    RA_SEGMENTS_BOTH = 0,
    RA_SEGMENTS_RIS_TO_RX_ONLY = 1,
    RA_SEGMENTS_NONE = 2,
    RA_SEGMENTS_FROM_SCENARIO = -1
} ra_segments;

typedef enum ra_polarization
{
    RA_POLARIZATION_HARD = 0,
    RA_POLARIZATION_SOFT = 1
} ra_polarization;

typedef enum ra_verdict
{
    RA_VERDICT_PASS = 0,
    RA_VERDICT_FAIL = 1,
    RA_VERDICT_DEGENERATE_PASS = 2
} ra_verdict;

typedef struct ra_scenario ra_scenario;
typedef struct ra_sweep ra_sweep;

typedef struct ra_scenario_info
{
    double frequency_hz;
    double wavelength_m;
    double wavenumber_per_m;
    double tx_corner_distance_m;
    double street_half_width_m;
    double pole_radius_m;
    double pole_setback_m;
    double absorption_np_per_m;
    double ris_width_m;
    double ris_height_m;
    double azimuth_rms_rad;
    double elevation_rms_rad;
    int scattered_segments; /* ra_segments */
    int polarization;       /* ra_polarization */
} ra_scenario_info;

typedef struct ra_coherence_report
{
    int segments; /* ra_segments actually evaluated */
    double w_coh_m; /* INFINITY when the spread is zero */
    double h_coh_m;
    double a_ris_m2;
    double a_eff_min_m2;
    double a_eff_exact_m2;
    double degradation_min_db;   /* 10 log10(a_eff_min / a_ris) */
    double degradation_exact_db; /* 10 log10(a_eff_exact / a_ris) */
} ra_coherence_report;

typedef struct ra_segment_factor
{
    double exact_ratio;
    double min_approx_ratio;
    double unclamped_ratio;
    double stated_upper_bound;
} ra_segment_factor;

typedef struct ra_gain
{
    int present;
    double linear;
    double db;
    char reason[48]; /* reason code when absent, "" otherwise */
} ra_gain;

/* Corner and pole arrays are ordered nw, ne, sw, se. */
typedef struct ra_mechanisms
{
    double rx_distance_m;
    ra_gain corner[4];
    ra_gain pole[4];
    ra_gain ambient_total;
    ra_gain ris_ideal;
    ra_gain ris_spread;
    double ris_advantage_db;       /* NaN when the RIS path is absent */
    double ris_ideal_advantage_db;
} ra_mechanisms;

typedef struct ra_mc_options
{
    uint64_t trials;
    uint64_t master_seed;
    unsigned threads;     /* 0: auto, capped by RIS_AMBIENT_THREADS */
    int segments;         /* ra_segments; RA_SEGMENTS_FROM_SCENARIO uses the scenario's mode */
    double aperture_w_m;  /* <= 0: scenario ris_width_m */
    double aperture_h_m;  /* <= 0: scenario ris_height_m */
    double analytic_scale; /* multiplies the analytic prediction; 1.0 except in tests */
} ra_mc_options;

typedef struct ra_oracle_report
{
    double aperture_w_m;
    double aperture_h_m;
    size_t ny;
    size_t nz;
    uint64_t trials;
    uint64_t master_seed;
    int segments;
    double mc_mean;
    double std_err;
    double analytic_exact;
    double analytic_min_approx;
    double z_score;
    double jitter;
    int verdict; /* ra_verdict */
} ra_oracle_report;

RA_API const char *ra_version(void);
RA_API const char *ra_last_error(void);
RA_API const char *ra_last_error_key(void);
RA_API const char *ra_status_string(ra_status status);

/* Parses "key = value" text, applies "dotted.key=value" overrides in order, validates. */
RA_API ra_status ra_scenario_create(const char *config_text, const char *const *overrides, size_t n_overrides,
                                    ra_scenario **out);
RA_API ra_status ra_scenario_baseline(ra_scenario **out);
RA_API void ra_scenario_destroy(ra_scenario *scenario);
RA_API ra_status ra_scenario_get_info(const ra_scenario *scenario, ra_scenario_info *out);

/* String outputs follow snprintf conventions: *needed receives the full length including
 * the terminating NUL; RA_ERR_BUFFER_TOO_SMALL if it exceeds capacity. buf may be NULL
 * when capacity is 0. */
RA_API ra_status ra_scenario_echo(const ra_scenario *scenario, char *buf, size_t capacity, size_t *needed);

RA_API ra_status ra_coherence(const ra_scenario *scenario, int segments, ra_coherence_report *out);
RA_API ra_status ra_one_segment_factor(const ra_scenario *scenario, ra_segment_factor *out);

RA_API ra_status ra_mechanisms_at(const ra_scenario *scenario, double rx_distance_m, ra_mechanisms *out);

/* distances == NULL selects the default 20-200 m grid (40 log-spaced points). */
RA_API ra_status ra_sweep_run(const ra_scenario *scenario, const double *distances, size_t n_distances,
                              ra_sweep **out);
RA_API size_t ra_sweep_row_count(const ra_sweep *sweep);
RA_API ra_status ra_sweep_get_row(const ra_sweep *sweep, size_t index, ra_mechanisms *out);
RA_API ra_status ra_sweep_csv(const ra_sweep *sweep, char *buf, size_t capacity, size_t *needed);
RA_API ra_status ra_sweep_write_csv(const ra_sweep *sweep, const char *path);
RA_API void ra_sweep_destroy(ra_sweep *sweep);

RA_API void ra_mc_options_default(ra_mc_options *options);
RA_API ra_status ra_mc_verify(const ra_scenario *scenario, const ra_mc_options *options, ra_oracle_report *out);
RA_API ra_status ra_oracle_report_text(const ra_oracle_report *report, char *buf, size_t capacity, size_t *needed);
RA_API ra_status ra_oracle_report_csv(const ra_oracle_report *report, int with_header, char *buf, size_t capacity,
                                      size_t *needed);

#ifdef __cplusplus
}
#endif

#endif /* RIS_AMBIENT_H */
