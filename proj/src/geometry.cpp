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

#include "ris_ambient/geometry.hpp"
#include "ris_ambient/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ris_ambient
{

namespace
{

struct Signs
{
    double sx;
    double sy;
};

Signs signs(Corner c)
{
    switch (c)
    {
    case Corner::north_west:
        return {-1.0, 1.0};
    case Corner::north_east:
        return {1.0, 1.0};
    case Corner::south_west:
        return {-1.0, -1.0};
    case Corner::south_east:
        return {1.0, -1.0};
    }
    return {1.0, 1.0};
}

void require_rx_distance(double d)
{
    if (!(d > 0.0) || !std::isfinite(d))
        throw std::invalid_argument("rx_corner_distance_m must be positive and finite");
}

void require_outside_buildings(const Scenario &scenario, Vec2 p, const char *what)
{
    if (inside_building(scenario, p))
        throw GeometryError(std::string(what) + " lies inside a building footprint");
}

Vec3 lift(Vec2 p)
{
    return {p.x, p.y, 0.0};
}

// Open interval (lo, hi) of t for which s * (a + t d) > bound.
void clip(double a, double d, double s, double bound, double &lo, double &hi)
{
    const double sa = s * a;
    const double sd = s * d;
    if (sd == 0.0)
    {
        if (sa <= bound)
            hi = lo; // never satisfied
        return;
    }
    const double t = (bound - sa) / sd;
    if (sd > 0.0)
        lo = std::max(lo, t);
    else
        hi = std::min(hi, t);
}

} // namespace

std::string_view to_string(Corner c)
{
    switch (c)
    {
    case Corner::north_west:
        return "nw";
    case Corner::north_east:
        return "ne";
    case Corner::south_west:
        return "sw";
    case Corner::south_east:
        return "se";
    }
    return "?";
}

Vec2 tx_position(const Scenario &scenario)
{
    return {-scenario.params().tx_corner_distance_m, 0.0};
}

Vec2 rx_position(const Scenario &, double rx_corner_distance_m)
{
    return {0.0, rx_corner_distance_m};
}

Vec2 corner_position(const Scenario &scenario, Corner corner)
{
    const double hw = scenario.params().street_half_width_m;
    const auto [sx, sy] = signs(corner);
    return {sx * hw, sy * hw};
}

Vec2 pole_position(const Scenario &scenario, Corner corner)
{
    const double offset = scenario.params().pole_setback_m / std::sqrt(2.0);
    const auto [sx, sy] = signs(corner);
    const Vec2 c = corner_position(scenario, corner);
    return {c.x - sx * offset, c.y - sy * offset};
}

// West-facing wall of the north-east building, flush with the corner.
Vec3 ris_center(const Scenario &scenario)
{
    const auto &p = scenario.params();
    return {p.street_half_width_m, p.street_half_width_m + 0.5 * p.ris_width_m, 0.0};
}

Vec3 ris_normal()
{
    return {-1.0, 0.0, 0.0};
}

bool inside_building(const Scenario &scenario, Vec2 point)
{
    const double hw = scenario.params().street_half_width_m;
    return std::abs(point.x) > hw && std::abs(point.y) > hw;
}

bool line_of_sight(const Scenario &scenario, Vec2 from, Vec2 to)
{
    // Shrink the blocking quadrants slightly so endpoints mounted on a wall are not blocked.
    const double bound = scenario.params().street_half_width_m * (1.0 + 1e-12) + 1e-9;
    const Vec2 d = to - from;
    for (Corner c : all_corners)
    {
        const auto [sx, sy] = signs(c);
        double lo = 0.0;
        double hi = 1.0;
        clip(from.x, d.x, sx, bound, lo, hi);
        clip(from.y, d.y, sy, bound, lo, hi);
        if (hi - lo > 1e-12)
            return false;
    }
    return true;
}

double wedge_angle(const Scenario &scenario, Corner corner, Vec2 point)
{
    const auto [sx, sy] = signs(corner);
    const Vec2 v = point - corner_position(scenario, corner);
    if (v.norm() == 0.0)
        throw GeometryError("point coincides with the building corner");
    // Local frame: first axis along the street-A face, second axis away from the building.
    const double along = sx * v.x;
    const double away = -sy * v.y;
    double phi = std::atan2(away, along);
    if (phi < 0.0)
        phi += 2.0 * pi;
    if (phi > 1.5 * pi + 1e-12)
        throw GeometryError("direction from corner " + std::string(to_string(corner)) + " points into the building");
    return std::min(phi, 1.5 * pi);
}

std::array<CornerPath, 4> corner_paths_at(const Scenario &scenario, Vec2 rx)
{
    require_outside_buildings(scenario, rx, "receiver");
    const Vec2 tx = tx_position(scenario);
    std::array<CornerPath, 4> out;
    for (size_t i = 0; i < all_corners.size(); ++i)
    {
        const Corner c = all_corners[i];
        const Vec2 cp = corner_position(scenario, c);
        out[i] = CornerPath{c, (tx - cp).norm(), (rx - cp).norm(), wedge_angle(scenario, c, tx),
                            wedge_angle(scenario, c, rx)};
    }
    return out;
}

std::array<CornerPath, 4> corner_paths(const Scenario &scenario, double rx_corner_distance_m)
{
    require_rx_distance(rx_corner_distance_m);
    return corner_paths_at(scenario, rx_position(scenario, rx_corner_distance_m));
}

std::array<PolePath, 4> pole_paths_at(const Scenario &scenario, Vec2 rx)
{
    require_outside_buildings(scenario, rx, "receiver");
    const Vec2 tx = tx_position(scenario);
    std::array<PolePath, 4> out;
    for (size_t i = 0; i < all_corners.size(); ++i)
    {
        const Corner c = all_corners[i];
        const Vec2 pp = pole_position(scenario, c);
        const Vec2 to_tx = tx - pp;
        const Vec2 to_rx = rx - pp;
        const double r1 = to_tx.norm();
        const double r2 = to_rx.norm();
        if (r2 == 0.0)
            throw GeometryError("receiver coincides with a pole");
        // atan2 form keeps full precision near 0 and pi.
        const double cross = to_tx.x * to_rx.y - to_tx.y * to_rx.x;
        const double phi = std::atan2(std::abs(cross), to_tx.dot(to_rx));
        out[i] = PolePath{c, r1, r2, phi};
    }
    return out;
}

std::array<PolePath, 4> pole_paths(const Scenario &scenario, double rx_corner_distance_m)
{
    require_rx_distance(rx_corner_distance_m);
    return pole_paths_at(scenario, rx_position(scenario, rx_corner_distance_m));
}

RisPath resolve_ris_path(const Vec3 &tx, const Vec3 &center, const Vec3 &normal, const Vec3 &rx)
{
    const Vec3 inc{center.x - tx.x, center.y - tx.y, center.z - tx.z};
    const Vec3 scat{rx.x - center.x, rx.y - center.y, rx.z - center.z};
    const double r_inc = inc.norm();
    const double r_scat = scat.norm();
    const double n_len = normal.norm();
    if (r_inc == 0.0 || r_scat == 0.0 || n_len == 0.0)
        throw GeometryError("degenerate RIS geometry (coincident points or zero normal)");

    RisPath path;
    path.r_inc_m = r_inc;
    path.r_scat_m = r_scat;
    path.s_hat = {inc.x / r_inc, inc.y / r_inc, inc.z / r_inc};
    path.o_hat = {scat.x / r_scat, scat.y / r_scat, scat.z / r_scat};
    path.normal = {normal.x / n_len, normal.y / n_len, normal.z / n_len};

    const double cos_inc = -path.s_hat.dot(path.normal);
    if (cos_inc <= 0.0)
        throw GeometryError("transmitter behind the RIS plane");
    if (path.o_hat.dot(path.normal) <= 0.0)
        throw GeometryError("receiver not illuminated");
    path.theta_inc_rad = std::acos(std::min(1.0, cos_inc));
    return path;
}

RisPath ris_path_at(const Scenario &scenario, Vec2 rx)
{
    require_outside_buildings(scenario, rx, "receiver");
    const Vec3 center = ris_center(scenario);
    const Vec2 tx = tx_position(scenario);
    if (!line_of_sight(scenario, tx, {center.x, center.y}))
        throw GeometryError("RIS not visible from transmitter");
    return resolve_ris_path(lift(tx), center, ris_normal(), lift(rx));
}

RisPath ris_path(const Scenario &scenario, double rx_corner_distance_m)
{
    require_rx_distance(rx_corner_distance_m);
    return ris_path_at(scenario, rx_position(scenario, rx_corner_distance_m));
}

} // namespace ris_ambient
