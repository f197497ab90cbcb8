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

#include <array>
#include <cmath>
#include <string_view>

namespace ris_ambient
{

// Plan view of the intersection: origin at the intersection center, x east, y north.
// Street A runs along x (Tx on its west arm at (-tx_corner_distance_m, 0)),
// street B along y (Rx on its north arm at (0, rx_corner_distance_m)).
// Buildings fill the four quadrants |x| > half width and |y| > half width.

struct Vec2
{
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    double norm() const { return std::hypot(x, y); }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
};

struct Vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    double dot(const Vec3 &o) const { return x * o.x + y * o.y + z * o.z; }
};

enum class Corner
{
    north_west,
    north_east,
    south_west,
    south_east
};

inline constexpr std::array<Corner, 4> all_corners = {Corner::north_west, Corner::north_east, Corner::south_west,
                                                      Corner::south_east};

std::string_view to_string(Corner c);

// GTD wedge geometry at one building corner. Angles are measured from the wedge face
// parallel to street A, through the exterior region, so both lie in [0, 3*pi/2].
struct CornerPath
{
    Corner corner = Corner::north_west;
    double r_pre_m = 0.0;  // Tx -> corner
    double r_post_m = 0.0; // corner -> Rx
    double phi_inc_rad = 0.0;
    double phi_d_rad = 0.0;
};

struct PolePath
{
    Corner corner = Corner::north_west;
    double r1_m = 0.0;          // Tx -> pole
    double r2_m = 0.0;          // pole -> Rx
    double phi_prime_rad = 0.0; // angle between pole->Tx and pole->Rx; pi is forward scatter
};

struct RisPath
{
    double r_inc_m = 0.0;
    double r_scat_m = 0.0;
    double theta_inc_rad = 0.0;
    Vec3 s_hat; // Tx -> RIS center
    Vec3 o_hat; // RIS center -> Rx
    Vec3 normal;
};

Vec2 tx_position(const Scenario &scenario);
Vec2 rx_position(const Scenario &scenario, double rx_corner_distance_m);
Vec2 corner_position(const Scenario &scenario, Corner corner);
Vec2 pole_position(const Scenario &scenario, Corner corner);
Vec3 ris_center(const Scenario &scenario);
Vec3 ris_normal();

bool inside_building(const Scenario &scenario, Vec2 point);
bool line_of_sight(const Scenario &scenario, Vec2 from, Vec2 to);

// Exterior wedge angle of `point` seen from `corner`. Throws GeometryError if the
// direction falls inside the building.
double wedge_angle(const Scenario &scenario, Corner corner, Vec2 point);

std::array<CornerPath, 4> corner_paths(const Scenario &scenario, double rx_corner_distance_m);
std::array<CornerPath, 4> corner_paths_at(const Scenario &scenario, Vec2 rx);

std::array<PolePath, 4> pole_paths(const Scenario &scenario, double rx_corner_distance_m);
std::array<PolePath, 4> pole_paths_at(const Scenario &scenario, Vec2 rx);

// Free-standing RIS geometry for arbitrary points. theta_inc is the angle between -s_hat
// and the outward normal. Throws GeometryError if Tx or Rx is behind the RIS plane.
RisPath resolve_ris_path(const Vec3 &tx, const Vec3 &center, const Vec3 &normal, const Vec3 &rx);

RisPath ris_path(const Scenario &scenario, double rx_corner_distance_m);
RisPath ris_path_at(const Scenario &scenario, Vec2 rx);

} // namespace ris_ambient
