// SPDX-License-Identifier: Apache-2.0
//
// vlcoris: reflector-assisted indoor visible light communication simulator
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

#include "vlcoris/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace vlcoris {

std::string_view to_string(WallId id) {
  switch (id) {
    case WallId::x0: return "x0";
    case WallId::x1: return "x1";
    case WallId::y0: return "y0";
    case WallId::y1: return "y1";
  }
  return "x0";
}

std::optional<WallId> parse_wall_id(std::string_view text) {
  if (text == "x0") return WallId::x0;
  if (text == "x1") return WallId::x1;
  if (text == "y0") return WallId::y0;
  if (text == "y1") return WallId::y1;
  return std::nullopt;
}

std::string_view to_string(ReflectorMode mode) {
  switch (mode) {
    case ReflectorMode::none: return "none";
    case ReflectorMode::mirror: return "mirror";
    case ReflectorMode::oris: return "oris";
  }
  return "none";
}

std::optional<ReflectorMode> parse_reflector_mode(std::string_view text) {
  if (text == "none") return ReflectorMode::none;
  if (text == "mirror") return ReflectorMode::mirror;
  if (text == "oris") return ReflectorMode::oris;
  return std::nullopt;
}

WallGrid::WallGrid(WallId id, const Room& room, int ky, int kz)
    : id_(id), height_(room.height), ky_(ky), kz_(kz) {
  if (ky < 1 || kz < 1) throw std::invalid_argument("wall grid needs at least one element per axis");
  switch (id) {
    case WallId::x0:
      origin_ = {0.0, 0.0, 0.0};
      u_axis_ = {0.0, 1.0, 0.0};
      normal_ = {1.0, 0.0, 0.0};
      width_ = room.width;
      break;
    case WallId::x1:
      origin_ = {room.length, 0.0, 0.0};
      u_axis_ = {0.0, 1.0, 0.0};
      normal_ = {-1.0, 0.0, 0.0};
      width_ = room.width;
      break;
    case WallId::y0:
      origin_ = {0.0, 0.0, 0.0};
      u_axis_ = {1.0, 0.0, 0.0};
      normal_ = {0.0, 1.0, 0.0};
      width_ = room.length;
      break;
    case WallId::y1:
      origin_ = {0.0, room.width, 0.0};
      u_axis_ = {1.0, 0.0, 0.0};
      normal_ = {0.0, -1.0, 0.0};
      width_ = room.length;
      break;
  }
}

Point3 WallGrid::element_center(int k) const {
  const int iy = k % ky_;
  const int iz = k / ky_;
  return from_local((iy + 0.5) * cell_width(), (iz + 0.5) * cell_height());
}

Point3 WallGrid::clamp_to_element(int k, const Point3& on_plane) const {
  const int iy = k % ky_;
  const int iz = k / ky_;
  const auto [u, v] = local(on_plane);
  const double cu = std::clamp(u, iy * cell_width(), (iy + 1) * cell_width());
  const double cv = std::clamp(v, iz * cell_height(), (iz + 1) * cell_height());
  return from_local(cu, cv);
}

std::optional<int> WallGrid::locate(const Point3& on_plane) const {
  const auto [u, v] = local(on_plane);
  if (u < 0.0 || u > width_ || v < 0.0 || v > height_) return std::nullopt;
  const int iy = std::min(static_cast<int>(u / cell_width()), ky_ - 1);
  const int iz = std::min(static_cast<int>(v / cell_height()), kz_ - 1);
  return iz * ky_ + iy;
}

namespace {

struct Interval {
  double lo;
  double hi;
  bool empty() const { return lo > hi; }
};

constexpr Interval kEverything{-std::numeric_limits<double>::infinity(),
                               std::numeric_limits<double>::infinity()};
constexpr Interval kNothing{1.0, 0.0};

Interval intersect(Interval a, Interval b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

// Parameters t where base + t*dir stays within [lo, hi] along one axis.
Interval slab(double base, double dir, double lo, double hi) {
  if (dir == 0.0) return (base >= lo && base <= hi) ? kEverything : kNothing;
  double t0 = (lo - base) / dir;
  double t1 = (hi - base) / dir;
  if (t0 > t1) std::swap(t0, t1);
  return {t0, t1};
}

}  // namespace

bool segment_blocked(const Segment& s, const BodyCylinder& body) {
  const Vec3 d = s.b - s.a;
  const double px = s.a.x - body.base.x;
  const double py = s.a.y - body.base.y;
  const double r2 = body.radius * body.radius;

  // Radial condition |p + t d|^2 <= r^2 in the horizontal plane.
  const double qa = d.x * d.x + d.y * d.y;
  const double qb = 2.0 * (px * d.x + py * d.y);
  const double qc = px * px + py * py - r2;
  Interval radial = kNothing;
  if (qa == 0.0) {
    radial = qc <= 0.0 ? kEverything : kNothing;
  } else {
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) return false;
    const double root = std::sqrt(disc);
    radial = {(-qb - root) / (2.0 * qa), (-qb + root) / (2.0 * qa)};
  }

  const Interval vertical = slab(s.a.z, d.z, body.base.z, body.base.z + body.height);
  const Interval hit = intersect(radial, vertical);
  if (hit.empty()) return false;
  // Open segment: t in (0, 1).
  return hit.hi > 0.0 && hit.lo < 1.0;
}

Point3 mirror_image(const Point3& p, const WallGrid& wall) {
  return p - wall.normal() * (2.0 * wall.signed_distance(p));
}

std::optional<Point3> specular_point_on_plane(const Point3& led, const Point3& pd,
                                              const WallGrid& wall) {
  const double s_led = wall.signed_distance(led);
  const double s_pd = wall.signed_distance(pd);
  if (!(s_led > 0.0) || !(s_pd > 0.0)) return std::nullopt;
  const Point3 image = mirror_image(pd, wall);
  // The image sits at -s_pd, so the crossing fraction is s_led / (s_led + s_pd).
  const double t = s_led / (s_led + s_pd);
  Point3 q = led + (image - led) * t;
  // Snap onto the plane to remove rounding in the normal direction.
  q = q - wall.normal() * wall.signed_distance(q);
  return q;
}

std::optional<SpecularHit> specular_point(const Point3& led, const Point3& pd,
                                          const WallGrid& wall) {
  const auto q = specular_point_on_plane(led, pd, wall);
  if (!q) return std::nullopt;
  const auto k = wall.locate(*q);
  if (!k) return std::nullopt;
  return SpecularHit{*q, *k};
}

namespace {

void check_coverage_inputs(double z_led, double z_user, double psi) {
  if (!(psi > 0.0 && psi < kPi / 2.0))
    throw std::invalid_argument("FoV semi-angle must lie strictly between 0 and 90 degrees");
  if (!(z_user < z_led)) throw std::invalid_argument("receiver must sit below the LED");
}

}  // namespace

double coverage_limit(ReflectorMode mode, double led_x, double z_led, double z_user,
                      double psi) {
  check_coverage_inputs(z_led, z_user, psi);
  const double oris_reach = (z_led - z_user) * std::tan(psi);
  switch (mode) {
    case ReflectorMode::oris:
      return oris_reach;
    case ReflectorMode::mirror: {
      // Reflection point of the steepest accepted ray: z_k = z_led - led_x / tan(psi).
      const double z_k = z_led - led_x / std::tan(psi);
      const double reach = (z_user - z_k) / -std::tan(kPi / 2.0 - psi);
      return std::max(0.0, reach);
    }
    case ReflectorMode::none:
      return 0.0;
  }
  return 0.0;
}

double coverage_raytrace(ReflectorMode mode, double led_x, double z_led, double z_user,
                         double psi, const RayTraceSetup& setup) {
  check_coverage_inputs(z_led, z_user, psi);
  if (mode == ReflectorMode::none) return 0.0;

  double reach = -1.0;
  for (int i = 1; i < setup.rays; ++i) {
    const double theta = (kPi / 2.0) * i / setup.rays;  // from the downward vertical
    // Travel toward the wall at x = 0 along (-sin, -cos).
    const double z_wall = led_x > 0.0 ? z_led - led_x * std::cos(theta) / std::sin(theta) : z_led;
    if (z_wall < 0.0 || z_wall > setup.wall_height || z_wall <= z_user) continue;

    if (mode == ReflectorMode::mirror) {
      // Specular bounce keeps the vertical component, so incidence equals theta.
      if (theta > psi) break;
      reach = std::max(reach, (z_wall - z_user) * std::tan(theta));
    } else {
      // A steerable element can send the ray anywhere inside the receiver FoV.
      reach = std::max(reach, (z_wall - z_user) * std::tan(psi));
    }
  }
  if (reach < 0.0) return 0.0;
  reach = std::min(reach, setup.room_depth);
  return std::floor(reach / setup.cell + 1e-9) * setup.cell;
}

}  // namespace vlcoris
