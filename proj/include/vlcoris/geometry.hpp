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

#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string_view>

namespace vlcoris {

inline constexpr double kPi = 3.14159265358979323846;

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr bool operator==(const Vec3&) const = default;

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
};

// Coordinates in meters, right-handed, floor at z = 0.
using Point3 = Vec3;

struct Segment {
  Point3 a;
  Point3 b;
};

// Vertical cylinder standing on the floor: the user's body.
struct BodyCylinder {
  Point3 base;
  double radius = 0.15;
  double height = 1.75;
};

struct UserPose {
  BodyCylinder body;
  Point3 pd;             // photodetector position
  double heading = 0.0;  // radians in [0, 2*pi)
};

enum class WallId { x0, x1, y0, y1 };

std::string_view to_string(WallId id);
std::optional<WallId> parse_wall_id(std::string_view text);

// Axis-aligned room [0, length] x [0, width] x [0, height].
struct Room {
  double length = 4.0;  // along x
  double width = 4.0;   // along y
  double height = 3.0;  // along z

  bool contains_xy(const Point3& p, double margin = 0.0) const {
    return p.x > margin && p.x < length - margin && p.y > margin && p.y < width - margin;
  }

  bool operator==(const Room&) const = default;
};

// One vertical wall partitioned into ky (horizontal) x kz (vertical) elements.
// Element index k = iz * ky + iy, with iz counted upward from the floor.
class WallGrid {
 public:
  WallGrid() = default;
  WallGrid(WallId id, const Room& room, int ky, int kz);

  WallId id() const { return id_; }
  int ky() const { return ky_; }
  int kz() const { return kz_; }
  int size() const { return ky_ * kz_; }
  double width() const { return width_; }
  double height() const { return height_; }
  double cell_width() const { return width_ / ky_; }
  double cell_height() const { return height_ / kz_; }
  double element_area() const { return cell_width() * cell_height(); }

  const Vec3& normal() const { return normal_; }  // unit, into the room
  const Vec3& u_axis() const { return u_axis_; }  // unit, horizontal along the wall

  // Signed distance from the wall plane, positive inside the room.
  double signed_distance(const Point3& p) const { return (p - origin_).dot(normal_); }

  // In-plane coordinates (u along the wall, v = z).
  std::array<double, 2> local(const Point3& p) const {
    const Vec3 d = p - origin_;
    return {d.dot(u_axis_), d.z};
  }
  Point3 from_local(double u, double v) const {
    return origin_ + u_axis_ * u + Vec3{0.0, 0.0, v};
  }

  Point3 element_center(int k) const;
  // Closest point of element k's rectangle to an in-plane point.
  Point3 clamp_to_element(int k, const Point3& on_plane) const;
  // Element containing the in-plane point, or nullopt outside the wall.
  std::optional<int> locate(const Point3& on_plane) const;

 private:
  WallId id_ = WallId::x0;
  Point3 origin_;
  Vec3 u_axis_{0.0, 1.0, 0.0};
  Vec3 normal_{1.0, 0.0, 0.0};
  double width_ = 0.0;
  double height_ = 0.0;
  int ky_ = 1;
  int kz_ = 1;
};

// True iff the open segment meets the closed cylinder (caps, lateral surface
// or interior). Tangential contact counts as blocked.
bool segment_blocked(const Segment& s, const BodyCylinder& body);

Point3 mirror_image(const Point3& p, const WallGrid& wall);

// Image-method reflection point on the unbounded wall plane. Requires both
// points strictly on the room side of the plane.
std::optional<Point3> specular_point_on_plane(const Point3& led, const Point3& pd,
                                              const WallGrid& wall);

struct SpecularHit {
  Point3 point;
  int element = 0;
};

// Reflection point that makes the irradiance angle at the LED equal the
// incidence angle at the photodetector, restricted to the wall rectangle.
std::optional<SpecularHit> specular_point(const Point3& led, const Point3& pd,
                                          const WallGrid& wall);

enum class ReflectorMode { none, mirror, oris };

std::string_view to_string(ReflectorMode mode);
std::optional<ReflectorMode> parse_reflector_mode(std::string_view text);

// Farthest wall-perpendicular user distance that still receives a reflected
// path, for a 2-D section with the LED at (led_x, z_led) and the receiver
// plane at z_user. Mirror values below zero are clamped to zero. Throws
// std::invalid_argument for psi outside (0, pi/2) or z_user >= z_led.
double coverage_limit(ReflectorMode mode, double led_x, double z_led, double z_user,
                      double psi);

struct RayTraceSetup {
  double wall_height = 3.0;
  double room_depth = std::numeric_limits<double>::infinity();  // floor extent scanned
  double cell = 0.01;  // user-position grid spacing
  int rays = 20000;
};

// Forward 2-D ray trace of the same quantity: rays leave the LED toward the
// wall, bounce (specularly for mirrors, steerably for ORIS) and land on the
// receiver plane. Returns the farthest covered user grid position, limited to
// the room depth.
double coverage_raytrace(ReflectorMode mode, double led_x, double z_led, double z_user,
                         double psi, const RayTraceSetup& setup = {});

}  // namespace vlcoris
