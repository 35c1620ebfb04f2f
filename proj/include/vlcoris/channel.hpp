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

#include <cstdint>
#include <span>
#include <vector>

#include "vlcoris/assignment.hpp"
#include "vlcoris/geometry.hpp"

namespace vlcoris {

// m = -1 / log2(cos(half_power_angle)).
double lambert_order(double half_power_angle);

// Point-source LED facing straight down.
struct Luminaire {
  Point3 position;
  double half_power_angle = deg_to_rad(80.0);

  double lambert_order() const { return vlcoris::lambert_order(half_power_angle); }
};

// Upward-facing photodetector.
struct Receiver {
  double area = 1e-4;          // m^2
  double fov = deg_to_rad(50.0);
  double responsivity = 1.0;   // A/W
};

struct Reflectance {
  double diffuse = 0.2;    // plain wall
  double specular = 0.99;  // mirror or ORIS element

  bool operator==(const Reflectance&) const = default;
};

// Direct Lambertian gain; zero outside the receiver FoV.
double los_gain(const Luminaire& led, const Point3& pd, const Receiver& rx);

// Fixed mirror element k: non-zero only when the image-method reflection point
// falls inside element k and reaches the receiver within its FoV.
double mirror_gain(const Luminaire& led, const WallGrid& wall, int k, const Point3& pd,
                   const Receiver& rx, double reflectance);

// Steerable mirror element k, reflecting at the point of the element closest to
// the geometric specular point.
double oris_gain(const Luminaire& led, const WallGrid& wall, int k, const Point3& pd,
                 const Receiver& rx, double reflectance);

// Diffuse first-bounce gain through element k, lumped at the element center.
double wall_gain(const Luminaire& led, const WallGrid& wall, int k, const Point3& pd,
                 const Receiver& rx, double reflectance);

inline double nlos_gain(double wall, double specular, bool beta) {
  return wall + (specular - wall) * (beta ? 1.0 : 0.0);
}

// Pre-blockage gains for one user; indicators stored separately.
struct ChannelMatrix {
  int leds = 0;
  int elements = 0;  // elements of the reflector-capable wall
  std::vector<double> los;                // L
  std::vector<std::uint8_t> los_clear;    // L, 1 when the LoS path is unobstructed
  std::vector<double> wall;               // L x K diffuse gains
  std::vector<double> spec;               // L x K specular gains (mirror or ORIS)
  std::vector<std::uint8_t> nlos_clear;   // L x K
  // Blockage-masked diffuse sum over the walls that cannot host reflectors.
  std::vector<double> fixed_diffuse;      // L

  ChannelMatrix() = default;
  ChannelMatrix(int l, int k)
      : leds(l), elements(k), los(l, 0.0), los_clear(l, 1), wall(std::size_t(l) * k, 0.0),
        spec(std::size_t(l) * k, 0.0), nlos_clear(std::size_t(l) * k, 1), fixed_diffuse(l, 0.0) {}

  std::size_t at(int l, int k) const { return static_cast<std::size_t>(l) * elements + k; }
};

// Blockage-masked overall gain of LED l for one row of the assignment.
double overall_gain(const ChannelMatrix& cm, int l, std::span<const std::uint8_t> beta_row);
double overall_gain(const ChannelMatrix& cm, int l, const Assignment& beta);

struct Scene;

// Gains and blockage indicators for one user pose. The receiver FoV comes
// from the scene's receiver.
ChannelMatrix build_channel(const Scene& scene, const UserPose& user, ReflectorMode mode);

}  // namespace vlcoris
