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
#include <vector>

#include "vlcoris/channel.hpp"
#include "vlcoris/geometry.hpp"
#include "vlcoris/illumination.hpp"
#include "vlcoris/metrics.hpp"

namespace vlcoris {

struct BodyModel {
  double radius = 0.15;
  double height = 1.75;
  double device_offset = 0.3;  // horizontal axis-to-photodetector distance

  bool operator==(const BodyModel&) const = default;
};

// Physical description of the room and the link. Defaults reproduce the
// reference office scenario: 4 x 4 x 3 m, 2 x 2 LED lattice, 30 x 15 grid per
// wall, reflectors on the x = 0 wall.
struct Scene {
  Room room;
  std::vector<Luminaire> leds = {
      {{1.0, 1.0, 3.0}}, {{1.0, 3.0, 3.0}}, {{3.0, 1.0, 3.0}}, {{3.0, 3.0, 3.0}}};
  Receiver receiver;
  double device_height = 1.0;
  Reflectance reflectance;
  WallId reflector_wall = WallId::x0;
  int grid_ky = 30;
  int grid_kz = 15;
  BodyModel body;
  NoiseModel noise;
  IlluminationConstraints lighting;
  double sensing_spacing = 0.25;
  double sensing_height = 1.0;

  int led_count() const { return static_cast<int>(leds.size()); }
  WallGrid wall(WallId id) const { return WallGrid(id, room, grid_ky, grid_kz); }
  WallGrid reflector_grid() const { return wall(reflector_wall); }
  std::array<WallGrid, 4> walls() const {
    return {wall(WallId::x0), wall(WallId::x1), wall(WallId::y0), wall(WallId::y1)};
  }

  Scene with_fov(double fov) const {
    Scene s = *this;
    s.receiver.fov = fov;
    return s;
  }

  // Throws ConfigError on physically meaningless parameters.
  void validate() const;
};

}  // namespace vlcoris
