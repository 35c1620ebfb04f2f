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

#include "vlcoris/scene.hpp"

#include <cmath>
#include <string>

#include "vlcoris/errors.hpp"

namespace vlcoris {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void Scene::validate() const {
  require(positive(room.length) && positive(room.width) && positive(room.height),
          "room dimensions must be positive");
  require(!leds.empty(), "at least one LED is required");
  for (const Luminaire& led : leds) {
    const Point3& p = led.position;
    require(std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z),
            "LED coordinates must be finite");
    require(p.x > 0.0 && p.x < room.length && p.y > 0.0 && p.y < room.width && p.z > 0.0 &&
                p.z <= room.height,
            "LED outside the room");
    require(led.half_power_angle > 0.0 && led.half_power_angle < kPi / 2.0,
            "LED half-power angle must lie in (0, 90) degrees");
    require(p.z > device_height, "LEDs must hang above the receiver plane");
  }
  require(positive(receiver.area), "photodetector area must be positive");
  require(receiver.fov > 0.0 && receiver.fov < kPi / 2.0,
          "receiver FoV semi-angle must lie in (0, 90) degrees");
  require(positive(receiver.responsivity), "responsivity must be positive");
  require(positive(device_height) && device_height < room.height,
          "device height must lie inside the room");
  require(positive(reflectance.diffuse) && reflectance.diffuse <= 1.0,
          "wall reflectance must lie in (0, 1]");
  require(positive(reflectance.specular) && reflectance.specular <= 1.0,
          "specular reflectance must lie in (0, 1]");
  require(grid_ky >= 1 && grid_kz >= 1, "wall grid needs at least one element per axis");
  require(positive(body.radius) && positive(body.height), "body cylinder must have positive size");
  require(std::isfinite(body.device_offset) && body.device_offset >= 0.0,
          "device offset must be non-negative");
  require(2.0 * body.radius < room.length && 2.0 * body.radius < room.width,
          "body does not fit in the room");
  require(body.device_offset < room.length / 2.0 && body.device_offset < room.width / 2.0,
          "device offset too large for the room");
  require(positive(noise.psd) && positive(noise.bandwidth), "noise parameters must be positive");
  require(positive(lighting.e_th) && lighting.e_th <= lighting.e_max,
          "illuminance limits must satisfy 0 < E_th <= E_max");
  require(positive(lighting.u_min) && lighting.u_min <= 1.0, "uniformity must lie in (0, 1]");
  require(positive(lighting.efficacy), "luminous efficacy must be positive");
  require(positive(sensing_spacing), "sensing spacing must be positive");
  require(std::isfinite(sensing_height) && sensing_height >= 0.0,
          "sensing plane height must be non-negative");
  for (const Luminaire& led : leds)
    require(led.position.z > sensing_height, "LEDs must hang above the sensing plane");
}

}  // namespace vlcoris
