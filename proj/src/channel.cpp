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

#include "vlcoris/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "vlcoris/scene.hpp"

namespace vlcoris {

double lambert_order(double half_power_angle) {
  const double c = std::cos(half_power_angle);
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("half-power angle must lie in (0, 90) degrees");
  return -1.0 / std::log2(c);
}

namespace {

// Two-hop geometry LED -> q -> PD.
struct TwoHop {
  double d1 = 0.0;
  double d2 = 0.0;
  double cos_irr = 0.0;  // emission angle at the LED, from its downward axis
  double cos_inc = 0.0;  // arrival angle at the PD, from its upward axis
};

TwoHop two_hop(const Point3& led, const Point3& q, const Point3& pd) {
  TwoHop h;
  h.d1 = (q - led).norm();
  h.d2 = (pd - q).norm();
  h.cos_irr = (led.z - q.z) / h.d1;
  h.cos_inc = (q.z - pd.z) / h.d2;
  return h;
}

bool accepted(double cos_inc, const Receiver& rx) {
  return cos_inc > 0.0 && cos_inc >= std::cos(rx.fov);
}

// Specular gain through reflection point q. At a true specular point the
// emission and arrival angles coincide, so cos^m(irr) * cos(inc) is the
// cos^(m+1) of the fixed-mirror form.
double specular_through(const Luminaire& led, const Point3& q, const Point3& pd,
                        const Receiver& rx, double reflectance) {
  const TwoHop h = two_hop(led.position, q, pd);
  if (!(h.cos_irr > 0.0) || !accepted(h.cos_inc, rx)) return 0.0;
  const double m = led.lambert_order();
  const double d = h.d1 + h.d2;
  return reflectance * (m + 1.0) * rx.area * std::pow(h.cos_irr, m) * h.cos_inc /
         (2.0 * kPi * d * d);
}

}  // namespace

double los_gain(const Luminaire& led, const Point3& pd, const Receiver& rx) {
  const Vec3 v = led.position - pd;
  const double d = v.norm();
  if (!(d > 0.0)) return 0.0;
  const double c = v.z / d;  // emission and arrival angles match for facing planes
  if (!accepted(c, rx)) return 0.0;
  const double m = led.lambert_order();
  return (m + 1.0) * rx.area * std::pow(c, m) * c / (2.0 * kPi * d * d);
}

double mirror_gain(const Luminaire& led, const WallGrid& wall, int k, const Point3& pd,
                   const Receiver& rx, double reflectance) {
  const auto q = specular_point_on_plane(led.position, pd, wall);
  if (!q) return 0.0;
  const auto hit = wall.locate(*q);
  if (!hit || *hit != k) return 0.0;
  return specular_through(led, wall.clamp_to_element(k, *q), pd, rx, reflectance);
}

double oris_gain(const Luminaire& led, const WallGrid& wall, int k, const Point3& pd,
                 const Receiver& rx, double reflectance) {
  const auto q = specular_point_on_plane(led.position, pd, wall);
  if (!q) return 0.0;
  return specular_through(led, wall.clamp_to_element(k, *q), pd, rx, reflectance);
}

double wall_gain(const Luminaire& led, const WallGrid& wall, int k, const Point3& pd,
                 const Receiver& rx, double reflectance) {
  const Point3 q = wall.element_center(k);
  const TwoHop h = two_hop(led.position, q, pd);
  if (!(h.cos_irr > 0.0) || !accepted(h.cos_inc, rx)) return 0.0;
  const double cos_wall_in = wall.normal().dot(led.position - q) / h.d1;
  const double cos_wall_out = wall.normal().dot(pd - q) / h.d2;
  if (!(cos_wall_in > 0.0) || !(cos_wall_out > 0.0)) return 0.0;
  const double m = led.lambert_order();
  return reflectance * (m + 1.0) * rx.area * wall.element_area() * std::pow(h.cos_irr, m) *
         cos_wall_in * cos_wall_out * h.cos_inc / (2.0 * kPi * h.d1 * h.d1 * h.d2 * h.d2);
}

double overall_gain(const ChannelMatrix& cm, int l, std::span<const std::uint8_t> beta_row) {
  double h = cm.los_clear[l] ? cm.los[l] : 0.0;
  for (int k = 0; k < cm.elements; ++k) {
    const std::size_t i = cm.at(l, k);
    if (!cm.nlos_clear[i]) continue;
    h += beta_row[k] ? cm.spec[i] : cm.wall[i];
  }
  return h + cm.fixed_diffuse[l];
}

double overall_gain(const ChannelMatrix& cm, int l, const Assignment& beta) {
  return overall_gain(cm, l, beta.row(l));
}

namespace {

bool path_clear(const Point3& led, const Point3& q, const Point3& pd, const BodyCylinder& body) {
  return !segment_blocked({led, q}, body) && !segment_blocked({q, pd}, body);
}

}  // namespace

ChannelMatrix build_channel(const Scene& scene, const UserPose& user, ReflectorMode mode) {
  const WallGrid reflector = scene.reflector_grid();
  const int L = scene.led_count();
  const int K = reflector.size();
  ChannelMatrix cm(L, K);
  const Receiver& rx = scene.receiver;
  const Reflectance& rf = scene.reflectance;

  for (int l = 0; l < L; ++l) {
    const Luminaire& led = scene.leds[l];
    cm.los[l] = los_gain(led, user.pd, rx);
    cm.los_clear[l] = segment_blocked({led.position, user.pd}, user.body) ? 0 : 1;

    const auto q = specular_point_on_plane(led.position, user.pd, reflector);
    const auto q_cell = q ? reflector.locate(*q) : std::nullopt;
    for (int k = 0; k < K; ++k) {
      const std::size_t i = cm.at(l, k);
      const Point3 c = reflector.element_center(k);
      cm.nlos_clear[i] = path_clear(led.position, c, user.pd, user.body) ? 1 : 0;
      cm.wall[i] = wall_gain(led, reflector, k, user.pd, rx, rf.diffuse);
      if (!q) continue;
      if (mode == ReflectorMode::oris ||
          (mode == ReflectorMode::mirror && q_cell && *q_cell == k)) {
        cm.spec[i] = specular_through(led, reflector.clamp_to_element(k, *q), user.pd, rx,
                                      rf.specular);
      }
    }

    double fixed = 0.0;
    for (const WallGrid& w : scene.walls()) {
      if (w.id() == scene.reflector_wall) continue;
      for (int k = 0; k < w.size(); ++k) {
        const double g = wall_gain(led, w, k, user.pd, rx, rf.diffuse);
        if (g > 0.0 && path_clear(led.position, w.element_center(k), user.pd, user.body))
          fixed += g;
      }
    }
    cm.fixed_diffuse[l] = fixed;
  }
  return cm;
}

}  // namespace vlcoris
