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

#include "vlcoris/metrics.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "vlcoris/scene.hpp"

namespace vlcoris {

double snr_direct(std::span<const double> power, const Assignment& beta, const ChannelMatrix& cm,
                  const NoiseModel& noise, double responsivity) {
  double s = 0.0;
  for (int l = 0; l < cm.leds; ++l) s += power[l] * overall_gain(cm, l, beta);
  const double a = responsivity * s;
  return a * a / noise.power();
}

LinearizedProducts LinearizedProducts::from(std::span<const double> power,
                                            const Assignment& beta) {
  LinearizedProducts out(beta.leds(), beta.elements());
  for (int l = 0; l < beta.leds(); ++l)
    for (int k = 0; k < beta.elements(); ++k)
      if (beta.get(l, k)) out.set(l, k, power[l]);
  return out;
}

double snr_linearized(std::span<const double> power, const LinearizedProducts& products,
                      const ChannelMatrix& cm, const NoiseModel& noise, double responsivity) {
  const int L = cm.leds;
  const int K = cm.elements;
  const int KX = K + 1;  // reflector elements plus the lumped other walls

  std::vector<double> r_los(L, 0.0);
  std::vector<double> r_nlos(std::size_t(L) * KX, 0.0);  // already multiplied by I_lk
  for (int l = 0; l < L; ++l) {
    r_los[l] = cm.los_clear[l] ? power[l] * cm.los[l] : 0.0;
    for (int k = 0; k < K; ++k) {
      const std::size_t i = cm.at(l, k);
      if (!cm.nlos_clear[i]) continue;
      r_nlos[std::size_t(l) * KX + k] =
          power[l] * cm.wall[i] + products.at(l, k) * (cm.spec[i] - cm.wall[i]);
    }
    r_nlos[std::size_t(l) * KX + K] = power[l] * cm.fixed_diffuse[l];
  }
  auto nlos = [&](int l, int k) { return r_nlos[std::size_t(l) * KX + k]; };

  std::vector<double> nlos_sum(L, 0.0);
  for (int l = 0; l < L; ++l)
    for (int k = 0; k < KX; ++k) nlos_sum[l] += nlos(l, k);

  double own_los = 0.0;
  double own_nlos_sq = 0.0;
  double own_nlos_pairs = 0.0;
  double own_los_nlos = 0.0;
  for (int l = 0; l < L; ++l) {
    own_los += r_los[l] * r_los[l];
    for (int k = 0; k < KX; ++k) own_nlos_sq += nlos(l, k) * nlos(l, k);
    for (int k2 = 1; k2 < KX; ++k2) {
      const double b = nlos(l, k2);
      if (b == 0.0) continue;
      for (int k1 = 0; k1 < k2; ++k1) own_nlos_pairs += nlos(l, k1) * b;
    }
    own_los_nlos += r_los[l] * nlos_sum[l];
  }

  double cross_los = 0.0;
  double cross_los_nlos = 0.0;
  double cross_nlos_los = 0.0;
  double cross_nlos = 0.0;
  for (int l2 = 1; l2 < L; ++l2) {
    for (int l1 = 0; l1 < l2; ++l1) {
      cross_los += r_los[l1] * r_los[l2];
      cross_los_nlos += r_los[l1] * nlos_sum[l2];
      cross_nlos_los += r_los[l2] * nlos_sum[l1];
      cross_nlos += nlos_sum[l1] * nlos_sum[l2];
    }
  }

  const double braces = own_los + own_nlos_sq + 2.0 * own_nlos_pairs + 2.0 * own_los_nlos +
                        2.0 * cross_los + 2.0 * cross_los_nlos + 2.0 * cross_nlos_los +
                        2.0 * cross_nlos;
  return responsivity * responsivity * braces / noise.power();
}

namespace {

double distance_to_element(const Point3& p, const WallGrid& wall, int k) {
  const double s = wall.signed_distance(p);
  const Point3 foot = p - wall.normal() * s;
  return (p - wall.clamp_to_element(k, foot)).norm();
}

double element_bottom(const WallGrid& wall, int k) { return (k / wall.ky()) * wall.cell_height(); }

}  // namespace

double big_m(const Scene& scene) {
  const SensingGrid grid = SensingGrid::build(scene.room, scene.leds, scene.receiver.area,
                                              scene.sensing_height, scene.sensing_spacing);
  const double a = scene.receiver.area;
  const double zu = scene.device_height;
  double amplitude = 0.0;
  for (int l = 0; l < scene.led_count(); ++l) {
    const Luminaire& led = scene.leds[l];
    double g_max = 0.0;
    for (std::size_t n = 0; n < grid.size(); ++n) g_max = std::max(g_max, grid.gain(n, l));
    if (!(g_max > 0.0)) continue;
    const double p_cap = scene.lighting.e_max * a / (scene.lighting.efficacy * g_max);

    const double m = led.lambert_order();
    const double c = (m + 1.0) * a / (2.0 * kPi);
    const double dz = led.position.z - zu;
    double h = c / (dz * dz);

    for (const WallGrid& w : scene.walls()) {
      const bool reflector = w.id() == scene.reflector_wall;
      for (int k = 0; k < w.size(); ++k) {
        const Point3 center = w.element_center(k);
        double bound = 0.0;
        if (center.z > zu) {
          const double d1 = (center - led.position).norm();
          const double vz = center.z - zu;
          bound = scene.reflectance.diffuse * c * w.element_area() / (d1 * d1 * vz * vz);
        }
        if (reflector && element_bottom(w, k) + w.cell_height() > zu) {
          const double d1 = distance_to_element(led.position, w, k);
          const double d2 = std::max(element_bottom(w, k) - zu, 0.0);
          bound = std::max(bound, scene.reflectance.specular * c / ((d1 + d2) * (d1 + d2)));
        }
        h += bound;
      }
    }
    amplitude += p_cap * h;
  }
  const double s = scene.receiver.responsivity * amplitude;
  return s * s / scene.noise.power();
}

double energy_efficiency(double gamma, std::span<const double> power, double bandwidth,
                         double gamma_th) {
  if (gamma < gamma_th) return 0.0;
  double total = 0.0;
  for (double p : power) total += p;
  if (!(total > 0.0)) throw std::invalid_argument("served link with zero total optical power");
  return bandwidth / 2.0 * std::log2(1.0 + std::numbers::e / (2.0 * kPi) * gamma) / total;
}

}  // namespace vlcoris
