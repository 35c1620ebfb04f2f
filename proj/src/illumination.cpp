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

#include "vlcoris/illumination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vlcoris {

namespace {

int lattice_count(double extent, double spacing) {
  return static_cast<int>(std::floor(extent / spacing + 1e-9)) + 1;
}

}  // namespace

SensingGrid SensingGrid::build(const Room& room, std::span<const Luminaire> leds, double pd_area,
                               double plane_height, double spacing) {
  if (!(spacing > 0.0)) throw std::invalid_argument("sensing spacing must be positive");
  SensingGrid g;
  g.leds_ = static_cast<int>(leds.size());
  g.pd_area_ = pd_area;
  g.spacing_ = spacing;
  g.plane_height_ = plane_height;

  Receiver sensor;
  sensor.area = pd_area;
  sensor.fov = kPi / 2.0;

  const int nx = lattice_count(room.length, spacing);
  const int ny = lattice_count(room.width, spacing);
  g.points_.reserve(std::size_t(nx) * ny);
  g.gains_.reserve(std::size_t(nx) * ny * leds.size());
  for (int ix = 0; ix < nx; ++ix) {
    for (int iy = 0; iy < ny; ++iy) {
      const Point3 p{ix * spacing, iy * spacing, plane_height};
      g.points_.push_back(p);
      for (const Luminaire& led : leds) g.gains_.push_back(los_gain(led, p, sensor));
    }
  }
  return g;
}

double illuminance_point(std::span<const double> power, const SensingGrid& grid, std::size_t n,
                         double efficacy) {
  if (n >= grid.size()) throw std::out_of_range("sensing point index out of range");
  double s = 0.0;
  for (int l = 0; l < grid.leds(); ++l) s += power[l] * grid.gain(n, l);
  return efficacy / grid.pd_area() * s;
}

IlluminationSummary illumination_summary(std::span<const double> power, const SensingGrid& grid,
                                         double efficacy) {
  IlluminationSummary s;
  if (grid.size() == 0) return s;
  s.minimum = std::numeric_limits<double>::infinity();
  s.maximum = -std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const double e = illuminance_point(power, grid, n, efficacy);
    total += e;
    s.minimum = std::min(s.minimum, e);
    s.maximum = std::max(s.maximum, e);
  }
  s.average = total / static_cast<double>(grid.size());
  s.uniformity = s.average > 0.0 ? s.minimum / s.average : 0.0;
  return s;
}

bool meets_lighting(const IlluminationSummary& s, const IlluminationConstraints& c,
                    double rel_slack) {
  return s.average >= c.e_th * (1.0 - rel_slack) && s.maximum <= c.e_max * (1.0 + rel_slack) &&
         s.uniformity >= c.u_min * (1.0 - rel_slack);
}

LinearProgram constraint_rows(const SensingGrid& grid, const IlluminationConstraints& c) {
  const int L = grid.leds();
  const std::size_t N = grid.size();
  const double scale = c.efficacy / grid.pd_area();
  LinearProgram lp(L + 1);
  std::vector<double> row(L + 1, 0.0);

  std::vector<double> mean(L, 0.0);
  for (std::size_t n = 0; n < N; ++n)
    for (int l = 0; l < L; ++l) mean[l] += scale * grid.gain(n, l);
  for (int l = 0; l < L; ++l) mean[l] /= static_cast<double>(N);

  // average >= E_th
  for (int l = 0; l < L; ++l) row[l] = -mean[l];
  row[L] = 0.0;
  lp.add_row(row, -c.e_th);

  // U_min * average - E_min <= 0
  for (int l = 0; l < L; ++l) row[l] = c.u_min * mean[l];
  row[L] = -1.0;
  lp.add_row(row, 0.0);

  // E_min - E_v(n) <= 0
  for (std::size_t n = 0; n < N; ++n) {
    for (int l = 0; l < L; ++l) row[l] = -scale * grid.gain(n, l);
    row[L] = 1.0;
    lp.add_row(row, 0.0);
  }

  // E_v(n) <= E_max
  for (std::size_t n = 0; n < N; ++n) {
    for (int l = 0; l < L; ++l) row[l] = scale * grid.gain(n, l);
    row[L] = 0.0;
    lp.add_row(row, c.e_max);
  }
  return lp;
}

}  // namespace vlcoris
