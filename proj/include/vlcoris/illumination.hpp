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

#include <cstddef>
#include <span>
#include <vector>

#include "vlcoris/channel.hpp"
#include "vlcoris/geometry.hpp"
#include "vlcoris/lp.hpp"

namespace vlcoris {

struct IlluminationConstraints {
  double e_th = 500.0;      // minimum average illuminance, lux
  double e_max = 800.0;     // per-point cap, lux
  double u_min = 0.5;       // minimum uniformity
  double efficacy = 280.0;  // lm/W

  bool operator==(const IlluminationConstraints&) const = default;
};

// Closed rectangular lattice of work-plane points with their unblocked LoS
// gains. Illuminance is measured with a cosine sensor over the full upper
// hemisphere, independent of the communication receiver's FoV.
class SensingGrid {
 public:
  SensingGrid() = default;
  static SensingGrid build(const Room& room, std::span<const Luminaire> leds, double pd_area,
                           double plane_height, double spacing);

  std::size_t size() const { return points_.size(); }
  int leds() const { return leds_; }
  double pd_area() const { return pd_area_; }
  double spacing() const { return spacing_; }
  double plane_height() const { return plane_height_; }
  const Point3& point(std::size_t n) const { return points_[n]; }
  double gain(std::size_t n, int l) const { return gains_[n * leds_ + l]; }

 private:
  std::vector<Point3> points_;
  std::vector<double> gains_;  // N x L
  int leds_ = 0;
  double pd_area_ = 1e-4;
  double spacing_ = 0.25;
  double plane_height_ = 1.0;
};

// Illuminance at sensing point n. Throws std::out_of_range for a bad index.
double illuminance_point(std::span<const double> power, const SensingGrid& grid, std::size_t n,
                         double efficacy);

struct IlluminationSummary {
  double average = 0.0;
  double minimum = 0.0;
  double maximum = 0.0;
  double uniformity = 0.0;  // minimum / average, 0 when the room is dark
};

IlluminationSummary illumination_summary(std::span<const double> power, const SensingGrid& grid,
                                         double efficacy);

// All three lighting requirements, each with the given relative slack.
bool meets_lighting(const IlluminationSummary& s, const IlluminationConstraints& c,
                    double rel_slack = 1e-6);

// Inequalities over x = (P_0, ..., P_{L-1}, E_min):
//   row 0      average illuminance >= E_th
//   row 1      E_min >= U_min * average
//   rows 2..   E_min <= E_v(n)       for every sensing point
//   then       E_v(n) <= E_max       for every sensing point
// 2N + 2 rows; non-negativity comes from the LP variable bounds.
LinearProgram constraint_rows(const SensingGrid& grid, const IlluminationConstraints& c);

}  // namespace vlcoris
