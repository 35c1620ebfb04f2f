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

#include <cmath>
#include <span>
#include <vector>

#include "vlcoris/assignment.hpp"
#include "vlcoris/channel.hpp"

namespace vlcoris {

struct NoiseModel {
  double psd = 2.5e-20;      // N0, W/Hz
  double bandwidth = 20e6;   // B, Hz

  double power() const { return psd * bandwidth; }
  bool operator==(const NoiseModel&) const = default;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

// gamma = (rho * sum_l P_l H_l(beta))^2 / (N0 B).
double snr_direct(std::span<const double> power, const Assignment& beta, const ChannelMatrix& cm,
                  const NoiseModel& noise, double responsivity);

// Products P_l * beta_lk that make the SNR polynomial at most quadratic.
class LinearizedProducts {
 public:
  LinearizedProducts() = default;
  LinearizedProducts(int leds, int elements)
      : leds_(leds), elements_(elements), values_(std::size_t(leds) * elements, 0.0) {}

  static LinearizedProducts from(std::span<const double> power, const Assignment& beta);

  int leds() const { return leds_; }
  int elements() const { return elements_; }
  double at(int l, int k) const { return values_[std::size_t(l) * elements_ + k]; }
  void set(int l, int k, double v) { values_[std::size_t(l) * elements_ + k] = v; }

 private:
  int leds_ = 0;
  int elements_ = 0;
  std::vector<double> values_;
};

// Same SNR, expanded into the eight quadratic and bilinear term families over
// (P, rho_lk): own LoS squares, own NLoS squares, own NLoS pairs, own
// LoS x NLoS, and the four cross-LED families. The diffuse lump from the
// non-reflector walls enters as one extra, always-diffuse element per LED.
double snr_linearized(std::span<const double> power, const LinearizedProducts& products,
                      const ChannelMatrix& cm, const NoiseModel& noise, double responsivity);

// 1 when the link is served (gamma >= gamma_th), 0 in outage.
inline int outage_flag(double gamma, double gamma_th) { return gamma >= gamma_th ? 1 : 0; }

struct Scene;

// Upper bound on gamma over every user position: each LED at the largest
// power its own per-point illuminance cap admits, LoS at the minimum vertical
// distance, and every element of the reflector wall acting as a specular path
// at its shortest possible length.
double big_m(const Scene& scene);

// (B/2) log2(1 + e/(2 pi) gamma) / sum P, or 0 in outage. Throws
// std::invalid_argument when the link is served with zero total power.
double energy_efficiency(double gamma, std::span<const double> power, double bandwidth,
                         double gamma_th);

}  // namespace vlcoris
