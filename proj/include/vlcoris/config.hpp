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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vlcoris/geometry.hpp"
#include "vlcoris/montecarlo.hpp"
#include "vlcoris/optimizer.hpp"
#include "vlcoris/scene.hpp"

namespace vlcoris {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kVersion = "0.1.0";

// Scenario file contents, field for field. Angles stay in degrees and SNR
// thresholds in dB here; conversion happens in to_scene() / to_plan().
struct RunConfig {
  Room room;
  std::vector<std::array<double, 3>> leds = {
      {1.0, 1.0, 3.0}, {1.0, 3.0, 3.0}, {3.0, 1.0, 3.0}, {3.0, 3.0, 3.0}};
  double led_half_power_deg = 80.0;
  int grid_ky = 30;
  int grid_kz = 15;
  ReflectorMode reflector_mode = ReflectorMode::oris;
  WallId oris_wall = WallId::x0;
  double pd_area = 1e-4;
  double responsivity = 1.0;
  double device_height = 1.0;
  Reflectance reflectance;
  NoiseModel noise;
  IlluminationConstraints lighting;
  double sensing_spacing = 0.25;
  double sensing_height = 1.0;
  BodyModel body;
  OptimizerConfig optimizer;
  std::vector<double> gamma_th_db = default_gamma_sweep();
  std::vector<double> psi_deg = {30.0, 40.0, 50.0};
  std::vector<Approach> approaches = {Approach::no_mirror, Approach::benchmark, Approach::mm,
                                      Approach::mp};
  int trials = 1000;
  std::uint64_t seed = 1;
  double heatmap_gamma_th_db = 40.0;
  std::string output_dir = "results";

  static std::vector<double> default_gamma_sweep();

  // Scene with the first psi as receiver FoV.
  Scene to_scene() const;
  RunPlan to_plan(int workers) const;

  // Throws ConfigError describing the first violated rule.
  void validate() const;

  bool operator==(const RunConfig&) const = default;
};

// Two LEDs, a 3 x 2 reflector grid and a coarse sensing lattice: small
// enough for exhaustive assignment search.
RunConfig tiny_config();

// Strict JSON schema: unknown keys and wrong types are ConfigError. Missing
// keys take the defaults above. The result is validated.
RunConfig parse_config(std::string_view json_text);
std::string dump_config(const RunConfig& config);
RunConfig load_config_file(const std::string& path);

// "start:step:stop" inclusive sweep; throws ConfigError on malformed input.
std::vector<double> parse_sweep(std::string_view text);

}  // namespace vlcoris
