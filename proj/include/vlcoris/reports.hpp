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
#include <string>
#include <vector>

#include "vlcoris/config.hpp"
#include "vlcoris/geometry.hpp"

namespace vlcoris {

// mode,psi_deg,led_x,theory_m,raytrace_m rows for both reflector kinds.
std::string coverage_csv(const std::vector<double>& psi_deg, const std::vector<double>& led_x,
                         double z_led, double z_user, const RayTraceSetup& setup = {});

struct OracleRow {
  int instance = 0;
  double gamma_th_db = 0.0;
  long long assignments = 0;  // enumerated by the oracle
  // [0] minimum-mirrors objective, [1] minimum-power objective
  int oracle_b[2] = {0, 0};
  int oracle_mirrors[2] = {0, 0};
  double oracle_power[2] = {0.0, 0.0};
  double oracle_objective[2] = {0.0, 0.0};
  int heuristic_b[2] = {0, 0};
  int heuristic_mirrors[2] = {0, 0};
  double heuristic_power[2] = {0.0, 0.0};
  double heuristic_objective[2] = {0.0, 0.0};
};

struct OracleReport {
  std::vector<OracleRow> rows;
  double b_agreement[2] = {0.0, 0.0};
  // Instances where a served heuristic used fewer elements than the oracle's
  // minimum for a served link.
  int mirrors_below_minimum = 0;
  // Instances where the heuristic objective beat the oracle.
  int oracle_dominance_violations = 0;

  std::string to_json() const;
};

// Random user poses and thresholds in [20, 50] dB on a scene small enough for
// exhaustive search. Throws BudgetError when (L + 1)^K exceeds the oracle
// budget, naming the reduction required.
OracleReport oracle_validate(const RunConfig& tiny, int instances, std::uint64_t seed);

}  // namespace vlcoris
