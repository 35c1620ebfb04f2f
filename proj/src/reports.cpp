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

#include "vlcoris/reports.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "vlcoris/errors.hpp"
#include "vlcoris/montecarlo.hpp"
#include "vlcoris/optimizer.hpp"
#include "vlcoris/random.hpp"

namespace vlcoris {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string coverage_csv(const std::vector<double>& psi_deg, const std::vector<double>& led_x,
                         double z_led, double z_user, const RayTraceSetup& setup) {
  std::string out = "mode,psi_deg,led_x,theory_m,raytrace_m\n";
  for (ReflectorMode mode : {ReflectorMode::mirror, ReflectorMode::oris}) {
    for (double p : psi_deg) {
      for (double x : led_x) {
        const double psi = deg_to_rad(p);
        const double theory = coverage_limit(mode, x, z_led, z_user, psi);
        const double traced = coverage_raytrace(mode, x, z_led, z_user, psi, setup);
        out += std::string(to_string(mode)) + "," + fmt(p) + "," + fmt(x) + "," + fmt(theory) +
               "," + fmt(traced) + "\n";
      }
    }
  }
  return out;
}

std::string OracleReport::to_json() const {
  using nlohmann::json;
  const char* names[2] = {"mm", "mp"};
  json rows_j = json::array();
  for (const OracleRow& r : rows) {
    json j;
    j["instance"] = r.instance;
    j["gamma_th_db"] = r.gamma_th_db;
    j["assignments_enumerated"] = r.assignments;
    for (int a = 0; a < 2; ++a) {
      j[names[a]] = {{"oracle", {{"b", r.oracle_b[a]},
                                 {"mirrors", r.oracle_mirrors[a]},
                                 {"total_power_w", r.oracle_power[a]},
                                 {"objective", r.oracle_objective[a]}}},
                     {"heuristic", {{"b", r.heuristic_b[a]},
                                    {"mirrors", r.heuristic_mirrors[a]},
                                    {"total_power_w", r.heuristic_power[a]},
                                    {"objective", r.heuristic_objective[a]}}}};
    }
    rows_j.push_back(std::move(j));
  }
  json root;
  root["instances"] = rows.size();
  root["b_agreement"] = {{"mm", b_agreement[0]}, {"mp", b_agreement[1]}};
  root["mirrors_below_oracle_minimum"] = mirrors_below_minimum;
  root["oracle_dominance_violations"] = oracle_dominance_violations;
  root["rows"] = rows_j;
  return root.dump(2) + "\n";
}

OracleReport oracle_validate(const RunConfig& tiny, int instances, std::uint64_t seed) {
  tiny.validate();
  if (instances < 0) throw std::invalid_argument("instance count must be non-negative");
  const Scene scene = tiny.to_scene();
  const int L = scene.led_count();
  const int K = scene.grid_ky * scene.grid_kz;
  const double space = std::pow(double(L + 1), K);
  if (space > kOracleBudget) {
    int k_allowed = 0;
    while (std::pow(double(L + 1), k_allowed + 1) <= kOracleBudget) ++k_allowed;
    throw BudgetError("oracle search space (" + std::to_string(L + 1) + ")^" + std::to_string(K) +
                      " exceeds the budget of 1e6 assignments; reduce the wall grid to at most " +
                      std::to_string(k_allowed) + " elements for " + std::to_string(L) + " LEDs");
  }
  const SolverContext ctx = SolverContext::build(scene, tiny.optimizer);

  OracleReport rep;
  int agree[2] = {0, 0};
  for (int i = 0; i < instances; ++i) {
    Philox4x32 rng(seed, static_cast<std::uint64_t>(i));
    const UserPose pose = sample_user(rng, scene.room, scene.body, scene.device_height);
    OracleRow row;
    row.instance = i;
    row.gamma_th_db = 20.0 + 30.0 * rng.uniform01();
    const double gamma_th = db_to_linear(row.gamma_th_db);
    const ChannelMatrix cm = build_channel(scene, pose, tiny.reflector_mode);
    for (int a = 0; a < 2; ++a) {
      const Approach approach = a == 0 ? Approach::mm : Approach::mp;
      const SolveResult exact = oracle_solve(approach, cm, ctx, gamma_th);
      const SolveResult heur = ao_solve(approach, cm, ctx, gamma_th);
      row.assignments = exact.iterations;
      row.oracle_b[a] = exact.b;
      row.oracle_mirrors[a] = exact.mirrors_used;
      row.oracle_power[a] = exact.total_power;
      row.oracle_objective[a] = exact.objective;
      row.heuristic_b[a] = heur.b;
      row.heuristic_mirrors[a] = heur.mirrors_used;
      row.heuristic_power[a] = heur.total_power;
      row.heuristic_objective[a] = heur.objective;
      agree[a] += exact.b == heur.b;
      if (heur.objective > exact.objective + 1e-12 * (1.0 + std::abs(exact.objective)))
        ++rep.oracle_dominance_violations;
    }
    // The minimum-mirrors oracle holds the fewest elements any served link needs.
    if (row.oracle_b[0] == 1) {
      bool below = false;
      for (int a = 0; a < 2; ++a)
        if (row.heuristic_b[a] == 1 && row.heuristic_mirrors[a] < row.oracle_mirrors[0]) below = true;
      rep.mirrors_below_minimum += below;
    }
    rep.rows.push_back(row);
  }
  for (int a = 0; a < 2; ++a)
    rep.b_agreement[a] = instances ? double(agree[a]) / double(instances) : 1.0;
  return rep;
}

}  // namespace vlcoris
