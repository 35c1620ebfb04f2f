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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vlcoris/assignment.hpp"
#include "vlcoris/channel.hpp"
#include "vlcoris/illumination.hpp"
#include "vlcoris/lp.hpp"
#include "vlcoris/metrics.hpp"

namespace vlcoris {

struct Scene;

enum class Approach { no_mirror, benchmark, mm, mp };

std::string_view to_string(Approach a);
std::optional<Approach> parse_approach(std::string_view text);

struct OptimizerConfig {
  int n_max = 128;       // reflector elements in use
  int t_max = 20;        // alternating iterations
  double delta = 1e-6;   // relative SNR change that counts as converged
  double epsilon = 1e-9; // weight of the resource term in the reported objective

  bool operator==(const OptimizerConfig&) const = default;
};

struct PowerAllocation {
  std::vector<double> power;  // W per LED
  double e_min = 0.0;         // lux

  double total() const {
    double s = 0.0;
    for (double p : power) s += p;
    return s;
  }
};

// User-independent state shared by every solve of one scene.
struct SolverContext {
  SensingGrid grid;
  IlluminationConstraints lighting;
  LinearProgram lighting_rows;
  PowerAllocation benchmark;
  NoiseModel noise;
  double responsivity = 1.0;
  OptimizerConfig config;

  // Throws InfeasibleError when no allocation satisfies the lighting rules.
  static SolverContext build(const Scene& scene, const OptimizerConfig& config);
};

struct SolveResult {
  Approach approach = Approach::no_mirror;
  int b = 0;
  double gamma = 0.0;
  std::vector<double> power;
  Assignment beta;
  int iterations = 0;
  bool converged = true;
  int mirrors_used = 0;
  double total_power = 0.0;
  double objective = 0.0;  // b - epsilon * resource
};

// Least total power meeting the lighting rules; among those, the allocation
// with the brightest darkest point. Throws InfeasibleError.
PowerAllocation benchmark_power(const SensingGrid& grid, const IlluminationConstraints& c);

// Greedy growth: add the best remaining (LED, element) pair until the SNR
// target is met, the element budget is spent or no positive candidate is left.
Assignment subroutine1_mm(const ChannelMatrix& cm, std::span<const double> power, double gamma_th,
                          int n_max, const NoiseModel& noise, double responsivity);

// One-shot selection of up to n_max best pairs, one LED per element.
Assignment subroutine1_mp(const ChannelMatrix& cm, std::span<const double> power, int n_max);

struct PowerStep {
  PowerAllocation allocation;
  int b = 0;
};

// Power allocation for a fixed assignment. MP: least power reaching the SNR
// target, falling back to the benchmark allocation. MM: largest received
// amplitude the lighting rules allow.
PowerStep subroutine2(Approach approach, const Assignment& beta, const ChannelMatrix& cm,
                      const SolverContext& ctx, double gamma_th);

SolveResult ao_solve(Approach approach, const ChannelMatrix& cm, const SolverContext& ctx,
                     double gamma_th);
SolveResult benchmark_solve(const ChannelMatrix& cm, const SolverContext& ctx, double gamma_th);
SolveResult no_mirror_solve(const ChannelMatrix& cm, const SolverContext& ctx, double gamma_th);

// Dispatch on the approach.
SolveResult solve(Approach approach, const ChannelMatrix& cm, const SolverContext& ctx,
                  double gamma_th);

inline constexpr double kOracleBudget = 1e6;

// Exhaustive search over every assignment obeying the element budget and
// exclusivity, with subroutine2 as the inner solver. approach is mm or mp.
// Throws BudgetError when (L + 1)^K exceeds kOracleBudget.
SolveResult oracle_solve(Approach approach, const ChannelMatrix& cm, const SolverContext& ctx,
                         double gamma_th);

}  // namespace vlcoris
