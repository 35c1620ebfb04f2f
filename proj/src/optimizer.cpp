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

#include "vlcoris/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vlcoris/errors.hpp"
#include "vlcoris/scene.hpp"

namespace vlcoris {

std::string_view to_string(Approach a) {
  switch (a) {
    case Approach::no_mirror: return "no-mirror";
    case Approach::benchmark: return "benchmark";
    case Approach::mm: return "mm";
    case Approach::mp: return "mp";
  }
  return "no-mirror";
}

std::optional<Approach> parse_approach(std::string_view text) {
  if (text == "no-mirror") return Approach::no_mirror;
  if (text == "benchmark") return Approach::benchmark;
  if (text == "mm") return Approach::mm;
  if (text == "mp") return Approach::mp;
  return std::nullopt;
}

PowerAllocation benchmark_power(const SensingGrid& grid, const IlluminationConstraints& c) {
  const int L = grid.leds();
  LinearProgram lp = constraint_rows(grid, c);
  for (int l = 0; l < L; ++l) lp.objective[l] = 1.0;
  const LpSolution first = lp_solve(lp);
  if (first.status != LpStatus::optimal)
    throw InfeasibleError("lighting constraints admit no power allocation");

  // Second stage: keep the minimum total, brighten the darkest point.
  std::vector<double> cap(L + 1, 0.0);
  for (int l = 0; l < L; ++l) cap[l] = 1.0;
  lp.add_row(cap, first.value * (1.0 + 1e-9));
  std::fill(lp.objective.begin(), lp.objective.end(), 0.0);
  lp.objective[L] = -1.0;
  const LpSolution second = lp_solve(lp);
  const LpSolution& best = second.status == LpStatus::optimal ? second : first;

  PowerAllocation out;
  out.power.assign(best.x.begin(), best.x.begin() + L);
  out.e_min = best.x[L];
  return out;
}

SolverContext SolverContext::build(const Scene& scene, const OptimizerConfig& config) {
  SolverContext ctx;
  ctx.grid = SensingGrid::build(scene.room, scene.leds, scene.receiver.area, scene.sensing_height,
                                scene.sensing_spacing);
  ctx.lighting = scene.lighting;
  ctx.lighting_rows = constraint_rows(ctx.grid, ctx.lighting);
  ctx.benchmark = benchmark_power(ctx.grid, ctx.lighting);
  ctx.noise = scene.noise;
  ctx.responsivity = scene.receiver.responsivity;
  ctx.config = config;
  return ctx;
}

namespace {

struct Candidate {
  int l = -1;
  int k = -1;
  double score = 0.0;
};

bool ranks_before(const Candidate& a, const Candidate& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.l != b.l) return a.l < b.l;
  return a.k < b.k;
}

// Every useful (LED, element) pair.
std::vector<Candidate> pair_candidates(const ChannelMatrix& cm, std::span<const double> power) {
  std::vector<Candidate> out;
  out.reserve(std::size_t(cm.leds) * cm.elements);
  for (int l = 0; l < cm.leds; ++l)
    for (int k = 0; k < cm.elements; ++k) {
      const std::size_t i = cm.at(l, k);
      const double s = cm.nlos_clear[i] ? cm.spec[i] * power[l] : 0.0;
      if (s > 0.0) out.push_back({l, k, s});
    }
  return out;
}

// One selection-sort step: removes the top-ranked pair and every other pair
// on the same element.
Candidate take_best(std::vector<Candidate>& pool) {
  std::size_t top = 0;
  for (std::size_t i = 1; i < pool.size(); ++i)
    if (ranks_before(pool[i], pool[top])) top = i;
  const Candidate c = pool[top];
  std::erase_if(pool, [&](const Candidate& o) { return o.k == c.k; });
  return c;
}

double amplitude(const ChannelMatrix& cm, std::span<const double> power, const Assignment& beta) {
  double s = 0.0;
  for (int l = 0; l < cm.leds; ++l) s += power[l] * overall_gain(cm, l, beta);
  return s;
}

}  // namespace

Assignment subroutine1_mm(const ChannelMatrix& cm, std::span<const double> power, double gamma_th,
                          int n_max, const NoiseModel& noise, double responsivity) {
  Assignment beta(cm.leds, cm.elements);
  double amp = amplitude(cm, power, beta);
  auto served = [&] {
    const double a = responsivity * amp;
    return a * a / noise.power() >= gamma_th;
  };
  if (served()) return beta;
  std::vector<Candidate> pool = pair_candidates(cm, power);
  int used = 0;
  while (!pool.empty() && used < n_max && !served()) {
    const Candidate c = take_best(pool);
    beta.set(c.l, c.k);
    const std::size_t i = cm.at(c.l, c.k);
    amp += power[c.l] * (cm.spec[i] - cm.wall[i]);
    ++used;
  }
  return beta;
}

Assignment subroutine1_mp(const ChannelMatrix& cm, std::span<const double> power, int n_max) {
  Assignment beta(cm.leds, cm.elements);
  std::vector<Candidate> pool = pair_candidates(cm, power);
  for (int used = 0; used < n_max && !pool.empty(); ++used) {
    const Candidate c = take_best(pool);
    beta.set(c.l, c.k);
  }
  return beta;
}

PowerStep subroutine2(Approach approach, const Assignment& beta, const ChannelMatrix& cm,
                      const SolverContext& ctx, double gamma_th) {
  const int L = cm.leds;
  std::vector<double> h(L);
  for (int l = 0; l < L; ++l) h[l] = overall_gain(cm, l, beta);

  LinearProgram lp = ctx.lighting_rows;
  PowerStep step;
  if (approach == Approach::mp) {
    for (int l = 0; l < L; ++l) lp.objective[l] = 1.0;
    std::vector<double> row(L + 1, 0.0);
    for (int l = 0; l < L; ++l) row[l] = -ctx.responsivity * h[l];
    const double target = std::sqrt(gamma_th * ctx.noise.power()) * (1.0 + 1e-9);
    lp.add_row(row, -target);
    const LpSolution sol = lp_solve(lp);
    if (sol.status == LpStatus::optimal) {
      step.allocation.power.assign(sol.x.begin(), sol.x.begin() + L);
      step.allocation.e_min = sol.x[L];
      step.b = 1;
    } else {
      step.allocation = ctx.benchmark;
      step.b = 0;
    }
  } else {
    for (int l = 0; l < L; ++l) lp.objective[l] = -h[l];
    const LpSolution sol = lp_solve(lp);
    if (sol.status != LpStatus::optimal)
      throw InfeasibleError("lighting constraints admit no power allocation");
    step.allocation.power.assign(sol.x.begin(), sol.x.begin() + L);
    step.allocation.e_min = sol.x[L];
  }
  const double gamma = snr_direct(step.allocation.power, beta, cm, ctx.noise, ctx.responsivity);
  step.b = outage_flag(gamma, gamma_th);
  return step;
}

namespace {

SolveResult finish(Approach approach, std::vector<double> power, Assignment beta,
                   const ChannelMatrix& cm, const SolverContext& ctx, double gamma_th) {
  SolveResult r;
  r.approach = approach;
  r.gamma = snr_direct(power, beta, cm, ctx.noise, ctx.responsivity);
  r.b = outage_flag(r.gamma, gamma_th);
  r.mirrors_used = beta.count();
  r.power = std::move(power);
  r.beta = std::move(beta);
  for (double p : r.power) r.total_power += p;
  const double resource = approach == Approach::mp ? r.total_power : r.mirrors_used;
  r.objective = r.b - ctx.config.epsilon * resource;
  return r;
}

// Lexicographic: served first, then the approach's resource.
bool better(Approach approach, const SolveResult& a, const SolveResult& b) {
  if (a.b != b.b) return a.b > b.b;
  if (approach == Approach::mp) {
    if (a.total_power != b.total_power) return a.total_power < b.total_power;
    return a.mirrors_used < b.mirrors_used;
  }
  if (a.mirrors_used != b.mirrors_used) return a.mirrors_used < b.mirrors_used;
  return a.total_power < b.total_power;
}

}  // namespace

SolveResult ao_solve(Approach approach, const ChannelMatrix& cm, const SolverContext& ctx,
                     double gamma_th) {
  if (approach != Approach::mm && approach != Approach::mp)
    throw std::invalid_argument("alternating optimization runs the mm or mp approach");
  const OptimizerConfig& cfg = ctx.config;
  std::vector<double> power = ctx.benchmark.power;
  double gamma_prev =
      snr_direct(power, Assignment(cm.leds, cm.elements), cm, ctx.noise, ctx.responsivity);

  SolveResult best;
  bool have_best = false;
  bool converged = false;
  int t = 0;
  while (t < cfg.t_max) {
    ++t;
    Assignment beta = approach == Approach::mm
                          ? subroutine1_mm(cm, power, gamma_th, cfg.n_max, ctx.noise,
                                           ctx.responsivity)
                          : subroutine1_mp(cm, power, cfg.n_max);
    PowerStep step = subroutine2(approach, beta, cm, ctx, gamma_th);
    power = step.allocation.power;
    SolveResult iterate = finish(approach, power, std::move(beta), cm, ctx, gamma_th);
    const double gamma = iterate.gamma;
    if (!have_best || better(approach, iterate, best)) {
      best = std::move(iterate);
      have_best = true;
    }
    if (std::abs(gamma - gamma_prev) / std::max(gamma_prev, 1e-12) < cfg.delta) {
      converged = true;
      break;
    }
    gamma_prev = gamma;
  }
  if (!have_best) best = finish(approach, power, Assignment(cm.leds, cm.elements), cm, ctx, gamma_th);
  best.iterations = t;
  best.converged = converged;
  return best;
}

SolveResult benchmark_solve(const ChannelMatrix& cm, const SolverContext& ctx, double gamma_th) {
  const auto& p = ctx.benchmark.power;
  Assignment beta =
      subroutine1_mm(cm, p, gamma_th, ctx.config.n_max, ctx.noise, ctx.responsivity);
  SolveResult r = finish(Approach::benchmark, p, std::move(beta), cm, ctx, gamma_th);
  r.iterations = 1;
  return r;
}

SolveResult no_mirror_solve(const ChannelMatrix& cm, const SolverContext& ctx, double gamma_th) {
  SolveResult r = finish(Approach::no_mirror, ctx.benchmark.power,
                         Assignment(cm.leds, cm.elements), cm, ctx, gamma_th);
  r.iterations = 1;
  return r;
}

SolveResult solve(Approach approach, const ChannelMatrix& cm, const SolverContext& ctx,
                  double gamma_th) {
  switch (approach) {
    case Approach::no_mirror: return no_mirror_solve(cm, ctx, gamma_th);
    case Approach::benchmark: return benchmark_solve(cm, ctx, gamma_th);
    case Approach::mm:
    case Approach::mp: return ao_solve(approach, cm, ctx, gamma_th);
  }
  throw std::invalid_argument("unknown approach");
}

SolveResult oracle_solve(Approach approach, const ChannelMatrix& cm, const SolverContext& ctx,
                         double gamma_th) {
  if (approach != Approach::mm && approach != Approach::mp)
    throw std::invalid_argument("the oracle solves the mm or mp objective");
  const int L = cm.leds;
  const int K = cm.elements;
  const double space = std::pow(static_cast<double>(L + 1), K);
  if (space > kOracleBudget)
    throw BudgetError("exhaustive search over " + std::to_string(L + 1) + "^" + std::to_string(K) +
                      " assignments exceeds the budget of " +
                      std::to_string(static_cast<long long>(kOracleBudget)) +
                      "; reduce the LED count or the wall grid");

  // Each element holds a digit in [0, L]: 0 means diffuse, d means LED d - 1.
  std::vector<int> digit(K, 0);
  SolveResult best;
  bool have_best = false;
  int evaluated = 0;
  while (true) {
    int used = 0;
    for (int d : digit) used += d != 0;
    if (used <= ctx.config.n_max) {
      Assignment beta(L, K);
      for (int k = 0; k < K; ++k)
        if (digit[k] > 0) beta.set(digit[k] - 1, k);
      PowerStep step = subroutine2(approach, beta, cm, ctx, gamma_th);
      SolveResult r = finish(approach, step.allocation.power, std::move(beta), cm, ctx, gamma_th);
      ++evaluated;
      if (!have_best || better(approach, r, best)) {
        best = std::move(r);
        have_best = true;
      }
    }
    int pos = 0;
    while (pos < K && digit[pos] == L) digit[pos++] = 0;
    if (pos == K) break;
    ++digit[pos];
  }
  best.iterations = evaluated;
  best.converged = true;
  return best;
}

}  // namespace vlcoris
