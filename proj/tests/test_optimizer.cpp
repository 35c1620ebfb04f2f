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

#include <random>
#include <vector>
#include <stdexcept>

#include "approx.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "vlcoris/config.hpp"
#include "vlcoris/errors.hpp"
#include "vlcoris/montecarlo.hpp"
#include "vlcoris/optimizer.hpp"
#include "vlcoris/random.hpp"
#include "vlcoris/reports.hpp"
#include "vlcoris/scene.hpp"

using namespace vlcoris;

namespace {

const Scene& default_scene() {
  static const Scene s = RunConfig{}.to_scene();
  return s;
}

const SolverContext& default_context() {
  static const SolverContext c = SolverContext::build(default_scene(), OptimizerConfig{});
  return c;
}

ChannelMatrix channel_for(std::uint64_t trial, ReflectorMode mode = ReflectorMode::oris) {
  Philox4x32 rng(77, trial);
  const Scene& s = default_scene();
  const UserPose pose = sample_user(rng, s.room, s.body, s.device_height);
  return build_channel(s, pose, mode);
}

double gamma_of(const std::vector<double>& p, const Assignment& beta, const ChannelMatrix& cm) {
  return snr_direct(p, beta, cm, NoiseModel{}, 1.0);
}

}  // namespace

TEST_CASE("approach names") {
  for (Approach a : {Approach::no_mirror, Approach::benchmark, Approach::mm, Approach::mp})
    CHECK(parse_approach(to_string(a)) == a);
  CHECK_FALSE(parse_approach("greedy"));
}

TEST_CASE("minimum-mirrors selection") {
  const ChannelMatrix cm = channel_for(1);
  const std::vector<double> p = default_context().benchmark.power;
  const NoiseModel noise;
  const double g0 = gamma_of(p, Assignment(cm.leds, cm.elements), cm);
  CHECK(subroutine1_mm(cm, p, 0.5 * g0, 128, noise, 1.0).count() == 0);

  // Just short of the threshold with a single useful pair.
  ChannelMatrix one(1, 3);
  one.los[0] = 1e-6;
  one.spec[one.at(0, 1)] = 5e-7;
  const std::vector<double> p1 = {10.0};
  const double target = std::pow(10.0 * 1.4e-6, 2) / noise.power();
  const Assignment beta = subroutine1_mm(one, p1, target, 128, noise, 1.0);
  CHECK(beta.count() == 1);
  CHECK(beta.get(0, 1));

  // Unreachable threshold: stops at the budget.
  const Assignment capped = subroutine1_mm(cm, p, 1e300, 5, noise, 1.0);
  CHECK(capped.count() <= 5);
  CHECK(capped.is_valid(5));
}

TEST_CASE("minimum-power selection") {
  const ChannelMatrix cm = channel_for(2);
  const std::vector<double> p = default_context().benchmark.power;
  CHECK(subroutine1_mp(cm, p, 0).count() == 0);

  // Budget at least K: every element with a positive score, best LED each.
  const Assignment all = subroutine1_mp(cm, p, cm.elements);
  CHECK(all.is_valid(cm.elements));
  for (int k = 0; k < cm.elements; ++k) {
    int best = -1;
    double score = 0.0;
    for (int l = 0; l < cm.leds; ++l) {
      const std::size_t i = cm.at(l, k);
      const double s = cm.nlos_clear[i] ? cm.spec[i] * p[l] : 0.0;
      if (s > score) {
        score = s;
        best = l;
      }
    }
    if (best < 0) {
      CHECK(all.column_count(k) == 0);
    } else {
      CHECK(all.get(best, k));
    }
  }
}

TEST_CASE("minimum-power selection is the best set of its size") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int L = 1 + int(u(rng) * 3), K = 1 + int(u(rng) * 8);
    ChannelMatrix cm(L, K);
    std::vector<double> p(L);
    for (double& v : p) v = 1 + 10 * u(rng);
    for (int l = 0; l < L; ++l)
      for (int k = 0; k < K; ++k) cm.spec[cm.at(l, k)] = u(rng) < 0.3 ? 0.0 : u(rng);
    // Per-element best score.
    std::vector<double> best(K, 0.0);
    for (int k = 0; k < K; ++k)
      for (int l = 0; l < L; ++l) best[k] = std::max(best[k], cm.spec[cm.at(l, k)] * p[l]);
    const int n_max = int(u(rng) * (K + 1));
    const Assignment beta = subroutine1_mp(cm, p, n_max);
    double total = 0.0;
    for (int l = 0; l < L; ++l)
      for (int k = 0; k < K; ++k)
        if (beta.get(l, k)) total += cm.spec[cm.at(l, k)] * p[l];
    CHECK(beta.is_valid(n_max));
    CHECK(total >= oracle::best_subset_total(best, beta.count()) * (1 - 1e-12));
  }
}

TEST_CASE("power step") {
  const SolverContext& ctx = default_context();
  const ChannelMatrix cm = channel_for(3);
  const Assignment none(cm.leds, cm.elements);

  const PowerStep easy = subroutine2(Approach::mp, none, cm, ctx, 1e-6);
  CHECK(easy.b == 1);
  CHECK(easy.allocation.total() == rel(ctx.benchmark.total()).epsilon(1e-6));

  const PowerStep hard = subroutine2(Approach::mp, none, cm, ctx, 1e30);
  CHECK(hard.b == 0);
  CHECK(hard.allocation.power == ctx.benchmark.power);

  // Maximising the signal costs at least as much power as minimising it. An
  // unserved MP falls back to the benchmark, whose total carries 1e-9 slack.
  for (std::uint64_t t = 0; t < 100; ++t) {
    const ChannelMatrix c = channel_for(100 + t);
    const Assignment beta = subroutine1_mp(c, ctx.benchmark.power, 32);
    const double th = db_to_linear(20.0 + double(t % 20));
    const PowerStep mm = subroutine2(Approach::mm, beta, c, ctx, th);
    const PowerStep mp = subroutine2(Approach::mp, beta, c, ctx, th);
    CHECK(mm.allocation.total() >= mp.allocation.total() * (1 - 2e-9));
  }
}

TEST_CASE("alternating optimisation") {
  const SolverContext& ctx = default_context();
  // A user under an LED with nothing in the way converges at once.
  UserPose clear;
  clear.pd = {1.0, 1.0, 1.0};
  clear.body.base = {3.5, 3.5, 0.0};
  clear.body.radius = 0.01;
  const ChannelMatrix cm = build_channel(default_scene(), clear, ReflectorMode::oris);
  const SolveResult r = ao_solve(Approach::mm, cm, ctx, db_to_linear(10.0));
  CHECK(r.b == 1);
  CHECK(r.mirrors_used == 0);
  CHECK(r.iterations <= 2);
  CHECK(r.converged);

  for (std::uint64_t t = 0; t < 30; ++t) {
    const ChannelMatrix c = channel_for(200 + t);
    for (double db : {20.0, 35.0, 50.0}) {
      const double th = db_to_linear(db);
      const SolveResult mm = ao_solve(Approach::mm, c, ctx, th);
      const SolveResult mp = ao_solve(Approach::mp, c, ctx, th);
      const SolveResult bm = benchmark_solve(c, ctx, th);
      const SolveResult nm = no_mirror_solve(c, ctx, th);
      CHECK(mm.b >= bm.b);
      CHECK(bm.b >= nm.b);
      CHECK(mm.beta.is_valid(ctx.config.n_max));
      CHECK(mp.beta.is_valid(ctx.config.n_max));
      CHECK(mp.b == outage_flag(mp.gamma, th));
      CHECK(mp.gamma == rel(gamma_of(mp.power, mp.beta, c)).epsilon(1e-12));
      CHECK(bm.power == ctx.benchmark.power);
      CHECK(nm.mirrors_used == 0);
    }
  }
  CHECK_THROWS_AS(ao_solve(Approach::benchmark, cm, ctx, 1.0), std::invalid_argument);
}

TEST_CASE("benchmark solve") {
  const SolverContext& ctx = default_context();
  const ChannelMatrix cm = channel_for(4);
  const SolveResult low = benchmark_solve(cm, ctx, 1e-9);
  CHECK(low.b == 1);
  CHECK(low.mirrors_used == 0);
  for (double db : {10.0, 30.0, 50.0})
    CHECK(benchmark_solve(cm, ctx, db_to_linear(db)).total_power == ctx.benchmark.total());
}

TEST_CASE("exhaustive oracle") {
  RunConfig cfg = tiny_config();
  cfg.leds = {{1.0, 1.0, 2.5}};
  // One LED cannot light the corners evenly.
  cfg.lighting.u_min = 0.1;
  cfg.lighting.e_max = 5000.0;
  const Scene scene = cfg.to_scene();
  SolverContext ctx = SolverContext::build(scene, cfg.optimizer);

  ChannelMatrix one(1, 1);
  one.los[0] = 1e-6;
  one.spec[0] = 2e-6;
  const SolveResult r1 = oracle_solve(Approach::mp, one, ctx, db_to_linear(20.0));
  CHECK(r1.iterations == 2);

  ChannelMatrix two(1, 2);
  two.los[0] = 1e-6;
  two.spec = {2e-6, 3e-6};
  ctx.config.n_max = 1;
  const SolveResult r2 = oracle_solve(Approach::mm, two, ctx, db_to_linear(20.0));
  CHECK(r2.iterations == 3);

  // A threshold the line of sight already meets needs no element.
  const SolveResult served = oracle_solve(Approach::mm, two, ctx, 1.0);
  CHECK(served.b == 1);
  CHECK(served.mirrors_used == 0);

  ChannelMatrix big(2, 20);
  CHECK_THROWS_AS(oracle_solve(Approach::mm, big, ctx, 1.0), BudgetError);
  CHECK_THROWS_AS(oracle_solve(Approach::no_mirror, two, ctx, 1.0), std::invalid_argument);
}

TEST_CASE("heuristics against the oracle on the small scene") {
  const OracleReport rep = oracle_validate(tiny_config(), 40, 3);
  CHECK(rep.rows.size() == 40u);
  CHECK(rep.b_agreement[0] >= 0.9);
  CHECK(rep.b_agreement[1] >= 0.9);
  CHECK(rep.b_agreement[0] <= 1.0);
  CHECK(rep.mirrors_below_minimum == 0);
  CHECK(rep.oracle_dominance_violations == 0);

  RunConfig big = tiny_config();
  big.grid_ky = 30;
  big.grid_kz = 15;
  CHECK_THROWS_AS(oracle_validate(big, 1, 1), BudgetError);
}
