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

#include <cmath>
#include <vector>
#include <stdexcept>

#include "approx.hpp"
#include "doctest.h"
#include "vlcoris/config.hpp"
#include "vlcoris/montecarlo.hpp"
#include "vlcoris/random.hpp"
#include "vlcoris/scene.hpp"

using namespace vlcoris;

TEST_CASE("Philox4x32-10 known answers") {
  using B = Philox4x32::Block;
  CHECK(Philox4x32::generate(B{0, 0, 0, 0}, {0, 0}) ==
        B{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(Philox4x32::generate(B{0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                             {0xffffffffu, 0xffffffffu}) ==
        B{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
}

TEST_CASE("uniform draws") {
  Philox4x32 a(1, 2), b(1, 2), c(1, 3);
  double sum = 0.0;
  bool differs = false;
  for (int i = 0; i < 10000; ++i) {
    const double x = a.uniform01();
    CHECK(x == b.uniform01());
    differs = differs || x != c.uniform01();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    sum += x;
  }
  CHECK(differs);
  CHECK(sum / 10000 == rel(0.5).epsilon(0.02));
}

TEST_CASE("user placement") {
  const Room room;
  const BodyModel body;
  double sx = 0.0, sy = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    Philox4x32 rng(12, i);
    const UserPose p = sample_user(rng, room, body, 1.0);
    REQUIRE(room.contains_xy(p.pd));
    CHECK(p.pd.z == 1.0);
    sx += p.body.base.x;
    sy += p.body.base.y;
  }
  // Uniform on [r, 4 - r] has sd (4 - 2r) / sqrt(12).
  const double sigma = (4.0 - 2 * body.radius) / std::sqrt(12.0) / std::sqrt(double(n));
  CHECK(std::abs(sx / n - 2.0) < 3 * sigma);
  CHECK(std::abs(sy / n - 2.0) < 3 * sigma);

  Philox4x32 r1(5, 9), r2(5, 9);
  const UserPose a = sample_user(r1, room, body, 1.0), b = sample_user(r2, room, body, 1.0);
  CHECK(a.pd == b.pd);
  CHECK(a.heading == b.heading);
}

namespace {

RunConfig small_run() {
  RunConfig cfg;
  cfg.trials = 6;
  cfg.seed = 404;
  cfg.psi_deg = {50.0};
  cfg.gamma_th_db = {20.0, 40.0};
  return cfg;
}

}  // namespace

TEST_CASE("trials share one pose across approaches and are reproducible") {
  const RunConfig cfg = small_run();
  const Scene scene = cfg.to_scene();
  const SolverContext ctx = SolverContext::build(scene, cfg.optimizer);
  const RunPlan plan = cfg.to_plan(1);
  const TrialRecord a = run_trial(scene, ctx, plan, 3);
  const TrialRecord b = run_trial(scene, ctx, plan, 3);
  CHECK(a.pose.pd == b.pose.pd);
  REQUIRE(a.outcomes.size() == 1u * 1u * 2u * 4u);
  for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
    CHECK(a.outcomes[i].b == b.outcomes[i].b);
    CHECK(a.outcomes[i].snr == b.outcomes[i].snr);
    CHECK(a.outcomes[i].power == b.outcomes[i].power);
  }
}

TEST_CASE("worker count does not change the delivered records") {
  const RunConfig cfg = small_run();
  const Scene scene = cfg.to_scene();
  const SolverContext ctx = SolverContext::build(scene, cfg.optimizer);
  std::vector<int> order1, order4;
  std::vector<double> snr1, snr4;
  run_trials(scene, ctx, cfg.to_plan(1), [&](const TrialRecord& r) {
    order1.push_back(r.trial);
    for (const auto& o : r.outcomes) snr1.push_back(o.snr);
  });
  run_trials(scene, ctx, cfg.to_plan(4), [&](const TrialRecord& r) {
    order4.push_back(r.trial);
    for (const auto& o : r.outcomes) snr4.push_back(o.snr);
  });
  CHECK(order1 == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(order4 == order1);
  CHECK(snr4 == snr1);

  RunPlan none = cfg.to_plan(2);
  none.trials = 0;
  int delivered = 0;
  run_trials(scene, ctx, none, [&](const TrialRecord&) { ++delivered; });
  CHECK(delivered == 0);
}

TEST_CASE("aggregation") {
  RunPlan plan;
  plan.psi = {deg_to_rad(50.0)};
  plan.gamma_th_db = {30.0};
  plan.approaches = {Approach::mp};
  plan.trials = 4;
  Aggregator agg(plan, 6);
  for (int t = 0; t < 4; ++t) {
    TrialRecord rec;
    rec.trial = t;
    TrialOutcome o;
    o.approach = Approach::mp;
    o.b = t < 3 ? 1 : 0;
    o.elements = t == 0 ? std::vector<int>{1, 2} : std::vector<int>{2};
    o.mirrors = static_cast<int>(o.elements.size());
    o.total_power = 10.0;
    o.iterations = t + 1;
    rec.outcomes = {o};
    agg.add(rec);
  }
  const AggregateCell& c = agg.cell(0, 0, 0, Approach::mp);
  CHECK(c.trials == 4);
  CHECK(c.outage_probability() == rel(0.25));
  CHECK(c.mean_power() == rel(10.0));
  long long heat = 0;
  for (long long h : c.heatmap) heat += h;
  CHECK(heat == c.mirror_sum);
  CHECK(c.heatmap[2] == 4);
  CHECK(c.iter_le4 == 4);

  Aggregator served(plan, 6), down(plan, 6);
  for (int t = 0; t < 3; ++t) {
    TrialRecord rec;
    TrialOutcome o;
    o.approach = Approach::mp;
    o.b = 1;
    rec.outcomes = {o};
    served.add(rec);
    rec.outcomes[0].b = 0;
    down.add(rec);
  }
  CHECK(served.cell(0, 0, 0, Approach::mp).outage_probability() == 0.0);
  CHECK(down.cell(0, 0, 0, Approach::mp).outage_probability() == 1.0);
}
