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

#include "vlcoris/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <condition_variable>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "vlcoris/errors.hpp"

namespace vlcoris {

UserPose sample_user(Philox4x32& rng, const Room& room, const BodyModel& body,
                     double device_height) {
  const double r = body.radius;
  while (true) {
    UserPose pose;
    const double cx = r + (room.length - 2.0 * r) * rng.uniform01();
    const double cy = r + (room.width - 2.0 * r) * rng.uniform01();
    pose.heading = 2.0 * kPi * rng.uniform01();
    pose.body = BodyCylinder{{cx, cy, 0.0}, body.radius, body.height};
    pose.pd = {cx + body.device_offset * std::cos(pose.heading),
               cy + body.device_offset * std::sin(pose.heading), device_height};
    if (room.contains_xy(pose.pd, 1e-3)) return pose;
  }
}

TrialRecord run_trial(const Scene& scene, const SolverContext& ctx, const RunPlan& plan,
                      int trial) {
  TrialRecord rec;
  rec.trial = trial;
  Philox4x32 rng(plan.seed, static_cast<std::uint64_t>(trial));
  rec.pose = sample_user(rng, scene.room, scene.body, scene.device_height);
  rec.outcomes.reserve(plan.modes.size() * plan.psi.size() * plan.gamma_th_db.size() *
                       plan.approaches.size());

  for (std::size_t mi = 0; mi < plan.modes.size(); ++mi) {
    for (std::size_t pi = 0; pi < plan.psi.size(); ++pi) {
      const ChannelMatrix cm = build_channel(scene.with_fov(plan.psi[pi]), rec.pose, plan.modes[mi]);
      for (std::size_t gi = 0; gi < plan.gamma_th_db.size(); ++gi) {
        const double gamma_th = db_to_linear(plan.gamma_th_db[gi]);
        for (Approach a : plan.approaches) {
          const SolveResult r = solve(a, cm, ctx, gamma_th);
          TrialOutcome o;
          o.mode = static_cast<int>(mi);
          o.psi = static_cast<int>(pi);
          o.gamma = static_cast<int>(gi);
          o.approach = a;
          o.b = r.b;
          o.snr = r.gamma;
          o.power = r.power;
          o.total_power = r.total_power;
          o.mirrors = r.mirrors_used;
          o.iterations = r.iterations;
          o.converged = r.converged;
          o.efficiency = energy_efficiency(r.gamma, r.power, ctx.noise.bandwidth, gamma_th);
          o.elements = r.beta.selected_elements();
          rec.outcomes.push_back(std::move(o));
        }
      }
    }
  }
  return rec;
}

namespace {

[[noreturn]] void rethrow_for_trial(std::exception_ptr err, int trial) {
  const std::string where = "trial " + std::to_string(trial) + ": ";
  try {
    std::rethrow_exception(err);
  } catch (const ConfigError& e) {
    throw ConfigError(where + e.what());
  } catch (const InfeasibleError& e) {
    throw InfeasibleError(where + e.what());
  } catch (const BudgetError& e) {
    throw BudgetError(where + e.what());
  } catch (const std::exception& e) {
    throw std::runtime_error(where + e.what());
  }
}

}  // namespace

void run_trials(const Scene& scene, const SolverContext& ctx, const RunPlan& plan,
                const TrialSink& sink) {
  if (plan.trials <= 0) return;
  const int workers = std::max(1, std::min(plan.workers, plan.trials));

  if (workers == 1) {
    for (int t = 0; t < plan.trials; ++t) {
      TrialRecord rec;
      try {
        rec = run_trial(scene, ctx, plan, t);
      } catch (...) {
        rethrow_for_trial(std::current_exception(), t);
      }
      sink(rec);
    }
    return;
  }

  std::atomic<int> next{0};
  std::atomic<bool> abort{false};
  std::mutex mu;
  std::condition_variable cv;
  std::map<int, TrialRecord> ready;
  std::exception_ptr failure;
  int failed_trial = -1;

  auto work = [&] {
    while (!abort.load()) {
      const int t = next.fetch_add(1);
      if (t >= plan.trials) return;
      try {
        TrialRecord rec = run_trial(scene, ctx, plan, t);
        std::lock_guard lock(mu);
        ready.emplace(t, std::move(rec));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure || t < failed_trial) {
          failure = std::current_exception();
          failed_trial = t;
        }
        abort.store(true);
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);

  std::exception_ptr sink_failure;
  for (int t = 0; t < plan.trials; ++t) {
    TrialRecord rec;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return ready.count(t) > 0 || (failure && failed_trial <= t); });
      if (ready.count(t) == 0) break;
      rec = std::move(ready.at(t));
      ready.erase(t);
    }
    try {
      sink(rec);
    } catch (...) {
      sink_failure = std::current_exception();
      abort.store(true);
      break;
    }
  }
  abort.store(true);
  for (auto& th : pool) th.join();
  if (sink_failure) std::rethrow_exception(sink_failure);
  if (failure) rethrow_for_trial(failure, failed_trial);
}

double AggregateCell::outage_stderr() const {
  if (trials == 0) return 0.0;
  const double p = outage_probability();
  return std::sqrt(p * (1.0 - p) / double(trials));
}

Aggregator::Aggregator(const RunPlan& plan, int elements) : plan_(plan) {
  cells_.reserve(plan.modes.size() * plan.psi.size() * plan.gamma_th_db.size() *
                 plan.approaches.size());
  for (std::size_t mi = 0; mi < plan.modes.size(); ++mi)
    for (std::size_t pi = 0; pi < plan.psi.size(); ++pi)
      for (std::size_t gi = 0; gi < plan.gamma_th_db.size(); ++gi)
        for (Approach a : plan.approaches) {
          AggregateCell c;
          c.mode = static_cast<int>(mi);
          c.psi = static_cast<int>(pi);
          c.gamma = static_cast<int>(gi);
          c.approach = a;
          c.heatmap.assign(elements, 0);
          cells_.push_back(std::move(c));
        }
}

std::size_t Aggregator::index(int mode, int psi, int gamma, int approach) const {
  return ((std::size_t(mode) * plan_.psi.size() + psi) * plan_.gamma_th_db.size() + gamma) *
             plan_.approaches.size() +
         approach;
}

const AggregateCell& Aggregator::cell(int mode, int psi, int gamma, Approach approach) const {
  for (std::size_t ai = 0; ai < plan_.approaches.size(); ++ai)
    if (plan_.approaches[ai] == approach) return cells_.at(index(mode, psi, gamma, int(ai)));
  throw std::out_of_range("approach not part of the run");
}

void Aggregator::add(const TrialRecord& record) {
  ++trials_;
  for (const TrialOutcome& o : record.outcomes) {
    int ai = 0;
    while (plan_.approaches[ai] != o.approach) ++ai;
    AggregateCell& c = cells_.at(index(o.mode, o.psi, o.gamma, ai));
    ++c.trials;
    c.outages += 1 - o.b;
    c.power_sum += o.total_power;
    c.efficiency_sum += o.efficiency;
    c.mirror_sum += o.mirrors;
    if (!o.converged)
      ++c.iter_tmax;
    else if (o.iterations <= 4)
      ++c.iter_le4;
    else
      ++c.iter_other;
    for (int k : o.elements) ++c.heatmap.at(k);
  }
}

std::vector<AggregateCell> aggregate(const std::vector<TrialRecord>& records, const RunPlan& plan,
                                     int elements) {
  Aggregator agg(plan, elements);
  for (const TrialRecord& r : records) agg.add(r);
  return agg.cells();
}

}  // namespace vlcoris
