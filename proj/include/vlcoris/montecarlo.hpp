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
#include <functional>
#include <vector>

#include "vlcoris/geometry.hpp"
#include "vlcoris/optimizer.hpp"
#include "vlcoris/random.hpp"
#include "vlcoris/scene.hpp"

namespace vlcoris {

// Body centre uniform over the footprint inset by the body radius, heading
// uniform in [0, 2 pi), photodetector at the device offset along the heading.
// Poses whose photodetector would leave the room are redrawn.
UserPose sample_user(Philox4x32& rng, const Room& room, const BodyModel& body,
                     double device_height);

struct RunPlan {
  std::vector<ReflectorMode> modes{ReflectorMode::oris};
  std::vector<double> psi;          // radians
  std::vector<double> gamma_th_db;
  std::vector<Approach> approaches{Approach::no_mirror, Approach::benchmark, Approach::mm,
                                   Approach::mp};
  int trials = 0;
  std::uint64_t seed = 1;
  int workers = 1;
};

struct TrialOutcome {
  int mode = 0;    // index into RunPlan::modes
  int psi = 0;     // index into RunPlan::psi
  int gamma = 0;   // index into RunPlan::gamma_th_db
  Approach approach = Approach::no_mirror;
  int b = 0;
  double snr = 0.0;
  std::vector<double> power;
  double total_power = 0.0;
  int mirrors = 0;
  int iterations = 0;
  bool converged = true;
  double efficiency = 0.0;  // bit/J
  std::vector<int> elements;  // reflector elements in specular use
};

struct TrialRecord {
  int trial = 0;
  UserPose pose;
  std::vector<TrialOutcome> outcomes;  // mode, psi, gamma, approach order
};

// Sink invoked once per trial, strictly in trial-index order, never
// concurrently.
using TrialSink = std::function<void(const TrialRecord&)>;

// Runs every trial of the plan over plan.workers threads. Results reach the
// sink in trial order regardless of the worker count. A failing trial aborts
// the run; the exception is rethrown with the trial index in its message.
void run_trials(const Scene& scene, const SolverContext& ctx, const RunPlan& plan,
                const TrialSink& sink);

// One trial, computed in the calling thread.
TrialRecord run_trial(const Scene& scene, const SolverContext& ctx, const RunPlan& plan, int trial);

struct AggregateCell {
  int mode = 0;
  int psi = 0;
  int gamma = 0;
  Approach approach = Approach::no_mirror;
  long long trials = 0;
  long long outages = 0;
  double power_sum = 0.0;
  double efficiency_sum = 0.0;
  long long mirror_sum = 0;
  long long iter_le4 = 0;    // converged within four iterations
  long long iter_other = 0;  // converged later
  long long iter_tmax = 0;   // hit the iteration cap without converging
  std::vector<long long> heatmap;  // per reflector element

  double outage_probability() const { return trials ? double(outages) / double(trials) : 0.0; }
  double outage_stderr() const;
  double mean_power() const { return trials ? power_sum / double(trials) : 0.0; }
  double mean_efficiency() const { return trials ? efficiency_sum / double(trials) : 0.0; }
  double mean_mirrors() const { return trials ? double(mirror_sum) / double(trials) : 0.0; }
};

// Running reduction over trial records.
class Aggregator {
 public:
  Aggregator(const RunPlan& plan, int elements);

  void add(const TrialRecord& record);
  const std::vector<AggregateCell>& cells() const { return cells_; }
  const AggregateCell& cell(int mode, int psi, int gamma, Approach approach) const;
  long long trials() const { return trials_; }

 private:
  std::size_t index(int mode, int psi, int gamma, int approach) const;

  RunPlan plan_;
  std::vector<AggregateCell> cells_;
  long long trials_ = 0;
};

std::vector<AggregateCell> aggregate(const std::vector<TrialRecord>& records, const RunPlan& plan,
                                     int elements);

}  // namespace vlcoris
