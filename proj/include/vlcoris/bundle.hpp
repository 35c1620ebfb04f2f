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

#include <filesystem>
#include <fstream>
#include <string>

#include "vlcoris/config.hpp"
#include "vlcoris/montecarlo.hpp"

namespace vlcoris {

// Manifest and per-cell aggregates as JSON text. Contains no timestamps, so
// identical inputs give identical bytes.
std::string summary_json(const RunConfig& config, const RunPlan& plan, const Aggregator& agg);

// Index of the sweep value closest to target (first on ties).
int nearest_index(const std::vector<double>& values, double target);

// K_z x K_y count grid, top row of the wall first.
std::string heatmap_csv(const AggregateCell& cell, int ky, int kz);

std::string trials_csv_header();
std::string trials_csv_rows(const TrialRecord& record, const RunConfig& config, const RunPlan& plan);

// Streams a simulation into a staging directory next to the target and moves
// the finished files into place on commit. Dropping an uncommitted writer
// removes the staging directory.
class BundleWriter {
 public:
  BundleWriter(const RunConfig& config, const RunPlan& plan, std::filesystem::path out_dir);
  ~BundleWriter();
  BundleWriter(const BundleWriter&) = delete;
  BundleWriter& operator=(const BundleWriter&) = delete;

  void add(const TrialRecord& record);
  const Aggregator& aggregator() const { return agg_; }

  // Writes summary and heatmaps, then renames every file into out_dir.
  void commit();

 private:
  RunConfig config_;
  RunPlan plan_;
  std::filesystem::path out_dir_;
  std::filesystem::path staging_;
  std::ofstream trials_;
  Aggregator agg_;
  bool committed_ = false;
};

}  // namespace vlcoris
