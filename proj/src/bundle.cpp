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

#include "vlcoris/bundle.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace vlcoris {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string heatmap_name(const RunPlan& plan, Approach a, int mode, double psi_deg) {
  std::string name = "heatmap_" + std::string(to_string(a)) + "_" + fmt(psi_deg);
  if (plan.modes.size() > 1) name += "_" + std::string(to_string(plan.modes[mode]));
  return name + ".csv";
}

}  // namespace

int nearest_index(const std::vector<double>& values, double target) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i)
    if (std::abs(values[i] - target) < std::abs(values[best] - target)) best = i;
  return best;
}

std::string summary_json(const RunConfig& config, const RunPlan& plan, const Aggregator& agg) {
  json manifest;
  manifest["software"] = "vlcoris";
  manifest["version"] = std::string(kVersion);
  manifest["schema_version"] = kSchemaVersion;
  manifest["seed"] = plan.seed;
  manifest["trials"] = plan.trials;
  manifest["config"] = json::parse(dump_config(config));

  json results = json::array();
  for (const AggregateCell& c : agg.cells()) {
    json r;
    r["mode"] = std::string(to_string(plan.modes[c.mode]));
    r["psi_deg"] = config.psi_deg[c.psi];
    r["gamma_th_db"] = plan.gamma_th_db[c.gamma];
    r["approach"] = std::string(to_string(c.approach));
    r["trials"] = c.trials;
    r["outage_probability"] = c.outage_probability();
    r["outage_stderr"] = c.outage_stderr();
    r["mean_total_power_w"] = c.mean_power();
    r["mean_efficiency_bit_per_j"] = c.mean_efficiency();
    r["mean_mirrors"] = c.mean_mirrors();
    r["iterations"] = {{"le4", c.iter_le4}, {"other", c.iter_other}, {"t_max", c.iter_tmax}};
    results.push_back(std::move(r));
  }

  json heatmaps = json::array();
  const int g = nearest_index(plan.gamma_th_db, config.heatmap_gamma_th_db);
  for (std::size_t mi = 0; mi < plan.modes.size(); ++mi)
    for (std::size_t pi = 0; pi < plan.psi.size(); ++pi)
      for (Approach a : plan.approaches)
        heatmaps.push_back({{"file", heatmap_name(plan, a, int(mi), config.psi_deg[pi])},
                            {"mode", std::string(to_string(plan.modes[mi]))},
                            {"psi_deg", config.psi_deg[pi]},
                            {"gamma_th_db", plan.gamma_th_db[g]},
                            {"approach", std::string(to_string(a))}});

  json root;
  root["manifest"] = manifest;
  root["results"] = results;
  root["heatmaps"] = heatmaps;
  return root.dump(2) + "\n";
}

std::string heatmap_csv(const AggregateCell& cell, int ky, int kz) {
  std::string out;
  for (int iz = kz - 1; iz >= 0; --iz) {
    for (int iy = 0; iy < ky; ++iy) {
      if (iy) out += ',';
      out += std::to_string(cell.heatmap.at(std::size_t(iz) * ky + iy));
    }
    out += '\n';
  }
  return out;
}

std::string trials_csv_header() {
  return "trial,seed,body_x,body_y,heading_rad,pd_x,pd_y,pd_z,mode,psi_deg,gamma_th_db,approach,"
         "b,snr,total_power_w,mirrors_used,iterations,converged,efficiency_bit_per_j\n";
}

std::string trials_csv_rows(const TrialRecord& rec, const RunConfig& config, const RunPlan& plan) {
  std::string prefix = std::to_string(rec.trial) + "," + std::to_string(plan.seed) + "," +
                       fmt(rec.pose.body.base.x) + "," + fmt(rec.pose.body.base.y) + "," +
                       fmt(rec.pose.heading) + "," + fmt(rec.pose.pd.x) + "," +
                       fmt(rec.pose.pd.y) + "," + fmt(rec.pose.pd.z) + ",";
  std::string out;
  for (const TrialOutcome& o : rec.outcomes) {
    out += prefix;
    out += std::string(to_string(plan.modes[o.mode])) + "," + fmt(config.psi_deg[o.psi]) + "," +
           fmt(plan.gamma_th_db[o.gamma]) + "," + std::string(to_string(o.approach)) + "," +
           std::to_string(o.b) + "," + fmt(o.snr) + "," + fmt(o.total_power) + "," +
           std::to_string(o.mirrors) + "," + std::to_string(o.iterations) + "," +
           (o.converged ? "1" : "0") + "," + fmt(o.efficiency) + "\n";
  }
  return out;
}

BundleWriter::BundleWriter(const RunConfig& config, const RunPlan& plan, fs::path out_dir)
    : config_(config), plan_(plan), out_dir_(std::move(out_dir)),
      agg_(plan, config.grid_ky * config.grid_kz) {
  if (out_dir_.filename().empty()) out_dir_ = out_dir_.parent_path();
  const fs::path parent = out_dir_.has_parent_path() ? out_dir_.parent_path() : fs::path(".");
  fs::create_directories(parent);
  const std::string base = "." + out_dir_.filename().string() + ".staging";
  staging_ = parent / base;
  for (int i = 1; fs::exists(staging_); ++i) staging_ = parent / (base + "-" + std::to_string(i));
  fs::create_directories(staging_);
  trials_.open(staging_ / "trials.csv", std::ios::binary);
  if (!trials_) throw std::runtime_error("cannot write " + (staging_ / "trials.csv").string());
  trials_ << trials_csv_header();
}

BundleWriter::~BundleWriter() {
  if (trials_.is_open()) trials_.close();
  std::error_code ec;
  fs::remove_all(staging_, ec);
}

void BundleWriter::add(const TrialRecord& record) {
  agg_.add(record);
  trials_ << trials_csv_rows(record, config_, plan_);
}

void BundleWriter::commit() {
  if (committed_) return;
  trials_.close();
  if (!trials_) throw std::runtime_error("failed writing trials.csv");

  auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream f(staging_ / name, std::ios::binary);
    f << body;
    f.close();
    if (!f) throw std::runtime_error("failed writing " + name);
  };
  write("summary.json", summary_json(config_, plan_, agg_));
  std::vector<std::string> files{"summary.json", "trials.csv"};
  const int g = nearest_index(plan_.gamma_th_db, config_.heatmap_gamma_th_db);
  for (std::size_t mi = 0; mi < plan_.modes.size(); ++mi)
    for (std::size_t pi = 0; pi < plan_.psi.size(); ++pi)
      for (Approach a : plan_.approaches) {
        const std::string name = heatmap_name(plan_, a, int(mi), config_.psi_deg[pi]);
        write(name, heatmap_csv(agg_.cell(int(mi), int(pi), g, a), config_.grid_ky,
                                config_.grid_kz));
        files.push_back(name);
      }

  fs::create_directories(out_dir_);
  for (const std::string& name : files) fs::rename(staging_ / name, out_dir_ / name);
  committed_ = true;
}

}  // namespace vlcoris
