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


#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "vlcoris/bundle.hpp"
#include "vlcoris/config.hpp"
#include "vlcoris/errors.hpp"

using namespace vlcoris;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("vlcoris_test_" + name);
  fs::remove_all(p);
  return p;
}

void run_bundle(const RunConfig& cfg, const fs::path& out) {
  const Scene scene = cfg.to_scene();
  const SolverContext ctx = SolverContext::build(scene, cfg.optimizer);
  const RunPlan plan = cfg.to_plan(1);
  BundleWriter w(cfg, plan, out);
  run_trials(scene, ctx, plan, [&](const TrialRecord& r) { w.add(r); });
  w.commit();
}

}  // namespace

TEST_CASE("configuration round trip") {
  RunConfig cfg;
  cfg.trials = 17;
  cfg.seed = 99;
  cfg.psi_deg = {35.0};
  cfg.reflector_mode = ReflectorMode::mirror;
  CHECK(parse_config(dump_config(cfg)) == cfg);
  CHECK(parse_config(dump_config(tiny_config())) == tiny_config());
  CHECK(parse_config("{}") == RunConfig{});
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(parse_config(R"({"trails": 5})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"trials": -1})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"trials": "many"})"), ConfigError);
  CHECK_THROWS_AS(parse_config("{"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"approaches": ["greedy"]})"), ConfigError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/vlcoris.json"), ConfigError);
}

TEST_CASE("sweep parsing") {
  const std::vector<double> s = parse_sweep("10:2:50");
  REQUIRE(s.size() == 21u);
  CHECK(s.front() == 10.0);
  CHECK(s.back() == 50.0);
  CHECK(s == RunConfig::default_gamma_sweep());
  CHECK(parse_sweep("30,40,50") == std::vector<double>{30.0, 40.0, 50.0});
  CHECK(parse_sweep("7") == std::vector<double>{7.0});
  CHECK_THROWS_AS(parse_sweep(""), ConfigError);
  CHECK_THROWS_AS(parse_sweep("10:0:50"), ConfigError);
  CHECK_THROWS_AS(parse_sweep("1,x"), ConfigError);
}

TEST_CASE("result bundle") {
  RunConfig cfg;
  cfg.trials = 10;
  cfg.seed = 5;
  cfg.psi_deg = {50.0};
  cfg.gamma_th_db = {30.0, 40.0};
  const fs::path out = scratch("bundle");
  run_bundle(cfg, out);

  REQUIRE(fs::exists(out / "summary.json"));
  REQUIRE(fs::exists(out / "trials.csv"));
  int heatmaps = 0;
  for (const auto& e : fs::directory_iterator(out))
    if (e.path().filename().string().rfind("heatmap_", 0) == 0) ++heatmaps;
  CHECK(heatmaps == 4);

  const auto summary = nlohmann::json::parse(slurp(out / "summary.json"));
  const auto& m = summary["manifest"];
  CHECK(m["trials"] == 10);
  CHECK(m["seed"] == 5);
  CHECK(m["config"]["illumination"]["e_th"] == 500.0);
  CHECK(m["config"]["illumination"]["e_max"] == 800.0);
  CHECK(m["config"]["optimizer"]["n_max"] == 128);
  CHECK(summary["results"].size() == 2u * 4u);

  // Header plus one row per trial, approach and threshold.
  std::ifstream csv(out / "trials.csv");
  int lines = 0;
  for (std::string line; std::getline(csv, line);) ++lines;
  CHECK(lines == 1 + 10 * 2 * 4);

  // Heatmap grid shape: rows are wall heights.
  std::ifstream hm(out / "heatmap_mp_50.csv");
  int rows = 0;
  for (std::string line; std::getline(hm, line); ++rows)
    CHECK(std::count(line.begin(), line.end(), ',') == cfg.grid_ky - 1);
  CHECK(rows == cfg.grid_kz);

  const fs::path again = scratch("bundle_again");
  run_bundle(cfg, again);
  for (const auto& e : fs::directory_iterator(out))
    CHECK(slurp(e.path()) == slurp(again / e.path().filename()));
  fs::remove_all(out);
  fs::remove_all(again);
}

TEST_CASE("an abandoned bundle leaves nothing behind") {
  RunConfig cfg;
  cfg.trials = 1;
  const fs::path out = scratch("abandoned");
  {
    BundleWriter w(cfg, cfg.to_plan(1), out);
  }
  CHECK_FALSE(fs::exists(out));
  for (const auto& e : fs::directory_iterator(out.parent_path()))
    CHECK(e.path().filename().string().find(".abandoned.staging") == std::string::npos);
}
