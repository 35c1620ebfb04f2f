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
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>
#include <stdexcept>

#include "doctest.h"
#include "vlcoris/vlcoris.h"

namespace fs = std::filesystem;

namespace {

// Small run over the default room.
vlc_scenario* small_scenario() {
  vlc_scenario* s = nullptr;
  REQUIRE(vlc_scenario_from_json(
              R"({"trials": 4, "seed": 11, "psi_deg": [50], "gamma_th_db": [30, 40]})", &s) ==
          VLC_OK);
  return s;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  vlc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and errors") {
  CHECK(std::string(vlc_version()) == "0.1.0");
  vlc_scenario* s = nullptr;
  CHECK(vlc_scenario_from_json("{", &s) == VLC_ERR_CONFIG);
  CHECK(s == nullptr);
  CHECK(std::strlen(vlc_last_error()) > 0);
  CHECK(vlc_scenario_from_json(nullptr, &s) == VLC_ERR_INVALID_ARGUMENT);
  CHECK(vlc_scenario_from_json("{}", nullptr) == VLC_ERR_INVALID_ARGUMENT);
  CHECK(vlc_simulate(nullptr, 1, nullptr) == VLC_ERR_INVALID_ARGUMENT);
  CHECK(vlc_scenario_from_file("/nonexistent/x.json", &s) == VLC_ERR_CONFIG);
}

TEST_CASE("scenario JSON") {
  char* json = nullptr;
  REQUIRE(vlc_default_config_json(&json) == VLC_OK);
  const std::string defaults = take(json);
  vlc_scenario* s = nullptr;
  REQUIRE(vlc_scenario_from_json(defaults.c_str(), &s) == VLC_OK);
  REQUIRE(vlc_scenario_to_json(s, &json) == VLC_OK);
  CHECK(take(json) == defaults);

  // A bad patch is rejected whole.
  CHECK(vlc_scenario_merge_json(s, R"({"trials": 3, "bogus": 1})") == VLC_ERR_CONFIG);
  CHECK(vlc_scenario_merge_json(s, R"({"trials": -3})") == VLC_ERR_CONFIG);
  CHECK(vlc_scenario_merge_json(s, "[1]") == VLC_ERR_CONFIG);
  REQUIRE(vlc_scenario_to_json(s, &json) == VLC_OK);
  CHECK(take(json) == defaults);

  CHECK(vlc_scenario_merge_json(s, R"({"trials": 3})") == VLC_OK);
  REQUIRE(vlc_scenario_to_json(s, &json) == VLC_OK);
  CHECK(take(json) != defaults);
  vlc_scenario_free(s);

  REQUIRE(vlc_default_tiny_config_json(&json) == VLC_OK);
  CHECK(take(json) != defaults);
}

TEST_CASE("sweeps and coverage") {
  double* v = nullptr;
  size_t n = 0;
  REQUIRE(vlc_parse_sweep("10:2:50", &v, &n) == VLC_OK);
  CHECK(n == 21u);
  CHECK(v[20] == 50.0);
  vlc_doubles_free(v);
  CHECK(vlc_parse_sweep("a:b", &v, &n) == VLC_ERR_CONFIG);

  double limit = 0.0;
  REQUIRE(vlc_coverage_limit("mirror", 1.0, 3.0, 1.0, 50.0, &limit) == VLC_OK);
  const double mirror = limit;
  REQUIRE(vlc_coverage_limit("oris", 1.0, 3.0, 1.0, 50.0, &limit) == VLC_OK);
  CHECK(limit >= mirror);
  CHECK(vlc_coverage_limit("glass", 1.0, 3.0, 1.0, 50.0, &limit) == VLC_ERR_INVALID_ARGUMENT);

  const double psi[] = {30.0, 50.0}, xs[] = {0.5, 1.0};
  char* csv = nullptr;
  REQUIRE(vlc_coverage_table(psi, 2, xs, 2, 3.0, 1.0, &csv) == VLC_OK);
  const std::string table = take(csv);
  int lines = 0;
  for (char c : table) lines += c == '\n';
  CHECK(lines >= 5);
}

TEST_CASE("simulation") {
  vlc_scenario* s = small_scenario();
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(vlc_simulate_summary(s, 1, &a) == VLC_OK);
  REQUIRE(vlc_simulate_summary(s, 3, &b) == VLC_OK);
  const std::string summary = take(a);
  CHECK(summary == take(b));
  CHECK(summary.find("\"outage_probability\"") != std::string::npos);

  const fs::path out = fs::temp_directory_path() / "vlcoris_capi_run";
  fs::remove_all(out);
  REQUIRE(vlc_simulate(s, 2, out.string().c_str()) == VLC_OK);
  CHECK(fs::exists(out / "summary.json"));
  CHECK(fs::exists(out / "trials.csv"));
  CHECK(fs::exists(out / "heatmap_mp_50.csv"));
  fs::remove_all(out);

  // Lighting targets no power allocation can meet.
  CHECK(vlc_scenario_merge_json(s, R"({"illumination": {"e_th": 790, "u_min": 0.99}})") == VLC_OK);
  const fs::path dark = fs::temp_directory_path() / "vlcoris_capi_dark";
  fs::remove_all(dark);
  CHECK(vlc_simulate(s, 1, dark.string().c_str()) == VLC_ERR_INFEASIBLE);
  CHECK_FALSE(fs::exists(dark));
  vlc_scenario_free(s);
}

TEST_CASE("oracle report") {
  char* json = nullptr;
  REQUIRE(vlc_default_tiny_config_json(&json) == VLC_OK);
  vlc_scenario* tiny = nullptr;
  REQUIRE(vlc_scenario_from_json(json, &tiny) == VLC_OK);
  vlc_string_free(json);
  REQUIRE(vlc_oracle_validate(tiny, 5, 1, &json) == VLC_OK);
  CHECK(take(json).find("agreement") != std::string::npos);
  vlc_scenario_free(tiny);

  vlc_scenario* big = small_scenario();
  CHECK(vlc_oracle_validate(big, 1, 1, &json) == VLC_ERR_BUDGET);
  vlc_scenario_free(big);
}
