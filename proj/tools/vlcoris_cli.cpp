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

// Command-line front end. Talks to the simulator only through the C API.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vlcoris/vlcoris.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInternal = 4;

int exit_code(vlc_status s) {
  switch (s) {
    case VLC_OK: return kExitOk;
    case VLC_ERR_INVALID_ARGUMENT:
    case VLC_ERR_CONFIG:
    case VLC_ERR_BUDGET: return kExitConfig;
    case VLC_ERR_INFEASIBLE: return kExitInfeasible;
    default: return kExitInternal;
  }
}

// Thrown on a failed library call; carries the status for the exit code.
struct ApiFailure {
  vlc_status status;
  std::string message;
};

void check(vlc_status s) {
  if (s != VLC_OK) throw ApiFailure{s, vlc_last_error()};
}

struct ScenarioDeleter {
  void operator()(vlc_scenario* s) const { vlc_scenario_free(s); }
};
using ScenarioPtr = std::unique_ptr<vlc_scenario, ScenarioDeleter>;

struct CString {
  char* p = nullptr;
  ~CString() { vlc_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

std::vector<double> sweep(const std::string& text) {
  double* values = nullptr;
  size_t n = 0;
  check(vlc_parse_sweep(text.c_str(), &values, &n));
  std::vector<double> out(values, values + n);
  vlc_doubles_free(values);
  return out;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

ScenarioPtr load(const std::string& path, bool tiny) {
  vlc_scenario* raw = nullptr;
  if (!path.empty()) {
    check(vlc_scenario_from_file(path.c_str(), &raw));
  } else {
    CString text;
    check(tiny ? vlc_default_tiny_config_json(&text.p) : vlc_default_config_json(&text.p));
    check(vlc_scenario_from_json(text.p, &raw));
  }
  return ScenarioPtr(raw);
}

void emit(const std::string& body, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  f << body;
  if (!f) throw ApiFailure{VLC_ERR_IO, "cannot write " + path};
}

int default_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflector-assisted indoor VLC outage simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(vlc_version()));

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo outage sweep");
  std::string config_path;
  int trials = -1;
  std::uint64_t seed = 0;
  std::string psi_text;
  std::string gamma_text;
  std::string approach_text;
  std::string mode_text;
  int workers = default_workers();
  std::string out_dir;
  sim->add_option("--config", config_path, "scenario JSON file (defaults built in)");
  auto* trials_opt = sim->add_option("--trials", trials, "number of user drops")->check(CLI::NonNegativeNumber);
  auto* seed_opt = sim->add_option("--seed", seed, "base seed");
  sim->add_option("--psi-deg", psi_text, "receiver FoV list, e.g. 30,40,50");
  sim->add_option("--gamma-th-db", gamma_text, "SNR threshold sweep start:step:stop or a,b,c");
  sim->add_option("--approach", approach_text, "no-mirror|benchmark|mm|mp, comma separated");
  sim->add_option("--mode", mode_text, "mirror|oris")->check(CLI::IsMember({"mirror", "oris", "none"}));
  sim->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  sim->add_option("--out", out_dir, "output directory (else $VLCORIS_OUT_DIR, else the config's)");

  // coverage
  auto* cov = app.add_subcommand("coverage", "Reflected-path coverage limits, theory vs ray trace");
  std::string cov_psi = "20:5:70";
  std::string cov_x = "0:0.25:4";
  double z_led = 3.0;
  double z_user = 1.0;
  std::string cov_out;
  cov->add_option("--psi-deg", cov_psi, "FoV list or sweep")->capture_default_str();
  cov->add_option("--led-x", cov_x, "LED distances from the wall")->capture_default_str();
  cov->add_option("--z-led", z_led, "LED height")->capture_default_str();
  cov->add_option("--z-user", z_user, "receiver height")->capture_default_str();
  cov->add_option("--out", cov_out, "CSV file (stdout when omitted)");

  // oracle-validate
  auto* ora = app.add_subcommand("oracle-validate", "Heuristics against exhaustive search");
  std::string ora_config;
  int instances = 200;
  std::uint64_t ora_seed = 1;
  std::string ora_out;
  ora->add_option("--config", ora_config, "small scenario JSON (built-in tiny scene by default)");
  ora->add_option("--instances", instances, "random instances")->capture_default_str()->check(CLI::NonNegativeNumber);
  ora->add_option("--seed", ora_seed, "base seed")->capture_default_str();
  ora->add_option("--out", ora_out, "JSON report file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (sim->parsed()) {
      ScenarioPtr scn = load(config_path, false);
      nlohmann::json patch = nlohmann::json::object();
      if (trials_opt->count()) patch["trials"] = trials;
      if (seed_opt->count()) patch["seed"] = seed;
      if (!psi_text.empty()) patch["psi_deg"] = sweep(psi_text);
      if (!gamma_text.empty()) patch["gamma_th_db"] = sweep(gamma_text);
      if (!approach_text.empty()) patch["approaches"] = split(approach_text);
      if (!mode_text.empty()) patch["reflector_mode"] = mode_text;
      if (!patch.empty()) check(vlc_scenario_merge_json(scn.get(), patch.dump().c_str()));

      std::string dir = out_dir;
      if (dir.empty()) {
        if (const char* env = std::getenv("VLCORIS_OUT_DIR"); env && *env) dir = env;
      }
      check(vlc_simulate(scn.get(), workers, dir.empty() ? nullptr : dir.c_str()));
      if (dir.empty()) {
        CString cfg;
        check(vlc_scenario_to_json(scn.get(), &cfg.p));
        dir = nlohmann::json::parse(cfg.str()).at("output_dir").get<std::string>();
      }
      std::cerr << "wrote results to " << dir << "\n";
    } else if (cov->parsed()) {
      const std::vector<double> psi = sweep(cov_psi);
      const std::vector<double> xs = sweep(cov_x);
      CString csv;
      check(vlc_coverage_table(psi.data(), psi.size(), xs.data(), xs.size(), z_led, z_user,
                               &csv.p));
      emit(csv.str(), cov_out);
    } else if (ora->parsed()) {
      ScenarioPtr scn = load(ora_config, true);
      CString report;
      check(vlc_oracle_validate(scn.get(), instances, ora_seed, &report.p));
      emit(report.str(), ora_out);
      const auto j = nlohmann::json::parse(report.str());
      std::cerr << "b agreement: mm " << j["b_agreement"]["mm"].get<double>() << ", mp "
                << j["b_agreement"]["mp"].get<double>() << "\n";
    }
  } catch (const ApiFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
