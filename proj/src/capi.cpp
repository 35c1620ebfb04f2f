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

#include "vlcoris/vlcoris.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <string>

#include "json.hpp"
#include "vlcoris/bundle.hpp"
#include "vlcoris/config.hpp"
#include "vlcoris/errors.hpp"
#include "vlcoris/montecarlo.hpp"
#include "vlcoris/reports.hpp"

struct vlc_scenario {
  vlcoris::RunConfig config;
};

namespace {

thread_local std::string g_last_error;

vlc_status fail(vlc_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

// Maps exceptions from the core onto status codes.
template <class F>
vlc_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return VLC_OK;
  } catch (const vlcoris::ConfigError& e) {
    return fail(VLC_ERR_CONFIG, e.what());
  } catch (const vlcoris::InfeasibleError& e) {
    return fail(VLC_ERR_INFEASIBLE, e.what());
  } catch (const vlcoris::BudgetError& e) {
    return fail(VLC_ERR_BUDGET, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(VLC_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(VLC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(VLC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(VLC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(VLC_ERR_INTERNAL, "unknown failure");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require_arg(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string run_summary(const vlcoris::RunConfig& cfg, int workers,
                        vlcoris::BundleWriter* writer) {
  const vlcoris::Scene scene = cfg.to_scene();
  const vlcoris::RunPlan plan = cfg.to_plan(workers);
  const vlcoris::SolverContext ctx = vlcoris::SolverContext::build(scene, cfg.optimizer);
  vlcoris::Aggregator agg(plan, cfg.grid_ky * cfg.grid_kz);
  vlcoris::run_trials(scene, ctx, plan, [&](const vlcoris::TrialRecord& rec) {
    if (writer)
      writer->add(rec);
    else
      agg.add(rec);
  });
  if (writer) {
    writer->commit();
    return {};
  }
  return vlcoris::summary_json(cfg, plan, agg);
}

}  // namespace

extern "C" {

const char* vlc_version(void) { return vlcoris::kVersion.data(); }

const char* vlc_last_error(void) { return g_last_error.c_str(); }

void vlc_string_free(char* s) { std::free(s); }

void vlc_doubles_free(double* values) { std::free(values); }

vlc_status vlc_default_config_json(char** out_json) {
  return guarded([&] {
    require_arg(out_json, "output pointer is null");
    *out_json = copy_string(vlcoris::dump_config(vlcoris::RunConfig{}));
  });
}

vlc_status vlc_default_tiny_config_json(char** out_json) {
  return guarded([&] {
    require_arg(out_json, "output pointer is null");
    *out_json = copy_string(vlcoris::dump_config(vlcoris::tiny_config()));
  });
}

vlc_status vlc_scenario_from_json(const char* json, vlc_scenario** out) {
  return guarded([&] {
    require_arg(json && out, "null argument");
    *out = nullptr;
    auto scn = std::make_unique<vlc_scenario>();
    scn->config = vlcoris::parse_config(json);
    *out = scn.release();
  });
}

vlc_status vlc_scenario_from_file(const char* path, vlc_scenario** out) {
  return guarded([&] {
    require_arg(path && out, "null argument");
    *out = nullptr;
    auto scn = std::make_unique<vlc_scenario>();
    scn->config = vlcoris::load_config_file(path);
    *out = scn.release();
  });
}

vlc_status vlc_scenario_to_json(const vlc_scenario* scn, char** out_json) {
  return guarded([&] {
    require_arg(scn && out_json, "null argument");
    *out_json = copy_string(vlcoris::dump_config(scn->config));
  });
}

void vlc_scenario_free(vlc_scenario* scn) { delete scn; }

vlc_status vlc_scenario_merge_json(vlc_scenario* scn, const char* patch_json) {
  return guarded([&] {
    require_arg(scn && patch_json, "null argument");
    nlohmann::json base = nlohmann::json::parse(vlcoris::dump_config(scn->config));
    nlohmann::json patch;
    try {
      patch = nlohmann::json::parse(patch_json);
    } catch (const nlohmann::json::parse_error& e) {
      throw vlcoris::ConfigError(std::string("malformed JSON patch: ") + e.what());
    }
    if (!patch.is_object()) throw vlcoris::ConfigError("JSON patch must be an object");
    for (const auto& [key, value] : patch.items()) base[key] = value;
    scn->config = vlcoris::parse_config(base.dump());
  });
}

vlc_status vlc_parse_sweep(const char* text, double** out_values, size_t* out_count) {
  return guarded([&] {
    require_arg(text && out_values && out_count, "null argument");
    const std::vector<double> v = vlcoris::parse_sweep(text);
    double* buf = static_cast<double*>(std::malloc(sizeof(double) * (v.empty() ? 1 : v.size())));
    if (!buf) throw std::bad_alloc();
    std::copy(v.begin(), v.end(), buf);
    *out_values = buf;
    *out_count = v.size();
  });
}

vlc_status vlc_simulate(const vlc_scenario* scn, int workers, const char* out_dir) {
  return guarded([&] {
    require_arg(scn, "null scenario");
    require_arg(workers >= 1, "worker count must be at least 1");
    const vlcoris::RunConfig& cfg = scn->config;
    const std::string dir = out_dir && *out_dir ? std::string(out_dir) : cfg.output_dir;
    // Fail on the lighting rules before any file is created.
    vlcoris::SolverContext::build(cfg.to_scene(), cfg.optimizer);
    vlcoris::BundleWriter writer(cfg, cfg.to_plan(workers), dir);
    run_summary(cfg, workers, &writer);
  });
}

vlc_status vlc_simulate_summary(const vlc_scenario* scn, int workers, char** out_json) {
  return guarded([&] {
    require_arg(scn && out_json, "null argument");
    require_arg(workers >= 1, "worker count must be at least 1");
    *out_json = copy_string(run_summary(scn->config, workers, nullptr));
  });
}

vlc_status vlc_coverage_limit(const char* mode, double led_x, double z_led, double z_user,
                              double psi_deg, double* out_limit) {
  return guarded([&] {
    require_arg(mode && out_limit, "null argument");
    const auto m = vlcoris::parse_reflector_mode(mode);
    require_arg(m && *m != vlcoris::ReflectorMode::none, "mode must be mirror or oris");
    *out_limit = vlcoris::coverage_limit(*m, led_x, z_led, z_user, vlcoris::deg_to_rad(psi_deg));
  });
}

vlc_status vlc_coverage_table(const double* psi_deg, size_t n_psi, const double* led_x, size_t n_x,
                              double z_led, double z_user, char** out_csv) {
  return guarded([&] {
    require_arg(out_csv && (psi_deg || n_psi == 0) && (led_x || n_x == 0), "null argument");
    const std::vector<double> psi(psi_deg, psi_deg + n_psi);
    const std::vector<double> xs(led_x, led_x + n_x);
    for (double x : xs) require_arg(x >= 0.0, "LED distance from the wall must be non-negative");
    *out_csv = copy_string(vlcoris::coverage_csv(psi, xs, z_led, z_user));
  });
}

vlc_status vlc_oracle_validate(const vlc_scenario* tiny, int instances, uint64_t seed,
                               char** out_json) {
  return guarded([&] {
    require_arg(tiny && out_json, "null argument");
    require_arg(instances >= 0, "instance count must be non-negative");
    *out_json = copy_string(vlcoris::oracle_validate(tiny->config, instances, seed).to_json());
  });
}

}  // extern "C"
