/* SPDX-License-Identifier: Apache-2.0
 *
 * vlcoris: reflector-assisted indoor visible light communication simulator
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ------------------------------------------------------------------------
 *
 * C interface to the simulator. Every function returns a vlc_status; on
 * failure vlc_last_error() describes the problem for the calling thread.
 * Strings and arrays handed out by the library are released with
 * vlc_string_free() / vlc_doubles_free().
 */

#ifndef VLCORIS_VLCORIS_H
#define VLCORIS_VLCORIS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(VLCORIS_BUILDING)
#define VLC_API __declspec(dllexport)
#else
#define VLC_API __declspec(dllimport)
#endif
#else
#define VLC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vlc_status {
  VLC_OK = 0,
  VLC_ERR_INVALID_ARGUMENT = 1,
  VLC_ERR_CONFIG = 2,
  VLC_ERR_INFEASIBLE = 3,  /* lighting constraints cannot be met */
  VLC_ERR_INTERNAL = 4,
  VLC_ERR_BUDGET = 5,      /* exhaustive search too large */
  VLC_ERR_IO = 6
} vlc_status;

typedef struct vlc_scenario vlc_scenario;

VLC_API const char* vlc_version(void);

/* Message for the last failing call on this thread; empty if none. */
VLC_API const char* vlc_last_error(void);

VLC_API void vlc_string_free(char* s);
VLC_API void vlc_doubles_free(double* values);

/* Default scenario and the small exhaustive-search scenario as JSON. */
VLC_API vlc_status vlc_default_config_json(char** out_json);
VLC_API vlc_status vlc_default_tiny_config_json(char** out_json);

VLC_API vlc_status vlc_scenario_from_json(const char* json, vlc_scenario** out);
VLC_API vlc_status vlc_scenario_from_file(const char* path, vlc_scenario** out);
VLC_API vlc_status vlc_scenario_to_json(const vlc_scenario* scn, char** out_json);
VLC_API void vlc_scenario_free(vlc_scenario* scn);

/* Overlays the top-level keys of a JSON object onto the scenario and
 * revalidates; on failure the scenario is unchanged. */
VLC_API vlc_status vlc_scenario_merge_json(vlc_scenario* scn, const char* patch_json);

/* "start:step:stop" (inclusive) or "a,b,c". */
VLC_API vlc_status vlc_parse_sweep(const char* text, double** out_values, size_t* out_count);

/* Runs the Monte Carlo sweep and writes summary.json, trials.csv and the
 * heatmap grids into out_dir (the scenario's output_dir when NULL). Files
 * appear only after the whole run succeeded. */
VLC_API vlc_status vlc_simulate(const vlc_scenario* scn, int workers, const char* out_dir);

/* Same run, returning summary.json contents without touching the disk. */
VLC_API vlc_status vlc_simulate_summary(const vlc_scenario* scn, int workers, char** out_json);

/* Farthest wall distance with a reflected path; mode is "mirror" or "oris". */
VLC_API vlc_status vlc_coverage_limit(const char* mode, double led_x, double z_led, double z_user,
                                      double psi_deg, double* out_limit);

/* CSV of theoretical and ray-traced limits for both reflector kinds. */
VLC_API vlc_status vlc_coverage_table(const double* psi_deg, size_t n_psi, const double* led_x,
                                      size_t n_x, double z_led, double z_user, char** out_csv);

/* Heuristics against exhaustive search on random instances of a small
 * scenario; JSON report. */
VLC_API vlc_status vlc_oracle_validate(const vlc_scenario* tiny, int instances, uint64_t seed,
                                       char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* VLCORIS_VLCORIS_H */
