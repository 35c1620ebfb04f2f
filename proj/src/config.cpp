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

#include "vlcoris/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vlcoris/errors.hpp"

namespace vlcoris {

using nlohmann::json;

std::vector<double> RunConfig::default_gamma_sweep() {
  std::vector<double> v;
  for (int db = 10; db <= 50; db += 2) v.push_back(db);
  return v;
}

Scene RunConfig::to_scene() const {
  Scene s;
  s.room = room;
  s.leds.clear();
  for (const auto& p : leds) {
    Luminaire led;
    led.position = {p[0], p[1], p[2]};
    led.half_power_angle = deg_to_rad(led_half_power_deg);
    s.leds.push_back(led);
  }
  s.receiver.area = pd_area;
  s.receiver.responsivity = responsivity;
  s.receiver.fov = deg_to_rad(psi_deg.empty() ? 50.0 : psi_deg.front());
  s.device_height = device_height;
  s.reflectance = reflectance;
  s.reflector_wall = oris_wall;
  s.grid_ky = grid_ky;
  s.grid_kz = grid_kz;
  s.body = body;
  s.noise = noise;
  s.lighting = lighting;
  s.sensing_spacing = sensing_spacing;
  s.sensing_height = sensing_height;
  return s;
}

RunPlan RunConfig::to_plan(int workers) const {
  RunPlan plan;
  plan.modes = {reflector_mode};
  plan.psi.clear();
  for (double d : psi_deg) plan.psi.push_back(deg_to_rad(d));
  plan.gamma_th_db = gamma_th_db;
  plan.approaches = approaches;
  plan.trials = trials;
  plan.seed = seed;
  plan.workers = workers;
  return plan;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace

void RunConfig::validate() const {
  require(std::isfinite(led_half_power_deg) && led_half_power_deg > 0.0 && led_half_power_deg < 90.0,
          "led_half_power_deg must lie in (0, 90)");
  require(!psi_deg.empty(), "psi_deg must list at least one FoV");
  for (double p : psi_deg)
    require(std::isfinite(p) && p > 0.0 && p < 90.0, "psi_deg values must lie in (0, 90)");
  require(!gamma_th_db.empty(), "gamma_th_db must list at least one threshold");
  for (double g : gamma_th_db) require(std::isfinite(g), "gamma_th_db values must be finite");
  require(std::isfinite(heatmap_gamma_th_db), "heatmap_gamma_th_db must be finite");
  require(!approaches.empty(), "approaches must list at least one approach");
  std::set<Approach> seen(approaches.begin(), approaches.end());
  require(seen.size() == approaches.size(), "approaches must not repeat");
  require(trials >= 0, "trials must be non-negative");
  require(optimizer.n_max >= 0, "optimizer.n_max must be non-negative");
  require(optimizer.t_max >= 1, "optimizer.t_max must be at least 1");
  require(std::isfinite(optimizer.delta) && optimizer.delta > 0.0, "optimizer.delta must be positive");
  require(std::isfinite(optimizer.epsilon) && optimizer.epsilon >= 0.0,
          "optimizer.epsilon must be non-negative");
  require(!output_dir.empty(), "output_dir must not be empty");
  to_scene().validate();
}

RunConfig tiny_config() {
  RunConfig c;
  c.room = Room{2.0, 2.0, 2.5};
  c.leds = {{0.5, 1.0, 2.5}, {1.5, 1.0, 2.5}};
  c.grid_ky = 3;
  c.grid_kz = 2;
  c.reflector_mode = ReflectorMode::oris;
  c.sensing_spacing = 0.5;
  c.optimizer.n_max = 3;
  c.psi_deg = {50.0};
  c.gamma_th_db = {20.0, 30.0, 40.0, 50.0};
  c.trials = 200;
  c.output_dir = "results-tiny";
  return c;
}

namespace {

// Walks one JSON object, rejecting keys the schema does not know.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    require(j_.is_object(), path_ + " must be an object");
  }
  ~ObjectReader() noexcept(false) {
    if (std::uncaught_exceptions() > 0) return;
    for (const auto& [key, value] : j_.items())
      require(known_.count(key) > 0, "unknown key " + path_ + "." + key);
  }

  const json* find(const std::string& key) {
    known_.insert(key);
    const auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  void number(const std::string& key, double& out) {
    if (const json* v = find(key)) {
      require(v->is_number(), path_ + "." + key + " must be a number");
      out = v->get<double>();
    }
  }
  void integer(const std::string& key, int& out) {
    if (const json* v = find(key)) {
      require(v->is_number_integer(), path_ + "." + key + " must be an integer");
      out = v->get<int>();
    }
  }
  void unsigned64(const std::string& key, std::uint64_t& out) {
    if (const json* v = find(key)) {
      require(v->is_number_unsigned() || (v->is_number_integer() && v->get<long long>() >= 0),
              path_ + "." + key + " must be a non-negative integer");
      out = v->get<std::uint64_t>();
    }
  }
  void string(const std::string& key, std::string& out) {
    if (const json* v = find(key)) {
      require(v->is_string(), path_ + "." + key + " must be a string");
      out = v->get<std::string>();
    }
  }
  void numbers(const std::string& key, std::vector<double>& out) {
    if (const json* v = find(key)) {
      require(v->is_array(), path_ + "." + key + " must be an array of numbers");
      out.clear();
      for (const json& e : *v) {
        require(e.is_number(), path_ + "." + key + " must be an array of numbers");
        out.push_back(e.get<double>());
      }
    }
  }
  const std::string& path() const { return path_; }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> known_;
};

RunConfig from_json(const json& root) {
  RunConfig c;
  ObjectReader r(root, "config");
  if (const json* v = r.find("schema_version")) {
    require(v->is_number_integer() && v->get<int>() == kSchemaVersion,
            "unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
  }
  if (const json* v = r.find("room")) {
    ObjectReader o(*v, "room");
    o.number("length", c.room.length);
    o.number("width", c.room.width);
    o.number("height", c.room.height);
  }
  if (const json* v = r.find("leds")) {
    require(v->is_array(), "leds must be an array of [x, y, z] triples");
    c.leds.clear();
    for (const json& e : *v) {
      require(e.is_array() && e.size() == 3, "leds must be an array of [x, y, z] triples");
      std::array<double, 3> p{};
      for (int i = 0; i < 3; ++i) {
        require(e[i].is_number(), "leds must be an array of [x, y, z] triples");
        p[i] = e[i].get<double>();
      }
      c.leds.push_back(p);
    }
  }
  r.number("led_half_power_deg", c.led_half_power_deg);
  if (const json* v = r.find("wall_grid")) {
    ObjectReader o(*v, "wall_grid");
    o.integer("ky", c.grid_ky);
    o.integer("kz", c.grid_kz);
  }
  std::string text;
  if (r.find("reflector_mode")) {
    text = to_string(c.reflector_mode);
    r.string("reflector_mode", text);
    const auto m = parse_reflector_mode(text);
    require(m.has_value(), "reflector_mode must be none, mirror or oris");
    c.reflector_mode = *m;
  }
  if (r.find("oris_wall")) {
    text = to_string(c.oris_wall);
    r.string("oris_wall", text);
    const auto w = parse_wall_id(text);
    require(w.has_value(), "oris_wall must be x0, x1, y0 or y1");
    c.oris_wall = *w;
  }
  if (const json* v = r.find("receiver")) {
    ObjectReader o(*v, "receiver");
    o.number("area_m2", c.pd_area);
    o.number("responsivity", c.responsivity);
    o.number("height", c.device_height);
  }
  if (const json* v = r.find("reflectance")) {
    ObjectReader o(*v, "reflectance");
    o.number("wall", c.reflectance.diffuse);
    o.number("specular", c.reflectance.specular);
  }
  if (const json* v = r.find("noise")) {
    ObjectReader o(*v, "noise");
    o.number("psd", c.noise.psd);
    o.number("bandwidth", c.noise.bandwidth);
  }
  if (const json* v = r.find("illumination")) {
    ObjectReader o(*v, "illumination");
    o.number("e_th", c.lighting.e_th);
    o.number("e_max", c.lighting.e_max);
    o.number("u_min", c.lighting.u_min);
    o.number("efficacy", c.lighting.efficacy);
    o.number("grid_spacing", c.sensing_spacing);
    o.number("plane_height", c.sensing_height);
  }
  if (const json* v = r.find("body")) {
    ObjectReader o(*v, "body");
    o.number("radius", c.body.radius);
    o.number("height", c.body.height);
    o.number("device_offset", c.body.device_offset);
  }
  if (const json* v = r.find("optimizer")) {
    ObjectReader o(*v, "optimizer");
    o.integer("n_max", c.optimizer.n_max);
    o.integer("t_max", c.optimizer.t_max);
    o.number("delta", c.optimizer.delta);
    o.number("epsilon", c.optimizer.epsilon);
  }
  r.numbers("gamma_th_db", c.gamma_th_db);
  r.numbers("psi_deg", c.psi_deg);
  if (const json* v = r.find("approaches")) {
    require(v->is_array(), "approaches must be an array of strings");
    c.approaches.clear();
    for (const json& e : *v) {
      require(e.is_string(), "approaches must be an array of strings");
      const auto a = parse_approach(e.get<std::string>());
      require(a.has_value(), "unknown approach " + e.get<std::string>() +
                                 " (expected no-mirror, benchmark, mm or mp)");
      c.approaches.push_back(*a);
    }
  }
  r.integer("trials", c.trials);
  r.unsigned64("seed", c.seed);
  r.number("heatmap_gamma_th_db", c.heatmap_gamma_th_db);
  r.string("output_dir", c.output_dir);
  return c;
}

json to_json(const RunConfig& c) {
  json leds = json::array();
  for (const auto& p : c.leds) leds.push_back({p[0], p[1], p[2]});
  json approaches = json::array();
  for (Approach a : c.approaches) approaches.push_back(std::string(to_string(a)));
  json j;
  j["schema_version"] = kSchemaVersion;
  j["room"] = {{"length", c.room.length}, {"width", c.room.width}, {"height", c.room.height}};
  j["leds"] = leds;
  j["led_half_power_deg"] = c.led_half_power_deg;
  j["wall_grid"] = {{"ky", c.grid_ky}, {"kz", c.grid_kz}};
  j["reflector_mode"] = std::string(to_string(c.reflector_mode));
  j["oris_wall"] = std::string(to_string(c.oris_wall));
  j["receiver"] = {{"area_m2", c.pd_area}, {"responsivity", c.responsivity},
                   {"height", c.device_height}};
  j["reflectance"] = {{"wall", c.reflectance.diffuse}, {"specular", c.reflectance.specular}};
  j["noise"] = {{"psd", c.noise.psd}, {"bandwidth", c.noise.bandwidth}};
  j["illumination"] = {{"e_th", c.lighting.e_th},         {"e_max", c.lighting.e_max},
                       {"u_min", c.lighting.u_min},       {"efficacy", c.lighting.efficacy},
                       {"grid_spacing", c.sensing_spacing}, {"plane_height", c.sensing_height}};
  j["body"] = {{"radius", c.body.radius}, {"height", c.body.height},
               {"device_offset", c.body.device_offset}};
  j["optimizer"] = {{"n_max", c.optimizer.n_max}, {"t_max", c.optimizer.t_max},
                    {"delta", c.optimizer.delta}, {"epsilon", c.optimizer.epsilon}};
  j["gamma_th_db"] = c.gamma_th_db;
  j["psi_deg"] = c.psi_deg;
  j["approaches"] = approaches;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["heatmap_gamma_th_db"] = c.heatmap_gamma_th_db;
  j["output_dir"] = c.output_dir;
  return j;
}

}  // namespace

RunConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  RunConfig c;
  try {
    c = from_json(root);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value: ") + e.what());
  }
  c.validate();
  return c;
}

std::string dump_config(const RunConfig& config) { return to_json(config).dump(2) + "\n"; }

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

namespace {

double parse_number(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  require(ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(v) && !s.empty(),
          "not a number: '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::vector<double> parse_sweep(std::string_view text) {
  std::vector<std::string_view> parts;
  const char sep = text.find(':') != std::string_view::npos ? ':' : ',';
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  std::vector<double> out;
  if (sep == ',') {
    for (auto p : parts) out.push_back(parse_number(p));
    return out;
  }
  require(parts.size() == 3, "sweep must read start:step:stop");
  const double a = parse_number(parts[0]);
  const double step = parse_number(parts[1]);
  const double b = parse_number(parts[2]);
  require(step > 0.0, "sweep step must be positive");
  require(b >= a, "sweep stop must not precede start");
  const long long n = static_cast<long long>(std::floor((b - a) / step + 1e-9)) + 1;
  require(n <= 100000, "sweep has too many points");
  for (long long i = 0; i < n; ++i) out.push_back(a + static_cast<double>(i) * step);
  return out;
}

}  // namespace vlcoris
