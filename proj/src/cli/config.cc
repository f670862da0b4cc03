// Copyright 2026 The qtrotter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qtrotter/cli/config.h"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qtrotter::cli {

namespace {

using nlohmann::json;

constexpr double kDeg = std::numbers::pi / 180.0;

void check_keys(const json& j, const std::string& where, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (std::string_view a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

double number(const json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError(key + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(key + ": must be finite");
  return v;
}

double positive(const json& j, const std::string& key) {
  const double v = number(j, key);
  if (!(v > 0.0)) throw ConfigError(key + ": must be positive");
  return v;
}

std::uint64_t unsigned_int(const json& j, const std::string& key) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw ConfigError(key + ": expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::string text(const json& j, const std::string& key) {
  if (!j.is_string()) throw ConfigError(key + ": expected a string");
  return j.get<std::string>();
}

template <typename T, typename F>
std::vector<T> list(const json& j, const std::string& key, F&& element) {
  if (!j.is_array() || j.empty()) throw ConfigError(key + ": expected a non-empty array");
  std::vector<T> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(element(j[i], key + "[" + std::to_string(i) + "]"));
  return out;
}

double angle(const json& j, const std::string& key) {
  const double deg = number(j, key);
  if (deg < 0.0 || deg >= 90.0) throw ConfigError(key + ": angle must lie in [0, 90) degrees");
  return deg;
}

double intrinsic(const json& j, const std::string& key) {
  if (j.is_null()) return ExperimentConfig::kInfinity;
  return positive(j, key);
}

}  // namespace

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::kEvolve: return "evolve";
    case Mode::kTrotter: return "trotter";
    case Mode::kScan: return "scan";
    case Mode::kDilateVerify: return "dilate-verify";
    case Mode::kFit: return "fit";
    case Mode::kMitigate: return "mitigate";
    case Mode::kConverge: return "converge";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view name) {
  for (Mode m : {Mode::kEvolve, Mode::kTrotter, Mode::kScan, Mode::kDilateVerify, Mode::kFit,
                 Mode::kMitigate, Mode::kConverge})
    if (mode_name(m) == name) return m;
  return std::nullopt;
}

InitialState parse_initial_state(std::string_view name) {
  for (InitialState s : kTomographyStates)
    if (state_name(s) == name) return s;
  throw ConfigError("initial_state: expected one of 0, 1, +, +i; got '" + std::string(name) + "'");
}

TrotterSchedule ExperimentConfig::schedule() const {
  TrotterSchedule s;
  s.permutation = permutation;
  s.order = order;
  s.n_steps = n_steps;
  s.dt = angles.tau0;
  s.backend = backend;
  s.noise = noise;
  return s;
}

CanonicalRates ExperimentConfig::rates() const {
  return with_intrinsic(angle_to_rates(angles), t1_0, t2_0);
}

ExperimentConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  check_keys(root, "config",
             {"mode", "angles_deg", "tau0_us", "intrinsic_us", "n_steps", "order", "permutation",
              "backend", "noise", "initial_state", "shots", "seed", "output", "scan", "dilate_verify",
              "fit", "converge", "mitigate"});

  ExperimentConfig c;
  double deg[3] = {0.0, 0.0, 0.0};
  if (root.contains("mode")) {
    const std::string m = text(root["mode"], "mode");
    c.mode = parse_mode(m);
    if (!c.mode) throw ConfigError("mode: unknown mode '" + m + "'");
  }
  if (root.contains("angles_deg")) {
    const json& a = root["angles_deg"];
    check_keys(a, "angles_deg", {"theta1", "theta2", "theta3"});
    if (a.contains("theta1")) deg[0] = angle(a["theta1"], "angles_deg.theta1");
    if (a.contains("theta2")) deg[1] = angle(a["theta2"], "angles_deg.theta2");
    if (a.contains("theta3")) deg[2] = number(a["theta3"], "angles_deg.theta3");
  }
  double tau0 = 3.56;
  if (root.contains("tau0_us")) tau0 = positive(root["tau0_us"], "tau0_us");
  c.angles = AngleParams::from_degrees(deg[0], deg[1], deg[2], tau0);

  if (root.contains("intrinsic_us")) {
    const json& i = root["intrinsic_us"];
    check_keys(i, "intrinsic_us", {"t1", "t2"});
    if (i.contains("t1")) c.t1_0 = intrinsic(i["t1"], "intrinsic_us.t1");
    if (i.contains("t2")) c.t2_0 = intrinsic(i["t2"], "intrinsic_us.t2");
    if (c.t2_0 > 2.0 * c.t1_0) throw ConfigError("intrinsic_us: t2 must not exceed 2 * t1");
  }
  if (root.contains("n_steps")) {
    c.n_steps = unsigned_int(root["n_steps"], "n_steps");
    if (c.n_steps < 1) throw ConfigError("n_steps: must be at least 1");
  }
  if (root.contains("order")) {
    const auto o = unsigned_int(root["order"], "order");
    if (o != 1 && o != 2) throw ConfigError("order: must be 1 or 2");
    c.order = static_cast<int>(o);
  }
  try {
    if (root.contains("permutation")) c.permutation = parse_permutation(text(root["permutation"], "permutation"));
    if (root.contains("backend")) c.backend = parse_backend(text(root["backend"], "backend"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (root.contains("noise")) {
    const json& n = root["noise"];
    check_keys(n, "noise", {"p_grape", "p_ancilla_decay"});
    if (n.contains("p_grape")) c.noise.p_grape = number(n["p_grape"], "noise.p_grape");
    if (n.contains("p_ancilla_decay")) c.noise.p_ancilla_decay = number(n["p_ancilla_decay"], "noise.p_ancilla_decay");
    try {
      c.noise.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (root.contains("initial_state")) c.initial_state = parse_initial_state(text(root["initial_state"], "initial_state"));
  if (root.contains("shots") && !root["shots"].is_null()) {
    c.shots = unsigned_int(root["shots"], "shots");
    if (*c.shots == 0) throw ConfigError("shots: must be positive or null");
  }
  if (root.contains("seed")) c.seed = unsigned_int(root["seed"], "seed");
  if (root.contains("output")) c.output = text(root["output"], "output");

  if (root.contains("scan")) {
    const json& s = root["scan"];
    check_keys(s, "scan", {"theta2_deg", "orders"});
    if (s.contains("theta2_deg")) c.scan_theta2_deg = list<double>(s["theta2_deg"], "scan.theta2_deg", angle);
    if (s.contains("orders")) {
      c.scan_orders = list<int>(s["orders"], "scan.orders", [](const json& j, const std::string& k) {
        const auto o = unsigned_int(j, k);
        if (o != 1 && o != 2) throw ConfigError(k + ": must be 1 or 2");
        return static_cast<int>(o);
      });
    }
  }
  if (root.contains("dilate_verify")) {
    const json& d = root["dilate_verify"];
    check_keys(d, "dilate_verify", {"theta_deg"});
    if (d.contains("theta_deg")) c.verify_theta_deg = list<double>(d["theta_deg"], "dilate_verify.theta_deg", angle);
  }
  if (root.contains("fit")) {
    const json& f = root["fit"];
    check_keys(f, "fit", {"source"});
    if (f.contains("source")) {
      const std::string src = text(f["source"], "fit.source");
      if (src != "trotter" && src != "exact") throw ConfigError("fit.source: expected 'trotter' or 'exact'");
      c.fit_from_trotter = src == "trotter";
    }
  }
  if (root.contains("converge")) {
    const json& v = root["converge"];
    check_keys(v, "converge", {"n_list", "t_total_us"});
    if (v.contains("n_list")) {
      c.converge_n_list = list<std::size_t>(v["n_list"], "converge.n_list", [](const json& j, const std::string& k) {
        const auto n = unsigned_int(j, k);
        if (n < 1) throw ConfigError(k + ": must be at least 1");
        return static_cast<std::size_t>(n);
      });
      if (c.converge_n_list.size() < 4) throw ConfigError("converge.n_list: need at least 4 step counts");
    }
    if (v.contains("t_total_us")) c.converge_t_total = positive(v["t_total_us"], "converge.t_total_us");
  }
  if (root.contains("mitigate")) {
    const json& m = root["mitigate"];
    check_keys(m, "mitigate", {"c", "base_gamma1", "max_order", "quantity", "csv"});
    if (m.contains("c")) c.mitigate_c = list<double>(m["c"], "mitigate.c", positive);
    if (m.contains("base_gamma1")) c.mitigate_base_gamma1 = positive(m["base_gamma1"], "mitigate.base_gamma1");
    if (m.contains("max_order")) c.mitigate_max_order = unsigned_int(m["max_order"], "mitigate.max_order");
    if (m.contains("quantity")) {
      const std::string q = text(m["quantity"], "mitigate.quantity");
      if (q != "t2" && q != "inverse_t2") throw ConfigError("mitigate.quantity: expected 't2' or 'inverse_t2'");
      c.mitigate_inverse = q == "inverse_t2";
    }
    if (m.contains("csv")) c.mitigate_csv = text(m["csv"], "mitigate.csv");
    if (c.mitigate_csv.empty() && c.mitigate_c.size() < c.mitigate_max_order + 1) {
      throw ConfigError("mitigate: max_order needs max_order + 1 scale factors");
    }
    if (c.mitigate_csv.empty() && std::abs(c.mitigate_c.front() - 1.0) > 1e-12) {
      throw ConfigError("mitigate.c: the first scale factor must be 1");
    }
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace qtrotter::cli
