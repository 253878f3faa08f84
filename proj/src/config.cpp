// Copyright 2026 The qudit-transfer Authors
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

#include "qst/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qst/presets.hpp"

namespace qst {

namespace {

using nlohmann::json;

double rate_from_lifetime_us(const json& v, const std::string& key) {
  if (v.is_null()) return 0.0;
  const double t = v.get<double>();
  if (!(t > 0.0)) {
    throw std::invalid_argument(key + ": lifetimes must be positive (use null for no decay)");
  }
  return 1.0 / (t * 1e-6);
}

std::vector<double> rates_from_lifetimes(const json& v, const std::string& key, int expected) {
  if (!v.is_array() || static_cast<int>(v.size()) != expected) {
    throw std::invalid_argument(key + " needs " + std::to_string(expected) + " entries");
  }
  std::vector<double> out;
  for (const auto& x : v) out.push_back(rate_from_lifetime_us(x, key));
  return out;
}

std::vector<double> grid(const json& v, const std::string& key) {
  if (v.is_array()) return v.get<std::vector<double>>();
  if (v.is_object()) {
    return linspace(v.at("start").get<double>(), v.at("stop").get<double>(),
                    v.at("count").get<int>());
  }
  throw std::invalid_argument(key + " must be a list or a {start, stop, count} range");
}

std::vector<Complex> coefficients(const json& v, int d) {
  if (!v.is_array() || static_cast<int>(v.size()) != d) {
    throw std::invalid_argument("input_state needs d = " + std::to_string(d) + " entries");
  }
  std::vector<Complex> c;
  double norm2 = 0.0;
  for (const auto& x : v) {
    const Complex z = x.is_array() ? Complex(x.at(0).get<double>(), x.at(1).get<double>())
                                   : Complex(x.get<double>(), 0.0);
    norm2 += std::norm(z);
    c.push_back(z);
  }
  if (!(norm2 > 0.0)) {
    throw std::invalid_argument("input_state must not be the zero vector");
  }
  for (auto& z : c) z /= std::sqrt(norm2);
  return c;
}

void apply_model(const json& m, ModelParams& p) {
  if (m.contains("n_max")) p.n_max = m["n_max"].get<int>();
  if (m.contains("g1_mhz_over_2pi")) p.set_coupling(angular_mhz(m["g1_mhz_over_2pi"].get<double>()));
  if (m.contains("g2_over_g1")) p.g2 = m["g2_over_g1"].get<double>() * p.g1;
  if (m.contains("g2_mhz_over_2pi")) p.g2 = angular_mhz(m["g2_mhz_over_2pi"].get<double>());
  if (m.contains("omega_mhz_over_2pi")) p.omega = angular_mhz(m["omega_mhz_over_2pi"].get<double>());
  if (m.contains("anharm_mhz_over_2pi")) {
    p.anharm.clear();
    for (double a : m["anharm_mhz_over_2pi"].get<std::vector<double>>()) {
      p.anharm.push_back(angular_mhz(a));
    }
  }
  if (m.contains("kappa_inv_us")) p.kappa = rate_from_lifetime_us(m["kappa_inv_us"], "kappa_inv_us");
  if (m.contains("gamma_relax_inv_us")) {
    p.gamma_relax = rates_from_lifetimes(m["gamma_relax_inv_us"], "gamma_relax_inv_us", p.d - 1);
  }
  if (m.contains("gamma_phi_inv_us")) {
    p.gamma_phi = rates_from_lifetimes(m["gamma_phi_inv_us"], "gamma_phi_inv_us", p.d - 1);
  }
  if (m.contains("omega_c_ghz_over_2pi")) {
    p.omega_c = 2.0 * std::numbers::pi * 1e9 * m["omega_c_ghz_over_2pi"].get<double>();
  }
  if (m.contains("realism")) {
    const json& r = m["realism"];
    if (r.is_boolean()) {
      const bool rotating = p.realism.rotating_phases;
      p.realism = r.get<bool>() ? RealismFlags::all_on() : RealismFlags::all_off();
      p.realism.rotating_phases = rotating;
    } else {
      p.realism.include_eps1 = r.value("include_eps1", p.realism.include_eps1);
      p.realism.include_eps_l = r.value("include_eps_l", p.realism.include_eps_l);
      p.realism.include_cavity_during_pulse =
          r.value("include_cavity_during_pulse", p.realism.include_cavity_during_pulse);
      p.realism.rotating_phases = r.value("rotating_phases", p.realism.rotating_phases);
    }
  }
  if (m.contains("rates") && !m["rates"].get<bool>()) p = p.without_decoherence();
}

IntegratorOptions integrator(const json& j) {
  IntegratorOptions o;
  if (j.contains("dt_s") && !j["dt_s"].is_null()) o.dt = j["dt_s"].get<double>();
  o.dt_scale = j.value("dt_scale", o.dt_scale);
  o.steps_per_segment = j.value("steps_per_segment", o.steps_per_segment);
  o.steps_per_period = j.value("steps_per_period", o.steps_per_period);
  if (!(o.dt_scale > 0.0) || !(o.steps_per_segment > 0.0) || !(o.steps_per_period > 0.0)) {
    throw std::invalid_argument("integrator settings must be positive");
  }
  return o;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    ExperimentConfig cfg;
    const int d = doc.at("d").get<int>();
    const std::string preset = doc.value("preset", std::string(d >= 3 && d <= 5 ? "paper" : "ideal"));
    cfg.params = preset_by_name(preset, d);
    if (doc.contains("model")) apply_model(doc["model"], cfg.params);
    cfg.params.validate();
    if (doc.contains("input_state")) cfg.input_state = coefficients(doc["input_state"], d);
    if (doc.contains("integrator")) cfg.integrator = integrator(doc["integrator"]);
    if (doc.contains("sweep")) {
      const json& s = doc["sweep"];
      SweepConfig sweep;
      sweep.g_grid_mhz = grid(s.at("g_mhz_over_2pi"), "g_mhz_over_2pi");
      sweep.omega_grid_mhz = grid(s.at("omega_mhz_over_2pi"), "omega_mhz_over_2pi");
      sweep.parallel_workers = s.value("parallel_workers", 1);
      sweep.base = cfg.params;
      sweep.input_state = cfg.input_state;
      sweep.integrator = cfg.integrator;
      sweep.validate();
      cfg.sweep = std::move(sweep);
    }
    return cfg;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed config: ") + e.what());
  }
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace qst
