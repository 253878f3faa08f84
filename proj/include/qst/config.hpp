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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qst/dynamics.hpp"
#include "qst/model.hpp"
#include "qst/sweep.hpp"

namespace qst {

/// Parsed experiment document. Units are carried in the key names:
///
///   {
///     "d": 5,
///     "preset": "paper",                      // or "ideal"; base values for every key below
///     "model": {
///       "g1_mhz_over_2pi": 1.45,
///       "g2_over_g1": 0.95,                   // or "g2_mhz_over_2pi"
///       "omega_mhz_over_2pi": 16.0,
///       "anharm_mhz_over_2pi": [275, 309, 358],
///       "kappa_inv_us": 15,                   // lifetimes; null means no decay
///       "gamma_relax_inv_us": [84, 41, 30, 22],
///       "gamma_phi_inv_us": [72, 32, 12, 2],
///       "omega_c_ghz_over_2pi": 4.97,
///       "n_max": 3,
///       "realism": {"include_eps1": true, "include_eps_l": true,
///                   "include_cavity_during_pulse": true, "rotating_phases": true},
///       "rates": true                         // false zeroes every decoherence rate
///     },
///     "input_state": [1, 1, 1, 1, 1],         // real or [re, im] entries, normalized on load
///     "sweep": {
///       "g_mhz_over_2pi": [1.3, 1.45, 1.6],   // or {"start": .., "stop": .., "count": ..}
///       "omega_mhz_over_2pi": {"start": 15, "stop": 17, "count": 3},
///       "parallel_workers": 1
///     },
///     "integrator": {"dt_s": null, "dt_scale": 1.0, "steps_per_segment": 2000,
///                    "steps_per_period": 50}
///   }
struct ExperimentConfig {
  ModelParams params;
  std::vector<Complex> input_state;  // empty: uniform
  IntegratorOptions integrator;
  std::optional<SweepConfig> sweep;
};

/// Throws std::invalid_argument with the offending key on malformed input.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

}  // namespace qst
