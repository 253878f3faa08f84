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

#include <numbers>
#include <string_view>

#include "qst/model.hpp"

namespace qst {

/// 2 pi f for f in MHz.
constexpr double angular_mhz(double mhz) { return 2.0 * std::numbers::pi * 1e6 * mhz; }
constexpr double to_mhz(double angular) { return angular / (2.0 * std::numbers::pi * 1e6); }

/// Transmon pair in a 3D cavity, d in {3, 4, 5}: measured anharmonicity steps 275, 309 and
/// 358 MHz, relaxation times 84/41/30/22 us, dephasing times 72/32/12/2 us, cavity lifetime
/// 15 us at 4.97 GHz, g2 = 0.95 g1, every realism flag on. Couplings default to the
/// per-dimension optimum. Throws std::invalid_argument for other d.
ModelParams preset_paper(int d);

/// Identical couplings, no decoherence, no spurious couplings. Any d >= 2.
ModelParams preset_ideal(int d);

/// "paper" or "ideal".
ModelParams preset_by_name(std::string_view name, int d);

struct OperatingPoint {
  double g_mhz;
  double omega_mhz;
  double fidelity;
};

/// Reference optimum (g/2pi, Omega/2pi, F) for d in {3, 4, 5}.
OperatingPoint reported_optimum(int d);

}  // namespace qst
