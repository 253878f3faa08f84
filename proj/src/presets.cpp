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

#include "qst/presets.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace qst {

namespace {

constexpr std::array<double, 3> kAnharmMhz = {275.0, 309.0, 358.0};
constexpr std::array<double, 4> kRelaxTimeUs = {84.0, 41.0, 30.0, 22.0};
constexpr std::array<double, 4> kDephasingTimeUs = {72.0, 32.0, 12.0, 2.0};
constexpr double kCavityLifetimeUs = 15.0;
constexpr double kCavityGhz = 4.97;
constexpr double kCouplingRatio = 0.95;

void require_measured_dimension(int d) {
  if (d < 3 || d > 5) {
    throw std::invalid_argument("the measured transmon parameters cover d = 3, 4, 5 only; got d = " +
                                std::to_string(d) + " (supply parameters explicitly)");
  }
}

}  // namespace

OperatingPoint reported_optimum(int d) {
  require_measured_dimension(d);
  switch (d) {
    case 3:
      return {5.4, 12.8, 0.996};
    case 4:
      return {1.35, 17.00, 0.9696};
    default:
      return {1.45, 16.00, 0.9032};
  }
}

ModelParams preset_paper(int d) {
  require_measured_dimension(d);
  ModelParams p;
  p.d = d;
  const OperatingPoint opt = reported_optimum(d);
  p.g1 = angular_mhz(opt.g_mhz);
  p.g2 = kCouplingRatio * p.g1;
  p.omega = angular_mhz(opt.omega_mhz);
  for (int k = 0; k < d - 2; ++k) p.anharm.push_back(angular_mhz(kAnharmMhz[k]));
  for (int l = 0; l < d - 1; ++l) {
    p.gamma_relax.push_back(1.0 / (kRelaxTimeUs[l] * 1e-6));
    p.gamma_phi.push_back(1.0 / (kDephasingTimeUs[l] * 1e-6));
  }
  p.kappa = 1.0 / (kCavityLifetimeUs * 1e-6);
  p.omega_c = 2.0 * std::numbers::pi * kCavityGhz * 1e9;
  p.n_max = 3;
  p.realism = RealismFlags::all_on();
  return p;
}

ModelParams preset_ideal(int d) {
  if (d < 2) {
    throw std::invalid_argument("qudit dimension must be at least 2");
  }
  ModelParams p;
  p.d = d;
  const bool measured = d >= 3 && d <= 5;
  const OperatingPoint opt = measured ? reported_optimum(d) : OperatingPoint{2.0, 20.0, 1.0};
  p.g1 = angular_mhz(opt.g_mhz);
  p.g2 = p.g1;
  p.omega = angular_mhz(opt.omega_mhz);
  if (measured) {
    for (int k = 0; k < d - 2; ++k) p.anharm.push_back(angular_mhz(kAnharmMhz[k]));
  }
  p.gamma_relax.assign(static_cast<std::size_t>(d - 1), 0.0);
  p.gamma_phi.assign(static_cast<std::size_t>(d - 1), 0.0);
  p.omega_c = 2.0 * std::numbers::pi * kCavityGhz * 1e9;
  p.n_max = 3;
  p.realism = RealismFlags::all_off();
  return p;
}

ModelParams preset_by_name(std::string_view name, int d) {
  if (name == "paper") return preset_paper(d);
  if (name == "ideal") return preset_ideal(d);
  throw std::invalid_argument("unknown preset '" + std::string(name) + "' (expected paper or ideal)");
}

}  // namespace qst
