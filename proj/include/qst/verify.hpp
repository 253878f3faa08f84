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

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qst/hilbert.hpp"

namespace qst {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Fast self-checks of the analytic oracle, the schedule compiler and the integrator:
/// protocol exactness for d = 2..6, the sign pattern of the d = 5 transfer, swap map against
/// a matrix exponential, rotation algebra, Hamiltonian hermiticity, excitation conservation,
/// and agreement of the numerical and analytic propagators. Each result is passed to
/// `on_result` as soon as it is known.
std::vector<CheckResult> run_verification(std::uint64_t seed,
                                          const std::function<void(const CheckResult&)>& on_result = {});

/// Normalized coefficient vector with independent Gaussian real and imaginary parts.
std::vector<Complex> random_coefficients(int d, std::mt19937_64& rng, bool real_only = false);

}  // namespace qst
