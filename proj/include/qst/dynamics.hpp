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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qst/hilbert.hpp"
#include "qst/model.hpp"
#include "qst/protocol.hpp"

namespace qst {

/// Fixed-step fourth-order Runge-Kutta. Unless `dt` is given, each segment of length T uses
/// dt = min(T / steps_per_segment, 1 / (steps_per_period * f_max)) scaled by dt_scale, where
/// f_max is SegmentHamiltonian::max_frequency(), and the step is then shrunk so that an
/// integer number of steps covers T exactly.
struct IntegratorOptions {
  std::optional<double> dt;
  double dt_scale = 1.0;
  double steps_per_segment = 2000.0;
  double steps_per_period = 50.0;
  bool record_trajectory = false;
  int sample_stride = 200;  // steps between trajectory samples
};

struct Diagnostics {
  double max_trace_drift = 0.0;
  double min_eigenvalue = 0.0;  // smallest eigenvalue seen at segment boundaries
  double max_hermiticity_error = 0.0;
  double peak_multi_photon_population = 0.0;  // cavity sector n >= 2
  double peak_top_fock_population = 0.0;      // cavity sector n = n_max
  long steps = 0;
};

struct TrajectorySample {
  double t;
  std::vector<double> populations;  // diagonal of rho in basis order
  double fidelity;
};

struct EvolutionResult {
  DensityMatrix rho_final;
  double fidelity;
  Diagnostics diagnostics;
  std::vector<TrajectorySample> trajectory;
  std::vector<std::string> warnings;
};

/// Thrown when the density matrix loses its trace or positivity beyond 1e-6.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, Diagnostics diagnostics)
      : std::runtime_error(what), diagnostics_(diagnostics) {}
  const Diagnostics& diagnostics() const { return diagnostics_; }

 private:
  Diagnostics diagnostics_;
};

/// The Hamiltonian driving one segment. `decoupled` is true once a Decouple marker has been
/// passed; the cavity coupling is then absent from pulse segments.
SegmentHamiltonian segment_hamiltonian(const Segment& segment, const ModelParams& p,
                                       bool decoupled, const HilbertSpace& space);

/// Integrates the Lindblad master equation over the schedule and reports the fidelity of the
/// final state against `target`.
EvolutionResult evolve_master(const Schedule& s, const ModelParams& p, const DensityMatrix& rho0,
                              const StateVector& target, const IntegratorOptions& opts = {});

/// Schrodinger propagation under the same Hamiltonians, ignoring all collapse operators.
StateVector evolve_unitary(const Schedule& s, const ModelParams& p, const StateVector& psi0,
                           const IntegratorOptions& opts = {});

/// sqrt(<psi|rho|psi>). Throws std::domain_error if the overlap is below -1e-8.
double fidelity(const DensityMatrix& rho, const StateVector& psi);

/// |<target|psi>|, the pure-state special case.
double fidelity(const StateVector& psi, const StateVector& target);

/// Compiles the schedule for (g1, omega) and runs evolve_master from sum_l c_l |l>_1|0>_2|0>_c
/// against the transfer target. Empty `c` selects the uniform superposition.
EvolutionResult run_transfer(const ModelParams& p, std::span<const Complex> c = {},
                             const IntegratorOptions& opts = {});

/// CSV with columns t_s, one population per basis label, fidelity.
void write_trajectory_csv(const EvolutionResult& r, const std::string& path);

}  // namespace qst
