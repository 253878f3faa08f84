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

#include <span>
#include <vector>

#include "qst/hilbert.hpp"

namespace qst {

/// Which spurious couplings are kept in the segment Hamiltonians.
struct RealismFlags {
  /// Off-resonant cavity coupling to the |1>-|2> transition, strength sqrt(2) g_j.
  bool include_eps1 = false;
  /// Pulse leakage onto the neighbouring transitions (Omega/sqrt(2) below, sqrt(2) Omega above).
  bool include_eps_l = false;
  /// Keep the qudit-cavity coupling switched on while pulses are applied.
  bool include_cavity_during_pulse = false;
  /// Off-resonant terms carry e^{i Delta t} phases. When false they are added as static
  /// terms, which reproduces the printed Hamiltonians literally.
  bool rotating_phases = true;

  static RealismFlags all_on() { return {true, true, true, true}; }
  static RealismFlags all_off() { return {false, false, false, true}; }
  bool any() const { return include_eps1 || include_eps_l || include_cavity_during_pulse; }
};

/// Physical constants. Frequencies are angular (rad/s), rates in 1/s.
struct ModelParams {
  int d = 3;
  double g1 = 0.0;
  double g2 = 0.0;
  double omega = 0.0;  // Rabi frequency of every pulse
  /// anharm[k] = omega_{k,k+1} - omega_{k+1,k+2}, k = 0..d-3 (positive for a transmon ladder).
  std::vector<double> anharm;
  double kappa = 0.0;
  /// gamma_relax[l-1] is the |l> -> |l-1> relaxation rate, l = 1..d-1.
  std::vector<double> gamma_relax;
  /// gamma_phi[l-1] is the dephasing rate of level |l>, l = 1..d-1.
  std::vector<double> gamma_phi;
  double omega_c = 0.0;  // cavity frequency, diagnostic only
  int n_max = 3;
  RealismFlags realism;

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;

  HilbertSpace space() const { return HilbertSpace::composite(d, n_max); }

  /// Q = omega_c / kappa; infinite for a lossless cavity.
  double quality_factor() const;

  /// Copy with every decay and dephasing rate set to zero.
  ModelParams without_decoherence() const;

  /// Sets g1 = g and rescales g2 so that g2/g1 is preserved (g2 = g when g1 was zero).
  void set_coupling(double g);
};

/// One off-resonant coupling, stored as its non-Hermitian half. The Hamiltonian gets
/// op e^{i detuning t} + h.c.
struct RotatingTerm {
  Operator op;
  double detuning;  // rad/s
};

/// H(t) = static_part + sum_k (op_k e^{i Delta_k t} + h.c.), with t = 0 at the start of the
/// segment.
struct SegmentHamiltonian {
  Operator static_part;
  std::vector<RotatingTerm> rotating_terms;

  Operator at(double t) const;

  /// Largest angular frequency scale present: the static couplings and |Delta_k|.
  double max_frequency() const;
};

struct PulseTarget {
  Site qudit;  // Site::Qudit1 or Site::Qudit2
  int level;   // drives |level-1> <-> |level>
  double phase;
};

SegmentHamiltonian cavity_coupling_hamiltonian(const ModelParams& p, const HilbertSpace& space);

/// Throws std::invalid_argument on an invalid level, a non-qudit site or a qudit that is
/// targeted twice.
SegmentHamiltonian pulse_hamiltonian(const ModelParams& p, std::span<const PulseTarget> targets,
                                     const HilbertSpace& space);

/// sqrt(kappa) a, then per qudit and level l = 1..d-1 the relaxation operator
/// sqrt(gamma_relax) |l-1><l| and the dephasing projector sqrt(gamma_phi) |l><l|.
std::vector<Operator> collapse_operators(const ModelParams& p, const HilbertSpace& space);

/// a^dag a + sum_j sum_l l |l><l|_j.
Operator excitation_number(const HilbertSpace& space);

}  // namespace qst
