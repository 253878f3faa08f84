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
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qst/hilbert.hpp"

namespace qst {

/// Both qudits resonantly coupled to the cavity.
struct CavityInteraction {
  double duration;  // s
};

/// Simultaneous pulses on |level-1> <-> |level> of both qudits.
struct PulsePair {
  int level;
  double phase1;  // rad, qudit 1
  double phase2;  // rad, qudit 2
  double duration;
};

struct SinglePulse {
  Site qudit;
  int level;
  double phase;
  double duration;
};

/// From here on the qudits are detuned away from the cavity.
struct Decouple {};

using Segment = std::variant<CavityInteraction, PulsePair, SinglePulse, Decouple>;

double segment_duration(const Segment& s);

struct Schedule {
  int d = 0;
  std::vector<Segment> segments;

  double total_duration() const;

  struct Counts {
    int cavity = 0;
    int pulse_pairs = 0;
    int single_pulses = 0;
    int decouples = 0;
  };
  Counts counts() const;
};

/// Swap time pi / (sqrt(2) g) that maps |1,0,0_c> to -|0,1,0_c>.
double swap_time(double g);

/// pi / (2 Omega).
double pulse_time(double omega);

/// Compiles the d-step transfer for coupling g and Rabi frequency omega (rad/s).
/// Throws std::invalid_argument for d < 2 or non-positive rates.
Schedule compile_schedule(int d, double g, double omega);

/// Pulse propagator on span{|level-1>, |level>} after rotation angle theta = Omega t.
struct LevelRotation {
  int level;
  Eigen::Matrix2cd matrix;
};

LevelRotation pulse_rotation(int level, double phase, double theta);

/// Propagator of the resonant two-qudit cavity coupling (g1 = g2 = g) on the ordered basis
/// {|1>_1|0>_c|0>_2, |0>_1|1>_c|0>_2, |0>_1|0>_c|1>_2}. |0>_1|0>_c|0>_2 is left invariant.
Eigen::Matrix3cd cavity_swap_map(double t, double g);

/// Composes cavity_swap_map and pulse_rotation over the schedule. Throws std::domain_error if
/// the state leaves the manifold where the closed-form swap is exact.
/// g and omega are the rates the schedule was compiled for.
StateVector ideal_evolve(const Schedule& s, double g, double omega, const StateVector& psi0);

/// sum_l c_l |l>_1 |0>_2 |0>_c.
StateVector input_state(const HilbertSpace& space, std::span<const Complex> c);

/// |0>_1 |0>_c (x) sum_l c_l |d-1-l>_2. Throws std::invalid_argument unless ||c|| = 1.
StateVector target_state(const HilbertSpace& space, std::span<const Complex> c);

std::vector<Complex> uniform_coefficients(int d);

/// Schedules round-trip through a JSON document of ordered segment records.
std::string schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const std::string& text);

}  // namespace qst
