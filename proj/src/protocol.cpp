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

#include "qst/protocol.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qst {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kManifoldTolerance = 1e-9;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void rotate_level(Vector& psi, const HilbertSpace& space, Site qudit, const LevelRotation& r) {
  const int d = space.qudit_dim();
  for (int other = 0; other < d; ++other) {
    for (int n = 0; n <= space.n_max(); ++n) {
      const bool first = qudit == Site::Qudit1;
      const int lo = first ? space.index(r.level - 1, other, n) : space.index(other, r.level - 1, n);
      const int hi = first ? space.index(r.level, other, n) : space.index(other, r.level, n);
      const Complex a = psi[lo];
      const Complex b = psi[hi];
      psi[lo] = r.matrix(0, 0) * a + r.matrix(0, 1) * b;
      psi[hi] = r.matrix(1, 0) * a + r.matrix(1, 1) * b;
    }
  }
}

// Basis states left untouched by the resonant |0>-|1> cavity coupling.
bool is_dark(const HilbertSpace::Labels& l) {
  if (l.n != 0) return false;
  return (l.l1 == 0 || l.l1 >= 2) && (l.l2 == 0 || l.l2 >= 2);
}

void apply_swap(Vector& psi, const HilbertSpace& space, double t, double g) {
  const int q1 = space.index(1, 0, 0);
  const int photon = space.index(0, 0, 1);
  const int q2 = space.index(0, 1, 0);
  for (int i = 0; i < space.total_dim(); ++i) {
    if (i == q1 || i == photon || i == q2 || std::abs(psi[i]) <= kManifoldTolerance) {
      continue;
    }
    if (!is_dark(space.labels(i))) {
      throw std::domain_error("state leaves the single-excitation manifold at basis state " +
                              basis_label(space, i));
    }
  }
  const Eigen::Matrix3cd u = cavity_swap_map(t, g);
  const Eigen::Vector3cd in(psi[q1], psi[photon], psi[q2]);
  const Eigen::Vector3cd out = u * in;
  psi[q1] = out[0];
  psi[photon] = out[1];
  psi[q2] = out[2];
}

}  // namespace

double segment_duration(const Segment& s) {
  return std::visit(overloaded{[](const Decouple&) { return 0.0; },
                               [](const auto& seg) { return seg.duration; }},
                    s);
}

double Schedule::total_duration() const {
  double t = 0.0;
  for (const auto& s : segments) t += segment_duration(s);
  return t;
}

Schedule::Counts Schedule::counts() const {
  Counts c;
  for (const auto& s : segments) {
    std::visit(overloaded{[&](const CavityInteraction&) { ++c.cavity; },
                          [&](const PulsePair&) { ++c.pulse_pairs; },
                          [&](const SinglePulse&) { ++c.single_pulses; },
                          [&](const Decouple&) { ++c.decouples; }},
               s);
  }
  return c;
}

double swap_time(double g) { return std::numbers::pi / (std::sqrt(2.0) * g); }

double pulse_time(double omega) { return std::numbers::pi / (2.0 * omega); }

Schedule compile_schedule(int d, double g, double omega) {
  if (d < 2) {
    throw std::invalid_argument("qudit dimension must be at least 2, got " + std::to_string(d));
  }
  if (!(g > 0.0) || !(omega > 0.0)) {
    throw std::invalid_argument("coupling and Rabi frequency must be positive");
  }
  constexpr double half_pi = std::numbers::pi / 2.0;
  const double t_swap = swap_time(g);
  const double t_pulse = pulse_time(omega);

  Schedule s{d, {}};
  s.segments.emplace_back(CavityInteraction{t_swap});
  // Step l: walk the excitation of qudit 1 down from |l> to |1> while shifting qudit 2 up,
  // highest transition first, then swap |1>_1 into |1>_2 through the cavity.
  for (int step = 2; step <= d - 1; ++step) {
    for (int level = step; level >= 2; --level) {
      s.segments.emplace_back(PulsePair{level, half_pi, -half_pi, t_pulse});
    }
    s.segments.emplace_back(CavityInteraction{t_swap});
  }
  s.segments.emplace_back(Decouple{});
  // Final reordering on qudit 2: |0> climbs to |d-1>, every other level drops by one.
  for (int level = 1; level <= d - 1; ++level) {
    s.segments.emplace_back(SinglePulse{Site::Qudit2, level, -half_pi, t_pulse});
  }
  return s;
}

LevelRotation pulse_rotation(int level, double phase, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix2cd m;
  m << c, -kI * std::exp(kI * phase) * s,
       -kI * std::exp(-kI * phase) * s, c;
  return {level, m};
}

Eigen::Matrix3cd cavity_swap_map(double t, double g) {
  const double theta = std::sqrt(2.0) * g * t;
  const double c = std::cos(theta);
  const Complex s = -kI * std::sin(theta) / std::sqrt(2.0);
  Eigen::Matrix3cd u;
  u << 0.5 * (1.0 + c), s, 0.5 * (c - 1.0),
       s, c, s,
       0.5 * (c - 1.0), s, 0.5 * (1.0 + c);
  return u;
}

StateVector ideal_evolve(const Schedule& s, double g, double omega, const StateVector& psi0) {
  const HilbertSpace& space = psi0.space();
  if (space.qudit_dim() != s.d) {
    throw std::invalid_argument("state dimension does not match the schedule");
  }
  Vector psi = psi0.amplitudes();
  for (const auto& segment : s.segments) {
    std::visit(
        overloaded{
            [&](const CavityInteraction& c) { apply_swap(psi, space, c.duration, g); },
            [&](const PulsePair& p) {
              const double theta = omega * p.duration;
              rotate_level(psi, space, Site::Qudit1, pulse_rotation(p.level, p.phase1, theta));
              rotate_level(psi, space, Site::Qudit2, pulse_rotation(p.level, p.phase2, theta));
            },
            [&](const SinglePulse& p) {
              rotate_level(psi, space, p.qudit,
                           pulse_rotation(p.level, p.phase, omega * p.duration));
            },
            [](const Decouple&) {}},
        segment);
  }
  return {space, std::move(psi)};
}

StateVector input_state(const HilbertSpace& space, std::span<const Complex> c) {
  if (static_cast<int>(c.size()) != space.qudit_dim()) {
    throw std::invalid_argument("need one coefficient per qudit level");
  }
  Vector v = Vector::Zero(space.total_dim());
  for (int l = 0; l < space.qudit_dim(); ++l) {
    v[space.index(l, 0, 0)] = c[l];
  }
  return {space, std::move(v)};
}

StateVector target_state(const HilbertSpace& space, std::span<const Complex> c) {
  const int d = space.qudit_dim();
  if (static_cast<int>(c.size()) != d) {
    throw std::invalid_argument("need one coefficient per qudit level");
  }
  double norm2 = 0.0;
  for (const auto& x : c) norm2 += std::norm(x);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
    throw std::invalid_argument("coefficient vector is not normalized");
  }
  Vector v = Vector::Zero(space.total_dim());
  for (int l = 0; l < d; ++l) {
    v[space.index(0, d - 1 - l, 0)] = c[l];
  }
  return {space, std::move(v)};
}

std::vector<Complex> uniform_coefficients(int d) {
  if (d < 1) {
    throw std::invalid_argument("dimension must be positive");
  }
  return std::vector<Complex>(static_cast<std::size_t>(d), 1.0 / std::sqrt(static_cast<double>(d)));
}

}  // namespace qst
