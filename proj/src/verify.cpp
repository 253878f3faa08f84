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

#include "qst/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qst/dynamics.hpp"
#include "qst/model.hpp"
#include "qst/presets.hpp"
#include "qst/protocol.hpp"

namespace qst {

namespace {

constexpr Complex kI{0.0, 1.0};

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

// exp(-i H t) for Hermitian H.
Matrix propagator(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Vector phases = (-kI * t * es.eigenvalues().cast<Complex>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

class Recorder {
 public:
  explicit Recorder(const std::function<void(const CheckResult&)>& sink) : sink_(sink) {}

  void add(std::string name, bool passed, std::string detail) {
    results_.push_back({std::move(name), passed, std::move(detail)});
    if (sink_) sink_(results_.back());
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const std::function<void(const CheckResult&)>& sink_;
  std::vector<CheckResult> results_;
};

void check_protocol_exactness(Recorder& rec, std::mt19937_64& rng) {
  for (int d = 2; d <= 6; ++d) {
    const ModelParams p = preset_ideal(d);
    const HilbertSpace space = p.space();
    const Schedule s = compile_schedule(d, p.g1, p.omega);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto c = random_coefficients(d, rng);
      const StateVector out = ideal_evolve(s, p.g1, p.omega, input_state(space, c));
      worst = std::max(worst, 1.0 - fidelity(out, target_state(space, c)));
    }
    rec.add("protocol exactness d=" + std::to_string(d), worst <= 1e-9,
            "max infidelity " + sci(worst) + " over 100 random inputs");
  }
}

void check_sign_pattern(Recorder& rec, std::mt19937_64& rng) {
  const ModelParams p = preset_ideal(5);
  const HilbertSpace space = p.space();
  const auto c = random_coefficients(5, rng, /*real_only=*/true);
  const StateVector out = ideal_evolve(compile_schedule(5, p.g1, p.omega), p.g1, p.omega,
                                       input_state(space, c));
  const StateVector expected = target_state(space, c);
  const double err = (out.amplitudes() - expected.amplitudes()).cwiseAbs().maxCoeff();
  rec.add("d=5 transfer signs", err <= 1e-8, "max amplitude error " + sci(err));
}

void check_swap_map(Recorder& rec, std::mt19937_64& rng) {
  ModelParams p = preset_ideal(2);
  p.n_max = 1;
  const HilbertSpace space = p.space();
  const Matrix h = cavity_coupling_hamiltonian(p, space).static_part.matrix();
  const int idx[3] = {space.index(1, 0, 0), space.index(0, 0, 1), space.index(0, 1, 0)};
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double t = 4.0 * swap_time(p.g1) * unit(rng);
    const Matrix u = propagator(h, t);
    const Eigen::Matrix3cd closed = cavity_swap_map(t, p.g1);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) worst = std::max(worst, std::abs(u(idx[a], idx[b]) - closed(a, b)));
    }
  }
  rec.add("cavity swap map vs exp(-iHt)", worst <= 1e-10, "max entry error " + sci(worst));

  const Eigen::Matrix3cd swap = cavity_swap_map(swap_time(p.g1), p.g1);
  const double err = std::abs(swap(2, 0) + 1.0) + std::abs(swap(0, 0)) + std::abs(swap(1, 0));
  rec.add("full swap |1,0_c,0> -> -|0,0_c,1>", err <= 1e-10, "error " + sci(err));
}

void check_rotations(Recorder& rec, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double phase = angle(rng);
    const double theta = angle(rng);
    const auto r = pulse_rotation(1, phase, theta).matrix;
    const auto inv = pulse_rotation(1, phase, -theta).matrix;
    worst = std::max({worst, (r * inv - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(),
                      std::abs(r.determinant() - 1.0),
                      (r.adjoint() * r - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff()});
  }
  rec.add("pulse rotation algebra", worst <= 1e-12, "max error " + sci(worst));
}

void check_hamiltonians(Recorder& rec, std::mt19937_64& rng) {
  const ModelParams p = preset_paper(5);
  const HilbertSpace space = p.space();
  const Schedule s = compile_schedule(5, p.g1, p.omega);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  bool decoupled = false;
  for (const auto& segment : s.segments) {
    if (std::holds_alternative<Decouple>(segment)) {
      decoupled = true;
      continue;
    }
    const auto h = segment_hamiltonian(segment, p, decoupled, space);
    const Matrix m = h.at(unit(rng) * segment_duration(segment)).matrix();
    worst = std::max(worst, (m - m.adjoint()).cwiseAbs().maxCoeff() /
                               std::max(1.0, m.cwiseAbs().maxCoeff()));
  }
  rec.add("segment Hamiltonians Hermitian", worst <= 1e-12, "max relative error " + sci(worst));

  const ModelParams ideal = preset_ideal(5);
  const Operator h = cavity_coupling_hamiltonian(ideal, space).static_part;
  const double comm = commutator(excitation_number(space), h).matrix().norm() / ideal.g1;
  rec.add("excitation number conserved", comm <= 1e-12, "||[N, H]|| / g = " + sci(comm));
}

void check_integrator(Recorder& rec, std::mt19937_64& rng) {
  const ModelParams p = preset_ideal(3);
  const HilbertSpace space = p.space();
  const Schedule s = compile_schedule(3, p.g1, p.omega);
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    const auto c = random_coefficients(3, rng);
    const StateVector psi0 = input_state(space, c);
    const StateVector numeric = evolve_unitary(s, p, psi0);
    const StateVector analytic = ideal_evolve(s, p.g1, p.omega, psi0);
    worst = std::max(worst, (numeric.amplitudes() - analytic.amplitudes()).cwiseAbs().maxCoeff());
  }
  rec.add("RK4 propagation vs analytic protocol", worst <= 1e-8, "max amplitude error " + sci(worst));
}

void check_collapse_count(Recorder& rec) {
  bool ok = true;
  std::string detail;
  for (int d : {3, 4, 5}) {
    const ModelParams p = preset_paper(d);
    const auto n = collapse_operators(p, p.space()).size();
    ok = ok && static_cast<int>(n) == 4 * d - 3;
    detail += "d=" + std::to_string(d) + ": " + std::to_string(n) + " ";
  }
  rec.add("collapse operator count", ok, detail);
}

}  // namespace

std::vector<Complex> random_coefficients(int d, std::mt19937_64& rng, bool real_only) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> c(static_cast<std::size_t>(d));
  double norm2 = 0.0;
  for (auto& z : c) {
    z = Complex(normal(rng), real_only ? 0.0 : normal(rng));
    norm2 += std::norm(z);
  }
  for (auto& z : c) z /= std::sqrt(norm2);
  return c;
}

std::vector<CheckResult> run_verification(std::uint64_t seed,
                                          const std::function<void(const CheckResult&)>& on_result) {
  std::mt19937_64 rng(seed);
  Recorder rec(on_result);
  check_protocol_exactness(rec, rng);
  check_sign_pattern(rec, rng);
  check_swap_map(rec, rng);
  check_rotations(rec, rng);
  check_hamiltonians(rec, rng);
  check_collapse_count(rec);
  check_integrator(rec, rng);
  return rec.take();
}

}  // namespace qst
