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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "qst/dynamics.hpp"
#include "qst/presets.hpp"
#include "qst/verify.hpp"

namespace qst {
namespace {

TEST(Fidelity, Examples) {
  const auto space = HilbertSpace::composite(3, 1);
  const auto psi = target_state(space, uniform_coefficients(3));
  EXPECT_NEAR(fidelity(DensityMatrix::pure(psi), psi), 1.0, 1e-15);
  EXPECT_NEAR(fidelity(DensityMatrix::maximally_mixed(space), psi),
              1.0 / std::sqrt(space.total_dim()), 1e-15);
  EXPECT_NEAR(fidelity(DensityMatrix::pure(basis_ket(space, 1, 0, 1)), psi), 0.0, 1e-15);
}

TEST(Fidelity, RejectsNegativeOverlap) {
  const auto space = HilbertSpace::composite(2, 1);
  Matrix m = Matrix::Zero(8, 8);
  m(0, 0) = -1e-3;
  m(1, 1) = 1.0 + 1e-3;
  EXPECT_THROW(fidelity(DensityMatrix(space, m), basis_ket(space, 0, 0, 0)), std::domain_error);
}

TEST(EvolveMaster, IdealLimitReproducesTheProtocol) {
  const ModelParams p = preset_ideal(5);
  const auto r = run_transfer(p);
  EXPECT_NEAR(r.fidelity, 1.0, 1e-6);
  EXPECT_LT(r.diagnostics.max_trace_drift, 1e-10);
}

TEST(EvolveMaster, SingleSwap) {
  const ModelParams p = preset_ideal(3);
  const auto space = p.space();
  Schedule s{3, {CavityInteraction{swap_time(p.g1)}}};
  const auto target = basis_ket(space, 0, 1, 0);
  const auto r = evolve_master(s, p, DensityMatrix::pure(basis_ket(space, 1, 0, 0)), target);
  const Matrix expected = DensityMatrix::pure(target).matrix();
  EXPECT_LE((r.rho_final.matrix() - expected).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(EvolveMaster, ZeroDurationScheduleLeavesStateAlone) {
  const ModelParams p = preset_paper(3);
  const auto space = p.space();
  const auto psi = input_state(space, uniform_coefficients(3));
  Schedule s{3, {CavityInteraction{0.0}, Decouple{}, SinglePulse{Site::Qudit2, 1, 0.0, 0.0}}};
  const auto r = evolve_master(s, p, DensityMatrix::pure(psi), psi);
  EXPECT_EQ(r.rho_final.matrix(), DensityMatrix::pure(psi).matrix());
  EXPECT_EQ(evolve_unitary(s, p, psi).amplitudes(), psi.amplitudes());
}

TEST(EvolveMaster, CavityAfterDecoupleIsRejected) {
  const ModelParams p = preset_ideal(3);
  const auto space = p.space();
  Schedule s{3, {Decouple{}, CavityInteraction{1e-9}}};
  const auto psi = basis_ket(space, 0, 0, 0);
  EXPECT_THROW(evolve_master(s, p, DensityMatrix::pure(psi), psi), std::invalid_argument);
}

TEST(EvolveMaster, MismatchedDimensionIsRejected) {
  const ModelParams p = preset_ideal(3);
  const auto psi = basis_ket(p.space(), 0, 0, 0);
  EXPECT_THROW(evolve_master(compile_schedule(4, p.g1, p.omega), p, DensityMatrix::pure(psi), psi),
               std::invalid_argument);
}

TEST(EvolveMaster, UnstableStepAborts) {
  const ModelParams p = preset_paper(3);
  IntegratorOptions opts;
  opts.dt = 5e-9;
  EXPECT_THROW(run_transfer(p, {}, opts), IntegrationError);
}

TEST(EvolveMaster, PureDephasingOfASuperposition) {
  // |0> + |1> on qudit 1 with only gamma_phi: the coherence decays as exp(-gamma t / 2).
  ModelParams p = preset_ideal(2);
  p.gamma_phi = {1.0 / 5e-6};
  const auto space = p.space();
  const std::vector<Complex> c = {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
  const auto psi = input_state(space, c);
  const double t = 2e-6;
  // A zero-coupling pulse segment gives an empty Hamiltonian of the requested length.
  ModelParams quiet = p;
  quiet.omega = 0.0;
  Schedule s{2, {Decouple{}, SinglePulse{Site::Qudit1, 1, 0.0, t}}};
  IntegratorOptions opts;
  opts.dt = t / 4000;
  const auto r = evolve_master(s, quiet, DensityMatrix::pure(psi), psi, opts);
  const Complex coh = r.rho_final.matrix()(space.index(0, 0, 0), space.index(1, 0, 0));
  EXPECT_NEAR(std::abs(coh), 0.5 * std::exp(-0.5 * p.gamma_phi[0] * t), 1e-10);
}

TEST(EvolveMaster, CavityDecayOfOnePhoton) {
  ModelParams p = preset_ideal(2);
  p.kappa = 1.0 / 3e-6;
  ModelParams quiet = p;
  quiet.omega = 0.0;
  const auto space = p.space();
  const auto psi = basis_ket(space, 0, 0, 1);
  const double t = 1e-6;
  Schedule s{2, {Decouple{}, SinglePulse{Site::Qudit1, 1, 0.0, t}}};
  IntegratorOptions opts;
  opts.dt = t / 4000;
  const auto r = evolve_master(s, quiet, DensityMatrix::pure(psi), psi, opts);
  const double pop = r.rho_final.matrix()(space.index(0, 0, 1), space.index(0, 0, 1)).real();
  EXPECT_NEAR(pop, std::exp(-p.kappa * t), 1e-10);
}

TEST(EvolveUnitary, AgreesWithMasterEquationWithoutRates) {
  const ModelParams p = preset_paper(3).without_decoherence();
  const auto space = p.space();
  const auto c = uniform_coefficients(3);
  const Schedule s = compile_schedule(3, p.g1, p.omega);
  const auto target = target_state(space, c);
  const auto psi = evolve_unitary(s, p, input_state(space, c));
  const auto r = evolve_master(s, p, DensityMatrix::pure(input_state(space, c)), target);
  EXPECT_NEAR(fidelity(psi, target), r.fidelity, 1e-7);
}

TEST(EvolveUnitary, MatchesAnalyticProtocolWithoutRealism) {
  std::mt19937_64 rng(41);
  const ModelParams p = preset_ideal(4);
  const auto space = p.space();
  const Schedule s = compile_schedule(4, p.g1, p.omega);
  for (int k = 0; k < 5; ++k) {
    const auto psi0 = input_state(space, random_coefficients(4, rng));
    const auto numeric = evolve_unitary(s, p, psi0);
    const auto analytic = ideal_evolve(s, p.g1, p.omega, psi0);
    EXPECT_LE((numeric.amplitudes() - analytic.amplitudes()).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(Trajectory, CsvLayout) {
  const ModelParams p = preset_paper(3);
  IntegratorOptions opts;
  opts.record_trajectory = true;
  opts.sample_stride = 500;
  const auto r = run_transfer(p, {}, opts);
  ASSERT_GE(r.trajectory.size(), 2u);
  EXPECT_EQ(r.trajectory.front().t, 0.0);
  EXPECT_NEAR(r.trajectory.back().fidelity, r.fidelity, 1e-12);

  const auto path = std::filesystem::temp_directory_path() / "qst_traj_test.csv";
  write_trajectory_csv(r, path.string());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("t_s,p_0_0_0,p_0_0_1,", 0), 0u);
  EXPECT_EQ(header.substr(header.size() - 9), ",fidelity");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, r.trajectory.size());
  std::filesystem::remove(path);
}

// Properties.

TEST(DynamicsProperty, DensityMatrixStaysPhysical) {
  std::mt19937_64 rng(42);
  for (int d : {3, 4}) {
    const ModelParams p = preset_paper(d);
    const auto c = random_coefficients(d, rng);
    const auto r = run_transfer(p, c);
    EXPECT_LT(r.diagnostics.max_trace_drift, 1e-7);
    EXPECT_GE(r.diagnostics.min_eigenvalue, -1e-7);
    EXPECT_LT(r.diagnostics.max_hermiticity_error, 1e-10);
    EXPECT_TRUE(r.rho_final.is_valid());
    EXPECT_GT(r.fidelity, 0.0);
    EXPECT_LE(r.fidelity, 1.0);
  }
}

TEST(DynamicsProperty, DecoherenceOnlyLowersFidelity) {
  const ModelParams p = preset_paper(3);
  const double noisy = run_transfer(p).fidelity;
  const double clean = run_transfer(p.without_decoherence()).fidelity;
  EXPECT_GT(clean, noisy);
}

TEST(DynamicsProperty, ExcitationNumberConservedByIdealSwap) {
  std::mt19937_64 rng(43);
  const ModelParams p = preset_ideal(3);
  const auto space = p.space();
  const auto n = excitation_number(space);
  Schedule s{3, {CavityInteraction{0.37 * swap_time(p.g1)}}};
  for (int k = 0; k < 5; ++k) {
    const auto psi0 = input_state(space, random_coefficients(3, rng));
    const auto psi = evolve_unitary(s, p, psi0);
    EXPECT_NEAR(expectation(n, psi).real(), expectation(n, psi0).real(), 1e-9);
  }
}

}  // namespace
}  // namespace qst
