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

#include "qst/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <utility>

#include <Eigen/Sparse>

namespace qst {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kAbortTolerance = 1e-6;
constexpr double kTruncationWarning = 1e-3;

using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;
using RowMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Entry {
  int row;
  int col;
  Complex value;
};

SparseMatrix to_sparse(const Matrix& m) {
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (m(r, c) != Complex(0.0)) triplets.emplace_back(r, c, m(r, c));
    }
  }
  SparseMatrix s(m.rows(), m.cols());
  s.setFromTriplets(triplets.begin(), triplets.end());
  return s;
}

std::vector<Entry> to_entries(const Matrix& m) {
  std::vector<Entry> out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (m(r, c) != Complex(0.0)) {
        out.push_back({static_cast<int>(r), static_cast<int>(c), m(r, c)});
      }
    }
  }
  return out;
}

// Sparse form of one segment's generator. For the master equation `effective` carries
// H_static - (i/2) sum_k L_k^dag L_k; for Schrodinger propagation it is H_static alone.
struct Generator {
  SparseMatrix effective;
  struct Rotating {
    SparseMatrix half;
    SparseMatrix half_adjoint;
    double detuning;
  };
  std::vector<Rotating> rotating;
  // sum_k L_k rho L_k^dag flattened to out[o] += weight * rho[i] over row-major indices, with
  // coincident (o, i) pairs from different collapse operators merged.
  struct Transfer {
    int out;
    int in;
    double weight_re;
    double weight_im;
  };
  std::vector<Transfer> transfers;
};

std::vector<Generator::Transfer> jump_transfers(const std::vector<std::vector<Entry>>& jumps,
                                                int n) {
  std::map<std::pair<int, int>, Complex> merged;
  for (const auto& jump : jumps) {
    for (const auto& a : jump) {
      for (const auto& b : jump) {
        merged[{a.row * n + b.row, a.col * n + b.col}] += a.value * std::conj(b.value);
      }
    }
  }
  std::vector<Generator::Transfer> out;
  out.reserve(merged.size());
  for (const auto& [key, w] : merged) {
    if (w != Complex(0.0)) out.push_back({key.first, key.second, w.real(), w.imag()});
  }
  return out;
}

Generator make_generator(const SegmentHamiltonian& h, const std::vector<Operator>* collapse) {
  Generator g;
  Matrix effective = h.static_part.matrix();
  if (collapse != nullptr) {
    std::vector<std::vector<Entry>> jumps;
    for (const auto& l : *collapse) {
      auto entries = to_entries(l.matrix());
      if (entries.empty()) continue;
      effective -= 0.5 * kI * (l.matrix().adjoint() * l.matrix());
      jumps.push_back(std::move(entries));
    }
    g.transfers = jump_transfers(jumps, static_cast<int>(effective.rows()));
  }
  g.effective = to_sparse(effective);
  for (const auto& term : h.rotating_terms) {
    g.rotating.push_back(
        {to_sparse(term.op.matrix()), to_sparse(term.op.matrix().adjoint()), term.detuning});
  }
  return g;
}

// out.row(r) += scale * (a * x).row(r) for row-major x.
template <class Dense>
void accumulate(const SparseMatrix& a, Complex scale, const Dense& x, Dense& out) {
  for (Eigen::Index r = 0; r < a.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(a, r); it; ++it) {
      out.row(r) += (scale * it.value()) * x.row(it.col());
    }
  }
}

void accumulate(const SparseMatrix& a, Complex scale, const Vector& x, Vector& out) {
  out.noalias() += scale * (a * x);
}

// -i H_eff(t) x, without the jump terms.
template <class Dense>
void apply_hamiltonian(const Generator& g, double t, const Dense& x, Dense& out) {
  out.setZero();
  accumulate(g.effective, -kI, x, out);
  for (const auto& term : g.rotating) {
    const Complex phase = std::exp(kI * (term.detuning * t));
    accumulate(term.half, -kI * phase, x, out);
    accumulate(term.half_adjoint, -kI * std::conj(phase), x, out);
  }
}

class MasterEquation {
 public:
  explicit MasterEquation(int n) : work_(n, n) {}

  void operator()(const Generator& g, double t, const RowMatrix& rho, RowMatrix& out) {
    apply_hamiltonian(g, t, rho, work_);
    out.noalias() = work_ + work_.adjoint();
    const double* in = reinterpret_cast<const double*>(rho.data());
    double* dst = reinterpret_cast<double*>(out.data());
    for (const auto& tr : g.transfers) {
      const double re = in[2 * tr.in];
      const double im = in[2 * tr.in + 1];
      dst[2 * tr.out] += tr.weight_re * re - tr.weight_im * im;
      dst[2 * tr.out + 1] += tr.weight_re * im + tr.weight_im * re;
    }
  }

 private:
  RowMatrix work_;
};

template <class State, class Rhs>
class Rk4 {
 public:
  explicit Rk4(const State& shape)
      : k1_(shape), k2_(shape), k3_(shape), k4_(shape), tmp_(shape) {}

  void step(const Generator& g, Rhs& rhs, double t, double h, State& y) {
    rhs(g, t, y, k1_);
    tmp_ = y + (0.5 * h) * k1_;
    rhs(g, t + 0.5 * h, tmp_, k2_);
    tmp_ = y + (0.5 * h) * k2_;
    rhs(g, t + 0.5 * h, tmp_, k3_);
    tmp_ = y + h * k3_;
    rhs(g, t + h, tmp_, k4_);
    y += (h / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
  }

 private:
  State k1_, k2_, k3_, k4_, tmp_;
};

struct SchrodingerEquation {
  void operator()(const Generator& g, double t, const Vector& psi, Vector& out) const {
    out.setZero();
    accumulate(g.effective, -kI, psi, out);
    for (const auto& term : g.rotating) {
      const Complex phase = std::exp(kI * (term.detuning * t));
      accumulate(term.half, -kI * phase, psi, out);
      accumulate(term.half_adjoint, -kI * std::conj(phase), psi, out);
    }
  }
};

struct StepPlan {
  long count;
  double dt;
};

StepPlan plan_steps(double duration, double f_max, const IntegratorOptions& opts) {
  double dt = 0.0;
  if (opts.dt) {
    dt = *opts.dt;
  } else {
    dt = duration / opts.steps_per_segment;
    if (f_max > 0.0) dt = std::min(dt, 1.0 / (opts.steps_per_period * f_max));
    dt *= opts.dt_scale;
  }
  if (!(dt > 0.0)) {
    throw std::invalid_argument("integrator step must be positive");
  }
  const long count = std::max(1L, static_cast<long>(std::ceil(duration / dt - 1e-9)));
  return {count, duration / static_cast<double>(count)};
}

bool is_decouple(const Segment& s) { return std::holds_alternative<Decouple>(s); }

struct CavityMonitor {
  std::vector<int> multi_photon;
  std::vector<int> top;

  explicit CavityMonitor(const HilbertSpace& space) {
    for (int i = 0; i < space.total_dim(); ++i) {
      const int n = space.labels(i).n;
      if (n >= 2) multi_photon.push_back(i);
      if (n == space.n_max()) top.push_back(i);
    }
  }

  template <class Dense>
  void update(const Dense& rho, Diagnostics& d) const {
    double multi = 0.0;
    for (int i : multi_photon) multi += rho(i, i).real();
    double t = 0.0;
    for (int i : top) t += rho(i, i).real();
    d.peak_multi_photon_population = std::max(d.peak_multi_photon_population, multi);
    d.peak_top_fock_population = std::max(d.peak_top_fock_population, t);
  }
};

double overlap_fidelity(const RowMatrix& rho, const Vector& target) {
  const Complex v = target.dot(rho * target);
  return std::sqrt(std::clamp(v.real(), 0.0, 1.0));
}

void check_params(const Schedule& s, const ModelParams& p, const HilbertSpace& space) {
  p.validate();
  if (s.d != p.d) {
    throw std::invalid_argument("schedule dimension " + std::to_string(s.d) +
                                " does not match model dimension " + std::to_string(p.d));
  }
  if (!(space == p.space())) {
    throw std::invalid_argument("state space does not match the model parameters");
  }
}

}  // namespace

SegmentHamiltonian segment_hamiltonian(const Segment& segment, const ModelParams& p,
                                       bool decoupled, const HilbertSpace& space) {
  ModelParams local = p;
  if (decoupled) local.realism.include_cavity_during_pulse = false;
  if (std::holds_alternative<CavityInteraction>(segment)) {
    if (decoupled) {
      throw std::invalid_argument("cavity interaction scheduled after the qudits were decoupled");
    }
    return cavity_coupling_hamiltonian(local, space);
  }
  if (const auto* pair = std::get_if<PulsePair>(&segment)) {
    const PulseTarget targets[] = {{Site::Qudit1, pair->level, pair->phase1},
                                   {Site::Qudit2, pair->level, pair->phase2}};
    return pulse_hamiltonian(local, targets, space);
  }
  if (const auto* single = std::get_if<SinglePulse>(&segment)) {
    const PulseTarget targets[] = {{single->qudit, single->level, single->phase}};
    return pulse_hamiltonian(local, targets, space);
  }
  return {Operator::zero(space), {}};
}

EvolutionResult evolve_master(const Schedule& s, const ModelParams& p, const DensityMatrix& rho0,
                              const StateVector& target, const IntegratorOptions& opts) {
  const HilbertSpace& space = rho0.space();
  check_params(s, p, space);
  if (!(target.space() == space)) {
    throw std::invalid_argument("target state lives in a different space");
  }
  if (!rho0.is_valid()) {
    throw std::invalid_argument("initial density matrix is not a valid state");
  }

  const int n = space.total_dim();
  const auto collapse = collapse_operators(p, space);
  const CavityMonitor monitor(space);
  const Vector& psi_target = target.amplitudes();

  RowMatrix rho = rho0.matrix();
  MasterEquation rhs(n);
  Rk4<RowMatrix, MasterEquation> rk4(RowMatrix::Zero(n, n));
  EvolutionResult result{rho0, 0.0, {}, {}, {}};
  Diagnostics& diag = result.diagnostics;
  diag.min_eigenvalue = rho0.min_eigenvalue();

  auto sample = [&](double t) {
    if (!opts.record_trajectory) return;
    std::vector<double> pops(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pops[static_cast<std::size_t>(i)] = rho(i, i).real();
    result.trajectory.push_back({t, std::move(pops), overlap_fidelity(rho, psi_target)});
  };

  auto abort_if_broken = [&](const char* where) {
    if (diag.max_trace_drift > kAbortTolerance) {
      throw IntegrationError(std::string("trace drift exceeded 1e-6 ") + where, diag);
    }
    if (!(diag.min_eigenvalue >= -kAbortTolerance)) {
      throw IntegrationError(std::string("density matrix lost positivity ") + where, diag);
    }
  };

  bool decoupled = false;
  double t_global = 0.0;
  sample(0.0);
  for (std::size_t k = 0; k < s.segments.size(); ++k) {
    const Segment& segment = s.segments[k];
    if (is_decouple(segment)) {
      decoupled = true;
      continue;
    }
    const double duration = segment_duration(segment);
    if (duration == 0.0) continue;
    const SegmentHamiltonian h = segment_hamiltonian(segment, p, decoupled, space);
    const Generator g = make_generator(h, &collapse);
    const StepPlan plan = plan_steps(duration, h.max_frequency(), opts);
    for (long i = 0; i < plan.count; ++i) {
      const double t_local = static_cast<double>(i) * plan.dt;
      rk4.step(g, rhs, t_local, plan.dt, rho);
      const double drift = std::abs(rho.trace() - 1.0);
      if (!std::isfinite(drift)) {
        throw IntegrationError("density matrix became non-finite in segment " + std::to_string(k),
                               diag);
      }
      diag.max_trace_drift = std::max(diag.max_trace_drift, drift);
      monitor.update(rho, diag);
      if (opts.record_trajectory && (i + 1) % std::max(1, opts.sample_stride) == 0 &&
          i + 1 != plan.count) {
        sample(t_global + static_cast<double>(i + 1) * plan.dt);
      }
    }
    diag.steps += plan.count;
    t_global += duration;
    diag.max_hermiticity_error =
        std::max(diag.max_hermiticity_error, DensityMatrix(space, rho).hermiticity_error());
    rho = 0.5 * (rho + rho.adjoint()).eval();
    const DensityMatrix boundary(space, rho);
    const double min_eig = boundary.min_eigenvalue();
    diag.min_eigenvalue = std::isnan(min_eig) ? min_eig : std::min(diag.min_eigenvalue, min_eig);
    sample(t_global);
    abort_if_broken(("after segment " + std::to_string(k)).c_str());
  }

  if (diag.peak_top_fock_population > kTruncationWarning) {
    result.warnings.push_back("population at the top Fock level reached " +
                              std::to_string(diag.peak_top_fock_population) +
                              "; increase n_max");
  }
  result.rho_final = DensityMatrix(space, rho);
  result.fidelity = fidelity(result.rho_final, target);
  return result;
}

StateVector evolve_unitary(const Schedule& s, const ModelParams& p, const StateVector& psi0,
                           const IntegratorOptions& opts) {
  const HilbertSpace& space = psi0.space();
  check_params(s, p, space);
  Vector psi = psi0.amplitudes();
  const double norm0 = psi.norm();
  SchrodingerEquation rhs;
  Rk4<Vector, SchrodingerEquation> rk4(Vector::Zero(space.total_dim()));
  bool decoupled = false;
  for (const auto& segment : s.segments) {
    if (is_decouple(segment)) {
      decoupled = true;
      continue;
    }
    const double duration = segment_duration(segment);
    if (duration == 0.0) continue;
    const SegmentHamiltonian h = segment_hamiltonian(segment, p, decoupled, space);
    const Generator g = make_generator(h, nullptr);
    const StepPlan plan = plan_steps(duration, h.max_frequency(), opts);
    for (long i = 0; i < plan.count; ++i) {
      rk4.step(g, rhs, static_cast<double>(i) * plan.dt, plan.dt, psi);
    }
    if (std::abs(psi.norm() - norm0) > kAbortTolerance) {
      throw IntegrationError("state norm drifted beyond 1e-6", Diagnostics{});
    }
  }
  return {space, std::move(psi)};
}

double fidelity(const DensityMatrix& rho, const StateVector& psi) {
  if (!(rho.space() == psi.space())) {
    throw std::invalid_argument("fidelity: Hilbert space mismatch");
  }
  const double overlap = psi.amplitudes().dot(rho.matrix() * psi.amplitudes()).real();
  if (overlap < -1e-8) {
    throw std::domain_error("fidelity: negative overlap " + std::to_string(overlap));
  }
  return std::sqrt(std::clamp(overlap, 0.0, 1.0));
}

double fidelity(const StateVector& psi, const StateVector& target) {
  return std::min(1.0, std::abs(target.inner(psi)));
}

EvolutionResult run_transfer(const ModelParams& p, std::span<const Complex> c,
                             const IntegratorOptions& opts) {
  p.validate();
  const HilbertSpace space = p.space();
  const std::vector<Complex> uniform = c.empty() ? uniform_coefficients(p.d) : std::vector<Complex>{};
  const std::span<const Complex> coeffs = c.empty() ? std::span<const Complex>(uniform) : c;
  const StateVector target = target_state(space, coeffs);
  const StateVector psi0 = input_state(space, coeffs);
  const Schedule schedule = compile_schedule(p.d, p.g1, p.omega);
  return evolve_master(schedule, p, DensityMatrix::pure(psi0), target, opts);
}

void write_trajectory_csv(const EvolutionResult& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  const HilbertSpace& space = r.rho_final.space();
  out << "t_s";
  for (int i = 0; i < space.total_dim(); ++i) out << ',' << basis_label(space, i);
  out << ",fidelity\n";
  out << std::setprecision(17);
  for (const auto& s : r.trajectory) {
    out << s.t;
    for (double p : s.populations) out << ',' << p;
    out << ',' << s.fidelity << '\n';
  }
  if (!out) {
    throw std::runtime_error("failed writing " + path);
  }
}

}  // namespace qst
