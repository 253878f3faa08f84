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

#include "qst/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qst {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_non_negative(double v, const std::string& name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(name + " must be finite and non-negative");
  }
}

bool needs_anharmonicity(const RealismFlags& r) {
  return r.rotating_phases && (r.include_eps1 || r.include_eps_l);
}

double anharmonicity(const ModelParams& p, int k) {
  if (k < 0 || k >= static_cast<int>(p.anharm.size())) {
    throw std::invalid_argument("anharmonicity step " + std::to_string(k + 1) +
                                " is required but not supplied");
  }
  return p.anharm[k];
}

Operator coupling(const HilbertSpace& space, Site qudit, int level) {
  const auto a = embed(annihilation(space.n_max()), Site::Cavity, space);
  return a * embed(transition_raise(space.qudit_dim(), level), qudit, space);
}

// |lower><lower+1| on one qudit.
Operator lowering(const HilbertSpace& space, Site qudit, int lower) {
  return embed(transition_raise(space.qudit_dim(), lower + 1).adjoint(), qudit, space);
}

void add_off_resonant(SegmentHamiltonian& h, const Operator& half, double detuning,
                      bool rotating) {
  if (rotating) {
    h.rotating_terms.push_back({half, detuning});
  } else {
    h.static_part += half + half.adjoint();
  }
}

}  // namespace

void ModelParams::validate() const {
  if (d < 2) {
    throw std::invalid_argument("qudit dimension d must be at least 2");
  }
  if (n_max < 1) {
    throw std::invalid_argument("cavity truncation n_max must be at least 1");
  }
  require_non_negative(g1, "g1");
  require_non_negative(g2, "g2");
  require_non_negative(omega, "omega");
  require_non_negative(kappa, "kappa");
  require_non_negative(omega_c, "omega_c");
  const auto levels = static_cast<std::size_t>(d - 1);
  if (gamma_relax.size() != levels || gamma_phi.size() != levels) {
    throw std::invalid_argument("gamma_relax and gamma_phi need d-1 = " +
                                std::to_string(levels) + " entries");
  }
  for (double g : gamma_relax) require_non_negative(g, "gamma_relax");
  for (double g : gamma_phi) require_non_negative(g, "gamma_phi");
  const auto steps = static_cast<std::size_t>(d - 2);
  if (!anharm.empty() || needs_anharmonicity(realism)) {
    if (anharm.size() != steps) {
      throw std::invalid_argument("anharm needs d-2 = " + std::to_string(steps) +
                                  " entries for d = " + std::to_string(d));
    }
  }
  for (double a : anharm) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw std::invalid_argument("anharm entries must be positive");
    }
  }
}

double ModelParams::quality_factor() const {
  if (kappa == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return omega_c / kappa;
}

ModelParams ModelParams::without_decoherence() const {
  ModelParams out = *this;
  out.kappa = 0.0;
  std::fill(out.gamma_relax.begin(), out.gamma_relax.end(), 0.0);
  std::fill(out.gamma_phi.begin(), out.gamma_phi.end(), 0.0);
  return out;
}

void ModelParams::set_coupling(double g) {
  const double ratio = g1 > 0.0 ? g2 / g1 : 1.0;
  g1 = g;
  g2 = ratio * g;
}

Operator SegmentHamiltonian::at(double t) const {
  Matrix h = static_part.matrix();
  for (const auto& term : rotating_terms) {
    const Matrix half = std::exp(kI * (term.detuning * t)) * term.op.matrix();
    h += half + half.adjoint();
  }
  return {static_part.space(), std::move(h)};
}

double SegmentHamiltonian::max_frequency() const {
  double f = static_part.matrix().cwiseAbs().maxCoeff();
  for (const auto& term : rotating_terms) {
    f = std::max({f, std::abs(term.detuning), term.op.matrix().cwiseAbs().maxCoeff()});
  }
  return f;
}

SegmentHamiltonian cavity_coupling_hamiltonian(const ModelParams& p, const HilbertSpace& space) {
  if (space.qudit_dim() != p.d || space.n_max() != p.n_max) {
    throw std::invalid_argument("Hilbert space does not match the model parameters");
  }
  SegmentHamiltonian h{Operator::zero(space), {}};
  const double g[2] = {p.g1, p.g2};
  const Site qudits[2] = {Site::Qudit1, Site::Qudit2};
  for (int j = 0; j < 2; ++j) {
    const Operator half = Complex(g[j]) * coupling(space, qudits[j], 1);
    h.static_part += half + half.adjoint();
  }
  if (p.realism.include_eps1 && p.d >= 3) {
    // Cavity detuned from omega_12 by the first anharmonicity step; coupling ~ sqrt(2) g.
    const double detuning = p.realism.rotating_phases ? -anharmonicity(p, 0) : 0.0;
    for (int j = 0; j < 2; ++j) {
      const Operator half = Complex(std::sqrt(2.0) * g[j]) * coupling(space, qudits[j], 2);
      add_off_resonant(h, half, detuning, p.realism.rotating_phases);
    }
  }
  return h;
}

SegmentHamiltonian pulse_hamiltonian(const ModelParams& p, std::span<const PulseTarget> targets,
                                     const HilbertSpace& space) {
  if (space.qudit_dim() != p.d || space.n_max() != p.n_max) {
    throw std::invalid_argument("Hilbert space does not match the model parameters");
  }
  bool seen[2] = {false, false};
  for (const auto& t : targets) {
    if (t.qudit != Site::Qudit1 && t.qudit != Site::Qudit2) {
      throw std::invalid_argument("pulse target must be a qudit");
    }
    if (t.level < 1 || t.level > p.d - 1) {
      throw std::invalid_argument("pulse level " + std::to_string(t.level) +
                                  " out of range for d = " + std::to_string(p.d));
    }
    bool& flag = seen[static_cast<int>(t.qudit)];
    if (flag) {
      throw std::invalid_argument("at most one pulse per qudit per segment");
    }
    flag = true;
  }

  SegmentHamiltonian h = p.realism.include_cavity_during_pulse
                             ? cavity_coupling_hamiltonian(p, space)
                             : SegmentHamiltonian{Operator::zero(space), {}};
  const bool rotating = p.realism.rotating_phases;
  for (const auto& t : targets) {
    const Complex phase = std::exp(kI * t.phase);
    const Operator half = (p.omega * phase) * lowering(space, t.qudit, t.level - 1);
    h.static_part += half + half.adjoint();
    if (!p.realism.include_eps_l) {
      continue;
    }
    // The off-resonant halves are stored in raising form, |k><k-1| e^{-i phi}, whose
    // interaction-picture phase is e^{i (omega_{k-1,k} - omega_drive) t}.
    if (t.level >= 2) {
      const Operator lower = (p.omega / std::sqrt(2.0) * std::conj(phase)) *
                             lowering(space, t.qudit, t.level - 2).adjoint();
      add_off_resonant(h, lower, rotating ? anharmonicity(p, t.level - 2) : 0.0, rotating);
    }
    if (t.level <= p.d - 2) {
      const Operator upper = (std::sqrt(2.0) * p.omega * std::conj(phase)) *
                             lowering(space, t.qudit, t.level).adjoint();
      add_off_resonant(h, upper, rotating ? -anharmonicity(p, t.level - 1) : 0.0, rotating);
    }
  }
  return h;
}

std::vector<Operator> collapse_operators(const ModelParams& p, const HilbertSpace& space) {
  if (space.qudit_dim() != p.d || space.n_max() != p.n_max) {
    throw std::invalid_argument("Hilbert space does not match the model parameters");
  }
  std::vector<Operator> ops;
  ops.reserve(static_cast<std::size_t>(1 + 4 * (p.d - 1)));
  ops.push_back(Complex(std::sqrt(p.kappa)) * embed(annihilation(p.n_max), Site::Cavity, space));
  for (Site q : {Site::Qudit1, Site::Qudit2}) {
    for (int l = 1; l <= p.d - 1; ++l) {
      ops.push_back(Complex(std::sqrt(p.gamma_relax[l - 1])) * lowering(space, q, l - 1));
    }
    for (int l = 1; l <= p.d - 1; ++l) {
      ops.push_back(Complex(std::sqrt(p.gamma_phi[l - 1])) * embed(projector(p.d, l), q, space));
    }
  }
  return ops;
}

Operator excitation_number(const HilbertSpace& space) {
  const auto a = embed(annihilation(space.n_max()), Site::Cavity, space);
  Operator n = a.adjoint() * a;
  for (Site q : {Site::Qudit1, Site::Qudit2}) {
    for (int l = 1; l < space.qudit_dim(); ++l) {
      n += Complex(l) * embed(projector(space.qudit_dim(), l), q, space);
    }
  }
  return n;
}

}  // namespace qst
