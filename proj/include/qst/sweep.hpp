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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qst/dynamics.hpp"
#include "qst/model.hpp"
#include "qst/presets.hpp"

namespace qst {

/// Fidelity landscape over (g/2pi, Omega/2pi) in MHz. g1 follows the grid and g2 keeps the
/// base ratio g2/g1.
struct SweepConfig {
  std::vector<double> g_grid_mhz;
  std::vector<double> omega_grid_mhz;
  ModelParams base;
  std::vector<Complex> input_state;  // empty: uniform superposition
  int parallel_workers = 1;
  IntegratorOptions integrator;

  /// Grids non-empty and strictly increasing, coefficients normalized, base valid.
  void validate() const;
};

enum class CellStatus { Ok, Diverged };

struct SweepCell {
  double g_mhz = 0.0;
  double omega_mhz = 0.0;
  CellStatus status = CellStatus::Ok;
  std::optional<double> fidelity;
  Diagnostics diagnostics;
  std::string message;  // failure reason
};

struct SweepResult {
  std::vector<double> g_grid_mhz;
  std::vector<double> omega_grid_mhz;
  /// Grid order: index = ig * omega_grid_mhz.size() + io.
  std::vector<SweepCell> cells;
  std::optional<OperatingPoint> optimum;

  const SweepCell& at(std::size_t ig, std::size_t io) const {
    return cells[ig * omega_grid_mhz.size() + io];
  }
  int failed_count() const;
};

/// Called after each finished cell with (completed, total). May run on worker threads.
using SweepProgress = std::function<void(std::size_t, std::size_t)>;

/// Evaluates every cell (in parallel when parallel_workers > 1). Cells whose integration
/// breaks down are kept with status Diverged. The optimum is the grid maximum.
SweepResult run_sweep(const SweepConfig& cfg, const SweepProgress& progress = {});

/// Columns g_MHz, omega_MHz, fidelity, status. Numbers are written with 17 significant
/// digits; a diverged cell has an empty fidelity.
void emit_csv(const SweepResult& r, const std::string& path);

/// Reads a file written by emit_csv back into cells (diagnostics are not stored).
std::vector<SweepCell> read_csv(const std::string& path);

/// Rectangular matrix: an axis header row with the g values, then one row per Omega value
/// starting with that value. Diverged cells are written as nan.
void emit_heatmap_data(const SweepResult& r, const std::string& path);

std::vector<double> linspace(double start, double stop, int count);

}  // namespace qst
