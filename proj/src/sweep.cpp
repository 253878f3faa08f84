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

#include "qst/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qst {

namespace {

void require_increasing(const std::vector<double>& grid, const char* name) {
  if (grid.empty()) {
    throw std::invalid_argument(std::string(name) + " grid is empty");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i])) {
      throw std::invalid_argument(std::string(name) + " grid values must be positive");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw std::invalid_argument(std::string(name) + " grid must be strictly increasing");
    }
  }
}

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

SweepCell evaluate(const SweepConfig& cfg, double g_mhz, double omega_mhz) {
  SweepCell cell{g_mhz, omega_mhz, CellStatus::Ok, std::nullopt, {}, {}};
  ModelParams p = cfg.base;
  p.set_coupling(angular_mhz(g_mhz));
  p.omega = angular_mhz(omega_mhz);
  try {
    const EvolutionResult r = run_transfer(p, cfg.input_state, cfg.integrator);
    cell.fidelity = r.fidelity;
    cell.diagnostics = r.diagnostics;
  } catch (const IntegrationError& e) {
    cell.status = CellStatus::Diverged;
    cell.diagnostics = e.diagnostics();
    cell.message = e.what();
  } catch (const std::domain_error& e) {
    cell.status = CellStatus::Diverged;
    cell.message = e.what();
  }
  return cell;
}

}  // namespace

void SweepConfig::validate() const {
  require_increasing(g_grid_mhz, "g");
  require_increasing(omega_grid_mhz, "omega");
  base.validate();
  if (!input_state.empty()) {
    if (static_cast<int>(input_state.size()) != base.d) {
      throw std::invalid_argument("input_state needs d coefficients");
    }
    double norm2 = 0.0;
    for (const auto& c : input_state) norm2 += std::norm(c);
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
      throw std::invalid_argument("input_state is not normalized");
    }
  }
  if (parallel_workers < 1) {
    throw std::invalid_argument("parallel_workers must be at least 1");
  }
}

int SweepResult::failed_count() const {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const SweepCell& c) {
    return c.status != CellStatus::Ok;
  }));
}

SweepResult run_sweep(const SweepConfig& cfg, const SweepProgress& progress) {
  cfg.validate();
  SweepResult result;
  result.g_grid_mhz = cfg.g_grid_mhz;
  result.omega_grid_mhz = cfg.omega_grid_mhz;
  const std::size_t n_omega = cfg.omega_grid_mhz.size();
  const std::size_t total = cfg.g_grid_mhz.size() * n_omega;
  result.cells.resize(total);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      result.cells[k] = evaluate(cfg, cfg.g_grid_mhz[k / n_omega], cfg.omega_grid_mhz[k % n_omega]);
      const std::size_t finished = ++done;
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(finished, total);
      }
    }
  };

  const auto workers = static_cast<std::size_t>(cfg.parallel_workers);
  if (workers <= 1 || total <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < std::min(workers, total); ++i) pool.emplace_back(worker);
  }

  for (const auto& cell : result.cells) {
    if (!cell.fidelity) continue;
    if (!result.optimum || *cell.fidelity > result.optimum->fidelity) {
      result.optimum = OperatingPoint{cell.g_mhz, cell.omega_mhz, *cell.fidelity};
    }
  }
  return result;
}

void emit_csv(const SweepResult& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << "g_MHz,omega_MHz,fidelity,status\n";
  for (const auto& c : r.cells) {
    out << format17(c.g_mhz) << ',' << format17(c.omega_mhz) << ',';
    if (c.status == CellStatus::Ok && c.fidelity) {
      out << format17(*c.fidelity) << ",ok\n";
    } else {
      out << ",diverged\n";
    }
  }
  if (!out) {
    throw std::runtime_error("failed writing " + path);
  }
}

std::vector<SweepCell> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::string line;
  if (!std::getline(in, line) || line != "g_MHz,omega_MHz,fidelity,status") {
    throw std::invalid_argument(path + ": unexpected sweep CSV header");
  }
  std::vector<SweepCell> cells;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 4) {
      throw std::invalid_argument(path + ": malformed row '" + line + "'");
    }
    SweepCell c;
    c.g_mhz = parse_double(f[0]);
    c.omega_mhz = parse_double(f[1]);
    if (f[3] == "ok") {
      c.fidelity = parse_double(f[2]);
    } else if (f[3] == "diverged") {
      c.status = CellStatus::Diverged;
    } else {
      throw std::invalid_argument(path + ": unknown status '" + f[3] + "'");
    }
    cells.push_back(std::move(c));
  }
  return cells;
}

void emit_heatmap_data(const SweepResult& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << "omega_MHz\\g_MHz";
  for (double g : r.g_grid_mhz) out << ',' << format17(g);
  out << '\n';
  for (std::size_t io = 0; io < r.omega_grid_mhz.size(); ++io) {
    out << format17(r.omega_grid_mhz[io]);
    for (std::size_t ig = 0; ig < r.g_grid_mhz.size(); ++ig) {
      const auto& c = r.at(ig, io);
      out << ',' << (c.fidelity ? format17(*c.fidelity) : std::string("nan"));
    }
    out << '\n';
  }
  if (!out) {
    throw std::runtime_error("failed writing " + path);
  }
}

std::vector<double> linspace(double start, double stop, int count) {
  if (count < 1) {
    throw std::invalid_argument("linspace needs at least one point");
  }
  if (count == 1) return {start};
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    v[static_cast<std::size_t>(i)] = start + (stop - start) * i / (count - 1);
  }
  return v;
}

}  // namespace qst
