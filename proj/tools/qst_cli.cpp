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

// qst: compile, simulate and sweep the two-qudit cavity transfer protocol.

#include <cmath>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qst/qst.h"

namespace {

constexpr int kExitFailed = 1;  // a simulation or check failed
constexpr int kExitError = 2;   // bad input or I/O

struct Failure {
  int code;
};

void check(qst_status s, const char* what) {
  if (s != QST_OK) {
    std::fprintf(stderr, "qst: %s: %s\n", what, qst_last_error());
    throw Failure{kExitError};
  }
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Params = std::unique_ptr<qst_params, Deleter<qst_params, qst_params_free>>;
using Schedule = std::unique_ptr<qst_schedule, Deleter<qst_schedule, qst_schedule_free>>;
using Evolution = std::unique_ptr<qst_evolution, Deleter<qst_evolution, qst_evolution_free>>;
using SweepConfig =
    std::unique_ptr<qst_sweep_config, Deleter<qst_sweep_config, qst_sweep_config_free>>;
using SweepResult =
    std::unique_ptr<qst_sweep_result, Deleter<qst_sweep_result, qst_sweep_result_free>>;

struct PointOptions {
  std::optional<int> d;
  std::optional<double> g_mhz;
  std::optional<double> omega_mhz;
  std::string preset = "paper";
  std::optional<std::string> realism;
  std::optional<std::string> rates;
  std::optional<int> n_max;
  std::string config;
};

void add_point_options(CLI::App* cmd, PointOptions& o) {
  auto* config = cmd->add_option("--config", o.config, "Experiment config file")
                     ->check(CLI::ExistingFile);
  cmd->add_option("--d", o.d, "Qudit dimension (default 3)")->check(CLI::Range(2, 12));
  cmd->add_option("--g-mhz", o.g_mhz, "Cavity coupling g/2pi in MHz")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--omega-mhz", o.omega_mhz, "Pulse amplitude Omega/2pi in MHz")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--preset", o.preset, "Base parameters")
      ->check(CLI::IsMember({"paper", "ideal"}))
      ->excludes(config);
  cmd->add_option("--realism", o.realism, "Spurious couplings")
      ->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--rates", o.rates, "Decoherence")->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--n-max", o.n_max, "Cavity Fock truncation")->check(CLI::Range(1, 20));
}

Params make_params(const PointOptions& o) {
  qst_params* raw = nullptr;
  if (!o.config.empty()) {
    check(qst_params_from_config(o.config.c_str(), &raw), "config");
  } else {
    check(qst_params_preset(o.preset.c_str(), o.d.value_or(3), &raw), "preset");
  }
  Params p(raw);
  int d = 0;
  check(qst_params_dimension(p.get(), &d), "params");
  if (o.d && *o.d != d) {
    std::fprintf(stderr, "qst: --d %d conflicts with d = %d in %s\n", *o.d, d, o.config.c_str());
    throw Failure{kExitError};
  }
  if (o.g_mhz || o.omega_mhz) {
    double g = 0.0, omega = 0.0;
    check(qst_params_couplings(p.get(), &g, nullptr, &omega), "params");
    check(qst_params_set_couplings(p.get(), o.g_mhz.value_or(g), o.omega_mhz.value_or(omega)),
          "couplings");
  }
  if (o.realism) check(qst_params_set_realism(p.get(), *o.realism == "on"), "--realism");
  if (o.rates) check(qst_params_set_rates(p.get(), *o.rates == "on"), "--rates");
  if (o.n_max) check(qst_params_set_n_max(p.get(), *o.n_max), "--n-max");
  return p;
}

int run_compile(const PointOptions& o, const std::string& out) {
  Params p = make_params(o);
  qst_schedule* raw = nullptr;
  check(qst_schedule_compile(p.get(), &raw), "compile");
  Schedule s(raw);
  if (!out.empty()) {
    check(qst_schedule_save(s.get(), out.c_str()), out.c_str());
    size_t n = 0;
    double t = 0.0;
    check(qst_schedule_segment_count(s.get(), &n), "schedule");
    check(qst_schedule_total_duration(s.get(), &t), "schedule");
    std::printf("wrote %zu segments (%.6g ns) to %s\n", n, t * 1e9, out.c_str());
    return 0;
  }
  char* json = nullptr;
  check(qst_schedule_to_json(s.get(), &json), "schedule");
  std::printf("%s\n", json);
  qst_string_free(json);
  return 0;
}

int run_simulate(const PointOptions& o, const std::string& schedule_path,
                 const std::string& trajectory, double dt_scale) {
  Params p = make_params(o);
  Schedule s;
  if (!schedule_path.empty()) {
    qst_schedule* raw = nullptr;
    check(qst_schedule_load(schedule_path.c_str(), &raw), schedule_path.c_str());
    s.reset(raw);
  }
  qst_simulate_options opts{dt_scale, trajectory.empty() ? nullptr : trajectory.c_str(), 0};
  qst_evolution* raw = nullptr;
  const qst_status status = qst_simulate(p.get(), s.get(), nullptr, nullptr, 0, &opts, &raw);
  if (status == QST_ERR_INTEGRATION) {
    std::fprintf(stderr, "qst: integration failed: %s\n", qst_last_error());
    return kExitFailed;
  }
  check(status, "simulate");
  Evolution e(raw);

  int d = 0;
  double g1 = 0.0, g2 = 0.0, omega = 0.0, f = 0.0;
  qst_diagnostics diag{};
  check(qst_params_dimension(p.get(), &d), "params");
  check(qst_params_couplings(p.get(), &g1, &g2, &omega), "params");
  check(qst_evolution_fidelity(e.get(), &f), "fidelity");
  check(qst_evolution_diagnostics(e.get(), &diag), "diagnostics");
  std::printf("d=%d g1/2pi=%.6g MHz g2/2pi=%.6g MHz Omega/2pi=%.6g MHz\n", d, g1, g2, omega);
  std::printf("fidelity %.10f\n", f);
  std::printf("steps %ld  trace drift %.2e  min eigenvalue %.2e  top Fock %.2e\n", diag.steps,
              diag.max_trace_drift, diag.min_eigenvalue, diag.peak_top_fock_population);
  size_t warnings = 0;
  check(qst_evolution_warning_count(e.get(), &warnings), "warnings");
  for (size_t i = 0; i < warnings; ++i) {
    const char* text = nullptr;
    check(qst_evolution_warning(e.get(), i, &text), "warnings");
    std::fprintf(stderr, "warning: %s\n", text);
  }
  if (!trajectory.empty()) std::printf("trajectory written to %s\n", trajectory.c_str());
  return 0;
}

void print_progress(size_t done, size_t total, void*) {
  std::fprintf(stderr, "\r%zu/%zu cells", done, total);
  if (done == total) std::fputc('\n', stderr);
}

int run_sweep(const std::string& config, const std::string& out, const std::string& heatmap,
              std::optional<int> workers, bool quiet) {
  qst_sweep_config* raw_cfg = nullptr;
  check(qst_sweep_config_load(config.c_str(), &raw_cfg), "config");
  SweepConfig cfg(raw_cfg);
  if (workers) check(qst_sweep_config_set_workers(cfg.get(), *workers), "--workers");

  qst_sweep_result* raw = nullptr;
  check(qst_sweep_run(cfg.get(), quiet ? nullptr : print_progress, nullptr, &raw), "sweep");
  SweepResult r(raw);
  check(qst_sweep_write_csv(r.get(), out.c_str()), out.c_str());
  if (!heatmap.empty()) check(qst_sweep_write_heatmap(r.get(), heatmap.c_str()), heatmap.c_str());

  size_t failed = 0, cells = 0;
  check(qst_sweep_failed_count(r.get(), &failed), "sweep");
  check(qst_sweep_cell_count(r.get(), &cells), "sweep");
  double g = 0.0, omega = 0.0, f = 0.0;
  if (qst_sweep_optimum(r.get(), &g, &omega, &f) == QST_OK) {
    std::printf("optimum g/2pi=%.6g MHz Omega/2pi=%.6g MHz fidelity %.10f\n", g, omega, f);
  }
  std::printf("%zu cells, %zu failed; wrote %s\n", cells, failed, out.c_str());
  return failed == 0 ? 0 : kExitFailed;
}

void print_check(const char* name, int passed, const char* detail, void*) {
  std::printf("[%s] %s: %s\n", passed ? "PASS" : "FAIL", name, detail);
  std::fflush(stdout);
}

int run_verify(std::uint64_t seed) {
  size_t failures = 0;
  check(qst_verify_run(seed, print_check, nullptr, &failures), "verify");
  std::printf("%zu check(s) failed\n", failures);
  return failures == 0 ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qudit state transfer through a shared cavity"};
  app.set_version_flag("--version", qst_version());
  app.require_subcommand(1);

  PointOptions compile_opts;
  std::string schedule_out;
  auto* compile = app.add_subcommand("compile", "Compile the pulse schedule and print or export it");
  add_point_options(compile, compile_opts);
  compile->add_option("--out", schedule_out, "Write the schedule to this file");

  PointOptions sim_opts;
  std::string trajectory, schedule_in;
  double dt_scale = 0.0;
  auto* simulate = app.add_subcommand("simulate", "Run the master equation at one operating point");
  add_point_options(simulate, sim_opts);
  simulate->add_option("--trajectory", trajectory, "Write a trajectory CSV");
  simulate->add_option("--schedule", schedule_in, "Run this exported schedule instead")
      ->check(CLI::ExistingFile);
  simulate->add_option("--dt-scale", dt_scale, "Multiply the integrator step")
      ->check(CLI::PositiveNumber);

  std::string sweep_config, sweep_out, heatmap;
  std::optional<int> workers;
  bool quiet = false;
  auto* sweep = app.add_subcommand("sweep", "Fidelity over a (g, Omega) grid");
  sweep->add_option("--config", sweep_config, "Config with a sweep section")
      ->required()
      ->check(CLI::ExistingFile);
  sweep->add_option("--out", sweep_out, "CSV output")->required();
  sweep->add_option("--heatmap", heatmap, "Heatmap matrix output");
  sweep->add_option("--workers", workers, "Parallel workers")->check(CLI::Range(1, 256));
  sweep->add_flag("--quiet", quiet, "No progress output");

  std::uint64_t seed = 20260101;
  auto* verify = app.add_subcommand("verify", "Run the oracle and invariant checks");
  verify->add_option("--seed", seed, "Random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compile) return run_compile(compile_opts, schedule_out);
    if (*simulate) return run_simulate(sim_opts, schedule_in, trajectory, dt_scale);
    if (*sweep) return run_sweep(sweep_config, sweep_out, heatmap, workers, quiet);
    if (*verify) return run_verify(seed);
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitError;
}
