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

#include "qst/qst.h"

#include <cstring>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <string>

#include "qst/config.hpp"
#include "qst/dynamics.hpp"
#include "qst/presets.hpp"
#include "qst/protocol.hpp"
#include "qst/sweep.hpp"
#include "qst/verify.hpp"

struct qst_params {
  qst::ExperimentConfig cfg;
};

struct qst_schedule {
  qst::Schedule schedule;
};

struct qst_evolution {
  qst::EvolutionResult result;
};

struct qst_sweep_config {
  qst::SweepConfig cfg;
};

struct qst_sweep_result {
  qst::SweepResult result;
};

namespace {

thread_local std::string last_error;

class NullArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class F>
qst_status try_(F&& f) {
  try {
    last_error.clear();
    f();
    return QST_OK;
  } catch (const NullArgument& e) {
    last_error = e.what();
    return QST_ERR_NULL_POINTER;
  } catch (const ParseError& e) {
    last_error = e.what();
    return QST_ERR_PARSE;
  } catch (const qst::IntegrationError& e) {
    last_error = e.what();
    return QST_ERR_INTEGRATION;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return QST_ERR_INTEGRATION;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return QST_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return QST_ERR_INVALID_ARGUMENT;
  } catch (const std::runtime_error& e) {
    last_error = e.what();
    return QST_ERR_IO;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QST_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return QST_ERR_INTERNAL;
  }
}

template <class T>
T& deref(T* p, const char* name) {
  if (p == nullptr) throw NullArgument(std::string(name) + " is null");
  return *p;
}

const char* nonnull(const char* s, const char* name) {
  if (s == nullptr) throw NullArgument(std::string(name) + " is null");
  return s;
}

std::string read_file(const char* path) {
  std::ifstream in(nonnull(path, "path"));
  if (!in) throw std::runtime_error(std::string("cannot open ") + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

qst::ExperimentConfig load(const char* path) {
  const std::string text = read_file(path);
  try {
    return qst::parse_config(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(path) + ": " + e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* qst_version(void) { return "0.1.0"; }

const char* qst_last_error(void) { return last_error.c_str(); }

void qst_string_free(char* s) { delete[] s; }

qst_status qst_params_preset(const char* preset, int d, qst_params** out) {
  return try_([&] {
    deref(out, "out") = nullptr;
    qst::ExperimentConfig cfg;
    cfg.params = qst::preset_by_name(nonnull(preset, "preset"), d);
    *out = new qst_params{std::move(cfg)};
  });
}

qst_status qst_params_from_config(const char* path, qst_params** out) {
  return try_([&] {
    deref(out, "out") = nullptr;
    *out = new qst_params{load(path)};
  });
}

qst_status qst_params_set_couplings(qst_params* p, double g_mhz, double omega_mhz) {
  return try_([&] {
    auto params = deref(p, "params").cfg.params;
    params.set_coupling(qst::angular_mhz(g_mhz));
    params.omega = qst::angular_mhz(omega_mhz);
    params.validate();
    p->cfg.params = std::move(params);
  });
}

qst_status qst_params_set_realism(qst_params* p, int on) {
  return try_([&] {
    auto& realism = deref(p, "params").cfg.params.realism;
    const bool rotating = realism.rotating_phases;
    realism = on ? qst::RealismFlags::all_on() : qst::RealismFlags::all_off();
    realism.rotating_phases = rotating;
    p->cfg.params.validate();
  });
}

qst_status qst_params_set_rates(qst_params* p, int on) {
  return try_([&] {
    auto& params = deref(p, "params").cfg.params;
    if (on) {
      const auto preset = qst::preset_paper(params.d);
      params.kappa = preset.kappa;
      params.gamma_relax = preset.gamma_relax;
      params.gamma_phi = preset.gamma_phi;
    } else {
      params = params.without_decoherence();
    }
  });
}

qst_status qst_params_set_n_max(qst_params* p, int n_max) {
  return try_([&] {
    auto params = deref(p, "params").cfg.params;
    params.n_max = n_max;
    params.validate();
    p->cfg.params = std::move(params);
  });
}

qst_status qst_params_dimension(const qst_params* p, int* d) {
  return try_([&] { deref(d, "d") = deref(p, "params").cfg.params.d; });
}

qst_status qst_params_couplings(const qst_params* p, double* g1_mhz, double* g2_mhz,
                                double* omega_mhz) {
  return try_([&] {
    const auto& params = deref(p, "params").cfg.params;
    if (g1_mhz) *g1_mhz = qst::to_mhz(params.g1);
    if (g2_mhz) *g2_mhz = qst::to_mhz(params.g2);
    if (omega_mhz) *omega_mhz = qst::to_mhz(params.omega);
  });
}

void qst_params_free(qst_params* p) { delete p; }

qst_status qst_schedule_compile(const qst_params* p, qst_schedule** out) {
  return try_([&] {
    deref(out, "out") = nullptr;
    const auto& params = deref(p, "params").cfg.params;
    *out = new qst_schedule{qst::compile_schedule(params.d, params.g1, params.omega)};
  });
}

qst_status qst_schedule_from_json(const char* text, qst_schedule** out) {
  return try_([&] {
    deref(out, "out") = nullptr;
    const std::string doc = nonnull(text, "text");
    try {
      *out = new qst_schedule{qst::schedule_from_json(doc)};
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  });
}

qst_status qst_schedule_load(const char* path, qst_schedule** out) {
  return try_([&] {
    deref(out, "out") = nullptr;
    const std::string text = read_file(path);
    try {
      *out = new qst_schedule{qst::schedule_from_json(text)};
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(path) + ": " + e.what());
    }
  });
}

qst_status qst_schedule_segment_count(const qst_schedule* s, size_t* count) {
  return try_([&] { deref(count, "count") = deref(s, "schedule").schedule.segments.size(); });
}

qst_status qst_schedule_total_duration(const qst_schedule* s, double* seconds) {
  return try_([&] { deref(seconds, "seconds") = deref(s, "schedule").schedule.total_duration(); });
}

qst_status qst_schedule_to_json(const qst_schedule* s, char** json) {
  return try_([&] {
    deref(json, "json") = nullptr;
    *json = copy_string(qst::schedule_to_json(deref(s, "schedule").schedule));
  });
}

qst_status qst_schedule_save(const qst_schedule* s, const char* path) {
  return try_([&] {
    const std::string text = qst::schedule_to_json(deref(s, "schedule").schedule);
    std::ofstream out(nonnull(path, "path"));
    if (!out) throw std::runtime_error(std::string("cannot open ") + path + " for writing");
    out << text << '\n';
    if (!out) throw std::runtime_error(std::string("write failed: ") + path);
  });
}

void qst_schedule_free(qst_schedule* s) { delete s; }

qst_status qst_simulate(const qst_params* p, const qst_schedule* schedule, const double* coeff_re,
                        const double* coeff_im, size_t n, const qst_simulate_options* options,
                        qst_evolution** out) {
  return try_([&] {
    deref(out, "out") = nullptr;
    const auto& cfg = deref(p, "params").cfg;
    const auto& params = cfg.params;
    params.validate();

    std::vector<qst::Complex> c = cfg.input_state;
    if (n > 0) {
      if (static_cast<int>(n) != params.d) {
        throw std::invalid_argument("expected " + std::to_string(params.d) + " coefficients");
      }
      if (coeff_re == nullptr) throw NullArgument("coeff_re is null");
      c.assign(n, {});
      for (size_t i = 0; i < n; ++i) c[i] = {coeff_re[i], coeff_im ? coeff_im[i] : 0.0};
    }
    if (c.empty()) c = qst::uniform_coefficients(params.d);

    qst::IntegratorOptions opts = cfg.integrator;
    if (options) {
      if (options->dt_scale > 0.0) opts.dt_scale = options->dt_scale;
      if (options->sample_stride > 0) opts.sample_stride = options->sample_stride;
      opts.record_trajectory = options->trajectory_path != nullptr;
    }

    const qst::HilbertSpace space = params.space();
    const qst::Schedule compiled =
        schedule ? schedule->schedule : qst::compile_schedule(params.d, params.g1, params.omega);
    auto result = qst::evolve_master(compiled, params,
                                     qst::DensityMatrix::pure(qst::input_state(space, c)),
                                     qst::target_state(space, c), opts);
    if (opts.record_trajectory) qst::write_trajectory_csv(result, options->trajectory_path);
    *out = new qst_evolution{std::move(result)};
  });
}

qst_status qst_evolution_fidelity(const qst_evolution* e, double* fidelity) {
  return try_([&] { deref(fidelity, "fidelity") = deref(e, "evolution").result.fidelity; });
}

qst_status qst_evolution_diagnostics(const qst_evolution* e, qst_diagnostics* out) {
  return try_([&] {
    const auto& d = deref(e, "evolution").result.diagnostics;
    deref(out, "out") = {d.max_trace_drift,
                         d.min_eigenvalue,
                         d.max_hermiticity_error,
                         d.peak_multi_photon_population,
                         d.peak_top_fock_population,
                         d.steps};
  });
}

qst_status qst_evolution_warning_count(const qst_evolution* e, size_t* count) {
  return try_([&] { deref(count, "count") = deref(e, "evolution").result.warnings.size(); });
}

qst_status qst_evolution_warning(const qst_evolution* e, size_t i, const char** text) {
  return try_([&] {
    deref(text, "text") = deref(e, "evolution").result.warnings.at(i).c_str();
  });
}

void qst_evolution_free(qst_evolution* e) { delete e; }

qst_status qst_sweep_config_load(const char* path, qst_sweep_config** out) {
  return try_([&] {
    deref(out, "out") = nullptr;
    auto cfg = load(path);
    if (!cfg.sweep) throw ParseError(std::string(path) + ": no \"sweep\" section");
    *out = new qst_sweep_config{std::move(*cfg.sweep)};
  });
}

qst_status qst_sweep_config_set_workers(qst_sweep_config* c, int workers) {
  return try_([&] {
    if (workers < 1) throw std::invalid_argument("workers must be at least 1");
    deref(c, "sweep config").cfg.parallel_workers = workers;
  });
}

void qst_sweep_config_free(qst_sweep_config* c) { delete c; }

qst_status qst_sweep_run(const qst_sweep_config* c, qst_progress_fn progress, void* user,
                         qst_sweep_result** out) {
  return try_([&] {
    deref(out, "out") = nullptr;
    std::mutex m;
    qst::SweepProgress cb;
    if (progress) {
      cb = [&](std::size_t done, std::size_t total) {
        std::lock_guard lock(m);
        progress(done, total, user);
      };
    }
    *out = new qst_sweep_result{qst::run_sweep(deref(c, "sweep config").cfg, cb)};
  });
}

qst_status qst_sweep_cell_count(const qst_sweep_result* r, size_t* count) {
  return try_([&] { deref(count, "count") = deref(r, "sweep result").result.cells.size(); });
}

qst_status qst_sweep_cell(const qst_sweep_result* r, size_t i, double* g_mhz, double* omega_mhz,
                          double* fidelity, int* ok) {
  return try_([&] {
    const auto& cell = deref(r, "sweep result").result.cells.at(i);
    if (g_mhz) *g_mhz = cell.g_mhz;
    if (omega_mhz) *omega_mhz = cell.omega_mhz;
    if (fidelity) *fidelity = cell.fidelity.value_or(std::numeric_limits<double>::quiet_NaN());
    if (ok) *ok = cell.status == qst::CellStatus::Ok;
  });
}

qst_status qst_sweep_failed_count(const qst_sweep_result* r, size_t* count) {
  return try_([&] {
    deref(count, "count") = static_cast<size_t>(deref(r, "sweep result").result.failed_count());
  });
}

qst_status qst_sweep_optimum(const qst_sweep_result* r, double* g_mhz, double* omega_mhz,
                             double* fidelity) {
  return try_([&] {
    const auto& opt = deref(r, "sweep result").result.optimum;
    if (!opt) throw std::invalid_argument("every sweep cell failed");
    if (g_mhz) *g_mhz = opt->g_mhz;
    if (omega_mhz) *omega_mhz = opt->omega_mhz;
    if (fidelity) *fidelity = opt->fidelity;
  });
}

qst_status qst_sweep_write_csv(const qst_sweep_result* r, const char* path) {
  return try_([&] { qst::emit_csv(deref(r, "sweep result").result, nonnull(path, "path")); });
}

qst_status qst_sweep_write_heatmap(const qst_sweep_result* r, const char* path) {
  return try_([&] {
    qst::emit_heatmap_data(deref(r, "sweep result").result, nonnull(path, "path"));
  });
}

void qst_sweep_result_free(qst_sweep_result* r) { delete r; }

qst_status qst_verify_run(uint64_t seed, qst_check_fn on_check, void* user, size_t* failures) {
  return try_([&] {
    size_t failed = 0;
    qst::run_verification(seed, [&](const qst::CheckResult& c) {
      if (!c.passed) ++failed;
      if (on_check) on_check(c.name.c_str(), c.passed ? 1 : 0, c.detail.c_str(), user);
    });
    if (failures) *failures = failed;
  });
}

}  // extern "C"
