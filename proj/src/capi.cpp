// extern "C" surface over the core library. Exceptions are caught at the
// boundary and mapped to status codes; messages land in a thread-local slot.

#include "tavis_cummings.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "core/closed_form.hpp"
#include "core/oracle.hpp"
#include "core/sim.hpp"
#include "core/verify.hpp"

namespace {

thread_local std::string g_last_error;

tc_status fail(tc_status code, const char* what) {
  g_last_error = what ? what : "";
  return code;
}

template <class Fn>
tc_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const tc::OffResonanceError& e) {
    return fail(TC_ERR_OFF_RESONANCE, e.what());
  } catch (const tc::TruncationError& e) {
    return fail(TC_ERR_TRUNCATION, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(TC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TC_ERR_INTERNAL, "unknown error");
  }
}

tc::ModelParams to_core(const tc_model_params& p) {
  return {p.n_atoms, p.omega, p.delta, p.g, p.nmax};
}

double record_value(const tc::TimeSeriesRecord& rec, size_t col) {
  if (col == 0) return rec.t;
  if (col == 1) return rec.spin_z;
  if (col == 2) return rec.photons;
  if (col < 3 + rec.populations.size()) return rec.populations[col - 3];
  return rec.norm_deficit;
}

}  // namespace

struct tc_model {
  tc::ModelParams params;
};

struct tc_timeseries {
  tc::EvolveResult result;
  std::vector<std::string> col_names;
};

extern "C" {

const char* tc_version(void) { return "1.0.0"; }

const char* tc_status_name(tc_status s) {
  switch (s) {
    case TC_OK: return "ok";
    case TC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TC_ERR_OFF_RESONANCE: return "off resonance";
    case TC_ERR_TRUNCATION: return "truncation";
    case TC_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case TC_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* tc_last_error(void) { return g_last_error.c_str(); }

tc_status tc_model_create(const tc_model_params* params, tc_model** out) {
  if (!params || !out) return fail(TC_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    tc::ModelParams p = to_core(*params);
    tc::validate(p);
    *out = new tc_model{p};
    return TC_OK;
  });
}

void tc_model_free(tc_model* model) { delete model; }

int tc_model_dim(const tc_model* model) {
  if (!model) return -1;
  return tc::product_dim(model->params.n_atoms, model->params.nmax);
}

tc_status tc_evolution_operator(const tc_model* model, double t, double* out,
                                size_t capacity) {
  if (!model || !out) return fail(TC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const tc::Matrix u = tc::evolution_operator(model->params, t);
    const size_t need = 2 * static_cast<size_t>(u.rows()) * static_cast<size_t>(u.cols());
    if (capacity < need)
      return fail(TC_ERR_BUFFER_TOO_SMALL, "evolution operator buffer too small");
    size_t k = 0;
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
      for (Eigen::Index c = 0; c < u.cols(); ++c) {
        out[k++] = u(r, c).real();
        out[k++] = u(r, c).imag();
      }
    }
    return TC_OK;
  });
}

tc_status tc_evolve(const tc_model_params* params, const tc_evolve_params* run,
                    tc_timeseries** out) {
  if (!params || !run || !out || !run->atoms || !run->field)
    return fail(TC_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    tc::SimConfig cfg;
    cfg.params = to_core(*params);
    cfg.grid = {run->t_start, run->t_end, run->dt, run->times_in_inverse_g != 0};
    cfg.init = {run->atoms, tc::FieldSpec::parse(run->field)};
    cfg.auto_extend_nmax = run->auto_extend_nmax != 0;

    auto ts = std::make_unique<tc_timeseries>();
    ts->result = tc::evolve(cfg);
    ts->col_names = {"t", "S3", "N"};
    for (int b = 0; b < tc::atomic_dim(cfg.params.n_atoms); ++b)
      ts->col_names.push_back("pop_" + std::to_string(b));
    ts->col_names.push_back("norm_deficit");
    *out = ts.release();
    return TC_OK;
  });
}

size_t tc_timeseries_rows(const tc_timeseries* ts) {
  return ts ? ts->result.records.size() : 0;
}

size_t tc_timeseries_cols(const tc_timeseries* ts) {
  return ts ? ts->col_names.size() : 0;
}

const char* tc_timeseries_col_name(const tc_timeseries* ts, size_t col) {
  if (!ts || col >= ts->col_names.size()) return nullptr;
  return ts->col_names[col].c_str();
}

int tc_timeseries_nmax(const tc_timeseries* ts) {
  return ts ? ts->result.params.nmax : -1;
}

tc_status tc_timeseries_get(const tc_timeseries* ts, size_t row, size_t col,
                            double* value) {
  if (!ts || !value || row >= tc_timeseries_rows(ts) || col >= tc_timeseries_cols(ts))
    return fail(TC_ERR_INVALID_ARGUMENT, "timeseries index out of range");
  *value = record_value(ts->result.records[row], col);
  return TC_OK;
}

tc_status tc_timeseries_copy(const tc_timeseries* ts, double* out, size_t capacity) {
  if (!ts || !out) return fail(TC_ERR_INVALID_ARGUMENT, "null argument");
  const size_t rows = tc_timeseries_rows(ts);
  const size_t cols = tc_timeseries_cols(ts);
  if (capacity < rows * cols)
    return fail(TC_ERR_BUFFER_TOO_SMALL, "timeseries buffer too small");
  size_t k = 0;
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) out[k++] = record_value(ts->result.records[r], c);
  return TC_OK;
}

void tc_timeseries_free(tc_timeseries* ts) { delete ts; }

tc_status tc_verify(const tc_verify_params* params, char** json_report, int* all_passed) {
  return guarded([&] {
    tc::VerifyOptions options;
    if (params) {
      if (params->atoms && params->atoms_len > 0)
        options.atoms.assign(params->atoms, params->atoms + params->atoms_len);
      if (params->taus && params->taus_len > 0)
        options.taus.assign(params->taus, params->taus + params->taus_len);
      if (params->nmax > 0) options.nmax = params->nmax;
      if (params->tol > 0.0) options.tol = params->tol;
    }
    for (int n : options.atoms)
      if (n < 1 || n > 4) return fail(TC_ERR_INVALID_ARGUMENT, "atoms must be in [1,4]");

    const tc::VerifyReport report = tc::run_verification(options);
    if (all_passed) *all_passed = report.all_passed() ? 1 : 0;
    if (json_report) {
      const std::string text = tc::report_json(report, options);
      char* buf = static_cast<char*>(std::malloc(text.size() + 1));
      if (!buf) return fail(TC_ERR_INTERNAL, "out of memory");
      std::memcpy(buf, text.c_str(), text.size() + 1);
      *json_report = buf;
    }
    return TC_OK;
  });
}

void tc_string_free(char* s) { std::free(s); }

}  // extern "C"
