#include "stabengine.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <new>
#include <string>

#include "core/engine.hpp"
#include "core/spectra.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_out(const std::string& s) {
  char* buf = (char*)std::malloc(s.size() + 1);
  if (buf) std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

int guarded(char** out, const std::function<std::string()>& fn) {
  if (out) *out = nullptr;
  try {
    std::string body = fn();
    if (!out) return SE_CONFIG_ERROR;
    *out = dup_out(body);
    if (!*out) {
      g_last_error = "allocation failure";
      return SE_RESOURCE_LIMIT;
    }
    return SE_OK;
  } catch (const stab::ResourceLimitError& e) {
    g_last_error = e.what();
    return SE_RESOURCE_LIMIT;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return SE_CONFIG_ERROR;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return SE_CONFIG_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SE_CHECK_FAILED;
  }
}

}  // namespace

struct se_model {
  stab::RunConfig cfg;
};

extern "C" {

const char* se_version(void) {
  static std::string v = stab::engine_version();
  return v.c_str();
}

const char* se_last_error(void) { return g_last_error.c_str(); }

int se_model_create(const char* family, int lx, int ly, double alpha,
                    int periodic, se_model** out) {
  if (!out) return SE_CONFIG_ERROR;
  *out = nullptr;
  if (!family) {
    g_last_error = "family must be given";
    return SE_CONFIG_ERROR;
  }
  std::string fam = family;
  if (fam != "toric" && fam != "xz") {
    g_last_error = "unknown model family: " + fam;
    return SE_CONFIG_ERROR;
  }
  if (lx < 2 || ly < 2) {
    g_last_error = "lattice extents must be at least 2";
    return SE_CONFIG_ERROR;
  }
  se_model* m = new (std::nothrow) se_model;
  if (!m) {
    g_last_error = "allocation failure";
    return SE_RESOURCE_LIMIT;
  }
  m->cfg.model = fam;
  m->cfg.lx = lx;
  m->cfg.ly = ly;
  m->cfg.alpha = alpha;
  m->cfg.periodic = periodic != 0;
  *out = m;
  return SE_OK;
}

void se_model_destroy(se_model* m) { delete m; }

int se_analyze(se_model* m, char** out) {
  if (!m) return SE_CONFIG_ERROR;
  return guarded(out, [m] {
    stab::RunConfig c = m->cfg;
    c.command = "analyze";
    return stab::run_command(c);
  });
}

int se_sweep(se_model* m, const double* alphas, int n_alphas, char** out) {
  if (!m) return SE_CONFIG_ERROR;
  return guarded(out, [=] {
    stab::RunConfig c = m->cfg;
    c.command = "sweep";
    c.alpha_grid.assign(alphas, alphas + (n_alphas > 0 ? n_alphas : 0));
    return stab::run_command(c);
  });
}

int se_simulate(se_model* m, int shots, unsigned long long seed,
                int strict_separation, char** out) {
  if (!m) return SE_CONFIG_ERROR;
  return guarded(out, [=] {
    stab::RunConfig c = m->cfg;
    c.command = "simulate";
    c.shots = shots;
    c.seed = seed;
    c.strict_separation = strict_separation != 0;
    return stab::run_command(c);
  });
}

int se_invariants(se_model* m, char** out) {
  if (!m) return SE_CONFIG_ERROR;
  return guarded(out, [m] {
    stab::RunConfig c = m->cfg;
    c.command = "invariants";
    return stab::run_command(c);
  });
}

int se_oracle(se_model* m, const double* alphas, int n_alphas, char** out) {
  if (!m) return SE_CONFIG_ERROR;
  return guarded(out, [=] {
    stab::RunConfig c = m->cfg;
    c.command = "oracle";
    c.alpha_grid.assign(alphas, alphas + (n_alphas > 0 ? n_alphas : 0));
    return stab::run_command(c);
  });
}

void se_free(char* buf) { std::free(buf); }

}  // extern "C"
