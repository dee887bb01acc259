#include "cyclotome.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

#include "cyclotome/report.hpp"

using namespace cyclotome;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = (char*)std::malloc(s.size() + 1);
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

RunOptions to_options(const cy_options* opt) {
  RunOptions o;
  if (opt) {
    o.conditions_only = opt->conditions_only != 0;
    o.force = opt->force != 0;
    o.threads = opt->threads > 0 ? opt->threads : 1;
    o.no_timings = opt->no_timings != 0;
    o.include_periods = opt->include_periods != 0;
    if (opt->cache_dir) o.cache_dir = opt->cache_dir;
  }
  return o;
}

int run_command(char** json_out, const std::function<RunResult()>& fn) {
  g_last_error.clear();
  if (json_out) *json_out = nullptr;
  try {
    RunResult res = fn();
    if (json_out) *json_out = dup_string(res.report.dump(2));
    return res.status;
  } catch (const Error& e) {
    g_last_error = std::string(errc_name(e.code())) + ": " + e.what();
    return CY_USAGE_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CY_USAGE_ERROR;
  }
}

}  // namespace

extern "C" {

struct cy_field {
  FieldTable table;
};

const char* cy_status_name(int status) {
  switch (status) {
    case CY_OK: return "ok";
    case CY_VERIFY_FAILED: return "verification-failed";
    case CY_CONDITIONS_FAILED: return "conditions-failed";
    case CY_USAGE_ERROR: return "usage-error";
  }
  return "unknown";
}

const char* cy_last_error(void) { return g_last_error.c_str(); }

void cy_string_free(char* s) { std::free(s); }

int cy_field_build(uint64_t p, uint32_t f, const char* cache_dir, int threads,
                   cy_field** out) {
  g_last_error.clear();
  if (!out) {
    g_last_error = "out pointer is null";
    return CY_USAGE_ERROR;
  }
  *out = nullptr;
  try {
    auto* handle = new cy_field{build_field_cached(p, (int)f, cache_dir ? cache_dir : "",
                                                   threads > 0 ? threads : 1)};
    *out = handle;
    return CY_OK;
  } catch (const Error& e) {
    g_last_error = std::string(errc_name(e.code())) + ": " + e.what();
    return CY_USAGE_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CY_USAGE_ERROR;
  }
}

void cy_field_free(cy_field* field) { delete field; }

uint64_t cy_field_order(const cy_field* field) { return field ? field->table.q() : 0; }

int cy_field_trace(const cy_field* field, uint64_t x) {
  if (!field || x >= field->table.q()) return -1;
  return field->table.trace[x];
}

uint64_t cy_field_exp(const cy_field* field, uint64_t a) {
  if (!field || a >= field->table.q() - 1) return (uint64_t)-1;
  return field->table.exp[a];
}

int cy_field_save(const cy_field* field, const char* path) {
  g_last_error.clear();
  if (!field || !path) {
    g_last_error = "null argument";
    return CY_USAGE_ERROR;
  }
  try {
    save_field(field->table, path);
    return CY_OK;
  } catch (const Error& e) {
    g_last_error = std::string(errc_name(e.code())) + ": " + e.what();
    return CY_USAGE_ERROR;
  }
}

int cy_verify_a(uint64_t p, uint64_t p1, uint64_t p2, uint64_t m, uint64_t n,
                const cy_options* opt, char** json_out) {
  RunOptions o = to_options(opt);
  return run_command(json_out, [&] { return run_verify_a(p, p1, p2, m, n, o); });
}

int cy_verify_b(uint64_t p, uint64_t p1, uint64_t m, const cy_options* opt,
                char** json_out) {
  RunOptions o = to_options(opt);
  return run_command(json_out, [&] { return run_verify_b(p, p1, m, o); });
}

int cy_scan(char kind, uint64_t bound, char** json_out) {
  return run_command(json_out, [&] { return run_scan(kind, bound); });
}

int cy_gauss(uint64_t p, uint64_t p1, uint64_t p2, uint64_t m, uint64_t n,
             const cy_options* opt, char** json_out) {
  RunOptions o = to_options(opt);
  return run_command(json_out, [&] { return run_gauss(p, p1, p2, m, n, o); });
}

int cy_scheme(uint64_t p, uint64_t p1, uint64_t p2, uint64_t m, uint64_t n,
              const cy_options* opt, char** json_out) {
  RunOptions o = to_options(opt);
  return run_command(json_out, [&] { return run_scheme(p, p1, p2, m, n, o); });
}

int cy_export_graph(uint64_t p, uint64_t p1, uint64_t p2, uint64_t m, uint64_t n,
                    const char* format, const char* path, const cy_options* opt,
                    char** json_out) {
  if (!format || !path) {
    g_last_error = "format and path are required";
    return CY_USAGE_ERROR;
  }
  RunOptions o = to_options(opt);
  std::string fmt = format, pth = path;
  return run_command(json_out, [&] { return run_export(p, p1, p2, m, n, fmt, pth, o); });
}

}  // extern "C"
