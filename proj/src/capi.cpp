#include "fieldlink/fieldlink.h"

#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "fieldlink/config.hpp"
#include "fieldlink/entanglement.hpp"
#include "fieldlink/errors.hpp"
#include "fieldlink/field_model.hpp"
#include "fieldlink/runner.hpp"

struct fieldlink_config {
  fieldlink::RunConfig config;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
fieldlink_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return FIELDLINK_OK;
  } catch (const fieldlink::IoError& e) {
    g_last_error = e.what();
    return FIELDLINK_ERR_IO;
  } catch (const fieldlink::ParseError& e) {
    g_last_error = e.what();
    return FIELDLINK_ERR_PARSE;
  } catch (const fieldlink::ConfigError& e) {
    g_last_error = e.what();
    return FIELDLINK_ERR_CONFIG;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return FIELDLINK_ERR_DOMAIN;
  } catch (const fieldlink::NumericError& e) {
    g_last_error = e.what();
    return FIELDLINK_ERR_NUMERIC;
  } catch (const fieldlink::InvariantError& e) {
    g_last_error = e.what();
    return FIELDLINK_ERR_INVARIANT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FIELDLINK_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return FIELDLINK_ERR_INTERNAL;
  }
}

fieldlink_status require_args(bool ok) {
  if (!ok) {
    g_last_error = "null argument";
    return FIELDLINK_ERR_CONFIG;
  }
  return FIELDLINK_OK;
}

}  // namespace

extern "C" {

fieldlink_status fieldlink_config_load(const char* path, fieldlink_config** out) {
  if (fieldlink_status s = require_args(path && out)) return s;
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<fieldlink_config>();
    handle->config = fieldlink::load_config(path);
    *out = handle.release();
  });
}

fieldlink_status fieldlink_config_parse(const char* text, const char* source_name,
                                        fieldlink_config** out) {
  if (fieldlink_status s = require_args(text && out)) return s;
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<fieldlink_config>();
    handle->config =
        fieldlink::parse_config(text, source_name ? source_name : "<memory>");
    *out = handle.release();
  });
}

fieldlink_status fieldlink_config_override(fieldlink_config* config, const char* key,
                                           const char* value) {
  if (fieldlink_status s = require_args(config && key && value)) return s;
  return guarded([&] { fieldlink::apply_override(config->config, key, value); });
}

void fieldlink_config_free(fieldlink_config* config) { delete config; }

fieldlink_status fieldlink_run(const fieldlink_config* config, char** report) {
  if (fieldlink_status s = require_args(config && report)) return s;
  *report = nullptr;
  return guarded([&] { *report = copy_string(fieldlink::run_report(config->config)); });
}

fieldlink_status fieldlink_sweep(const fieldlink_config* config, const char* parameter,
                                 const double* values, size_t count, char** csv) {
  if (fieldlink_status s = require_args(config && parameter && values && count > 0 && csv))
    return s;
  *csv = nullptr;
  return guarded([&] {
    *csv = copy_string(fieldlink::sweep_csv(config->config, parameter,
                                            std::vector<double>(values, values + count)));
  });
}

fieldlink_status fieldlink_qgem(const fieldlink_config* config, char** report) {
  if (fieldlink_status s = require_args(config && report)) return s;
  *report = nullptr;
  return guarded([&] { *report = copy_string(fieldlink::qgem_report(config->config)); });
}

fieldlink_status fieldlink_verify(uint64_t seed, char** report, int* pass) {
  if (fieldlink_status s = require_args(report && pass)) return s;
  *report = nullptr;
  *pass = 0;
  return guarded([&] {
    const fieldlink::VerifyResult result = fieldlink::verify_suite(seed);
    *report = copy_string(result.report);
    *pass = result.pass ? 1 : 0;
  });
}

fieldlink_status fieldlink_pauli_jordan(double mass, double box_length, int mode_cutoff,
                                        double dt, double dx, double* out) {
  if (fieldlink_status s = require_args(out != nullptr)) return s;
  return guarded([&] {
    const fieldlink::FieldSpec spec{mass, box_length, mode_cutoff, 0.0};
    *out = fieldlink::pauli_jordan(spec, dt, dx);
  });
}

fieldlink_status fieldlink_run_measures(const fieldlink_config* config, double* negativity,
                                        double* mutual_information) {
  if (fieldlink_status s = require_args(config && negativity && mutual_information)) return s;
  return guarded([&] {
    const fieldlink::RunConfig& rc = config->config;
    const fieldlink::TwoQubitState rho =
        fieldlink::reduced_density(rc.require_scenario(), rc.field, rc.quad_step());
    *negativity = fieldlink::negativity(rho);
    *mutual_information = fieldlink::mutual_information(rho);
  });
}

const char* fieldlink_last_error(void) { return g_last_error.c_str(); }

const char* fieldlink_status_name(fieldlink_status status) {
  switch (status) {
    case FIELDLINK_OK: return "ok";
    case FIELDLINK_ERR_IO: return "io error";
    case FIELDLINK_ERR_PARSE: return "parse error";
    case FIELDLINK_ERR_CONFIG: return "config error";
    case FIELDLINK_ERR_DOMAIN: return "domain error";
    case FIELDLINK_ERR_NUMERIC: return "numeric error";
    case FIELDLINK_ERR_INVARIANT: return "invariant violation";
    case FIELDLINK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void fieldlink_string_free(char* str) { delete[] str; }

}  // extern "C"
