/* fieldlink shared-library C API.
 *
 * All entry points return fieldlink_status; FIELDLINK_OK is 0. On failure
 * fieldlink_last_error() returns a thread-local message describing the
 * problem (config diagnostics carry file:line and key names). Strings
 * returned through char** are heap-allocated; release them with
 * fieldlink_string_free. Configs are opaque handles released with
 * fieldlink_config_free.
 */
#ifndef FIELDLINK_FIELDLINK_H
#define FIELDLINK_FIELDLINK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fieldlink_status {
  FIELDLINK_OK = 0,
  FIELDLINK_ERR_IO = 1,        /* file access */
  FIELDLINK_ERR_PARSE = 2,     /* config syntax, unknown keys/sections */
  FIELDLINK_ERR_CONFIG = 3,    /* invalid values, missing sections, bad overrides */
  FIELDLINK_ERR_DOMAIN = 4,    /* argument outside an operation's domain */
  FIELDLINK_ERR_NUMERIC = 5,   /* numerical precondition failed */
  FIELDLINK_ERR_INVARIANT = 6, /* internal consistency violation */
  FIELDLINK_ERR_INTERNAL = 7
} fieldlink_status;

typedef struct fieldlink_config fieldlink_config;

/* Parses a config file from disk. */
fieldlink_status fieldlink_config_load(const char* path, fieldlink_config** out);

/* Parses config text; source_name labels diagnostics. */
fieldlink_status fieldlink_config_parse(const char* text, const char* source_name,
                                        fieldlink_config** out);

/* Applies a dotted-key override, e.g. "field.mode_cutoff" = "1024". */
fieldlink_status fieldlink_config_override(fieldlink_config* config, const char* key,
                                           const char* value);

void fieldlink_config_free(fieldlink_config* config);

/* Scenario report: classification, negativity, mutual information,
 * concurrence, engine diagnostics, overlap-matrix summary. */
fieldlink_status fieldlink_run(const fieldlink_config* config, char** report);

/* CSV parameter sweep; one row per value, deterministic output. */
fieldlink_status fieldlink_sweep(const fieldlink_config* config, const char* parameter,
                                 const double* values, size_t count, char** csv);

/* Newtonian-phase report for the [qgem] section. */
fieldlink_status fieldlink_qgem(const fieldlink_config* config, char** report);

/* Randomized separability suite, Pauli-Jordan closed-form comparison and
 * engine-vs-oracle fixtures. *pass is 1 when every residual is in bounds. */
fieldlink_status fieldlink_verify(uint64_t seed, char** report, int* pass);

/* Scalar helpers for quick checks against the library's field kernel. */
fieldlink_status fieldlink_pauli_jordan(double mass, double box_length, int mode_cutoff,
                                        double dt, double dx, double* out);

/* Negativity and mutual information of the configured scenario. */
fieldlink_status fieldlink_run_measures(const fieldlink_config* config, double* negativity,
                                        double* mutual_information);

/* Thread-local description of the most recent failure. */
const char* fieldlink_last_error(void);

const char* fieldlink_status_name(fieldlink_status status);

void fieldlink_string_free(char* str);

#ifdef __cplusplus
}
#endif

#endif /* FIELDLINK_FIELDLINK_H */
