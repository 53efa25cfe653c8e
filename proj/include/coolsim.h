/* coolsim C API: resource-constrained building climate control simulator.
 *
 * The library simulates an office building whose cooling power arrives
 * through a single air pipe, under a choice of allocation schemes
 * (independent and global-data integral controllers, a double-auction
 * market with three ablations, and an equilibrium market), and reports the
 * per-interval spread of the office temperatures around their setpoints.
 *
 * All objects are opaque handles; every fallible call returns a
 * coolsim_status and leaves a human-readable detail message in
 * coolsim_last_error() (thread-local). Handles are destroyed with their
 * matching _destroy function; passing NULL to a destroy function is a no-op.
 */

#ifndef COOLSIM_H
#define COOLSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define COOLSIM_API __declspec(dllexport)
#else
#define COOLSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum coolsim_status {
    COOLSIM_OK = 0,
    COOLSIM_E_INVALID = 1,    /* bad argument or configuration value */
    COOLSIM_E_PARSE = 2,      /* malformed configuration text */
    COOLSIM_E_INFEASIBLE = 3, /* market clearing has no feasible solution */
    COOLSIM_E_IO = 4,         /* file could not be read or written */
    COOLSIM_E_INTERNAL = 5
} coolsim_status;

typedef struct coolsim_config coolsim_config;
typedef struct coolsim_trace coolsim_trace;

COOLSIM_API const char* coolsim_version(void);
COOLSIM_API const char* coolsim_strerror(int status);
COOLSIM_API const char* coolsim_last_error(void);

/* --- configuration ------------------------------------------------------ */

/* A new config carries the standard scenario: 100 offices, eta 0.5,
 * R = C = 10, resource 140, beta 10, 240 one-minute intervals starting at
 * 15:00, every office initialized to 20 C with setpoint 20 C, seed 0. */
COOLSIM_API coolsim_status coolsim_config_create(coolsim_config** out);
COOLSIM_API coolsim_status coolsim_config_parse_json(const char* json_text,
                                                     coolsim_config** out);
COOLSIM_API coolsim_status coolsim_config_load_file(const char* path, coolsim_config** out);

/* Single-key override using the JSON schema's key names; values are plain
 * text, e.g. ("scheme", "market-a"), ("alpha", "64"), ("resource",
 * "unlimited"). */
COOLSIM_API coolsim_status coolsim_config_set(coolsim_config* cfg, const char* key,
                                              const char* value);

/* Serializes the config; free the returned text with coolsim_string_free. */
COOLSIM_API coolsim_status coolsim_config_dump_json(const coolsim_config* cfg, char** out_text);

COOLSIM_API void coolsim_config_destroy(coolsim_config* cfg);
COOLSIM_API void coolsim_string_free(char* text);

/* --- simulation --------------------------------------------------------- */

COOLSIM_API coolsim_status coolsim_run(const coolsim_config* cfg, coolsim_trace** out);

/* Runs several scenarios that share the building, seed and timing and
 * differ only in scheme parameters; weather draws are identical across
 * members. out_traces must hold count slots; on failure no trace is
 * returned. */
COOLSIM_API coolsim_status coolsim_compare(const coolsim_config* const* cfgs, int32_t count,
                                           coolsim_trace** out_traces);

COOLSIM_API void coolsim_trace_destroy(coolsim_trace* trace);

/* --- trace inspection --------------------------------------------------- */

COOLSIM_API int64_t coolsim_trace_steps(const coolsim_trace* trace);
COOLSIM_API const char* coolsim_trace_scheme(const coolsim_trace* trace);
COOLSIM_API coolsim_status coolsim_trace_stddev(const coolsim_trace* trace, int64_t step,
                                                double* out);
COOLSIM_API coolsim_status coolsim_trace_mean_deviation(const coolsim_trace* trace,
                                                        int64_t step, double* out);
/* NaN when the step carries no market price. */
COOLSIM_API coolsim_status coolsim_trace_price(const coolsim_trace* trace, int64_t step,
                                               double* out);
COOLSIM_API coolsim_status coolsim_trace_temperature(const coolsim_trace* trace, int64_t step,
                                                     int32_t office, double* out);
COOLSIM_API coolsim_status coolsim_trace_control(const coolsim_trace* trace, int64_t step,
                                                 int32_t office, double* out);

/* Mean stddev over steps [from, to); pass to = -1 for the full run. */
COOLSIM_API coolsim_status coolsim_trace_window_mean(const coolsim_trace* trace, int64_t from,
                                                     int64_t to, double* out);

/* --- output files ------------------------------------------------------- */

COOLSIM_API coolsim_status coolsim_trace_write_csv(const coolsim_trace* trace,
                                                   const char* path, int32_t per_office);
COOLSIM_API coolsim_status coolsim_summary_write_csv(const coolsim_trace* const* traces,
                                                     int32_t count, const char* path);
COOLSIM_API coolsim_status coolsim_sweep_write_csv(const coolsim_trace* const* traces,
                                                   const char* const* values, int32_t count,
                                                   const char* param, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* COOLSIM_H */
