/* fracmeas: exact geometry of digit-restricted sets C(n,l).
 *
 * C(n,l) is the set of reals in [0,1] whose base-l digits all lie in
 * {0,...,n-1}, for integers l > n >= 2.  The library evaluates the natural
 * self-similar measure on C(n,l) in exact rational arithmetic, searches the
 * extremal densities that determine the Hausdorff measure ((n-1)/(l-1))^s
 * and the packing measure 2^s at dimension s = log n / log l, and emits
 * machine-readable verification reports.  Every reported decimal is a
 * certified bracket; internal logic never rounds.
 *
 * All functions return fm_status; out-parameters are written only on FM_OK.
 * Strings returned through char** are heap-allocated and must be released
 * with fm_string_free.  Handles are opaque and must be destroyed with their
 * matching destroy call.  A handle may be used from several threads only if
 * calls are externally serialized per handle.
 */
#ifndef FRACMEAS_H
#define FRACMEAS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fm_status {
  FM_OK = 0,
  FM_ERR_INVALID_ARGUMENT = 1,
  FM_ERR_RESOURCE_LIMIT = 2,
  FM_ERR_PRECISION_EXHAUSTED = 3,
  FM_ERR_CHECK_FAILED = 4,
  FM_ERR_INTERNAL = 5
} fm_status;

typedef enum fm_format {
  FM_FORMAT_TEXT = 0,
  FM_FORMAT_JSON = 1,
  FM_FORMAT_CSV = 2
} fm_format;

/* Opaque parameter handle for one pair (n, l). */
typedef struct fm_params fm_params;

fm_status fm_params_create(int64_t n, int64_t l, fm_params** out_params);
void fm_params_destroy(fm_params* params);

/* Adaptive comparisons escalate from 128 bits, doubling up to this cap
 * (default 4096).  A comparison still undecided at the cap fails with
 * FM_ERR_PRECISION_EXHAUSTED. */
fm_status fm_params_set_precision_cap(fm_params* params, int32_t bits);

/* Enumerations refuse levels with n^k above this bound (default 2^26). */
fm_status fm_params_set_enumeration_limit(fm_params* params,
                                          int64_t max_intervals);

typedef struct fm_verify_options {
  int32_t max_level;           /* depth of the per-level density table */
  int32_t precision_cap_bits;  /* cap for adaptive comparisons */
  int32_t center_level;        /* packing scan center depth */
  int32_t radius_grid;         /* packing scan radius grid size */
  uint64_t seed;               /* seed for randomized samples */
  int32_t digits;              /* decimal digits in reported brackets */
} fm_verify_options;

void fm_verify_options_init(fm_verify_options* options);

/* Dimension and measure constants: s bracket, r exact, and certified
 * brackets for the Hausdorff measure r^s and packing measure 2^s. */
fm_status fm_dims(const fm_params* params, int32_t digits, fm_format format,
                  char** out);

/* Exact value of F(x) = mu([0, x]) for rational x in [0,1], e.g. "1/3". */
fm_status fm_cdf(const fm_params* params, const char* x, char** out);

/* Exact mu([a, b]) for rationals 0 <= a <= b <= 1. */
fm_status fm_measure(const fm_params* params, const char* a, const char* b,
                     char** out);

/* Table of the level-k complement gaps with exact endpoints, lengths and
 * types.  CSV columns: left,right,length,type_i,level. */
fm_status fm_gaps(const fm_params* params, int32_t level, fm_format format,
                  char** out);

/* Exact density of the union of basic intervals [left..right] at a level:
 * the canonical pair (p, L) with value p / L^s, plus a decimal bracket. */
fm_status fm_density(const fm_params* params, int32_t level, int64_t left,
                     int64_t right, int32_t digits, fm_format format,
                     char** out);

/* Full verification battery.  *out_passed is 1 when every check passed.
 * The call returns FM_OK when the battery ran to completion, even if
 * checks failed; *out_report names each failing check.  When a check
 * aborted on the precision cap the report and *out_passed are still
 * written and the call returns FM_ERR_PRECISION_EXHAUSTED. */
fm_status fm_verify(const fm_params* params, const fm_verify_options* options,
                    fm_format format, char** out_report, int32_t* out_passed);

const char* fm_status_name(fm_status status);

/* Message for the most recent failure on the calling thread. */
const char* fm_last_error_message(void);

void fm_string_free(char* s);

const char* fm_version(void);

#ifdef __cplusplus
}
#endif

#endif /* FRACMEAS_H */
