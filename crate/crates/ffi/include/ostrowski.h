#ifndef OSTROWSKI_H
#define OSTROWSKI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call in this interface.
 */
typedef enum OstrowskiStatus {
  /**
   * The call succeeded and, for runs, every verdict passed.
   */
  OstrowskiStatus_Ok = 0,
  /**
   * The run completed but a bound, audit law, or expected-failure
   * fixture did not come out as required. The report is still produced.
   */
  OstrowskiStatus_VerdictFailure = 1,
  /**
   * The configuration failed to parse, validate, or build an instance.
   */
  OstrowskiStatus_ConfigError = 2,
  /**
   * A null pointer, invalid UTF-8, or unknown name was passed in.
   */
  OstrowskiStatus_InvalidArgument = 3,
  /**
   * An internal panic was caught at the boundary.
   */
  OstrowskiStatus_Panic = 4,
} OstrowskiStatus;

/**
 * Opaque verification report. Allocate with [`ostrowski_verify`], free
 * with [`ostrowski_report_free`].
 */
typedef struct OstrowskiReport OstrowskiReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse a TOML run configuration, execute the run, and hand back a report.
 *
 * `out_error` may be null; when non-null and the status is not `Ok` or
 * `VerdictFailure`, it receives a message owned by the caller.
 *
 * # Safety
 *
 * `config_toml` must be a valid NUL-terminated string; `out_report` must
 * be a valid pointer to writable memory; `out_error`, when non-null,
 * must also point to writable memory.
 */
enum OstrowskiStatus ostrowski_verify(const char *config_toml,
                                      struct OstrowskiReport **out_report,
                                      char **out_error);

/**
 * Run a law-suite audit by name (`poset`, `monoid`, `distance`, `metric`,
 * `modulus`, `counterexamples`, or `all`) and report whether it passed.
 *
 * # Safety
 *
 * `suite` must be a valid NUL-terminated string; `out_passed` must point
 * to writable memory.
 */
enum OstrowskiStatus ostrowski_audit(const char *suite, uint64_t seed, bool *out_passed);

/**
 * Whether every verdict in the report passed.
 *
 * # Safety
 *
 * `report` must be a pointer returned by [`ostrowski_verify`] that has
 * not been freed.
 */
bool ostrowski_report_passed(const struct OstrowskiReport *report);

/**
 * Number of sweep rows in the report.
 *
 * # Safety
 *
 * `report` must be a pointer returned by [`ostrowski_verify`] that has
 * not been freed.
 */
uintptr_t ostrowski_report_row_count(const struct OstrowskiReport *report);

/**
 * The report's sweep table as CSV. Returns null on a null report; free
 * the string with [`ostrowski_string_free`].
 *
 * # Safety
 *
 * `report` must be a pointer returned by [`ostrowski_verify`] that has
 * not been freed.
 */
char *ostrowski_report_csv(const struct OstrowskiReport *report);

/**
 * The full report as Markdown. Returns null on a null report; free the
 * string with [`ostrowski_string_free`].
 *
 * # Safety
 *
 * `report` must be a pointer returned by [`ostrowski_verify`] that has
 * not been freed.
 */
char *ostrowski_report_markdown(const struct OstrowskiReport *report);

/**
 * Release a report. Null is ignored.
 *
 * # Safety
 *
 * `report` must be null or a pointer returned by [`ostrowski_verify`]
 * that has not already been freed.
 */
void ostrowski_report_free(struct OstrowskiReport *report);

/**
 * Release a string produced by this interface. Null is ignored.
 *
 * # Safety
 *
 * `text` must be null or a string pointer produced by this interface
 * that has not already been freed.
 */
void ostrowski_string_free(char *text);

/**
 * Static library version string; do not free.
 */
const char *ostrowski_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OSTROWSKI_H */
