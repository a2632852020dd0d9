#ifndef COINCALC_COINCALC_H
#define COINCALC_COINCALC_H

/* C interface to the coincidence calculator.
 *
 * All functions return a coincalc_status. Strings handed out through char**
 * parameters are owned by the caller and released with coincalc_string_free.
 * coincalc_last_error() describes the most recent failure on the calling
 * thread.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define COINCALC_API __attribute__((visibility("default")))
#else
#define COINCALC_API
#endif

typedef enum coincalc_status {
  COINCALC_OK = 0,
  COINCALC_UNKNOWN = 2, /* the data needed for an answer is missing */
  COINCALC_INVALID_ARGUMENT = 3,
  COINCALC_PARSE_ERROR = 4,
  COINCALC_INVARIANT_VIOLATION = 5,
  COINCALC_OVERFLOW = 6,
  COINCALC_TOO_LARGE = 7,
  COINCALC_UNSUPPORTED = 8,
  COINCALC_IO_ERROR = 9,
  COINCALC_INTERNAL_ERROR = 10
} coincalc_status;

typedef struct coincalc_db coincalc_db;

/* Count that may be infinite (is_infinite != 0, value unused). */
typedef struct coincalc_count {
  int64_t value;
  int is_infinite;
} coincalc_count;

typedef struct coincalc_verdict {
  int loose;
  int64_t nielsen;
  int64_t mcc;
  coincalc_count mc;
  int table_row; /* 0 when no table row applies */
} coincalc_verdict;

/* Opens a database. A NULL path selects $COINCALC_DB, then the built-in default. */
COINCALC_API coincalc_status coincalc_db_open(const char* path, coincalc_db** out);
COINCALC_API void coincalc_db_close(coincalc_db* db);

/* Runs a JSON request and returns the JSON response document. The status
 * mirrors the response: OK, UNKNOWN, or the kind of the reported error. */
COINCALC_API coincalc_status coincalc_query(const coincalc_db* db, const char* request_json, char** response_json);

/* Loads and validates a database file; the report is always produced when
 * the return value is OK or INVARIANT_VIOLATION (validation failed). */
COINCALC_API coincalc_status coincalc_validate_db_file(const char* path, char** report_json);

/* Human-readable rendering of a response document. */
COINCALC_API coincalc_status coincalc_render_human(const char* response_json, char** text);

/* pi_m(S^n) in the form "Z + Z2" etc. */
COINCALC_API coincalc_status coincalc_pi_sphere(const coincalc_db* db, int m, int n, char** group_text);

/* Pairs in pi_m(S^n), coordinates in canonical generator order. */
COINCALC_API coincalc_status coincalc_classify_sphere(const coincalc_db* db, int m, int n, const int64_t* f1,
                                                      const int64_t* f2, int length, coincalc_verdict* out);

/* Pairs in pi_m(KP(n')); field is 'R', 'C' or 'H'; coordinates in the total group. */
COINCALC_API coincalc_status coincalc_classify_projective(const coincalc_db* db, char field, int m, int n_prime,
                                                          const int64_t* f1, const int64_t* f2, int length,
                                                          coincalc_verdict* out);

COINCALC_API void coincalc_string_free(char* s);
COINCALC_API const char* coincalc_last_error(void);
COINCALC_API const char* coincalc_status_name(coincalc_status status);

/* Process exit code for a status: 0 ok, 2 unknown, 1 otherwise. */
COINCALC_API int coincalc_exit_code(coincalc_status status);

COINCALC_API const char* coincalc_default_db_path(void);

#ifdef __cplusplus
}
#endif

#endif
