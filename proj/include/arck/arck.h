#ifndef ARCK_ARCK_H
#define ARCK_ARCK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ARCK_BUILDING_LIBRARY)
#define ARCK_API __declspec(dllexport)
#else
#define ARCK_API __declspec(dllimport)
#endif
#else
#define ARCK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct arck_session arck_session;
typedef struct arck_report arck_report;

/* Values 0..3 double as process exit codes. */
typedef enum arck_status {
  ARCK_OK = 0,
  ARCK_EXPECTATION_FAILED = 1,
  ARCK_CONTRACT_ERROR = 2,
  ARCK_RESOURCE_CAP = 3,
  ARCK_INVALID_ARGUMENT = 4,
  ARCK_INTERNAL = 5
} arck_status;

typedef struct arck_parse_options {
  int degree_cap; /* 0 selects the default */
} arck_parse_options;

typedef struct arck_run_options {
  int json;                /* nonzero: JSON Lines instead of text */
  const char* task_filter; /* task name or kind; NULL runs everything */
  unsigned threads;        /* worker threads for ar grids; 0 means 1 */
  uint64_t seed;
} arck_run_options;

ARCK_API const char* arck_version(void);

/* Message of the most recent failure on the calling thread, or "". */
ARCK_API const char* arck_last_error(void);
/* Line and column of the most recent parse failure; 0 when not a parse failure. */
ARCK_API size_t arck_last_error_line(void);
ARCK_API size_t arck_last_error_column(void);

ARCK_API arck_status arck_session_parse(const char* text, size_t length, const arck_parse_options* options,
                                        arck_session** out);
ARCK_API void arck_session_free(arck_session* session);
ARCK_API size_t arck_session_task_count(const arck_session* session);

/* Canonical text; release with arck_string_free. */
ARCK_API arck_status arck_session_print(const arck_session* session, char** out);
ARCK_API void arck_string_free(char* s);

ARCK_API arck_status arck_session_run(const arck_session* session, const arck_run_options* options,
                                      arck_report** out);
ARCK_API const char* arck_report_text(const arck_report* report);
/* 0 pass, 1 expectation failure, 2 contract error, 3 resource cap. */
ARCK_API int arck_report_exit_code(const arck_report* report);
ARCK_API size_t arck_report_task_count(const arck_report* report);
ARCK_API arck_status arck_report_task_status(const arck_report* report, size_t index);
ARCK_API void arck_report_free(arck_report* report);

#ifdef __cplusplus
}
#endif

#endif
