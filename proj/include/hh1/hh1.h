/* C interface to the hh1 library. All functions are thread-safe as long as a
 * handle is not shared between threads without synchronization. Strings
 * returned through `char**` are allocated by the library and released with
 * hh1_string_free. */
#ifndef HH1_H
#define HH1_H

#include <stddef.h>

#if defined(_WIN32)
#define HH1_API __declspec(dllexport)
#else
#define HH1_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hh1_status {
  HH1_OK = 0,
  HH1_ERR_ARGUMENT = 1,     /* null pointer or bad enum value */
  HH1_ERR_INPUT = 2,        /* malformed group description or prime */
  HH1_ERR_CAP = 3,          /* input above a size cap */
  HH1_ERR_PRECONDITION = 4,
  HH1_ERR_IO = 5,
  HH1_ERR_INTERNAL = 6
} hh1_status;

typedef enum hh1_format { HH1_FORMAT_JSON = 0, HH1_FORMAT_TEXT = 1 } hh1_format;

typedef enum hh1_verdict {
  HH1_SOLVABLE = 0,
  HH1_NOT_SOLVABLE = 1,
  HH1_INCONCLUSIVE = 2
} hh1_verdict;

typedef struct hh1_group hh1_group;
typedef struct hh1_report hh1_report;

/* Message for the last failed call on this thread; empty after success. */
HH1_API const char* hh1_last_error(void);
HH1_API const char* hh1_version(void);

/* Parses a JSON group description and builds the group. */
HH1_API hh1_status hh1_group_from_json(const char* text, hh1_group** out);
HH1_API hh1_status hh1_group_order(const hh1_group* g, size_t* out);
HH1_API void hh1_group_free(hh1_group* g);

/* `full_oracle` nonzero also runs the derivation solver (order <= 32). */
HH1_API hh1_status hh1_analyze(const hh1_group* g, unsigned prime, int full_oracle,
                               hh1_report** out);
HH1_API hh1_status hh1_report_verdict(const hh1_report* r, hh1_verdict* out);
HH1_API hh1_status hh1_report_gamma_edges(const hh1_report* r, size_t* out);
HH1_API hh1_status hh1_report_serialize(const hh1_report* r, hh1_format format, char** out);
/* `name` is "gamma", "gamma_reduced" or "gamma2" (p = 2 only). */
HH1_API hh1_status hh1_report_dot(const hh1_report* r, const char* name, char** out);
HH1_API hh1_status hh1_report_write_dot(const hh1_report* r, const char* dir);
HH1_API void hh1_report_free(hh1_report* r);

HH1_API void hh1_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HH1_H */
