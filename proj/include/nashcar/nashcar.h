#ifndef NASHCAR_H
#define NASHCAR_H

#include <stddef.h>
#include <stdint.h>

#if defined(NASHCAR_BUILDING)
#define NASHCAR_API __attribute__((visibility("default")))
#else
#define NASHCAR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nashcar_status {
  NASHCAR_OK = 0,
  NASHCAR_E_VALIDATION = 1,
  NASHCAR_E_TRUNCATION = 2,
  NASHCAR_E_UNDECIDED = 3,
  NASHCAR_E_ORACLE = 4,
  NASHCAR_E_ARGUMENT = 5,
  NASHCAR_E_INTERNAL = 6
} nashcar_status;

typedef enum nashcar_tri { NASHCAR_NO = 0, NASHCAR_YES = 1, NASHCAR_UNKNOWN = 2 } nashcar_tri;

typedef enum nashcar_certainty {
  NASHCAR_CERTIFIED = 0,
  NASHCAR_COUNT_ONLY = 1,
  NASHCAR_CERTAINTY_UNKNOWN = 2
} nashcar_certainty;

/* Coefficient c is an integer or "p/q" string. */
typedef struct nashcar_term {
  int64_t i;
  int64_t j;
  const char* c;
} nashcar_term;

typedef struct nashcar_germ nashcar_germ;
typedef struct nashcar_run nashcar_run;

/* Message of the last failed call on this thread; never NULL. */
NASHCAR_API const char* nashcar_last_error(void);
NASHCAR_API const char* nashcar_status_name(nashcar_status s);

/* Germ xy = f(z^r, u) in 1/r(a,-a,1,0); f is given as terms z^(r i) u^j. */
NASHCAR_API nashcar_status nashcar_germ_new(int64_t r, int64_t a, const nashcar_term* terms, size_t count,
                                            int64_t trunc, nashcar_germ** out);
NASHCAR_API nashcar_status nashcar_germ_from_json(const char* document, nashcar_germ** out);
NASHCAR_API void nashcar_germ_free(nashcar_germ* g);

NASHCAR_API nashcar_status nashcar_germ_mk(const nashcar_germ* g, int64_t k, int64_t* out);
/* delta for r > 1, bar_delta for r = 1. */
NASHCAR_API nashcar_status nashcar_germ_delta(const nashcar_germ* g, int64_t* out);
NASHCAR_API nashcar_status nashcar_germ_is_smooth(const nashcar_germ* g, int* out);

NASHCAR_API nashcar_status nashcar_germ_factor(const nashcar_germ* g, int64_t* branches, nashcar_certainty* certainty);
NASHCAR_API nashcar_status nashcar_germ_q_factorial(const nashcar_germ* g, nashcar_tri* out);

NASHCAR_API nashcar_status nashcar_germ_catalog_size(const nashcar_germ* g, size_t* out);
NASHCAR_API nashcar_status nashcar_germ_nash_count(const nashcar_germ* g, size_t* out);
/* Essential valuations classified under the germ's own Q-factoriality verdict. */
NASHCAR_API nashcar_status nashcar_germ_essential_count(const nashcar_germ* g, size_t* yes, size_t* unknown);
NASHCAR_API nashcar_status nashcar_germ_surjective(const nashcar_germ* g, nashcar_tri* out);
/* 1 if the resolution oracle reproduces the closed-form catalog. */
NASHCAR_API nashcar_status nashcar_germ_oracle_check(const nashcar_germ* g, int* match);

/* Report as a JSON string owned by the germ; valid until the next call on g or its release. */
NASHCAR_API nashcar_status nashcar_germ_report_json(nashcar_germ* g, const char** out);

typedef struct nashcar_run_options {
  const char* command; /* analyze, mk, nash, essential, resolve, factor, oracle-check */
  const char* format;  /* table or json */
  int oracle;
  int strict;
  int64_t trunc; /* 0: use the document's */
  int64_t max_k; /* 0: default extent */
} nashcar_run_options;

NASHCAR_API void nashcar_run_options_init(nashcar_run_options* opts);

/* Runs a single or batch document. The returned handle owns output,
   diagnostics and the process exit code. */
NASHCAR_API nashcar_status nashcar_run_document(const char* document, const nashcar_run_options* opts, nashcar_run** out);
NASHCAR_API const char* nashcar_run_output(const nashcar_run* run);
NASHCAR_API const char* nashcar_run_diagnostics(const nashcar_run* run);
NASHCAR_API int nashcar_run_exit_code(const nashcar_run* run);
NASHCAR_API void nashcar_run_free(nashcar_run* run);

#ifdef __cplusplus
}
#endif

#endif
