/* Explicit Polya-Vinogradov constants: C interface. */
#ifndef PVCONST_PVCONST_H
#define PVCONST_PVCONST_H

#include <stdint.h>

#if defined(_WIN32)
#define PVC_API __declspec(dllexport)
#else
#define PVC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pvc_context pvc_context;
typedef struct pvc_result pvc_result;

typedef enum {
  PVC_OK = 0,
  PVC_ERR_USAGE = 1,    /* bad argument, unknown name, violated precondition */
  PVC_ERR_DOMAIN = 2,   /* parameters outside the region where a formula is defined */
  PVC_ERR_RESOURCE = 3, /* budget exceeded or allocation failure */
  PVC_ERR_INTERNAL = 4
} pvc_status;

typedef enum { PVC_FORMAT_JSON = 0, PVC_FORMAT_CSV = 1, PVC_FORMAT_PRETTY = 2 } pvc_format;
typedef enum { PVC_EVEN = 0, PVC_ODD = 1 } pvc_parity;

/* Message of the last failing call on this thread ("" if none). */
PVC_API const char* pvc_last_error(void);
PVC_API const char* pvc_status_name(pvc_status s);

PVC_API pvc_status pvc_context_create(pvc_context** out);
PVC_API void pvc_context_destroy(pvc_context* ctx);
/* Seed of the randomized suites (default 1). */
PVC_API pvc_status pvc_context_set_seed(pvc_context* ctx, uint64_t seed);
/* 0 means PV_THREADS or hardware concurrency. */
PVC_API pvc_status pvc_context_set_threads(pvc_context* ctx, unsigned threads);
/* Upper end of the empirical partial-sum sweep (default 5000, at most 100000). */
PVC_API pvc_status pvc_context_set_pv_qmax(pvc_context* ctx, uint64_t q_max);

/* which: "table1" .. "table4" or "all". */
PVC_API pvc_status pvc_tables(pvc_context* ctx, const char* which, pvc_result** out);
/* suite: "dis", "primes", "li2", "congruence", "moment4", "bilinear", "t1c1", "pv" or "all". */
PVC_API pvc_status pvc_verify(pvc_context* ctx, const char* suite, pvc_result** out);
/* m <= 0 asks for the minimal feasible m instead of testing a given one. */
PVC_API pvc_status pvc_burgess_search(pvc_context* ctx, double log10_q, double h, double m, pvc_result** out);
/* h <= 0 uses the optimized constant at the smallest admissible q for eps. */
PVC_API pvc_status pvc_crossover(pvc_context* ctx, double eps, pvc_parity parity, double h, pvc_result** out);
/* Evaluates a named constant; params_json is an object such as {"loglog_q": 22, "eps": 0.1}. */
PVC_API pvc_status pvc_eval(pvc_context* ctx, const char* expr, const char* params_json, pvc_result** out);

/* 1 when every check in the result passed. */
PVC_API pvc_status pvc_result_passed(const pvc_result* res, int* out);
/* Caller frees the string with pvc_string_free. */
PVC_API pvc_status pvc_result_render(const pvc_result* res, pvc_format format, char** out);
PVC_API pvc_status pvc_result_render_failures(const pvc_result* res, char** out);
PVC_API void pvc_result_destroy(pvc_result* res);
PVC_API void pvc_string_free(char* s);

typedef struct {
  double B, E, gamma, eps, m, h;
  uint64_t divisor_U; /* 0: general divisor bound, else d(q) = divisor_U */
} pvc_bound_params;

typedef struct {
  double leading;  /* coefficient of sqrt(q) log q */
  double constant; /* h1 (even) or h2 (odd) */
  double j;
  double n;
  double c;        /* value of c */
  char c_branch;   /* 'A' or 'B' */
  int constraints_ok;
} pvc_pv_bound_out;

PVC_API void pvc_bound_params_default(pvc_bound_params* p);
PVC_API pvc_status pvc_z_const(double* out);
PVC_API pvc_status pvc_pv_bound(double loglog_q, pvc_parity parity, const pvc_bound_params* p, pvc_pv_bound_out* out);

#ifdef __cplusplus
}
#endif

#endif
