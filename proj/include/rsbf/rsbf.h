/* C interface to the rotation symmetric Boolean function library.
 *
 * Objects are opaque handles released with the matching *_free call. Every
 * fallible call returns an rsbf_status; on failure rsbf_last_error() gives a
 * message for the calling thread, valid until that thread's next call.
 * Masks and inputs are integers sum c_i 2^i (c_0 least significant). */
#ifndef RSBF_H
#define RSBF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RSBF_BUILDING_LIBRARY)
#    define RSBF_API __declspec(dllexport)
#  else
#    define RSBF_API __declspec(dllimport)
#  endif
#else
#  define RSBF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rsbf_status {
  RSBF_OK = 0,
  RSBF_ERR_USAGE = 1,        /* argument out of range, arity mismatch */
  RSBF_ERR_PRECONDITION = 2, /* operation outside its domain */
  RSBF_ERR_CONFIG = 3,       /* bad configuration or missing data */
  RSBF_ERR_OVERFLOW = 4,
  RSBF_ERR_INTERNAL = 5
} rsbf_status;

typedef struct rsbf_truth_table rsbf_truth_table;
typedef struct rsbf_spectrum rsbf_spectrum;

RSBF_API const char* rsbf_last_error(void);
RSBF_API const char* rsbf_version(void);
RSBF_API uint32_t rsbf_hard_max_arity(void);

/* Construction. */
RSBF_API rsbf_status rsbf_tt_zero(uint32_t n, rsbf_truth_table** out);
RSBF_API rsbf_status rsbf_tt_linear(uint32_t n, uint64_t c, rsbf_truth_table** out);
/* F_{l,e}^n */
RSBF_API rsbf_status rsbf_tt_monomial_rsbf(uint32_t n, uint32_t l, uint32_t e,
                                           rsbf_truth_table** out);
/* f_{i,j}^n */
RSBF_API rsbf_status rsbf_tt_subfunction(uint32_t i, uint32_t j, uint32_t n,
                                         rsbf_truth_table** out);
/* t_n */
RSBF_API rsbf_status rsbf_tt_chain(uint32_t n, rsbf_truth_table** out);
/* X(i, j, k) on n variables */
RSBF_API rsbf_status rsbf_tt_suffix_sum(uint32_t i, uint32_t j, uint32_t k, uint32_t n,
                                        rsbf_truth_table** out);
RSBF_API void rsbf_tt_free(rsbf_truth_table* tt);

/* Queries. */
RSBF_API uint32_t rsbf_tt_arity(const rsbf_truth_table* tt);
RSBF_API rsbf_status rsbf_tt_eval(const rsbf_truth_table* tt, uint64_t x, int* out);
RSBF_API rsbf_status rsbf_tt_weight(const rsbf_truth_table* tt, uint64_t* out);
RSBF_API rsbf_status rsbf_tt_distance(const rsbf_truth_table* f, const rsbf_truth_table* g,
                                      uint64_t* out);
RSBF_API rsbf_status rsbf_tt_nonlinearity(const rsbf_truth_table* tt, uint64_t* out);
/* Direct summation at one mask. */
RSBF_API rsbf_status rsbf_tt_walsh_at(const rsbf_truth_table* tt, uint64_t c, int64_t* out);
RSBF_API uint64_t rsbf_rotate_input(uint64_t x, uint32_t n, uint32_t shift);

/* Spectra. */
RSBF_API rsbf_status rsbf_walsh_transform(const rsbf_truth_table* tt, rsbf_spectrum** out);
RSBF_API void rsbf_spectrum_free(rsbf_spectrum* s);
RSBF_API uint32_t rsbf_spectrum_arity(const rsbf_spectrum* s);
/* Pointer to 2^n values, owned by the spectrum. */
RSBF_API const int64_t* rsbf_spectrum_values(const rsbf_spectrum* s);
RSBF_API rsbf_status rsbf_spectrum_at(const rsbf_spectrum* s, uint64_t c, int64_t* out);

typedef struct rsbf_peak {
  uint64_t argmax;
  int64_t max;
  uint64_t abs_argmax;
  uint64_t abs_max;
} rsbf_peak;

RSBF_API rsbf_status rsbf_spectrum_peak(const rsbf_spectrum* s, rsbf_peak* out);
RSBF_API rsbf_status rsbf_spectrum_nonlinearity(const rsbf_spectrum* s, uint64_t* out);
/* 1 iff |W(c)| <= W(0) for all c. */
RSBF_API rsbf_status rsbf_spectrum_max_at_zero(const rsbf_spectrum* s, int* out);

/* Product-over-cycles evaluation of the coefficient of F_{l,e}^n at c. */
RSBF_API rsbf_status rsbf_factored_walsh(uint32_t n, uint32_t l, uint32_t e, uint64_t c,
                                         int64_t* out);

/* Verification. Each report is delivered as one JSON line (no newline). */
typedef void (*rsbf_line_sink)(const char* line, void* user);

typedef struct rsbf_check_options {
  uint32_t max_n;   /* 0: default 24 */
  uint32_t workers; /* 0: one per hardware thread */
  uint32_t n_lo, n_hi; /* both 0: check-specific default */
  uint32_t e_lo, e_hi; /* both 0: check-specific default */
  uint32_t l;          /* 0: check-specific default */
} rsbf_check_options;

RSBF_API void rsbf_check_options_init(rsbf_check_options* opts);

/* which: table1 table2 lemma21 lemma22 eq23 eq26 thm24 bound theorem
 * conjecture factor all. *passed receives the aggregate verdict. */
RSBF_API rsbf_status rsbf_check(const char* which, const rsbf_check_options* opts,
                                 rsbf_line_sink sink, void* user, int* passed);

/* Reproduced table 1 or 2 as CSV text, one line per sink call. *passed is
 * 1 iff every cell matches the reference value. */
RSBF_API rsbf_status rsbf_table_csv(int table_id, rsbf_line_sink sink, void* user,
                                    int* passed);

#ifdef __cplusplus
}
#endif

#endif /* RSBF_H */
