#ifndef IDEALKIT_IDEALKIT_H
#define IDEALKIT_IDEALKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(IDEALKIT_BUILDING_LIBRARY)
#define IK_API __attribute__((visibility("default")))
#else
#define IK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; IK_OK is zero and every other value is an error. */
typedef enum ik_status {
  IK_OK = 0,
  IK_ERR_INVALID_ARGUMENT,
  IK_ERR_MIXED_FIELDS,
  IK_ERR_DIVISION_BY_ZERO,
  IK_ERR_MIXED_RINGS,
  IK_ERR_ZERO_POLYNOMIAL,
  IK_ERR_ZERO_DIVISOR_INPUT,
  IK_ERR_RESOURCE_LIMIT,
  IK_ERR_INEXACT_DIVISION,
  IK_ERR_ZERO_IDEAL,
  IK_ERR_DIMENSION_MISMATCH,
  IK_ERR_UNKNOWN_BOUND,
  IK_ERR_INVALID_PARAMETERS,
  IK_ERR_COMPARISON_OVERFLOW,
  IK_ERR_INFEASIBLE_ENUMERATION,
  IK_ERR_CONSTANT_INPUT,
  IK_ERR_IMPROPER_IDEAL,
  IK_ERR_NOT_ALGEBRAIC,
  IK_ERR_NON_MONIC_MODULUS,
  IK_ERR_CANDIDATE_EXHAUSTION,
  IK_ERR_PARSE,
  IK_ERR_UNKNOWN_VARIABLE,
  IK_ERR_BAD_FIELD_DESCRIPTOR,
  IK_ERR_INVARIANT_VIOLATION,
  IK_ERR_INTERNAL
} ik_status;

/* Outcome of a decision procedure. */
typedef enum ik_verdict {
  IK_VERDICT_POSITIVE = 0,    /* prime/maximal up to b, or Yes */
  IK_VERDICT_NEGATIVE = 1,    /* verified witness found */
  IK_VERDICT_UNDETERMINED = 2 /* Unknown, Undetermined, or refused */
} ik_verdict;

typedef enum ik_mode { IK_MODE_EXHAUSTIVE = 0, IK_MODE_WITNESS_SEARCH = 1 } ik_mode;

/* An ideal together with its ring and optional preferred monomial order. */
typedef struct ik_ideal ik_ideal;

/* Rendering flags. */
enum { IK_TEXT = 0, IK_JSON = 1 };

/* Bound parameters; a negative optional field means absent. */
typedef struct ik_bound_params {
  long n, d;
  long r, p, m, N1, N2, B, k, d0;
} ik_bound_params;

/* Defaults: cap 2^22, one thread, seed 1, 200 random candidates per degree. */
typedef struct ik_enum_options {
  uint64_t cap;
  unsigned threads;
  uint64_t seed;
  size_t random_per_degree;
} ik_enum_options;

IK_API const char* ik_version(void);
IK_API const char* ik_status_name(ik_status status);
/* Message of the last failing call on this thread; never NULL. */
IK_API const char* ik_last_error(void);
/* Releases strings returned through char** out parameters. */
IK_API void ik_string_free(char* s);

IK_API void ik_bound_params_init(ik_bound_params* params);
IK_API void ik_enum_options_init(ik_enum_options* options);

/* {"field": "...", "vars": [...], "generators": [...], "order": "..."?} */
IK_API ik_status ik_ideal_from_json(const char* json, ik_ideal** out);
IK_API ik_status ik_ideal_from_strings(const char* field, const char* const* vars, size_t nvars,
                                       const char* const* generators, size_t ngenerators, ik_ideal** out);
IK_API void ik_ideal_free(ik_ideal* ideal);
IK_API size_t ik_ideal_nvars(const ik_ideal* ideal);
/* Maximum generator degree; -1 for the zero ideal. */
IK_API long ik_ideal_degree(const ik_ideal* ideal);
IK_API ik_status ik_ideal_contains(const ik_ideal* ideal, const char* polynomial, int* out);

/* order NULL selects the document order, else grevlex. */
IK_API ik_status ik_groebner(const ik_ideal* ideal, const char* order, int flags, char** out);
/* keep: comma-separated variable names. */
IK_API ik_status ik_eliminate(const ik_ideal* ideal, const char* keep, int flags, char** out);
IK_API ik_status ik_quotient(const ik_ideal* ideal, const char* f, int flags, char** out);
IK_API ik_status ik_saturate(const ik_ideal* ideal, const char* g, int flags, char** out);
IK_API ik_status ik_saturate_subring(const ik_ideal* ideal, const char* base, int flags, char** out);
IK_API ik_status ik_minpoly(const ik_ideal* ideal, const char* u, const char* base, int flags, char** out);

/* Digits when the value fits in digit_bits bits (0 selects the display threshold, larger values are clamped to
   the bit cap), else the tower form. */
IK_API ik_status ik_bound_eval(const char* name, const ik_bound_params* params, uint64_t digit_bits, int flags,
                               char** out);
/* Exact value as a decimal string when it fits in bit_cap bits; IK_ERR_RESOURCE_LIMIT otherwise. */
IK_API ik_status ik_bound_value(const char* name, const ik_bound_params* params, uint64_t bit_cap, char** out);
/* Sign of a - b for two named bounds at the given parameters. */
IK_API ik_status ik_bound_compare(const char* a, const ik_bound_params* pa, const char* b,
                                  const ik_bound_params* pb, int* sign);
IK_API size_t ik_bound_count(void);
IK_API const char* ik_bound_name(size_t i);
IK_API ik_status ik_lemma_verify(const char* id, long n_max, long d_max, unsigned threads, int flags, char** out,
                                 int* all_hold);
IK_API size_t ik_lemma_count(void);
IK_API const char* ik_lemma_id(size_t i);
/* Every lemma over n in [1, n_max], d in [1, d_max]. */
IK_API ik_status ik_verify_estimates(long n_max, long d_max, unsigned threads, int flags, char** out,
                                     int* all_hold);

/* b < 0 selects the bound b_main (prime) or m (maximal); the call refuses with an undetermined verdict when that
   bound cannot be materialized. options NULL selects defaults. */
IK_API ik_status ik_prime_check(const ik_ideal* ideal, long b, ik_mode mode, const ik_enum_options* options,
                                int flags, char** out, ik_verdict* verdict);
IK_API ik_status ik_max_check(const ik_ideal* ideal, long b, ik_mode mode, const ik_enum_options* options,
                              int flags, char** out, ik_verdict* verdict);
/* One step per generator. */
IK_API ik_status ik_noether(const ik_ideal* ideal, int flags, char** out);
IK_API ik_status ik_pipeline(const ik_ideal* ideal, int flags, char** out, ik_verdict* verdict);

#ifdef __cplusplus
}
#endif

#endif
