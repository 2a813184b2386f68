/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface to libshk. Objects are opaque handles released with the
 * matching *_free function. Every call returns a shk_status; on failure
 * shk_last_error() describes the problem (thread-local, valid until the next
 * failing call on the same thread). Strings returned through char** are
 * heap-allocated and released with shk_string_free.
 */
#ifndef SHK_H
#define SHK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SHK_API __declspec(dllexport)
#else
#define SHK_API __attribute__((visibility("default")))
#endif

typedef enum shk_status {
  SHK_OK = 0,
  SHK_INVALID_ARGUMENT = 1,
  SHK_PARSE = 2,
  SHK_DOMAIN = 3,   /* input well formed but outside an operation's domain */
  SHK_BUDGET = 4,   /* search gave up inside its budget */
  SHK_INTERNAL = 5
} shk_status;

typedef enum shk_format { SHK_FORMAT_TEXT = 0, SHK_FORMAT_JSON = 1 } shk_format;

typedef enum shk_poly_kind { SHK_POLY_K = 0, SHK_POLY_GP = 1, SHK_POLY_G = 2 } shk_poly_kind;

typedef enum shk_urt_kind { SHK_URT_MINIMAL = 0, SHK_URT_SUPERSTANDARD = 1 } shk_urt_kind;

typedef struct shk_tableau shk_tableau;   /* increasing shifted tableau */
typedef struct shk_recording shk_recording; /* standard set-valued tableau */
typedef struct shk_poly shk_poly;         /* truncated polynomial */
typedef struct shk_lr_table shk_lr_table; /* Littlewood-Richardson table */

SHK_API const char* shk_version(void);
SHK_API const char* shk_last_error(void);
SHK_API void shk_string_free(char* s);
SHK_API const char* shk_status_name(shk_status s);

/* Worker count for enumeration; 0 restores the default. */
SHK_API shk_status shk_set_threads(int n);
SHK_API int shk_get_threads(void);

/* ---- tableaux ---- */
SHK_API void shk_tableau_free(shk_tableau* t);
SHK_API void shk_recording_free(shk_recording* q);
/* Text format or JSON (input starting with '{'). */
SHK_API shk_status shk_tableau_parse(const char* s, shk_tableau** out);
SHK_API shk_status shk_recording_parse(const char* s, shk_recording** out);
SHK_API shk_status shk_tableau_format(const shk_tableau* t, shk_format f, char** out);
SHK_API shk_status shk_recording_format(const shk_recording* q, shk_format f, char** out);
SHK_API int shk_tableau_equal(const shk_tableau* a, const shk_tableau* b);
/* Reading word, comma separated. */
SHK_API shk_status shk_tableau_reading_word(const shk_tableau* t, char** out);
SHK_API shk_status shk_urt_tableau(shk_urt_kind kind, const char* shape, shk_tableau** out);

/* ---- words ----
 * Words are digit strings ("451132") or comma separated ("10,2,3"). */
SHK_API shk_status shk_word_normalize(const char* word, char** out);
SHK_API shk_status shk_insert(const char* word, shk_tableau** p, shk_recording** q);
SHK_API shk_status shk_descents(const char* word, char** out);
SHK_API shk_status shk_recording_descents(const shk_recording* q, char** out);
/* Inverse of shk_insert; the word is written comma separated. */
SHK_API shk_status shk_reverse_insert(const shk_tableau* p, const shk_recording* q, char** word);

/* ---- equivalence ----
 * verdict: 1 equivalent (certificate in *report), 0 inequivalent, -1 unknown.
 * max_len < 0 selects longest input + 3; max_states <= 0 selects 1e6. */
SHK_API shk_status shk_equivalent(const char* u, const char* v, int max_len, long max_states,
                                  shk_format f, int* verdict, char** report);
/* Explores the class of `word`; the report lists the member words, the
 * distinct insertion tableaux and whether the search finished. */
SHK_API shk_status shk_classes(const char* word, int max_len, long max_states, shk_format f,
                               char** report);
/* is_urt: 1 when no counterexample was found within the budget, 0 otherwise. */
SHK_API shk_status shk_urt_check(const shk_tableau* t, int max_len, long max_states, shk_format f,
                                 int* is_urt, char** report);

/* ---- jeu de taquin ----
 * board_json follows the board schema. order_json is NULL for the standard
 * superstandard order, else a switches document. Boards without markers are
 * marked superstandard over their implied inner shape. */
SHK_API shk_status shk_rectify(const char* board_json, const char* order_json, shk_tableau** out);

/* ---- polynomials ---- */
SHK_API void shk_poly_free(shk_poly* p);
/* shape: "2,1" (strict for K and GP, any partition for G). */
SHK_API shk_status shk_poly_compute(shk_poly_kind kind, const char* shape, int nvars, int maxdeg,
                                    shk_poly** out);
SHK_API shk_status shk_poly_parse(const char* json, shk_poly** out);
SHK_API shk_status shk_poly_format(const shk_poly* p, shk_format f, char** out);
SHK_API int shk_poly_equal(const shk_poly* a, const shk_poly* b);
/* Coefficient of the monomial with the given exponent vector (length nvars),
 * as a decimal string. */
SHK_API shk_status shk_poly_coefficient(const shk_poly* p, const int* exponent, size_t n, char** out);
SHK_API shk_status shk_poly_is_symmetric(const shk_poly* p, int* out);

/* ---- products ---- */
SHK_API void shk_lr_free(shk_lr_table* t);
SHK_API shk_status shk_lr_compute(const char* lambda, const char* mu, shk_urt_kind kind,
                                  shk_lr_table** out);
SHK_API shk_status shk_lr_format(const shk_lr_table* t, shk_format f, char** out);
/* Compares K_lambda K_mu with the LR expansion; *match is 1 on agreement. */
SHK_API shk_status shk_lr_verify(const char* lambda, const char* mu, int nvars, int maxdeg,
                                 shk_format f, int* match, char** report);

/* ---- verification suites ---- */
SHK_API size_t shk_suite_count(void);
SHK_API const char* shk_suite_name(size_t i);
SHK_API const char* shk_suite_summary(size_t i);
/* *passed is 1 on success; the report carries detail and timing. */
SHK_API shk_status shk_run_suite(const char* name, shk_format f, int* passed, double* seconds,
                                 char** report);

#ifdef __cplusplus
}
#endif

#endif /* SHK_H */
