// Copyright 2026 The abelspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the abelspec library.
 *
 * Conventions:
 *   - Every fallible call returns an abelspec_status. ABELSPEC_OK is 0; other
 *     values match the library's error codes and abelspec_last_error() holds
 *     the message for the calling thread until its next failing call.
 *   - Handles are opaque. A handle is owned by the caller and released with
 *     the matching _destroy function. Destroying NULL is a no-op.
 *   - Group elements are arrays of `rank` residues. A function on G is a
 *     vector of |G| complex values in the library's mixed-radix order, with
 *     the last coordinate varying fastest.
 *   - Strings returned through char** are heap allocated and must be freed
 *     with abelspec_string_free.
 */
#ifndef ABELSPEC_ABELSPEC_H_
#define ABELSPEC_ABELSPEC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ABELSPEC_API __declspec(dllexport)
#else
#define ABELSPEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int abelspec_status;

#define ABELSPEC_OK 0
#define ABELSPEC_ELEMENT_NOT_IN_GROUP 4
#define ABELSPEC_NOT_POSITIVE_DEFINITE 24
#define ABELSPEC_BAD_K 26
#define ABELSPEC_BAD_M 33
#define ABELSPEC_M_TOO_LARGE 34
#define ABELSPEC_LENGTH_MISMATCH 42
#define ABELSPEC_SCHEMA_ERROR 70
#define ABELSPEC_INVALID_ARGUMENT 98
#define ABELSPEC_INTERNAL 99

typedef struct abelspec_group abelspec_group;
typedef struct abelspec_function abelspec_function;

ABELSPEC_API const char* abelspec_version(void);
ABELSPEC_API const char* abelspec_last_error(void);
/* Symbolic name of a status, e.g. "MTooLarge". Never NULL. */
ABELSPEC_API const char* abelspec_status_name(abelspec_status status);
ABELSPEC_API void abelspec_string_free(char* s);

/* ---- groups ---- */
ABELSPEC_API abelspec_status abelspec_group_create(const int64_t* moduli, size_t rank,
                                                   abelspec_group** out);
ABELSPEC_API void abelspec_group_destroy(abelspec_group* g);
ABELSPEC_API int64_t abelspec_group_order(const abelspec_group* g);
ABELSPEC_API size_t abelspec_group_rank(const abelspec_group* g);
ABELSPEC_API abelspec_status abelspec_group_index_of(const abelspec_group* g,
                                                     const int64_t* residues, size_t rank,
                                                     int64_t* index);
ABELSPEC_API abelspec_status abelspec_group_element_at(const abelspec_group* g,
                                                       int64_t index, int64_t* residues,
                                                       size_t rank);

/* ---- functions ---- */
/* `imag` may be NULL for a real function. `count` must equal |G|. */
ABELSPEC_API abelspec_status abelspec_function_from_values(const abelspec_group* g,
                                                           const double* real,
                                                           const double* imag, size_t count,
                                                           abelspec_function** out);
/* Sum of coef[i] * chi_{chars[i]}; chars is count * rank residues, row-major.
 * The declared spectrum is kept exactly. */
ABELSPEC_API abelspec_status abelspec_function_from_terms(const abelspec_group* g,
                                                          const int64_t* chars,
                                                          const double* coefs, size_t count,
                                                          abelspec_function** out);
ABELSPEC_API void abelspec_function_destroy(abelspec_function* f);
ABELSPEC_API abelspec_status abelspec_function_values(const abelspec_function* f,
                                                      double* real, double* imag,
                                                      size_t count);
ABELSPEC_API abelspec_status abelspec_function_spectrum(const abelspec_function* f,
                                                        double* real, double* imag,
                                                        size_t count);

/* ---- positive definiteness and value profile ---- */
ABELSPEC_API abelspec_status abelspec_is_positive_definite(const abelspec_function* f,
                                                           double tol, int* verdict);

typedef struct {
  double nu1;
  double nu2;               /* NaN when |G| == 1 */
  int has_nu2_distinct;
  double nu2_distinct;      /* valid when has_nu2_distinct */
  int64_t argmax_size;
} abelspec_value_profile;

/* tol_distinct < 0 selects the default. */
ABELSPEC_API abelspec_status abelspec_value_profile_of(const abelspec_function* f,
                                                       double tol_distinct,
                                                       abelspec_value_profile* out);
/* k-th largest value counted with multiplicity, 1 <= k <= |G|. */
ABELSPEC_API abelspec_status abelspec_nu_k(const abelspec_function* f, size_t k,
                                           double* out);

/* ---- second-largest-value lower bounds ---- */
typedef struct {
  double sharp;
  double weak;
  int64_t mu;
  double rayleigh_floor;
} abelspec_uniform_bound;

ABELSPEC_API abelspec_status abelspec_bound_uniform(const abelspec_function* f, int64_t m,
                                                    double tol,
                                                    abelspec_uniform_bound* out);
/* *valid is 0 when the box is too large for the group; *bound is then NaN. */
ABELSPEC_API abelspec_status abelspec_bound_multi(const abelspec_function* f,
                                                  const int64_t* m, size_t r, double tol,
                                                  int* valid, double* bound);

typedef struct {
  double kappa;
  int kappa_integral;
  int64_t m_star;
  int grid_fallback;
  int64_t m_best;
  int prop_optimal;
  double weak_at_m_star;
  double weak_at_m_best;
} abelspec_select_m_result;

ABELSPEC_API abelspec_status abelspec_select_m(const abelspec_function* f, double tol,
                                               abelspec_select_m_result* out);

/* ---- problem files ---- */
typedef struct {
  int oracle;
  int has_tol;
  double tol;
  int has_tol_distinct;
  double tol_distinct;
  const int64_t* m; /* NULL for none */
  size_t m_count;
  const double* eps; /* NULL for none */
  size_t eps_count;
} abelspec_run_options;

/* Runs a JSON problem. `options` may be NULL. On return *report holds the
 * JSON report and *diagnostics a one-line message (empty on success); both
 * may be passed as NULL to discard. *exit_code is 0 ok, 1 input error,
 * 2 computation error, 3 failed oracle or expectation check. */
ABELSPEC_API abelspec_status abelspec_run_problem(const char* problem_json,
                                                  const abelspec_run_options* options,
                                                  char** report, char** diagnostics,
                                                  int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* ABELSPEC_ABELSPEC_H_ */
