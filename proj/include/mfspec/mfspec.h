// Copyright 2026 The mfspec Authors.
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

#ifndef MFSPEC_MFSPEC_H
#define MFSPEC_MFSPEC_H

#include <stddef.h>

#if defined(_WIN32)
#define MFSPEC_API __declspec(dllexport)
#else
#define MFSPEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Infinite results are returned as HUGE_VAL or -HUGE_VAL. */

typedef enum mfspec_status {
  MFSPEC_OK = 0,
  MFSPEC_INVALID_ARGUMENT,
  MFSPEC_PARSE_ERROR,
  MFSPEC_NOT_IRREDUCIBLE,
  MFSPEC_EMPTY_ROW,
  MFSPEC_NOT_MARKOV,
  MFSPEC_RESOURCE_LIMIT,
  MFSPEC_DEPTH_MISMATCH,
  MFSPEC_NON_CONVERGENCE,
  MFSPEC_CONDITION_Q_VIOLATED,
  MFSPEC_CONDITION_P_VIOLATED,
  MFSPEC_INFEASIBLE,
  MFSPEC_EXCLUDED_ALPHA,
  MFSPEC_UNKNOWN_FORMULA,
  MFSPEC_INTERNAL_ERROR
} mfspec_status;

typedef enum mfspec_point_status {
  MFSPEC_INTERIOR = 0,
  MFSPEC_BOUNDARY,
  MFSPEC_OUTSIDE,
  MFSPEC_UNDEFINED
} mfspec_point_status;

typedef enum mfspec_dimension_kind {
  MFSPEC_DIM_LYAPUNOV = 0,  /* alpha scalar; needs slopes */
  MFSPEC_DIM_BIRKHOFF,      /* phi[0], alpha scalar; needs slopes */
  MFSPEC_DIM_POINTWISE,     /* phi[0] the weak Gibbs potential; needs slopes */
  MFSPEC_DIM_U_DIMENSION,   /* Phi, Psi, u = log_derivative */
  MFSPEC_DIM_ENTROPY,       /* phi[0], alpha scalar */
  MFSPEC_DIM_LOCAL_ENTROPY, /* Phi of zero pressure */
  MFSPEC_DIM_CONDITIONAL    /* Phi, Psi, u = log_derivative, order */
} mfspec_dimension_kind;

typedef struct mfspec_system mfspec_system;

typedef struct mfspec_point {
  double value;
  mfspec_point_status status;
  int iterations;
  int has_argmin; /* argmin written to the caller's buffer when nonzero */
} mfspec_point;

/* Potential lists: `dim` names each for Phi and Psi. */
typedef struct mfspec_level {
  const char* const* phi;
  const char* const* psi;
  size_t dim;
  const char* xi; /* NULL means "zero" */
} mfspec_level;

MFSPEC_API const char* mfspec_version(void);
MFSPEC_API const char* mfspec_status_name(mfspec_status status);
/* Message of the last failure on the calling thread. */
MFSPEC_API const char* mfspec_last_error(void);
MFSPEC_API void mfspec_string_free(char* s);

MFSPEC_API mfspec_status mfspec_system_load(const char* path, mfspec_system** out);
MFSPEC_API mfspec_status mfspec_system_parse(const char* json, mfspec_system** out);
MFSPEC_API void mfspec_system_free(mfspec_system* system);
MFSPEC_API size_t mfspec_system_alphabet_size(const mfspec_system* system);
MFSPEC_API int mfspec_system_has_map(const mfspec_system* system);
/* Comma-separated potential names. */
MFSPEC_API mfspec_status mfspec_system_potentials(const mfspec_system* system, char** names);

MFSPEC_API mfspec_status mfspec_pressure(const mfspec_system* system, const char* potential, double* out);
MFSPEC_API mfspec_status mfspec_cover_pressure(const mfspec_system* system, const char* potential, int n,
                                               double* out);
/* Gradient of q -> P(<q, Phi>); `grad` has level->dim entries. */
MFSPEC_API mfspec_status mfspec_pressure_gradient(const mfspec_system* system, const mfspec_level* level,
                                                  const double* q, double* grad);
MFSPEC_API mfspec_status mfspec_bowen_root(const mfspec_system* system, const char* eta, const char* u,
                                           double* out);

MFSPEC_API mfspec_status mfspec_predicted(const mfspec_system* system, const mfspec_level* level,
                                          const double* alpha, mfspec_point* out, double* argmin);
MFSPEC_API mfspec_status mfspec_conditional(const mfspec_system* system, const mfspec_level* level,
                                            const double* alpha, int order, mfspec_point* out);
MFSPEC_API mfspec_status mfspec_coarse(const mfspec_system* system, const mfspec_level* level,
                                       const double* alpha, double gamma, int n, double* out);
/* JSON description of the domain I(Phi, Psi). */
MFSPEC_API mfspec_status mfspec_domain(const mfspec_system* system, const mfspec_level* level, char** json);
MFSPEC_API mfspec_status mfspec_dimension(const mfspec_system* system, mfspec_dimension_kind kind,
                                          const mfspec_level* level, const double* alpha, int order,
                                          mfspec_point* out, double* argmin);

/* Runs the acceptance criteria on the bundle in `systems_dir`. `criterion`
 * 0 runs all of them. Tolerance specs are "name=value" or a bare value.
 * Any of the output strings may be NULL. */
MFSPEC_API mfspec_status mfspec_verify(const char* systems_dir, const char* const* tolerances, size_t count,
                                       int criterion, int* passed, char** summary, char** table, char** json);

#ifdef __cplusplus
}
#endif

#endif
