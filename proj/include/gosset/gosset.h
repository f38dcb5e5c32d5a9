/* Copyright 2026 The gosset Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the gosset root-system library. Objects are opaque handles
 * created by *_create / *_build functions and released with the matching
 * *_free. Every fallible call returns a gosset_status; on failure a message
 * for the calling thread is available from gosset_last_error(). Strings
 * returned through char** are heap allocated and released with
 * gosset_string_free.
 */

#ifndef GOSSET_GOSSET_H
#define GOSSET_GOSSET_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(GOSSET_BUILDING_LIBRARY)
#    define GOSSET_API __declspec(dllexport)
#  else
#    define GOSSET_API __declspec(dllimport)
#  endif
#else
#  define GOSSET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gosset_status {
  GOSSET_OK = 0,
  GOSSET_ERR_INVALID_ARGUMENT = 1,
  GOSSET_ERR_DIVISION_BY_ZERO = 2,
  GOSSET_ERR_UNKNOWN_DIAGRAM = 3,
  GOSSET_ERR_MALFORMED_SPEC = 4,
  GOSSET_ERR_NOT_FINITE_TYPE = 5,
  GOSSET_ERR_NOT_CRYSTALLOGRAPHIC = 6,
  GOSSET_ERR_NOT_BIPARTITE = 7,
  GOSSET_ERR_DISCONNECTED = 8,
  GOSSET_ERR_NO_CONVERGENCE = 9,
  GOSSET_ERR_SINGULAR = 10,
  GOSSET_ERR_WRONG_TYPE = 11,
  GOSSET_ERR_INTERNAL = 12,
  GOSSET_ERR_OUT_OF_RANGE = 13,
  GOSSET_ERR_IO = 14
} gosset_status;

typedef enum gosset_mode { GOSSET_MODE_ORTHO = 0, GOSSET_MODE_SKEW = 1 } gosset_mode;

typedef enum gosset_point_set {
  GOSSET_POINTS_ROOTS = 0,
  GOSSET_POINTS_SIMPLES = 1,
  GOSSET_POINTS_WEIGHTS = 2
} gosset_point_set;

typedef struct gosset_diagram gosset_diagram;
typedef struct gosset_roots gosset_roots;
typedef struct gosset_plane gosset_plane;
typedef struct gosset_spectrum gosset_spectrum;

GOSSET_API const char* gosset_version(void);
GOSSET_API const char* gosset_status_string(gosset_status status);
/* Message of the last failure on this thread; empty when none. */
GOSSET_API const char* gosset_last_error(void);
GOSSET_API void gosset_string_free(char* s);

/* Diagrams: `NAME` or `rank=N;edges=i-j:m,...` with 1-based nodes. */
GOSSET_API gosset_status gosset_diagram_parse(const char* spec, gosset_diagram** out);
GOSSET_API void gosset_diagram_free(gosset_diagram* d);
GOSSET_API int gosset_diagram_rank(const gosset_diagram* d);
GOSSET_API size_t gosset_diagram_edge_count(const gosset_diagram* d);
/* Edge k with 1-based nodes i < j and label p/q (q == 1 for integer labels). */
GOSSET_API gosset_status gosset_diagram_edge(const gosset_diagram* d, size_t k, int* i, int* j, int* p,
                                             int* q);
/* Gram entry (1-based indices) as a float and, when exact, as text such as
 * "-1/2 - 1/2*sqrt5"; *exact_text is NULL for non-golden entries. */
GOSSET_API gosset_status gosset_diagram_gram(const gosset_diagram* d, int i, int j, double* value,
                                             char** exact_text);
/* Two colour classes, 1-based; sizes written to *na, *nb. Buffers need rank
 * entries. */
GOSSET_API gosset_status gosset_diagram_bipartition(const gosset_diagram* d, int* color_a, size_t* na,
                                                    int* color_b, size_t* nb);

/* Root systems. */
GOSSET_API gosset_status gosset_roots_enumerate(const gosset_diagram* d, gosset_roots** out);
GOSSET_API void gosset_roots_free(gosset_roots* rs);
GOSSET_API size_t gosset_roots_count(const gosset_roots* rs);
GOSSET_API int gosset_roots_coxeter_number(const gosset_roots* rs);
GOSSET_API int gosset_roots_rank(const gosset_roots* rs);
/* Copies root k (rank coordinates) into coords. */
GOSSET_API gosset_status gosset_roots_get(const gosset_roots* rs, size_t k, double* coords);
/* Highest-root marks n_1..n_rank; GOSSET_ERR_NOT_CRYSTALLOGRAPHIC for
 * non-simply-laced diagrams. */
GOSSET_API gosset_status gosset_roots_marks(const gosset_roots* rs, int* marks);

/* Coxeter plane. */
GOSSET_API gosset_status gosset_plane_build(const gosset_roots* rs, gosset_plane** out);
GOSSET_API void gosset_plane_free(gosset_plane* p);
GOSSET_API double gosset_plane_c(const gosset_plane* p);
GOSSET_API int gosset_plane_h(const gosset_plane* p);
GOSSET_API int gosset_plane_h_spectral(const gosset_plane* p);
/* Perron coefficients z_1..z_rank. */
GOSSET_API gosset_status gosset_plane_z(const gosset_plane* p, double* z, size_t n);
/* Orbits of the rotation S1 S2: sizes and labels (1-based simple roots). */
GOSSET_API gosset_status gosset_plane_orbits(const gosset_plane* p, int* labels, size_t* sizes, size_t n);

/* Circle spectra. rel_tol <= 0 selects the default 1e-6. */
GOSSET_API gosset_status gosset_spectrum_compute(const gosset_plane* p, gosset_mode mode,
                                                 gosset_point_set points, double rel_tol,
                                                 gosset_spectrum** out);
GOSSET_API void gosset_spectrum_free(gosset_spectrum* s);
GOSSET_API size_t gosset_spectrum_circle_count(const gosset_spectrum* s);
GOSSET_API gosset_status gosset_spectrum_circle(const gosset_spectrum* s, size_t k, double* radius,
                                                size_t* count);
GOSSET_API gosset_status gosset_spectrum_to_json(const gosset_spectrum* s, char** out);
GOSSET_API gosset_status gosset_spectrum_to_csv(const gosset_spectrum* s, char** out);
GOSSET_API gosset_status gosset_spectrum_to_svg(const gosset_spectrum* s, int size, int labels, char** out);

/* Masses. Both fill 8 ascending values. */
GOSSET_API gosset_status gosset_masses_zamolodchikov(double m1, double* masses);
/* Square roots of the E8 affine Toda mass-matrix eigenvalues (unit scale). */
GOSSET_API gosset_status gosset_masses_toda(const gosset_roots* e8, double* masses);
/* Largest relative deviation between the sorted, first-normalized lists. */
GOSSET_API gosset_status gosset_ratio_max_dev(const double* a, const double* b, size_t n, double* max_rel_dev);

/* Invariant suite: calls `report` once per check; *failures receives the
 * number of failed checks. */
typedef void (*gosset_check_callback)(const char* name, int passed, const char* detail, void* user);
GOSSET_API gosset_status gosset_verify(const gosset_diagram* d, gosset_check_callback report, void* user,
                                       size_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* GOSSET_GOSSET_H */
