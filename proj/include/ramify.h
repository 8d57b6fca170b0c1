/* ramify C API: persistent homology, cophenetic matroids, ramification
 * forests and ultrametric class distances behind opaque handles.
 *
 * Conventions:
 *   - every fallible call returns a ramify_status; RAMIFY_OK is 0
 *   - on failure, ramify_last_error() returns a thread-local message
 *   - objects returned through out-parameters are owned by the caller and
 *     released with the matching *_free; strings with ramify_string_free
 *   - `field_prime`: 0 selects exact rational coefficients, a prime p
 *     selects GF(p)
 */
#ifndef RAMIFY_H
#define RAMIFY_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ramify_complex_s ramify_complex;
typedef struct ramify_barcode_s ramify_barcode;
typedef struct ramify_matroid_s ramify_matroid;
typedef struct ramify_forest_s ramify_forest;
typedef struct ramify_distmat_s ramify_distmat;

typedef enum ramify_status {
    RAMIFY_OK = 0,
    RAMIFY_ERR_INVALID_ARGUMENT = 1,
    RAMIFY_ERR_IO = 2,
    RAMIFY_ERR_PARSE = 3,
    RAMIFY_ERR_CLOSURE = 4,
    RAMIFY_ERR_NOT_A_CYCLE = 5,
    RAMIFY_ERR_UNKNOWN_ID = 6,
    RAMIFY_ERR_INDEPENDENT_SET = 7,
    RAMIFY_ERR_INTERNAL = 8
} ramify_status;

const char* ramify_version(void);
/* message for the most recent failure on this thread ("" if none) */
const char* ramify_last_error(void);
void ramify_string_free(char* s);

/* ---- filtered complexes -------------------------------------------------- */

/* coords: n_points * dim doubles, row major */
ramify_status ramify_complex_rips(const double* coords, size_t n_points, size_t dim, int max_dim,
                                  double max_scale, ramify_complex** out);
ramify_status ramify_complex_cech(const double* coords, size_t n_points, size_t dim, int max_dim,
                                  double max_scale, ramify_complex** out);
/* edges: 2*n_edges vertex ids (u0,v0,u1,v1,...); extra_vertices may be NULL */
ramify_status ramify_complex_clique(const int64_t* edges, size_t n_edges, const int64_t* extra_vertices,
                                    size_t n_extra_vertices, int max_dim, ramify_complex** out);
/* cover members flattened: members[offsets[i]..offsets[i+1]) is the i-th set */
ramify_status ramify_complex_nerve(const int64_t* members, const size_t* offsets, size_t n_sets, int max_dim,
                                   ramify_complex** out);
ramify_status ramify_complex_load(const char* path, ramify_complex** out);
/* build from a data file: kind "rips"/"cech" (CSV point rows), "clique"
 * (edge-list lines `u v`), "nerve" (one member set per line); max_scale is
 * ignored for clique and nerve */
ramify_status ramify_complex_build_file(const char* kind, const char* path, int max_dim, double max_scale,
                                        ramify_complex** out);
ramify_status ramify_complex_save(const ramify_complex* c, const char* path);
/* serialize to the filtration text format */
ramify_status ramify_complex_format(const ramify_complex* c, char** out_text);
/* built-in datasets; name: "triangle" */
ramify_status ramify_complex_demo(const char* name, ramify_complex** out);

size_t ramify_complex_size(const ramify_complex* c);
int ramify_complex_top_dim(const ramify_complex* c);
size_t ramify_complex_count_dim(const ramify_complex* c, int dim);
size_t ramify_complex_critical_count(const ramify_complex* c);
ramify_status ramify_complex_critical_value(const ramify_complex* c, size_t i, double* out);
void ramify_complex_free(ramify_complex* c);

/* ---- persistence ---------------------------------------------------------- */

ramify_status ramify_persistence(const ramify_complex* c, int max_dim, int64_t field_prime,
                                 ramify_barcode** out);
size_t ramify_barcode_size(const ramify_barcode* b);
/* death is +infinity for essential classes */
ramify_status ramify_barcode_get(const ramify_barcode* b, size_t i, int* dim, double* birth, double* death);
/* format: "csv", "json" or "svg" */
ramify_status ramify_barcode_export(const ramify_barcode* b, const char* format, char** out_text);
/* number of intervals of dimension k containing [eps, eta] */
ramify_status ramify_barcode_cz_rank(const ramify_barcode* b, int k, double eps, double eta, size_t* out);
void ramify_barcode_free(ramify_barcode* b);

/* ---- filtered matroids ------------------------------------------------------ */

/* cophenetic matroid of degree k; generators are the degree-k barcode
 * representatives, labeled g0, g1, ... in barcode order */
ramify_status ramify_cophenetic_matroid(const ramify_complex* c, int k, int64_t field_prime,
                                        ramify_matroid** out);
/* the coordinate-zeroing linear matroid demo (elements v1..v4) */
ramify_status ramify_matroid_demo_s_epsilon(ramify_matroid** out);

size_t ramify_matroid_ground_size(const ramify_matroid* m);
const char* ramify_matroid_label(const ramify_matroid* m, size_t id);
ramify_status ramify_matroid_element_birth(const ramify_matroid* m, size_t id, double* out);
size_t ramify_matroid_critical_count(const ramify_matroid* m);
ramify_status ramify_matroid_critical_value(const ramify_matroid* m, size_t i, double* out);
/* rank of a subset (sorted ids) at scale eps */
ramify_status ramify_matroid_rank(const ramify_matroid* m, double eps, const size_t* ids, size_t n_ids,
                                  size_t* out);
/* JSON dump with full rank tables for small ground sets */
ramify_status ramify_matroid_dump(const ramify_matroid* m, char** out_json);
/* submodularity / monotonicity / normalization check of the rank oracle at
 * eps; writes a one-line report and sets *ok to 0/1 */
ramify_status ramify_matroid_check(const ramify_matroid* m, double eps, int* ok, char** out_report);
void ramify_matroid_free(ramify_matroid* m);

/* ---- ramification forests ----------------------------------------------------- */

/* roots found by scanning for newly dependent irreducible generator sets */
ramify_status ramify_forest_build(const ramify_matroid* m, ramify_forest** out);
/* explicit seed: a set irreducible at scale eps */
ramify_status ramify_forest_build_seeded(const ramify_matroid* m, const size_t* ids, size_t n_ids, double eps,
                                         ramify_forest** out);
size_t ramify_forest_root_count(const ramify_forest* f);
/* format: "newick", "dot", "json" or "svg" */
ramify_status ramify_forest_export(const ramify_forest* f, const char* format, char** out_text);
void ramify_forest_free(ramify_forest* f);

/* ---- cophenetic distances ------------------------------------------------------ */

/* pairwise distances between the given generators at base scale eps; ids may
 * be NULL to use every generator alive at eps */
ramify_status ramify_distance_matrix(const ramify_matroid* m, double eps, const size_t* ids, size_t n_ids,
                                     ramify_distmat** out);
size_t ramify_distmat_size(const ramify_distmat* d);
/* +infinity for unmerged pairs */
ramify_status ramify_distmat_get(const ramify_distmat* d, size_t i, size_t j, double* out);
ramify_status ramify_distmat_export(const ramify_distmat* d, char** out_csv);
void ramify_distmat_free(ramify_distmat* d);

#ifdef __cplusplus
}
#endif

#endif /* RAMIFY_H */
