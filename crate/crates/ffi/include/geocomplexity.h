#ifndef GEOCOMPLEXITY_H
#define GEOCOMPLEXITY_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GcxMeasure {
  GCX_MEASURE_F1 = 0,
  GCX_MEASURE_F2,
  GCX_MEASURE_F3,
  GCX_MEASURE_L1,
  GCX_MEASURE_L2,
  GCX_MEASURE_L3,
  GCX_MEASURE_N1,
  GCX_MEASURE_N2,
  GCX_MEASURE_N3,
  GCX_MEASURE_N4,
  GCX_MEASURE_T1,
  GCX_MEASURE_T2,
} GcxMeasure;

typedef enum GcxStatus {
  GCX_STATUS_OK = 0,
  GCX_STATUS_NULL_POINTER = 1,
  // The data violates a dataset or measure precondition.
  GCX_STATUS_INVALID_DATA = 2,
  GCX_STATUS_IO = 3,
  // The linear program could not be solved.
  GCX_STATUS_SOLVER = 4,
  GCX_STATUS_INVALID_ARGUMENT = 5,
  // A Rust panic was caught at the boundary.
  GCX_STATUS_PANIC = 6,
} GcxStatus;

// A two-class point set.
typedef struct GcxDataset GcxDataset;

// The twelve measures of one dataset plus metadata.
typedef struct GcxProfile GcxProfile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or NULL. The pointer
// stays valid until the next library call on the same thread.
const char *gcx_last_error_message(void);

// Static name of a measure, such as `"N3"`.
const char *gcx_measure_name(enum GcxMeasure measure);

// Builds a dataset from `rows * dim` row-major coordinates and one integer
// label per row. Exactly two distinct labels are required; class one is the
// label whose decimal text sorts first.
//
// # Safety
// `values` must point to `rows * dim` doubles and `labels` to `rows`
// integers. `out` must be writable.
enum GcxStatus gcx_dataset_new(const double *values,
                               size_t rows,
                               size_t dim,
                               const int32_t *labels,
                               struct GcxDataset **out);

// Reads a two-class CSV file. `label_column` is a header name or a
// zero-based index; with `encode` set, non-numeric feature columns are coded
// as integers in order of first appearance.
//
// # Safety
// `path` and `label_column` must be NUL-terminated strings; `out` must be
// writable.
enum GcxStatus gcx_dataset_from_csv(const char *path,
                                    const char *label_column,
                                    bool encode,
                                    struct GcxDataset **out);

// Uniform points in the unit cube with balanced random labels.
//
// # Safety
// `out` must be writable.
enum GcxStatus gcx_generate_random_labeling(size_t dim,
                                            size_t n_per_class,
                                            uint64_t seed,
                                            struct GcxDataset **out);

// Linearly separable classes with a gap of `margin` around a random
// hyperplane through the cube center.
//
// # Safety
// `out` must be writable.
enum GcxStatus gcx_generate_linear_margin(size_t dim,
                                          size_t n_per_class,
                                          double margin,
                                          uint64_t seed,
                                          struct GcxDataset **out);

// # Safety
// `out` must be writable.
enum GcxStatus gcx_generate_checkerboard(size_t cells_per_side,
                                         size_t n_per_class,
                                         uint64_t seed,
                                         struct GcxDataset **out);

// Concentric rings around the origin in the plane.
//
// # Safety
// `out` must be writable.
enum GcxStatus gcx_generate_rings(size_t n_per_class,
                                  double r_inner,
                                  double r_outer,
                                  double gap,
                                  uint64_t seed,
                                  struct GcxDataset **out);

// Number of points, or 0 for NULL.
//
// # Safety
// `dataset` must be NULL or a live handle.
size_t gcx_dataset_len(const struct GcxDataset *dataset);

// Feature dimension, or 0 for NULL.
//
// # Safety
// `dataset` must be NULL or a live handle.
size_t gcx_dataset_dim(const struct GcxDataset *dataset);

// # Safety
// `dataset` must be NULL or a handle not yet freed.
void gcx_dataset_free(struct GcxDataset *dataset);

// Computes all twelve measures. `seed` drives the interpolated test sets
// of L3 and N4.
//
// # Safety
// `dataset` must be a live handle; `out` must be writable.
enum GcxStatus gcx_profile_compute(const struct GcxDataset *dataset,
                                   uint64_t seed,
                                   struct GcxProfile **out);

// One value of a profile. F1 and N2 may be `+inf`.
//
// # Safety
// `profile` must be a live handle; `out` must be writable.
enum GcxStatus gcx_profile_get(const struct GcxProfile *profile,
                               enum GcxMeasure measure,
                               double *out);

// Copies all twelve values, in `GcxMeasure` order, into `out`.
//
// # Safety
// `profile` must be a live handle; `out` must hold 12 doubles.
enum GcxStatus gcx_profile_values(const struct GcxProfile *profile, double *out);

// Serializes the profile as a JSON object. Release the string with
// [`gcx_string_free`].
//
// # Safety
// `profile` must be a live handle; `out` must be writable.
enum GcxStatus gcx_profile_to_json(const struct GcxProfile *profile, char **out);

// # Safety
// `s` must be NULL or a string returned by this library and not yet freed.
void gcx_string_free(char *s);

// # Safety
// `profile` must be NULL or a handle not yet freed.
void gcx_profile_free(struct GcxProfile *profile);

// Computes a single measure without building a full profile.
//
// # Safety
// `dataset` must be a live handle; `out` must be writable.
enum GcxStatus gcx_measure(const struct GcxDataset *dataset,
                           enum GcxMeasure measure,
                           uint64_t seed,
                           double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GEOCOMPLEXITY_H */
