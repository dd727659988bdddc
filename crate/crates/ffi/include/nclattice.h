#ifndef NCLATTICE_H
#define NCLATTICE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes shared by every function.
typedef enum NcStatus {
  NC_STATUS_OK = 0,
  NC_STATUS_NULL_POINTER = 1,
  NC_STATUS_INVALID_ARGUMENT = 2,
  NC_STATUS_PARSE = 3,
  NC_STATUS_TOO_LARGE = 4,
  NC_STATUS_NOT_GRADED = 5,
  NC_STATUS_ASSEMBLY_FAILURE = 6,
  NC_STATUS_INTERNAL = 7,
} NcStatus;

// Opaque point configuration.
typedef struct NcConfig NcConfig;

// Opaque noncrossing partition lattice.
typedef struct NcLattice NcLattice;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null. Owned by the
// library; valid until the next call.
const char *nc_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void nc_string_free(char *s);

// Builds a standard configuration. `family` is one of `P Q T U V S`; `n`
// is ignored for the single-parameter families.
//
// # Safety
// `family` must be a valid C string; `out` must be writable.
enum NcStatus nc_config_standard(const char *family,
                                 uintptr_t m,
                                 uintptr_t n,
                                 struct NcConfig **out);

// Parses a configuration from its JSON form.
//
// # Safety
// `json` must be a valid C string; `out` must be writable.
enum NcStatus nc_config_from_json(const char *json, struct NcConfig **out);

// Number of points in the configuration.
//
// # Safety
// `config` must be a live handle; `out` must be writable.
enum NcStatus nc_config_len(const struct NcConfig *config, uintptr_t *out);

// Serializes the configuration to JSON.
//
// # Safety
// `config` must be a live handle; `out` must be writable.
enum NcStatus nc_config_to_json(const struct NcConfig *config, char **out);

// Number of noncrossing partitions, as a decimal string.
//
// # Safety
// `config` must be a live handle; `out` must be writable.
enum NcStatus nc_config_count(const struct NcConfig *config, uintptr_t max_points, char **out);

// Releases a configuration. Null is ignored.
//
// # Safety
// `config` must come from this library and not have been freed.
void nc_config_free(struct NcConfig *config);

// Builds the lattice of noncrossing partitions of `config`.
//
// # Safety
// `config` must be a live handle; `out` must be writable.
enum NcStatus nc_lattice_build(const struct NcConfig *config,
                               uintptr_t max_points,
                               struct NcLattice **out);

// Number of elements.
//
// # Safety
// `lattice` must be a live handle; `out` must be writable.
enum NcStatus nc_lattice_len(const struct NcLattice *lattice, uintptr_t *out);

// Writes the rank vector into `buf` (capacity `cap`) and its true length into
// `len`. If `cap` is too small only `len` is written; call again with a
// larger buffer. Fails with `NC_STATUS_NOT_GRADED` for ungraded lattices.
//
// # Safety
// `lattice` must be a live handle; `buf` must hold `cap` entries (or be null
// when `cap` is 0); `len` must be writable.
enum NcStatus nc_lattice_rank_vector(const struct NcLattice *lattice,
                                     uint64_t *buf,
                                     uintptr_t cap,
                                     uintptr_t *len);

// Whether the lattice is self-dual; `max_elements` caps the isomorphism
// search.
//
// # Safety
// `lattice` must be a live handle; `out` must be writable.
enum NcStatus nc_lattice_is_self_dual(const struct NcLattice *lattice,
                                      uintptr_t max_elements,
                                      bool *out);

// JSON export (elements, ranks, covers).
//
// # Safety
// `lattice` must be a live handle; `out` must be writable.
enum NcStatus nc_lattice_to_json(const struct NcLattice *lattice, char **out);

// Graphviz export of the Hasse diagram.
//
// # Safety
// `lattice` must be a live handle; `out` must be writable.
enum NcStatus nc_lattice_to_dot(const struct NcLattice *lattice, char **out);

// Releases a lattice. Null is ignored.
//
// # Safety
// `lattice` must come from this library and not have been freed.
void nc_lattice_free(struct NcLattice *lattice);

// Count table for `T`, `U`, `V` or `S` as CSV, rows `0..=mm`, columns
// `0..=nn`. `T` takes only `nn`.
//
// # Safety
// `family` must be a valid C string; `out` must be writable.
enum NcStatus nc_table_csv(const char *family, uintptr_t mm, uintptr_t nn, char **out);

// Builds and verifies a symmetric chain decomposition for a standard family
// and reports its chain count and covered element count.
//
// # Safety
// `family` must be a valid C string; `chains` and `covered` must be writable.
enum NcStatus nc_scd_summary(const char *family,
                             uintptr_t m,
                             uintptr_t n,
                             uintptr_t max_points,
                             uintptr_t *chains,
                             uintptr_t *covered);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NCLATTICE_H */
