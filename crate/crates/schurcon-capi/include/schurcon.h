#ifndef SCHURCON_H
#define SCHURCON_H

/* Generated by cbindgen from the schurcon-capi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every entry point.
typedef enum SchurconStatus {
  SCHURCON_STATUS_OK = 0,
  // Malformed input (bad spectrum, out-of-range rate or side, ...).
  SCHURCON_STATUS_ERR_INVALID_ARGUMENT = 1,
  // A size or complexity guard refused the computation.
  SCHURCON_STATUS_ERR_GUARD = 2,
  // A required pointer was null.
  SCHURCON_STATUS_ERR_NULL_POINTER = 3,
  // A caller-provided buffer is too small.
  SCHURCON_STATUS_ERR_BUFFER_TOO_SMALL = 4,
  // Internal panic captured at the boundary.
  SCHURCON_STATUS_ERR_INTERNAL = 5,
} SchurconStatus;

// A computed outcome distribution (opaque).
typedef struct SchurconDistribution SchurconDistribution;

// An ordered probability vector (opaque).
typedef struct SchurconSpectrum SchurconSpectrum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Writes the most recent error message into `buf` (NUL-terminated,
// truncated to `cap`). Returns the full message length in bytes.
//
// # Safety
// `buf` must point to `cap` writable bytes, or be null (then only the
// length is returned).
size_t schurcon_last_error(char *buf, size_t cap);

// Library version as a static NUL-terminated string.
const char *schurcon_version(void);

// Builds a spectrum from `len` nonnegative entries summing to one within
// 1e-9 (entries are sorted and rescaled internally).
//
// # Safety
// `probs` must point to `len` doubles; `out` must be a valid pointer.
enum SchurconStatus schurcon_spectrum_new(const double *probs,
                                          size_t len,
                                          struct SchurconSpectrum **out);

// Frees a spectrum handle (null is accepted).
//
// # Safety
// `spectrum` must be a pointer previously returned by
// [`schurcon_spectrum_new`], not yet freed.
void schurcon_spectrum_free(struct SchurconSpectrum *spectrum);

// Number of levels in the spectrum.
//
// # Safety
// Valid, live handle and out-pointer.
enum SchurconStatus schurcon_spectrum_dim(const struct SchurconSpectrum *spectrum, size_t *out);

// Shannon entropy of the spectrum in bits (also the dense-coding capacity
// of the state it describes).
//
// # Safety
// Valid, live handle and out-pointer.
enum SchurconStatus schurcon_spectrum_entropy(const struct SchurconSpectrum *spectrum, double *out);

// Computes the full outcome distribution for `n` copies.
//
// # Safety
// Valid, live handles; `out` non-null.
enum SchurconStatus schurcon_distribution_compute(size_t n,
                                                  const struct SchurconSpectrum *spectrum,
                                                  struct SchurconDistribution **out);

// Frees a distribution handle (null is accepted).
//
// # Safety
// `dist` must come from [`schurcon_distribution_compute`], not yet freed.
void schurcon_distribution_free(struct SchurconDistribution *dist);

// Number of outcomes (diagrams) in the distribution.
//
// # Safety
// Valid, live handle and out-pointer.
enum SchurconStatus schurcon_distribution_len(const struct SchurconDistribution *dist, size_t *out);

// Reads outcome `index`: the diagram's `d` row lengths into `parts`, plus
// its probability and Bell yield in qubits. Any out-pointer may be null to
// skip that field.
//
// # Safety
// `parts`, when non-null, must point to `parts_cap` writable entries.
enum SchurconStatus schurcon_distribution_outcome(const struct SchurconDistribution *dist,
                                                  size_t index,
                                                  size_t *parts,
                                                  size_t parts_cap,
                                                  double *probability,
                                                  double *ebits);

// Expected Bell qubits per copy for `n` copies of the spectrum's state.
//
// # Safety
// Valid, live handle and out-pointer.
enum SchurconStatus schurcon_mean_ebits_per_copy(size_t n,
                                                 const struct SchurconSpectrum *spectrum,
                                                 double *out);

// Parametric failure exponent at rate `r_bits`; `side` is 0 for the low
// tail, 1 for the high tail.
//
// # Safety
// Valid, live handle and out-pointer.
enum SchurconStatus schurcon_exponent_parametric(double r_bits,
                                                 const struct SchurconSpectrum *spectrum,
                                                 int32_t side,
                                                 double *out);

// Primal (divergence-minimization) exponent at rate `r_bits`.
//
// # Safety
// Valid, live handle and out-pointer.
enum SchurconStatus schurcon_exponent_primal(double r_bits,
                                             const struct SchurconSpectrum *spectrum,
                                             int32_t side,
                                             double *out);

// Random-coding exponent at rate `r_bits` (needs `r <= H`).
//
// # Safety
// Valid, live handle and out-pointer.
enum SchurconStatus schurcon_exponent_random_coding(double r_bits,
                                                    const struct SchurconSpectrum *spectrum,
                                                    double *out);

// `log2` of the exact tail probability at `n` copies and rate `r_bits`.
//
// # Safety
// Valid, live handle and out-pointer.
enum SchurconStatus schurcon_tail_log2(size_t n,
                                       const struct SchurconSpectrum *spectrum,
                                       double r_bits,
                                       int32_t side,
                                       double *out);

// Draws one measurement outcome by the insertion-shape sampler and writes
// the diagram's `d` row lengths into `parts`.
//
// # Safety
// `parts` must point to `parts_cap` writable entries.
enum SchurconStatus schurcon_sample_shape(const struct SchurconSpectrum *spectrum,
                                          size_t n,
                                          uint64_t seed,
                                          size_t *parts,
                                          size_t parts_cap);

// Qubit and classical-bit cost of teleporting through a size-`bell_size`
// perfect pair.
//
// # Safety
// Out-pointers may be null to skip a field.
enum SchurconStatus schurcon_teleport_resources(size_t bell_size,
                                                double *qubits,
                                                double *classical_bits);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHURCON_H */
