#ifndef VKH_H
#define VKH_H

#pragma once

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum VkhStatus {
  VKH_STATUS_OK = 0,
  VKH_STATUS_NULL_POINTER = 1,
  VKH_STATUS_INVALID_UTF8 = 2,
  VKH_STATUS_PARSE = 3,
  VKH_STATUS_DISCONNECTED = 4,
  VKH_STATUS_NOT_COLORABLE = 5,
  VKH_STATUS_NOT_A_KNOT = 6,
  VKH_STATUS_TOO_LARGE = 7,
  VKH_STATUS_INTERNAL = 8,
  VKH_STATUS_OTHER = 9,
} VkhStatus;

/**
 * Opaque diagram handle.
 */
typedef struct VkhDiagram VkhDiagram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a signed Gauss code into a new handle stored in `*out`.
 *
 * # Safety
 * `code` must be a nul-terminated string and `out` a valid pointer.
 */
enum VkhStatus vkh_diagram_parse(const char *code, struct VkhDiagram **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `d` must come from `vkh_diagram_parse` and not be freed twice.
 */
void vkh_diagram_free(struct VkhDiagram *d);

/**
 * Number of classical crossings, or 0 for a null handle.
 *
 * # Safety
 * `d` must be null or a live handle.
 */
size_t vkh_diagram_crossings(const struct VkhDiagram *d);

/**
 * Normalized Gauss code.
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
enum VkhStatus vkh_diagram_code(const struct VkhDiagram *d, char **out);

/**
 * Genus of the supporting surface.
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
enum VkhStatus vkh_genus(const struct VkhDiagram *d, size_t *out);

/**
 * Signature pair under the normalized coloring.
 *
 * # Safety
 * `d` must be a live handle; both out-pointers must be valid.
 */
enum VkhStatus vkh_signatures(const struct VkhDiagram *d,
                              int64_t *sigma_xi_star,
                              int64_t *sigma_xi);

/**
 * Rasmussen invariant of a colorable knot diagram.
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
enum VkhStatus vkh_rasmussen(const struct VkhDiagram *d, int64_t *out);

/**
 * Khovanov polynomial as text, e.g. "1/q^9t^3+1/q^5t^2+1/q^3+1/q".
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
enum VkhStatus vkh_khovanov(const struct VkhDiagram *d, char **out);

/**
 * Unnormalized Jones polynomial from the state sum.
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
enum VkhStatus vkh_bracket(const struct VkhDiagram *d, char **out);

/**
 * The full invariants report as JSON.
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
enum VkhStatus vkh_invariants_json(const struct VkhDiagram *d, char **out);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void vkh_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next failing call on the same thread.
 */
const char *vkh_last_error(void);

/**
 * Static description of a status code.
 */
const char *vkh_status_str(enum VkhStatus s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VKH_H */
