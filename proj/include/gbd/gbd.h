/* gbd.h
 *
 * C interface to the Groebner basis detection library. All objects are
 * opaque handles released with the matching *_free function. Functions that
 * can fail return a gbd_status; on failure gbd_last_error() describes the
 * problem for the calling thread.
 */
#ifndef GBD_GBD_H
#define GBD_GBD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GBD_BUILDING_LIBRARY)
#    define GBD_API __declspec(dllexport)
#  else
#    define GBD_API __declspec(dllimport)
#  endif
#else
#  define GBD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gbd_status {
  GBD_OK = 0,
  GBD_ERR_NULL_ARGUMENT = 1,
  GBD_ERR_PARSE = 2,
  GBD_ERR_INVALID_ARGUMENT = 3,
  GBD_ERR_CAP_EXCEEDED = 4,
  GBD_ERR_INTERNAL = 5
} gbd_status;

typedef enum gbd_mode {
  GBD_MODE_ZERO_DIM = 0,      /* GBD for zero-dimensional ideals, subset algorithm */
  GBD_MODE_SGBD = 1,          /* pairwise coprime leading terms */
  GBD_MODE_BRUTE = 2,         /* exhaustive GBD */
  GBD_MODE_BRUTE_ZERO_DIM = 3 /* exhaustive GBD with zero-dimensionality */
} gbd_mode;

typedef struct gbd_system gbd_system;
typedef struct gbd_packing gbd_packing;
typedef struct gbd_report gbd_report;

GBD_API const char* gbd_version(void);
GBD_API const char* gbd_status_name(gbd_status status);
/* Message of the last failed call on this thread; "" if none. */
GBD_API const char* gbd_last_error(void);
GBD_API void gbd_string_free(char* s);

/* Polynomial systems in the "vars ..." text format. */
GBD_API gbd_status gbd_system_parse(const char* text, gbd_system** out);
GBD_API void gbd_system_free(gbd_system* system);
GBD_API size_t gbd_system_num_vars(const gbd_system* system);
GBD_API size_t gbd_system_num_polys(const gbd_system* system);
/* Canonical text; release with gbd_string_free. */
GBD_API gbd_status gbd_system_to_text(const gbd_system* system, char** out);
GBD_API gbd_status gbd_system_random(size_t vars, size_t polys, size_t max_terms, uint32_t max_exponent,
                                     uint64_t seed, gbd_system** out);

/* Decision procedures. The report verdict is 1 for yes, 0 for no. */
GBD_API gbd_status gbd_detect(const gbd_system* system, gbd_mode mode, uint64_t cap, gbd_report** out);
/* weights: comma-separated positive rationals, one per variable. Verdict is
 * 1 iff the system is a Groebner basis under the order. */
GBD_API gbd_status gbd_verify(const gbd_system* system, const char* weights, gbd_report** out);
/* targets: semicolon-separated monomials, one per polynomial, each in that
 * polynomial's support. Verdict is 1 iff some weight order realizes them. */
GBD_API gbd_status gbd_order_solve(const gbd_system* system, const char* targets, gbd_report** out);
/* Adds every monomial of degree 2*degree+1. degree 0 infers it from the
 * first polynomial. */
GBD_API gbd_status gbd_elevate(const gbd_system* system, size_t degree, gbd_system** out);

/* Set packing instances. */
GBD_API gbd_status gbd_packing_parse(const char* text, gbd_packing** out);
GBD_API void gbd_packing_free(gbd_packing* packing);
/* Homogeneous encoding of the given degree; 0 means size cap + 1. */
GBD_API gbd_status gbd_packing_encode(const gbd_packing* packing, size_t degree, gbd_system** out);
GBD_API gbd_status gbd_packing_solve(const gbd_packing* packing, uint64_t cap, gbd_report** out);

GBD_API int gbd_report_verdict(const gbd_report* report);
/* Both strings are owned by the report. */
GBD_API const char* gbd_report_json(const gbd_report* report);
GBD_API const char* gbd_report_text(const gbd_report* report);
GBD_API void gbd_report_free(gbd_report* report);

#ifdef __cplusplus
}
#endif

#endif /* GBD_GBD_H */
