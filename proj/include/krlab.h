#ifndef KRLAB_H
#define KRLAB_H

/* C interface to the exact-arithmetic affine crystal engine.
 *
 * Every function returns a status code; data comes back through out
 * parameters.  Strings handed out through char** are heap-allocated and must
 * be released with krlab_string_free.  Failure details are kept per thread
 * and readable through krlab_last_error until the next call on that thread.
 *
 * Affine types are spelled as in "A3~1", "A4~2" (family letter, rank of the
 * affine diagram, tilde, twisting order).  Implemented crystal models:
 * untwisted A tableaux and the even twisted virtual construction; other
 * families report KRLAB_UNSUPPORTED.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  KRLAB_OK = 0,          /* success; for verification: every assertion passed */
  KRLAB_FALSIFIED = 1,   /* a checked structural claim failed on an instance */
  KRLAB_ERROR = 2,       /* malformed input, integrity failure, or cap hit */
  KRLAB_UNSUPPORTED = 3, /* outside the implemented scope, by design */
} krlab_status;

/* message for the most recent failure on the calling thread; never NULL */
const char* krlab_last_error(void);

void krlab_string_free(char* s);

/* ---------- crystal handles ---------- */

typedef struct krlab_crystal krlab_crystal;

/* Builds the rectangular crystal B[r,s] of the given affine type and
 * generates its full graph.  cap = 0 selects the default node budget
 * (KRLAB_NODE_CAP environment variable, one million nodes otherwise). */
krlab_status krlab_crystal_new(const char* type, int r, int s, size_t cap,
                               krlab_crystal** out);
void krlab_crystal_free(krlab_crystal* c);

size_t krlab_crystal_size(const krlab_crystal* c);
/* graph exports; node order is the sorted display-label order, so repeated
 * runs emit identical bytes */
krlab_status krlab_crystal_json(const krlab_crystal* c, char** out);
krlab_status krlab_crystal_dot(const krlab_crystal* c, char** out);

/* ---------- verification suites ---------- */

/* Runs one named suite (wtilde, sigma, demazure, characters, paths, rmatrix,
 * axioms) with command-line style arguments; argc = 0 selects the default
 * instance grids.  *out receives the JSON report, also when the verdict is
 * KRLAB_FALSIFIED (some assertion failed). */
krlab_status krlab_verify(const char* suite, int argc, const char* const* argv,
                          char** out);

/* ---------- combinatorial R ---------- */

/* Image of an element of B[r1,s1] (x) B[r2,s2] under the exchange map,
 * cross-checked against the graph-isomorphism oracle.  Element syntax:
 * "LEFT*RIGHT" where each factor is a tableau literal "1,1/2,2" (rows top to
 * bottom, '/'-separated); for the even twisted family each factor is an
 * ambient pair "TAB@TAB".  element = NULL maps the distinguished anchor.
 * *out receives a JSON object with the image and the witnessing operator
 * words. */
krlab_status krlab_rmatrix(const char* type, int r1, int s1, int r2, int s2,
                           const char* element, size_t cap, char** out);

/* ---------- lowering words onto the classical components ---------- */

/* JSON list of the tabulated operator monomials for B[r,s], one entry per
 * classical component, each replayed on the crystal and checked to land on
 * the classically highest element of its shape. */
krlab_status krlab_paths(const char* type, int r, int s, size_t cap, char** out);

/* ---------- characters ---------- */

/* JSON object comparing the crystal's weight generating function with the
 * classically projected Demazure character it must equal. */
krlab_status krlab_character(const char* type, int r, int s, size_t cap, char** out);

#ifdef __cplusplus
}
#endif

#endif /* KRLAB_H */
