/* sweedler — exact-arithmetic toolkit for comodules over the Sweedler coring
 * A (x) A, noncommutative descent data, the braided monoidal structure they
 * carry, and the Yang-Baxter operators they produce.
 *
 * C interface of the shared library. Objects are opaque handles created and
 * destroyed here; bulk data crosses the boundary as JSON text in the same
 * formats the CLI reads and writes. Every function returns a status code;
 * swd_last_error() describes the most recent failure on the calling thread.
 *
 * Returned strings are heap-allocated; release them with swd_string_free().
 */

#ifndef SWEEDLER_H
#define SWEEDLER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum swd_status {
    SWD_OK = 0,
    /* a verifier ran and reported failures (the report JSON has details) */
    SWD_VERIFY_FAILED = 1,
    /* malformed input: JSON, scalar strings, builtin names, shapes */
    SWD_INVALID_INPUT = 2,
    /* anything else (allocation, internal invariant) */
    SWD_INTERNAL = 3
} swd_status;

typedef struct swd_algebra swd_algebra;
typedef struct swd_comodule swd_comodule;
typedef struct swd_descent swd_descent;
typedef struct swd_operator swd_operator;

const char* swd_version(void);

/* Message for the last failing call on this thread; empty string if none. */
const char* swd_last_error(void);

void swd_string_free(char* s);

/* ---- algebras ------------------------------------------------------- */

/* spec: builtin name ("kn:2", "mat:3", "upper:2"), a file path, or inline
 * JSON. field: "Q" or "Fp:<prime>"; builtin names are instantiated over it. */
swd_status swd_algebra_create(const char* spec, const char* field, swd_algebra** out);
void swd_algebra_destroy(swd_algebra* a);

swd_status swd_algebra_to_json(const swd_algebra* a, char** json_out);

/* Associativity and unit laws. SWD_OK when all pass, SWD_VERIFY_FAILED
 * otherwise; *report_json gets the per-check report either way. */
swd_status swd_algebra_check(const swd_algebra* a, char** report_json);

/* ---- comodules and descent data ------------------------------------- */

/* spec: "regular", "zero", "free:<n>", "rmatrix", a file path, or inline
 * JSON ({"dim":..., "rho":..., "right":[...], "left":[...] optional}). */
swd_status swd_comodule_create(const swd_algebra* a, const char* spec, swd_comodule** out);
void swd_comodule_destroy(swd_comodule* c);

swd_status swd_comodule_to_json(const swd_comodule* c, char** json_out);

/* Counit, coassociativity and colinearity axioms; with check_yd != 0 also the
 * Yetter-Drinfeld compatibilities. The report includes the bimodule laws. */
swd_status swd_comodule_verify(const swd_comodule* c, int check_yd, char** report_json);

/* spec: "regular", "free:<n>", a file path, or inline JSON with "g". */
swd_status swd_descent_create(const swd_algebra* a, const char* spec, swd_descent** out);
void swd_descent_destroy(swd_descent* d);

swd_status swd_descent_to_json(const swd_descent* d, char** json_out);
swd_status swd_descent_verify(const swd_descent* d, char** report_json);

/* ---- monoidal structure --------------------------------------------- */

/* V (x)_A W: {"dim", "kept", "proj", "sect", "rho"} for the canonical
 * quotient. */
swd_status swd_tensor(const swd_comodule* v, const swd_comodule* w, char** json_out);

/* Braiding and its inverse between the tensor quotients:
 * {"forward", "backward", "dim_vw", "dim_wv"}. */
swd_status swd_braiding(const swd_comodule* v, const swd_comodule* w, char** json_out);

/* what: "hexagon" (needs v and w plus the unit, all triples over {A,V,W}),
 * "naturality" (canonical probe maps against v), or "unit" (unit
 * constraints for v). w may be NULL except for "hexagon". */
swd_status swd_braided_check(const swd_comodule* v, const swd_comodule* w, const char* what,
                             char** report_json);

/* ---- Yang-Baxter operators ------------------------------------------ */

/* from: "comodule" (Omega(v (x) w) = w0 (x) v0 w1 v1), "yd"
 * (w0 (x) w1 v), or "rmatrix" (the matrix-unit R-matrix; the comodule's
 * algebra must be mat:<n> and the operator acts on V = A). */
swd_status swd_operator_build(const swd_comodule* c, const char* from, swd_operator** out);

/* Operator of the coaction rho(a) = x^1 (x) x^2 a on V = A, for a grouplike
 * element of A (x) A. x_spec: "trivial", or a JSON array of dim(A)^2 scalar
 * strings (inline or a file path). */
swd_status swd_operator_build_grouplike(const swd_algebra* a, const char* x_spec, swd_operator** out);

/* Parses an exported operator file ({"dim", "omega", "provenance", ...}). */
swd_status swd_operator_from_json(const char* json_text, swd_operator** out);
void swd_operator_destroy(swd_operator* op);

/* check_qybe/check_cube select which reports to run; cube needs the source
 * comodule (pass the one the operator was built from, or NULL to skip). */
swd_status swd_operator_check(const swd_operator* op, const swd_comodule* source, int check_qybe,
                              int check_cube, char** report_json);

/* Export format: {"dim", "omega", "provenance", "qybe", "cube"}; the two
 * booleans reflect checks run at export time (cube only for comodule-built
 * operators). */
swd_status swd_operator_to_json(const swd_operator* op, const swd_comodule* source, char** json_out);

/* ---- property suite -------------------------------------------------- */

/* profile: "quick" or "full". JSON: {"pass": bool, "criteria": [{"id",
 * "title", "pass", "checks": [...]}]}. SWD_VERIFY_FAILED when any criterion
 * fails. */
swd_status swd_suite_run(const char* profile, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* SWEEDLER_H */
