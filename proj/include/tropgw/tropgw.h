/*
 * tropgw - tropical super Gromov-Witten invariants
 *
 * C interface to the computation core. Every call that computes something
 * returns an opaque tropgw_result holding a status code and a JSON payload;
 * the caller frees it with tropgw_result_free. All arithmetic behind this
 * interface is exact (rationals and Laurent polynomials in the equivariant
 * character kappa), so identical calls produce byte-identical JSON.
 *
 * Status codes mirror the CLI exit codes:
 *   0  success
 *   1  domain error (mathematically invalid request)
 *   2  usage error (malformed input)
 *   3  internal error
 */

#ifndef TROPGW_H
#define TROPGW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define TROPGW_OK 0
#define TROPGW_ERR_DOMAIN 1
#define TROPGW_ERR_USAGE 2
#define TROPGW_ERR_INTERNAL 3

typedef struct tropgw_result tropgw_result;

/* Library version, e.g. "0.1.0". Static storage; do not free. */
const char* tropgw_version(void);

/* Short description of a status code. Static storage; do not free. */
const char* tropgw_strerror(int status);

int tropgw_result_status(const tropgw_result* result);

/* JSON payload: the subcommand document on success, or
 * {"error": <code name>, "detail": <message>} on failure.
 * Owned by the result; valid until tropgw_result_free. */
const char* tropgw_result_json(const tropgw_result* result);

void tropgw_result_free(tropgw_result* result);

/* Stable genus-0 dual graph types with legs 1..n (n >= 3). */
tropgw_result* tropgw_enumerate_graphs(int n, int trivalent_only);

/* Tropical psi-class product Psi_1^{k_1}...Psi_n^{k_n} on the moduli cone
 * complex; k has k_len = n entries. embed != 0 additionally returns the
 * weighted fan in Q^(n choose 2). strict_vertex_rule != 0 switches the facet
 * condition from val(V) = K(V) + 3 to the verbatim form K(V) = val(V) + 3. */
tropgw_result* tropgw_psi_product(int n, const int* k, size_t k_len, int embed,
                                  int strict_vertex_rule);

/* Super Gromov-Witten invariant of a point (n >= 3); show_terms != 0 lists
 * the per-composition contributions. */
tropgw_result* tropgw_sgw_point(int n, int show_terms);

/* Degree-1, 2-marked invariant of P1; audit != 0 includes the per-stratum
 * inverse-Euler-series terms. */
tropgw_result* tropgw_sgw_p1(int audit);

/* c1(Trop(O(m))) capped against the fundamental cycle of the fan of P1. */
tropgw_result* tropgw_chern_tp1(int m);

/* Balancing check of a weighted fan given as JSON (see README for the
 * schema). */
tropgw_result* tropgw_balance_check(const char* fan_json);

/* Membership of alpha*x + beta*y + r in the affine-section lattice of chart
 * `chart` (e.g. "U0y") for the twist m. r is "p/q" or NULL for 0. */
tropgw_result* tropgw_sections(const char* chart, int m, int alpha, int beta, const char* r);

/* Runs the full verification suite; payload lists one pass/fail entry per
 * criterion. Status is TROPGW_OK even when criteria fail; inspect
 * "all_passed". */
tropgw_result* tropgw_verify_all(void);

#ifdef __cplusplus
}
#endif

#endif /* TROPGW_H */
