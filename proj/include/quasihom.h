/*
 * quasihom C API: exact spectral analysis, Poincare-Dulac normal forms and
 * weighted homogeneous generator extraction for contracting polynomial maps.
 *
 * All objects are opaque handles; every entry point reports a qh_status.
 * Strings returned by accessors stay owned by the handle they came from and
 * remain valid until it is freed.
 */
#ifndef QUASIHOM_H
#define QUASIHOM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qh_status {
    QH_OK = 0,
    QH_ERROR_PARSE = 1,              /* malformed input or validation failure */
    QH_ERROR_NOT_CONTRACTING = 2,    /* an eigenvalue has modulus >= 1, or none exist */
    QH_ERROR_IRRATIONAL_SPECTRUM = 3,/* spectrum leaves the Gaussian rationals */
    QH_ERROR_NOT_INVARIANT = 4,      /* ideal not invariant / outside theorem reach */
    QH_ERROR_INTERNAL = 5,           /* internal invariant violation */
    QH_ERROR_VERIFY = 6              /* certificate failed re-verification */
} qh_status;

typedef struct qh_problem qh_problem;
typedef struct qh_result qh_result;

const char* qh_version(void);
const char* qh_status_name(qh_status status);

/* Parse a problem document (JSON text). NULL on failure; see qh_last_error(). */
qh_problem* qh_problem_parse(const char* text);
void qh_problem_free(qh_problem* problem);

/* Option overrides applied on top of the document's own options. */
void qh_problem_set_degree(qh_problem* problem, int degree);
/* comma-separated exponent vector, e.g. "5,0"; nonzero status on bad input */
qh_status qh_problem_set_class_bound(qh_problem* problem, const char* exponents);
/* options.output from the document, or NULL when absent */
const char* qh_problem_output_path(const qh_problem* problem);

/* Commands. Always return a result handle (NULL only on allocation failure);
 * inspect qh_result_status for the outcome. */
qh_result* qh_run_spectrum(const qh_problem* problem);
qh_result* qh_run_normal_form(const qh_problem* problem);
qh_result* qh_run_quasi_homogenize(const qh_problem* problem);
qh_result* qh_run_embed_check(const qh_problem* problem);

/* Full independent re-verification of a serialized certificate document. */
qh_result* qh_certify(const char* document_text);

qh_status qh_result_status(const qh_result* result);
const char* qh_result_summary(const qh_result* result);  /* human-readable lines */
const char* qh_result_document(const qh_result* result); /* canonical JSON ("" on error) */
const char* qh_result_error(const qh_result* result);    /* "" when QH_OK */
void qh_result_free(qh_result* result);

/* Message for the most recent qh_problem_parse failure on this thread. */
const char* qh_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* QUASIHOM_H */
