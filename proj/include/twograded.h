/* C interface of the twograded shared library: exact classification of
 * algebraic brackets for rank-6 distributions on 9-manifolds, and crossed
 * Dynkin diagram machinery for |2|-graded parabolic pairs.
 *
 * All functions returning tg_status leave a message retrievable through
 * tg_last_error() on failure. Strings returned through char** or char*
 * are heap-allocated; release them with tg_string_free(). Handles are
 * opaque; release them with their matching *_free call.
 */
#ifndef TWOGRADED_H
#define TWOGRADED_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tg_bracket tg_bracket;
typedef struct tg_report tg_report;

typedef enum {
    TG_OK = 0,
    TG_ERR_PARSE = 1,        /* malformed JSON */
    TG_ERR_SCHEMA = 2,       /* well-formed JSON violating the bracket schema */
    TG_ERR_MODE = 3,         /* exact/approx mode misuse */
    TG_ERR_SHAPE = 4,        /* matrix or index shape violation */
    TG_ERR_DOMAIN = 5,       /* singularities, ties, undetermined invariants */
    TG_ERR_PARAM = 6,        /* family constraints, bad flags, bad diagrams */
    TG_ERR_UNDETERMINED = 7, /* approx-mode result withheld near the tolerance */
    TG_ERR_INTERNAL = 8
} tg_status;

const char* tg_last_error(void);
void tg_string_free(char* s);

/* brackets ---------------------------------------------------------------- */
tg_status tg_bracket_parse_json(const char* json_text, tg_bracket** out);
tg_status tg_bracket_basic(int n, tg_bracket** out);       /* u_n, n in 1..3 */
tg_status tg_bracket_standard(tg_bracket** out);           /* the model bracket */
/* family in 1..7; params: comma-separated rationals, e.g. "1,2,4";
 * nilpotent_id indexes the printed catalog of families 3, 4, 6, or -1. */
tg_status tg_bracket_canonical(int family, const char* params, int nilpotent_id, tg_bracket** out);
tg_status tg_bracket_to_json(const tg_bracket* b, char** json_out);
/* float copy of an exact bracket (no-op on an approx one) */
tg_status tg_bracket_to_approx(const tg_bracket* b, tg_bracket** out);
void tg_bracket_free(tg_bracket* b);

/* classification ---------------------------------------------------------- */
tg_status tg_classify(const tg_bracket* b, double tol, tg_report** out);
tg_status tg_report_to_json(const tg_report* r, char** json_out);
tg_status tg_report_to_text(const tg_report* r, char** text_out);
int tg_report_family(const tg_report* r);          /* 1..7, or 0 = undetermined */
int tg_report_in_generic_set(const tg_report* r);  /* 1 when family is 1, 2 or 5 */
void tg_report_free(tg_report* r);

tg_status tg_normalize_unique(const tg_bracket* b, tg_bracket** out);
tg_status tg_sample_orbit(int family, const char* params, int nilpotent_id, int count, uint64_t seed,
                          char** json_array_out);

/* crossed diagrams -------------------------------------------------------- */
/* type_rank like "D4" or "E7"; format "json" or "text" */
tg_status tg_enumerate_two_graded(const char* type_rank, const char* format, char** out);
/* diagram like "D4:x34"; degree 1 or 2 */
tg_status tg_cohomology(const char* diagram, int degree, const char* format, char** out);
/* format "csv" or "json" */
tg_status tg_rank_table(int max_corank, int max_rank, const char* format, char** out);

/* acceptance suite: returns 0 when every criterion passes or is a documented
 * discrepancy, 1 otherwise; the per-criterion report is written to report_out */
int tg_verify(char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* TWOGRADED_H */
