/*
 * weblab C API: tableaux, webs, skein expansions, partial orders and the
 * Specht-to-web transition matrix for rectangular two- and three-row shapes.
 *
 * All functions return a status code; WEBLAB_OK is zero. Strings returned
 * through `char **` are heap-allocated and must be released with
 * weblab_free(). A context is bound to one shape and is not thread-safe;
 * independent contexts may be used from different threads.
 */
#ifndef WEBLAB_H
#define WEBLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int32_t weblab_status;

#define WEBLAB_OK 0
#define WEBLAB_E_INVALID 1    /* bad argument (shape, index, position) */
#define WEBLAB_E_MALFORMED 2  /* unparsable tableau or word */
#define WEBLAB_E_DOMAIN 3     /* balance / prefix condition violated */
#define WEBLAB_E_OVERFLOW 4   /* coefficient left the 64-bit range */
#define WEBLAB_E_CAPACITY 5   /* configured memory budget exceeded */
#define WEBLAB_E_INTERNAL 6   /* invariant violation; report a bug */

typedef struct weblab_context weblab_context;

const char *weblab_version(void);

/* Last error detail for calls on this context (empty string if none). */
const char *weblab_last_error(const weblab_context *ctx);

weblab_status weblab_context_create(int32_t rows, int32_t cols, weblab_context **out);
void weblab_context_destroy(weblab_context *ctx);

void weblab_free(char *s);

int64_t weblab_tableau_count(weblab_context *ctx);

/* "1,3/2,5/4,6" <-> canonical index <-> "+0+-0-" */
weblab_status weblab_tableau_index(weblab_context *ctx, const char *text, int64_t *out);
weblab_status weblab_tableau_text(weblab_context *ctx, int64_t index, char **out);
weblab_status weblab_tableau_word(weblab_context *ctx, int64_t index, char **out);
weblab_status weblab_word_index(weblab_context *ctx, const char *word, int64_t *out);
weblab_status weblab_tableau_rank(weblab_context *ctx, int64_t index, int32_t *out);

/* Emitters; all outputs are deterministic bytes. */
weblab_status weblab_enumerate_csv(weblab_context *ctx, char **out);
weblab_status weblab_enumerate_json(weblab_context *ctx, char **out);
weblab_status weblab_web_json(weblab_context *ctx, int64_t index, char **out);
weblab_status weblab_web_dot(weblab_context *ctx, int64_t index, char **out);
weblab_status weblab_poset_json(weblab_context *ctx, char **out);

/* order: "tableau" or "shadow" */
weblab_status weblab_hasse_dot(weblab_context *ctx, const char *order, char **out);
weblab_status weblab_order_leq(weblab_context *ctx, const char *order, int64_t a, int64_t b,
                               int32_t *out);

/* Expansion of the transposition (i, i+1) applied to a basis web. */
weblab_status weblab_action_json(weblab_context *ctx, int32_t i, int64_t index, char **out);

weblab_status weblab_transition_csv(weblab_context *ctx, char **out);
weblab_status weblab_transition_json(weblab_context *ctx, char **out);

/* Dominance scan over all three-row tableaux with n columns. */
weblab_status weblab_scan(int32_t n, int32_t threads, char **summary_json, char **witness_csv);

/* Acceptance suite. suite: "all" or one check name; max_n 0 means full
 * depth. Renders one line per check into `log`, the full report into
 * `report_json`, and sets *passed. */
weblab_status weblab_verify(int32_t max_n, const char *suite, int32_t threads, int32_t stretch,
                            char **log, char **report_json, int32_t *passed);

#ifdef __cplusplus
}
#endif

#endif /* WEBLAB_H */
