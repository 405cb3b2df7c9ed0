#ifndef MOSTAR_MOSTAR_H
#define MOSTAR_MOSTAR_H

/* C interface to the Mostar index toolkit: graph construction and graph6
 * parsing, Mostar and edge Mostar indices, extremal-family builders,
 * isomorph-free enumeration, and the verification reports.
 *
 * Every function that can fail returns a mog_status; MOG_OK is zero. On
 * failure the thread-local message behind mog_last_error() describes the
 * problem. Strings returned through char** are heap-allocated and must be
 * released with mog_string_free; graphs with mog_graph_free.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mog_status {
    MOG_OK = 0,
    MOG_ERROR_INVALID_ARGUMENT = 1, /* null pointer or unknown name */
    MOG_ERROR_PARSE = 2,            /* malformed graph6; message has the byte offset */
    MOG_ERROR_DOMAIN = 3,           /* out of an operation's mathematical domain */
    MOG_ERROR_UNSUPPORTED = 4,      /* recognized but not provided */
    MOG_ERROR_NOMEM = 5,
    MOG_ERROR_INTERNAL = 6
} mog_status;

typedef struct mog_graph mog_graph;

/* Message for the most recent failure on this thread; never null. */
const char* mog_last_error(void);

void mog_graph_free(mog_graph* graph);
void mog_string_free(char* text);

mog_status mog_graph_from_graph6(const char* line, mog_graph** out);
mog_status mog_graph_to_graph6(const mog_graph* graph, char** out);
mog_status mog_canonical_graph6(const mog_graph* graph, char** out);

int mog_graph_order(const mog_graph* graph);
int mog_graph_size(const mog_graph* graph);

/* Indices are defined on connected graphs only. */
mog_status mog_mostar_index(const mog_graph* graph, long long* out);
mog_status mog_edge_mostar_index(const mog_graph* graph, long long* out);

/* CSV with header u,v,m_u,m_v,eq,psi and one row per edge. */
mog_status mog_edge_split_csv(const mog_graph* graph, char** out);

/* kind: P, C, S (by vertex count) or B, B1..B6 (by edge count). */
mog_status mog_make_family(const char* kind, int m, mog_graph** out);

/* Cycle of length r with m - r pendants at one cycle vertex. */
mog_status mog_make_smr(int m, int r, mog_graph** out);

/* Two hub vertices joined by internally disjoint paths of lengths l1, l2, l3. */
mog_status mog_make_theta(int l1, int l2, int l3, mog_graph** out);

/* Closed-form edge Mostar value of a B-family member of size m. */
mog_status mog_family_expected_edge_mostar(const char* kind, int m, long long* out);

/* Called once per graph6 line; return nonzero to stop enumeration early. */
typedef int (*mog_line_sink)(const char* line, void* user);

/* kind: tree, unicyclic, or bicyclic; size counts edges (a tree of size m
 * has m + 1 vertices). jobs <= 0 picks one worker per hardware thread;
 * output order is the same for every jobs value. */
mog_status mog_enumerate(const char* kind, int size, int jobs, mog_line_sink sink, void* user);

typedef struct mog_verify_options {
    int jobs;                /* <= 0 for auto */
    unsigned long long seed; /* shift-identity sampling */
    int trials;              /* <= 0 for the default of 200 */
    int budget;              /* joins size cap; <= 0 for the default of 9 */
} mog_verify_options;

/* what: bicyclic, unicyclic, cases, joins, or shifts. size is m for the
 * first three and ignored otherwise (joins reads options->budget, shifts
 * options->seed and options->trials). options may be null. */
mog_status mog_verify_json(const char* what, int size, const mog_verify_options* options,
                           char** out);

/* CSV summary of per-m reports; what: bicyclic, unicyclic, or cases. */
mog_status mog_verify_range_csv(const char* what, int from, int to,
                                const mog_verify_options* options, char** out);

/* CSV rows m,B,B5,diff with both edge Mostar values computed directly. */
mog_status mog_disprove_csv(int from, int to, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MOSTAR_MOSTAR_H */
