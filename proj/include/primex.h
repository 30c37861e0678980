/*
 * primex — modular decomposition, prime bounds, and certified prime
 * extensions of simple graphs.
 *
 * C interface of the shared library. Graphs are opaque handles; every
 * function that can fail returns a px_status and leaves a human-readable
 * message in px_last_error(). Strings returned through out-parameters are
 * heap-allocated and must be released with px_string_free().
 */
#ifndef PRIMEX_H
#define PRIMEX_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct px_graph px_graph;

typedef enum px_status {
    PX_OK = 0,
    PX_ERR_PARSE = 1,    /* malformed graph6 / edge-list / certificate text */
    PX_ERR_DOMAIN = 2,   /* a documented precondition does not hold */
    PX_ERR_LIMIT = 3,    /* an exhaustive operation refused its size guard */
    PX_ERR_VERIFY = 4,   /* an internal consistency check failed (bug signal) */
    PX_ERR_ARGUMENT = 5, /* null pointer or out-of-range argument */
    PX_ERR_INTERNAL = 6  /* unexpected failure */
} px_status;

typedef enum px_format {
    PX_FORMAT_HUMAN = 0,
    PX_FORMAT_JSON = 1,
    PX_FORMAT_DOT = 2 /* decomposition tree only */
} px_format;

typedef enum px_extend_mode {
    PX_EXTEND_OPTIMAL = 0, /* exactly prime_bound(g) added vertices */
    PX_EXTEND_STABLE = 1   /* added vertices form a stable set */
} px_extend_mode;

const char* px_version(void);

/* Message describing the most recent failure on this thread. */
const char* px_last_error(void);

void px_string_free(char* s);

/* --- graph lifecycle ----------------------------------------------------- */

/* Autodetects the format: a leading "n " line means edge list, else graph6. */
px_status px_graph_parse(const char* text, px_graph** out);
px_status px_graph_parse_graph6(const char* text, px_graph** out);
px_status px_graph_parse_edge_list(const char* text, px_graph** out);
px_status px_graph_format_graph6(const px_graph* g, char** out);
px_status px_graph_complement(const px_graph* g, px_graph** out);

/* -1 on a null handle. */
int px_graph_order(const px_graph* g);
long px_graph_edge_count(const px_graph* g);
/* 1, 0, or -1 on bad arguments. */
int px_graph_adjacent(const px_graph* g, int u, int v);

void px_graph_free(px_graph* g);

/* --- analysis ------------------------------------------------------------ */

/* 1, 0, or -1 on a null handle. */
int px_graph_is_prime(const px_graph* g);

/* Structure report: modular clique/stability numbers, isolated counts, the
 * maximal clique/stable modules, prime modules, residue, the prime bound
 * with its case tag, and the generic bounds. */
px_status px_analyze(const px_graph* g, px_format format, char** out);

/* Modular decomposition tree (human, JSON, or DOT). */
px_status px_mdtree(const px_graph* g, px_format format, char** out);

/* Minimum number of added vertices over all prime extensions. case_tag, if
 * non-null, receives the dispatch case name. */
px_status px_prime_bound(const px_graph* g, int* value, char** case_tag);

/* --- constructions ------------------------------------------------------- */

/* Builds a certified prime extension. verify_cap bounds the order up to
 * which the result is re-checked for primality (pass 0 for the default).
 * PX_ERR_VERIFY is returned, with the certificate still written, when the
 * host could not be verified prime. */
px_status px_extend(const px_graph* g, px_extend_mode mode, int verify_cap,
                    px_format format, char** out);

/* Re-validates a certificate JSON produced by px_extend: host parses, the
 * added count matches the recomputed bound of the base graph, the host is
 * prime, and optionally the exhaustive search agrees. ok_out receives 1/0. */
px_status px_certificate_verify(const char* cert_json, int with_oracle, int verify_cap,
                                px_format format, char** out, int* ok_out);

/* --- ground truth -------------------------------------------------------- */

/* Exhaustive minimal prime extension search up to p_cap added vertices. */
px_status px_oracle_prime_bound(const px_graph* g, int p_cap, px_format format, char** out);

/* Runs a named cross-check over every labelled graph of the given order.
 * Checks: "formula-vs-oracle", "tree-vs-bruteforce",
 * "construction-certification", "q-extension-contract",
 * "complement-symmetry". failures_out receives the failure count. */
px_status px_sweep(int order, const char* check, int jobs, px_format format, char** out,
                   long* failures_out);

#ifdef __cplusplus
}
#endif

#endif /* PRIMEX_H */
