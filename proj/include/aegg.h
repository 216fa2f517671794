/*
 * aegg -- e-graphs as hypergraphs with operator-closed equivalence, with a
 * DPO-based saturation engine and property-checking campaigns.
 *
 * All payloads are UTF-8 strings (JSON or s-expression text). Strings
 * returned through out-parameters are owned by the caller and must be
 * released with aegg_string_free. Graph handles are opaque and must be
 * released with aegg_graph_free. Functions return AEGG_OK on success; on
 * AEGG_ERROR the message is available via aegg_last_error (thread-local).
 */

#ifndef AEGG_H
#define AEGG_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aegg_status {
  AEGG_OK = 0,
  AEGG_ERROR = 1,
  AEGG_LIMIT = 2, /* saturation stopped by a limit */
  AEGG_FAIL = 3   /* a predicate or campaign reported a failure */
} aegg_status;

/* A labelled hypergraph with equivalence, its signature, and an optional
 * root class. */
typedef struct aegg_graph aegg_graph;

const char* aegg_last_error(void);
void aegg_string_free(char* s);
void aegg_graph_free(aegg_graph* g);

/* Parses a term over the signature ("op NAME ARITY" lines) into its e-graph
 * representation; with max_share nonzero, fuses equal subterms into the
 * maximally shared form. */
aegg_status aegg_parse_term(const char* signature_text, const char* term_text,
                            int max_share, aegg_graph** out);

aegg_status aegg_graph_from_json(const char* signature_text,
                                 const char* json_text, aegg_graph** out);
aegg_status aegg_graph_to_json(const aegg_graph* g, char** json_out);
aegg_status aegg_graph_to_dot(const aegg_graph* g, char** dot_out);

/* predicate: "term-graph", "e-hypergraph", "egg" or "acyclic".
 * Returns AEGG_OK when it holds, AEGG_FAIL when it does not; either way the
 * verdict JSON is produced. */
aegg_status aegg_check(const aegg_graph* g, const char* predicate,
                       char** verdict_json_out);

/* cls: "mono", "regular", "pb" or "T". The morphism JSON carries "edges",
 * "nodes" and optionally "classes" pair lists. */
aegg_status aegg_check_morphism(const aegg_graph* dom, const aegg_graph* cod,
                                const char* morphism_json, const char* cls,
                                char** verdict_json_out);

/* Runs equality saturation in place. match_class: "any", "mono" or "pb"
 * (NULL for the default "any"). Returns AEGG_OK on a fixpoint and
 * AEGG_LIMIT when a limit tripped; the report JSON is produced in both
 * cases. The handle's root class is transported along the rewrites. */
aegg_status aegg_saturate(aegg_graph* g, const char* rules_text,
                          uint64_t max_iters, uint64_t max_classes,
                          uint64_t max_edges, const char* match_class,
                          char** report_json_out);

/* Minimum-cost term from a class. root_class -1 uses the graph's root (or
 * the unique class feeding no edge). cost_json maps symbols to positive
 * integer costs; NULL means unit costs. */
aegg_status aegg_extract(const aegg_graph* g, int64_t root_class,
                         const char* cost_json, char** term_out);

/* Property-checking campaigns over randomly generated instances.
 * kind: "stability" (Pb-pushout stability), "stability-regular" (the same
 * campaign with the Pb constraint relaxed to regular monos), "vk"
 * (Reg-Van-Kampen biconditional), "kernel" (kernel-pair lemmas),
 * "closure" (pushouts along closed Pb subobjects preserve the e-condition),
 * or "counterexample" (the fixed instability cube). Returns AEGG_OK when no
 * failures were found (for "counterexample": when the cube behaves as
 * expected), AEGG_FAIL otherwise. */
aegg_status aegg_lab(const char* kind, uint64_t trials, uint64_t seed,
                     uint32_t max_size, char** report_json_out);

#ifdef __cplusplus
}
#endif

#endif /* AEGG_H */
