#ifndef BTI_H
#define BTI_H

/* C interface to the bubble-tree instanton library.
 *
 * Status codes: 0 ok, 2 validation error, 3 not realizable,
 * 4 resource limit, 5 internal error.
 * Strings returned through out-parameters are heap-allocated and must
 * be released with bti_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

const char* bti_version(void);

void bti_string_free(char* s);

/* Run a named command ("cot-sum", "dim-orbifold", "dim-s4",
 * "austin-check", "enumerate-trees", "enumerate-o-trees",
 * "gluing-check", "cp2-demo") on a JSON request document. *response
 * receives the JSON response (also on error, as {"error": ...}). */
int bti_run(const char* command, const char* request_json, char** response);

/* Opaque weighted rooted tree handle. */
typedef struct bti_tree bti_tree;

/* Parse a canonical encoding like "0(1,2(1))". NULL on parse failure. */
bti_tree* bti_tree_parse(const char* encoding);
void bti_tree_free(bti_tree* t);

/* Canonical encoding of the tree; caller frees. */
char* bti_tree_canonical(const bti_tree* t);

/* 1 if the tree satisfies the bubble-tree conditions, 0 otherwise. */
int bti_tree_validate(const bti_tree* t);

long bti_tree_total_weight(const bti_tree* t);

/* Contract the edge (parent, child); returns a new handle or NULL if
 * the edge does not exist. */
bti_tree* bti_tree_contract(const bti_tree* t, int parent, int child);

/* 1 if t2 is reachable from t1 by edge contractions, else 0. */
int bti_tree_leq(const bti_tree* t1, const bti_tree* t2);

#ifdef __cplusplus
}
#endif

#endif /* BTI_H */
