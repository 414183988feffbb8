/* C API for the task swapping planner library.
 *
 * All functions return a status code (TS_OK on success). String outputs are
 * heap-allocated JSON documents owned by the caller; release them with
 * ts_string_free. On failure, ts_last_error() returns a thread-local
 * description of the most recent error.
 *
 * Assignments are passed as arrays of n integers in one-line notation,
 * 1-based: source[i] is the task held by agent i+1.
 */
#ifndef TASKSWAP_TS_H
#define TASKSWAP_TS_H

#ifdef __cplusplus
extern "C" {
#endif

enum {
  TS_OK = 0,
  TS_ERR_PARSE = 2,      /* malformed input document or unknown name */
  TS_ERR_VALIDATION = 3, /* structurally valid but semantically wrong input */
  TS_ERR_CAP = 4,        /* oracle state-space cap exceeded */
  TS_ERR_INTERNAL = 5    /* invariant violation inside the library */
};

typedef struct ts_graph ts_graph;

/* topology_json: e.g. {"kind":"complete_bipartite","n":8,"k":3} or
 * {"kind":"tree","n":5,"edges":[[1,2],[2,3],[2,4],[4,5]]}. */
int ts_graph_create(const char* topology_json, ts_graph** out);
void ts_graph_free(ts_graph* g);
int ts_graph_size(const ts_graph* g);

/* Emits {"length":L,"swaps":[[a,b],...]}; with emit_states nonzero, adds
 * "states": the full trajectory from source to target inclusive. */
int ts_plan(const ts_graph* g, const int* source, const int* target, int n,
            int emit_states, char** json_out);

/* plan_json: {"swaps":[[a,b],...]} ("length" optional, checked if present).
 * Emits {"verdict":"OK"} or {"verdict":"FAIL","step":i,"reason":...} where
 * reason is "non-edge" or "endpoint-mismatch" and step is the 1-based index
 * of the first offending swap (length+1 for an endpoint mismatch). */
int ts_verify(const ts_graph* g, const int* source, const int* target, int n,
              const char* plan_json, char** json_out);

/* Exact BFS distance and one witness plan over the graph's generating set.
 * cap <= 0 selects the default cap (n <= 7). Emits
 * {"distance":D,"plan":{"length":D,"swaps":[...]}}. */
int ts_oracle(const ts_graph* g, const int* source, const int* target, int n,
              int cap, char** json_out);

/* family: "BS", "ST", "CT", "GST" (needs k), "MBS", or "HC". Emits the
 * computed diameter, reachable state count, and the expected closed form
 * when one is known. */
int ts_diameter(const char* family, int n, int k, int cap, char** json_out);

/* Emits {"h1":...,"h2":...,"f":...,"benefit":h1-h2-f,"desirable":...}. */
int ts_benefit(double h1, double h2, double f, char** json_out);

const char* ts_last_error(void);
void ts_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* TASKSWAP_TS_H */
