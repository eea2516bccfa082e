/* C interface to the RAAG symplectic-structure library.
 *
 * Usage: create a context, load a graph (and optionally a structure), then
 * dispatch subcommands by name with JSON-encoded arguments.  Results are
 * returned as newly allocated strings the caller frees with
 * raag_string_free.  All functions return a raag_status; on failure
 * raag_last_error(ctx) holds a message valid until the next call on the same
 * context.
 */
#ifndef RAAGMOD_H
#define RAAGMOD_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct raag_ctx raag_ctx;

typedef enum raag_status {
    RAAG_OK = 0,
    RAAG_BAD_INPUT = 1,
    RAAG_BAD_PRECONDITION = 2,
    RAAG_BROKEN_INVARIANT = 3,
    RAAG_CAP_EXCEEDED = 4,
} raag_status;

raag_ctx* raag_ctx_new(void);
void raag_ctx_free(raag_ctx* ctx);

/* Graph text format ("vertices: ...\nedges: ...") or JSON. */
raag_status raag_ctx_load_graph(raag_ctx* ctx, const char* text);

/* JSON: {"pairs": [["a","b"], ...]} with optional sign suffixes on letters. */
raag_status raag_ctx_set_structure(raag_ctx* ctx, const char* json_text);

/* Caps; zero keeps the current value. */
raag_status raag_ctx_set_caps(raag_ctx* ctx, int max_vertices, size_t max_relator_len,
                              size_t max_omega, size_t max_states);

/* Output switches and RNG seed for sampled subcommands. */
raag_status raag_ctx_set_output(raag_ctx* ctx, int json_output, int dot_output);
raag_status raag_ctx_set_seed(raag_ctx* ctx, unsigned long long seed);

/* Dispatch a subcommand ("normalize", "omega", "mod-gens", ...) with a JSON
 * argument object (NULL means {}); *out receives the rendered result. */
raag_status raag_run(raag_ctx* ctx, const char* subcommand, const char* args_json, char** out);

void raag_string_free(char* s);

/* Message for the most recent failure on this context ("" if none). */
const char* raag_last_error(const raag_ctx* ctx);

#ifdef __cplusplus
}
#endif

#endif /* RAAGMOD_H */
