#include "raagmod.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "raag/commands.hpp"
#include "raag/errors.hpp"
#include "raag/json_io.hpp"

struct raag_ctx {
    raag::CommandContext inner;
    std::string last_error;
};

namespace {

// Runs `body`, capturing the error taxonomy into the context's status code and
// message so nothing ever unwinds across the C boundary.
template <typename F>
raag_status guarded(raag_ctx* ctx, F&& body) {
    if (!ctx) return RAAG_BAD_INPUT;
    ctx->last_error.clear();
    try {
        body();
        return RAAG_OK;
    } catch (const raag::input_error& e) {
        ctx->last_error = e.what();
        return RAAG_BAD_INPUT;
    } catch (const raag::precondition_error& e) {
        ctx->last_error = e.what();
        return RAAG_BAD_PRECONDITION;
    } catch (const raag::resource_error& e) {
        ctx->last_error = e.what();
        return RAAG_CAP_EXCEEDED;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return RAAG_BROKEN_INVARIANT;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

raag_ctx* raag_ctx_new(void) { return new (std::nothrow) raag_ctx(); }

void raag_ctx_free(raag_ctx* ctx) { delete ctx; }

raag_status raag_ctx_load_graph(raag_ctx* ctx, const char* text) {
    return guarded(ctx, [&] {
        if (!text) throw raag::input_error("graph text is null");
        ctx->inner.graph = raag::Graph::parse(text);
        ctx->inner.structure.reset();  // pairings are per graph
    });
}

raag_status raag_ctx_set_structure(raag_ctx* ctx, const char* json_text) {
    return guarded(ctx, [&] {
        if (!json_text) throw raag::input_error("structure JSON is null");
        const raag::Graph& g = ctx->inner.require_graph();
        raag::json j;
        try {
            j = raag::json::parse(json_text);
        } catch (const raag::json::parse_error& e) {
            throw raag::input_error(std::string("structure JSON does not parse: ") + e.what());
        }
        ctx->inner.structure = raag::structure_from_json(g, j);
        ctx->inner.structure->g = &*ctx->inner.graph;
    });
}

raag_status raag_ctx_set_caps(raag_ctx* ctx, int max_vertices, size_t max_relator_len,
                              size_t max_omega, size_t max_states) {
    return guarded(ctx, [&] {
        if (max_vertices < 0) throw raag::input_error("negative vertex cap");
        if (max_vertices) ctx->inner.caps.max_vertices = max_vertices;
        if (max_relator_len) ctx->inner.caps.max_relator_len = max_relator_len;
        if (max_omega) ctx->inner.caps.max_omega = max_omega;
        if (max_states) ctx->inner.caps.max_states = max_states;
    });
}

raag_status raag_ctx_set_output(raag_ctx* ctx, int json_output, int dot_output) {
    return guarded(ctx, [&] {
        ctx->inner.json_output = json_output != 0;
        ctx->inner.dot_output = dot_output != 0;
    });
}

raag_status raag_ctx_set_seed(raag_ctx* ctx, unsigned long long seed) {
    return guarded(ctx, [&] { ctx->inner.seed = seed; });
}

raag_status raag_run(raag_ctx* ctx, const char* subcommand, const char* args_json, char** out) {
    return guarded(ctx, [&] {
        if (!subcommand) throw raag::input_error("subcommand is null");
        if (!out) throw raag::input_error("output pointer is null");
        *out = nullptr;
        std::string result =
            raag::run_command(ctx->inner, subcommand, args_json ? args_json : "");
        *out = dup_string(result);
    });
}

void raag_string_free(char* s) { std::free(s); }

const char* raag_last_error(const raag_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

}  // extern "C"
