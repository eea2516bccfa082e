#include <string>

#include "doctest.h"
#include "raag/commands.hpp"
#include "raag/errors.hpp"
#include "raag/json_io.hpp"
#include "raagmod.h"

using namespace raag;

namespace {

struct CapiRun {
    raag_status status = RAAG_OK;
    std::string output;
    std::string error;
};

CapiRun via_capi(const std::string& graph, const std::string& structure, bool json_out,
                 bool dot_out, const std::string& sub, const std::string& args) {
    CapiRun r;
    raag_ctx* ctx = raag_ctx_new();
    REQUIRE(ctx != nullptr);
    if (!graph.empty()) REQUIRE(raag_ctx_load_graph(ctx, graph.c_str()) == RAAG_OK);
    if (!structure.empty()) REQUIRE(raag_ctx_set_structure(ctx, structure.c_str()) == RAAG_OK);
    REQUIRE(raag_ctx_set_output(ctx, json_out, dot_out) == RAAG_OK);
    char* out = nullptr;
    r.status = raag_run(ctx, sub.c_str(), args.empty() ? nullptr : args.c_str(), &out);
    r.error = raag_last_error(ctx);
    if (out) {
        r.output = out;
        raag_string_free(out);
    }
    raag_ctx_free(ctx);
    return r;
}

std::string direct(const std::string& graph, const std::string& structure, bool json_out,
                   bool dot_out, const std::string& sub, const std::string& args) {
    CommandContext ctx;
    if (!graph.empty()) ctx.graph = Graph::parse(graph);
    if (!structure.empty())
        ctx.structure = structure_from_json(*ctx.graph, json::parse(structure));
    ctx.json_output = json_out;
    ctx.dot_output = dot_out;
    return run_command(ctx, sub, args);
}

const char kPath[] = "vertices: a b c\nedges: a-b b-c";
const char kPair[] = "vertices: a b\nedges: a-b";
const char kFree2[] = "vertices: a b\nedges:";
const char kPairing[] = R"({"pairs":[["a","b"]]})";

}  // namespace

TEST_CASE("the C surface returns byte-identical output to the dispatcher") {
    struct Case {
        const char* graph;
        const char* structure;
        const char* sub;
        const char* args;
    };
    const Case cases[] = {
        {kPath, "", "dominance", ""},
        {kPath, "", "normalize", R"({"word":"b a b^-1"})"},
        {kFree2, "", "conj-length", R"({"word":"a b a^-1 b^-1 a"})"},
        {kFree2, "", "omega", ""},
        {kPath, "", "ia-gens", ""},
        {kPair, "", "verify-identities", ""},
        {kPair, "", "relations", ""},
        {kPair, kPairing, "qreduce", R"({"matrix":[[2,1],[1,1]]})"},
        {kPair, kPairing, "check-structure", ""},
        {kFree2, kPairing, "delta", ""},
        {kPair, kPairing, "stab-gens", ""},
        {kFree2, kPairing, "mod-gens", ""},
        {kPair, kPairing, "preserves",
         R"({"auto":{"factors":[{"kind":"inversion","vertex":"a"}]}})"},
    };
    for (auto& c : cases) {
        for (bool json_out : {false, true}) {
            CAPTURE(c.sub);
            CAPTURE(json_out);
            CapiRun r = via_capi(c.graph, c.structure, json_out, false, c.sub, c.args);
            CHECK(r.status == RAAG_OK);
            CHECK(r.error.empty());
            CHECK(r.output == direct(c.graph, c.structure, json_out, false, c.sub, c.args));
            CHECK(!r.output.empty());
        }
    }
}

TEST_CASE("DOT export flows through the C surface") {
    CapiRun r = via_capi(kFree2, kPairing, false, true, "delta", "");
    REQUIRE(r.status == RAAG_OK);
    CHECK(r.output.rfind("digraph delta {", 0) == 0);
    CHECK(r.output == direct(kFree2, kPairing, false, true, "delta", ""));
}

TEST_CASE("the C surface maps the error taxonomy to statuses") {
    CapiRun r = via_capi(kPair, "", false, false, "no-such-command", "");
    CHECK(r.status == RAAG_BAD_INPUT);
    CHECK(!r.error.empty());

    r = via_capi("", "", false, false, "normalize", R"({"word":"a"})");
    CHECK(r.status == RAAG_BAD_PRECONDITION);  // no graph loaded

    r = via_capi(kPair, "", false, false, "normalize", R"({"word":"zz"})");
    CHECK(r.status == RAAG_BAD_INPUT);

    r = via_capi(kPair, "", false, false, "normalize", "{not json");
    CHECK(r.status == RAAG_BAD_INPUT);
    CHECK(r.error.find("parse") != std::string::npos);

    r = via_capi(kPair, kPairing, false, false, "qreduce", R"({"matrix":[[2,1],[1,1],[0,0]]})");
    CHECK(r.status == RAAG_BAD_INPUT);  // not square

    r = via_capi(kPair, kPairing, false, false, "qreduce", R"({"matrix":[[2,0],[0,1]]})");
    CHECK(r.status == RAAG_BAD_PRECONDITION);  // scaling does not fix the form
}

TEST_CASE("caps plumb through and zero keeps the old value") {
    raag_ctx* ctx = raag_ctx_new();
    REQUIRE(raag_ctx_load_graph(ctx, kFree2) == RAAG_OK);
    REQUIRE(raag_ctx_set_structure(ctx, kPairing) == RAAG_OK);
    REQUIRE(raag_ctx_set_caps(ctx, 0, 2, 0, 0) == RAAG_OK);  // relator cap below |w0| = 4
    char* out = nullptr;
    CHECK(raag_run(ctx, "delta", nullptr, &out) == RAAG_CAP_EXCEEDED);
    CHECK(out == nullptr);
    REQUIRE(raag_ctx_set_caps(ctx, 0, 12, 0, 0) == RAAG_OK);
    CHECK(raag_run(ctx, "delta", nullptr, &out) == RAAG_OK);
    REQUIRE(out != nullptr);
    CHECK(std::string(out).find("vertices: 2") != std::string::npos);
    raag_string_free(out);
    CHECK(raag_ctx_set_caps(ctx, -1, 0, 0, 0) == RAAG_BAD_INPUT);
    raag_ctx_free(ctx);
}

TEST_CASE("loading a graph clears the structure") {
    raag_ctx* ctx = raag_ctx_new();
    REQUIRE(raag_ctx_load_graph(ctx, kPair) == RAAG_OK);
    REQUIRE(raag_ctx_set_structure(ctx, kPairing) == RAAG_OK);
    REQUIRE(raag_ctx_load_graph(ctx, kPair) == RAAG_OK);
    char* out = nullptr;
    CHECK(raag_run(ctx, "check-structure", nullptr, &out) == RAAG_BAD_PRECONDITION);
    CHECK(std::string(raag_last_error(ctx)).find("structure") != std::string::npos);
    raag_ctx_free(ctx);
}

TEST_CASE("null arguments never crash the C surface") {
    CHECK(raag_ctx_load_graph(nullptr, "x") == RAAG_BAD_INPUT);
    CHECK(std::string(raag_last_error(nullptr)) == "null context");
    raag_string_free(nullptr);
    raag_ctx* ctx = raag_ctx_new();
    CHECK(raag_ctx_load_graph(ctx, nullptr) == RAAG_BAD_INPUT);
    char* out = nullptr;
    CHECK(raag_run(ctx, nullptr, nullptr, &out) == RAAG_BAD_INPUT);
    CHECK(raag_run(ctx, "normalize", nullptr, nullptr) == RAAG_BAD_INPUT);
    raag_ctx_free(ctx);
}
