#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "raagmod.h"

namespace {

void usage(std::FILE* to) {
    std::fputs(
        "usage: raagmod [options] <subcommand> [args-json]\n"
        "\n"
        "subcommands: dominance normalize conj-length omega apply ia-gens\n"
        "             verify-identities relations qreduce delta stab-gens\n"
        "             mod-gens check-structure preserves\n"
        "\n"
        "options:\n"
        "  --graph FILE        load the defining graph from FILE (text or JSON)\n"
        "  --graph-text TEXT   inline graph, e.g. \"vertices: a b\\nedges: a-b\"\n"
        "  --structure JSON    pairing, e.g. '{\"pairs\":[[\"a\",\"b\"]]}'\n"
        "  --pairs LIST        pairing shorthand, e.g. \"a b, c d\"\n"
        "  --word W            shorthand for args '{\"word\": \"W\"}'\n"
        "  --json              machine output\n"
        "  --dot               DOT output (delta)\n"
        "  --cap-vertices N    orbit vertex cap\n"
        "  --cap-relator N     orbit relator length cap\n"
        "  --cap-omega N       move enumeration cap\n"
        "  --cap-states N      search state cap\n"
        "  --seed N            seed for sampled subcommands\n",
        to);
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// "a b, c d" -> {"pairs":[["a","b"],["c","d"]]}
std::string pairs_to_json(const std::string& list) {
    std::string out = "{\"pairs\":[";
    std::string item;
    bool first = true;
    std::stringstream pairs(list);
    std::string chunk;
    while (std::getline(pairs, chunk, ',')) {
        std::stringstream words(chunk);
        std::vector<std::string> ws;
        std::string w;
        while (words >> w) ws.push_back(w);
        if (ws.size() != 2) {
            std::fprintf(stderr, "error: a pair is two letters, got \"%s\"\n", chunk.c_str());
            std::exit(1);
        }
        if (!first) out += ",";
        out += "[\"" + json_escape(ws[0]) + "\",\"" + json_escape(ws[1]) + "\"]";
        first = false;
    }
    return out + "]}";
}

int fail(raag_ctx* ctx, raag_status st) {
    std::fprintf(stderr, "error: %s\n", raag_last_error(ctx));
    raag_ctx_free(ctx);
    return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
    std::string graph_text, structure_json, word, subcommand, args_json;
    long long cap_vertices = 0, cap_relator = 0, cap_omega = 0, cap_states = 0;
    unsigned long long seed = 0;
    bool json_out = false, dot_out = false, have_seed = false;

    auto need_value = [&](int& i) -> std::string {
        if (i + 1 >= argc) {
            std::fprintf(stderr, "error: %s needs a value\n", argv[i]);
            std::exit(1);
        }
        return argv[++i];
    };

    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--help" || arg == "-h") {
            usage(stdout);
            return 0;
        } else if (arg == "--graph") {
            std::ifstream in(need_value(i));
            if (!in) {
                std::fprintf(stderr, "error: cannot read graph file\n");
                return 1;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            graph_text = buf.str();
        } else if (arg == "--graph-text") {
            // Shells pass "\n" through literally; accept it as a newline.
            graph_text = need_value(i);
            for (size_t p = 0; (p = graph_text.find("\\n", p)) != std::string::npos;)
                graph_text.replace(p, 2, "\n");
        } else if (arg == "--structure") {
            structure_json = need_value(i);
        } else if (arg == "--pairs") {
            structure_json = pairs_to_json(need_value(i));
        } else if (arg == "--word") {
            word = need_value(i);
        } else if (arg == "--json") {
            json_out = true;
        } else if (arg == "--dot") {
            dot_out = true;
        } else if (arg == "--cap-vertices") {
            cap_vertices = std::atoll(need_value(i).c_str());
        } else if (arg == "--cap-relator") {
            cap_relator = std::atoll(need_value(i).c_str());
        } else if (arg == "--cap-omega") {
            cap_omega = std::atoll(need_value(i).c_str());
        } else if (arg == "--cap-states") {
            cap_states = std::atoll(need_value(i).c_str());
        } else if (arg == "--seed") {
            seed = std::strtoull(need_value(i).c_str(), nullptr, 10);
            have_seed = true;
        } else if (!arg.empty() && arg[0] == '-') {
            std::fprintf(stderr, "error: unknown option %s\n", arg.c_str());
            usage(stderr);
            return 1;
        } else if (subcommand.empty()) {
            subcommand = arg;
        } else if (args_json.empty()) {
            args_json = arg;
        } else {
            std::fprintf(stderr, "error: unexpected argument %s\n", arg.c_str());
            return 1;
        }
    }
    if (subcommand.empty()) {
        usage(stderr);
        return 1;
    }
    if (!word.empty()) {
        if (!args_json.empty()) {
            std::fprintf(stderr, "error: give either args JSON or --word, not both\n");
            return 1;
        }
        args_json = "{\"word\":\"" + json_escape(word) + "\"}";
    }

    raag_ctx* ctx = raag_ctx_new();
    if (!ctx) {
        std::fprintf(stderr, "error: out of memory\n");
        return 3;
    }
    raag_status st;
    if (!graph_text.empty())
        if ((st = raag_ctx_load_graph(ctx, graph_text.c_str())) != RAAG_OK) return fail(ctx, st);
    if (!structure_json.empty())
        if ((st = raag_ctx_set_structure(ctx, structure_json.c_str())) != RAAG_OK)
            return fail(ctx, st);
    if (cap_vertices || cap_relator || cap_omega || cap_states)
        if ((st = raag_ctx_set_caps(ctx, static_cast<int>(cap_vertices),
                                    static_cast<size_t>(cap_relator),
                                    static_cast<size_t>(cap_omega),
                                    static_cast<size_t>(cap_states))) != RAAG_OK)
            return fail(ctx, st);
    if ((st = raag_ctx_set_output(ctx, json_out ? 1 : 0, dot_out ? 1 : 0)) != RAAG_OK)
        return fail(ctx, st);
    if (have_seed)
        if ((st = raag_ctx_set_seed(ctx, seed)) != RAAG_OK) return fail(ctx, st);

    char* out = nullptr;
    st = raag_run(ctx, subcommand.c_str(), args_json.empty() ? nullptr : args_json.c_str(), &out);
    if (st != RAAG_OK) return fail(ctx, st);
    std::fputs(out, stdout);
    raag_string_free(out);
    raag_ctx_free(ctx);
    return 0;
}
