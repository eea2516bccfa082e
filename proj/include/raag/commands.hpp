#pragma once

#include <optional>
#include <string>

#include "raag/stabilizer.hpp"

namespace raag {

// Shared request context for the command dispatcher: a graph, an optional
// structure, caps, and output switches.  The CLI and the C API both populate
// one of these and call run_command, so their outputs are identical.
struct CommandContext {
    std::optional<Graph> graph;
    std::optional<Structure> structure;  // rebuilt against *graph
    Caps caps;
    unsigned long long seed = 0;
    bool json_output = false;
    bool dot_output = false;

    const Graph& require_graph() const;
    const Structure& require_structure() const;
};

// Dispatch a subcommand with JSON-encoded arguments; returns the rendered
// output (text table, JSON document, or DOT, per the context switches).
// Throws the usual error taxonomy.
std::string run_command(CommandContext& ctx, const std::string& name,
                        const std::string& args_json);

}  // namespace raag
