#include "raag/commands.hpp"

#include <iomanip>
#include <sstream>
#include <utility>

#include "raag/errors.hpp"
#include "raag/ia_kernel.hpp"
#include "raag/json_io.hpp"
#include "raag/qreduce.hpp"

namespace raag {

const Graph& CommandContext::require_graph() const {
    if (!graph) throw precondition_error("no graph loaded");
    return *graph;
}

const Structure& CommandContext::require_structure() const {
    if (!structure) throw precondition_error("no structure loaded");
    return *structure;
}

namespace {

json parse_args(const std::string& args_json) {
    if (args_json.empty()) return json::object();
    json j;
    try {
        j = json::parse(args_json);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("argument JSON does not parse: ") + e.what());
    }
    if (!j.is_object()) throw input_error("arguments must be a JSON object");
    return j;
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw input_error(std::string("missing argument '") + name + "'");
    return *it;
}

Word word_arg(const Graph& g, const json& j) {
    if (j.is_string()) return parse_word(g, j.get<std::string>());
    if (!j.is_array()) throw input_error("a word is a string or an array of letters");
    Word w;
    for (auto& s : j) w.push_back(static_cast<char>(letter_from_string(g, s.get<std::string>())));
    return normalize(g, w);
}

std::string letter_set_text(const Graph& g, uint64_t aset) {
    std::string out = "{";
    bool first = true;
    for (letter l = 0; l < 2 * g.n(); ++l) {
        if (!(aset >> l & 1ull)) continue;
        if (!first) out += ",";
        out += letter_to_string(g, l);
        first = false;
    }
    return out + "}";
}

std::string move_text(const Graph& g, const OmegaMove& m) {
    return "(" + letter_set_text(g, m.aset) + "," + letter_to_string(g, m.a) + ")";
}

std::string wedge_text(const Graph& g, const WedgeForm& w) {
    if (w.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [ij, c] : w.coef) {
        if (!first) out << " + ";
        if (c == -1)
            out << "-";
        else if (c != 1)
            out << c << " ";
        out << "[" << g.name(ij.first) << "]^[" << g.name(ij.second) << "]";
        first = false;
    }
    return out.str();
}

std::string render(const CommandContext& ctx, const json& j, const std::string& text) {
    if (ctx.json_output) return j.dump(2) + "\n";
    return text;
}

std::string report_text(const IdentityReport& r) {
    std::ostringstream out;
    size_t width = 4;
    for (auto& l : r.lines) width = std::max(width, l.name.size());
    out << std::left << std::setw(static_cast<int>(width)) << "name"
        << "  instances  passed  failed  skipped\n";
    for (auto& l : r.lines)
        out << std::left << std::setw(static_cast<int>(width)) << l.name << "  " << std::right
            << std::setw(9) << l.instances << "  " << std::setw(6) << l.passed << "  "
            << std::setw(6) << l.failed << "  " << std::setw(7) << l.skipped << "\n";
    for (auto& n : r.notes) out << "note: " << n << "\n";
    out << (r.all_passed() ? "all passed\n" : "FAILURES\n");
    return out.str();
}

json generator_entry(const Graph& g, const std::string& origin, const std::string& name,
                     const Automorphism& a) {
    json e;
    if (!origin.empty()) e["origin"] = origin;
    e["name"] = name;
    e["images"] = json::object();
    for (int v = 0; v < g.n(); ++v) e["images"][g.name(v)] = word_to_json(g, a.images[v]);
    return e;
}

std::string cmd_dominance(CommandContext& ctx, const json&) {
    const Graph& g = ctx.require_graph();
    json j;
    j["strict"] = json::array();
    for (auto& [u, v] : g.strict_dominations()) j["strict"].push_back({g.name(u), g.name(v)});
    j["classes"] = json::array();
    std::ostringstream text;
    text << "strict dominations:\n";
    for (auto& [u, v] : g.strict_dominations())
        text << "  " << g.name(u) << " >= " << g.name(v) << "\n";
    text << "domination classes:\n";
    for (auto& c : g.domination_classes()) {
        json cj;
        cj["members"] = json::array();
        text << "  {";
        for (size_t i = 0; i < c.members.size(); ++i) {
            cj["members"].push_back(g.name(c.members[i]));
            text << (i ? "," : "") << g.name(c.members[i]);
        }
        cj["kind"] = c.kind;
        j["classes"].push_back(std::move(cj));
        text << "} " << c.kind << "\n";
    }
    return render(ctx, j, text.str());
}

std::string cmd_normalize(CommandContext& ctx, const json& args) {
    const Graph& g = ctx.require_graph();
    Word w = word_arg(g, field(args, "word"));
    json j;
    j["word"] = word_to_json(g, w);
    j["formatted"] = format_word(g, w);
    return render(ctx, j, format_word(g, w) + "\n");
}

std::string cmd_conj_length(CommandContext& ctx, const json& args) {
    const Graph& g = ctx.require_graph();
    Word w = word_arg(g, field(args, "word"));
    Word c = cyclic_canonical(g, w, ctx.caps.max_states);
    json j;
    j["length"] = c.size();
    j["canonical"] = word_to_json(g, c);
    j["formatted"] = format_word(g, c);
    std::ostringstream text;
    text << "length: " << c.size() << "\ncanonical: " << format_word(g, c) << "\n";
    return render(ctx, j, text.str());
}

std::string cmd_omega(CommandContext& ctx, const json&) {
    const Graph& g = ctx.require_graph();
    auto moves = enumerate_whitehead_moves(g, ctx.caps.max_omega);
    auto type1 = enumerate_type1(g, ctx.caps.max_omega);
    json j;
    j["move_count"] = moves.size();
    j["type1_count"] = type1.size();
    j["moves"] = json::array();
    std::ostringstream text;
    text << "type 2 moves: " << moves.size() << "\ntype 1 automorphisms: " << type1.size()
         << "\n";
    for (auto& m : moves) {
        json mj;
        mj["a"] = letter_to_string(g, m.a);
        mj["set"] = json::array();
        for (letter l = 0; l < 2 * g.n(); ++l)
            if (m.aset >> l & 1ull) mj["set"].push_back(letter_to_string(g, l));
        mj["long_range"] = whitehead_long_range(g, m.aset, m.a);
        mj["short_range"] = whitehead_short_range(g, m.aset, m.a);
        j["moves"].push_back(std::move(mj));
        text << "  " << move_text(g, m);
        if (whitehead_long_range(g, m.aset, m.a)) text << " long";
        if (whitehead_short_range(g, m.aset, m.a)) text << " short";
        text << "\n";
    }
    return render(ctx, j, text.str());
}

std::string cmd_apply(CommandContext& ctx, const json& args) {
    const Graph& g = ctx.require_graph();
    Automorphism a = automorphism_from_json(g, field(args, "auto"));
    Word w = word_arg(g, field(args, "word"));
    Word img = a.apply(w);
    json j;
    j["image"] = word_to_json(g, img);
    j["formatted"] = format_word(g, img);
    return render(ctx, j, format_word(g, img) + "\n");
}

std::string cmd_ia_gens(CommandContext& ctx, const json&) {
    const Graph& g = ctx.require_graph();
    auto gens = iaut_generators(g);
    json j;
    j["count"] = gens.size();
    j["generators"] = json::array();
    std::ostringstream text;
    text << "generators: " << gens.size() << "\n";
    for (auto& na : gens) {
        json e = generator_entry(g, "", na.name, na.aut);
        e["kind"] = na.kind;
        j["generators"].push_back(std::move(e));
        text << "  " << na.name << "  (" << na.kind << ")\n";
    }
    return render(ctx, j, text.str());
}

std::string cmd_verify_identities(CommandContext& ctx, const json&) {
    IdentityReport r = verify_rewriting_identities(ctx.require_graph());
    return render(ctx, identity_report_to_json(r), report_text(r));
}

std::string cmd_relations(CommandContext& ctx, const json& args) {
    const Graph& g = ctx.require_graph();
    uint32_t zmask = g.all_mask();
    if (args.contains("z")) {
        zmask = 0;
        for (auto& name : args["z"]) zmask |= 1u << g.vertex_index(name.get<std::string>());
    }
    IdentityReport r = check_presentation_relations(g, zmask);
    return render(ctx, identity_report_to_json(r), report_text(r));
}

std::string cmd_qreduce(CommandContext& ctx, const json& args) {
    const Structure& s = ctx.require_structure();
    const Graph& g = *s.g;
    IMat m = matrix_from_json(field(args, "matrix"));
    QFactorization f = q_reduce(s, m);
    json j;
    j["verified"] = f.verified;
    j["factors"] = json::array();
    std::ostringstream text;
    text << "verified: " << (f.verified ? "yes" : "no") << "\nfactors: " << f.factors.size()
         << "\n";
    for (auto& qf : f.factors) {
        j["factors"].push_back(qfactor_to_json(g, qf));
        text << "  " << qf.kind << "(" << letter_to_string(g, qf.a);
        if (qf.kind == "cross") text << "," << letter_to_string(g, qf.b);
        text << ")^" << qf.pow << "\n";
    }
    return render(ctx, j, text.str());
}

std::string delta_dot(const Graph& g, const DeltaGraph& d) {
    std::ostringstream out;
    out << "digraph delta {\n  rankdir=LR;\n";
    for (size_t i = 0; i < d.verts.size(); ++i)
        out << "  v" << i << " [label=\"" << format_word(g, d.verts[i]) << "\""
            << (d.in_dprime[i] ? ", penwidth=2" : "") << "];\n";
    for (auto& e : d.edges) {
        out << "  v" << e.src << " -> v" << e.dst << " [label=\"";
        if (e.graphic)
            out << "sigma#" << e.move << "\", style=dashed";
        else
            out << move_text(g, d.moves[e.move]) << "\"";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string cmd_delta(CommandContext& ctx, const json&) {
    const Structure& s = ctx.require_structure();
    const Graph& g = *s.g;
    DeltaGraph d = build_delta(s, ctx.caps);
    if (ctx.dot_output) return delta_dot(g, d);
    json j;
    j["vertex_count"] = d.verts.size();
    j["edge_count"] = d.edges.size();
    j["vertices"] = json::array();
    for (auto& w : d.verts) j["vertices"].push_back(format_word(g, w));
    j["in_dprime"] = json::array();
    for (char b : d.in_dprime) j["in_dprime"].push_back(b != 0);
    j["edges"] = json::array();
    for (auto& e : d.edges) {
        json ej;
        ej["src"] = e.src;
        ej["dst"] = e.dst;
        ej["graphic"] = e.graphic;
        ej["label"] = e.graphic ? "sigma#" + std::to_string(e.move) : move_text(g, d.moves[e.move]);
        j["edges"].push_back(std::move(ej));
    }
    std::ostringstream text;
    text << "vertices: " << d.verts.size() << "\nedges: " << d.edges.size() << "\n";
    for (size_t i = 0; i < d.verts.size(); ++i)
        text << "  [" << i << "] " << format_word(g, d.verts[i])
             << (d.in_dprime[i] ? "  (core)" : "") << "\n";
    return render(ctx, j, text.str());
}

std::string generator_listing(const CommandContext& ctx, const Graph& g,
                              const std::vector<StabGenerator>& gens) {
    json j;
    j["count"] = gens.size();
    j["generators"] = json::array();
    std::ostringstream text;
    text << "generators: " << gens.size() << "\n";
    for (auto& sg : gens) {
        j["generators"].push_back(generator_entry(g, sg.origin, sg.name, sg.aut));
        text << "  " << sg.origin << ": " << sg.name << "\n";
    }
    return render(ctx, j, text.str());
}

std::string cmd_stab_gens(CommandContext& ctx, const json&) {
    const Structure& s = ctx.require_structure();
    DeltaGraph d = build_delta(s, ctx.caps);
    SpanningData t = maximal_tree(s, d);
    return generator_listing(ctx, *s.g, stabilizer_generators(s, d, t));
}

std::string cmd_mod_gens(CommandContext& ctx, const json&) {
    const Structure& s = ctx.require_structure();
    return generator_listing(ctx, *s.g, mod_generators(s, ctx.caps));
}

std::string cmd_check_structure(CommandContext& ctx, const json& args) {
    const Graph& g = ctx.require_graph();
    Structure local;
    const Structure* s;
    if (args.contains("pairs")) {
        local = structure_from_json(g, args);
        s = &local;
    } else {
        s = &ctx.require_structure();
    }
    json j = structure_to_json(*s);
    std::ostringstream text;
    text << "k: " << s->k() << "\nw0: " << format_word(g, s->w0)
         << "\nq: " << wedge_text(g, s->q) << "\n";
    return render(ctx, j, text.str());
}

std::string cmd_preserves(CommandContext& ctx, const json& args) {
    const Structure& s = ctx.require_structure();
    Automorphism a = automorphism_from_json(*s.g, field(args, "auto"));
    PreservationCheck pc = preserves_structure(a, s);
    json j;
    j["w_fixed"] = pc.w_fixed;
    j["q_fixed"] = pc.q_fixed;
    j["both"] = pc.both();
    std::ostringstream text;
    text << "w fixed: " << (pc.w_fixed ? "yes" : "no")
         << "\nq fixed: " << (pc.q_fixed ? "yes" : "no") << "\n";
    return render(ctx, j, text.str());
}

}  // namespace

std::string run_command(CommandContext& ctx, const std::string& name,
                        const std::string& args_json) {
    json args = parse_args(args_json);
    if (name == "dominance") return cmd_dominance(ctx, args);
    if (name == "normalize") return cmd_normalize(ctx, args);
    if (name == "conj-length") return cmd_conj_length(ctx, args);
    if (name == "omega") return cmd_omega(ctx, args);
    if (name == "apply") return cmd_apply(ctx, args);
    if (name == "ia-gens") return cmd_ia_gens(ctx, args);
    if (name == "verify-identities") return cmd_verify_identities(ctx, args);
    if (name == "relations") return cmd_relations(ctx, args);
    if (name == "qreduce") return cmd_qreduce(ctx, args);
    if (name == "delta") return cmd_delta(ctx, args);
    if (name == "stab-gens") return cmd_stab_gens(ctx, args);
    if (name == "mod-gens") return cmd_mod_gens(ctx, args);
    if (name == "check-structure") return cmd_check_structure(ctx, args);
    if (name == "preserves") return cmd_preserves(ctx, args);
    throw input_error("unknown subcommand '" + name + "'");
}

}  // namespace raag
