#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "raag/qreduce.hpp"
#include "raag/symplectic.hpp"

namespace raag {

struct Caps {
    int max_vertices = 8;           // graph size for the orbit construction
    size_t max_relator_len = 12;    // |w0| for the orbit construction
    size_t max_omega = 100000;      // graphic-with-signs enumeration bound
    size_t max_states = 1000000;    // cyclic-closure state bound
};

// The orbit graph of [w0] under Whitehead moves, restricted to minimal length.
struct DeltaGraph {
    std::vector<Word> verts;  // canonical cyclic representatives; verts[0] = [w0]
    struct Edge {
        int src = 0, dst = 0;
        bool graphic = false;  // move index below is into moves or type1
        int move = 0;
    };
    std::vector<Edge> edges;            // every minimal-length move application
    std::vector<OmegaMove> moves;       // Whitehead moves (type 2)
    std::vector<Automorphism> type1;    // graphic-with-signs automorphisms
    std::vector<char> in_dprime;        // member of the non-graphic component of [w0]

    int vertex_index(const Word& w) const;
};

DeltaGraph build_delta(const Structure& s, const Caps& caps = {});

// Spanning structure over the orbit graph: a tree of non-graphic edges over
// the component of [w0], each tree edge normalized so its move only touches
// letters over supp w0 (the split-off remainder must fix the source), plus one
// graphic edge into each vertex outside that component; alpha[v] carries
// [w0] to vertex v along the tree.
struct SpanningData {
    struct TreeEdge {
        int src = -1;
        bool graphic = false;
        OmegaMove move{};                  // normalized (A1, a) when non-graphic
        int type1_index = -1;              // when graphic
    };
    std::vector<TreeEdge> parent;          // src -1 at the root
    std::vector<Automorphism> alpha;       // per vertex
    std::vector<Automorphism> alpha_inv;   // cached inverses
};

SpanningData maximal_tree(const Structure& s, const DeltaGraph& d);

// A generator with provenance.
struct StabGenerator {
    std::string origin;  // "edge" | "kernel" | "arithmetic" | "inertia" |
                         // "adjusted" | "centralizer" | "coset"
    std::string name;
    Automorphism aut;
};

// Generators of the stabilizer of ([w0], Q) up to conjugacy: edge composites
// alpha_dst^-1 * move * alpha_src over qualifying edges, the kernel-type
// generators over supp Q, and the arithmetic-generator lifts.  Every element
// is verified to fix [w0] up to conjugacy and Q exactly.
std::vector<StabGenerator> stabilizer_generators(const Structure& s, const DeltaGraph& d,
                                                 const SpanningData& t);

// The inertia-type generators: transvections tau_a,b with b a positive letter
// over supp Q and vtx(a) dominating vtx(b), a any letter off vtx(b), plus
// inversions of supp Q vertices.  Each fixes w0 exactly.
std::vector<StabGenerator> si_generators(const Structure& s);

// Centralizer of a surface relator: inner conjugation by w0 itself plus the
// total conjugations by vertices adjacent to all of supp w0.  Preconditions:
// w0 nontrivial, not a proper power, and the non-commutation graph on its
// support connected.
std::vector<StabGenerator> centralizer_generators(const Structure& s);

// Generators of the subgroup fixing w0 exactly and Q: conjugacy-stabilizer
// generators adjusted by bounded-search conjugators, centralizer generators,
// and one representative per graphic coset that stabilizes the structure.
// Every element is verified to fix w0 exactly and Q under the wedge action.
std::vector<StabGenerator> mod_generators(const Structure& s, const Caps& caps = {});

}  // namespace raag
