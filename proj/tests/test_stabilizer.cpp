#include "raag/stabilizer.hpp"

#include <deque>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "raag/errors.hpp"

using namespace raag;
using testutil::graph_from_mask;
using testutil::pair_count;

namespace {

Automorphism edge_auto(const Graph& g, const DeltaGraph& d, const DeltaGraph::Edge& e) {
    if (e.graphic) return d.type1[e.move];
    return make_whitehead2(g, d.moves[e.move].aset, d.moves[e.move].a);
}

void check_members(const Structure& s, const DeltaGraph& d,
                   const std::vector<StabGenerator>& gens, bool exact) {
    for (auto& sg : gens) {
        CHECK(!sg.aut.is_identity());
        if (exact)
            CHECK(sg.aut.apply(s.w0) == s.w0);
        else
            CHECK(cyclic_canonical(*s.g, sg.aut.apply(s.w0)) == d.verts[0]);
        CHECK(wedge_act(sg.aut.homology(), s.q) == s.q);
    }
}

}  // namespace

TEST_CASE("the orbit of a free commutator holds the class and its inverse") {
    Graph g = graph_from_mask(2, 0);
    Structure s = make_structure(g, {{0, 2}});
    DeltaGraph d = build_delta(s);
    REQUIRE(d.verts.size() == 2);
    CHECK(d.verts[0] == cyclic_canonical(g, s.w0));
    CHECK(d.vertex_index(cyclic_canonical(g, inverse(s.w0))) == 1);
    CHECK(d.vertex_index(Word{}) == -1);
    for (auto& w : d.verts) {
        CHECK(w.size() == s.w0.size());
        CHECK(support_mask(w) == support_mask(s.w0));
    }
    // The inverse class needs an orientation flip, which no non-graphic move
    // provides.
    REQUIRE(d.in_dprime.size() == 2);
    CHECK(d.in_dprime[0]);
    CHECK(!d.in_dprime[1]);
    for (auto& e : d.edges) {
        Automorphism a = edge_auto(g, d, e);
        CHECK(cyclic_canonical(g, a.apply(d.verts[e.src])) == d.verts[e.dst]);
    }
}

TEST_CASE("orbit construction enforces its caps") {
    Graph big = graph_from_mask(10, 0);
    std::vector<std::pair<letter, letter>> pairs;
    for (int i = 0; i < 5; ++i) pairs.emplace_back(pos_letter(2 * i), pos_letter(2 * i + 1));
    Structure sbig = make_structure(big, pairs);
    CHECK_THROWS_AS(build_delta(sbig), resource_error);

    Graph wide = graph_from_mask(8, 0);
    pairs.pop_back();
    Structure swide = make_structure(wide, pairs);
    CHECK_THROWS_AS(build_delta(swide), resource_error);  // |w0| = 16
}

TEST_CASE("a trivial relator gives a one-vertex orbit and arithmetic generators") {
    Graph g = graph_from_mask(2, 1);  // complete pair
    Structure s = make_structure(g, {{0, 2}});
    DeltaGraph d = build_delta(s);
    REQUIRE(d.verts.size() == 1);
    CHECK(d.verts[0].empty());
    for (auto& e : d.edges) {
        CHECK(e.src == 0);
        CHECK(e.dst == 0);
    }
    SpanningData t = maximal_tree(s, d);
    CHECK(t.parent[0].src == -1);
    CHECK(t.alpha[0].is_identity());

    auto gens = stabilizer_generators(s, d, t);
    REQUIRE(gens.size() == 3);
    for (auto& sg : gens) CHECK(sg.origin == "arithmetic");
    check_members(s, d, gens, false);

    auto mod = mod_generators(s);
    CHECK(mod.size() == 3);
    check_members(s, d, mod, true);
}

TEST_CASE("two commuting pairs in a complete graph lift the arithmetic set") {
    Graph g = graph_from_mask(4, (1u << pair_count(4)) - 1u);
    Structure s = make_structure(g, {{0, 2}, {4, 6}});
    DeltaGraph d = build_delta(s);
    REQUIRE(d.verts.size() == 1);
    SpanningData t = maximal_tree(s, d);
    auto gens = stabilizer_generators(s, d, t);
    CHECK(gens.size() == 14);
    for (auto& sg : gens) CHECK(sg.origin == "arithmetic");
    auto mod = mod_generators(s);
    CHECK(mod.size() == 14);
    check_members(s, d, mod, true);
}

TEST_CASE("the spanning structure reaches the flipped class through one graphic edge") {
    Graph g = graph_from_mask(2, 0);
    Structure s = make_structure(g, {{0, 2}});
    DeltaGraph d = build_delta(s);
    SpanningData t = maximal_tree(s, d);
    REQUIRE(t.parent.size() == 2);
    CHECK(t.parent[0].src == -1);
    CHECK(t.parent[1].src == 0);
    CHECK(t.parent[1].graphic);
    CHECK(cyclic_canonical(g, t.alpha[1].apply(s.w0)) == d.verts[1]);
    CHECK(t.alpha_inv[1].compose(t.alpha[1]).is_identity());
}

TEST_CASE("free-group stabilizer generators fix the class and use no form data") {
    Graph g = graph_from_mask(2, 0);
    Structure s = make_structure(g, {{0, 2}});
    DeltaGraph d = build_delta(s);
    SpanningData t = maximal_tree(s, d);
    auto gens = stabilizer_generators(s, d, t);
    REQUIRE(!gens.empty());
    check_members(s, d, gens, false);
    bool moved_homology = false;
    for (auto& sg : gens) {
        CHECK(sg.origin != "arithmetic");  // no form support at all
        if (!sg.aut.homology().is_identity()) moved_homology = true;
    }
    CHECK(moved_homology);
    CHECK(si_generators(s).empty());

    // Edge generators come from single moves here, so their factor chains sit
    // at constant conjugacy length: no peaks.
    for (auto& sg : gens) {
        std::vector<Automorphism> fs;
        for (auto it = sg.aut.factors.rbegin(); it != sg.aut.factors.rend(); ++it)
            fs.push_back(Automorphism::from_factors(g, {*it}));
        CHECK(is_peak_reduced(g, fs, s.w0));
    }
}

TEST_CASE("disjoint commuting pairs: kernel loops, arithmetic lifts, coset swap") {
    Graph g = Graph::parse("vertices: a b c d\nedges: a-b c-d");
    Structure s = make_structure(g, {{0, 2}, {4, 6}});
    CHECK(s.w0.empty());
    DeltaGraph d = build_delta(s);
    REQUIRE(d.verts.size() == 1);
    SpanningData t = maximal_tree(s, d);
    auto gens = stabilizer_generators(s, d, t);
    check_members(s, d, gens, false);
    int arithmetic = 0, conj_like = 0;
    for (auto& sg : gens) {
        if (sg.origin == "arithmetic") ++arithmetic;
        if (sg.aut.homology().is_identity()) ++conj_like;
    }
    CHECK(arithmetic == 6);  // two shears per pair, no cross maps, two sign flips
    CHECK(conj_like > 0);

    auto mod = mod_generators(s);
    check_members(s, d, mod, true);
    bool has_coset = false;
    for (auto& sg : mod)
        if (sg.origin == "coset") has_coset = true;
    CHECK(has_coset);
}

TEST_CASE("a mixed structure keeps its orbit small and its generators sound") {
    Graph g = Graph::parse("vertices: a b c d\nedges: a-b");
    Structure s = make_structure(g, {{0, 2}, {4, 6}});
    CHECK(support_mask(s.w0) == 0b1100u);
    DeltaGraph d = build_delta(s);
    REQUIRE(d.verts.size() == 2);
    CHECK(d.in_dprime[0]);
    CHECK(!d.in_dprime[1]);
    for (auto& w : d.verts) CHECK(support_mask(w) == 0b1100u);
    for (auto& e : d.edges) {
        Automorphism a = edge_auto(g, d, e);
        CHECK(cyclic_canonical(g, a.apply(d.verts[e.src])) == d.verts[e.dst]);
    }
    SpanningData t = maximal_tree(s, d);
    auto gens = stabilizer_generators(s, d, t);
    check_members(s, d, gens, false);
    int arithmetic = 0;
    for (auto& sg : gens)
        if (sg.origin == "arithmetic") ++arithmetic;
    CHECK(arithmetic == 3);  // two shears and one sign flip on the commuting pair

    auto mod = mod_generators(s);
    check_members(s, d, mod, true);
}

TEST_CASE("independent generators act only on the form support and fix the relator") {
    Graph g = Graph::parse("vertices: a b c d\nedges: a-b");
    Structure s = make_structure(g, {{0, 2}, {4, 6}});
    auto si = si_generators(s);
    REQUIRE(si.size() == 6);  // two multipliers with signs per target, two inversions
    int inversions = 0;
    bool breaks_form = false;
    for (auto& sg : si) {
        CHECK(sg.origin == "inertia");
        CHECK(sg.aut.apply(s.w0) == s.w0);
        if (sg.name.rfind("inv", 0) == 0) ++inversions;
        if (!(wedge_act(sg.aut.homology(), s.q) == s.q)) breaks_form = true;
    }
    CHECK(inversions == 2);
    CHECK(breaks_form);  // a single sign flip negates the pair's term
}

TEST_CASE("the centralizer of a surface relator is the relator and the common link") {
    Graph free2 = graph_from_mask(2, 0);
    Structure s2 = make_structure(free2, {{0, 2}});
    auto c2 = centralizer_generators(s2);
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].origin == "centralizer");
    CHECK(c2[0].aut.apply(s2.w0) == s2.w0);

    Graph join = Graph::parse("vertices: a b z w\nedges: a-z b-z a-w b-w z-w");
    Structure sj = make_structure(join, {{0, 2}, {4, 6}});
    CHECK(support_mask(sj.w0) == 0b0011u);
    auto cj = centralizer_generators(sj);
    CHECK(cj.size() == 3);  // the relator, then conjugation by z and by w
    for (auto& sg : cj) CHECK(sg.aut.apply(sj.w0) == sj.w0);
}

TEST_CASE("the centralizer rejects the unsupported shapes") {
    Graph c4 = Graph::parse("vertices: a b c d\nedges: a-c a-d b-c b-d");
    Structure s = make_structure(c4, {{0, 2}, {4, 6}});
    CHECK(s.w_pairs.size() == 2);
    CHECK_THROWS_AS(centralizer_generators(s), precondition_error);  // commuting halves

    Graph k2 = graph_from_mask(2, 1);
    Structure st = make_structure(k2, {{0, 2}});
    CHECK_THROWS_AS(centralizer_generators(st), precondition_error);  // trivial relator

    Graph free2 = graph_from_mask(2, 0);
    Structure sp = make_structure(free2, {{0, 2}});
    sp.w0 = normalize(free2, parse_word(free2, "a b a b"));
    CHECK_THROWS_AS(centralizer_generators(sp), precondition_error);  // proper power
}

TEST_CASE("relator-fixing output is exact on the free commutator") {
    Graph g = graph_from_mask(2, 0);
    Structure s = make_structure(g, {{0, 2}});
    DeltaGraph d = build_delta(s);
    auto mod = mod_generators(s);
    REQUIRE(!mod.empty());
    check_members(s, d, mod, true);
    std::set<std::string> origins;
    bool centralizer = false, moved_homology = false;
    for (auto& sg : mod) {
        origins.insert(sg.origin);
        if (sg.origin == "centralizer") centralizer = true;
        if (!sg.aut.homology().is_identity()) moved_homology = true;
    }
    CHECK(centralizer);
    CHECK(moved_homology);
    for (auto& o : origins)
        CHECK((o == "edge" || o == "kernel" || o == "arithmetic" || o == "adjusted" ||
               o == "centralizer" || o == "coset"));
}
