#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "raag/word.hpp"

using namespace raag;
using namespace testutil;

namespace {
Graph path3() { return Graph::parse("vertices: a b c\nedges: a-b b-c\n"); }
Graph free2() { return Graph::parse("vertices: a b\n"); }
Graph square() { return Graph::parse("vertices: a b c d\nedges: a-b b-c c-d d-a\n"); }
}  // namespace

TEST_CASE("word parsing and formatting") {
    Graph g = path3();
    CHECK(parse_word(g, "a b^-1 c") == wletters({0, 3, 4}));
    CHECK(parse_word(g, "1") == Word{});
    CHECK(parse_word(g, "a^3") == wletters({0, 0, 0}));
    CHECK(parse_word(g, "a^-2") == wletters({1, 1}));
    CHECK(parse_word(g, "[a,c]") == normalize(g, wletters({0, 4, 1, 5})));
    CHECK(format_word(g, wletters({0, 3, 4})) == "a b^-1 c");
    CHECK(format_word(g, Word{}) == "1");
    CHECK_THROWS_AS(parse_word(g, "q"), input_error);
    CHECK_THROWS_AS(parse_word(g, "a^x"), input_error);
    CHECK_THROWS_AS(parse_word(g, "[a,b"), input_error);
}

TEST_CASE("normalize removes separated cancelling pairs") {
    Graph g = path3();
    // b commutes with both a and c, so a b a^-1 reduces past b only when the
    // letters commute: a-b adjacent means b a^-1 can swap.
    CHECK(normalize(g, parse_word(g, "a b a^-1")) == parse_word(g, "b"));
    // a and c do not commute with each other but both commute with b.
    CHECK(normalize(g, parse_word(g, "a c a^-1 c^-1")) != Word{});
    CHECK(normalize(g, parse_word(g, "c b c^-1")) == parse_word(g, "b"));
    // No reduction in the free group.
    Graph f = free2();
    CHECK(normalize(f, wletters({0, 2, 1})).size() == 3);
    CHECK(normalize(f, wletters({0, 1})) == Word{});
}

TEST_CASE("normalize picks the least shuffle") {
    Graph g = path3();
    // c b: the pair commutes, normal form starts with the smaller letter.
    CHECK(normalize(g, wletters({4, 2})) == wletters({2, 4}));
    // b a: commute as well.
    CHECK(normalize(g, wletters({2, 0})) == wletters({0, 2}));
    // c a: no edge, order stays.
    CHECK(normalize(g, wletters({4, 0})) == wletters({4, 0}));
}

TEST_CASE("normal form is a complete invariant: oracle cross-check") {
    // On every graph with 3 vertices and words of length up to 4: two words
    // have equal normal forms exactly when the rewrite-search oracle proves
    // them equal as group elements.
    for (unsigned mask = 0; mask < 8; ++mask) {
        Graph g = graph_from_mask(3, mask);
        std::vector<Word> words{Word{}};
        std::vector<Word> frontier{Word{}};
        for (int len = 0; len < 3; ++len) {
            std::vector<Word> next;
            for (auto& w : frontier)
                for (letter l = 0; l < 6; ++l) {
                    Word w2 = w;
                    w2.push_back(static_cast<char>(l));
                    next.push_back(w2);
                    words.push_back(w2);
                }
            frontier = std::move(next);
        }
        std::mt19937_64 rng(mask * 977 + 5);
        std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
        for (int trial = 0; trial < 120; ++trial) {
            const Word& u = words[pick(rng)];
            const Word& v = words[pick(rng)];
            bool same = normalize(g, u) == normalize(g, v);
            CHECK(same == oracle_equal_elements(g, u, v));
        }
    }
}

TEST_CASE("normalize is idempotent and never lengthens") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_graph(rng, 5);
        Word w = random_word(rng, g, 10);
        Word n1 = normalize(g, w);
        CHECK(n1.size() <= w.size());
        CHECK(normalize(g, n1) == n1);
        // Normal form of w * w^-1 is the identity.
        CHECK(mul(g, w, inverse(w)) == Word{});
    }
}

TEST_CASE("normal form is the least member of its shuffle class") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(rng, 4);
        Word w = normalize(g, random_word(rng, g, 6));
        auto cls = oracle_shuffle_class(g, w);
        CHECK(*cls.begin() == w);
        // Every member normalizes to w.
        for (auto& s : cls) CHECK(normalize(g, s) == w);
    }
}

TEST_CASE("multiplication is associative and respects inverses") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(rng, 4);
        Word a = random_word(rng, g, 5), b = random_word(rng, g, 5), c = random_word(rng, g, 5);
        CHECK(mul(g, mul(g, a, b), c) == mul(g, a, mul(g, b, c)));
        CHECK(mul(g, inverse(b), inverse(a)) == normalize(g, inverse(mul(g, a, b))));
    }
}

TEST_CASE("support and exponent sums") {
    Graph g = path3();
    Word w = parse_word(g, "a c^-1 a c^-1 c^-1");
    CHECK(support_mask(w) == 0b101u);
    auto e = exponent_sums(g, w);
    CHECK(e == std::vector<long long>{2, 0, -3});
}

TEST_CASE("cyclic closure finds seam cancellations") {
    Graph f = free2();
    // a b a^-1 is conjugate to b; the closure must restart at length 1.
    Word w = parse_word(f, "a b a^-1");
    CHECK(cyclic_canonical(f, w) == parse_word(f, "b"));
    CHECK(conjugacy_length(f, w) == 1);
    // a b is already cyclically reduced.
    CHECK(cyclic_canonical(f, parse_word(f, "b a")) == parse_word(f, "a b"));
}

TEST_CASE("cyclic canonical is a conjugacy invariant: oracle cross-check") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng, 4);
        Word w = random_word(rng, g, 5);
        Word c = random_word(rng, g, 3);
        // Conjugates share the canonical representative.
        CHECK(cyclic_canonical(g, w) == cyclic_canonical(g, conjugate(g, w, c)));
    }
    // Non-conjugate pairs get distinct representatives (checked by the
    // bounded brute-force conjugator oracle on a fixed graph).
    Graph g = square();
    std::vector<Word> pool;
    for (int t = 0; t < 12; ++t) pool.push_back(random_word(rng, g, 4));
    for (auto& u : pool)
        for (auto& v : pool) {
            bool same = cyclic_canonical(g, u) == cyclic_canonical(g, v);
            if (same) continue;  // positive direction covered above
            CHECK(!oracle_conjugate(g, u, v, 2));
        }
}

TEST_CASE("find_conjugator returns a witness") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng, 4);
        Word base = cyclic_canonical(g, random_word(rng, g, 6));
        if (base.empty()) continue;
        Word c = random_word(rng, g, 3);
        Word moved = conjugate(g, base, c);
        auto u = find_conjugator(g, moved, base, 2 * base.size() + 2 * c.size() + 2);
        REQUIRE(u.has_value());
        CHECK(conjugate(g, moved, *u) == base);
    }
    Graph f = free2();
    CHECK(!find_conjugator(f, parse_word(f, "a"), parse_word(f, "b"), 10).has_value());
}

TEST_CASE("surface relator recognition: basic shapes") {
    Graph f = free2();
    CHECK(is_surface_relator(f, parse_word(f, "[a,b]")));
    CHECK(!is_surface_relator(f, parse_word(f, "a b")));
    CHECK(!is_surface_relator(f, parse_word(f, "a b a b^-1")));  // wrong signs
    CHECK(!is_surface_relator(f, Word{}));

    Graph g4 = Graph::parse("vertices: a b c d\n");
    Word w = parse_word(g4, "[a,b] [c,d]");
    auto pairs = surface_relator_pairs(g4, w);
    REQUIRE(pairs.has_value());
    CHECK(*pairs == std::vector<std::pair<letter, letter>>{{0, 2}, {4, 6}});

    // A commuting pair is not allowed: [a,b] with an edge a-b is trivial.
    Graph e = Graph::parse("vertices: a b\nedges: a-b\n");
    CHECK(!is_surface_relator(e, parse_word(e, "[a,b]")));
}

TEST_CASE("surface relator recognition: shuffled and rotated inputs") {
    Graph g = Graph::parse("vertices: a b c d\nedges: a-c a-d b-c b-d\n");
    // [a,b] and [c,d] commute letterwise across pairs, so the relator can be
    // shuffled heavily; recognition must still see it.
    Word w = parse_word(g, "a c b d c^-1 a^-1 d^-1 b^-1");
    auto pairs = surface_relator_pairs(g, w);
    REQUIRE(pairs.has_value());
    REQUIRE(pairs->size() == 2);

    // Inverses of surface relators are again surface relators.
    Graph f4 = Graph::parse("vertices: a b c d\n");
    Word v = parse_word(f4, "[a,b] [c,d]");
    CHECK(is_surface_relator(f4, normalize(f4, inverse(v))));
}

TEST_CASE("surface relator rejects repeated vertices and odd shapes") {
    Graph f = free2();
    CHECK(!is_surface_relator(f, parse_word(f, "[a,b] [a,b]")));
    CHECK(!is_surface_relator(f, parse_word(f, "[a,b] [b,a]")));
    Graph f4 = Graph::parse("vertices: a b c d\n");
    CHECK(!is_surface_relator(f4, parse_word(f4, "[a,b] c d")));
    CHECK(!is_surface_relator(f4, parse_word(f4, "a b c d a^-1 b^-1 c^-1 d^-1")));
    CHECK(is_surface_relator(f4, parse_word(f4, "a b a^-1 b^-1 [c,d]")));
}

TEST_CASE("proper power detection through shuffles") {
    Graph e = Graph::parse("vertices: a b\nedges: a-b\n");
    // (a b)^2 normalizes to a a b b; the root must still be found.
    Word w = parse_word(e, "a b a b");
    CHECK(proper_power_root(e, w) == parse_word(e, "a b"));

    Graph f = free2();
    CHECK(proper_power_root(f, parse_word(f, "a b a b")) == parse_word(f, "a b"));
    CHECK(proper_power_root(f, parse_word(f, "a b")) == parse_word(f, "a b"));
    CHECK(proper_power_root(f, parse_word(f, "[a,b]")) == cyclic_canonical(f, parse_word(f, "[a,b]")));
    CHECK(proper_power_root(f, parse_word(f, "a^4")) == parse_word(f, "a"));
    // Conjugated powers are powers.
    CHECK(proper_power_root(f, parse_word(f, "b a a b^-1")) == parse_word(f, "a"));
}

TEST_CASE("surface relators are never proper powers") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 6, 0.3);
        // Build [a,b][c,d] style relators from random non-commuting pairs.
        std::vector<int> vs{0, 1, 2, 3, 4, 5};
        std::shuffle(vs.begin(), vs.end(), rng);
        if (g.adjacent(vs[0], vs[1]) || g.adjacent(vs[2], vs[3])) continue;
        Word w;
        for (int i : {0, 1})
            for (int l : {2 * vs[2 * i], 2 * vs[2 * i + 1], 2 * vs[2 * i] + 1, 2 * vs[2 * i + 1] + 1})
                w.push_back(static_cast<char>(l));
        w = normalize(g, w);
        if (!is_surface_relator(g, w)) continue;
        CHECK(proper_power_root(g, w) == cyclic_canonical(g, w));
    }
}
