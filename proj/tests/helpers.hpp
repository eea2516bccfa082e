#pragma once

// Shared test utilities: tiny independent re-implementations (oracles) used to
// cross-check the library, plus deterministic generators for graphs and words.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace testutil {

using raag::Graph;
using raag::Word;
using raag::letter;

inline std::vector<std::string> default_names(int n) {
    static const char* pool[] = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"};
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(pool[i]);
    return out;
}

// Graph with edges given by bitmask over the n*(n-1)/2 vertex pairs (u<v) in
// lexicographic order.
inline Graph graph_from_mask(int n, unsigned mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1u) edges.emplace_back(u, v);
    return Graph(default_names(n), edges);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

inline Graph random_graph(std::mt19937_64& rng, int n, double edge_prob = 0.5) {
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(edge_prob);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(default_names(n), edges);
}

inline Word random_word(std::mt19937_64& rng, const Graph& g, int len) {
    std::uniform_int_distribution<int> pick(0, 2 * g.n() - 1);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(static_cast<char>(pick(rng)));
    return w;
}

// ---- oracles ----

// Domination by plain set inclusion on explicit neighbor lists.
inline bool oracle_dominates(const Graph& g, int u, int v) {
    std::set<int> st_u{u};
    for (int x = 0; x < g.n(); ++x)
        if (g.adjacent(u, x)) st_u.insert(x);
    for (int x = 0; x < g.n(); ++x)
        if (g.adjacent(v, x) && !st_u.count(x)) return false;
    return true;
}

// Connected components by list-based flood fill over an induced vertex set.
inline std::vector<std::vector<int>> oracle_components(const Graph& g,
                                                       const std::vector<int>& verts) {
    std::set<int> left(verts.begin(), verts.end());
    std::vector<std::vector<int>> out;
    while (!left.empty()) {
        std::vector<int> stack{*left.begin()};
        std::set<int> comp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (comp.count(v)) continue;
            comp.insert(v);
            left.erase(v);
            for (int u : left)
                if (g.adjacent(u, v) && !comp.count(u)) stack.push_back(u);
        }
        out.emplace_back(comp.begin(), comp.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Graph automorphisms by testing every permutation.
inline std::vector<std::vector<int>> oracle_automorphisms(const Graph& g) {
    std::vector<int> p(g.n());
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int u = 0; u < g.n() && ok; ++u)
            for (int v = u + 1; v < g.n() && ok; ++v)
                if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) ok = false;
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// Equality of two words as group elements, decided without the library's
// normal form: exhaust shuffle-and-cancel rewrites from u * v^-1 and check the
// identity is reachable.  Only usable for short words.
inline bool oracle_equal_elements(const Graph& g, const Word& u, const Word& v) {
    Word start = u + raag::inverse(v);
    std::set<Word> seen{start};
    std::vector<Word> stack{start};
    while (!stack.empty()) {
        Word w = stack.back();
        stack.pop_back();
        if (w.empty()) return true;
        // Cancel an adjacent inverse pair.
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == raag::inv(w[i + 1])) {
                Word r = w.substr(0, i) + w.substr(i + 2);
                if (seen.insert(r).second) stack.push_back(r);
            }
        }
        // Swap an adjacent commuting pair.
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (g.adjacent(raag::vtx(w[i]), raag::vtx(w[i + 1]))) {
                Word r = w;
                std::swap(r[i], r[i + 1]);
                if (seen.insert(r).second) stack.push_back(r);
            }
        }
    }
    return false;
}

// All words equivalent to w by shuffles only (no cancellation): the shuffle
// class of a reduced word.
inline std::set<Word> oracle_shuffle_class(const Graph& g, const Word& w) {
    std::set<Word> seen{w};
    std::vector<Word> stack{w};
    while (!stack.empty()) {
        Word cur = stack.back();
        stack.pop_back();
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            if (g.adjacent(raag::vtx(cur[i]), raag::vtx(cur[i + 1]))) {
                Word r = cur;
                std::swap(r[i], r[i + 1]);
                if (seen.insert(r).second) stack.push_back(r);
            }
        }
    }
    return seen;
}

// Conjugacy tested by brute force: try all conjugators up to the given length.
inline bool oracle_conjugate(const Graph& g, const Word& u, const Word& v, int max_len) {
    std::vector<Word> conjs{Word{}};
    for (int len = 0; len <= max_len; ++len) {
        std::vector<Word> next;
        for (auto& c : conjs) {
            if (raag::normalize(g, raag::inverse(c) + u + c) == raag::normalize(g, v)) return true;
            if (len < max_len)
                for (letter l = 0; l < 2 * g.n(); ++l) {
                    Word c2 = c;
                    c2.push_back(static_cast<char>(l));
                    next.push_back(std::move(c2));
                }
        }
        conjs = std::move(next);
    }
    return false;
}

inline Word wletters(std::initializer_list<int> ls) {
    Word w;
    for (int l : ls) w.push_back(static_cast<char>(l));
    return w;
}

}  // namespace testutil
