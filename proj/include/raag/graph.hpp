#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raag/errors.hpp"

namespace raag {

// A letter is a generator or its inverse: letter 2v is vertex v, letter 2v+1
// its inverse.  The induced total order (by vertex, positive before negative)
// is the one all normal forms use.
using letter = int;

inline letter pos_letter(int v) { return 2 * v; }
inline letter neg_letter(int v) { return 2 * v + 1; }
inline letter inv(letter l) { return l ^ 1; }
inline int vtx(letter l) { return l >> 1; }
inline bool is_negative(letter l) { return (l & 1) != 0; }
inline int sign_of(letter l) { return (l & 1) ? -1 : 1; }
inline letter make_letter(int v, int sign) { return sign < 0 ? neg_letter(v) : pos_letter(v); }

// Defining graph of the group: vertices are generators, an edge makes the two
// generators commute.  Vertex count is capped so adjacency fits in one 32-bit
// mask per vertex.
class Graph {
  public:
    static constexpr int max_vertices = 30;

    Graph() = default;
    Graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges);

    // Accepts either the plain text format ("vertices: a b\nedges: a-b") or a
    // JSON object {"vertices": [...], "edges": [["a","b"], ...]}.
    static Graph parse(const std::string& text);

    int n() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    int vertex_index(const std::string& name) const;  // throws input_error if unknown

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    uint32_t link_mask(int v) const { return adj_[v]; }
    uint32_t star_mask(int v) const { return adj_[v] | (1u << v); }
    uint32_t all_mask() const { return n() == 32 ? ~0u : (1u << n()) - 1u; }

    std::vector<std::pair<int, int>> edge_list() const;

    // u dominates v: lk(v) is contained in st(u).  Reflexive.
    bool dominates(int u, int v) const {
        return (link_mask(v) & ~star_mask(u)) == 0;
    }
    bool dom_equivalent(int u, int v) const { return dominates(u, v) && dominates(v, u); }

    // All strict dominations u > v (u dominates v, v does not dominate u).
    std::vector<std::pair<int, int>> strict_dominations() const;

    // Partition of the vertices into domination classes, each sorted, classes
    // ordered by least member.  kind per class: "adjacent" (pairwise adjacent),
    // "non-adjacent", or "singleton".
    struct DomClass {
        std::vector<int> members;
        std::string kind;
    };
    std::vector<DomClass> domination_classes() const;

    // Connected components of the graph induced on `mask`, each sorted,
    // ordered by least member.
    std::vector<std::vector<int>> components(uint32_t mask) const;
    std::vector<std::vector<int>> components_minus_star(int v) const {
        return components(all_mask() & ~star_mask(v));
    }
    bool connected() const;

    // All adjacency-preserving vertex permutations, identity first, then
    // lexicographic.  Throws resource_error if n() exceeds `cap`.
    std::vector<std::vector<int>> automorphisms(int cap = 12) const;

    std::string to_text() const;

  private:
    std::vector<std::string> names_;
    std::vector<uint32_t> adj_;
};

}  // namespace raag
