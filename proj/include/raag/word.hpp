#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// Group elements are stored as strings of letter codes (one byte per letter;
// codes stay below 64 because the graph is capped at 30 vertices).  The empty
// string is the identity.
using Word = std::string;

// Parse "a b^-1 c" style text; also accepts exponents like a^3 and the
// commutator shorthand [a,b] (no nesting).  Result is normalized.
Word parse_word(const Graph& g, const std::string& text);
std::string format_word(const Graph& g, const Word& w);

Word inverse(const Word& w);
inline Word concat(const Word& u, const Word& v) { return u + v; }

// Normal form: graphically reduced (no cancelling pair separated only by
// letters commuting with it), then the lexicographically least shuffle of the
// reduced word.  Two words represent the same element iff their normal forms
// are equal.
Word normalize(const Graph& g, Word w);
Word mul(const Graph& g, const Word& u, const Word& v);
Word conjugate(const Graph& g, const Word& w, const Word& u);  // u^-1 w u, normalized

bool graphically_reduced(const Graph& g, const Word& w);

uint32_t support_mask(const Word& w);
std::vector<long long> exponent_sums(const Graph& g, const Word& w);

// Every word obtainable from w by rotating one letter to the back and
// renormalizing, iterated to closure; when a rotation shortens the word the
// closure restarts from the shorter representative.  All results have equal
// (minimal cyclic) length.  Throws resource_error past `cap_states`.
std::vector<Word> cyclic_closure(const Graph& g, const Word& w, size_t cap_states = 1000000);

// Least element of the cyclic closure: canonical representative of the
// conjugacy class.
Word cyclic_canonical(const Graph& g, const Word& w, size_t cap_states = 1000000);
size_t conjugacy_length(const Graph& g, const Word& w, size_t cap_states = 1000000);
bool conjugate_elements(const Graph& g, const Word& u, const Word& v, size_t cap_states = 1000000);

// A word u with u^-1 v u = target (as elements), found by breadth-first search
// over length-nonincreasing conjugations by single letters; v and target must
// be conjugate with |target| minimal in the class.  Search depth is capped at
// `depth_cap` (resource_error past it).
std::optional<Word> find_conjugator(const Graph& g, const Word& v, const Word& target,
                                    size_t depth_cap, size_t cap_states = 1000000);

// True if w equals a product of k >= 1 commutators [a1,b1]...[ak,bk] with all
// 2k letters over distinct vertices and each pair non-commuting; returns the
// pairs (lexicographically least peel order) or nullopt.
std::optional<std::vector<std::pair<letter, letter>>> surface_relator_pairs(const Graph& g,
                                                                            const Word& w);
inline bool is_surface_relator(const Graph& g, const Word& w) {
    return surface_relator_pairs(g, w).has_value();
}

// Least nontrivial root: returns r with r^m = w (m maximal), found through the
// cyclic closure; r == w when w is not a proper power.
Word proper_power_root(const Graph& g, const Word& w, size_t cap_states = 1000000);

}  // namespace raag
