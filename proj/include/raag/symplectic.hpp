#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "raag/automorphism.hpp"

namespace raag {

// Element of the second exterior power of the abelianization: coefficients on
// e_i ^ e_j for i < j.  Zero coefficients are never stored.
struct WedgeForm {
    int n = 0;
    std::map<std::pair<int, int>, long long> coef;

    explicit WedgeForm(int size = 0) : n(size) {}
    void add(int i, int j, long long c);
    bool operator==(const WedgeForm& o) const { return n == o.n && coef == o.coef; }
    bool is_zero() const { return coef.empty(); }
};

// [u] ^ [v] for single letters.
WedgeForm wedge_of_letters(int n, letter u, letter v);

// Induced action on wedges: columns of M are images of basis vectors.
WedgeForm wedge_act(const IMat& m, const WedgeForm& w);

// Split a wedge form into the part supported on commuting vertex pairs and the
// part on non-commuting pairs.
std::pair<WedgeForm, WedgeForm> decompose_wedge(const Graph& g, const WedgeForm& w);

// A hyperbolic-like structure: a pairing of all vertices into ordered letter
// pairs; non-commuting pairs feed the relator w0, commuting pairs feed Q.
struct Structure {
    const Graph* g = nullptr;
    std::vector<std::pair<letter, letter>> pairs;    // as given
    std::vector<std::pair<letter, letter>> w_pairs;  // non-commuting, input order
    std::vector<std::pair<letter, letter>> q_pairs;  // commuting, input order
    Word w0;                                         // [a1,b1]...[ak,bk], normalized
    WedgeForm q;
    std::vector<letter> star;  // star bijection on all letters
    uint32_t supp_w = 0, supp_q = 0;

    letter star_of(letter l) const { return star[l]; }
    int k() const { return static_cast<int>(w_pairs.size()); }
};

// Validates the pairing (covers every vertex exactly once, pairs over distinct
// vertices) and builds w0, Q and the star bijection.  The bijection is the
// 4-cycle a -> b -> a^-1 -> b^-1 -> a on each pair.
Structure make_structure(const Graph& g, const std::vector<std::pair<letter, letter>>& pairs);

// The matrix J with column v = [star(v)] for v in supp Q and 0 elsewhere.
// A matrix fixing Q under wedge_act is exactly one with A J A^T = J.
IMat j_matrix(const Structure& s);

// Membership in the arithmetic group G: columns off supp Q are standard basis
// vectors and every nonzero off-diagonal entry (row u, column v) with v in
// supp Q has u dominating v.
bool in_g_group(const Structure& s, const IMat& m);

// Q-domination on supp Q vertices: u Q-dominates v iff u dominates v and
// (when u is not v's star partner) star(v)'s vertex dominates star(u)'s.
bool q_dominates(const Structure& s, int u, int v);

// The standard generators of G as matrices with automorphism lifts.
struct QGen {
    std::string kind;  // "pair" E_{a,a*} | "cross" E_{a,b} E_{b*,a*}^-1 | "qinv" N_a N_{a*}
    letter a = 0, b = 0;
    IMat mat;
    Automorphism lift;
};
std::vector<QGen> enumerate_q_generators(const Structure& s);

// Q fixed under the wedge action and w0 fixed exactly.
struct PreservationCheck {
    bool w_fixed = false;
    bool q_fixed = false;
    bool both() const { return w_fixed && q_fixed; }
};
PreservationCheck preserves_structure(const Automorphism& a, const Structure& s);

// Wedge form of a surface relator: sum of [a_i] ^ [b_i] over its commutator
// pairs.  Precondition: the word is a surface relator.
WedgeForm relator_wedge(const Graph& g, const Word& w);

}  // namespace raag
