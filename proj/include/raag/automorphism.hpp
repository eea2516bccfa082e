#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "raag/matrix.hpp"
#include "raag/word.hpp"

namespace raag {

// One elementary factor.  An automorphism is a list of factors applied right
// to left (the last factor acts first), matching how products are written.
struct Factor {
    enum class Kind {
        transvection,   // target -> target * m            (m: letter, target: letter)
        partial_conj,   // y -> m^-1 y m for y in set Y     (m: letter, Y: vertex mask)
        inversion,      // v -> v^-1                        (v = vtx)
        graphic,        // x -> perm(x)^sig(x), perm a graph automorphism
        whitehead2,     // Whitehead move (A, m): A a letter set containing m
    };
    Kind kind;
    letter m = 0;        // multiplier (transvection, partial_conj, whitehead2)
    letter target = 0;   // transvection target letter
    int vertex = 0;      // inversion vertex
    uint32_t yset = 0;   // partial_conj vertex mask
    uint64_t aset = 0;   // whitehead2 letter mask
    std::vector<int> perm;   // graphic: image vertex per vertex
    std::vector<int> sig;    // graphic: +-1 per vertex
    int pow = 1;         // +1 or -1

    static Factor transvection_of(letter m, letter target);
    static Factor partial_conj_of(letter m, uint32_t yset);
    static Factor inversion_of(int v);
    static Factor graphic_of(std::vector<int> perm, std::vector<int> sig);
    static Factor whitehead2_of(letter m, uint64_t aset);

    Factor inverted() const;  // closed-form inverse (same kind)
    // Image of a single letter, before normalization.
    Word image_of(letter l) const;
};

// Whitehead move validity for (A, a): a in A, a^-1 not in A, every
// singly-included vertex dominated by vtx(a), and every component of the graph
// minus st(vtx(a)) either fully doubly included, untouched, or a dominated
// singleton.  Exactly the (A, a) passing this define automorphisms.
bool whitehead_valid(const Graph& g, uint64_t aset, letter a);

// Vertices (excluding vtx(a)) with exactly one of their two letters in A: the
// ones the move transfers rather than fixes or conjugates.
uint32_t trans_set(const Graph& g, uint64_t aset, letter a);

struct Automorphism {
    const Graph* g = nullptr;
    std::vector<Factor> factors;      // applied right to left
    std::vector<Word> images;         // normalized image of each generator

    static Automorphism identity(const Graph& g);
    static Automorphism from_factors(const Graph& g, std::vector<Factor> fs);

    Word apply(const Word& w) const;  // substitute images, normalize
    bool is_identity() const;
    bool operator==(const Automorphism& o) const { return images == o.images; }

    Automorphism compose(const Automorphism& rhs) const;  // this after rhs
    Automorphism inverse() const;
    IMat homology() const;  // abelianization matrix (column v = image of v)
};

// Validity checks used by the factor constructors (throw precondition_error):
// transvection needs vtx(m) dominating vtx(target) and distinct vertices;
// partial conjugation needs Y a union of components of the graph minus
// st(vtx(m)); a graphic factor needs an adjacency-preserving permutation.
Automorphism make_transvection(const Graph& g, letter m, letter target);
Automorphism make_partial_conj(const Graph& g, letter m, uint32_t yset);
Automorphism make_total_conj(const Graph& g, letter m);  // Y = everything off st(vtx m)
Automorphism make_inversion(const Graph& g, int v);
Automorphism make_graphic(const Graph& g, std::vector<int> perm, std::vector<int> sig);
Automorphism make_whitehead2(const Graph& g, uint64_t aset, letter a);

// Conjugation c_u: g -> u^-1 g u as a factor list of single-letter total
// conjugations.
Automorphism make_conjugation_by(const Graph& g, const Word& u);

// tau_[x,y],c : c -> c[x,y], other generators fixed.  Requires vtx(x), vtx(y),
// vtx(c) pairwise distinct, x and y non-commuting, both dominating vtx(c).
Automorphism make_comm_transvection(const Graph& g, letter x, letter y, letter c);

// [alpha, beta] = alpha beta alpha^-1 beta^-1 (rightmost factor acts first).
Automorphism commutator(const Automorphism& a, const Automorphism& b);

// A graphic permutation is pure when it maps every vertex within its
// domination class; pure automorphisms act trivially on the class poset.
bool graphic_is_pure(const Graph& g, const std::vector<int>& perm);

// Long-range / short-range classification of a Whitehead move (A, a):
// long-range iff A avoids all letters over lk(vtx a); short-range iff A stays
// inside the letters over st(vtx a).
bool whitehead_long_range(const Graph& g, uint64_t aset, letter a);
bool whitehead_short_range(const Graph& g, uint64_t aset, letter a);

// Peak reduction predicate on a factor sequence: with L_i the conjugacy length
// of (f_i ... f_1)(w), an interior i is a peak iff L_{i-1} <= L_i >= L_{i+1}
// and the three are not all equal.  True iff no peak exists.
bool is_peak_reduced(const Graph& g, const std::vector<Automorphism>& fs, const Word& w);

// All valid Whitehead moves (A, a) over the graph, in (a, A) lexicographic
// order.  Count is capped (resource_error).
struct OmegaMove {
    uint64_t aset;
    letter a;
};
std::vector<OmegaMove> enumerate_whitehead_moves(const Graph& g, size_t cap = 2000000);

// All graphic-with-signs automorphisms (the finite "type 1" part).  Throws
// resource_error if |Aut(graph)| * 2^n exceeds the cap.
std::vector<Automorphism> enumerate_type1(const Graph& g, size_t cap = 100000);

// The generating set of signed transvections, partial conjugations (one
// component at a time), inversions and nontrivial graphic automorphisms.
struct LsGenerator {
    std::string kind;  // "transvection" | "partial_conj" | "inversion" | "graphic"
    bool pure = false; // graphic only
    Automorphism aut;
};
std::vector<LsGenerator> ls_generators(const Graph& g);

}  // namespace raag
