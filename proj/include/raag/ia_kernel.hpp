#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raag/automorphism.hpp"

namespace raag {

// A named generator with its automorphism.
struct NamedAut {
    std::string name;
    std::string kind;  // "comm_transvection" | "one_term_conj" | "total_conj" |
                       // "transvection" | "partial_conj" | "inversion" | "graphic"
    Automorphism aut;
};

// Generators of the subgroup K_Z for a vertex set Z (mask): commutator
// transvections tau_[x,y],c with c a positive letter of Z, x, y letters over Z
// with distinct vertices, both dominating vtx(c) and non-commuting; one-term
// conjugations c_{x,{c}} with x a letter over Z dominating c in Z, c off
// st(vtx x); and all total conjugations c_v, v any vertex of the graph.
std::vector<NamedAut> kz_generators(const Graph& g, uint32_t zmask);

// Generators of G_Z: transvections tau_a,b with a, b letters over Z, vtx(a)
// dominating vtx(b), plus all total conjugations.
std::vector<NamedAut> gz_generators(const Graph& g, uint32_t zmask);

// Generators of the kernel of the action on homology: K_X together with every
// single-component signed partial conjugation (duplicates removed).
std::vector<NamedAut> iaut_generators(const Graph& g);

// Outcome counters for one identity family.
struct IdentityLine {
    std::string name;
    long long instances = 0;
    long long passed = 0;
    long long failed = 0;
    long long skipped = 0;  // tuples where a term of the identity is not well formed
};

struct IdentityReport {
    std::vector<IdentityLine> lines;
    std::vector<std::string> notes;
    bool all_passed() const {
        for (auto& l : lines)
            if (l.failed) return false;
        return true;
    }
};

// Evaluates the rewriting identities that push a transvection through a
// partial conjugation (four cases plus commuting cases) and through a
// commutator transvection (multiplier-capture cases plus commuting cases),
// over every tuple on the graph where all terms are well formed.
IdentityReport verify_rewriting_identities(const Graph& g);

// Checks the homology-level relation families (commuting transvections,
// composition/cancellation, the order-4 pair relation and the rank-2 free
// factor relation) on matrices for all valid tuples over Z, and the lifted
// automorphism identities where the text provides them.
IdentityReport check_presentation_relations(const Graph& g, uint32_t zmask);

// Bounded search: is `target` a product of at most 2*half_depth generators
// from `gens`?  Meet-in-the-middle on images; "inconclusive" when the bound is
// hit without a hit.
enum class MembershipResult { yes, inconclusive };
MembershipResult bounded_membership(const std::vector<Automorphism>& gens,
                                    const Automorphism& target, int half_depth);

}  // namespace raag
