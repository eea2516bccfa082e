#pragma once

#include <string>
#include <vector>

#include "raag/symplectic.hpp"

namespace raag {

// One factor of a G-factorization: a standard generator raised to a nonzero
// integer power.
struct QFactor {
    std::string kind;  // "pair" | "cross" | "qinv"
    letter a = 0, b = 0;
    long long pow = 1;
    IMat base;  // the generator at power one
};

struct QFactorization {
    std::vector<QFactor> factors;  // left-to-right product equals the input
    bool verified = false;         // product recomputed and compared
};

// Basis relabeling used by the reduction: pairs (x_i, y_i) of letters with x_i
// chosen Q-domination-maximal among unlabeled vertices (ties by vertex order)
// and y_i its star partner.
std::vector<std::pair<letter, letter>> relabel_basis(const Structure& s);

// Factor a member of G into standard generators by symplectic column
// reduction (per-pair Euclidean steps, cross-pair reduction, a swap to the
// pair position, sign fix, then clearing earlier pairs).  Preconditions: the
// matrix is in G and fixes Q.  Every emitted factor passes
// standard_form_check; the product of the factors equals the input.
QFactorization q_reduce(const Structure& s, const IMat& m);

bool standard_form_check(const Structure& s, const QFactor& f);

// Evaluate a factorization back to a matrix (left-to-right product).
IMat factorization_product(const Structure& s, const QFactorization& f);

}  // namespace raag
