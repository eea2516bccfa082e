#pragma once

#include <cstdint>
#include <vector>

#include "raag/errors.hpp"

namespace raag {

// Dense square integer matrix, row-major.  Column v holds the abelianized
// image of generator v, so composition of maps is the ordinary product
// mat_of(f o g) = mat_of(f) * mat_of(g).
struct IMat {
    int n = 0;
    std::vector<long long> a;

    IMat() = default;
    explicit IMat(int size) : n(size), a(static_cast<size_t>(size) * size, 0) {}

    static IMat identity(int size) {
        IMat m(size);
        for (int i = 0; i < size; ++i) m.at(i, i) = 1;
        return m;
    }

    long long& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

    bool operator==(const IMat& o) const { return n == o.n && a == o.a; }
    bool operator!=(const IMat& o) const { return !(*this == o); }

    IMat operator*(const IMat& o) const {
        IMat r(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                long long v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    IMat transpose() const {
        IMat r(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_identity() const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }
};

// Determinant by fraction-free (Bareiss) elimination; exact for the small
// matrices used here.
long long det(const IMat& m);

// Inverse of an integer matrix with det +-1; throws precondition_error for
// other determinants.
IMat unimodular_inverse(const IMat& m);

}  // namespace raag
