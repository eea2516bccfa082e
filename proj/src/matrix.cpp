#include "raag/matrix.hpp"

namespace raag {

namespace {
long long iabs(long long v) { return v < 0 ? -v : v; }
}  // namespace

long long det(const IMat& m) {
    // Bareiss elimination: every intermediate value is an exact integer.
    int n = m.n;
    if (n == 0) return 1;
    IMat a = m;
    long long prev = 1;
    long long sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a.at(r, k) != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(p, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c)
                a.at(r, c) = (a.at(r, c) * a.at(k, k) - a.at(r, k) * a.at(k, c)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

IMat unimodular_inverse(const IMat& m) {
    long long d = det(m);
    if (d != 1 && d != -1) throw precondition_error("matrix is not unimodular");
    int n = m.n;
    IMat a = m;
    IMat inv = IMat::identity(n);
    for (int col = 0; col < n; ++col) {
        // Euclidean-reduce the rows from `col` down until one pivot remains;
        // its value is the gcd of the column, which divides the determinant of
        // the trailing block, hence is +-1 for unimodular input.
        for (;;) {
            int best = -1;
            for (int r = col; r < n; ++r)
                if (a.at(r, col) != 0 && (best < 0 || iabs(a.at(r, col)) < iabs(a.at(best, col))))
                    best = r;
            if (best < 0) throw invariant_error("unimodular matrix lost rank during inversion");
            bool done = true;
            for (int r = col; r < n; ++r) {
                if (r == best || a.at(r, col) == 0) continue;
                long long q = a.at(r, col) / a.at(best, col);
                for (int c = 0; c < n; ++c) {
                    a.at(r, c) -= q * a.at(best, c);
                    inv.at(r, c) -= q * inv.at(best, c);
                }
                if (a.at(r, col) != 0) done = false;
            }
            if (done) {
                if (best != col)
                    for (int c = 0; c < n; ++c) {
                        std::swap(a.at(best, c), a.at(col, c));
                        std::swap(inv.at(best, c), inv.at(col, c));
                    }
                break;
            }
        }
        long long piv = a.at(col, col);
        if (piv != 1 && piv != -1)
            throw invariant_error("unimodular inversion hit a non-unit pivot");
        if (piv == -1)
            for (int c = 0; c < n; ++c) {
                a.at(col, c) = -a.at(col, c);
                inv.at(col, c) = -inv.at(col, c);
            }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0) continue;
            long long q = a.at(r, col);
            for (int c = 0; c < n; ++c) {
                a.at(r, c) -= q * a.at(col, c);
                inv.at(r, c) -= q * inv.at(col, c);
            }
        }
    }
    if (!a.is_identity()) throw invariant_error("unimodular inversion failed to reach identity");
    return inv;
}

}  // namespace raag
