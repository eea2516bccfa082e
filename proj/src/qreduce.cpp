#include "raag/qreduce.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "raag/errors.hpp"

namespace raag {

namespace {

IMat elem(int n, letter a, letter b) {
    IMat m = IMat::identity(n);
    m.at(vtx(a), vtx(b)) += sign_of(a) * sign_of(b);
    return m;
}

QFactor pair_factor(const Structure& s, letter a, long long pow) {
    QFactor f;
    f.kind = "pair";
    f.a = a;
    f.b = s.star_of(a);
    f.pow = pow;
    f.base = elem(s.g->n(), a, f.b);
    return f;
}

QFactor cross_factor(const Structure& s, letter a, letter b, long long pow) {
    QFactor f;
    f.kind = "cross";
    f.a = a;
    f.b = b;
    f.pow = pow;
    f.base = elem(s.g->n(), a, b) *
             unimodular_inverse(elem(s.g->n(), s.star_of(b), s.star_of(a)));
    return f;
}

QFactor qinv_factor(const Structure& s, letter a) {
    QFactor f;
    f.kind = "qinv";
    f.a = a;
    f.b = s.star_of(a);
    f.pow = 1;
    f.base = IMat::identity(s.g->n());
    f.base.at(vtx(a), vtx(a)) = -1;
    f.base.at(vtx(f.b), vtx(f.b)) = -1;
    return f;
}

// f.base^pow in closed form: pair and cross bases are unipotent with
// (base - I)^2 = 0, and the sign flip is an involution.
IMat factor_power(const QFactor& f, long long pow) {
    int n = f.base.n;
    if (f.kind == "qinv") return (pow % 2 != 0) ? f.base : IMat::identity(n);
    IMat r = IMat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long d = f.base.at(i, j) - (i == j ? 1 : 0);
            if (d != 0) r.at(i, j) += pow * d;
        }
    return r;
}

// The power t minimizing |p + t*delta|.
long long best_power(long long p, long long delta) {
    long long q = p / delta, r = p % delta;
    if (std::llabs(r) * 2 > std::llabs(delta)) q += ((p > 0) == (delta > 0)) ? 1 : -1;
    return -q;
}

}  // namespace

std::vector<std::pair<letter, letter>> relabel_basis(const Structure& s) {
    std::vector<std::pair<letter, letter>> out;
    uint32_t left = s.supp_q;
    while (left) {
        int best = -1;
        for (int v = 0; v < s.g->n() && best < 0; ++v) {
            if (!((left >> v) & 1u)) continue;
            bool maximal = true;
            for (int u = 0; u < s.g->n() && maximal; ++u) {
                if (u == v || !((left >> u) & 1u)) continue;
                if (q_dominates(s, u, v) && !q_dominates(s, v, u)) maximal = false;
            }
            if (maximal) best = v;
        }
        if (best < 0) throw invariant_error("relabeling found no maximal vertex");
        letter x = pos_letter(best), y = s.star_of(x);
        out.emplace_back(x, y);
        left &= ~((1u << best) | (1u << vtx(y)));
    }
    return out;
}

bool standard_form_check(const Structure& s, const QFactor& f) {
    const Graph& g = *s.g;
    int n = g.n();
    if (f.pow == 0 || f.base.n != n) return false;
    if (f.a < 0 || f.a >= 2 * n || f.b < 0 || f.b >= 2 * n) return false;
    if (!((s.supp_q >> vtx(f.a)) & 1u) || !((s.supp_q >> vtx(f.b)) & 1u)) return false;
    if (f.kind == "pair") {
        if (f.b != s.star_of(f.a)) return false;
        if (!g.dominates(vtx(f.a), vtx(f.b))) return false;
        return f.base == elem(n, f.a, f.b);
    }
    if (f.kind == "cross") {
        if (vtx(f.a) == vtx(f.b) || vtx(s.star_of(f.a)) == vtx(f.b)) return false;
        if (!g.dominates(vtx(f.a), vtx(f.b))) return false;
        if (!g.dominates(vtx(s.star_of(f.b)), vtx(s.star_of(f.a)))) return false;
        return f.base ==
               elem(n, f.a, f.b) * unimodular_inverse(elem(n, s.star_of(f.b), s.star_of(f.a)));
    }
    if (f.kind == "qinv") {
        if (f.b != s.star_of(f.a)) return false;
        IMat want = IMat::identity(n);
        want.at(vtx(f.a), vtx(f.a)) = -1;
        want.at(vtx(f.b), vtx(f.b)) = -1;
        return f.base == want;
    }
    return false;
}

IMat factorization_product(const Structure& s, const QFactorization& f) {
    IMat p = IMat::identity(s.g->n());
    for (auto& fac : f.factors) p = p * factor_power(fac, fac.pow);
    return p;
}

QFactorization q_reduce(const Structure& s, const IMat& m) {
    const Graph& g = *s.g;
    const int n = g.n();
    if (m.n != n) throw precondition_error("matrix size does not match the graph");
    if (!in_g_group(s, m)) throw precondition_error("matrix is not in the arithmetic group");
    if (!(wedge_act(m, s.q) == s.q)) throw precondition_error("matrix does not fix the form");

    // A form-fixing member is the identity off the form's support.
    for (int v = 0; v < n; ++v) {
        if (!((s.supp_q >> v) & 1u)) continue;
        for (int u = 0; u < n; ++u)
            if (!((s.supp_q >> u) & 1u) && m.at(u, v) != 0)
                throw invariant_error("form-fixing member has support off the form");
    }

    auto basis = relabel_basis(s);
    const size_t k = basis.size();
    IMat a = m;
    std::vector<QFactor> applied;
    auto apply = [&](QFactor f) {
        a = factor_power(f, f.pow) * a;
        applied.push_back(std::move(f));
    };
    auto qd_both = [&](int u, int v) { return q_dominates(s, u, v) && q_dominates(s, v, u); };

    for (size_t i = 0; i < k; ++i) {
        const int xi = vtx(basis[i].first);

        // Step 1: inside each unprocessed pair, the Euclidean algorithm on the
        // two rows of the pivot column leaves at most one of them nonzero.
        for (size_t j = i; j < k; ++j) {
            int xr = vtx(basis[j].first), yr = vtx(basis[j].second);
            if (a.at(xr, xi) == 0 || a.at(yr, xi) == 0) continue;
            if (!qd_both(xr, yr))
                throw invariant_error("within-pair reduction generator is unavailable");
            while (a.at(xr, xi) != 0 && a.at(yr, xi) != 0) {
                long long p = a.at(xr, xi), q = a.at(yr, xi);
                if (std::llabs(p) >= std::llabs(q)) {
                    QFactor f = pair_factor(s, basis[j].first, 1);
                    f.pow = best_power(p, f.base.at(xr, yr) * q);
                    apply(std::move(f));
                } else {
                    QFactor f = pair_factor(s, basis[j].second, 1);
                    f.pow = best_power(q, f.base.at(yr, xr) * p);
                    apply(std::move(f));
                }
            }
        }

        // Step 2: play surviving rows against each other with cross-pair
        // generators until a single nonzero entry remains.
        auto survivors = [&]() {
            std::vector<letter> out;
            for (size_t j = i; j < k; ++j) {
                if (a.at(vtx(basis[j].first), xi) != 0) out.push_back(basis[j].first);
                if (a.at(vtx(basis[j].second), xi) != 0) out.push_back(basis[j].second);
            }
            return out;
        };
        while (true) {
            auto live = survivors();
            if (live.size() <= 1) break;
            auto mag = [&](letter l) { return std::llabs(a.at(vtx(l), xi)); };
            letter top = live[0];
            for (letter l : live)
                if (mag(l) > mag(top)) top = l;
            letter other = -1;
            for (letter l : live)
                if (l != top && (other < 0 || mag(l) > mag(other))) other = l;
            long long old_max = mag(top);
            long long old_count = 0;
            for (letter l : live)
                if (mag(l) == old_max) ++old_count;
            if (!qd_both(vtx(top), vtx(other)))
                throw invariant_error("cross-pair reduction generator is unavailable");
            QFactor f = cross_factor(s, top, other, 1);
            f.pow = best_power(a.at(vtx(top), xi),
                               f.base.at(vtx(top), vtx(other)) * a.at(vtx(other), xi));
            apply(std::move(f));
            auto after = survivors();
            long long new_max = 0, new_count = 0;
            for (letter l : after) new_max = std::max(new_max, mag(l));
            for (letter l : after)
                if (mag(l) == new_max) ++new_count;
            if (std::make_pair(new_max, new_count) >= std::make_pair(old_max, old_count))
                throw invariant_error("cross-pair reduction made no progress");
        }

        // Step 3: the single survivor is a unit; move it to the pivot row and
        // make it +1.
        auto live = survivors();
        if (live.size() != 1) throw invariant_error("pivot column lost all support");
        letter unit = live[0];
        if (std::llabs(a.at(vtx(unit), xi)) != 1)
            throw invariant_error("pivot entry is not a unit");
        if (vtx(unit) != xi) {
            if (vtx(unit) == vtx(basis[i].second)) {
                if (!qd_both(xi, vtx(unit)))
                    throw invariant_error("within-pair swap generator is unavailable");
                apply(pair_factor(s, basis[i].second, -1));
                apply(pair_factor(s, basis[i].first, -1));
                apply(pair_factor(s, basis[i].second, -1));
            } else {
                if (!qd_both(vtx(unit), xi))
                    throw invariant_error("cross-pair swap generator is unavailable");
                apply(cross_factor(s, unit, basis[i].first, 1));
                apply(cross_factor(s, basis[i].first, unit, -1));
                apply(cross_factor(s, unit, basis[i].first, 1));
            }
        }
        if (a.at(xi, xi) == -1) apply(qinv_factor(s, basis[i].first));
        if (a.at(xi, xi) != 1) throw invariant_error("pivot normalization failed");
        for (size_t j = i; j < k; ++j) {
            if (vtx(basis[j].first) != xi && a.at(vtx(basis[j].first), xi) != 0)
                throw invariant_error("pivot column keeps later support");
            if (a.at(vtx(basis[j].second), xi) != 0)
                throw invariant_error("pivot column keeps later support");
        }
        for (size_t l = 0; l < i; ++l)
            if (a.at(vtx(basis[l].second), xi) != 0)
                throw invariant_error("pivot column hits an earlier partner row");

        // Step 4: clear the earlier pivot rows against the fresh unit.
        for (size_t l = 0; l < i; ++l) {
            int xl = vtx(basis[l].first);
            long long e = a.at(xl, xi);
            if (e == 0) continue;
            if (!q_dominates(s, xl, xi))
                throw invariant_error("clearing generator is unavailable");
            QFactor f = cross_factor(s, basis[l].first, basis[i].first, 1);
            f.pow = best_power(e, f.base.at(xl, xi));
            apply(std::move(f));
            if (a.at(xl, xi) != 0) throw invariant_error("clearing step failed");
        }
    }

    // The pivot columns are standard and the matrix is symplectic, so what is
    // left maps partner columns into pivot rows; the partner-row block is
    // pinned to the identity.
    for (size_t j = 0; j < k; ++j) {
        int yj = vtx(basis[j].second);
        for (size_t l = 0; l < k; ++l) {
            long long want = (l == j) ? 1 : 0;
            if (a.at(yj, vtx(basis[l].second)) != want)
                throw invariant_error("partner rows are not reduced");
        }
    }
    // Diagonal remainder: within-pair shears.
    for (size_t j = 0; j < k; ++j) {
        int xj = vtx(basis[j].first), yj = vtx(basis[j].second);
        long long e = a.at(xj, yj);
        if (e == 0) continue;
        if (!g.dominates(xj, yj)) throw invariant_error("diagonal clearing generator is unavailable");
        QFactor f = pair_factor(s, basis[j].first, 1);
        f.pow = best_power(e, f.base.at(xj, yj));
        apply(std::move(f));
        if (a.at(xj, yj) != 0) throw invariant_error("diagonal clearing failed");
    }
    // Off-diagonal remainder comes in symmetric siblings that one cross-pair
    // generator removes together.
    for (size_t j = 0; j < k; ++j)
        for (size_t l = j + 1; l < k; ++l) {
            int xj = vtx(basis[j].first), yj = vtx(basis[j].second);
            int xl = vtx(basis[l].first), yl = vtx(basis[l].second);
            long long e = a.at(xj, yl);
            if (e == 0) {
                if (a.at(xl, yj) != 0) throw invariant_error("remainder lost its symmetry");
                continue;
            }
            if (!g.dominates(xj, yl) ||
                !g.dominates(vtx(s.star_of(basis[l].second)), vtx(s.star_of(basis[j].first))))
                throw invariant_error("remainder clearing generator is unavailable");
            QFactor f = cross_factor(s, basis[j].first, basis[l].second, 1);
            f.pow = best_power(e, f.base.at(xj, yl));
            apply(std::move(f));
            if (a.at(xj, yl) != 0 || a.at(xl, yj) != 0)
                throw invariant_error("paired remainder clearing failed");
        }

    if (!a.is_identity()) throw invariant_error("reduction did not reach the identity");

    // applied, in order, premultiplies the input down to the identity, so the
    // input is the left-to-right product of the same factors at negated powers.
    QFactorization out;
    for (auto& f : applied) {
        QFactor fac = f;
        fac.pow = -f.pow;
        if (!standard_form_check(s, fac)) throw invariant_error("emitted factor is not standard");
        out.factors.push_back(std::move(fac));
    }
    out.verified = factorization_product(s, out) == m;
    return out;
}

}  // namespace raag
