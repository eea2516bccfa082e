#include "raag/symplectic.hpp"

#include <algorithm>
#include <set>

#include "raag/errors.hpp"

namespace raag {

void WedgeForm::add(int i, int j, long long c) {
    if (i == j || c == 0) return;
    if (i > j) {
        std::swap(i, j);
        c = -c;
    }
    auto key = std::make_pair(i, j);
    auto it = coef.find(key);
    if (it == coef.end()) {
        coef.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coef.erase(it);
}

WedgeForm wedge_of_letters(int n, letter u, letter v) {
    WedgeForm w(n);
    w.add(vtx(u), vtx(v), sign_of(u) * sign_of(v));
    return w;
}

WedgeForm wedge_act(const IMat& m, const WedgeForm& w) {
    WedgeForm out(w.n);
    for (auto& [ij, c] : w.coef) {
        auto [i, j] = ij;
        for (int u = 0; u < w.n; ++u) {
            long long mu = m.at(u, i);
            if (mu == 0) continue;
            for (int v = 0; v < w.n; ++v) {
                long long mv = m.at(v, j);
                if (mv != 0) out.add(u, v, c * mu * mv);
            }
        }
    }
    return out;
}

std::pair<WedgeForm, WedgeForm> decompose_wedge(const Graph& g, const WedgeForm& w) {
    WedgeForm commuting(w.n), free_part(w.n);
    for (auto& [ij, c] : w.coef) {
        auto [i, j] = ij;
        (g.adjacent(i, j) ? commuting : free_part).add(i, j, c);
    }
    return {commuting, free_part};
}

Structure make_structure(const Graph& g, const std::vector<std::pair<letter, letter>>& pairs) {
    Structure s;
    s.g = &g;
    s.pairs = pairs;
    s.q = WedgeForm(g.n());
    s.star.assign(2 * g.n(), 0);
    uint32_t seen = 0;
    for (auto [a, b] : pairs) {
        if (vtx(a) < 0 || vtx(a) >= g.n() || vtx(b) < 0 || vtx(b) >= g.n())
            throw input_error("pairing letter out of range");
        if (vtx(a) == vtx(b)) throw input_error("a pair must use two distinct vertices");
        uint32_t m = (1u << vtx(a)) | (1u << vtx(b));
        if (seen & m) throw input_error("pairing repeats a vertex");
        seen |= m;
        // Star 4-cycle a -> b -> a^-1 -> b^-1 -> a.
        s.star[a] = b;
        s.star[b] = inv(a);
        s.star[inv(a)] = inv(b);
        s.star[inv(b)] = a;
        if (g.adjacent(vtx(a), vtx(b))) {
            s.q_pairs.emplace_back(a, b);
            s.q.add(vtx(a), vtx(b), sign_of(a) * sign_of(b));
            s.supp_q |= m;
        } else {
            s.w_pairs.emplace_back(a, b);
            s.supp_w |= m;
        }
    }
    if (seen != g.all_mask()) throw input_error("pairing must cover every vertex exactly once");
    Word w;
    for (auto [a, b] : s.w_pairs) {
        w.push_back(static_cast<char>(a));
        w.push_back(static_cast<char>(b));
        w.push_back(static_cast<char>(inv(a)));
        w.push_back(static_cast<char>(inv(b)));
    }
    s.w0 = normalize(g, w);
    return s;
}

IMat j_matrix(const Structure& s) {
    int n = s.g->n();
    IMat j(n);
    for (int v = 0; v < n; ++v) {
        if (!((s.supp_q >> v) & 1u)) continue;
        letter sv = s.star[pos_letter(v)];
        j.at(vtx(sv), v) = sign_of(sv);
    }
    return j;
}

bool in_g_group(const Structure& s, const IMat& m) {
    int n = s.g->n();
    if (m.n != n) return false;
    for (int v = 0; v < n; ++v) {
        bool q = (s.supp_q >> v) & 1u;
        for (int u = 0; u < n; ++u) {
            long long e = m.at(u, v);
            if (!q) {
                if (e != (u == v ? 1 : 0)) return false;
            } else if (u != v && e != 0 && !s.g->dominates(u, v)) {
                return false;
            }
        }
    }
    return true;
}

bool q_dominates(const Structure& s, int u, int v) {
    if (!((s.supp_q >> u) & 1u) || !((s.supp_q >> v) & 1u))
        throw precondition_error("q_dominates needs two supported vertices");
    if (u == v) return true;
    if (!s.g->dominates(u, v)) return false;
    int us = vtx(s.star[pos_letter(u)]), vs = vtx(s.star[pos_letter(v)]);
    if (u == vs) return true;
    return s.g->dominates(vs, us);
}

std::vector<QGen> enumerate_q_generators(const Structure& s) {
    const Graph& g = *s.g;
    int n = g.n();
    std::vector<QGen> out;
    auto elem = [&](letter a, letter b) {
        IMat m = IMat::identity(n);
        m.at(vtx(a), vtx(b)) += sign_of(a) * sign_of(b);
        return m;
    };
    auto push_checked = [&](QGen gen) {
        if (!(wedge_act(gen.mat, s.q) == s.q))
            throw invariant_error("generator fails to fix the form");
        if (!(gen.lift.homology() == gen.mat))
            throw invariant_error("generator lift has the wrong matrix");
        out.push_back(std::move(gen));
    };

    // Within-pair: E_{a,a*} when vtx(a) dominates vtx(a*); the four letters of
    // a pair give at most two distinct matrices.
    std::set<std::vector<long long>> seen_pair;
    for (letter a = 0; a < letter(2 * n); ++a) {
        if (!((s.supp_q >> vtx(a)) & 1u)) continue;
        letter as = s.star[a];
        if (!g.dominates(vtx(a), vtx(as))) continue;
        IMat m = elem(a, as);
        if (!seen_pair.insert(m.a).second) continue;
        QGen gen;
        gen.kind = "pair";
        gen.a = a;
        gen.b = as;
        gen.mat = m;
        gen.lift = make_transvection(g, a, as);
        push_checked(std::move(gen));
    }

    // Cross-pair: E_{a,b} E_{b*,a*}^-1 over distinct pairs, requiring both
    // vtx(a) >= vtx(b) and vtx(b*) >= vtx(a*).  The same matrix arises from
    // (a^-1, b^-1) and from the factor swap (b*^-1, a*), so dedup by matrix.
    std::set<std::vector<long long>> seen_cross;
    for (letter a = 0; a < letter(2 * n); ++a) {
        if (!((s.supp_q >> vtx(a)) & 1u)) continue;
        for (letter b = 0; b < letter(2 * n); ++b) {
            if (!((s.supp_q >> vtx(b)) & 1u)) continue;
            letter as = s.star[a], bs = s.star[b];
            if (vtx(a) == vtx(b) || vtx(as) == vtx(b)) continue;
            if (!g.dominates(vtx(a), vtx(b)) || !g.dominates(vtx(bs), vtx(as))) continue;
            IMat m = elem(a, b) * unimodular_inverse(elem(bs, as));
            if (!seen_cross.insert(m.a).second) continue;
            QGen gen;
            gen.kind = "cross";
            gen.a = a;
            gen.b = b;
            gen.mat = std::move(m);
            gen.lift = make_transvection(g, a, b).compose(make_transvection(g, inv(bs), as));
            push_checked(std::move(gen));
        }
    }

    // Sign flip on one pair: -1 at both of its vertices.
    for (auto [a, b] : s.q_pairs) {
        QGen gen;
        gen.kind = "qinv";
        gen.a = a;
        gen.b = b;
        gen.mat = IMat::identity(n);
        gen.mat.at(vtx(a), vtx(a)) = -1;
        gen.mat.at(vtx(b), vtx(b)) = -1;
        gen.lift = make_inversion(g, vtx(a)).compose(make_inversion(g, vtx(b)));
        push_checked(std::move(gen));
    }
    return out;
}

PreservationCheck preserves_structure(const Automorphism& a, const Structure& s) {
    PreservationCheck c;
    c.w_fixed = a.apply(s.w0) == s.w0;
    c.q_fixed = wedge_act(a.homology(), s.q) == s.q;
    return c;
}

WedgeForm relator_wedge(const Graph& g, const Word& w) {
    auto pairs = surface_relator_pairs(g, w);
    if (!pairs) throw precondition_error("not a surface relator");
    WedgeForm out(g.n());
    for (auto [a, b] : *pairs) out.add(vtx(a), vtx(b), sign_of(a) * sign_of(b));
    return out;
}

}  // namespace raag
