#include "raag/automorphism.hpp"

#include <algorithm>
#include <bit>

namespace raag {

Factor Factor::transvection_of(letter m, letter target) {
    Factor f;
    f.kind = Kind::transvection;
    f.m = m;
    f.target = target;
    return f;
}

Factor Factor::partial_conj_of(letter m, uint32_t yset) {
    Factor f;
    f.kind = Kind::partial_conj;
    f.m = m;
    f.yset = yset;
    return f;
}

Factor Factor::inversion_of(int v) {
    Factor f;
    f.kind = Kind::inversion;
    f.vertex = v;
    return f;
}

Factor Factor::graphic_of(std::vector<int> perm, std::vector<int> sig) {
    Factor f;
    f.kind = Kind::graphic;
    f.perm = std::move(perm);
    f.sig = std::move(sig);
    return f;
}

Factor Factor::whitehead2_of(letter m, uint64_t aset) {
    Factor f;
    f.kind = Kind::whitehead2;
    f.m = m;
    f.aset = aset;
    return f;
}

Factor Factor::inverted() const {
    Factor f = *this;
    switch (kind) {
        case Kind::transvection:
            f.m = inv(m);
            break;
        case Kind::partial_conj:
            f.m = inv(m);
            break;
        case Kind::inversion:
            break;
        case Kind::graphic: {
            int n = static_cast<int>(perm.size());
            f.perm.assign(n, 0);
            f.sig.assign(n, 1);
            for (int v = 0; v < n; ++v) {
                f.perm[perm[v]] = v;
                f.sig[perm[v]] = sig[v];
            }
            break;
        }
        case Kind::whitehead2:
            // (A, a)^-1 = ((A minus a) plus a^-1, a^-1)
            f.aset = (aset & ~(1ull << m)) | (1ull << inv(m));
            f.m = inv(m);
            break;
    }
    f.pow = 1;
    return f;
}

Word Factor::image_of(letter l) const {
    // pow is handled by callers (apply inverted() for pow -1).
    Word out;
    switch (kind) {
        case Kind::transvection: {
            if (vtx(l) != vtx(target)) {
                out.push_back(static_cast<char>(l));
            } else if (l == target) {
                out.push_back(static_cast<char>(l));
                out.push_back(static_cast<char>(m));
            } else {  // l == target^-1
                out.push_back(static_cast<char>(inv(m)));
                out.push_back(static_cast<char>(l));
            }
            break;
        }
        case Kind::partial_conj: {
            if ((yset >> vtx(l)) & 1u) {
                out.push_back(static_cast<char>(inv(m)));
                out.push_back(static_cast<char>(l));
                out.push_back(static_cast<char>(m));
            } else {
                out.push_back(static_cast<char>(l));
            }
            break;
        }
        case Kind::inversion: {
            out.push_back(static_cast<char>(vtx(l) == vertex ? inv(l) : l));
            break;
        }
        case Kind::graphic: {
            int v = vtx(l);
            letter img = make_letter(perm[v], sig[v]);
            out.push_back(static_cast<char>(is_negative(l) ? inv(img) : img));
            break;
        }
        case Kind::whitehead2: {
            bool in_a = (aset >> l) & 1u;
            bool inv_in_a = (aset >> inv(l)) & 1u;
            if (vtx(l) == vtx(m)) {
                out.push_back(static_cast<char>(l));
            } else if (in_a && inv_in_a) {
                out.push_back(static_cast<char>(inv(m)));
                out.push_back(static_cast<char>(l));
                out.push_back(static_cast<char>(m));
            } else if (in_a) {
                out.push_back(static_cast<char>(l));
                out.push_back(static_cast<char>(m));
            } else if (inv_in_a) {
                out.push_back(static_cast<char>(inv(m)));
                out.push_back(static_cast<char>(l));
            } else {
                out.push_back(static_cast<char>(l));
            }
            break;
        }
    }
    return out;
}

bool whitehead_valid(const Graph& g, uint64_t aset, letter a) {
    int n = g.n();
    if (a < 0 || a >= 2 * n) return false;
    if (!((aset >> a) & 1u)) return false;
    if ((aset >> inv(a)) & 1u) return false;
    if (aset >> (2 * n)) return false;  // letters outside the graph
    int av = vtx(a);
    for (int x = 0; x < n; ++x) {
        if (x == av) continue;
        bool p = (aset >> pos_letter(x)) & 1u;
        bool q = (aset >> neg_letter(x)) & 1u;
        if ((p != q) && !g.dominates(av, x)) return false;
    }
    for (auto& comp : g.components_minus_star(av)) {
        bool any = false, all_double = true;
        for (int y : comp) {
            bool p = (aset >> pos_letter(y)) & 1u;
            bool q = (aset >> neg_letter(y)) & 1u;
            if (p || q) any = true;
            if (!(p && q)) all_double = false;
        }
        if (!any || all_double) continue;
        if (comp.size() == 1 && g.dominates(av, comp[0])) continue;
        return false;
    }
    return true;
}

uint32_t trans_set(const Graph& g, uint64_t aset, letter a) {
    uint32_t out = 0;
    for (int x = 0; x < g.n(); ++x) {
        if (x == vtx(a)) continue;
        bool p = (aset >> pos_letter(x)) & 1u;
        bool q = (aset >> neg_letter(x)) & 1u;
        if (p != q) out |= 1u << x;
    }
    return out;
}

bool whitehead_long_range(const Graph& g, uint64_t aset, letter a) {
    for (int x = 0; x < g.n(); ++x)
        if (g.adjacent(x, vtx(a)) && ((aset >> pos_letter(x)) & 1u || (aset >> neg_letter(x)) & 1u))
            return false;
    return true;
}

bool whitehead_short_range(const Graph& g, uint64_t aset, letter a) {
    uint32_t star = g.star_mask(vtx(a));
    for (int x = 0; x < g.n(); ++x)
        if (!((star >> x) & 1u) &&
            ((aset >> pos_letter(x)) & 1u || (aset >> neg_letter(x)) & 1u))
            return false;
    return true;
}

Automorphism Automorphism::identity(const Graph& g) {
    Automorphism a;
    a.g = &g;
    a.images.resize(g.n());
    for (int v = 0; v < g.n(); ++v) a.images[v] = Word(1, static_cast<char>(pos_letter(v)));
    return a;
}

Automorphism Automorphism::from_factors(const Graph& g, std::vector<Factor> fs) {
    Automorphism a = identity(g);
    a.factors = std::move(fs);
    // Apply right to left: fold each factor over the accumulated images.
    for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it) {
        const Factor f = it->pow == 1 ? *it : it->inverted();
        for (int v = 0; v < g.n(); ++v) {
            Word next;
            for (letter l : a.images[v]) next += f.image_of(l);
            a.images[v] = normalize(g, next);
        }
    }
    return a;
}

Word Automorphism::apply(const Word& w) const {
    Word out;
    for (letter l : w) {
        const Word& img = images[vtx(l)];
        if (is_negative(l))
            out += raag::inverse(img);
        else
            out += img;
    }
    return normalize(*g, out);
}

bool Automorphism::is_identity() const {
    for (int v = 0; v < g->n(); ++v)
        if (images[v] != Word(1, static_cast<char>(pos_letter(v)))) return false;
    return true;
}

Automorphism Automorphism::compose(const Automorphism& rhs) const {
    Automorphism out;
    out.g = g;
    out.factors = factors;
    out.factors.insert(out.factors.end(), rhs.factors.begin(), rhs.factors.end());
    out.images.resize(g->n());
    for (int v = 0; v < g->n(); ++v) out.images[v] = apply(rhs.images[v]);
    return out;
}

Automorphism Automorphism::inverse() const {
    std::vector<Factor> fs;
    fs.reserve(factors.size());
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        Factor f = it->pow == 1 ? it->inverted() : *it;
        f.pow = 1;
        fs.push_back(std::move(f));
    }
    Automorphism out = from_factors(*g, std::move(fs));
    // Confirm against the forward images.
    for (int v = 0; v < g->n(); ++v) {
        Word round = apply(out.images[v]);
        if (round != Word(1, static_cast<char>(pos_letter(v))))
            throw invariant_error("factor-wise inverse failed to invert");
    }
    return out;
}

IMat Automorphism::homology() const {
    IMat m(g->n());
    for (int v = 0; v < g->n(); ++v) {
        auto sums = exponent_sums(*g, images[v]);
        for (int r = 0; r < g->n(); ++r) m.at(r, v) = sums[r];
    }
    return m;
}

Automorphism make_transvection(const Graph& g, letter m, letter target) {
    if (vtx(m) == vtx(target)) throw precondition_error("transvection letters share a vertex");
    if (!g.dominates(vtx(m), vtx(target)))
        throw precondition_error("transvection multiplier must dominate the target");
    return Automorphism::from_factors(g, {Factor::transvection_of(m, target)});
}

Automorphism make_partial_conj(const Graph& g, letter m, uint32_t yset) {
    if (yset & g.star_mask(vtx(m)))
        throw precondition_error("partial conjugation set meets the multiplier star");
    uint32_t rest = yset;
    for (auto& comp : g.components_minus_star(vtx(m))) {
        uint32_t cm = 0;
        for (int v : comp) cm |= 1u << v;
        if ((yset & cm) == cm) rest &= ~cm;
    }
    if (rest)
        throw precondition_error("partial conjugation set is not a union of components");
    return Automorphism::from_factors(g, {Factor::partial_conj_of(m, yset)});
}

Automorphism make_total_conj(const Graph& g, letter m) {
    uint32_t yset = g.all_mask() & ~g.star_mask(vtx(m));
    return Automorphism::from_factors(g, {Factor::partial_conj_of(m, yset)});
}

Automorphism make_inversion(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw precondition_error("inversion vertex out of range");
    return Automorphism::from_factors(g, {Factor::inversion_of(v)});
}

Automorphism make_graphic(const Graph& g, std::vector<int> perm, std::vector<int> sig) {
    int n = g.n();
    if (static_cast<int>(perm.size()) != n || static_cast<int>(sig.size()) != n)
        throw precondition_error("graphic factor arity mismatch");
    std::vector<bool> hit(n, false);
    for (int v = 0; v < n; ++v) {
        if (perm[v] < 0 || perm[v] >= n || hit[perm[v]])
            throw precondition_error("graphic factor is not a permutation");
        hit[perm[v]] = true;
        if (sig[v] != 1 && sig[v] != -1) throw precondition_error("graphic signs must be +-1");
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v]))
                throw precondition_error("permutation does not preserve the graph");
    return Automorphism::from_factors(g, {Factor::graphic_of(std::move(perm), std::move(sig))});
}

Automorphism make_whitehead2(const Graph& g, uint64_t aset, letter a) {
    if (!whitehead_valid(g, aset, a)) throw precondition_error("invalid Whitehead move");
    return Automorphism::from_factors(g, {Factor::whitehead2_of(a, aset)});
}

Automorphism make_conjugation_by(const Graph& g, const Word& u) {
    // c_u: x -> u^-1 x u equals c_{l_k} o ... o c_{l_1} for u = l_1 ... l_k,
    // so the factor list (rightmost first) conjugates by letters in order.
    std::vector<Factor> fs;
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
        letter l = *it;
        fs.push_back(Factor::partial_conj_of(l, g.all_mask() & ~g.star_mask(vtx(l))));
    }
    return Automorphism::from_factors(g, std::move(fs));
}

Automorphism make_comm_transvection(const Graph& g, letter x, letter y, letter c) {
    int xv = vtx(x), yv = vtx(y), cv = vtx(c);
    if (xv == yv || xv == cv || yv == cv)
        throw precondition_error("commutator transvection letters must use distinct vertices");
    if (g.adjacent(xv, yv))
        throw precondition_error("commutator transvection needs a non-commuting pair");
    if (!g.dominates(xv, cv) || !g.dominates(yv, cv))
        throw precondition_error("commutator transvection multipliers must dominate the target");
    Automorphism tx = make_transvection(g, x, c);
    Automorphism ty = make_transvection(g, y, c);
    Automorphism txi = make_transvection(g, inv(x), c);
    Automorphism tyi = make_transvection(g, inv(y), c);
    Automorphism out = tx.compose(ty).compose(txi).compose(tyi);
    // c -> c[x,y], everything else untouched.  For a negative target the
    // positive generator picks up the inverted commutator on the left.
    Word expect;
    if (is_negative(c)) {
        expect.push_back(static_cast<char>(y));
        expect.push_back(static_cast<char>(x));
        expect.push_back(static_cast<char>(inv(y)));
        expect.push_back(static_cast<char>(inv(x)));
        expect.push_back(static_cast<char>(inv(c)));
    } else {
        expect.push_back(static_cast<char>(c));
        expect.push_back(static_cast<char>(x));
        expect.push_back(static_cast<char>(y));
        expect.push_back(static_cast<char>(inv(x)));
        expect.push_back(static_cast<char>(inv(y)));
    }
    for (int v = 0; v < g.n(); ++v) {
        const Word want = v == cv ? normalize(g, expect) : Word(1, static_cast<char>(pos_letter(v)));
        if (out.images[v] != want)
            throw invariant_error("commutator transvection images are wrong");
    }
    return out;
}

Automorphism commutator(const Automorphism& a, const Automorphism& b) {
    return a.compose(b).compose(a.inverse()).compose(b.inverse());
}

bool graphic_is_pure(const Graph& g, const std::vector<int>& perm) {
    for (int v = 0; v < g.n(); ++v)
        if (!g.dom_equivalent(v, perm[v])) return false;
    return true;
}

bool is_peak_reduced(const Graph& g, const std::vector<Automorphism>& fs, const Word& w) {
    std::vector<size_t> lens;
    lens.push_back(conjugacy_length(g, w));
    Word cur = normalize(g, w);
    for (auto& f : fs) {
        cur = f.apply(cur);
        lens.push_back(conjugacy_length(g, cur));
    }
    for (size_t i = 1; i + 1 < lens.size(); ++i) {
        bool peak = lens[i - 1] <= lens[i] && lens[i] >= lens[i + 1] &&
                    !(lens[i - 1] == lens[i] && lens[i] == lens[i + 1]);
        if (peak) return false;
    }
    return true;
}

std::vector<OmegaMove> enumerate_whitehead_moves(const Graph& g, size_t cap) {
    // For each multiplier a, independent choices per other vertex x: out,
    // doubly in, or (if dominated) one single sign; components off st(a) are
    // then checked wholesale by whitehead_valid.  Enumerate subsets directly
    // when n is small; the count of candidate (A, a) is 2n * 4^(n-1) at worst.
    std::vector<OmegaMove> out;
    int n = g.n();
    if (n > 10) throw resource_error("Whitehead move enumeration needs at most 10 vertices");
    for (letter a = 0; a < 2 * n; ++a) {
        int av = vtx(a);
        std::vector<int> others;
        for (int x = 0; x < n; ++x)
            if (x != av) others.push_back(x);
        size_t combos = 1;
        for (size_t i = 0; i < others.size(); ++i) combos *= 4;
        for (size_t code = 0; code < combos; ++code) {
            uint64_t aset = 1ull << a;
            size_t c = code;
            for (int x : others) {
                switch (c & 3) {
                    case 0: break;
                    case 1: aset |= 1ull << pos_letter(x); break;
                    case 2: aset |= 1ull << neg_letter(x); break;
                    case 3: aset |= (1ull << pos_letter(x)) | (1ull << neg_letter(x)); break;
                }
                c >>= 2;
            }
            if (whitehead_valid(g, aset, a)) {
                out.push_back({aset, a});
                if (out.size() > cap) throw resource_error("too many Whitehead moves");
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const OmegaMove& l, const OmegaMove& r) {
        return l.a != r.a ? l.a < r.a : l.aset < r.aset;
    });
    return out;
}

std::vector<Automorphism> enumerate_type1(const Graph& g, size_t cap) {
    auto perms = g.automorphisms();
    size_t total = perms.size() << g.n();
    if (total > cap) throw resource_error("graphic-with-signs enumeration exceeds the cap");
    std::vector<Automorphism> out;
    out.reserve(total);
    for (auto& p : perms) {
        for (uint32_t sbits = 0; sbits < (1u << g.n()); ++sbits) {
            std::vector<int> sig(g.n(), 1);
            for (int v = 0; v < g.n(); ++v)
                if ((sbits >> v) & 1u) sig[v] = -1;
            out.push_back(make_graphic(g, p, sig));
        }
    }
    return out;
}

std::vector<LsGenerator> ls_generators(const Graph& g) {
    std::vector<LsGenerator> out;
    int n = g.n();
    for (letter m = 0; m < 2 * n; ++m)
        for (letter t = 0; t < 2 * n; ++t) {
            if (vtx(m) == vtx(t)) continue;
            if (!g.dominates(vtx(m), vtx(t))) continue;
            out.push_back({"transvection", false, make_transvection(g, m, t)});
        }
    for (letter m = 0; m < 2 * n; ++m)
        for (auto& comp : g.components_minus_star(vtx(m))) {
            uint32_t cm = 0;
            for (int v : comp) cm |= 1u << v;
            out.push_back({"partial_conj", false, make_partial_conj(g, m, cm)});
        }
    for (int v = 0; v < n; ++v) out.push_back({"inversion", false, make_inversion(g, v)});
    std::vector<int> plus(n, 1);
    for (auto& p : g.automorphisms()) {
        bool ident = true;
        for (int v = 0; v < n; ++v) ident = ident && p[v] == v;
        if (ident) continue;
        out.push_back({"graphic", graphic_is_pure(g, p), make_graphic(g, p, plus)});
    }
    return out;
}

}  // namespace raag
