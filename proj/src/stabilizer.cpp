#include "raag/stabilizer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "raag/errors.hpp"

namespace raag {

namespace {

std::string letter_name(const Graph& g, letter l) {
    std::string s = g.name(vtx(l));
    if (is_negative(l)) s += "^-1";
    return s;
}

std::string lset_name(const Graph& g, uint64_t aset) {
    std::string s = "{";
    bool first = true;
    for (letter l = 0; l < letter(2 * g.n()); ++l)
        if ((aset >> l) & 1ull) {
            if (!first) s += ",";
            s += letter_name(g, l);
            first = false;
        }
    return s + "}";
}

std::string move_name(const Graph& g, const OmegaMove& m) {
    return "(" + lset_name(g, m.aset) + "," + letter_name(g, m.a) + ")";
}

// Graphic-with-signs automorphisms have single-letter images; describe one by
// where it sends each vertex.
std::string type1_name(const Graph& g, const Automorphism& a) {
    std::string s = "sigma{";
    for (int v = 0; v < g.n(); ++v) {
        if (v) s += ",";
        s += g.name(v) + "->" + letter_name(g, a.images[v][0]);
    }
    return s + "}";
}

bool fixes_q_letters(const Structure& s, const Automorphism& a) {
    for (int v = 0; v < s.g->n(); ++v) {
        if (!((s.supp_q >> v) & 1u)) continue;
        if (a.images[v] != Word(1, static_cast<char>(pos_letter(v)))) return false;
    }
    return true;
}

}  // namespace

int DeltaGraph::vertex_index(const Word& w) const {
    for (size_t i = 0; i < verts.size(); ++i)
        if (verts[i] == w) return static_cast<int>(i);
    return -1;
}

DeltaGraph build_delta(const Structure& s, const Caps& caps) {
    const Graph& g = *s.g;
    if (g.n() > caps.max_vertices)
        throw resource_error("graph is larger than the orbit construction cap");
    if (s.w0.size() > caps.max_relator_len)
        throw resource_error("relator is longer than the orbit construction cap");

    DeltaGraph d;
    d.moves = enumerate_whitehead_moves(g, caps.max_omega);
    d.type1 = enumerate_type1(g, caps.max_omega);
    std::vector<Automorphism> move_auts;
    move_auts.reserve(d.moves.size());
    for (auto& m : d.moves) move_auts.push_back(make_whitehead2(g, m.aset, m.a));

    Word base = cyclic_canonical(g, s.w0, caps.max_states);
    if (base.size() != s.w0.size())
        throw invariant_error("relator is not cyclically minimal");
    d.verts.push_back(base);
    std::map<Word, int> index{{base, 0}};

    for (size_t i = 0; i < d.verts.size(); ++i) {
        if (d.verts.size() > caps.max_states)
            throw resource_error("orbit exceeds the state cap");
        const Word cur = d.verts[i];  // verts grows below
        auto visit = [&](bool graphic, int mi, const Automorphism& a) {
            Word img = cyclic_canonical(g, a.apply(cur), caps.max_states);
            if (img.size() < base.size())
                throw invariant_error("orbit image is shorter than the relator");
            if (img.size() > base.size()) return;
            auto [it, fresh] = index.emplace(img, static_cast<int>(d.verts.size()));
            if (fresh) d.verts.push_back(img);
            d.edges.push_back({static_cast<int>(i), it->second, graphic, mi});
        };
        for (size_t mi = 0; mi < move_auts.size(); ++mi)
            visit(false, static_cast<int>(mi), move_auts[mi]);
        for (size_t ti = 0; ti < d.type1.size(); ++ti)
            visit(true, static_cast<int>(ti), d.type1[ti]);
    }

    // Component of the base under non-graphic edges only.  Inverse moves are
    // themselves enumerated, so directed reachability is symmetric.
    d.in_dprime.assign(d.verts.size(), 0);
    d.in_dprime[0] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& e : d.edges)
            if (!e.graphic && d.in_dprime[e.src] && !d.in_dprime[e.dst]) {
                d.in_dprime[e.dst] = 1;
                changed = true;
            }
    }
    return d;
}

SpanningData maximal_tree(const Structure& s, const DeltaGraph& d) {
    const Graph& g = *s.g;
    const int nv = static_cast<int>(d.verts.size());
    const uint32_t wsupp = support_mask(s.w0);
    SpanningData t;
    t.parent.resize(nv);
    t.alpha.resize(nv);
    t.alpha_inv.resize(nv);

    std::vector<std::vector<int>> out_edges(nv);
    for (size_t ei = 0; ei < d.edges.size(); ++ei)
        out_edges[d.edges[ei].src].push_back(static_cast<int>(ei));

    // Tree over the non-graphic component first, one edge per new vertex,
    // with each edge normalized so its move only transvects relator letters.
    std::vector<char> seen(nv, 0);
    seen[0] = 1;
    t.alpha[0] = Automorphism::identity(g);
    t.alpha_inv[0] = Automorphism::identity(g);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int ei : out_edges[u]) {
            const auto& e = d.edges[ei];
            if (e.graphic || seen[e.dst]) continue;
            const OmegaMove& mv = d.moves[e.move];
            if (!((wsupp >> vtx(mv.a)) & 1u))
                throw invariant_error("tree edge multiplier misses the relator support");
            OmegaMove norm = mv;
            uint32_t tr = trans_set(g, mv.aset, mv.a);
            if ((tr & ~wsupp) != 0) {
                // Split off the transvections of letters the relator never
                // uses; that remainder must fix the source.
                uint64_t a2 = 1ull << mv.a;
                for (int v = 0; v < g.n(); ++v) {
                    if (!((tr >> v) & 1u) || ((wsupp >> v) & 1u)) continue;
                    if ((mv.aset >> pos_letter(v)) & 1ull)
                        a2 |= 1ull << pos_letter(v);
                    else
                        a2 |= 1ull << neg_letter(v);
                }
                uint64_t a1 = (mv.aset & ~a2) | (1ull << mv.a);
                if (!whitehead_valid(g, a1, mv.a) || !whitehead_valid(g, a2, mv.a))
                    throw invariant_error("edge split is not a pair of valid moves");
                Automorphism rest = make_whitehead2(g, a2, mv.a);
                if (cyclic_canonical(g, rest.apply(d.verts[u])) != d.verts[u])
                    throw invariant_error("edge remainder moves its source");
                norm.aset = a1;
            }
            Automorphism step = make_whitehead2(g, norm.aset, norm.a);
            if (cyclic_canonical(g, step.apply(d.verts[u])) != d.verts[e.dst])
                throw invariant_error("normalized edge misses its target");
            t.parent[e.dst].src = u;
            t.parent[e.dst].graphic = false;
            t.parent[e.dst].move = norm;
            t.alpha[e.dst] = step.compose(t.alpha[u]);
            t.alpha_inv[e.dst] = t.alpha[e.dst].inverse();
            seen[e.dst] = 1;
            queue.push_back(e.dst);
        }
    }
    for (int v = 0; v < nv; ++v)
        if (static_cast<bool>(seen[v]) != static_cast<bool>(d.in_dprime[v]))
            throw invariant_error("tree walk disagrees with the edge component");

    // Each remaining vertex hangs off the component by a single graphic edge.
    for (int v = 0; v < nv; ++v) {
        if (seen[v]) continue;
        int found = -1;
        for (size_t ei = 0; ei < d.edges.size() && found < 0; ++ei) {
            const auto& e = d.edges[ei];
            if (e.graphic && e.dst == v && d.in_dprime[e.src]) found = static_cast<int>(ei);
        }
        if (found < 0)
            throw invariant_error("no single graphic edge reaches an outside vertex");
        const auto& e = d.edges[found];
        t.parent[v].src = e.src;
        t.parent[v].graphic = true;
        t.parent[v].type1_index = e.move;
        t.alpha[v] = d.type1[e.move].compose(t.alpha[e.src]);
        t.alpha_inv[v] = t.alpha[v].inverse();
        seen[v] = 1;
    }

    for (int v = 0; v < nv; ++v)
        if (cyclic_canonical(g, t.alpha[v].apply(s.w0)) != d.verts[v])
            throw invariant_error("path automorphism misses its vertex");
    return t;
}

std::vector<StabGenerator> stabilizer_generators(const Structure& s, const DeltaGraph& d,
                                                 const SpanningData& t) {
    const Graph& g = *s.g;
    const uint32_t wsupp = support_mask(s.w0);
    std::vector<StabGenerator> out;
    std::set<std::vector<Word>> seen;

    auto push = [&](const char* origin, std::string name, Automorphism a) {
        if (a.is_identity()) return;
        if (!seen.insert(a.images).second) return;
        if (cyclic_canonical(g, a.apply(s.w0)) != d.verts[0])
            throw invariant_error("stabilizer generator moves the relator class");
        if (!(wedge_act(a.homology(), s.q) == s.q))
            throw invariant_error("stabilizer generator moves the form");
        out.push_back({origin, std::move(name), std::move(a)});
    };

    // Edge generators: qualifying loops and chords over the non-graphic
    // component, closed into base loops through the tree paths.
    for (auto& e : d.edges) {
        if (!d.in_dprime[e.src] || !d.in_dprime[e.dst]) continue;
        Automorphism mid;
        std::string name;
        if (e.graphic) {
            if (!fixes_q_letters(s, d.type1[e.move])) continue;
            mid = d.type1[e.move];
            name = type1_name(g, mid);
        } else {
            const OmegaMove& mv = d.moves[e.move];
            if ((trans_set(g, mv.aset, mv.a) & ~wsupp) != 0) continue;
            mid = make_whitehead2(g, mv.aset, mv.a);
            if (mid.is_identity()) continue;
            name = move_name(g, mv);
        }
        std::string ends =
            "[" + std::to_string(e.src) + "->" + std::to_string(e.dst) + "]";
        push("edge", "loop" + ends + name,
             t.alpha_inv[e.dst].compose(mid).compose(t.alpha[e.src]));
    }

    // Kernel generators over the form's support: commutator transvections and
    // one-term conjugations with dominating actors, plus total conjugations.
    for (int cv = 0; cv < g.n(); ++cv) {
        if (!((s.supp_q >> cv) & 1u)) continue;
        letter c = pos_letter(cv);
        for (letter x = 0; x < letter(2 * g.n()); ++x) {
            if (vtx(x) == cv || !g.dominates(vtx(x), cv)) continue;
            for (letter y = x + 1; y < letter(2 * g.n()); ++y) {
                if (vtx(y) == cv || vtx(y) == vtx(x)) continue;
                if (!g.dominates(vtx(y), cv)) continue;
                if (g.adjacent(vtx(x), vtx(y))) continue;
                push("kernel",
                     "tau_[" + letter_name(g, x) + "," + letter_name(g, y) + "]," + g.name(cv),
                     make_comm_transvection(g, x, y, c));
            }
        }
        for (int xv = 0; xv < g.n(); ++xv) {
            if (xv == cv || !g.dominates(xv, cv)) continue;
            if ((g.star_mask(xv) >> cv) & 1u) continue;
            push("kernel", "c_{" + g.name(xv) + ",{" + g.name(cv) + "}}",
                 make_partial_conj(g, pos_letter(xv), 1u << cv));
        }
    }
    for (int v = 0; v < g.n(); ++v)
        push("kernel", "c_" + g.name(v), make_total_conj(g, pos_letter(v)));

    // Lifts of the arithmetic generators of the form's stabilizer.
    for (auto& qg : enumerate_q_generators(s)) {
        std::string name = qg.kind + "(" + letter_name(g, qg.a);
        if (qg.kind == "cross") name += "," + letter_name(g, qg.b);
        name += ")";
        push("arithmetic", std::move(name), qg.lift);
    }
    return out;
}

std::vector<StabGenerator> si_generators(const Structure& s) {
    const Graph& g = *s.g;
    std::vector<StabGenerator> out;
    std::set<std::vector<Word>> seen;
    auto push = [&](std::string name, Automorphism a) {
        if (a.is_identity()) return;
        if (!seen.insert(a.images).second) return;
        if (a.apply(s.w0) != s.w0)
            throw invariant_error("independent generator moves the relator");
        out.push_back({"inertia", std::move(name), std::move(a)});
    };
    for (int bv = 0; bv < g.n(); ++bv) {
        if (!((s.supp_q >> bv) & 1u)) continue;
        letter b = pos_letter(bv);
        for (letter a = 0; a < letter(2 * g.n()); ++a) {
            if (vtx(a) == bv || !g.dominates(vtx(a), bv)) continue;
            push("tau_{" + letter_name(g, a) + "," + letter_name(g, b) + "}",
                 make_transvection(g, a, b));
        }
        push("inv_" + g.name(bv), make_inversion(g, bv));
    }
    return out;
}

std::vector<StabGenerator> centralizer_generators(const Structure& s) {
    const Graph& g = *s.g;
    if (s.w0.empty()) throw precondition_error("the relator is trivial");
    if (proper_power_root(g, s.w0) != s.w0)
        throw precondition_error("the relator is a proper power");
    const uint32_t wsupp = support_mask(s.w0);

    // The non-commutation graph on the support must be connected; otherwise
    // the relator splits into commuting parts with a larger centralizer.
    int start = 0;
    while (!((wsupp >> start) & 1u)) ++start;
    uint32_t comp = 1u << start;
    std::deque<int> queue{start};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < g.n(); ++v) {
            if (!((wsupp >> v) & 1u) || ((comp >> v) & 1u)) continue;
            if (v == u || g.adjacent(u, v)) continue;
            comp |= 1u << v;
            queue.push_back(v);
        }
    }
    if (comp != wsupp)
        throw precondition_error("the relator support splits into commuting parts");

    std::vector<StabGenerator> out;
    out.push_back({"centralizer", "c_{" + format_word(g, s.w0) + "}",
                   make_conjugation_by(g, s.w0)});
    for (int v = 0; v < g.n(); ++v) {
        if ((g.link_mask(v) & wsupp) != wsupp) continue;
        out.push_back({"centralizer", "c_" + g.name(v), make_total_conj(g, pos_letter(v))});
    }
    return out;
}

std::vector<StabGenerator> mod_generators(const Structure& s, const Caps& caps) {
    const Graph& g = *s.g;
    DeltaGraph d = build_delta(s, caps);
    SpanningData t = maximal_tree(s, d);

    std::vector<StabGenerator> out;
    std::set<std::vector<Word>> seen;
    auto push = [&](StabGenerator sg) {
        if (sg.aut.is_identity()) return;
        if (!seen.insert(sg.aut.images).second) return;
        if (sg.aut.apply(s.w0) != s.w0)
            throw invariant_error("emitted generator moves the relator");
        if (!(wedge_act(sg.aut.homology(), s.q) == s.q))
            throw invariant_error("emitted generator moves the form");
        out.push_back(std::move(sg));
    };

    // Class stabilizer, each element pulled onto the relator itself by a
    // bounded conjugator search.
    for (auto& sg : stabilizer_generators(s, d, t)) {
        Word img = sg.aut.apply(s.w0);
        if (img == s.w0) {
            push(std::move(sg));
            continue;
        }
        auto u = find_conjugator(g, img, s.w0, img.size() + s.w0.size() + 2, caps.max_states);
        if (!u)
            throw resource_error("conjugator search failed for generator " + sg.name);
        push({"adjusted", sg.name, make_conjugation_by(g, *u).compose(sg.aut)});
    }

    // Inner part: the centralizer of the relator (everything, when trivial).
    if (s.w0.empty()) {
        for (int v = 0; v < g.n(); ++v)
            push({"centralizer", "c_" + g.name(v), make_total_conj(g, pos_letter(v))});
    } else {
        for (auto& cg : centralizer_generators(s)) push(std::move(cg));
    }

    // Finite-index completion: one structure-preserving representative per
    // class of graph symmetries that move some domination class.
    std::vector<std::vector<int>> perms;
    std::vector<int> perm_of(d.type1.size());
    for (size_t i = 0; i < d.type1.size(); ++i) {
        std::vector<int> p(g.n());
        for (int v = 0; v < g.n(); ++v) p[v] = vtx(d.type1[i].images[v][0]);
        int id = -1;
        for (size_t j = 0; j < perms.size() && id < 0; ++j)
            if (perms[j] == p) id = static_cast<int>(j);
        if (id < 0) {
            id = static_cast<int>(perms.size());
            perms.push_back(p);
        }
        perm_of[i] = id;
    }
    std::vector<int> coset_of(perms.size(), -1);
    std::vector<std::vector<int>> coset_reps;
    for (size_t i = 0; i < perms.size(); ++i) {
        for (size_t c = 0; c < coset_reps.size() && coset_of[i] < 0; ++c) {
            const std::vector<int>& r = coset_reps[c];
            std::vector<int> rinv(g.n());
            for (int v = 0; v < g.n(); ++v) rinv[r[v]] = v;
            std::vector<int> diff(g.n());
            for (int v = 0; v < g.n(); ++v) diff[v] = perms[i][rinv[v]];
            if (graphic_is_pure(g, diff)) coset_of[i] = static_cast<int>(c);
        }
        if (coset_of[i] < 0) {
            coset_of[i] = static_cast<int>(coset_reps.size());
            coset_reps.push_back(perms[i]);
        }
    }
    std::vector<char> done(coset_reps.size(), 0);
    for (size_t c = 0; c < coset_reps.size(); ++c)
        if (graphic_is_pure(g, coset_reps[c])) done[c] = 1;  // already inside the theorem set
    for (size_t i = 0; i < d.type1.size(); ++i) {
        int c = coset_of[perm_of[i]];
        if (done[c]) continue;
        const Automorphism& sigma = d.type1[i];
        if (cyclic_canonical(g, sigma.apply(s.w0)) != d.verts[0]) continue;
        if (!(wedge_act(sigma.homology(), s.q) == s.q)) continue;
        done[c] = 1;
        Word img = sigma.apply(s.w0);
        if (img == s.w0) {
            push({"coset", type1_name(g, sigma), sigma});
        } else {
            auto u = find_conjugator(g, img, s.w0, img.size() + s.w0.size() + 2, caps.max_states);
            if (!u)
                throw resource_error("conjugator search failed for generator " +
                                     type1_name(g, sigma));
            push({"coset", type1_name(g, sigma), make_conjugation_by(g, *u).compose(sigma)});
        }
    }
    return out;
}

}  // namespace raag
