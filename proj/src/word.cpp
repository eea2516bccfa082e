#include "raag/word.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace raag {

namespace {

// A cancelling pair u ... u^-1 whose gap commutes with u can be deleted; scan
// until no such pair remains.  Termination: each deletion shortens the word.
void graphic_reduce(const Graph& g, Word& w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < w.size() && !changed; ++i) {
            letter a = w[i];
            for (size_t j = i + 1; j < w.size(); ++j) {
                letter b = w[j];
                if (b == inv(a)) {
                    w.erase(w.begin() + j);
                    w.erase(w.begin() + i);
                    changed = true;
                    break;
                }
                if (!g.adjacent(vtx(b), vtx(a))) break;  // blocks everything past it
            }
        }
    }
}

// Least shuffle of a reduced word: repeatedly emit the smallest letter whose
// whole prefix commutes with it.
Word least_shuffle(const Graph& g, const Word& w) {
    Word rest = w, out;
    out.reserve(w.size());
    while (!rest.empty()) {
        int best = 0;
        for (size_t i = 1; i < rest.size(); ++i) {
            bool movable = true;
            for (size_t j = 0; j < i && movable; ++j)
                if (!g.adjacent(vtx(rest[j]), vtx(rest[i]))) movable = false;
            if (movable && rest[i] < rest[best]) best = static_cast<int>(i);
        }
        out.push_back(rest[best]);
        rest.erase(rest.begin() + best);
    }
    return out;
}

}  // namespace

Word normalize(const Graph& g, Word w) {
    graphic_reduce(g, w);
    return least_shuffle(g, w);
}

bool graphically_reduced(const Graph& g, const Word& w) {
    Word c = w;
    graphic_reduce(g, c);
    return c.size() == w.size();
}

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(static_cast<char>(inv(*it)));
    return out;
}

Word mul(const Graph& g, const Word& u, const Word& v) { return normalize(g, u + v); }

Word conjugate(const Graph& g, const Word& w, const Word& u) {
    return normalize(g, inverse(u) + w + u);
}

uint32_t support_mask(const Word& w) {
    uint32_t m = 0;
    for (letter l : w) m |= 1u << vtx(l);
    return m;
}

std::vector<long long> exponent_sums(const Graph& g, const Word& w) {
    std::vector<long long> e(g.n(), 0);
    for (letter l : w) e[vtx(l)] += sign_of(l);
    return e;
}

Word parse_word(const Graph& g, const std::string& text) {
    // Tokens: name, name^k (k a signed integer), [name,name].  Whitespace
    // separated; '1' alone is the identity.
    Word out;
    std::istringstream in(text);
    std::string tok;
    auto push_power = [&](const std::string& name, long long k) {
        int v = g.vertex_index(name);
        letter l = k < 0 ? neg_letter(v) : pos_letter(v);
        long long reps = k < 0 ? -k : k;
        for (long long i = 0; i < reps; ++i) out.push_back(static_cast<char>(l));
    };
    while (in >> tok) {
        if (tok == "1") continue;  // identity; never a vertex name
        if (tok.front() == '[') {
            if (tok.back() != ']') throw input_error("bad commutator token '" + tok + "'");
            std::string body = tok.substr(1, tok.size() - 2);
            auto comma = body.find(',');
            if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos)
                throw input_error("bad commutator token '" + tok + "'");
            std::string a = body.substr(0, comma), b = body.substr(comma + 1);
            push_power(a, 1);
            push_power(b, 1);
            push_power(a, -1);
            push_power(b, -1);
            continue;
        }
        auto caret = tok.find('^');
        if (caret == std::string::npos) {
            push_power(tok, 1);
        } else {
            std::string name = tok.substr(0, caret);
            std::string exp = tok.substr(caret + 1);
            try {
                size_t used = 0;
                long long k = std::stoll(exp, &used);
                if (used != exp.size()) throw std::invalid_argument(exp);
                push_power(name, k);
            } catch (const std::logic_error&) {
                throw input_error("bad exponent in token '" + tok + "'");
            }
        }
    }
    return normalize(g, out);
}

std::string format_word(const Graph& g, const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out << ' ';
        out << g.name(vtx(w[i]));
        if (is_negative(w[i])) out << "^-1";
    }
    return out.str();
}

std::vector<Word> cyclic_closure(const Graph& g, const Word& w, size_t cap_states) {
    // Conjugate by single letters, never letting the length grow.  Rotating
    // the literal first character is not enough: a letter can lead the trace
    // only in some other shuffle, so all 2n letters are tried.
    Word start = normalize(g, w);
    std::unordered_set<Word> seen{start};
    std::deque<Word> queue{start};
    size_t len = start.size();
    while (!queue.empty()) {
        Word s = queue.front();
        queue.pop_front();
        if (s.empty()) break;
        bool restarted = false;
        for (int code = 0; code < 2 * g.n() && !restarted; ++code) {
            letter l = code;
            Word r(1, static_cast<char>(inv(l)));
            r += s;
            r.push_back(static_cast<char>(l));
            r = normalize(g, r);
            if (r.size() > len) continue;
            if (r.size() < len) {
                // A seam cancellation found a shorter conjugate: restart there.
                len = r.size();
                seen = {r};
                queue = {r};
                restarted = true;
                continue;
            }
            if (seen.insert(r).second) {
                if (seen.size() > cap_states)
                    throw resource_error("cyclic closure exceeded the state cap");
                queue.push_back(r);
            }
        }
    }
    std::vector<Word> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

Word cyclic_canonical(const Graph& g, const Word& w, size_t cap_states) {
    Word s = normalize(g, w);
    // When no two distinct support vertices commute, letters never shuffle, so
    // the minimal conjugates are exactly the rotations of the cyclically
    // reduced word and the closure search is unnecessary.
    uint32_t m = support_mask(s);
    bool tangled = false;
    for (int u = 0; u < g.n() && !tangled; ++u) {
        if (!(m >> u & 1u)) continue;
        for (int v = u + 1; v < g.n() && !tangled; ++v)
            if ((m >> v & 1u) && g.adjacent(u, v)) tangled = true;
    }
    if (!tangled) {
        while (s.size() >= 2 && s.front() == static_cast<char>(inv(s.back())))
            s = s.substr(1, s.size() - 2);
        Word best = s;
        for (size_t i = 1; i < s.size(); ++i) {
            Word r = s.substr(i) + s.substr(0, i);
            if (r < best) best = r;
        }
        return best;
    }
    return cyclic_closure(g, w, cap_states).front();
}

size_t conjugacy_length(const Graph& g, const Word& w, size_t cap_states) {
    return cyclic_canonical(g, w, cap_states).size();
}

bool conjugate_elements(const Graph& g, const Word& u, const Word& v, size_t cap_states) {
    return cyclic_canonical(g, u, cap_states) == cyclic_canonical(g, v, cap_states);
}

std::optional<Word> find_conjugator(const Graph& g, const Word& v, const Word& target,
                                    size_t depth_cap, size_t cap_states) {
    Word start = normalize(g, v);
    Word goal = normalize(g, target);
    if (start == goal) return Word{};
    if (start.size() < goal.size()) return std::nullopt;
    // States are normalized conjugates at non-increasing length; the conjugator
    // accumulates on the right: moving to l^-1 s l appends l.
    std::unordered_map<Word, Word> how{{start, Word{}}};
    std::deque<Word> queue{start};
    size_t depth = 0;
    while (!queue.empty() && depth < depth_cap) {
        std::deque<Word> next;
        for (auto& s : queue) {
            Word u = how[s];
            for (int code = 0; code < 2 * g.n(); ++code) {
                letter l = code;
                Word t(1, static_cast<char>(inv(l)));
                t += s;
                t.push_back(static_cast<char>(l));
                t = normalize(g, t);
                if (t.size() > s.size()) continue;
                if (how.count(t)) continue;
                if (how.size() >= cap_states)
                    throw resource_error("conjugator search exceeded the state cap");
                Word u2 = u;
                u2.push_back(static_cast<char>(l));
                how.emplace(t, u2);
                if (t == goal) return normalize(g, u2);
                next.push_back(std::move(t));
            }
        }
        queue = std::move(next);
        ++depth;
    }
    if (queue.empty()) return std::nullopt;
    throw resource_error("conjugator search exceeded the depth cap");
}

namespace {

// Index of an occurrence of l that shuffles to the front, or -1.  Only the
// first occurrence of the vertex can qualify.
int leading_pos(const Graph& g, const Word& w, letter l) {
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] == l) {
            for (size_t j = 0; j < i; ++j)
                if (!g.adjacent(vtx(w[j]), vtx(l))) return -1;
            return static_cast<int>(i);
        }
        if (vtx(w[i]) == vtx(l)) return -1;
    }
    return -1;
}

bool peel_rec(const Graph& g, const Word& w, uint32_t used,
              std::vector<std::pair<letter, letter>>& pairs) {
    if (w.empty()) return true;
    // Candidate first letters in order gives the lexicographically least peel.
    for (int av = 0; av < g.n(); ++av) {
        if ((used >> av) & 1u) continue;
        if (!((support_mask(w) >> av) & 1u)) continue;
        for (int asig = 0; asig < 2; ++asig) {
            letter a = 2 * av + asig;
            int pa = leading_pos(g, w, a);
            if (pa < 0) continue;
            for (int bv = 0; bv < g.n(); ++bv) {
                if (bv == av || ((used >> bv) & 1u)) continue;
                if (g.adjacent(av, bv)) continue;
                if (!((support_mask(w) >> bv) & 1u)) continue;
                for (int bsig = 0; bsig < 2; ++bsig) {
                    letter b = 2 * bv + bsig;
                    Word rest = w;
                    bool ok = true;
                    for (letter l : {a, b, inv(a), inv(b)}) {
                        int p = leading_pos(g, rest, l);
                        if (p < 0) {
                            ok = false;
                            break;
                        }
                        rest.erase(rest.begin() + p);
                    }
                    if (!ok) continue;
                    pairs.emplace_back(a, b);
                    if (peel_rec(g, rest, used | (1u << av) | (1u << bv), pairs)) return true;
                    pairs.pop_back();
                }
            }
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::pair<letter, letter>>> surface_relator_pairs(const Graph& g,
                                                                            const Word& w) {
    Word v = normalize(g, w);
    if (v.empty() || v.size() % 4 != 0) return std::nullopt;
    // Every supporting vertex must occur exactly twice, once per sign.
    std::vector<int> pos(g.n(), 0), neg(g.n(), 0);
    for (letter l : v) (is_negative(l) ? neg : pos)[vtx(l)] += 1;
    int verts = 0;
    for (int i = 0; i < g.n(); ++i) {
        if (pos[i] == 0 && neg[i] == 0) continue;
        if (pos[i] != 1 || neg[i] != 1) return std::nullopt;
        ++verts;
    }
    if (static_cast<size_t>(verts) * 2 != v.size()) return std::nullopt;
    std::vector<std::pair<letter, letter>> pairs;
    if (peel_rec(g, v, 0, pairs)) return pairs;
    return std::nullopt;
}

namespace {

// Enumerate length-target left divisors of s (prefixes up to shuffles, i.e.
// words of letters removable one leading letter at a time) and test whether
// any divisor r satisfies r^m = s.
bool find_root(const Graph& g, const Word& s, const Word& sofar, size_t target, size_t m,
               std::unordered_set<Word>& visited, Word& root_out) {
    if (sofar.size() == target) {
        Word pw;
        for (size_t i = 0; i < m; ++i) pw += sofar;
        if (normalize(g, pw) == s) {
            root_out = sofar;
            return true;
        }
        return false;
    }
    Word rest = s;
    for (letter l : sofar) {
        int p = leading_pos(g, rest, l);
        rest.erase(rest.begin() + p);
    }
    uint64_t tried = 0;  // distinct leading letters, one attempt each
    for (size_t i = 0; i < rest.size(); ++i) {
        letter l = rest[i];
        if ((tried >> l) & 1u) continue;
        if (leading_pos(g, rest, l) != static_cast<int>(i)) continue;
        tried |= 1ull << l;
        Word next = sofar;
        next.push_back(static_cast<char>(l));
        if (!visited.insert(next).second) continue;
        if (find_root(g, s, next, target, m, visited, root_out)) return true;
    }
    return false;
}

}  // namespace

Word proper_power_root(const Graph& g, const Word& w, size_t cap_states) {
    Word c = cyclic_canonical(g, w, cap_states);
    if (c.size() < 2) return c;
    auto states = cyclic_closure(g, w, cap_states);
    // w ~ r^m iff some minimal-length conjugate equals r^m exactly; the root is
    // then a left divisor of that state.  Smallest divisor length first finds
    // the primitive root.
    for (size_t plen = 1; plen <= c.size() / 2; ++plen) {
        if (c.size() % plen != 0) continue;
        size_t m = c.size() / plen;
        for (const Word& s : states) {
            std::unordered_set<Word> visited;
            Word root;
            if (find_root(g, s, Word{}, plen, m, visited, root))
                return cyclic_canonical(g, root, cap_states);
        }
    }
    return c;
}

}  // namespace raag
