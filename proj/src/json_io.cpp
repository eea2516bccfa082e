#include "raag/json_io.hpp"

#include <utility>

#include "raag/errors.hpp"

namespace raag {

namespace {

json names_of_mask(const Graph& g, uint32_t mask) {
    json out = json::array();
    for (int v = 0; v < g.n(); ++v)
        if (mask >> v & 1u) out.push_back(g.name(v));
    return out;
}

uint32_t mask_of_names(const Graph& g, const json& j) {
    uint32_t m = 0;
    for (auto& name : j) m |= 1u << g.vertex_index(name.get<std::string>());
    return m;
}

json letters_of_set(const Graph& g, uint64_t aset) {
    json out = json::array();
    for (letter l = 0; l < 2 * g.n(); ++l)
        if (aset >> l & 1ull) out.push_back(letter_to_string(g, l));
    return out;
}

uint64_t set_of_letters(const Graph& g, const json& j) {
    uint64_t m = 0;
    for (auto& s : j) m |= 1ull << letter_from_string(g, s.get<std::string>());
    return m;
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw input_error(std::string("missing field '") + name + "'");
    return *it;
}

}  // namespace

json graph_to_json(const Graph& g) {
    json out;
    out["vertices"] = json::array();
    for (int v = 0; v < g.n(); ++v) out["vertices"].push_back(g.name(v));
    out["edges"] = json::array();
    for (auto& [u, v] : g.edge_list()) out["edges"].push_back({g.name(u), g.name(v)});
    return out;
}

Graph graph_from_json(const json& j) { return Graph::parse(j.dump()); }

std::string letter_to_string(const Graph& g, letter l) {
    std::string s = g.name(vtx(l));
    if (is_negative(l)) s += "^-1";
    return s;
}

letter letter_from_string(const Graph& g, const std::string& s) {
    bool neg = false;
    std::string name = s;
    if (name.size() > 4 && name.substr(name.size() - 4) == "^-1") {
        neg = true;
        name = name.substr(0, name.size() - 4);
    } else if (name.size() > 4 && name.substr(name.size() - 4) == "^+1") {
        name = name.substr(0, name.size() - 4);
    }
    return make_letter(g.vertex_index(name), neg ? -1 : 1);
}

json word_to_json(const Graph& g, const Word& w) {
    json out = json::array();
    for (char c : w) out.push_back(letter_to_string(g, static_cast<letter>(c)));
    return out;
}

json factor_to_json(const Graph& g, const Factor& f) {
    json out;
    switch (f.kind) {
        case Factor::Kind::transvection:
            out["kind"] = "transvection";
            out["m"] = letter_to_string(g, f.m);
            out["target"] = letter_to_string(g, f.target);
            out["pow"] = f.pow;
            break;
        case Factor::Kind::partial_conj:
            out["kind"] = "partial_conj";
            out["m"] = letter_to_string(g, f.m);
            out["set"] = names_of_mask(g, f.yset);
            out["pow"] = f.pow;
            break;
        case Factor::Kind::inversion:
            out["kind"] = "inversion";
            out["vertex"] = g.name(f.vertex);
            break;
        case Factor::Kind::graphic: {
            out["kind"] = "graphic";
            json perm = json::object();
            for (int v = 0; v < g.n(); ++v) {
                std::string img = g.name(f.perm[v]);
                if (f.sig[v] < 0) img += "^-1";
                perm[g.name(v)] = img;
            }
            out["perm"] = std::move(perm);
            break;
        }
        case Factor::Kind::whitehead2:
            out["kind"] = "whitehead2";
            out["a"] = letter_to_string(g, f.m);
            out["set"] = letters_of_set(g, f.aset);
            break;
    }
    return out;
}

Factor factor_from_json(const Graph& g, const json& j) {
    std::string kind = field(j, "kind").get<std::string>();
    int pow = j.value("pow", 1);
    if (pow != 1 && pow != -1) throw input_error("factor power must be 1 or -1");
    if (kind == "transvection") {
        Factor f = Factor::transvection_of(letter_from_string(g, field(j, "m")),
                                           letter_from_string(g, field(j, "target")));
        f.pow = pow;
        return f;
    }
    if (kind == "partial_conj") {
        Factor f = Factor::partial_conj_of(letter_from_string(g, field(j, "m")),
                                           mask_of_names(g, field(j, "set")));
        f.pow = pow;
        return f;
    }
    if (kind == "inversion")
        return Factor::inversion_of(g.vertex_index(field(j, "vertex").get<std::string>()));
    if (kind == "graphic") {
        const json& pj = field(j, "perm");
        std::vector<int> perm(g.n()), sig(g.n(), 1);
        for (int v = 0; v < g.n(); ++v) {
            auto it = pj.find(g.name(v));
            if (it == pj.end()) throw input_error("graphic factor misses vertex " + g.name(v));
            letter l = letter_from_string(g, it->get<std::string>());
            perm[v] = vtx(l);
            sig[v] = sign_of(l);
        }
        return Factor::graphic_of(std::move(perm), std::move(sig));
    }
    if (kind == "whitehead2")
        return Factor::whitehead2_of(letter_from_string(g, field(j, "a")),
                                     set_of_letters(g, field(j, "set")));
    throw input_error("unknown factor kind '" + kind + "'");
}

json automorphism_to_json(const Automorphism& a) {
    const Graph& g = *a.g;
    json out;
    out["factors"] = json::array();
    for (auto& f : a.factors) out["factors"].push_back(factor_to_json(g, f));
    out["images"] = json::object();
    for (int v = 0; v < g.n(); ++v) out["images"][g.name(v)] = word_to_json(g, a.images[v]);
    return out;
}

Automorphism automorphism_from_json(const Graph& g, const json& j) {
    std::vector<Factor> fs;
    for (auto& fj : field(j, "factors")) fs.push_back(factor_from_json(g, fj));
    return Automorphism::from_factors(g, std::move(fs));
}

json matrix_to_json(const IMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    json out;
    out["n"] = m.n;
    out["rows"] = std::move(rows);
    return out;
}

IMat matrix_from_json(const json& j) {
    const json& rows = j.is_array() ? j : field(j, "rows");
    if (!rows.is_array()) throw input_error("matrix rows must be an array");
    int n = static_cast<int>(rows.size());
    IMat m(n);
    for (int i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
            throw input_error("matrix is not square");
        for (int c = 0; c < n; ++c) m.at(i, c) = rows[i][c].get<long long>();
    }
    return m;
}

json wedge_to_json(const Graph& g, const WedgeForm& w) {
    json terms = json::array();
    for (auto& [ij, c] : w.coef) terms.push_back({g.name(ij.first), g.name(ij.second), c});
    json out;
    out["n"] = w.n;
    out["terms"] = std::move(terms);
    return out;
}

WedgeForm wedge_from_json(const Graph& g, const json& j) {
    WedgeForm w(g.n());
    for (auto& t : field(j, "terms")) {
        if (!t.is_array() || t.size() != 3) throw input_error("wedge term must be [i, j, coef]");
        w.add(g.vertex_index(t[0].get<std::string>()), g.vertex_index(t[1].get<std::string>()),
              t[2].get<long long>());
    }
    return w;
}

json structure_to_json(const Structure& s) {
    const Graph& g = *s.g;
    auto pair_list = [&](const std::vector<std::pair<letter, letter>>& ps) {
        json out = json::array();
        for (auto& [a, b] : ps) out.push_back({letter_to_string(g, a), letter_to_string(g, b)});
        return out;
    };
    json out;
    out["pairs"] = pair_list(s.pairs);
    out["w_pairs"] = pair_list(s.w_pairs);
    out["q_pairs"] = pair_list(s.q_pairs);
    out["w0"] = word_to_json(g, s.w0);
    out["w0_formatted"] = format_word(g, s.w0);
    out["q"] = wedge_to_json(g, s.q);
    out["k"] = s.k();
    out["supp_w"] = names_of_mask(g, s.supp_w);
    out["supp_q"] = names_of_mask(g, s.supp_q);
    return out;
}

Structure structure_from_json(const Graph& g, const json& j) {
    std::vector<std::pair<letter, letter>> pairs;
    for (auto& p : field(j, "pairs")) {
        if (!p.is_array() || p.size() != 2) throw input_error("pair must be [a, b]");
        pairs.emplace_back(letter_from_string(g, p[0].get<std::string>()),
                           letter_from_string(g, p[1].get<std::string>()));
    }
    return make_structure(g, pairs);
}

json qfactor_to_json(const Graph& g, const QFactor& f) {
    json out;
    out["kind"] = f.kind;
    out["a"] = letter_to_string(g, f.a);
    if (f.kind == "cross") out["b"] = letter_to_string(g, f.b);
    out["pow"] = f.pow;
    out["base"] = matrix_to_json(f.base);
    return out;
}

json identity_report_to_json(const IdentityReport& r) {
    json lines = json::array();
    for (auto& l : r.lines) {
        json line;
        line["name"] = l.name;
        line["instances"] = l.instances;
        line["passed"] = l.passed;
        line["failed"] = l.failed;
        line["skipped"] = l.skipped;
        lines.push_back(std::move(line));
    }
    json out;
    out["lines"] = std::move(lines);
    out["notes"] = r.notes;
    out["all_passed"] = r.all_passed();
    return out;
}

}  // namespace raag
