#include "raag/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace raag {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Graph::Graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(names)), adj_(names_.size(), 0) {
    if (n() > max_vertices) throw input_error("too many vertices (limit 30)");
    for (int i = 0; i < n(); ++i) {
        if (!valid_name(names_[i])) throw input_error("bad vertex name '" + names_[i] + "'");
        for (int j = 0; j < i; ++j)
            if (names_[i] == names_[j]) throw input_error("duplicate vertex '" + names_[i] + "'");
    }
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n() || v < 0 || v >= n()) throw input_error("edge endpoint out of range");
        if (u == v) throw input_error("loop edge at '" + names_[u] + "'");
        adj_[u] |= 1u << v;
        adj_[v] |= 1u << u;
    }
}

int Graph::vertex_index(const std::string& name) const {
    for (int i = 0; i < n(); ++i)
        if (names_[i] == name) return i;
    throw input_error("unknown vertex '" + name + "'");
}

Graph Graph::parse(const std::string& text) {
    size_t p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text[p] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw input_error(std::string("bad graph JSON: ") + e.what());
        }
        if (!j.contains("vertices") || !j["vertices"].is_array())
            throw input_error("graph JSON needs a \"vertices\" array");
        std::vector<std::string> names;
        for (auto& v : j["vertices"]) {
            if (!v.is_string()) throw input_error("vertex names must be strings");
            names.push_back(v.get<std::string>());
        }
        std::vector<std::pair<int, int>> edges;
        if (j.contains("edges")) {
            for (auto& e : j["edges"]) {
                if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                    throw input_error("each edge must be a pair of vertex names");
                auto find = [&](const std::string& s) {
                    for (size_t i = 0; i < names.size(); ++i)
                        if (names[i] == s) return static_cast<int>(i);
                    throw input_error("unknown vertex '" + s + "' in edge");
                };
                edges.emplace_back(find(e[0].get<std::string>()), find(e[1].get<std::string>()));
            }
        }
        return Graph(std::move(names), edges);
    }

    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> raw_edges;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            if (!split_ws(line).empty()) throw input_error("bad graph line: " + line);
            continue;
        }
        std::string key = line.substr(0, colon);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        std::string rest = line.substr(colon + 1);
        std::replace(rest.begin(), rest.end(), ',', ' ');
        if (key == "vertices") {
            for (auto& t : split_ws(rest)) names.push_back(t);
        } else if (key == "edges") {
            for (auto& t : split_ws(rest)) {
                auto dash = t.find('-');
                if (dash == std::string::npos || dash == 0 || dash + 1 == t.size())
                    throw input_error("bad edge token '" + t + "' (want u-v)");
                raw_edges.emplace_back(t.substr(0, dash), t.substr(dash + 1));
            }
        } else {
            throw input_error("unknown graph section '" + key + "'");
        }
    }
    if (names.empty()) throw input_error("graph has no vertices");
    std::vector<std::pair<int, int>> edges;
    auto find = [&](const std::string& s) {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == s) return static_cast<int>(i);
        throw input_error("unknown vertex '" + s + "' in edge");
    };
    for (auto& [a, b] : raw_edges) edges.emplace_back(find(a), find(b));
    return Graph(std::move(names), edges);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n(); ++u)
        for (int v = u + 1; v < n(); ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<std::pair<int, int>> Graph::strict_dominations() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n(); ++u)
        for (int v = 0; v < n(); ++v)
            if (u != v && dominates(u, v) && !dominates(v, u)) out.emplace_back(u, v);
    return out;
}

std::vector<Graph::DomClass> Graph::domination_classes() const {
    std::vector<DomClass> out;
    std::vector<bool> seen(n(), false);
    for (int v = 0; v < n(); ++v) {
        if (seen[v]) continue;
        DomClass cls;
        for (int u = v; u < n(); ++u)
            if (!seen[u] && dom_equivalent(v, u)) {
                seen[u] = true;
                cls.members.push_back(u);
            }
        if (cls.members.size() == 1) {
            cls.kind = "singleton";
        } else {
            bool all_adj = true;
            for (size_t i = 0; i < cls.members.size(); ++i)
                for (size_t j = i + 1; j < cls.members.size(); ++j)
                    all_adj = all_adj && adjacent(cls.members[i], cls.members[j]);
            cls.kind = all_adj ? "adjacent" : "non-adjacent";
        }
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<std::vector<int>> Graph::components(uint32_t mask) const {
    std::vector<std::vector<int>> out;
    uint32_t left = mask;
    while (left) {
        int start = std::countr_zero(left);
        uint32_t comp = 1u << start;
        for (;;) {
            uint32_t grow = comp;
            for (int v = 0; v < n(); ++v)
                if ((comp >> v) & 1u) grow |= adj_[v] & mask;
            if (grow == comp) break;
            comp = grow;
        }
        std::vector<int> verts;
        for (int v = 0; v < n(); ++v)
            if ((comp >> v) & 1u) verts.push_back(v);
        out.push_back(std::move(verts));
        left &= ~comp;
    }
    return out;
}

bool Graph::connected() const { return components(all_mask()).size() <= 1; }

std::vector<std::vector<int>> Graph::automorphisms(int cap) const {
    if (n() > cap) throw resource_error("graph too large for automorphism enumeration");
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n(), -1);
    std::vector<bool> used(n(), false);
    std::vector<int> degree(n(), 0);
    for (int v = 0; v < n(); ++v) degree[v] = std::popcount(adj_[v]);

    auto rec = [&](auto&& self, int v) -> void {
        if (v == n()) {
            out.push_back(perm);
            return;
        }
        for (int img = 0; img < n(); ++img) {
            if (used[img] || degree[img] != degree[v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (adjacent(u, v) != adjacent(perm[u], img)) ok = false;
            if (!ok) continue;
            perm[v] = img;
            used[img] = true;
            self(self, v + 1);
            used[img] = false;
            perm[v] = -1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());  // identity is lexicographically least
    return out;
}

std::string Graph::to_text() const {
    std::ostringstream out;
    out << "vertices:";
    for (auto& s : names_) out << ' ' << s;
    out << "\nedges:";
    for (auto [u, v] : edge_list()) out << ' ' << names_[u] << '-' << names_[v];
    out << '\n';
    return out.str();
}

}  // namespace raag
