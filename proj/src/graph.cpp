#include "crossings/graph.hpp"

#include "crossings/errors.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace crossings {

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adjacency) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

bool Embedding::is_valid_for(int n) const {
    if (static_cast<int>(positions.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int s : positions) {
        if (s < 0 || s >= n || seen[s]) return false;
        seen[s] = 1;
    }
    return true;
}

Embedding Embedding::identity(int n) {
    Embedding e;
    e.positions.resize(n);
    std::iota(e.positions.begin(), e.positions.end(), 0);
    return e;
}

Graph parse_edge_list(std::istream& in) {
    Graph g;
    std::unordered_map<std::string, int> index_of;
    std::set<std::pair<int, int>> seen;
    int declared_n = -1;
    bool saw_edge = false;

    auto vertex = [&](const std::string& tok) {
        auto it = index_of.find(tok);
        if (it != index_of.end()) return it->second;
        int id = static_cast<int>(g.labels.size());
        index_of.emplace(tok, id);
        g.labels.push_back(tok);
        return id;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        auto first = trimmed.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (trimmed[first] == '#') continue;

        if (trimmed.compare(first, 2, "n=") == 0) {
            if (saw_edge) throw ParseError(lineno, "header \"n=\" must precede all edges");
            if (declared_n >= 0) throw ParseError(lineno, "duplicate \"n=\" header");
            std::string val = trimmed.substr(first + 2);
            try {
                size_t used = 0;
                declared_n = std::stoi(val, &used);
                if (used != val.size() || declared_n < 0) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError(lineno, "invalid vertex count in \"n=\" header");
            }
            continue;
        }

        std::istringstream ls(trimmed);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra))
            throw ParseError(lineno, "expected exactly two vertex tokens");
        int u = vertex(a);
        int v = vertex(b);
        if (u == v) throw ParseError(lineno, "self-loop on vertex \"" + a + "\"");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw ParseError(lineno, "duplicate edge \"" + a + " " + b + "\"");
        g.edges.emplace_back(u, v);
        saw_edge = true;
    }

    int used_n = static_cast<int>(g.labels.size());
    if (declared_n >= 0 && declared_n < used_n)
        throw ParseError(lineno, "header declares n=" + std::to_string(declared_n) +
                                     " but " + std::to_string(used_n) + " vertices appear");
    g.n = std::max(declared_n, used_n);
    for (int i = used_n; i < g.n; ++i) g.labels.push_back("v" + std::to_string(i));

    g.adjacency.assign(g.n, {});
    for (auto [u, v] : g.edges) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open file: " + path);
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.n << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

bool edges_cross(const Graph& g, const Embedding& emb, int e, int f) {
    if (e == f) throw std::invalid_argument("edges_cross: identical edge indices");
    auto [a, b] = g.edges.at(e);
    auto [c, d] = g.edges.at(f);
    if (a == c || a == d || b == c || b == d)
        throw std::invalid_argument("edges_cross: edges share a vertex");
    int pa = emb.positions[a], pb = emb.positions[b];
    int pc = emb.positions[c], pd = emb.positions[d];
    int lo = std::min(pa, pb), hi = std::max(pa, pb);
    bool c_in = lo < pc && pc < hi;
    bool d_in = lo < pd && pd < hi;
    return c_in != d_in;
}

long long count_crossings(const Graph& g, const Embedding& emb) {
    long long total = 0;
    int m = g.edge_count();
    for (int e = 0; e < m; ++e) {
        auto [a, b] = g.edges[e];
        for (int f = e + 1; f < m; ++f) {
            auto [c, d] = g.edges[f];
            if (a == c || a == d || b == c || b == d) continue;
            total += edges_cross(g, emb, e, f) ? 1 : 0;
        }
    }
    return total;
}

}  // namespace crossings
