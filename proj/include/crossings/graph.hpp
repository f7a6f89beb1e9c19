#ifndef CROSSINGS_GRAPH_HPP
#define CROSSINGS_GRAPH_HPP

#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace crossings {

// Simple undirected graph. Edges are stored canonically as (u,v) with
// 0 <= u < v < n, no duplicates, no self-loops. `labels[i]` is the original
// name of vertex i in first-appearance order (synthesized "v<i>" for vertices
// declared only through the "n=<count>" header).
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adjacency;
    std::vector<std::string> labels;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int max_degree() const;
};

// Bijection vertex index -> slot on the convex point set.
struct Embedding {
    std::vector<int> positions;

    bool is_valid_for(int n) const;
    static Embedding identity(int n);
};

// Edge-list format: one edge per line, two whitespace-separated vertex
// tokens; '#' starts a comment line; blank lines are skipped; an optional
// "n=<count>" header (before any edge) declares extra isolated vertices.
// Accepts LF and CRLF. Duplicate edges and self-loops are rejected.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph parse_edge_list_file(const std::string& path);

// Serialization in the same format (header + edges by vertex index).
std::string to_edge_list(const Graph& g);

// True iff the endpoint slots of edges e and f alternate around the convex
// boundary. The edges must be vertex-disjoint.
bool edges_cross(const Graph& g, const Embedding& emb, int e, int f);

// Number of 2-matchings of g embedded as crossings under emb.
long long count_crossings(const Graph& g, const Embedding& emb);

}  // namespace crossings

#endif
