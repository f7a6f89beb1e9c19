#include "crossings/moments.hpp"

#include "crossings/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace crossings {

namespace {

BigInt binomial(BigInt n, int k) {
    if (k < 0 || n < k) return 0;
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - (k - i);
        result /= i;
    }
    return result;
}

struct ClassRepresentative {
    int n;
    std::vector<std::pair<int, int>> edges;
    Matching i, j;
};

// Smallest subgraph realizing each configuration. The two 2-matchings are
// given by edge indices into `edges`.
ClassRepresentative class_representative(PairClass c) {
    switch (c) {
        case PairClass::C1:
            return {8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}, {{0, 1}}, {{2, 3}}};
        case PairClass::C2:
            return {7, {{0, 1}, {2, 3}, {3, 4}, {5, 6}}, {{0, 1}}, {{2, 3}}};
        case PairClass::C3:
            return {6, {{0, 1}, {2, 3}, {4, 5}}, {{0, 1}}, {{0, 2}}};
        case PairClass::C4:
            return {6, {{0, 1}, {2, 3}, {1, 4}, {3, 5}}, {{0, 1}}, {{2, 3}}};
        case PairClass::C5:
            return {6, {{0, 1}, {2, 3}, {1, 2}, {4, 5}}, {{0, 1}}, {{2, 3}}};
        case PairClass::C6:
            return {5, {{0, 1}, {2, 3}, {1, 2}, {3, 4}}, {{0, 1}}, {{2, 3}}};
        case PairClass::C7:
            return {5, {{0, 1}, {2, 3}, {3, 4}}, {{0, 1}}, {{0, 2}}};
        case PairClass::C8:
            return {4, {{0, 1}, {2, 3}}, {{0, 1}}, {{0, 1}}};
        case PairClass::C9:
            return {4, {{0, 1}, {2, 3}, {1, 2}, {0, 3}}, {{0, 1}}, {{2, 3}}};
    }
    throw std::logic_error("class_representative: bad class");
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.n = n;
    g.edges = edges;
    g.adjacency.assign(n, {});
    for (auto [u, v] : edges) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
    for (int i = 0; i < n; ++i) g.labels.push_back(std::to_string(i));
    return g;
}

}  // namespace

Rational class_probability(PairClass c) {
    switch (c) {
        case PairClass::C1: return Rational(1, 9);
        case PairClass::C2: return Rational(1, 9);
        case PairClass::C3: return Rational(2, 15);
        case PairClass::C4: return Rational(7, 60);
        case PairClass::C5: return Rational(1, 10);
        case PairClass::C6: return Rational(1, 12);
        case PairClass::C7: return Rational(1, 6);
        case PairClass::C8: return Rational(1, 3);
        case PairClass::C9: return Rational(0);
    }
    throw std::logic_error("class_probability: bad class");
}

Rational verify_class_probability(PairClass c) {
    ClassRepresentative rep = class_representative(c);
    Graph g = graph_from_edges(rep.n, rep.edges);

    Embedding emb = Embedding::identity(rep.n);
    BigInt hits = 0, total = 0;
    do {
        ++total;
        bool both = edges_cross(g, emb, rep.i.edge_indices[0], rep.i.edge_indices[1]) &&
                    edges_cross(g, emb, rep.j.edge_indices[0], rep.j.edge_indices[1]);
        if (both) ++hits;
    } while (std::next_permutation(emb.positions.begin(), emb.positions.end()));
    return Rational(hits, total);
}

MomentReport exact_moments(const Graph& g, std::uint64_t pair_cap) {
    MomentReport report;
    report.census = pair_census(g, pair_cap);
    report.m2 = report.census[PairClass::C8];
    report.m3 = count_matchings(g, 3);
    report.m4 = count_matchings(g, 4);
    report.max_degree = g.max_degree();
    report.edge_count = g.edge_count();

    report.mean = Rational(report.m2, 3);
    Rational second = 0;
    for (int c = 0; c < kPairClassCount; ++c)
        second += Rational(report.census.counts[c]) * class_probability(static_cast<PairClass>(c));
    report.second_moment = second;
    report.variance = second - report.mean * report.mean;
    return report;
}

FamilyKind family_kind_from_string(const std::string& name) {
    if (name == "pairing") return FamilyKind::pairing;
    if (name == "path") return FamilyKind::path;
    if (name == "cycle") return FamilyKind::cycle;
    if (name == "triangles") return FamilyKind::triangles;
    if (name == "star_with_tail") return FamilyKind::star_with_tail;
    throw DomainError("unknown graph family: " + name);
}

const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::pairing: return "pairing";
        case FamilyKind::path: return "path";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::triangles: return "triangles";
        case FamilyKind::star_with_tail: return "star_with_tail";
    }
    return "?";
}

Graph make_family(FamilyKind kind, int n) {
    std::vector<std::pair<int, int>> edges;
    int vertices = 0;
    switch (kind) {
        case FamilyKind::pairing:
            if (n < 1) throw DomainError("pairing requires n >= 1");
            vertices = 2 * n;
            for (int i = 0; i < n; ++i) edges.emplace_back(2 * i, 2 * i + 1);
            break;
        case FamilyKind::path:
            if (n < 1) throw DomainError("path requires n >= 1");
            vertices = n;
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case FamilyKind::cycle:
            if (n < 3) throw DomainError("cycle requires n >= 3");
            vertices = n;
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, n - 1);
            break;
        case FamilyKind::triangles:
            if (n < 1) throw DomainError("triangles requires n >= 1");
            vertices = 3 * n;
            for (int i = 0; i < n; ++i) {
                edges.emplace_back(3 * i, 3 * i + 1);
                edges.emplace_back(3 * i, 3 * i + 2);
                edges.emplace_back(3 * i + 1, 3 * i + 2);
            }
            break;
        case FamilyKind::star_with_tail:
            if (n < 4) throw DomainError("star_with_tail requires n >= 4");
            vertices = n;
            for (int i = 1; i <= n - 2; ++i) edges.emplace_back(0, i);
            edges.emplace_back(n - 2, n - 1);
            break;
    }
    // canonical edge orientation and order
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    return graph_from_edges(vertices, edges);
}

ClosedFormMoments closed_form_moments(FamilyKind kind, int n) {
    ClosedFormMoments out;
    Rational N(n);
    switch (kind) {
        case FamilyKind::pairing:
            if (n < 1) throw DomainError("pairing requires n >= 1");
            out.mean = N * (N - 1) / 6;
            out.second_moment =
                N * N * N * N / 36 - N * N * N / 30 + N * N * Rational(13, 180) - N / 15;
            out.variance = N * (N - 1) * (N + 3) / 45;
            break;
        case FamilyKind::path:
            if (n < 5) throw DomainError("path closed forms require n >= 5");
            out.mean = Rational(BigInt(n - 2) * (n - 3), 6);
            // printed second-moment polynomial; disagrees with the variance
            // polynomial (which enumeration confirms) by a constant
            out.second_moment = N * N * N * N / 36 - N * N * N * Rational(23, 90) +
                                N * N * Rational(35, 36) - N * Rational(86, 45) - Rational(5, 3);
            out.second_moment_trust = Trust::disputed;
            out.variance = N * N * N / 45 - N * N / 18 - N * Rational(11, 45) + Rational(2, 3);
            break;
        case FamilyKind::cycle:
            if (n < 5) throw DomainError("cycle closed forms require n >= 5");
            out.mean = N * (N - 3) / 6;
            out.second_moment = N * N * N * N / 36 - N * N * N * Rational(13, 90) +
                                N * N * Rational(47, 180) - N / 3;
            // printed variance polynomial; its n^2 term disagrees with
            // second_moment - mean^2 (which enumeration confirms)
            out.variance = N * N * N / 45 - N * N / 90 - N / 3;
            out.variance_trust = Trust::disputed;
            break;
        case FamilyKind::triangles:
            if (n < 1) throw DomainError("triangles requires n >= 1");
            out.mean = N * (N - 1) * Rational(3, 2);
            out.second_moment = N * N * N * N * Rational(9, 4) - N * N * N * Rational(39, 10) +
                                N * N * Rational(51, 20) - N * Rational(9, 10);
            out.variance = N * N * N * Rational(3, 5) + N * N * Rational(3, 10) - N * Rational(9, 10);
            break;
        case FamilyKind::star_with_tail:
            if (n < 4) throw DomainError("star_with_tail requires n >= 4");
            out.mean = (N - 3) / 3;
            out.second_moment = (N - 2) * (N - 3) / 6;
            out.variance = N * (N - 3) / 18;
            break;
    }
    return out;
}

FamilyStats family_stats(FamilyKind kind, int n) {
    FamilyStats st;
    switch (kind) {
        case FamilyKind::pairing: {
            if (n < 1) throw DomainError("pairing requires n >= 1");
            st.vertex_count = 2 * n;
            st.edge_count = n;
            st.max_degree = 1;
            st.m2 = binomial(n, 2);
            st.m3 = binomial(n, 3);
            st.m4 = binomial(n, 4);
            break;
        }
        case FamilyKind::path: {
            if (n < 1) throw DomainError("path requires n >= 1");
            st.vertex_count = n;
            st.edge_count = n - 1;
            st.max_degree = n >= 3 ? 2 : n - 1;
            st.m2 = binomial(n - 2, 2);
            st.m3 = binomial(n - 3, 3);
            st.m4 = binomial(n - 4, 4);
            break;
        }
        case FamilyKind::cycle: {
            if (n < 3) throw DomainError("cycle requires n >= 3");
            st.vertex_count = n;
            st.edge_count = n;
            st.max_degree = 2;
            st.m2 = BigInt(n) * (n - 3) / 2;
            st.m3 = BigInt(n) * binomial(n - 4, 2) / 3;
            st.m4 = BigInt(n) * binomial(n - 5, 3) / 4;
            break;
        }
        case FamilyKind::triangles: {
            if (n < 1) throw DomainError("triangles requires n >= 1");
            st.vertex_count = 3 * n;
            st.edge_count = 3LL * n;
            st.max_degree = 2;
            st.m2 = 9 * binomial(n, 2);
            st.m3 = 27 * binomial(n, 3);
            st.m4 = 81 * binomial(n, 4);
            break;
        }
        case FamilyKind::star_with_tail: {
            if (n < 4) throw DomainError("star_with_tail requires n >= 4");
            st.vertex_count = n;
            st.edge_count = n - 1;
            st.max_degree = n - 2;
            st.m2 = n - 3;
            st.m3 = 0;
            st.m4 = 0;
            break;
        }
    }
    st.mean = Rational(st.m2, 3);
    // trusted variance: for path/cycle this is the enumeration-confirmed
    // value (second moment minus squared mean), not the printed polynomial
    if ((kind == FamilyKind::path || kind == FamilyKind::cycle) && n < 5) {
        st.variance = exact_moments(make_family(kind, n)).variance;
    } else {
        ClosedFormMoments cf = closed_form_moments(kind, n);
        st.variance = cf.variance_trust == Trust::verified
                          ? cf.variance
                          : *cf.second_moment - cf.mean * cf.mean;
    }
    return st;
}

}  // namespace crossings
