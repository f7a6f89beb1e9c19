#include "crossings/matchings.hpp"

#include "crossings/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace crossings {

BigInt PairCensus::total() const {
    BigInt t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

namespace {

bool edge_touches(const std::pair<int, int>& e, const std::vector<char>& used) {
    return used[e.first] || used[e.second];
}

void check_two_matching(const Graph& g, const Matching& mt, const char* who) {
    if (mt.edge_indices.size() != 2)
        throw std::invalid_argument(std::string(who) + ": not a 2-matching");
    int e = mt.edge_indices[0], f = mt.edge_indices[1];
    if (e < 0 || f < 0 || e >= g.edge_count() || f >= g.edge_count() || e >= f)
        throw std::invalid_argument(std::string(who) + ": bad edge indices");
    auto [a, b] = g.edges[e];
    auto [c, d] = g.edges[f];
    if (a == c || a == d || b == c || b == d)
        throw std::invalid_argument(std::string(who) + ": edges share a vertex");
}

// Classification on raw data: edge index pairs and sorted vertex quadruples.
PairClass classify_raw(const Graph& g, const std::array<int, 2>& ei,
                       const std::array<int, 2>& ej, const std::array<int, 4>& vi,
                       const std::array<int, 4>& vj) {
    int shared_edges = 0;
    for (int a : ei)
        for (int b : ej)
            if (a == b) ++shared_edges;

    if (shared_edges == 2) return PairClass::C8;

    if (shared_edges == 1) {
        int a = (ei[0] == ej[0] || ei[0] == ej[1]) ? ei[1] : ei[0];
        int b = (ej[0] == ei[0] || ej[0] == ei[1]) ? ej[1] : ej[0];
        auto [u1, v1] = g.edges[a];
        auto [u2, v2] = g.edges[b];
        bool disjoint = u1 != u2 && u1 != v2 && v1 != u2 && v1 != v2;
        return disjoint ? PairClass::C3 : PairClass::C7;
    }

    int shared_vertices = 0;
    std::array<int, 2> shared{};
    for (int v : vi)
        if (std::find(vj.begin(), vj.end(), v) != vj.end()) {
            if (shared_vertices < 2) shared[shared_vertices] = v;
            ++shared_vertices;
        }

    switch (shared_vertices) {
        case 0: return PairClass::C1;
        case 1: return PairClass::C2;
        case 3: return PairClass::C6;
        case 4: return PairClass::C9;
        case 2: {
            for (int e : {ei[0], ei[1], ej[0], ej[1]}) {
                auto [u, v] = g.edges[e];
                if ((u == shared[0] && v == shared[1]) || (u == shared[1] && v == shared[0]))
                    return PairClass::C5;
            }
            return PairClass::C4;
        }
        default: break;
    }
    throw std::logic_error("classify_raw: unreachable");
}

std::array<int, 4> vertex_quad(const Graph& g, int e, int f) {
    auto [a, b] = g.edges[e];
    auto [c, d] = g.edges[f];
    std::array<int, 4> q{a, b, c, d};
    std::sort(q.begin(), q.end());
    return q;
}

}  // namespace

std::vector<Matching> enumerate_matchings(const Graph& g, int r, std::uint64_t cap) {
    if (r < 1) throw std::invalid_argument("enumerate_matchings: r must be >= 1");
    std::vector<Matching> result;
    int m = g.edge_count();
    if (r > m) return result;

    std::vector<char> used(g.n, 0);
    std::vector<int> chosen;
    chosen.reserve(r);

    auto recurse = [&](auto&& self, int start) -> void {
        if (static_cast<int>(chosen.size()) == r) {
            if (result.size() >= cap)
                throw CapacityError("enumerate_matchings: more than " + std::to_string(cap) +
                                    " matchings (cap)");
            result.push_back(Matching{chosen});
            return;
        }
        int need = r - static_cast<int>(chosen.size());
        for (int e = start; e <= m - need; ++e) {
            if (edge_touches(g.edges[e], used)) continue;
            used[g.edges[e].first] = used[g.edges[e].second] = 1;
            chosen.push_back(e);
            self(self, e + 1);
            chosen.pop_back();
            used[g.edges[e].first] = used[g.edges[e].second] = 0;
        }
    };
    recurse(recurse, 0);
    return result;
}

BigInt count_matchings(const Graph& g, int r, std::uint64_t cap) {
    if (r < 1) throw std::invalid_argument("count_matchings: r must be >= 1");
    int m = g.edge_count();
    if (r > m) return 0;

    std::vector<char> used(g.n, 0);
    std::uint64_t work = 0;
    auto recurse = [&](auto&& self, int start, int need) -> BigInt {
        if (need == 0) return 1;
        BigInt total = 0;
        for (int e = start; e <= m - need; ++e) {
            if (++work > cap)
                throw CapacityError("count_matchings: work cap " + std::to_string(cap) +
                                    " exceeded");
            if (edge_touches(g.edges[e], used)) continue;
            used[g.edges[e].first] = used[g.edges[e].second] = 1;
            total += self(self, e + 1, need - 1);
            used[g.edges[e].first] = used[g.edges[e].second] = 0;
        }
        return total;
    };
    return recurse(recurse, 0, r);
}

PairClass classify_pair(const Graph& g, const Matching& i, const Matching& j) {
    check_two_matching(g, i, "classify_pair: first argument");
    check_two_matching(g, j, "classify_pair: second argument");
    std::array<int, 2> ei{i.edge_indices[0], i.edge_indices[1]};
    std::array<int, 2> ej{j.edge_indices[0], j.edge_indices[1]};
    return classify_raw(g, ei, ej, vertex_quad(g, ei[0], ei[1]), vertex_quad(g, ej[0], ej[1]));
}

PairCensus pair_census(const Graph& g, std::uint64_t pair_cap) {
    auto m2list = enumerate_matchings(g, 2);
    std::size_t k = m2list.size();
    if (k > 0 && static_cast<std::uint64_t>(k) > pair_cap / k)
        throw CapacityError("pair_census: m2^2 = " + std::to_string(k) + "^2 exceeds pair cap " +
                            std::to_string(pair_cap));

    std::vector<std::array<int, 2>> eidx(k);
    std::vector<std::array<int, 4>> verts(k);
    for (std::size_t t = 0; t < k; ++t) {
        eidx[t] = {m2list[t].edge_indices[0], m2list[t].edge_indices[1]};
        verts[t] = vertex_quad(g, eidx[t][0], eidx[t][1]);
    }

    std::array<std::uint64_t, kPairClassCount> local{};
    PairCensus census;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            PairClass c = classify_raw(g, eidx[a], eidx[b], verts[a], verts[b]);
            ++local[static_cast<int>(c)];
        }
        // fold into BigInt periodically so the fast counters cannot wrap
        if ((a & 0xFFF) == 0xFFF || a + 1 == k) {
            for (int c = 0; c < kPairClassCount; ++c) {
                census.counts[c] += local[c];
                local[c] = 0;
            }
        }
    }
    return census;
}

}  // namespace crossings
