#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crossings/errors.hpp"
#include "crossings/matchings.hpp"
#include "crossings/moments.hpp"
#include "crossings/rng.hpp"

using namespace crossings;

namespace {

Graph random_graph(Xoshiro256& rng, int n, int density_percent) {
    std::string text = "n=" + std::to_string(n) + "\n";
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_below(100) < static_cast<std::uint64_t>(density_percent))
                text += std::to_string(u) + " " + std::to_string(v) + "\n";
    return parse_edge_list(text);
}

bool has_four_cycle(const Graph& g) {
    // two distinct vertices with two or more common neighbors
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            int common = 0;
            for (int w : g.adjacency[u])
                for (int x : g.adjacency[v])
                    if (w == x && w != u && w != v) ++common;
            if (common >= 2) return true;
        }
    return false;
}

}  // namespace

TEST_CASE("enumerate_matchings counts match the closed forms") {
    CHECK(enumerate_matchings(make_family(FamilyKind::path, 6), 2).size() == 6);
    CHECK(enumerate_matchings(make_family(FamilyKind::cycle, 6), 2).size() == 9);
    CHECK(enumerate_matchings(parse_edge_list("a b"), 2).empty());
}

TEST_CASE("enumerate_matchings is lexicographic and canonical") {
    Graph g = make_family(FamilyKind::path, 6);
    auto list = enumerate_matchings(g, 2);
    for (std::size_t i = 0; i < list.size(); ++i) {
        CHECK(list[i].edge_indices[0] < list[i].edge_indices[1]);
        if (i > 0) CHECK(list[i - 1].edge_indices < list[i].edge_indices);
    }
}

TEST_CASE("count_matchings closed forms") {
    CHECK(count_matchings(make_family(FamilyKind::pairing, 4), 4) == 1);
    CHECK(count_matchings(make_family(FamilyKind::triangles, 2), 2) == 9);
    Xoshiro256 rng(7);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng.next_below(6)), 50);
        CHECK(count_matchings(g, 1) == g.edge_count());
    }
}

TEST_CASE("count_matchings agrees with enumeration") {
    Xoshiro256 rng(99);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(rng, 4 + static_cast<int>(rng.next_below(5)), 60);
        for (int r = 1; r <= 4; ++r)
            CHECK(count_matchings(g, r) == enumerate_matchings(g, r).size());
    }
}

TEST_CASE("enumeration cap") {
    Graph g = make_family(FamilyKind::pairing, 10);
    CHECK_THROWS_AS(enumerate_matchings(g, 2, 10), CapacityError);
    CHECK_THROWS_AS(count_matchings(g, 2, 3), CapacityError);
}

TEST_CASE("classify_pair canonical examples") {
    Graph g = parse_edge_list("0 1\n2 3\n4 5\n6 7\n1 2\n0 3");
    // edge indices: (0,1)=0, (2,3)=1, (4,5)=2, (6,7)=3, (1,2)=4, (0,3)=5
    CHECK(classify_pair(g, {{0, 1}}, {{2, 3}}) == PairClass::C1);
    CHECK(classify_pair(g, {{0, 1}}, {{0, 1}}) == PairClass::C8);
    CHECK(classify_pair(g, {{0, 1}}, {{4, 5}}) == PairClass::C9);

    Graph h = parse_edge_list("0 1\n3 4\n4 5");
    CHECK(classify_pair(h, {{0, 1}}, {{0, 2}}) == PairClass::C7);
}

TEST_CASE("classify_pair covers C2..C6") {
    // one shared vertex
    Graph g2 = parse_edge_list("0 1\n2 3\n3 4\n5 6");
    CHECK(classify_pair(g2, {{0, 1}}, {{2, 3}}) == PairClass::C2);
    // shared edge, remaining edges disjoint
    Graph g3 = parse_edge_list("0 1\n2 3\n4 5");
    CHECK(classify_pair(g3, {{0, 1}}, {{0, 2}}) == PairClass::C3);
    // two shared vertices in different edges
    Graph g4 = parse_edge_list("0 1\n2 3\n1 4\n3 5");
    CHECK(classify_pair(g4, {{0, 1}}, {{2, 3}}) == PairClass::C4);
    // two shared vertices spanned by a single edge
    Graph g5 = parse_edge_list("0 1\n2 3\n1 2\n4 5");
    CHECK(classify_pair(g5, {{0, 1}}, {{2, 3}}) == PairClass::C5);
    // three shared vertices (4-edge path)
    Graph g6 = parse_edge_list("0 1\n2 3\n1 2\n3 4");
    CHECK(classify_pair(g6, {{0, 1}}, {{2, 3}}) == PairClass::C6);
}

TEST_CASE("classify_pair symmetry and contract checks") {
    Xoshiro256 rng(1234);
    for (int t = 0; t < 25; ++t) {
        Graph g = random_graph(rng, 8, 40);
        auto m2 = enumerate_matchings(g, 2);
        for (std::size_t a = 0; a < m2.size(); ++a)
            for (std::size_t b = 0; b < m2.size(); ++b)
                CHECK(classify_pair(g, m2[a], m2[b]) == classify_pair(g, m2[b], m2[a]));
    }
    Graph p3 = parse_edge_list("0 1\n1 2");
    CHECK_THROWS_AS(classify_pair(p3, {{0, 1}}, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("pair_census C5 cycle") {
    PairCensus census = pair_census(make_family(FamilyKind::cycle, 5));
    CHECK(census[PairClass::C8] == 5);
    CHECK(census[PairClass::C7] == 10);
    CHECK(census[PairClass::C6] == 10);
    CHECK(census.total() == 25);
    for (auto c : {PairClass::C1, PairClass::C2, PairClass::C3, PairClass::C4, PairClass::C5,
                   PairClass::C9})
        CHECK(census[c] == 0);
}

TEST_CASE("pair_census trivial and pairing(4)") {
    PairCensus single = pair_census(parse_edge_list("0 1\n2 3"));
    CHECK(single[PairClass::C8] == 1);
    CHECK(single.total() == 1);

    PairCensus p4 = pair_census(make_family(FamilyKind::pairing, 4));
    CHECK(p4[PairClass::C1] == 6);
    CHECK(p4[PairClass::C3] == 24);
    CHECK(p4[PairClass::C8] == 6);
    CHECK(p4.total() == 36);
}

TEST_CASE("pair_census invariants on random graphs") {
    Xoshiro256 rng(5150);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(rng, 5 + static_cast<int>(rng.next_below(6)), 45);
        PairCensus census = pair_census(g);
        BigInt m2 = count_matchings(g, 2);
        BigInt m3 = count_matchings(g, 3);
        BigInt m4 = count_matchings(g, 4);
        CHECK(census.total() == m2 * m2);
        CHECK(census[PairClass::C8] == m2);
        CHECK(census[PairClass::C1] == 6 * m4);
        CHECK(census[PairClass::C3] == 6 * m3);
        CHECK(census[PairClass::C2] % 4 == 0);
        CHECK(census[PairClass::C4] % 4 == 0);
        CHECK(census[PairClass::C5] % 2 == 0);
        CHECK(census[PairClass::C6] % 2 == 0);
        CHECK(census[PairClass::C7] % 2 == 0);
        CHECK(census[PairClass::C9] % 2 == 0);
        if (!has_four_cycle(g)) CHECK(census[PairClass::C9] == 0);
    }
}

TEST_CASE("pair_census cap") {
    Graph g = make_family(FamilyKind::pairing, 12);  // m2 = 66, 66^2 > 100
    CHECK_THROWS_AS(pair_census(g, 100), CapacityError);
}
