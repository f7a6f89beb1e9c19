#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crossings/errors.hpp"
#include "crossings/moments.hpp"
#include "crossings/montecarlo.hpp"
#include "crossings/rng.hpp"

using namespace crossings;

TEST_CASE("class_probability table") {
    CHECK(class_probability(PairClass::C1) == Rational(1, 9));
    CHECK(class_probability(PairClass::C2) == Rational(1, 9));
    CHECK(class_probability(PairClass::C3) == Rational(2, 15));
    CHECK(class_probability(PairClass::C4) == Rational(7, 60));
    CHECK(class_probability(PairClass::C5) == Rational(1, 10));
    CHECK(class_probability(PairClass::C6) == Rational(1, 12));
    CHECK(class_probability(PairClass::C7) == Rational(1, 6));
    CHECK(class_probability(PairClass::C8) == Rational(1, 3));
    CHECK(class_probability(PairClass::C9) == 0);
}

TEST_CASE("verify_class_probability reproduces the table") {
    for (int c = 0; c < kPairClassCount; ++c) {
        auto cls = static_cast<PairClass>(c);
        CAPTURE(pair_class_name(cls));
        CHECK(verify_class_probability(cls) == class_probability(cls));
    }
}

TEST_CASE("exact_moments on C5, pairing(4), K3") {
    MomentReport c5 = exact_moments(make_family(FamilyKind::cycle, 5));
    CHECK(c5.mean == Rational(5, 3));
    CHECK(c5.second_moment == Rational(25, 6));
    CHECK(c5.variance == Rational(25, 18));

    MomentReport p4 = exact_moments(make_family(FamilyKind::pairing, 4));
    CHECK(p4.mean == 2);
    CHECK(p4.variance == Rational(28, 15));

    MomentReport k3 = exact_moments(make_family(FamilyKind::cycle, 3));
    CHECK(k3.mean == 0);
    CHECK(k3.variance == 0);
}

TEST_CASE("second moment equals the literal published formula") {
    // E[X^2] = (6/9)m4 + (4/5)m3 + (1/3)m2 + (4/9)S2 + (7/15)S4 + (1/5)S5
    //        + (1/6)S6 + (1/3)S7, with S_i recovered from ordered-pair counts
    Xoshiro256 rng(4242);
    for (int t = 0; t < 25; ++t) {
        int n = 5 + static_cast<int>(rng.next_below(5));
        std::string text = "n=" + std::to_string(n) + "\n";
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_below(100) < 45) text += std::to_string(u) + " " + std::to_string(v) + "\n";
        Graph g = parse_edge_list(text);
        MomentReport r = exact_moments(g);
        const PairCensus& c = r.census;
        Rational s2(c[PairClass::C2] / 4), s4(c[PairClass::C4] / 4);
        Rational s5(c[PairClass::C5] / 2), s6(c[PairClass::C6] / 2), s7(c[PairClass::C7] / 2);
        Rational formula = Rational(6 * r.m4, 9) + Rational(4 * r.m3, 5) + Rational(r.m2, 3) +
                           s2 * Rational(4, 9) + s4 * Rational(7, 15) + s5 * Rational(1, 5) +
                           s6 * Rational(1, 6) + s7 * Rational(1, 3);
        CHECK(r.second_moment == formula);
    }
}

TEST_CASE("make_family shapes") {
    Graph p4 = make_family(FamilyKind::path, 4);
    CHECK(p4.n == 4);
    CHECK(p4.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    Graph swt6 = make_family(FamilyKind::star_with_tail, 6);
    CHECK(swt6.n == 6);
    CHECK(swt6.edge_count() == 5);
    CHECK(count_matchings(swt6, 2) == 3);

    Graph c3 = make_family(FamilyKind::cycle, 3);
    CHECK(c3.edge_count() == 3);
    CHECK(c3.max_degree() == 2);

    CHECK_THROWS_AS(make_family(FamilyKind::cycle, 2), DomainError);
    CHECK_THROWS_AS(make_family(FamilyKind::star_with_tail, 3), DomainError);
    CHECK_THROWS_AS(make_family(FamilyKind::pairing, 0), DomainError);
}

TEST_CASE("closed_form_moments spot values") {
    ClosedFormMoments p2 = closed_form_moments(FamilyKind::pairing, 2);
    CHECK(*p2.second_moment == Rational(1, 3));

    // path closed forms start at n = 5; n = 4 is a domain error
    CHECK_THROWS_AS(closed_form_moments(FamilyKind::path, 4), DomainError);

    // path(4) has a single 2-matching: variance is Bernoulli(1/3)'s 2/9
    CHECK(exact_moments(make_family(FamilyKind::path, 4)).variance == Rational(2, 9));

    for (int n = 4; n <= 12; ++n) {
        ClosedFormMoments swt = closed_form_moments(FamilyKind::star_with_tail, n);
        CHECK(swt.mean == Rational(n - 3, 3));
        CHECK(*swt.second_moment == Rational(BigInt(n - 2) * (n - 3), 6));
    }
}

TEST_CASE("closed forms match exact moments on their trusted ranges") {
    for (int n = 2; n <= 12; ++n) {
        MomentReport r = exact_moments(make_family(FamilyKind::pairing, n));
        ClosedFormMoments cf = closed_form_moments(FamilyKind::pairing, n);
        CHECK(cf.mean == r.mean);
        CHECK(*cf.second_moment == r.second_moment);
        CHECK(cf.variance == r.variance);
    }
    for (int n = 1; n <= 6; ++n) {
        MomentReport r = exact_moments(make_family(FamilyKind::triangles, n));
        ClosedFormMoments cf = closed_form_moments(FamilyKind::triangles, n);
        CHECK(cf.mean == r.mean);
        CHECK(*cf.second_moment == r.second_moment);
        CHECK(cf.variance == r.variance);
    }
    for (int n = 5; n <= 12; ++n) {
        MomentReport r = exact_moments(make_family(FamilyKind::path, n));
        ClosedFormMoments cf = closed_form_moments(FamilyKind::path, n);
        CHECK(cf.mean == r.mean);
        CHECK(cf.variance == r.variance);             // trusted
        CHECK(cf.second_moment_trust == Trust::disputed);
        CHECK(*cf.second_moment != r.second_moment);  // printed polynomial is off
    }
    for (int n = 5; n <= 12; ++n) {
        MomentReport r = exact_moments(make_family(FamilyKind::cycle, n));
        ClosedFormMoments cf = closed_form_moments(FamilyKind::cycle, n);
        CHECK(cf.mean == r.mean);
        CHECK(*cf.second_moment == r.second_moment);  // trusted
        CHECK(cf.variance_trust == Trust::disputed);
        CHECK(cf.variance != r.variance);             // printed polynomial is off
    }
    for (int n = 4; n <= 12; ++n) {
        MomentReport r = exact_moments(make_family(FamilyKind::star_with_tail, n));
        ClosedFormMoments cf = closed_form_moments(FamilyKind::star_with_tail, n);
        CHECK(cf.mean == r.mean);
        CHECK(*cf.second_moment == r.second_moment);
        CHECK(cf.variance == r.variance);
    }
}

TEST_CASE("moments agree with full permutation enumeration") {
    std::vector<Graph> graphs;
    for (int n = 4; n <= 7; ++n) graphs.push_back(make_family(FamilyKind::path, n));
    graphs.push_back(make_family(FamilyKind::cycle, 5));
    graphs.push_back(make_family(FamilyKind::cycle, 6));
    graphs.push_back(make_family(FamilyKind::pairing, 3));
    graphs.push_back(make_family(FamilyKind::triangles, 2));
    graphs.push_back(make_family(FamilyKind::star_with_tail, 7));

    Xoshiro256 rng(31337);
    for (int t = 0; t < 15; ++t) {
        int n = 4 + static_cast<int>(rng.next_below(4));
        std::string text = "n=" + std::to_string(n) + "\n";
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_below(100) < 50) text += std::to_string(u) + " " + std::to_string(v) + "\n";
        graphs.push_back(parse_edge_list(text));
    }

    for (const Graph& g : graphs) {
        MomentReport r = exact_moments(g);
        Pmf pmf = exact_distribution(g);
        CHECK(r.mean == pmf.mean());
        CHECK(r.variance == pmf.variance());
        CHECK(r.variance >= 0);
    }
}

TEST_CASE("isolated vertices do not change the law") {
    Graph base = parse_edge_list("0 1\n1 2\n2 3");
    Graph padded = parse_edge_list("n=6\n0 1\n1 2\n2 3");
    Pmf a = exact_distribution(base);
    Pmf b = exact_distribution(padded);
    CHECK(a.mass == b.mass);
}

TEST_CASE("family_kind_from_string round trip") {
    for (auto k : {FamilyKind::pairing, FamilyKind::path, FamilyKind::cycle, FamilyKind::triangles,
                   FamilyKind::star_with_tail})
        CHECK(family_kind_from_string(family_kind_name(k)) == k);
    CHECK_THROWS_AS(family_kind_from_string("torus"), DomainError);
}
