#ifndef CROSSINGS_MOMENTS_HPP
#define CROSSINGS_MOMENTS_HPP

#include "crossings/graph.hpp"
#include "crossings/matchings.hpp"
#include "crossings/types.hpp"

#include <optional>
#include <string>

namespace crossings {

// Exact rational moments of the crossing count plus the census they came from.
struct MomentReport {
    Rational mean;
    Rational second_moment;
    Rational variance;
    PairCensus census;
    BigInt m2, m3, m4;
    int max_degree = 0;
    int edge_count = 0;
};

// P(both 2-matchings of a class-c pair cross simultaneously).
Rational class_probability(PairClass c);

// Independent oracle: builds the canonical representative subgraph of class c
// (4-8 vertices), enumerates every permutation of its vertices, and returns
// the exact fraction of orderings in which both constituent 2-matchings
// cross. Must equal class_probability(c).
Rational verify_class_probability(PairClass c);

// Exact mean, second moment (census x probability inner product), variance.
MomentReport exact_moments(const Graph& g, std::uint64_t pair_cap = kDefaultPairCap);

enum class FamilyKind { pairing, path, cycle, triangles, star_with_tail };

FamilyKind family_kind_from_string(const std::string& name);
const char* family_kind_name(FamilyKind k);

// pairing(n): n disjoint edges (2n vertices).   path(n), cycle(n): the usual
// graphs on n vertices.   triangles(n): n disjoint copies of K3.
// star_with_tail(n): star on n-1 vertices with one extra edge hanging off a
// leaf (n vertices, m = n-1, m2 = n-3).
Graph make_family(FamilyKind kind, int n);

enum class Trust { verified, disputed };

inline const char* trust_name(Trust t) { return t == Trust::verified ? "verified" : "disputed"; }

// Published closed forms evaluated at a concrete size, with a trust flag per
// value. A `disputed` flag marks a printed polynomial that disagrees with
// exact enumeration (the sibling formula and brute force agree against it).
struct ClosedFormMoments {
    Rational mean;
    Trust mean_trust = Trust::verified;
    std::optional<Rational> second_moment;
    Trust second_moment_trust = Trust::verified;
    Rational variance;
    Trust variance_trust = Trust::verified;
};

// Valid for: pairing n>=1, triangles n>=1, star_with_tail n>=4,
// path n>=5, cycle n>=5 (the path/cycle polynomials assume n large enough
// that every pair configuration can occur).
ClosedFormMoments closed_form_moments(FamilyKind kind, int n);

// Closed-form graph statistics used by the bound evaluation; avoids any
// enumeration so large family sizes stay cheap.
struct FamilyStats {
    int vertex_count = 0;
    long long edge_count = 0;
    int max_degree = 0;
    BigInt m2, m3, m4;
    Rational variance;  // trusted value (exact-enumeration-confirmed)
    Rational mean;
};

FamilyStats family_stats(FamilyKind kind, int n);

}  // namespace crossings

#endif
