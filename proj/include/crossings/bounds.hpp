#ifndef CROSSINGS_BOUNDS_HPP
#define CROSSINGS_BOUNDS_HPP

#include "crossings/graph.hpp"
#include "crossings/moments.hpp"
#include "crossings/types.hpp"

namespace crossings {

// Ingredients and result of the Kolmogorov-distance bound for W = (X-mu)/sigma
// against a standard Gaussian.
struct BoundReport {
    long long edge_count = 0;
    int max_degree = 0;
    BigInt m2, m4;
    double sigma = 0;
    double coupling_bound = 0;    // A = 2*Delta*m, a.s. bound on |X^s - X|
    double psi_bound = 0;         // 2*Delta*m * sqrt(radicand)
    double kolmogorov_bound = 0;
};

// Conditional-variance bound
//   4 Delta^2 (m-1)^2 * (1 - 6 m4/m2^2 + (Delta-1)^2 (m-4) / (2 m2)).
// Requires m2 >= 1. Intermediate terms are exact rationals; the single
// float conversion happens at the end.
double psi_variance_bound(const Graph& g, const MomentReport& report);

// Kolmogorov bound
//   (4 m2 Delta m / (3 sigma^2)) * (6 Delta m / sigma + sqrt(radicand)),
//   radicand = 1 - 6 m4/m2^2 + (Delta-1)^2 m / (2 m2).
// Requires variance > 0.
BoundReport kolmogorov_bound(const Graph& g, const MomentReport& report);

// Same evaluation from precomputed statistics (closed-form family values),
// so no enumeration is needed at large sizes.
BoundReport kolmogorov_bound_from_stats(long long m, int max_degree, const BigInt& m2,
                                        const BigInt& m4, const Rational& variance);

BoundReport kolmogorov_bound_for_family(FamilyKind kind, int n);

}  // namespace crossings

#endif
