#ifndef CROSSINGS_MONTECARLO_HPP
#define CROSSINGS_MONTECARLO_HPP

#include "crossings/graph.hpp"
#include "crossings/matchings.hpp"
#include "crossings/rng.hpp"
#include "crossings/types.hpp"

#include <cstdint>
#include <map>

namespace crossings {

// Distribution of the crossing count. Probabilities are exact rationals in
// both modes; in empirical mode they are sample frequencies count/samples.
struct Pmf {
    enum class Mode { exact, empirical };
    Mode mode = Mode::exact;
    std::map<long long, Rational> mass;
    std::uint64_t sample_count = 0;

    Rational total_mass() const;
    Rational mean() const;
    Rational variance() const;
};

// One draw of the coupling (X, X^s).
struct CoupledSample {
    long long x = 0;
    long long xs = 0;
    int matching_index = 0;
    bool repaired = false;
};

inline constexpr int kDefaultExactLimit = 10;

// Uniform over all n! permutations (Fisher-Yates on the pinned generator).
Embedding sample_embedding(const Graph& g, Xoshiro256& rng);

// Exact pmf by enumerating every permutation. Throws CapacityError when
// n exceeds the limit (n! blows up quickly past 10).
Pmf exact_distribution(const Graph& g, int n_limit = kDefaultExactLimit);

// Closed form for the star-with-tail family:
// P(X = k) = 2(n-2-k) / ((n-1)(n-2)), k = 0..n-2. Requires n >= 4.
Pmf star_tail_pmf(int n);

// Frequency pmf over `samples` independent uniform embeddings. The sample
// index space is split into fixed blocks; block b draws from the substream
// (seed, b), so the result does not depend on scheduling or worker count.
Pmf empirical_distribution(const Graph& g, std::uint64_t samples, std::uint64_t seed);

// One step of the size-bias coupling: draw pi uniform and a 2-matching I
// uniform; if I crosses keep pi, otherwise repair the four endpoint slots so
// that I crosses. Requires m2(G) >= 1. `two_matchings` is M2(G) as produced
// by enumerate_matchings(g, 2).
CoupledSample size_bias_sample(const Graph& g, const std::vector<Matching>& two_matchings,
                               Xoshiro256& rng);

// Exact law of X^s by enumerating (pi, I, repair-vertex) with their exact
// probabilities. Satisfies mu * P(X^s = k) = k * P(X = k).
Pmf size_bias_exact_law(const Graph& g, int n_limit = kDefaultExactLimit);

// sup_z |F(z) - Phi((z - mean)/sigma)| for the (discrete) pmf, evaluated at
// both sides of every atom. Requires sigma > 0.
double ks_distance_to_normal(const Pmf& p, double mean, double sigma);

}  // namespace crossings

#endif
