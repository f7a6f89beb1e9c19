#ifndef CROSSINGS_MATCHINGS_HPP
#define CROSSINGS_MATCHINGS_HPP

#include "crossings/graph.hpp"
#include "crossings/types.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace crossings {

// A set of pairwise vertex-disjoint edges, stored as strictly increasing
// edge indices into Graph::edges.
struct Matching {
    std::vector<int> edge_indices;
};

// Configuration type of an ordered pair of 2-matchings, by shared edges s_e
// and shared vertices s_v:
//   C8: s_e = 2 (identical)
//   C3: s_e = 1, non-shared edges vertex-disjoint (union is a 3-matching)
//   C7: s_e = 1, non-shared edges meet at a vertex
//   C1: s_e = 0, s_v = 0        C2: s_e = 0, s_v = 1
//   C5: s_e = 0, s_v = 2, one edge contains both shared vertices
//   C4: s_e = 0, s_v = 2 otherwise
//   C6: s_e = 0, s_v = 3        C9: s_e = 0, s_v = 4 (a 4-cycle)
enum class PairClass : int { C1 = 0, C2, C3, C4, C5, C6, C7, C8, C9 };

constexpr int kPairClassCount = 9;

inline const char* pair_class_name(PairClass c) {
    static const char* names[] = {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9"};
    return names[static_cast<int>(c)];
}

// Counts of ordered pairs (i,j) in M2(G) x M2(G) per class.
struct PairCensus {
    std::array<BigInt, kPairClassCount> counts{};

    const BigInt& operator[](PairClass c) const { return counts[static_cast<int>(c)]; }
    BigInt& operator[](PairClass c) { return counts[static_cast<int>(c)]; }
    BigInt total() const;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;
inline constexpr std::uint64_t kDefaultPairCap = 1'000'000'000;

// All r-matchings in lexicographic order of edge-index sequences.
// Throws CapacityError if more than `cap` matchings would be produced.
std::vector<Matching> enumerate_matchings(const Graph& g, int r,
                                          std::uint64_t cap = kDefaultEnumerationCap);

// |M_r(G)| without materializing the list. The cap bounds backtracking work.
BigInt count_matchings(const Graph& g, int r, std::uint64_t cap = kDefaultEnumerationCap);

PairClass classify_pair(const Graph& g, const Matching& i, const Matching& j);

// Classifies every ordered pair of 2-matchings. Throws CapacityError when
// m2(G)^2 exceeds `pair_cap`.
PairCensus pair_census(const Graph& g, std::uint64_t pair_cap = kDefaultPairCap);

}  // namespace crossings

#endif
