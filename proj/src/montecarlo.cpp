#include "crossings/montecarlo.hpp"

#include "crossings/errors.hpp"
#include "crossings/normal.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <numeric>

namespace crossings {

namespace {

constexpr std::uint64_t kSampleBlock = 4096;

// Endpoint quadruple (a,b) x (c,d) of one 2-matching, for fast crossing checks.
struct Quad {
    int a, b, c, d;
};

std::vector<Quad> matching_quads(const Graph& g, const std::vector<Matching>& m2list) {
    std::vector<Quad> quads;
    quads.reserve(m2list.size());
    for (const auto& mt : m2list) {
        auto [a, b] = g.edges[mt.edge_indices[0]];
        auto [c, d] = g.edges[mt.edge_indices[1]];
        quads.push_back({a, b, c, d});
    }
    return quads;
}

inline bool quad_crosses(const Quad& q, const std::vector<int>& pos) {
    int lo = std::min(pos[q.a], pos[q.b]);
    int hi = std::max(pos[q.a], pos[q.b]);
    bool c_in = lo < pos[q.c] && pos[q.c] < hi;
    bool d_in = lo < pos[q.d] && pos[q.d] < hi;
    return c_in != d_in;
}

long long count_crossings_quads(const std::vector<Quad>& quads, const std::vector<int>& pos) {
    long long total = 0;
    for (const auto& q : quads) total += quad_crosses(q, pos) ? 1 : 0;
    return total;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void check_exact_limit(const Graph& g, int n_limit) {
    if (g.n > n_limit)
        throw CapacityError("exact enumeration limited to n <= " + std::to_string(n_limit) +
                            " (got n = " + std::to_string(g.n) + ")");
}

// Repair step of the coupling: given a non-crossing 2-matching, relabel its
// four endpoint slots via the unique cyclic rotation reading
// (e-endpoint, f-endpoint, f-endpoint, e-endpoint) and swap one pair so the
// matching crosses. `choice` in 0..3 picks the vertex left fixed.
void repair_matching(const Quad& q, std::vector<int>& pos, int choice) {
    struct Slot {
        int slot;
        int vertex;
        bool from_e;
    };
    std::array<Slot, 4> slots{Slot{pos[q.a], q.a, true}, Slot{pos[q.b], q.b, true},
                              Slot{pos[q.c], q.c, false}, Slot{pos[q.d], q.d, false}};
    std::sort(slots.begin(), slots.end(), [](const Slot& x, const Slot& y) {
        return x.slot < y.slot;
    });
    int r = -1;
    for (int k = 0; k < 4; ++k) {
        if (slots[k].from_e && slots[(k + 1) % 4].from_e == false &&
            slots[(k + 2) % 4].from_e == false && slots[(k + 3) % 4].from_e) {
            r = k;
            break;
        }
    }
    assert(r >= 0 && "repair_matching called on a crossing configuration");
    int u1 = slots[r].vertex;
    int v1 = slots[(r + 1) % 4].vertex;
    int v2 = slots[(r + 2) % 4].vertex;
    int u2 = slots[(r + 3) % 4].vertex;
    if (choice == 0 || choice == 1)
        std::swap(pos[v2], pos[u2]);  // u1 or v1 chosen: they stay fixed
    else
        std::swap(pos[v1], pos[u1]);
}

}  // namespace

Rational Pmf::total_mass() const {
    Rational t = 0;
    for (const auto& [k, p] : mass) t += p;
    return t;
}

Rational Pmf::mean() const {
    Rational m = 0;
    for (const auto& [k, p] : mass) m += Rational(k) * p;
    return m;
}

Rational Pmf::variance() const {
    Rational m = mean(), s = 0;
    for (const auto& [k, p] : mass) s += Rational(k) * k * p;
    return s - m * m;
}

Embedding sample_embedding(const Graph& g, Xoshiro256& rng) {
    Embedding emb = Embedding::identity(g.n);
    for (int i = g.n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(emb.positions[i], emb.positions[j]);
    }
    return emb;
}

Pmf exact_distribution(const Graph& g, int n_limit) {
    check_exact_limit(g, n_limit);
    auto quads = matching_quads(g, enumerate_matchings(g, 2));

    std::map<long long, BigInt> tally;
    std::vector<int> pos(g.n);
    std::iota(pos.begin(), pos.end(), 0);
    do {
        ++tally[count_crossings_quads(quads, pos)];
    } while (std::next_permutation(pos.begin(), pos.end()));

    Pmf pmf;
    pmf.mode = Pmf::Mode::exact;
    BigInt total = factorial(g.n);
    for (const auto& [k, c] : tally) pmf.mass[k] = Rational(c, total);
    return pmf;
}

Pmf star_tail_pmf(int n) {
    if (n < 4) throw DomainError("star_tail_pmf requires n >= 4");
    Pmf pmf;
    pmf.mode = Pmf::Mode::exact;
    BigInt denom = BigInt(n - 1) * (n - 2);
    for (int k = 0; k <= n - 2; ++k) pmf.mass[k] = Rational(BigInt(2 * (n - 2 - k)), denom);
    return pmf;
}

Pmf empirical_distribution(const Graph& g, std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw DomainError("empirical_distribution requires samples >= 1");
    auto quads = matching_quads(g, enumerate_matchings(g, 2));

    std::map<long long, std::uint64_t> tally;
    std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
    for (std::uint64_t b = 0; b < blocks; ++b) {
        Xoshiro256 rng(seed, b);
        std::uint64_t hi = std::min(samples, (b + 1) * kSampleBlock);
        for (std::uint64_t s = b * kSampleBlock; s < hi; ++s) {
            Embedding emb = sample_embedding(g, rng);
            ++tally[count_crossings_quads(quads, emb.positions)];
        }
    }

    Pmf pmf;
    pmf.mode = Pmf::Mode::empirical;
    pmf.sample_count = samples;
    for (const auto& [k, c] : tally) pmf.mass[k] = Rational(BigInt(c), BigInt(samples));
    return pmf;
}

CoupledSample size_bias_sample(const Graph& g, const std::vector<Matching>& two_matchings,
                               Xoshiro256& rng) {
    if (two_matchings.empty()) throw DomainError("size_bias_sample: graph has no 2-matchings");
    auto quads = matching_quads(g, two_matchings);

    Embedding emb = sample_embedding(g, rng);
    int idx = static_cast<int>(rng.next_below(quads.size()));

    CoupledSample out;
    out.matching_index = idx;
    out.x = count_crossings_quads(quads, emb.positions);
    if (quad_crosses(quads[idx], emb.positions)) {
        out.xs = out.x;
        out.repaired = false;
    } else {
        int choice = static_cast<int>(rng.next_below(4));
        repair_matching(quads[idx], emb.positions, choice);
        out.xs = count_crossings_quads(quads, emb.positions);
        out.repaired = true;
    }
#ifndef NDEBUG
    long long cap = 2LL * g.max_degree() * (g.edge_count() - 1);
    assert(std::llabs(out.xs - out.x) <= cap && "coupling bound violated");
#endif
    return out;
}

Pmf size_bias_exact_law(const Graph& g, int n_limit) {
    check_exact_limit(g, n_limit);
    auto m2list = enumerate_matchings(g, 2);
    if (m2list.empty()) throw DomainError("size_bias_exact_law: graph has no 2-matchings");
    auto quads = matching_quads(g, m2list);

    // weights in units of 1/(n! * m2 * 4)
    std::map<long long, BigInt> tally;
    std::vector<int> pos(g.n);
    std::iota(pos.begin(), pos.end(), 0);
    do {
        long long x = count_crossings_quads(quads, pos);
        for (const auto& q : quads) {
            if (quad_crosses(q, pos)) {
                tally[x] += 4;
                continue;
            }
            // choices {u1,v1} and {u2,v2} induce the same swap, so two
            // distinct outcomes of weight 2 each
            for (int swap_pair = 0; swap_pair < 2; ++swap_pair) {
                std::vector<int> repaired = pos;
                repair_matching(q, repaired, swap_pair == 0 ? 0 : 2);
                tally[count_crossings_quads(quads, repaired)] += 2;
            }
        }
    } while (std::next_permutation(pos.begin(), pos.end()));

    Pmf pmf;
    pmf.mode = Pmf::Mode::exact;
    BigInt total = factorial(g.n) * BigInt(m2list.size()) * 4;
    for (const auto& [k, c] : tally) pmf.mass[k] = Rational(c, total);
    return pmf;
}

double ks_distance_to_normal(const Pmf& p, double mean, double sigma) {
    if (sigma <= 0) throw DomainError("ks_distance_to_normal requires sigma > 0");
    double cdf = 0.0;
    double best = 0.0;
    for (const auto& [k, prob] : p.mass) {
        double w = (static_cast<double>(k) - mean) / sigma;
        double phi = normal_cdf(w);
        best = std::max(best, std::fabs(cdf - phi));
        cdf += to_double(prob);
        best = std::max(best, std::fabs(cdf - phi));
    }
    return best;
}

}  // namespace crossings
