#include "crossings/bounds.hpp"

#include "crossings/errors.hpp"

#include <cmath>

namespace crossings {

namespace {

// 1 - 6 m4/m2^2 + (Delta-1)^2 m / (2 m2), exact. Nonnegative because
// 6 m4 <= m2^2 (every disjoint ordered pair of 2-matchings is an ordered
// pair of 2-matchings).
Rational bound_radicand(long long m, int max_degree, const BigInt& m2, const BigInt& m4) {
    Rational rad = 1;
    rad -= Rational(6 * m4, m2 * m2);
    rad += Rational(BigInt(max_degree - 1) * (max_degree - 1) * m, 2 * m2);
    return rad;
}

}  // namespace

double psi_variance_bound(const Graph& g, const MomentReport& report) {
    if (report.m2 < 1) throw DomainError("degenerate: no 2-matchings");
    long long m = report.edge_count;
    int delta = report.max_degree;
    Rational inner = 1;
    inner -= Rational(6 * report.m4, report.m2 * report.m2);
    inner += Rational(BigInt(delta - 1) * (delta - 1) * (m - 4), 2 * report.m2);
    Rational value = Rational(BigInt(4) * delta * delta * (m - 1) * (m - 1)) * inner;
    return to_double(value);
}

BoundReport kolmogorov_bound_from_stats(long long m, int max_degree, const BigInt& m2,
                                        const BigInt& m4, const Rational& variance) {
    if (variance <= 0) throw DomainError("bound undefined: sigma = 0");
    BoundReport out;
    out.edge_count = m;
    out.max_degree = max_degree;
    out.m2 = m2;
    out.m4 = m4;

    Rational radicand = bound_radicand(m, max_degree, m2, m4);
    Rational prefactor = Rational(4 * m2 * max_degree * m, 3) / variance;
    Rational six_delta_m = BigInt(6) * max_degree * m;

    double sigma = std::sqrt(to_double(variance));
    double sqrt_rad = std::sqrt(to_double(radicand));
    out.sigma = sigma;
    out.coupling_bound = 2.0 * max_degree * static_cast<double>(m);
    out.psi_bound = out.coupling_bound * sqrt_rad;
    out.kolmogorov_bound = to_double(prefactor) * (to_double(six_delta_m) / sigma + sqrt_rad);
    return out;
}

BoundReport kolmogorov_bound(const Graph& g, const MomentReport& report) {
    if (report.m2 < 1) throw DomainError("degenerate: no 2-matchings");
    return kolmogorov_bound_from_stats(report.edge_count, report.max_degree, report.m2,
                                       report.m4, report.variance);
}

BoundReport kolmogorov_bound_for_family(FamilyKind kind, int n) {
    FamilyStats st = family_stats(kind, n);
    if (st.m2 < 1) throw DomainError("degenerate: no 2-matchings");
    return kolmogorov_bound_from_stats(st.edge_count, st.max_degree, st.m2, st.m4, st.variance);
}

}  // namespace crossings
