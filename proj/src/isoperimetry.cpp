#include "hamming/isoperimetry.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "hamming/rng.hpp"

namespace hamming {

BigInt log2_fixed(const BigInt& x, unsigned p) {
    if (sgn(x) <= 0) throw std::invalid_argument("log2_fixed: x must be >= 1");
    const auto e = static_cast<unsigned long>(mpz_sizeinbase(x.get_mpz_t(), 2) - 1);
    const unsigned F = p + 64;  // guard bits: p truncations cost << 2^-p in total
    BigInt m = (x << F) >> e;   // mantissa in [1,2) as Q(F), exact whenever e <= F
    const BigInt two = BigInt(2) << F;
    BigInt frac = 0;
    for (unsigned i = 0; i < p; ++i) {
        m = (m * m) >> F;
        frac <<= 1;
        if (m >= two) {
            m >>= 1;
            frac |= 1;
        }
    }
    return (BigInt(e) << p) | frac;
}

namespace {

struct Decision {
    bool pass = false;
    bool exact_equality = false;
};

// (k-1)*V*log2(V) vs 2E with V, E integers, V >= 1. Exact-equality needs
// log2(V) rational, i.e. V a power of two: that path is pure integer
// arithmetic. Everything else is strict, so escalating fixed-point precision
// must eventually separate the sides.
Decision decide_edge_bound(int k, std::uint64_t V, std::uint64_t E) {
    const BigInt mult = BigInt(k - 1) * BigInt(static_cast<unsigned long>(V));
    const BigInt rhs = BigInt(2) * BigInt(static_cast<unsigned long>(E));
    if (std::has_single_bit(V)) {
        const BigInt lhs = mult * static_cast<unsigned long>(std::countr_zero(V));
        return {lhs >= rhs, lhs == rhs};
    }

    const double Ld = static_cast<double>(k - 1) * static_cast<double>(V) *
                      std::log2(static_cast<double>(V));
    const double Rd = 2.0 * static_cast<double>(E);
    const double band = 1e-9 * std::max({1.0, std::fabs(Ld), std::fabs(Rd)});
    if (Ld - Rd > band) return {true, false};
    if (Ld - Rd < -band) return {false, false};

    const BigInt bigV(static_cast<unsigned long>(V));
    for (unsigned p = 160; p <= 1280; p *= 2) {
        const BigInt L = mult * log2_fixed(bigV, p);
        const BigInt R = rhs << p;
        const BigInt err = mult * 4;  // log2_fixed is exact to 4 ulps of 2^-p
        if (L > R + err) return {true, false};
        if (L + err < R) return {false, false};
    }
    throw std::logic_error("decide_edge_bound: precision escalation exhausted");
}

IneqCheck edge_bound_from_counts(int k, std::uint64_t V, std::uint64_t E) {
    const Decision d = decide_edge_bound(k, V, E);
    double margin = 0.0;
    if (!d.exact_equality)
        margin = static_cast<double>(k - 1) * std::log2(static_cast<double>(V)) -
                 2.0 * static_cast<double>(E) / static_cast<double>(V);
    return {d.pass, margin};
}

}  // namespace

SubsetStats subset_stats(const std::vector<VertexId>& vertices, const HammingParams& p) {
    if (vertices.empty()) throw std::invalid_argument("subset_stats: empty subset");
    if (!p.vertex_count_u64())
        throw std::invalid_argument("subset_stats: k^n exceeds the 64-bit rank space");
    const std::uint64_t total = *p.vertex_count_u64();

    std::unordered_set<std::uint64_t> members;
    members.reserve(vertices.size() * 2);
    for (VertexId id : vertices) {
        if (id >= total)
            throw std::invalid_argument("subset_stats: rank " + std::to_string(id) +
                                        " out of range");
        if (!members.insert(id).second)
            throw std::invalid_argument("subset_stats: duplicate rank " + std::to_string(id));
    }

    std::uint64_t edges = 0;
    for (VertexId id : vertices) {
        const Vertex v = unrank(id, p);
        for (const Vertex& u : neighbors(v, p)) {
            const VertexId uid = rank(u, p);
            if (uid > id && members.contains(uid)) ++edges;
        }
    }

    SubsetStats stats;
    stats.vertex_count = vertices.size();
    stats.edge_count = edges;
    stats.average_degree = Rational(BigInt(2) * BigInt(static_cast<unsigned long>(edges)),
                                    BigInt(static_cast<unsigned long>(stats.vertex_count)));
    stats.average_degree.canonicalize();
    return stats;
}

IneqCheck check_edge_bound(const std::vector<VertexId>& vertices, const HammingParams& p) {
    const SubsetStats s = subset_stats(vertices, p);
    return edge_bound_from_counts(p.k(), s.vertex_count, s.edge_count);
}

IneqCheck check_scalar_ineq(const Rational& a, const Rational& b) {
    if (sgn(a) <= 0 || sgn(b) <= 0)
        throw std::invalid_argument("check_scalar_ineq: arguments must be positive");
    if (a > b) throw std::invalid_argument("check_scalar_ineq: requires a <= b");
    if (a == b) return {true, 0.0};  // (2a)log(2a) - 2a*log(a) - 2a = 0 identically

    // Scaling (a,b) by t > 0 scales the margin by t, so clear denominators.
    const BigInt A = a.get_num() * b.get_den();
    const BigInt B = b.get_num() * a.get_den();
    const BigInt T = A + B;

    const double ad = a.get_d(), bd = b.get_d();
    const double margin = (ad + bd) * std::log2(ad + bd) - ad * std::log2(ad) -
                          bd * std::log2(bd) - 2.0 * ad;

    const double Ad = A.get_d(), Bd = B.get_d(), Td = Ad + Bd;
    const double Ld = Td * std::log2(Td);
    const double Rd = Ad * std::log2(Ad) + Bd * std::log2(Bd) + 2.0 * Ad;
    const double band = 1e-9 * std::max({1.0, std::fabs(Ld), std::fabs(Rd)});
    if (Ld - Rd > band) return {true, margin};
    if (Ld - Rd < -band) return {false, margin};

    // Inside the band with A < B: equality is impossible (the function is
    // strictly monotone in b for fixed a), so higher precision must decide.
    for (unsigned p = 160; p <= 1280; p *= 2) {
        const BigInt L = T * log2_fixed(T, p);
        const BigInt R = A * log2_fixed(A, p) + B * log2_fixed(B, p) + ((BigInt(2) * A) << p);
        const BigInt err = 4 * (T + A + B);
        if (L > R + err) return {true, margin};
        if (L + err < R) return {false, margin};
    }
    throw std::logic_error("check_scalar_ineq: precision escalation exhausted");
}

SubsetSweepReport exhaustive_edge_bound_check(const HammingParams& p) {
    if (!p.enumerable(16))
        throw EnumerationLimitError("exhaustive_edge_bound_check: needs k^n <= 16, got " +
                                    p.vertex_count().get_str());
    const auto N = static_cast<unsigned>(*p.vertex_count_u64());

    std::vector<std::uint32_t> mask(N, 0);
    for_each_vertex(p, 0, N, [&](VertexId id, const Vertex& v) {
        for (const Vertex& u : neighbors(v, p)) mask[id] |= 1u << static_cast<unsigned>(rank(u, p));
    });

    SubsetSweepReport report;
    report.min_margin = std::numeric_limits<double>::infinity();
    const int k = p.k();
    const std::uint32_t end = 1u << N;
    for (std::uint32_t S = 1; S < end; ++S) {
        const auto V = static_cast<std::uint64_t>(std::popcount(S));
        int twice_edges = 0;
        for (std::uint32_t t = S; t; t &= t - 1)
            twice_edges += std::popcount(mask[static_cast<std::size_t>(std::countr_zero(t))] & S);
        const auto E = static_cast<std::uint64_t>(twice_edges / 2);

        const IneqCheck c = edge_bound_from_counts(k, V, E);
        ++report.subsets_checked;
        if (!c.pass) ++report.violations;
        if (c.margin <= report.min_margin) {
            report.min_margin = c.margin;
            report.min_witness.clear();
            for (std::uint32_t t = S; t; t &= t - 1)
                report.min_witness.push_back(static_cast<VertexId>(std::countr_zero(t)));
        }
    }
    return report;
}

SubsetSweepReport sampled_edge_bound_check(const HammingParams& p, std::uint64_t samples,
                                     std::uint64_t seed, std::uint64_t limit) {
    if (samples < 1) throw std::invalid_argument("sampled_edge_bound_check: samples must be >= 1");
    if (!p.enumerable(limit))
        throw EnumerationLimitError("sampled_edge_bound_check: k^n = " + p.vertex_count().get_str() +
                                    " exceeds limit " + std::to_string(limit));
    const std::uint64_t N = *p.vertex_count_u64();

    std::vector<std::vector<std::uint32_t>> adj(N);
    for_each_vertex(p, 0, N, [&](VertexId id, const Vertex& v) {
        for (const Vertex& u : neighbors(v, p))
            adj[id].push_back(static_cast<std::uint32_t>(rank(u, p)));
    });

    // Inclusion probability grid t/16, cycled by sample index: sparse through
    // dense subsets all get coverage.
    static constexpr std::array<std::uint64_t, 6> kGrid = {1, 2, 4, 8, 12, 15};

    SubsetSweepReport report;
    report.min_margin = std::numeric_limits<double>::infinity();
    std::vector<char> in(N, 0);
    std::vector<std::uint32_t> subset;
    for (std::uint64_t j = 0; j < samples; ++j) {
        SplitMix64 g = stream_for(seed, j);
        const std::uint64_t threshold = kGrid[j % kGrid.size()];
        subset.clear();
        for (std::uint64_t id = 0; id < N; ++id) {
            in[id] = uniform_below(g, 16) < threshold ? 1 : 0;
            if (in[id]) subset.push_back(static_cast<std::uint32_t>(id));
        }
        if (subset.empty()) continue;

        std::uint64_t edges = 0;
        for (std::uint32_t v : subset)
            for (std::uint32_t u : adj[v])
                if (u > v && in[u]) ++edges;

        const IneqCheck c = edge_bound_from_counts(p.k(), subset.size(), edges);
        ++report.subsets_checked;
        if (!c.pass) ++report.violations;
        if (c.margin <= report.min_margin) {
            report.min_margin = c.margin;
            report.min_witness.assign(subset.begin(), subset.end());
        }
    }
    return report;
}

}  // namespace hamming
