#pragma once

#include <cstdint>
#include <vector>

#include "hamming/bigint.hpp"
#include "hamming/core.hpp"

namespace hamming {

// Induced-subgraph statistics of one vertex subset.
struct SubsetStats {
    std::uint64_t vertex_count = 0;
    std::uint64_t edge_count = 0;
    Rational average_degree;  // exact 2*edges/vertices
};

// Outcome of one inequality check. pass comes from the exact decision
// procedure; margin is a double for reporting only (exact-equality cases
// report exactly 0).
struct IneqCheck {
    bool pass = false;
    double margin = 0.0;
};

// Aggregate over many subsets. min_margin/min_witness identify the tightest
// subset encountered (the last one, in scan order, when tied).
struct SubsetSweepReport {
    std::uint64_t subsets_checked = 0;
    std::uint64_t violations = 0;
    double min_margin = 0.0;
    std::vector<VertexId> min_witness;
};

// floor(log2(x) * 2^p) up to a few final-digit ulps: shift-and-square on the
// mantissa with 64 guard bits. Error at most 4 ulps of 2^-p (the guard bits
// swallow the per-squaring truncations). x >= 1.
BigInt log2_fixed(const BigInt& x, unsigned p);

// Exact induced edge count via membership tests; each edge once. Throws on
// an empty set, duplicate ids, out-of-range ids, or unrankable k^n.
SubsetStats subset_stats(const std::vector<VertexId>& vertices, const HammingParams& p);

// (k-1)*|V|*log2|V| >= 2|E|, decided exactly: powers of two compare in pure
// integer arithmetic; otherwise doubles with a 1e-9 relative guard band,
// falling back to log2_fixed at escalating precision inside the band (where
// equality is impossible because log2 of a non-power-of-two is irrational).
// margin = (k-1)*log2|V| - average_degree.
IneqCheck check_edge_bound(const std::vector<VertexId>& vertices, const HammingParams& p);

// (a+b)log2(a+b) >= a*log2(a) + b*log2(b) + 2a for rationals 0 < a <= b.
// Scaling (a,b) by t>0 scales the margin by t, so the decision reduces to
// integers by clearing denominators; a == b is the exact equality case.
// Throws std::invalid_argument unless 0 < a <= b.
IneqCheck check_scalar_ineq(const Rational& a, const Rational& b);

// Every nonempty subset of H(n,k), k^n <= 16 (EnumerationLimitError beyond).
SubsetSweepReport exhaustive_edge_bound_check(const HammingParams& p);

// `samples` pseudo-random subsets: sample j uses the stream (seed, j) and
// includes each vertex independently with probability t/16, t cycling
// through {1, 2, 4, 8, 12, 15} by sample index to cover sparse and dense
// regimes. Empty draws are skipped (not checked, not violations). Requires
// k^n <= limit.
SubsetSweepReport sampled_edge_bound_check(const HammingParams& p, std::uint64_t samples,
                                     std::uint64_t seed, std::uint64_t limit = 4096);

}  // namespace hamming
