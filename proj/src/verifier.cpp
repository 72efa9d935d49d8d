#include "hamming/verifier.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "hamming/counting.hpp"
#include "hamming/parallel.hpp"
#include "hamming/rng.hpp"

namespace hamming {

namespace {

struct ScanResult {
    int max_degree = 0;
    bool same_side_edge = false;
    std::uint64_t members = 0;
};

// Degree via the closed form; bipartiteness via the raw Hamming neighborhood,
// so the two sides of the check do not share a code path.
ScanResult scan_vertex(ScanResult acc, const Vertex& v, const WitnessSpec& w) {
    ++acc.members;
    const auto degree = static_cast<int>(witness_neighbors(v, w).size());
    acc.max_degree = std::max(acc.max_degree, degree);
    const Side side = classify(v, w.partition, w.params).side;
    for (const Vertex& u : neighbors(v, w.params)) {
        if (!in_witness(u, w)) continue;
        if (classify(u, w.partition, w.params).side == side) acc.same_side_edge = true;
    }
    return acc;
}

}  // namespace

WitnessCertificate certify(const HammingParams& p, const BalancedPartition& part, VerifyMode mode,
                           std::uint64_t sample_size, std::uint64_t seed, std::uint64_t limit) {
    const ResidueCounts yc = count_Y_residues(p, part);
    const ResidueCounts xc = count_X_residues(p, part);
    const auto [i1, i2] = select_witness(xc, yc);

    WitnessCertificate cert(make_witness_spec(p, part, i1, i2));
    cert.x_counts = xc;
    cert.y_counts = yc;
    cert.size = xc[static_cast<std::size_t>(i1)] + yc[static_cast<std::size_t>(i2)];
    cert.alpha = p.alpha();
    cert.delta_bound = p.degree_cap();
    cert.mode = mode;
    cert.seed = seed;

    cert.size_gt_alpha = cert.size > cert.alpha ? CheckState::pass : CheckState::fail;
    cert.congruence = x_congruence_check(p, part) ? CheckState::pass : CheckState::fail;

    if (cert.size == 0)  // unreachable (size >= k^(n-1) >= 1); guarded anyway
        throw std::logic_error("certify: witness subgraph is empty");

    if (mode == VerifyMode::counts_only) return cert;

    ScanResult scan;
    if (mode == VerifyMode::exhaustive) {
        if (!p.enumerable(limit))
            throw EnumerationLimitError("certify: exhaustive mode needs k^n <= " +
                                        std::to_string(limit) + ", got " +
                                        p.vertex_count().get_str());
        const std::uint64_t total = *p.vertex_count_u64();
        scan = parallel_map_reduce(
            std::uint64_t{0}, total, ScanResult{},
            [&](std::uint64_t lo, std::uint64_t hi) {
                ScanResult r;
                for_each_vertex(p, lo, hi, [&](VertexId, const Vertex& v) {
                    if (in_witness(v, cert.spec)) r = scan_vertex(std::move(r), v, cert.spec);
                });
                return r;
            },
            [](ScanResult a, ScanResult b) {
                a.max_degree = std::max(a.max_degree, b.max_degree);
                a.same_side_edge = a.same_side_edge || b.same_side_edge;
                a.members += b.members;
                return a;
            });
        if (BigInt(static_cast<unsigned long>(scan.members)) != cert.size)
            throw std::logic_error("certify: exhaustive member tally " +
                                   std::to_string(scan.members) + " != counted size " +
                                   cert.size.get_str());
    } else {
        if (sample_size < 1)
            throw std::invalid_argument("certify: sampled mode needs sample_size >= 1");
        for (const Vertex& v : sample_members(cert.spec, sample_size, seed))
            scan = scan_vertex(std::move(scan), v, cert.spec);
    }

    cert.delta_observed = scan.max_degree;
    cert.degree_le_bound =
        scan.max_degree <= cert.delta_bound ? CheckState::pass : CheckState::fail;
    cert.bipartite = scan.same_side_edge ? CheckState::fail : CheckState::pass;
    return cert;
}

std::vector<Vertex> sample_members(const WitnessSpec& w, std::uint64_t count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample_members: count must be >= 1");
    const auto total = w.params.vertex_count_u64();
    if (!total)
        throw std::invalid_argument("sample_members: k^n exceeds the 64-bit rank space");
    const std::uint64_t budget = 64ull * static_cast<std::uint64_t>(w.params.k());

    std::vector<Vertex> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        SplitMix64 g = stream_for(seed, i);
        bool accepted = false;
        for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
            Vertex v = unrank(uniform_below(g, *total), w.params);
            if (in_witness(v, w)) {
                out.push_back(std::move(v));
                accepted = true;
                break;
            }
        }
        if (!accepted)
            throw std::runtime_error("sample_members: no member found for sample " +
                                     std::to_string(i) + " within " + std::to_string(budget) +
                                     " draws (density should be >= 1/k)");
    }
    return out;
}

}  // namespace hamming
