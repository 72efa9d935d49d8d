#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hamming/bigint.hpp"
#include "hamming/construction.hpp"
#include "hamming/core.hpp"
#include "hamming/partition.hpp"

namespace hamming {

enum class VerifyMode { exhaustive, sampled, counts_only };

enum class CheckState { pass, fail, skipped };

// End-to-end verification record for one (n, k): the selected witness
// subgraph, its exact counts, and the outcome of each check. Serialized
// bit-exactly by the io layer.
struct WitnessCertificate {
    explicit WitnessCertificate(WitnessSpec s) : spec(std::move(s)) {}

    WitnessSpec spec;
    ResidueCounts x_counts, y_counts;
    BigInt size;   // x_counts[i1] + y_counts[i2]
    BigInt alpha;  // k^(n-1)
    int delta_bound = 0;
    std::optional<int> delta_observed;  // absent in counts-only mode
    VerifyMode mode = VerifyMode::counts_only;
    CheckState size_gt_alpha = CheckState::fail;
    CheckState degree_le_bound = CheckState::skipped;
    CheckState bipartite = CheckState::skipped;
    CheckState congruence = CheckState::fail;
    std::uint64_t seed = 0;

    bool all_pass() const {
        auto ok = [](CheckState s) { return s != CheckState::fail; };
        return ok(size_gt_alpha) && ok(degree_le_bound) && ok(bipartite) && ok(congruence);
    }
};

// Count, select (i1, i2), then check:
//   size_gt_alpha / congruence: exact integers, every mode.
//   degree_le_bound + delta_observed and bipartite: exhaustive mode scans all
//   k^n vertices (refuses when k^n > limit), sampled mode scans sample_size
//   pseudo-random members, counts-only skips both.
// Exhaustive scans shard the rank space; partial results merge by max/or, so
// the outcome is thread-count independent. The exhaustive member tally is
// also required to equal the counted size (a mismatch is a bug, not a result).
WitnessCertificate certify(const HammingParams& p, const BalancedPartition& part, VerifyMode mode,
                           std::uint64_t sample_size = 1000, std::uint64_t seed = 0,
                           std::uint64_t limit = 1'000'000);

// count member vertices, bit-exact for a given (spec, seed): sample i draws
// from the stream (seed, i), rejection-sampling uniform ranks until one lands
// in the witness. Membership density is at least 1/k, so the per-sample
// budget of 64*k draws fails with probability ~e^-64 per sample; failure
// throws with diagnostics rather than silently shrinking the sample.
std::vector<Vertex> sample_members(const WitnessSpec& w, std::uint64_t count, std::uint64_t seed);

}  // namespace hamming
