#pragma once

#include <cstdint>
#include <utility>

#include "hamming/bigint.hpp"
#include "hamming/core.hpp"
#include "hamming/partition.hpp"

namespace hamming {

// |X| = |{v : some block fully zero}| by inclusion-exclusion over blocks,
// grouped by block size (a balanced partition has at most two distinct
// sizes). Each size class contributes an alternating binomial sum; disjoint
// classes multiply, so the grouped sum is evaluated in its factored form
// (k^m - 1)^c per class — exact, and O(q) big-integer operations instead of
// 2^q. For q <= 12 the subset form is recomputed and compared as a self-check.
BigInt count_X_total(const HammingParams& p, const BalancedPartition& part);

// The same value as a literal binomial-weighted double sum over size-class
// subset profiles: O(q^2) terms. Reference path for tests.
BigInt count_X_total_grouped(const HammingParams& p, const BalancedPartition& part);

// The same value summed over all 2^q - 1 nonempty block subsets. Reference
// path for tests; throws std::invalid_argument when q > 20.
BigInt count_X_total_subsets(const HammingParams& p, const BalancedPartition& part);

// |X| mod k == (-1)^(q+1) mod k, and in particular k never divides |X|.
bool x_congruence_check(const HammingParams& p, const BalancedPartition& part);

// Y_j counted by digit-sum residue j. Per block, assignments split uniformly
// across residues (k^(m-1) each) except the all-zero one; the Y vector is the
// k-cyclic convolution of (k^(m-1)*ones - e0) over blocks. Vectors of the
// form a*ones + b*e0 are closed under that convolution, so the production
// path folds the pair (a, b) across blocks in O(q) big-integer steps.
ResidueCounts count_Y_residues(const HammingParams& p, const BalancedPartition& part);

// Literal convolution of the per-block vectors: O(q k^2) big-integer
// operations. Reference path for tests.
ResidueCounts count_Y_residues_convolution(const HammingParams& p, const BalancedPartition& part);

// X_j = k^(n-1) - Y_j. Cross-checks sum(X_j) == count_X_total and the strict
// pigeonhole k * max_j X_j > sum(X_j) on every call (both are theorems for
// any partition of [n] into nonempty blocks; a failure is a bug, reported as
// std::logic_error).
ResidueCounts count_X_residues(const HammingParams& p, const BalancedPartition& part);

// Classify every vertex and tally both sides: the independent oracle for all
// counting above. Refuses (EnumerationLimitError) when k^n > limit. Shards
// rank ranges across threads; tallies merge by addition, so the result is
// independent of shard boundaries.
std::pair<ResidueCounts, ResidueCounts> enumerate_counts(const HammingParams& p,
                                                         const BalancedPartition& part,
                                                         std::uint64_t limit);

}  // namespace hamming
