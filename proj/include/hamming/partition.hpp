#pragma once

#include <string>
#include <vector>

#include "hamming/core.hpp"

namespace hamming {

// [n] = F_1 disjoint-union ... disjoint-union F_q with |q - sqrt(n)| < 1 and
// every ||F_j| - sqrt(n)| < 1. Blocks hold 1-based coordinates; they are
// mathematically sets, stored as lists (canonical ones come out sorted).
struct BalancedPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    int q() const { return static_cast<int>(blocks.size()); }
    std::vector<int> block_sizes() const;

    friend bool operator==(const BalancedPartition&, const BalancedPartition&) = default;
};

// Block sizes of the canonical rule without materializing coordinate lists:
// s = floor(sqrt(n)), r = n - s^2; r <= s gives q = s with r blocks of s+1
// then s-r blocks of s; r > s gives q = s+1 with r-s blocks of s+1 then
// 2s+1-r blocks of s.
std::vector<int> balanced_block_sizes(int n);

// Canonical partition: the sizes above over consecutive ascending coordinates,
// larger blocks first. Pure function of n.
BalancedPartition make_partition(int n);

struct PartitionCheck {
    bool ok = true;
    std::string violation;  // first violated constraint when !ok
};

// Disjoint-cover plus both balance inequalities, all in exact integer
// arithmetic: |q - sqrt(n)| < 1 iff (q-1)^2 < n and (q+1)^2 > n, same per
// block size. Violations are results, not errors.
PartitionCheck validate_partition(const BalancedPartition& part);

}  // namespace hamming
