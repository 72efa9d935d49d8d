#include "hamming/partition.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hamming {

std::vector<int> BalancedPartition::block_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (const auto& block : blocks) sizes.push_back(static_cast<int>(block.size()));
    return sizes;
}

std::vector<int> balanced_block_sizes(int n) {
    if (n < 1) throw std::invalid_argument("balanced_block_sizes: n must be >= 1");
    const std::int64_t s = floor_isqrt(n);
    const std::int64_t r = n - s * s;  // 0 <= r <= 2s
    std::int64_t q, big;               // big = number of size-(s+1) blocks
    if (r <= s) {
        q = s;
        big = r;
    } else {
        q = s + 1;
        big = r - s;
    }
    std::vector<int> sizes;
    sizes.reserve(static_cast<std::size_t>(q));
    for (std::int64_t j = 0; j < big; ++j) sizes.push_back(static_cast<int>(s + 1));
    for (std::int64_t j = big; j < q; ++j) sizes.push_back(static_cast<int>(s));
    return sizes;
}

BalancedPartition make_partition(int n) {
    const std::vector<int> sizes = balanced_block_sizes(n);
    BalancedPartition part;
    part.n = n;
    part.blocks.reserve(sizes.size());
    int next = 1;
    for (int size : sizes) {
        std::vector<int> block;
        block.reserve(static_cast<std::size_t>(size));
        for (int c = 0; c < size; ++c) block.push_back(next++);
        part.blocks.push_back(std::move(block));
    }
    return part;
}

namespace {

// |v - sqrt(n)| < 1 for integer v, n without floating point.
bool within_one_of_sqrt(std::int64_t v, std::int64_t n) {
    return (v - 1) * (v - 1) < n && (v + 1) * (v + 1) > n;
}

}  // namespace

PartitionCheck validate_partition(const BalancedPartition& part) {
    const int n = part.n;
    if (n < 1) return {false, "n must be >= 1"};

    // Exact cover: every coordinate 1..n exactly once.
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::int64_t covered = 0;
    for (std::size_t j = 0; j < part.blocks.size(); ++j) {
        const auto& block = part.blocks[j];
        if (block.empty())
            return {false, "block " + std::to_string(j + 1) + " is empty"};
        for (int c : block) {
            if (c < 1 || c > n)
                return {false, "coordinate " + std::to_string(c) + " outside [1," +
                                   std::to_string(n) + "]"};
            if (seen[static_cast<std::size_t>(c)])
                return {false, "coordinate " + std::to_string(c) + " covered twice"};
            seen[static_cast<std::size_t>(c)] = 1;
            ++covered;
        }
    }
    if (covered != n) return {false, "blocks do not cover every coordinate"};

    const std::int64_t q = part.q();
    if (!within_one_of_sqrt(q, n))
        return {false, "block count " + std::to_string(q) + " not within 1 of sqrt(" +
                           std::to_string(n) + ")"};
    for (std::size_t j = 0; j < part.blocks.size(); ++j) {
        const auto m = static_cast<std::int64_t>(part.blocks[j].size());
        if (!within_one_of_sqrt(m, n))
            return {false, "block " + std::to_string(j + 1) + " size " + std::to_string(m) +
                               " not within 1 of sqrt(" + std::to_string(n) + ")"};
    }
    return {};
}

}  // namespace hamming
