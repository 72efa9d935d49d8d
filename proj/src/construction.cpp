#include "hamming/construction.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamming {

WitnessSpec make_witness_spec(HammingParams params, BalancedPartition partition, int i1, int i2) {
    if (partition.n != params.n())
        throw std::invalid_argument("make_witness_spec: partition.n does not match params");
    if (auto check = validate_partition(partition); !check.ok)
        throw std::invalid_argument("make_witness_spec: invalid partition: " + check.violation);
    if (i1 < 0 || i1 >= params.k() || i2 < 0 || i2 >= params.k())
        throw std::invalid_argument("make_witness_spec: residue index outside [0, k)");
    return WitnessSpec{std::move(params), std::move(partition), i1, i2};
}

ClassLabel classify(const Vertex& v, const BalancedPartition& part, const HammingParams& p) {
    const int k = p.k();
    std::uint64_t sum = 0;
    for (Digit d : v.digits) sum += d;

    bool has_zero_block = false;
    for (const auto& block : part.blocks) {
        bool all_zero = true;
        for (int c : block) {
            if (v[static_cast<std::size_t>(c - 1)] != 0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) {
            has_zero_block = true;
            break;
        }
    }
    return {has_zero_block ? Side::X : Side::Y,
            static_cast<int>(sum % static_cast<std::uint64_t>(k))};
}

std::vector<int> zero_blocks(const Vertex& v, const BalancedPartition& part) {
    std::vector<int> result;
    for (int j = 0; j < part.q(); ++j) {
        bool all_zero = true;
        for (int c : part.blocks[static_cast<std::size_t>(j)]) {
            if (v[static_cast<std::size_t>(c - 1)] != 0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) result.push_back(j);
    }
    return result;
}

bool in_witness(const Vertex& v, const WitnessSpec& w) {
    const ClassLabel label = classify(v, w.partition, w.params);
    return label.side == Side::X ? label.residue == w.i1 : label.residue == w.i2;
}

std::vector<Vertex> witness_neighbors(const Vertex& v, const WitnessSpec& w) {
    if (!in_witness(v, w))
        throw std::invalid_argument("witness_neighbors: vertex outside the witness subgraph");

    std::vector<Vertex> result;
    if (w.i1 == w.i2) return result;  // both sides share a digit-sum residue: no edges

    const int k = w.params.k();
    const Digit delta = static_cast<Digit>(((w.i2 - w.i1) % k + k) % k);

    const std::vector<int> zeros = zero_blocks(v, w.partition);
    if (!zeros.empty()) {
        // X side. A neighbor in Y must keep some block all-zero, so only a
        // unique zero block can be broken; with two, every neighbor stays in X.
        if (zeros.size() != 1) return result;
        // emission order is ascending pivot coordinate, whatever order the
        // partition stores
        std::vector<int> block = w.partition.blocks[static_cast<std::size_t>(zeros[0])];
        std::sort(block.begin(), block.end());
        result.reserve(block.size());
        for (int l0 : block) {
            Vertex u = v;
            u.digits[static_cast<std::size_t>(l0 - 1)] = delta;
            result.push_back(std::move(u));
        }
        return result;
    }

    // Y side: a block can be zeroed by one digit change only if exactly one of
    // its digits is nonzero, and landing in residue i1 forces that digit's
    // value.
    std::vector<int> pivots;
    for (const auto& block : w.partition.blocks) {
        int nonzero_at = 0;
        int nonzero_count = 0;
        for (int c : block) {
            if (v[static_cast<std::size_t>(c - 1)] != 0) {
                nonzero_at = c;
                if (++nonzero_count > 1) break;
            }
        }
        if (nonzero_count == 1 && v[static_cast<std::size_t>(nonzero_at - 1)] == delta)
            pivots.push_back(nonzero_at);
    }
    std::sort(pivots.begin(), pivots.end());  // pivots are distinct across blocks
    result.reserve(pivots.size());
    for (int l0 : pivots) {
        Vertex u = v;
        u.digits[static_cast<std::size_t>(l0 - 1)] = 0;
        result.push_back(std::move(u));
    }
    return result;
}

std::pair<int, int> select_witness(const ResidueCounts& xc, const ResidueCounts& yc) {
    if (xc.empty() || xc.size() != yc.size())
        throw std::invalid_argument("select_witness: count vectors must be non-empty, same length");
    int i1 = 0, i2 = 0;
    for (std::size_t i = 1; i < xc.size(); ++i)
        if (xc[i] > xc[static_cast<std::size_t>(i1)]) i1 = static_cast<int>(i);
    for (std::size_t i = 1; i < yc.size(); ++i)
        if (yc[i] > yc[static_cast<std::size_t>(i2)]) i2 = static_cast<int>(i);
    return {i1, i2};
}

}  // namespace hamming
