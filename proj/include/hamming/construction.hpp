#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hamming/bigint.hpp"
#include "hamming/core.hpp"
#include "hamming/partition.hpp"

namespace hamming {

enum class Side : std::uint8_t { X, Y };

// Side + digit-sum residue of one vertex. side == X iff some block is
// entirely zero in the vertex.
struct ClassLabel {
    Side side = Side::Y;
    int residue = 0;

    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

// One member of the witness family: the subgraph induced on X_{i1} ∪ Y_{i2}.
struct WitnessSpec {
    HammingParams params;
    BalancedPartition partition;
    int i1 = 0;
    int i2 = 0;
};

// Throws std::invalid_argument unless the partition validates against
// params.n and both residues lie in [0, k).
WitnessSpec make_witness_spec(HammingParams params, BalancedPartition partition, int i1, int i2);

ClassLabel classify(const Vertex& v, const BalancedPartition& part, const HammingParams& p);

// Indices (0-based) of blocks fully zero in v, ascending. Nonempty iff v is
// on the X side; a singleton identifies j(v).
std::vector<int> zero_blocks(const Vertex& v, const BalancedPartition& part);

bool in_witness(const Vertex& v, const WitnessSpec& w);

// Neighbors of v inside the induced subgraph, in closed form — O(n), no scan
// of all n(k-1) Hamming neighbors:
//   v on the X side: empty when i1 == i2 or more than one block of v is
//     all-zero; otherwise one neighbor per coordinate l0 of the unique zero
//     block, with the digit at l0 set to (i2 - i1) mod k. Ascending l0.
//   v on the Y side: one neighbor per block whose restriction to v has
//     exactly one nonzero digit and that digit equals (i2 - i1) mod k; the
//     neighbor zeroes it out. Ascending l0.
// Throws std::invalid_argument if v is not a member.
std::vector<Vertex> witness_neighbors(const Vertex& v, const WitnessSpec& w);

// argmax residue on each side, ties to the smallest index.
std::pair<int, int> select_witness(const ResidueCounts& xc, const ResidueCounts& yc);

}  // namespace hamming
