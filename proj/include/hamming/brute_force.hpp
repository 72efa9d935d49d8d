#pragma once

#include <cstdint>
#include <vector>

#include "hamming/core.hpp"

namespace hamming {

// Outcome of a subset search. When exhausted is false the search ran out of
// node budget and value is only an upper bound on the optimum.
struct SearchResult {
    int value = 0;
    std::vector<VertexId> witness_subset;  // attains value; empty if none found
    std::uint64_t nodes_explored = 0;
    bool exhausted = true;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;
inline constexpr std::uint64_t kDefaultSearchGuard = 64;  // max k^n for exact_f / exact_alpha

// Minimum over all `size`-subsets of vertices of the induced maximum degree.
// Depth-first over subsets in ascending rank order; a branch dies once some
// chosen vertex's committed degree reaches the incumbent. With
// translate_through_origin the subset is forced to contain rank 0, sound
// because coordinatewise translation is a graph automorphism acting
// transitively, and worth a ~k^n factor.
SearchResult min_maxdeg_subset(const HammingParams& p, std::uint64_t size, std::uint64_t budget,
                               bool translate_through_origin = true);

// Smallest max degree over subsets of alpha+1 = k^(n-1)+1 vertices.
// Refuses (EnumerationLimitError) when k^n > guard.
SearchResult exact_f(const HammingParams& p, std::uint64_t budget = kDefaultSearchBudget,
                     std::uint64_t guard = kDefaultSearchGuard);

// Exact maximum independent set size by include/exclude search with a greedy
// initial bound. Must be exact, so budget exhaustion throws instead of
// returning a bound.
int exact_alpha(const HammingParams& p, std::uint64_t budget = kDefaultSearchBudget,
                std::uint64_t guard = kDefaultSearchGuard);

}  // namespace hamming
