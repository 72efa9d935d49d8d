#include "hamming/counting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamming/construction.hpp"
#include "hamming/parallel.hpp"

namespace hamming {

namespace {

struct SizeClass {
    int size = 0;
    int count = 0;
};

// Distinct block sizes with multiplicities, in first-seen order. A valid
// balanced partition has at most two (sizes within 1 of sqrt(n) span a window
// of width < 2), but nothing here relies on that.
std::vector<SizeClass> size_classes(const BalancedPartition& part) {
    std::vector<SizeClass> classes;
    for (const auto& block : part.blocks) {
        const int m = static_cast<int>(block.size());
        bool found = false;
        for (auto& cls : classes) {
            if (cls.size == m) {
                ++cls.count;
                found = true;
                break;
            }
        }
        if (!found) classes.push_back({m, 1});
    }
    return classes;
}

void require_consistent(const HammingParams& p, const BalancedPartition& part) {
    if (part.n != p.n())
        throw std::invalid_argument("counting: partition is for n=" + std::to_string(part.n) +
                                    " but params have n=" + std::to_string(p.n()));
}

}  // namespace

BigInt count_X_total(const HammingParams& p, const BalancedPartition& part) {
    require_consistent(p, part);
    const int k = p.k();
    // Complement form of the grouped inclusion-exclusion: each size class's
    // alternating binomial sum is (k^m - 1)^c by the binomial theorem, and
    // disjoint classes multiply.
    BigInt survivors = 1;  // assignments with no block all-zero
    for (const auto& cls : size_classes(part)) {
        BigInt base = pow_int(k, static_cast<unsigned long>(cls.size)) - 1;
        BigInt powed;
        mpz_pow_ui(powed.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(cls.count));
        survivors *= powed;
    }
    BigInt result = p.vertex_count() - survivors;
    if (part.q() <= 12 && result != count_X_total_subsets(p, part))
        throw std::logic_error("count_X_total: factored and subset forms disagree");
    return result;
}

BigInt count_X_total_grouped(const HammingParams& p, const BalancedPartition& part) {
    require_consistent(p, part);
    const int k = p.k();
    const std::vector<SizeClass> classes = size_classes(part);
    // Odometer over subset profiles (a_t = how many blocks taken from class t);
    // each profile stands for prod C(c_t, a_t) equal-size subsets.
    std::vector<int> taken(classes.size(), 0);
    BigInt total = 0;
    for (;;) {
        // advance to the next profile; the all-zero start contributes nothing
        std::size_t pos = 0;
        while (pos < taken.size() && taken[pos] == classes[pos].count) taken[pos++] = 0;
        if (pos == taken.size()) break;
        ++taken[pos];

        long covered = 0, picked = 0;
        BigInt weight = 1;
        for (std::size_t t = 0; t < classes.size(); ++t) {
            covered += static_cast<long>(taken[t]) * classes[t].size;
            picked += taken[t];
            weight *= binomial(static_cast<unsigned long>(classes[t].count),
                               static_cast<unsigned long>(taken[t]));
        }
        weight *= pow_int(k, static_cast<unsigned long>(p.n() - covered));
        if (picked % 2 == 1)
            total += weight;
        else
            total -= weight;
    }
    return total;
}

BigInt count_X_total_subsets(const HammingParams& p, const BalancedPartition& part) {
    require_consistent(p, part);
    const int q = part.q();
    if (q > 20)
        throw std::invalid_argument("count_X_total_subsets: 2^q enumeration capped at q=20");
    const std::vector<int> sizes = part.block_sizes();
    BigInt total = 0;
    for (std::uint32_t mask = 1; mask < (1u << q); ++mask) {
        long covered = 0;
        for (int j = 0; j < q; ++j)
            if (mask & (1u << j)) covered += sizes[static_cast<std::size_t>(j)];
        const BigInt term = pow_int(p.k(), static_cast<unsigned long>(p.n() - covered));
        if (std::popcount(mask) % 2 == 1)
            total += term;
        else
            total -= term;
    }
    return total;
}

bool x_congruence_check(const HammingParams& p, const BalancedPartition& part) {
    const BigInt x = count_X_total(p, part);
    const auto k = static_cast<unsigned long>(p.k());
    const unsigned long residue = mpz_fdiv_ui(x.get_mpz_t(), k);
    // (-1)^(q+1) mod k: 1 for odd q, k-1 for even q. Both are nonzero, so a
    // match also certifies that k does not divide |X|.
    const unsigned long expected = (part.q() % 2 == 1) ? 1ul : k - 1;
    return residue == expected;
}

ResidueCounts count_Y_residues(const HammingParams& p, const BalancedPartition& part) {
    require_consistent(p, part);
    const int k = p.k();
    // Fold (a, b) ~ a*ones + b*e0 through the per-block vectors (k^(m-1), -1):
    //   a' = a*(k^m - 1) + k^(m-1)*b,   b' = -b,   starting from e0 = (0, 1).
    BigInt a = 0, b = 1;
    for (const auto& block : part.blocks) {
        const BigInt c = pow_int(k, static_cast<unsigned long>(block.size() - 1));
        a = a * (c * k - 1) + c * b;
        b = -b;
    }
    ResidueCounts y(static_cast<std::size_t>(k), a);
    y[0] += b;
    return y;
}

ResidueCounts count_Y_residues_convolution(const HammingParams& p,
                                           const BalancedPartition& part) {
    require_consistent(p, part);
    const auto k = static_cast<std::size_t>(p.k());
    ResidueCounts acc(k, 0);
    acc[0] = 1;
    for (const auto& block : part.blocks) {
        ResidueCounts vec(k, pow_int(p.k(), static_cast<unsigned long>(block.size() - 1)));
        vec[0] -= 1;
        ResidueCounts next(k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) next[(i + j) % k] += acc[i] * vec[j];
        acc = std::move(next);
    }
    return acc;
}

ResidueCounts count_X_residues(const HammingParams& p, const BalancedPartition& part) {
    const ResidueCounts y = count_Y_residues(p, part);
    ResidueCounts x;
    x.reserve(y.size());
    for (const BigInt& yi : y) x.push_back(p.alpha() - yi);

    const BigInt sum = std::accumulate(x.begin(), x.end(), BigInt(0));
    if (sum != count_X_total(p, part))
        throw std::logic_error("count_X_residues: residue sum disagrees with |X|");
    const BigInt& mx = *std::max_element(x.begin(), x.end());
    if (!(mx * p.k() > sum))
        throw std::logic_error("count_X_residues: pigeonhole strictness failed");
    return x;
}

std::pair<ResidueCounts, ResidueCounts> enumerate_counts(const HammingParams& p,
                                                         const BalancedPartition& part,
                                                         std::uint64_t limit) {
    require_consistent(p, part);
    if (!p.enumerable(limit))
        throw EnumerationLimitError("enumerate_counts: k^n = " + p.vertex_count().get_str() +
                                    " exceeds limit " + std::to_string(limit));
    const std::uint64_t total = *p.vertex_count_u64();
    const auto k = static_cast<std::size_t>(p.k());

    struct Tally {
        std::vector<std::uint64_t> x, y;
    };
    Tally zero{std::vector<std::uint64_t>(k, 0), std::vector<std::uint64_t>(k, 0)};
    Tally tally = parallel_map_reduce(
        std::uint64_t{0}, total, zero,
        [&](std::uint64_t lo, std::uint64_t hi) {
            Tally t{std::vector<std::uint64_t>(k, 0), std::vector<std::uint64_t>(k, 0)};
            for_each_vertex(p, lo, hi, [&](VertexId, const Vertex& v) {
                const ClassLabel label = classify(v, part, p);
                auto& side = label.side == Side::X ? t.x : t.y;
                ++side[static_cast<std::size_t>(label.residue)];
            });
            return t;
        },
        [&](Tally acc, Tally part_tally) {
            for (std::size_t i = 0; i < k; ++i) {
                acc.x[i] += part_tally.x[i];
                acc.y[i] += part_tally.y[i];
            }
            return acc;
        });

    ResidueCounts xc, yc;
    xc.reserve(k);
    yc.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        xc.emplace_back(static_cast<unsigned long>(tally.x[i]));
        yc.emplace_back(static_cast<unsigned long>(tally.y[i]));
    }
    return {std::move(xc), std::move(yc)};
}

}  // namespace hamming
