#include <doctest.h>

#include <numeric>
#include <utility>

#include "hamming/counting.hpp"
#include "hamming/partition.hpp"

using namespace hamming;

TEST_CASE("inclusion-exclusion totals on hand-counted instances") {
    CHECK(count_X_total(HammingParams(2, 2), make_partition(2)) == 1);
    CHECK(count_X_total(HammingParams(2, 3), make_partition(2)) == 1);
    CHECK(count_X_total(HammingParams(4, 2), make_partition(4)) == 7);
    CHECK(count_X_total(HammingParams(9, 3), make_partition(9)) == 2107);
    CHECK(count_X_total(HammingParams(17, 2), make_partition(17)) == 26447);
}

TEST_CASE("factored, grouped, and subset forms agree") {
    for (int n = 1; n <= 60; ++n) {
        for (int k : {2, 3, 7}) {
            const HammingParams p(n, k);
            const BalancedPartition part = make_partition(n);
            const BigInt factored = count_X_total(p, part);
            CAPTURE(n);
            CAPTURE(k);
            REQUIRE(factored == count_X_total_grouped(p, part));
            if (part.q() <= 16) REQUIRE(factored == count_X_total_subsets(p, part));
        }
    }
    // non-canonical but valid partition: same identities
    const BalancedPartition odd{5, {{5, 1, 3}, {2, 4}}};
    const HammingParams p(5, 4);
    CHECK(count_X_total(p, odd) == count_X_total_grouped(p, odd));
    CHECK(count_X_total(p, odd) == count_X_total_subsets(p, odd));
    CHECK_THROWS_AS(count_X_total_subsets(HammingParams(441, 2), make_partition(441)),
                    std::invalid_argument);  // q = 21 > 20
    CHECK_THROWS_AS(count_X_total(HammingParams(4, 2), make_partition(5)),
                    std::invalid_argument);  // n mismatch
}

TEST_CASE("congruence |X| = (-1)^(q+1) mod k on a spot sweep") {
    CHECK(x_congruence_check(HammingParams(2, 2), make_partition(2)));   // q=1: 1 mod 2
    CHECK(x_congruence_check(HammingParams(4, 2), make_partition(4)));   // q=2: 7 = 1 mod 2
    CHECK(x_congruence_check(HammingParams(9, 3), make_partition(9)));   // q=3: 2107 = 1 mod 3
    for (int n : {1, 5, 12, 30, 100})
        for (int k : {2, 3, 5, 11})
            CHECK(x_congruence_check(HammingParams(n, k), make_partition(n)));
}

TEST_CASE("Y residues: fold, literal convolution, and hand counts") {
    auto y22 = count_Y_residues(HammingParams(2, 2), make_partition(2));
    CHECK(y22 == ResidueCounts{1, 2});
    auto y13 = count_Y_residues(HammingParams(1, 3), make_partition(1));
    CHECK(y13 == ResidueCounts{0, 1, 1});
    auto y42 = count_Y_residues(HammingParams(4, 2), make_partition(4));
    CHECK(y42 == ResidueCounts{5, 4});

    for (auto [n, k] : {std::pair{1, 2}, {3, 2}, {7, 2}, {2, 3}, {5, 3}, {9, 3}, {3, 4},
                        {2, 7}, {20, 5}, {50, 2}}) {
        const HammingParams p(n, k);
        const BalancedPartition part = make_partition(n);
        CAPTURE(n);
        CAPTURE(k);
        REQUIRE(count_Y_residues(p, part) == count_Y_residues_convolution(p, part));
    }
}

TEST_CASE("X residues complement Y within each residue class") {
    const HammingParams p(4, 2);
    const BalancedPartition part = make_partition(4);
    const ResidueCounts x = count_X_residues(p, part);
    CHECK(x == ResidueCounts{3, 4});
    const ResidueCounts y = count_Y_residues(p, part);
    for (int i = 0; i < 2; ++i) CHECK(x[i] + y[i] == p.alpha());

    const HammingParams p93(9, 3);
    const ResidueCounts x93 = count_X_residues(p93, make_partition(9));
    CHECK(x93 == ResidueCounts{703, 702, 702});
    CHECK(std::accumulate(x93.begin(), x93.end(), BigInt(0)) == 2107);
}

TEST_CASE("enumeration oracle agrees with the arithmetic everywhere it can run") {
    for (auto [n, k] : {std::pair{1, 2}, {2, 2}, {3, 2}, {6, 2}, {10, 2}, {1, 3}, {2, 3},
                        {3, 3}, {7, 3}, {2, 4}, {4, 4}, {2, 5}, {3, 6}, {1, 9}}) {
        const HammingParams p(n, k);
        const BalancedPartition part = make_partition(n);
        const auto [xe, ye] = enumerate_counts(p, part, 1u << 20);
        CAPTURE(n);
        CAPTURE(k);
        REQUIRE(xe == count_X_residues(p, part));
        REQUIRE(ye == count_Y_residues(p, part));
    }
    CHECK_THROWS_AS(enumerate_counts(HammingParams(30, 3), make_partition(30), 1000),
                    EnumerationLimitError);
}

TEST_CASE("strict pigeonhole: k * max X_i > |X|") {
    for (auto [n, k] : {std::pair{2, 2}, {9, 3}, {17, 2}, {100, 4}, {1, 5}}) {
        const HammingParams p(n, k);
        const ResidueCounts x = count_X_residues(p, make_partition(n));  // asserts internally
        BigInt mx = 0, sum = 0;
        for (const BigInt& xi : x) {
            sum += xi;
            if (xi > mx) mx = xi;
        }
        CAPTURE(n);
        CAPTURE(k);
        CHECK(mx * k > sum);
    }
}

TEST_CASE("conservation: residue counts cover all of Z_k^n") {
    for (auto [n, k] : {std::pair{5, 3}, {12, 2}, {3, 7}, {200, 6}}) {
        const HammingParams p(n, k);
        const BalancedPartition part = make_partition(n);
        const ResidueCounts x = count_X_residues(p, part);
        const ResidueCounts y = count_Y_residues(p, part);
        BigInt total = 0;
        for (std::size_t i = 0; i < x.size(); ++i) total += x[i] + y[i];
        CHECK(total == p.vertex_count());
    }
}
