#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamming/bigint.hpp"

namespace hamming {

using Digit = std::uint32_t;

// Little-endian mixed-radix rank: rank(v) = sum_{ell=1..n} v(ell) * k^(ell-1).
using VertexId = std::uint64_t;

// k = 1 gives a one-vertex graph where an (alpha+1)-subset cannot exist, so it
// is rejected with its own error type instead of being special-cased anywhere.
struct UnsupportedAlphabetError : std::invalid_argument {
    explicit UnsupportedAlphabetError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Thrown when an operation that must walk all k^n vertices is asked to run
// past its guard. Callers decide the guard; nothing enumerates silently.
struct EnumerationLimitError : std::runtime_error {
    explicit EnumerationLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// A word of Z_k^n. digits[i] holds coordinate i+1: coordinates are 1-based in
// every external format and 0-based in memory.
struct Vertex {
    std::vector<Digit> digits;

    Vertex() = default;
    explicit Vertex(std::vector<Digit> d) : digits(std::move(d)) {}
    Vertex(std::initializer_list<Digit> d) : digits(d) {}

    std::size_t size() const { return digits.size(); }
    Digit operator[](std::size_t i) const { return digits[i]; }
    Digit& operator[](std::size_t i) { return digits[i]; }

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// The pair (n, k) plus the derived constants used everywhere else.
class HammingParams {
public:
    HammingParams(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }

    const BigInt& vertex_count() const { return vertex_count_; }  // k^n
    const BigInt& alpha() const { return alpha_; }                // k^(n-1)
    int degree_cap() const { return degree_cap_; }                // ceil(sqrt(n))

    // k^n when it fits a 64-bit word; rank/unrank and enumeration need this.
    std::optional<std::uint64_t> vertex_count_u64() const { return vertex_count_u64_; }
    bool enumerable(std::uint64_t limit) const {
        return vertex_count_u64_ && *vertex_count_u64_ <= limit;
    }

private:
    int n_, k_;
    BigInt vertex_count_, alpha_;
    int degree_cap_;
    std::optional<std::uint64_t> vertex_count_u64_;
};

// Smallest d with d*d >= n, and largest s with s*s <= n. Exact integer math.
std::int64_t ceil_isqrt(std::int64_t n);
std::int64_t floor_isqrt(std::int64_t n);

bool is_valid_vertex(const Vertex& v, const HammingParams& p);

VertexId rank(const Vertex& v, const HammingParams& p);
Vertex unrank(VertexId id, const HammingParams& p);

// The n(k-1) words at Hamming distance 1, coordinate ascending, replacement
// digit ascending skipping v(ell).
std::vector<Vertex> neighbors(const Vertex& v, const HammingParams& p);

bool are_adjacent(const Vertex& u, const Vertex& v, const HammingParams& p);

inline BigInt alpha(const HammingParams& p) { return p.alpha(); }

// Rank-order traversal of [first, last); fn(id, vertex). Amortized O(1) per
// step via carry increment instead of a fresh unrank.
template <class Fn>
void for_each_vertex(const HammingParams& p, VertexId first, VertexId last, Fn&& fn) {
    if (first >= last)
        return;
    Vertex v = unrank(first, p);
    const Digit k = static_cast<Digit>(p.k());
    for (VertexId id = first;;) {
        fn(id, static_cast<const Vertex&>(v));
        if (++id == last)
            break;
        for (std::size_t i = 0;; ++i) {
            if (++v.digits[i] < k)
                break;
            v.digits[i] = 0;
        }
    }
}

}  // namespace hamming
