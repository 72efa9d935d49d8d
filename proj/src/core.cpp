#include "hamming/core.hpp"

#include <cmath>

namespace hamming {

std::int64_t floor_isqrt(std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("floor_isqrt: negative input");
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n)
        --s;
    while ((s + 1) * (s + 1) <= n)
        ++s;
    return s;
}

std::int64_t ceil_isqrt(std::int64_t n) {
    const std::int64_t s = floor_isqrt(n);
    return s * s == n ? s : s + 1;
}

HammingParams::HammingParams(int n, int k) : n_(n), k_(k) {
    if (n < 1)
        throw std::invalid_argument("HammingParams: n must be >= 1, got " + std::to_string(n));
    if (k == 1)
        throw UnsupportedAlphabetError(
            "HammingParams: k = 1 is rejected (one-vertex graph, no subset of alpha+1 vertices)");
    if (k < 2)
        throw std::invalid_argument("HammingParams: k must be >= 2, got " + std::to_string(k));
    vertex_count_ = pow_int(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(n));
    alpha_ = pow_int(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(n - 1));
    degree_cap_ = static_cast<int>(ceil_isqrt(n));
    vertex_count_u64_ = to_u64(vertex_count_);
}

bool is_valid_vertex(const Vertex& v, const HammingParams& p) {
    if (v.size() != static_cast<std::size_t>(p.n()))
        return false;
    const Digit k = static_cast<Digit>(p.k());
    for (Digit d : v.digits)
        if (d >= k)
            return false;
    return true;
}

namespace {

void require_valid(const Vertex& v, const HammingParams& p, const char* who) {
    if (!is_valid_vertex(v, p))
        throw std::invalid_argument(std::string(who) + ": vertex not in Z_k^n for n=" +
                                    std::to_string(p.n()) + ", k=" + std::to_string(p.k()));
}

std::uint64_t require_rankable(const HammingParams& p, const char* who) {
    const auto total = p.vertex_count_u64();
    if (!total)
        throw std::domain_error(std::string(who) + ": k^n does not fit a 64-bit rank");
    return *total;
}

}  // namespace

VertexId rank(const Vertex& v, const HammingParams& p) {
    require_valid(v, p, "rank");
    require_rankable(p, "rank");
    VertexId id = 0;
    for (std::size_t i = v.size(); i-- > 0;)
        id = id * static_cast<VertexId>(p.k()) + v.digits[i];
    return id;
}

Vertex unrank(VertexId id, const HammingParams& p) {
    const std::uint64_t total = require_rankable(p, "unrank");
    if (id >= total)
        throw std::invalid_argument("unrank: rank " + std::to_string(id) + " out of range [0, " +
                                    std::to_string(total) + ")");
    Vertex v;
    v.digits.resize(static_cast<std::size_t>(p.n()));
    const VertexId k = static_cast<VertexId>(p.k());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v.digits[i] = static_cast<Digit>(id % k);
        id /= k;
    }
    return v;
}

std::vector<Vertex> neighbors(const Vertex& v, const HammingParams& p) {
    require_valid(v, p, "neighbors");
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(p.n()) * (p.k() - 1));
    const Digit k = static_cast<Digit>(p.k());
    Vertex u = v;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Digit keep = v.digits[i];
        for (Digit d = 0; d < k; ++d) {
            if (d == keep)
                continue;
            u.digits[i] = d;
            out.push_back(u);
        }
        u.digits[i] = keep;
    }
    return out;
}

bool are_adjacent(const Vertex& u, const Vertex& v, const HammingParams& p) {
    require_valid(u, p, "are_adjacent");
    require_valid(v, p, "are_adjacent");
    int diff = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u.digits[i] != v.digits[i] && ++diff > 1)
            return false;
    }
    return diff == 1;
}

}  // namespace hamming
