#include "hamming/brute_force.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hamming {

namespace {

constexpr std::uint64_t kAdjacencyGuard = 4096;  // adjacency table materialization cap

std::vector<std::vector<std::uint32_t>> adjacency(const HammingParams& p) {
    if (!p.enumerable(kAdjacencyGuard))
        throw EnumerationLimitError("subset search: k^n = " + p.vertex_count().get_str() +
                                    " exceeds adjacency cap " +
                                    std::to_string(kAdjacencyGuard));
    const std::uint64_t total = *p.vertex_count_u64();
    std::vector<std::vector<std::uint32_t>> adj(total);
    for_each_vertex(p, 0, total, [&](VertexId id, const Vertex& v) {
        auto& row = adj[id];
        for (const Vertex& u : neighbors(v, p)) row.push_back(static_cast<std::uint32_t>(rank(u, p)));
    });
    return adj;
}

}  // namespace

SearchResult min_maxdeg_subset(const HammingParams& p, std::uint64_t size, std::uint64_t budget,
                               bool translate_through_origin) {
    const auto adj = adjacency(p);
    const std::uint64_t total = adj.size();
    if (size < 1 || size > total)
        throw std::invalid_argument("min_maxdeg_subset: size must be in [1, k^n]");

    const int trivial_bound = p.n() * (p.k() - 1);  // the graph is regular of this degree

    std::vector<char> in_set(total, 0);
    std::vector<int> committed(total, 0);
    std::vector<std::uint32_t> chosen, best;
    chosen.reserve(size);
    int incumbent = trivial_bound + 1;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    // Depth-first over ascending-rank subsets. committed[] holds, for chosen
    // vertices, the number of chosen neighbors; cur_max is their maximum and
    // never decreases along a branch, so cur_max >= incumbent prunes.
    auto dfs = [&](auto&& self, std::uint32_t next, int cur_max) -> void {
        if (++nodes > budget) {
            budget_hit = true;
            return;
        }
        if (chosen.size() == size) {
            incumbent = cur_max;
            best = chosen;
            return;
        }
        const std::uint64_t need = size - chosen.size();
        for (std::uint64_t v64 = next; v64 + need <= total; ++v64) {
            const auto v = static_cast<std::uint32_t>(v64);
            int dv = 0;
            int new_max = cur_max;
            for (std::uint32_t u : adj[v])
                if (in_set[u]) {
                    ++dv;
                    new_max = std::max(new_max, committed[u] + 1);
                }
            new_max = std::max(new_max, dv);
            if (new_max >= incumbent) continue;  // cannot improve on this branch

            in_set[v] = 1;
            committed[v] = dv;
            for (std::uint32_t u : adj[v])
                if (in_set[u] && u != v) ++committed[u];
            chosen.push_back(v);

            self(self, v + 1, new_max);

            chosen.pop_back();
            for (std::uint32_t u : adj[v])
                if (in_set[u] && u != v) --committed[u];
            in_set[v] = 0;
            if (budget_hit || incumbent == 0) return;
        }
    };

    if (translate_through_origin) {
        // every subset translates to one containing rank 0
        in_set[0] = 1;
        committed[0] = 0;
        chosen.push_back(0);
        dfs(dfs, 1, 0);
    } else {
        dfs(dfs, 0, 0);
    }

    SearchResult result;
    result.nodes_explored = nodes;
    result.exhausted = !budget_hit;
    if (best.empty() && incumbent > trivial_bound) {
        result.value = trivial_bound;  // nothing completed; fall back to the regular-degree bound
    } else {
        result.value = incumbent;
        result.witness_subset.assign(best.begin(), best.end());
    }
    return result;
}

SearchResult exact_f(const HammingParams& p, std::uint64_t budget, std::uint64_t guard) {
    if (!p.enumerable(guard))
        throw EnumerationLimitError("exact_f: k^n = " + p.vertex_count().get_str() +
                                    " exceeds guard " + std::to_string(guard));
    const auto alpha_plus_one = to_u64(p.alpha() + 1);
    return min_maxdeg_subset(p, *alpha_plus_one, budget);
}

int exact_alpha(const HammingParams& p, std::uint64_t budget, std::uint64_t guard) {
    if (!p.enumerable(guard))
        throw EnumerationLimitError("exact_alpha: k^n = " + p.vertex_count().get_str() +
                                    " exceeds guard " + std::to_string(guard));
    const auto adj = adjacency(p);
    const auto total = static_cast<std::uint32_t>(adj.size());

    // Greedy independent set in rank order: a lower bound to prune against.
    std::vector<char> blocked(total, 0);
    int best = 0;
    for (std::uint32_t v = 0; v < total; ++v) {
        if (blocked[v]) continue;
        ++best;
        for (std::uint32_t u : adj[v]) blocked[u] = 1;
    }

    std::vector<char> in_set(total, 0);
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    auto dfs = [&](auto&& self, std::uint32_t v, int count) -> void {
        if (++nodes > budget) {
            budget_hit = true;
            return;
        }
        if (count + static_cast<int>(total - v) <= best) return;  // cannot beat best
        if (v == total) {
            best = std::max(best, count);
            return;
        }
        bool conflict = false;
        for (std::uint32_t u : adj[v])
            if (in_set[u]) {
                conflict = true;
                break;
            }
        if (!conflict) {
            in_set[v] = 1;
            self(self, v + 1, count + 1);
            in_set[v] = 0;
            if (budget_hit) return;
        }
        self(self, v + 1, count);
    };
    dfs(dfs, 0, 0);
    if (budget_hit)
        throw std::runtime_error("exact_alpha: node budget exhausted before the search completed");
    return best;
}

}  // namespace hamming
