#ifndef FOURPATH_ENUMERATE_HPP
#define FOURPATH_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fourpath/errors.hpp"
#include "fourpath/graph.hpp"
#include "fourpath/iso.hpp"
#include "fourpath/patterns.hpp"

namespace fourpath {

inline constexpr int kEnumerationDefaultCap = 9;
inline constexpr int kEnumerationHardCap = 10;

namespace detail {

inline Graph child_of(const Graph& parent, uint32_t mask) {
    const int n = parent.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : parent.edges()) edges.emplace_back(u, v);
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) edges.emplace_back(i, n);
    return Graph::from_edges(n + 1, edges);
}

inline bool passes_filter(const Graph& g, const std::vector<Graph>& patterns) {
    return patterns.empty() || is_free_of(g, patterns);
}

// children of one isomorphism-class level, deduplicated and sorted
inline std::vector<uint64_t> augment_level(const std::vector<uint64_t>& parents, int parent_n,
                                           const std::vector<Graph>& patterns) {
    std::unordered_set<uint64_t> dedup;
    for (uint64_t code : parents) {
        const Graph parent = graph_from_code_u64(parent_n, code);
        for (uint32_t mask = 0; mask < (1u << parent_n); ++mask) {
            const Graph child = child_of(parent, mask);
            if (!passes_filter(child, patterns)) continue;
            dedup.insert(canonical_code_u64(child));
        }
    }
    std::vector<uint64_t> out(dedup.begin(), dedup.end());
    std::sort(out.begin(), out.end());
    return out;
}

// accept a child exactly when the added vertex can sit last in a canonical
// labeling; each class is then produced by exactly one (parent, mask) pair
inline void stream_top_level(const std::vector<uint64_t>& parents, int parent_n,
                             const std::vector<Graph>& patterns,
                             const std::function<void(uint64_t)>& emit) {
    std::vector<uint64_t> accepted;
    for (uint64_t code : parents) {
        const Graph parent = graph_from_code_u64(parent_n, code);
        for (uint32_t mask = 0; mask < (1u << parent_n); ++mask) {
            const Graph child = child_of(parent, mask);
            if (!passes_filter(child, patterns)) continue;
            const auto forced = canonical_code_u64_with_last(child, parent_n);
            if (!forced) continue;
            if (*forced == canonical_code_u64(child)) accepted.push_back(*forced);
        }
    }
    std::sort(accepted.begin(), accepted.end());
    for (uint64_t code : accepted) emit(code);
}

}  // namespace detail

// canonical codes of every isomorphism class on n vertices, ascending; when
// patterns are given, levels are pruned so only pattern-free classes survive
inline std::vector<uint64_t> enumerate_class_codes(int n,
                                                   const std::vector<Graph>& patterns = {}) {
    if (n < 1) throw std::invalid_argument("enumerate_class_codes: n must be at least 1");
    if (n > kEnumerationHardCap)
        throw CapError("enumeration cap is " + std::to_string(kEnumerationHardCap) +
                       " vertices");
    std::vector<uint64_t> level = {0};
    const int dedup_top = std::min(n, kEnumerationHardCap - 1);
    for (int k = 1; k < dedup_top; ++k) level = detail::augment_level(level, k, patterns);
    if (n < kEnumerationHardCap) return level;
    std::vector<uint64_t> out;
    detail::stream_top_level(level, kEnumerationHardCap - 1, patterns,
                             [&](uint64_t code) { out.push_back(code); });
    return out;
}

inline void for_each_class(int n, const std::vector<Graph>& patterns,
                           const std::function<void(const Graph&)>& fn) {
    if (n < kEnumerationHardCap) {
        for (uint64_t code : enumerate_class_codes(n, patterns))
            fn(graph_from_code_u64(n, code));
        return;
    }
    const auto parents = enumerate_class_codes(kEnumerationHardCap - 1, patterns);
    detail::stream_top_level(parents, kEnumerationHardCap - 1, patterns, [&](uint64_t code) {
        fn(graph_from_code_u64(kEnumerationHardCap, code));
    });
}

inline std::vector<Graph> filter_free(const std::vector<Graph>& in,
                                      const std::vector<Graph>& patterns) {
    std::vector<Graph> out;
    for (const Graph& g : in)
        if (detail::passes_filter(g, patterns)) out.push_back(g);
    return out;
}

// Erdos-Renyi sample: pairs (i,j), i < j, in lexicographic order; one 53-bit
// uniform draw per pair from mt19937_64 seeded with `seed`
inline Graph random_graph(int n, double p, uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_graph: n must be non-negative");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("random_graph: p must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double u =
                static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
            if (u < p) edges.emplace_back(i, j);
        }
    return Graph::from_edges(n, edges);
}

}  // namespace fourpath

#endif
