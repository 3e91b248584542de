#ifndef FOURPATH_TESTS_ORACLES_HPP
#define FOURPATH_TESTS_ORACLES_HPP

// Slow reference implementations, kept deliberately independent of the
// library's algorithms so both sides can disagree.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "fourpath/graph.hpp"

namespace oracles {

using fourpath::Graph;
using fourpath::VertexSet;

inline int edge_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    int idx = 0;
    for (int a = 0; a < i; ++a) idx += n - a - 1;
    return idx + (j - i - 1);
}

inline Graph graph_from_mask(int n, uint32_t mask) {
    std::vector<std::pair<int, int>> edges;
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx)
            if (mask & (1u << idx)) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

inline uint32_t mask_from_graph(const Graph& g) {
    const int n = g.vertex_count();
    uint32_t mask = 0;
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx)
            if (g.adjacent(i, j)) mask |= 1u << idx;
    return mask;
}

// How one vertex permutation rearranges the edge bits.
inline std::vector<int> edge_permutation(int n, const std::vector<int>& perm) {
    const int m = n * (n - 1) / 2;
    std::vector<int> out(m);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out[edge_index(n, i, j)] = edge_index(n, perm[i], perm[j]);
    return out;
}

// Isomorphism-class count by closing the relabeling action with union-find;
// two generators reach the whole symmetric group.
inline uint64_t orbit_class_count(int n) {
    const int m = n * (n - 1) / 2;
    const uint32_t total = 1u << m;
    std::vector<int> swap01(n), rotate(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    if (n >= 2) std::swap(swap01[0], swap01[1]);
    for (int i = 0; i < n; ++i) rotate[i] = (i + 1) % n;
    const std::vector<std::vector<int>> gens = {edge_permutation(n, swap01),
                                               edge_permutation(n, rotate)};
    std::vector<uint32_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (uint32_t mask = 0; mask < total; ++mask) {
        for (const auto& ep : gens) {
            uint32_t image = 0;
            for (int b = 0; b < m; ++b)
                if (mask & (1u << b)) image |= 1u << ep[b];
            unite(mask, image);
        }
    }
    uint64_t classes = 0;
    for (uint32_t mask = 0; mask < total; ++mask)
        if (find(mask) == mask) ++classes;
    return classes;
}

// Burnside count: average the number of fixed graphs over all relabelings.
inline uint64_t burnside_class_count(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const int m = n * (n - 1) / 2;
    uint64_t total = 0, perms = 0;
    do {
        const std::vector<int> ep = edge_permutation(n, perm);
        std::vector<bool> seen(m, false);
        int cycles = 0;
        for (int b = 0; b < m; ++b) {
            if (seen[b]) continue;
            ++cycles;
            int x = b;
            while (!seen[x]) {
                seen[x] = true;
                x = ep[x];
            }
        }
        total += 1ull << cycles;
        ++perms;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / perms;
}

inline bool perm_is_isomorphism(const Graph& a, const Graph& b,
                                const std::vector<int>& perm) {
    const int n = a.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a.adjacent(i, j) != b.adjacent(perm[i], perm[j])) return false;
    return true;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    std::vector<int> perm(a.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (perm_is_isomorphism(a, b, perm)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace detail {

inline bool extend_injective(const Graph& host, const Graph& pat, std::vector<int>& map,
                             std::vector<bool>& used) {
    const int k = static_cast<int>(map.size());
    if (k == pat.vertex_count()) return true;
    for (int cand = 0; cand < host.vertex_count(); ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (int p = 0; p < k && ok; ++p)
            if (pat.adjacent(p, k) != host.adjacent(map[p], cand)) ok = false;
        if (!ok) continue;
        used[cand] = true;
        map.push_back(cand);
        if (extend_injective(host, pat, map, used)) return true;
        map.pop_back();
        used[cand] = false;
    }
    return false;
}

}  // namespace detail

inline bool naive_contains_induced(const Graph& host, const Graph& pat) {
    if (pat.vertex_count() > host.vertex_count()) return false;
    std::vector<int> map;
    std::vector<bool> used(host.vertex_count(), false);
    return detail::extend_injective(host, pat, map, used);
}

inline std::optional<VertexSet> brute_homogeneous_set(const Graph& g) {
    const int n = g.vertex_count();
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        VertexSet X(n);
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) X.add(v);
        if (X.count() <= 1 || X.count() >= n) continue;
        bool homogeneous = true;
        for (int v = 0; v < n && homogeneous; ++v) {
            if (X.contains(v)) continue;
            int seen_edges = 0, seen_nonedges = 0;
            for (int x : X.to_vector())
                (g.adjacent(v, x) ? seen_edges : seen_nonedges)++;
            if (seen_edges > 0 && seen_nonedges > 0) homogeneous = false;
        }
        if (homogeneous) return X;
    }
    return std::nullopt;
}

inline bool brute_split(const Graph& g) {
    const int n = g.vertex_count();
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool clique_ok = true, stable_ok = true;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const bool in_i = mask & (1u << i), in_j = mask & (1u << j);
                if (in_i && in_j && !g.adjacent(i, j)) clique_ok = false;
                if (!in_i && !in_j && g.adjacent(i, j)) stable_ok = false;
            }
        if (clique_ok && stable_ok) return true;
    }
    return false;
}

// Tries all A/B/C/D assignments directly from the definition.
inline bool brute_one_join(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(n, 0);
    const uint64_t total = 1ull << (2 * n);
    for (uint64_t code = 0; code < total; ++code) {
        int counts[4] = {0, 0, 0, 0};
        for (int v = 0; v < n; ++v) {
            side[v] = static_cast<int>((code >> (2 * v)) & 3);
            counts[side[v]]++;
        }
        if (!counts[0] || !counts[1] || !counts[2] || !counts[3]) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                const int a = std::min(side[i], side[j]), b = std::max(side[i], side[j]);
                const bool adj = g.adjacent(i, j);
                if (a == 0 && (b == 2 || b == 3) && adj) ok = false;  // A to C or D
                if (a == 1 && b == 2 && !adj) ok = false;             // B to C
                if (a == 1 && b == 3 && adj) ok = false;              // B to D
            }
        if (ok) return true;
    }
    return false;
}

inline bool brute_simplicial(const Graph& g, int v) {
    const auto nb = g.neighbors(v).to_vector();
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (!g.adjacent(nb[i], nb[j])) return false;
    return true;
}

inline bool brute_antisimplicial(const Graph& g, int v) {
    std::vector<int> non;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v && !g.adjacent(u, v)) non.push_back(u);
    for (size_t i = 0; i < non.size(); ++i)
        for (size_t j = i + 1; j < non.size(); ++j)
            if (g.adjacent(non[i], non[j])) return false;
    return true;
}

}  // namespace oracles

#endif
