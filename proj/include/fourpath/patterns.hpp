#ifndef FOURPATH_PATTERNS_HPP
#define FOURPATH_PATTERNS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fourpath/errors.hpp"
#include "fourpath/graph.hpp"

namespace fourpath {

constexpr int kPatternCap = 8;

// Injective map pattern vertex -> host vertex witnessing an induced copy.
struct Embedding {
    std::vector<int> map;

    std::vector<int> image_sorted() const {
        std::vector<int> s = map;
        std::sort(s.begin(), s.end());
        return s;
    }
};

inline bool embedding_valid(const Graph& host, const Graph& pattern, const Embedding& e) {
    int k = pattern.vertex_count();
    if (static_cast<int>(e.map.size()) != k) return false;
    std::vector<int> seen;
    for (int x : e.map) {
        if (x < 0 || x >= host.vertex_count()) return false;
        seen.push_back(x);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (pattern.adjacent(a, b) !=
                host.adjacent(e.map[static_cast<size_t>(a)], e.map[static_cast<size_t>(b)]))
                return false;
    return true;
}

namespace detail {

inline void require_pattern_cap(const Graph& pattern, const char* who) {
    if (pattern.vertex_count() < 1)
        throw std::invalid_argument(std::string(who) + ": pattern needs at least one vertex");
    if (pattern.vertex_count() > kPatternCap)
        throw CapError(std::string(who) + ": pattern has " + std::to_string(pattern.vertex_count()) +
                       " vertices, cap is " + std::to_string(kPatternCap));
}

// Connectivity-first static order: each next vertex has as many already
// ordered neighbors as possible, so adjacency constraints bind early.
inline std::vector<int> pattern_order(const Graph& p) {
    int k = p.vertex_count();
    std::vector<int> order;
    std::vector<char> placed(static_cast<size_t>(k), 0);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_link = -1, best_deg = -1;
        for (int v = 0; v < k; ++v) {
            if (placed[static_cast<size_t>(v)]) continue;
            int link = 0;
            for (int u : order)
                if (p.adjacent(u, v)) ++link;
            if (link > best_link || (link == best_link && p.degree(v) > best_deg)) {
                best = v;
                best_link = link;
                best_deg = p.degree(v);
            }
        }
        order.push_back(best);
        placed[static_cast<size_t>(best)] = 1;
    }
    return order;
}

inline bool extend(const Graph& host, const Graph& pattern, const std::vector<int>& order, size_t depth,
                   std::vector<int>& map, VertexSet& used) {
    if (depth == order.size()) return true;
    int pv = order[depth];
    VertexSet cand = host.all_vertices() - used;
    for (size_t d = 0; d < depth; ++d) {
        int pu = order[d];
        int hu = map[static_cast<size_t>(pu)];
        if (pattern.adjacent(pu, pv))
            cand &= host.neighbors(hu);
        else
            cand -= host.neighbors(hu);
    }
    for (int w = cand.first(); w >= 0; w = cand.next(w)) {
        if (host.degree(w) < pattern.degree(pv)) continue;
        map[static_cast<size_t>(pv)] = w;
        used.add(w);
        if (extend(host, pattern, order, depth + 1, map, used)) return true;
        used.remove(w);
        map[static_cast<size_t>(pv)] = -1;
    }
    return false;
}

// Lexicographically least embedding of the whole pattern onto exactly the
// vertices of `subset`, or absent.
inline std::optional<Embedding> least_embedding_onto(const Graph& host, const Graph& pattern,
                                                     const std::vector<int>& subset) {
    int k = pattern.vertex_count();
    std::vector<int> map(static_cast<size_t>(k), -1);
    std::vector<char> used(subset.size(), 0);
    auto rec = [&](auto&& self, int pv) -> bool {
        if (pv == k) return true;
        for (size_t i = 0; i < subset.size(); ++i) {
            if (used[i]) continue;
            int w = subset[i];
            bool ok = true;
            for (int pu = 0; pu < pv && ok; ++pu)
                if (pattern.adjacent(pu, pv) != host.adjacent(map[static_cast<size_t>(pu)], w)) ok = false;
            if (!ok) continue;
            map[static_cast<size_t>(pv)] = w;
            used[i] = 1;
            if (self(self, pv + 1)) return true;
            used[i] = 0;
            map[static_cast<size_t>(pv)] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return Embedding{map};
}

template <typename F>
inline void for_each_subset(int n, int k, F&& visit) {
    if (k > n || k <= 0) return;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        if (!visit(idx)) return;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace detail

// Any induced copy of pattern in host, found by pruned backtracking.
inline std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    detail::require_pattern_cap(pattern, "find_induced");
    int k = pattern.vertex_count();
    if (k > host.vertex_count()) return std::nullopt;
    std::vector<int> order = detail::pattern_order(pattern);
    std::vector<int> map(static_cast<size_t>(k), -1);
    VertexSet used(host.vertex_count());
    if (!detail::extend(host, pattern, order, 0, map, used)) return std::nullopt;
    return Embedding{map};
}

inline bool contains_induced(const Graph& host, const Graph& pattern) {
    return find_induced(host, pattern).has_value();
}

// Every induced copy exactly once up to pattern automorphism: one embedding
// per image set, the lexicographically least map, ordered by image set.
inline std::vector<Embedding> enumerate_induced(const Graph& host, const Graph& pattern) {
    detail::require_pattern_cap(pattern, "enumerate_induced");
    std::vector<Embedding> out;
    int k = pattern.vertex_count();
    detail::for_each_subset(host.vertex_count(), k, [&](const std::vector<int>& subset) {
        if (auto e = detail::least_embedding_onto(host, pattern, subset)) out.push_back(*e);
        return true;
    });
    return out;
}

struct FreeCheck {
    bool free = true;
    int pattern_index = -1;
    std::optional<Embedding> witness;
};

// Host is free of every listed pattern; otherwise the witness is the first
// pattern in list order with the lexicographically first image set.
inline FreeCheck is_free(const Graph& host, const std::vector<Graph>& patterns) {
    for (size_t pi = 0; pi < patterns.size(); ++pi) {
        const Graph& p = patterns[pi];
        detail::require_pattern_cap(p, "is_free");
        if (!contains_induced(host, p)) continue;
        FreeCheck res;
        res.free = false;
        res.pattern_index = static_cast<int>(pi);
        detail::for_each_subset(host.vertex_count(), p.vertex_count(), [&](const std::vector<int>& subset) {
            if (auto e = detail::least_embedding_onto(host, p, subset)) {
                res.witness = *e;
                return false;
            }
            return true;
        });
        return res;
    }
    return FreeCheck{};
}

inline bool is_free_of(const Graph& host, const std::vector<Graph>& patterns) {
    for (const Graph& p : patterns)
        if (contains_induced(host, p)) return false;
    return true;
}

}  // namespace fourpath

#endif
