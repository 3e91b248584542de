#ifndef FOURPATH_ISO_HPP
#define FOURPATH_ISO_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fourpath/errors.hpp"
#include "fourpath/graph.hpp"
#include "fourpath/graph6.hpp"

namespace fourpath {

constexpr int kDefaultIsoCap = 16;
constexpr int kDefaultCanonicalCap = 10;
constexpr int kCanonicalHardCap = 32;

// ---------------------------------------------------------------------------
// Color refinement (1-dimensional Weisfeiler-Leman). Colors are stable under
// isomorphism and their ids are canonical: they are ranks of sorted
// signatures, so two isomorphic graphs get identical color multisets.
// ---------------------------------------------------------------------------

namespace detail {

using Signature = std::vector<int>;  // [own color, sorted neighbor colors...]

inline std::vector<int> refine_step(const Graph& g, const std::vector<int>& colors) {
    int n = g.vertex_count();
    std::vector<Signature> sigs(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        Signature s;
        s.push_back(colors[static_cast<size_t>(v)]);
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            s.push_back(colors[static_cast<size_t>(u)]);
        std::sort(s.begin() + 1, s.end());
        sigs[static_cast<size_t>(v)] = std::move(s);
    }
    std::vector<Signature> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        out[static_cast<size_t>(v)] =
            static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[static_cast<size_t>(v)]) - sorted.begin());
    return out;
}

inline int color_count(const std::vector<int>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

}  // namespace detail

// Stable coloring of one graph, canonical ids.
inline std::vector<int> refine_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> colors(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) colors[static_cast<size_t>(v)] = g.degree(v);
    // normalize the initial degree coloring to rank ids
    {
        std::vector<int> degs = colors;
        std::sort(degs.begin(), degs.end());
        degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
        for (int v = 0; v < n; ++v)
            colors[static_cast<size_t>(v)] = static_cast<int>(
                std::lower_bound(degs.begin(), degs.end(), colors[static_cast<size_t>(v)]) - degs.begin());
    }
    int k = detail::color_count(colors);
    while (k < n) {
        std::vector<int> next = detail::refine_step(g, colors);
        int k2 = detail::color_count(next);
        if (k2 == k && next == colors) break;
        colors = std::move(next);
        if (k2 == k) break;  // same class count with renamed ids: stable
        k = k2;
    }
    return colors;
}

// ---------------------------------------------------------------------------
// Isomorphism by backtracking over color-refined classes. Independent of the
// canonical-form path below; the two cross-check each other in tests.
// ---------------------------------------------------------------------------

inline bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map) {
    int n = g.vertex_count();
    if (h.vertex_count() != n || static_cast<int>(map.size()) != n) return false;
    std::vector<char> hit(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        int w = map[static_cast<size_t>(v)];
        if (w < 0 || w >= n || hit[static_cast<size_t>(w)]) return false;
        hit[static_cast<size_t>(w)] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != h.adjacent(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)])) return false;
    return true;
}

namespace detail {

// Refines both graphs against one shared signature dictionary so the color
// ids are comparable across the two.
inline bool refine_pair(const Graph& g, const Graph& h, std::vector<int>& cg, std::vector<int>& ch) {
    int n = g.vertex_count();
    cg.assign(static_cast<size_t>(n), 0);
    ch.assign(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        cg[static_cast<size_t>(v)] = g.degree(v);
        ch[static_cast<size_t>(v)] = h.degree(v);
    }
    auto renumber = [&]() -> bool {
        std::vector<int> all = cg;
        all.insert(all.end(), ch.begin(), ch.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        auto rank = [&](int c) { return static_cast<int>(std::lower_bound(all.begin(), all.end(), c) - all.begin()); };
        std::vector<int> countg(all.size(), 0), counth(all.size(), 0);
        for (auto& c : cg) { c = rank(c); ++countg[static_cast<size_t>(c)]; }
        for (auto& c : ch) { c = rank(c); ++counth[static_cast<size_t>(c)]; }
        return countg == counth;  // class sizes must agree or the graphs differ
    };
    if (!renumber()) return false;
    for (int round = 0; round < n; ++round) {
        std::vector<Signature> sg(static_cast<size_t>(n)), sh(static_cast<size_t>(n));
        auto fill = [](const Graph& gr, const std::vector<int>& colors, std::vector<Signature>& out) {
            for (int v = 0; v < gr.vertex_count(); ++v) {
                Signature s{colors[static_cast<size_t>(v)]};
                for (int u = gr.neighbors(v).first(); u >= 0; u = gr.neighbors(v).next(u))
                    s.push_back(colors[static_cast<size_t>(u)]);
                std::sort(s.begin() + 1, s.end());
                out[static_cast<size_t>(v)] = std::move(s);
            }
        };
        fill(g, cg, sg);
        fill(h, ch, sh);
        std::vector<Signature> dict = sg;
        dict.insert(dict.end(), sh.begin(), sh.end());
        std::sort(dict.begin(), dict.end());
        dict.erase(std::unique(dict.begin(), dict.end()), dict.end());
        std::vector<int> ng(static_cast<size_t>(n)), nh(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            ng[static_cast<size_t>(v)] = static_cast<int>(
                std::lower_bound(dict.begin(), dict.end(), sg[static_cast<size_t>(v)]) - dict.begin());
            nh[static_cast<size_t>(v)] = static_cast<int>(
                std::lower_bound(dict.begin(), dict.end(), sh[static_cast<size_t>(v)]) - dict.begin());
        }
        bool stable = (ng == cg && nh == ch);
        cg = std::move(ng);
        ch = std::move(nh);
        std::vector<int> tallyg(dict.size(), 0), tallyh(dict.size(), 0);
        for (int c : cg) ++tallyg[static_cast<size_t>(c)];
        for (int c : ch) ++tallyh[static_cast<size_t>(c)];
        if (tallyg != tallyh) return false;
        if (stable) break;
    }
    return true;
}

}  // namespace detail

// A bijection g -> h preserving adjacency and non-adjacency, or nullopt.
inline std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h, int cap = kDefaultIsoCap) {
    int n = g.vertex_count();
    if (h.vertex_count() != n) return std::nullopt;
    if (n > cap)
        throw CapError("find_isomorphism: " + std::to_string(n) + " vertices exceeds the isomorphism cap " +
                       std::to_string(cap) + " (raise with --iso-cap)");
    if (g.edge_count() != h.edge_count()) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    std::vector<int> cg, ch;
    if (!detail::refine_pair(g, h, cg, ch)) return std::nullopt;

    // map smallest color classes first
    std::vector<int> class_size(static_cast<size_t>(detail::color_count(cg)), 0);
    for (int c : cg) ++class_size[static_cast<size_t>(c)];
    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = cg[static_cast<size_t>(a)], cb = cg[static_cast<size_t>(b)];
        if (class_size[static_cast<size_t>(ca)] != class_size[static_cast<size_t>(cb)])
            return class_size[static_cast<size_t>(ca)] < class_size[static_cast<size_t>(cb)];
        if (ca != cb) return ca < cb;
        return a < b;
    });

    std::vector<int> map(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        int v = order[static_cast<size_t>(depth)];
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<size_t>(w)] || ch[static_cast<size_t>(w)] != cg[static_cast<size_t>(v)]) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                int pv = order[static_cast<size_t>(d)];
                if (g.adjacent(v, pv) != h.adjacent(w, map[static_cast<size_t>(pv)])) ok = false;
            }
            if (!ok) continue;
            map[static_cast<size_t>(v)] = w;
            used[static_cast<size_t>(w)] = 1;
            if (self(self, depth + 1)) return true;
            used[static_cast<size_t>(w)] = 0;
            map[static_cast<size_t>(v)] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return map;
}

inline bool are_isomorphic(const Graph& g, const Graph& h, int cap = kDefaultIsoCap) {
    return find_isomorphism(g, h, cap).has_value();
}

// ---------------------------------------------------------------------------
// Canonical form: the lexicographically least adjacency bit string (graph6
// column order) over vertex orders that respect the stable coloring, found by
// backtracking that explores only minimal columns and skips twin branches.
// ---------------------------------------------------------------------------

namespace detail {

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> colors;
    std::vector<int> position_color;       // color required at each position
    std::vector<uint32_t> best_cols;       // column value per position 1..n-1
    std::vector<int> best_perm;            // position -> vertex
    bool have_best = false;
    uint64_t best_version = 0;
    std::vector<int> placed;
    std::vector<char> used;
    std::vector<uint32_t> cols;
    int forced_last = -1;                  // vertex forced into the final position, or -1

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    bool twin_rows(int a, int b) const {
        // N(a) \ {b} == N(b) \ {a}: swapping a and b is an automorphism
        VertexSet x = g.neighbors(a);
        VertexSet y = g.neighbors(b);
        VertexSet diff = (x - y) | (y - x);
        diff.remove(a);
        diff.remove(b);
        return diff.empty();
    }

    uint32_t column_of(int v, int depth) const {
        uint32_t bits = 0;
        for (int d = 0; d < depth; ++d)
            bits = (bits << 1) | (g.adjacent(placed[static_cast<size_t>(d)], v) ? 1u : 0u);
        return bits;
    }

    // cmp: 0 = prefix equals best so far, -1 = strictly below it
    void dfs(int depth, int cmp) {
        if (depth == n) {
            if (!have_best || cmp < 0) {
                best_cols = cols;
                best_perm = placed;
                have_best = true;
                ++best_version;
            }
            return;
        }
        int want = position_color[static_cast<size_t>(depth)];
        std::vector<int> cands;
        uint32_t best_col = 0;
        bool found = false;
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)] || colors[static_cast<size_t>(v)] != want) continue;
            if (forced_last >= 0 && v == forced_last && depth != n - 1) continue;
            uint32_t col = column_of(v, depth);
            if (!found || col < best_col) {
                best_col = col;
                cands.clear();
                cands.push_back(v);
                found = true;
            } else if (col == best_col) {
                cands.push_back(v);
            }
        }
        if (!found) return;  // forced_last constraint emptied the pool
        int next_cmp = cmp;
        if (cmp == 0 && have_best) {
            uint32_t b = best_cols[static_cast<size_t>(depth)];
            if (best_col > b) return;  // cannot beat the incumbent
            if (best_col < b) next_cmp = -1;
        }
        std::vector<int> tried;
        for (int v : cands) {
            bool skip = false;
            for (int t : tried)
                if (twin_rows(t, v)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            tried.push_back(v);
            placed.push_back(v);
            used[static_cast<size_t>(v)] = 1;
            cols.push_back(best_col);
            uint64_t seen = best_version;
            dfs(depth + 1, next_cmp);
            cols.pop_back();
            used[static_cast<size_t>(v)] = 0;
            placed.pop_back();
            // a best installed inside the subtree shares this prefix and column
            if (best_version != seen) next_cmp = 0;
        }
    }

    bool run(int forced = -1) {
        colors = refine_colors(g);
        forced_last = forced;
        // positions sorted by color id; class sizes are iso-invariant
        std::vector<int> by_color(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) by_color[static_cast<size_t>(v)] = colors[static_cast<size_t>(v)];
        std::sort(by_color.begin(), by_color.end());
        position_color = by_color;
        if (forced >= 0 && position_color[static_cast<size_t>(n - 1)] != colors[static_cast<size_t>(forced)])
            return false;  // forced vertex cannot sit in the final color block
        placed.clear();
        placed.reserve(static_cast<size_t>(n));
        used.assign(static_cast<size_t>(n), 0);
        cols.clear();
        cols.reserve(static_cast<size_t>(n));
        dfs(0, 0);
        return have_best;
    }
};

}  // namespace detail

// Position -> vertex order realizing the canonical form.
inline std::vector<int> canonical_labeling(const Graph& g, int cap = kDefaultCanonicalCap) {
    int n = g.vertex_count();
    if (n > cap || n > kCanonicalHardCap)
        throw CapError("canonical_labeling: " + std::to_string(n) + " vertices exceeds the canonical cap " +
                       std::to_string(std::min(cap, kCanonicalHardCap)));
    if (n == 0) return {};
    detail::CanonSearch s(g);
    s.run();
    return s.best_perm;
}

// Byte string identifying the isomorphism class: the graph6 line of the
// canonically relabeled graph. Printable and directly usable as output.
struct CanonicalForm {
    std::string bytes;
    bool operator==(const CanonicalForm& o) const { return bytes == o.bytes; }
    bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
};

inline CanonicalForm canonical_form(const Graph& g, int cap = kDefaultCanonicalCap) {
    std::vector<int> perm = canonical_labeling(g, cap);
    int n = g.vertex_count();
    std::vector<int> pos(static_cast<size_t>(n));  // vertex -> position
    for (int p = 0; p < n; ++p) pos[static_cast<size_t>(perm[static_cast<size_t>(p)])] = p;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(pos[static_cast<size_t>(u)], pos[static_cast<size_t>(v)]);
    return CanonicalForm{to_graph6(Graph::from_edges(n, edges))};
}

// Packed canonical code for n <= 11: column values concatenated into a
// uint64. The enumeration layer keys its dedup stores with these.
inline uint64_t canonical_code_u64(const Graph& g) {
    int n = g.vertex_count();
    if (n > 11) throw CapError("canonical_code_u64: needs n <= 11");
    if (n <= 1) return 0;
    detail::CanonSearch s(g);
    s.run();
    uint64_t code = 0;
    for (int j = 1; j < n; ++j) code = (code << j) | s.best_cols[static_cast<size_t>(j)];
    return code;
}

// Least code over canonical orders that place `last` in the final position;
// nullopt when no such order exists. Equality with canonical_code_u64 says
// `last` lies in the canonical deletion orbit.
inline std::optional<uint64_t> canonical_code_u64_with_last(const Graph& g, int last) {
    int n = g.vertex_count();
    if (n > 11) throw CapError("canonical_code_u64_with_last: needs n <= 11");
    if (n <= 1) return 0;
    detail::CanonSearch s(g);
    if (!s.run(last)) return std::nullopt;
    uint64_t code = 0;
    for (int j = 1; j < n; ++j) code = (code << j) | s.best_cols[static_cast<size_t>(j)];
    return code;
}

// Inverse of canonical_code_u64 given the vertex count.
inline Graph graph_from_code_u64(int n, uint64_t code) {
    std::vector<std::pair<int, int>> edges;
    int shift = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> --shift) & 1) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

}  // namespace fourpath

#endif
