#ifndef FOURPATH_GRAPH_HPP
#define FOURPATH_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fourpath/bitset.hpp"
#include "fourpath/errors.hpp"

namespace fourpath {

// Immutable finite simple graph. Vertices are 0..n-1; adjacency is one
// VertexSet per vertex. Every factory runs the symmetry/irreflexivity
// validation pass, so a constructed Graph is always a legal value.
// Safe to share read-only across threads; all operations below are pure.
class Graph {
public:
    Graph() = default;  // the empty graph

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0 || n > VertexSet::kMaxVertices)
            throw std::invalid_argument("Graph: vertex count " + std::to_string(n) + " outside [0, " +
                                        std::to_string(VertexSet::kMaxVertices) + "]");
        std::vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(n));
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("Graph: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                            ") has an endpoint outside 0.." + std::to_string(n - 1));
            if (u == v)
                throw std::invalid_argument("Graph: self-loop (" + std::to_string(u) + ", " + std::to_string(v) + ")");
            rows[static_cast<size_t>(u)].add(v);
            rows[static_cast<size_t>(v)].add(u);
        }
        return Graph(n, std::move(rows));
    }

    // Adjacency rows as produced by an algorithm; validated like any input.
    static Graph from_rows(int n, std::vector<VertexSet> rows) { return Graph(n, std::move(rows)); }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return row(u).contains(v); }

    const VertexSet& neighbors(int v) const { return row(v); }

    // Non-neighbors of v, excluding v itself.
    VertexSet non_neighbors(int v) const {
        VertexSet s = ~row(v);
        s.remove(v);
        return s;
    }

    int degree(int v) const { return row(v).count(); }

    VertexSet all_vertices() const { return VertexSet::full(n_); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v = row(u).next(u); v >= 0; v = row(u).next(v)) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    // Re-checks the structural invariants. Factories already enforce them;
    // tests call this after every construction path.
    void validate() const {
        for (int u = 0; u < n_; ++u) {
            if (row(u).universe() != n_) throw Error("Graph: adjacency row with wrong universe");
            if (row(u).contains(u)) throw Error("Graph: self-loop at " + std::to_string(u));
            for (int v = row(u).first(); v >= 0; v = row(u).next(v))
                if (!row(v).contains(u)) throw Error("Graph: asymmetric adjacency " + std::to_string(u) + "->" + std::to_string(v));
        }
    }

private:
    Graph(int n, std::vector<VertexSet> rows) : n_(n), adj_(std::move(rows)) {
        if (static_cast<int>(adj_.size()) != n) throw Error("Graph: row count != n");
        validate();
        for (int v = 0; v < n_; ++v) m_ += row(v).count();
        m_ /= 2;
    }

    const VertexSet& row(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
        return adj_[static_cast<size_t>(v)];
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::from_edges(n, edges);
}

inline Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> rows;
    rows.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        VertexSet r = ~g.neighbors(v);
        r.remove(v);
        rows.push_back(r);
    }
    return Graph::from_rows(n, std::move(rows));
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // new index -> original vertex
};

// G[S]; the map lists S in increasing order.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("induced_subgraph: set universe does not match the graph");
    std::vector<int> map = s.to_vector();
    int k = static_cast<int>(map.size());
    std::vector<VertexSet> rows(static_cast<size_t>(k), VertexSet(k));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(map[static_cast<size_t>(i)], map[static_cast<size_t>(j)])) {
                rows[static_cast<size_t>(i)].add(j);
                rows[static_cast<size_t>(j)].add(i);
            }
    return InducedSubgraph{Graph::from_rows(k, std::move(rows)), std::move(map)};
}

inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& members) {
    VertexSet s(g.vertex_count());
    for (int v : members) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        s.add(v);
    }
    return induced_subgraph(g, s);
}

inline bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("is_connected: undefined for the empty graph");
    VertexSet reached = VertexSet::of(n, {0});
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next(n);
        for (int v = frontier.first(); v >= 0; v = frontier.next(v)) next |= g.neighbors(v);
        frontier = next - reached;
        reached |= frontier;
    }
    return reached.count() == n;
}

inline bool is_anticonnected(const Graph& g) { return is_connected(complement(g)); }

// Components of G[within], as vertex sets of G.
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> out;
    VertexSet todo = within;
    while (!todo.empty()) {
        VertexSet comp(g.vertex_count());
        VertexSet frontier = VertexSet::of(g.vertex_count(), {todo.first()});
        comp |= frontier;
        while (!frontier.empty()) {
            VertexSet next(g.vertex_count());
            for (int v = frontier.first(); v >= 0; v = frontier.next(v)) next |= g.neighbors(v) & within;
            frontier = next - comp;
            comp |= frontier;
        }
        out.push_back(comp);
        todo -= comp;
    }
    return out;
}

inline std::vector<VertexSet> anticomponents_within(const Graph& g, const VertexSet& within) {
    return components_within(complement(g), within);
}

// Substitution: replace vertex v of h1 by the whole of h2, joining V(h2) to
// the old neighbors of v. Result vertex order: V(h1) \ {v} first (original
// order, reindexed), then V(h2).
inline Graph substitute(const Graph& h1, int v, const Graph& h2) {
    int n1 = h1.vertex_count(), n2 = h2.vertex_count();
    if (n1 < 2 || n2 < 2) throw std::invalid_argument("substitute: both graphs need at least two vertices");
    if (v < 0 || v >= n1) throw std::invalid_argument("substitute: vertex out of range");
    int n = n1 - 1 + n2;
    std::vector<int> pos(static_cast<size_t>(n1), -1);  // h1 vertex -> result index
    int idx = 0;
    for (int u = 0; u < n1; ++u)
        if (u != v) pos[static_cast<size_t>(u)] = idx++;
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : h1.edges())
        if (a != v && b != v) es.emplace_back(pos[static_cast<size_t>(a)], pos[static_cast<size_t>(b)]);
    for (auto [a, b] : h2.edges()) es.emplace_back(n1 - 1 + a, n1 - 1 + b);
    for (int u = h1.neighbors(v).first(); u >= 0; u = h1.neighbors(v).next(u))
        for (int w = 0; w < n2; ++w) es.emplace_back(pos[static_cast<size_t>(u)], n1 - 1 + w);
    return Graph::from_edges(n, es);
}

}  // namespace fourpath

#endif
