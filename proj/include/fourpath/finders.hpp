#ifndef FOURPATH_FINDERS_HPP
#define FOURPATH_FINDERS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fourpath/catalog.hpp"
#include "fourpath/errors.hpp"
#include "fourpath/graph.hpp"
#include "fourpath/patterns.hpp"
#include "fourpath/recognizers.hpp"

namespace fourpath {

// non-neighbor u of a minimizing |N(a) n N(u)|, ties to the lowest index
inline int find_simplicial_from_antisimplicial(const Graph& g, int a) {
    if (!is_prime(g))
        throw PreconditionError("find_simplicial_from_antisimplicial: G must be prime");
    if (!is_free_of(g, {make_p5().graph, make_p5c().graph}))
        throw PreconditionError(
            "find_simplicial_from_antisimplicial: G must be {P5,coP5}-free");
    if (!is_antisimplicial(g, a))
        throw PreconditionError("find_simplicial_from_antisimplicial: a must be antisimplicial");
    const int n = g.vertex_count();
    int best = -1;
    size_t best_size = 0;
    for (int u = 0; u < n; ++u) {
        if (u == a || g.adjacent(a, u)) continue;
        const size_t size = (g.neighbors(a) & g.neighbors(u)).count();
        if (best < 0 || size < best_size) {
            best = u;
            best_size = size;
        }
    }
    if (best < 0)
        throw PreconditionError("find_simplicial_from_antisimplicial: a must have a non-neighbor");
    if (!is_simplicial(g, best))
        throw TheoremViolation("minimizing non-neighbor " + std::to_string(best) +
                               " of antisimplicial vertex " + std::to_string(a) +
                               " is not simplicial");
    return best;
}

// neighbor u of s maximizing |N(u) u N(s)|, ties to the lowest index
inline int find_antisimplicial_from_simplicial(const Graph& g, int s) {
    if (!is_prime(g))
        throw PreconditionError("find_antisimplicial_from_simplicial: G must be prime");
    if (!is_free_of(g, {make_p5().graph, make_p5c().graph}))
        throw PreconditionError(
            "find_antisimplicial_from_simplicial: G must be {P5,coP5}-free");
    if (!is_simplicial(g, s))
        throw PreconditionError("find_antisimplicial_from_simplicial: s must be simplicial");
    int best = -1;
    size_t best_size = 0;
    const VertexSet nbrs = g.neighbors(s);
    for (int u = nbrs.first(); u >= 0; u = nbrs.next(u)) {
        const size_t size = (g.neighbors(u) | g.neighbors(s)).count();
        if (best < 0 || size > best_size) {
            best = u;
            best_size = size;
        }
    }
    if (best < 0)
        throw PreconditionError("find_antisimplicial_from_simplicial: s must have a neighbor");
    if (!is_antisimplicial(g, best))
        throw TheoremViolation("maximizing neighbor " + std::to_string(best) +
                               " of simplicial vertex " + std::to_string(s) +
                               " is not antisimplicial");
    return best;
}

// first induced copy of H and outside vertex whose union induces a prime subgraph
inline std::optional<std::pair<Embedding, int>> grow_prime_subgraph(const Graph& g,
                                                                   const Graph& h) {
    if (!is_prime(g)) throw PreconditionError("grow_prime_subgraph: G must be prime");
    if (!is_prime(h)) throw PreconditionError("grow_prime_subgraph: H must be prime");
    if (h.vertex_count() >= g.vertex_count() || !contains_induced(g, h))
        throw PreconditionError(
            "grow_prime_subgraph: H must be a proper induced subgraph of G");
    if (is_half_graph(g))
        throw PreconditionError("grow_prime_subgraph: G must not be a half graph");
    if (is_half_graph(complement(g)))
        throw PreconditionError("grow_prime_subgraph: complement(G) must not be a half graph");
    const int n = g.vertex_count();
    for (const Embedding& e : enumerate_induced(g, h)) {
        VertexSet image(n);
        for (int v : e.map) image.add(v);
        for (int v = 0; v < n; ++v) {
            if (image.contains(v)) continue;
            VertexSet extended = image;
            extended.add(v);
            if (is_prime(induced_subgraph(g, extended).graph))
                return std::make_pair(e, v);
        }
    }
    throw TheoremViolation(
        "no induced copy of the subgraph extends to a prime subgraph by one vertex");
}

struct ExtensionCase {
    VertexSet attachment;  // neighbors of the new vertex inside H
    bool prime = false;
    bool has_p5 = false;
    bool has_p5c = false;
    bool has_c5 = false;
    bool has_bull = false;
};

// all 2^|V(H)| one-vertex extensions of H in attachment-mask order
inline std::vector<ExtensionCase> one_vertex_extensions_of(const NamedGraph& h) {
    if (h.id != "c5" && h.id != "p4")
        throw std::invalid_argument("one_vertex_extensions_of: supported inputs are c5 and p4");
    const Graph p5 = make_p5().graph, p5c = make_p5c().graph, c5 = make_c5().graph,
                bull = make_bull().graph;
    const int n = h.graph.vertex_count();
    std::vector<ExtensionCase> out;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : h.graph.edges()) edges.emplace_back(u, v);
        ExtensionCase row;
        row.attachment = VertexSet(n);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) {
                row.attachment.add(i);
                edges.emplace_back(i, n);
            }
        const Graph ext = Graph::from_edges(n + 1, edges);
        row.prime = is_prime(ext);
        row.has_p5 = contains_induced(ext, p5);
        row.has_p5c = contains_induced(ext, p5c);
        row.has_c5 = contains_induced(ext, c5);
        row.has_bull = contains_induced(ext, bull);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace fourpath

#endif
