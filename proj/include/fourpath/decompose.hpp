#ifndef FOURPATH_DECOMPOSE_HPP
#define FOURPATH_DECOMPOSE_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fourpath/catalog.hpp"
#include "fourpath/errors.hpp"
#include "fourpath/graph.hpp"
#include "fourpath/iso.hpp"
#include "fourpath/patterns.hpp"
#include "fourpath/recognizers.hpp"

namespace fourpath {

enum class LeafKind { small, c5, halfgraph, co_halfgraph };

struct DecompositionNode {
    enum class Kind { leaf, substitution };
    Kind kind = Kind::leaf;
    LeafKind leaf_kind = LeafKind::small;
    std::vector<int> vertices;  // original-graph vertices spanned, ascending
    Graph graph;                // induced graph on `vertices` in that order

    // substitution: quotient contracts the extracted set to its minimum member
    std::unique_ptr<DecompositionNode> quotient;
    std::unique_ptr<DecompositionNode> expansion;
    int contracted_rep = -1;
};

using DecompositionTree = std::unique_ptr<DecompositionNode>;

inline std::string leaf_kind_name(LeafKind k) {
    switch (k) {
        case LeafKind::small: return "small";
        case LeafKind::c5: return "c5";
        case LeafKind::halfgraph: return "halfgraph";
        case LeafKind::co_halfgraph: return "co-halfgraph";
    }
    return "unknown";
}

namespace detail {

inline DecompositionTree decompose_rec(const Graph& g, std::vector<int> orig) {
    auto node = std::make_unique<DecompositionNode>();
    node->vertices = orig;
    node->graph = g;
    const int n = g.vertex_count();
    if (n <= 2) {
        node->leaf_kind = LeafKind::small;
        return node;
    }
    if (n == 5 && are_isomorphic(g, make_c5().graph)) {
        node->leaf_kind = LeafKind::c5;
        return node;
    }
    if (is_half_graph(g)) {
        node->leaf_kind = LeafKind::halfgraph;
        return node;
    }
    if (is_half_graph(complement(g))) {
        node->leaf_kind = LeafKind::co_halfgraph;
        return node;
    }
    const auto hs = find_homogeneous_set(g);
    if (!hs)
        throw TheoremViolation(
            "graph with more than two vertices is not C5, not a half graph on either side, "
            "and has no homogeneous set");
    node->kind = DecompositionNode::Kind::substitution;
    const std::vector<int> members = hs->X.to_vector();  // local indices, ascending
    const int rep_local = members.front();
    node->contracted_rep = orig[static_cast<size_t>(rep_local)];

    // quotient keeps everything outside X plus the representative
    std::vector<int> q_local;
    for (int v = 0; v < n; ++v)
        if (!hs->X.contains(v) || v == rep_local) q_local.push_back(v);
    std::vector<std::pair<int, int>> q_edges;
    for (size_t i = 0; i < q_local.size(); ++i)
        for (size_t j = i + 1; j < q_local.size(); ++j)
            if (g.adjacent(q_local[i], q_local[j]))
                q_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    Graph q_graph = Graph::from_edges(static_cast<int>(q_local.size()), q_edges);
    std::vector<int> q_orig;
    for (int v : q_local) q_orig.push_back(orig[static_cast<size_t>(v)]);

    std::vector<std::pair<int, int>> x_edges;
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (g.adjacent(members[i], members[j]))
                x_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    Graph x_graph = Graph::from_edges(static_cast<int>(members.size()), x_edges);
    std::vector<int> x_orig;
    for (int v : members) x_orig.push_back(orig[static_cast<size_t>(v)]);

    node->quotient = decompose_rec(q_graph, std::move(q_orig));
    node->expansion = decompose_rec(x_graph, std::move(x_orig));
    return node;
}

}  // namespace detail

// structural decomposition witnessing the {P5,coP5,bull}-free structure theorem
inline DecompositionTree decompose_bullfree(const Graph& g) {
    if (!is_free_of(g, {make_p5().graph, make_p5c().graph, make_bull().graph}))
        throw ClassError("decompose_bullfree: input is not {P5,coP5,bull}-free");
    std::vector<int> orig(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) orig[static_cast<size_t>(v)] = v;
    return detail::decompose_rec(g, std::move(orig));
}

// bottom-up recomposition with full re-validation of every node
inline Graph verify_decomposition(const DecompositionNode& node) {
    if (node.vertices.empty()) throw Error("verify_decomposition: node spans no vertices");
    if (!std::is_sorted(node.vertices.begin(), node.vertices.end()))
        throw Error("verify_decomposition: vertex list must be ascending");
    if (static_cast<int>(node.vertices.size()) != node.graph.vertex_count())
        throw Error("verify_decomposition: span size does not match recorded graph");
    if (node.kind == DecompositionNode::Kind::leaf) {
        const Graph& g = node.graph;
        switch (node.leaf_kind) {
            case LeafKind::small:
                if (g.vertex_count() > 2)
                    throw Error("verify_decomposition: small leaf with more than two vertices");
                break;
            case LeafKind::c5:
                if (g.vertex_count() != 5 || !are_isomorphic(g, make_c5().graph))
                    throw Error("verify_decomposition: c5 leaf is not isomorphic to C5");
                break;
            case LeafKind::halfgraph:
                if (!is_half_graph(g))
                    throw Error("verify_decomposition: halfgraph leaf is not a half graph");
                break;
            case LeafKind::co_halfgraph:
                if (!is_half_graph(complement(g)))
                    throw Error(
                        "verify_decomposition: co-halfgraph leaf complement is not a half "
                        "graph");
                break;
        }
        return g;
    }
    if (!node.quotient || !node.expansion)
        throw Error("verify_decomposition: substitution node missing a child");
    const Graph q = verify_decomposition(*node.quotient);
    const Graph h2 = verify_decomposition(*node.expansion);
    const auto& q_orig = node.quotient->vertices;
    const auto& x_orig = node.expansion->vertices;
    if (x_orig.size() < 2)
        throw Error("verify_decomposition: extracted set has fewer than two vertices");
    if (node.contracted_rep != x_orig.front())
        throw Error("verify_decomposition: representative is not the minimum extracted vertex");
    // span must be the disjoint union of the expansion and the quotient minus the rep
    {
        std::vector<int> merged;
        for (int v : q_orig)
            if (v != node.contracted_rep) merged.push_back(v);
        merged.insert(merged.end(), x_orig.begin(), x_orig.end());
        std::sort(merged.begin(), merged.end());
        if (merged != node.vertices)
            throw Error("verify_decomposition: children do not partition the span");
    }
    auto q_pos = [&](int orig_v) {
        const auto it = std::find(q_orig.begin(), q_orig.end(), orig_v);
        if (it == q_orig.end()) throw Error("verify_decomposition: vertex missing in quotient");
        return static_cast<int>(it - q_orig.begin());
    };
    auto x_pos = [&](int orig_v) {
        const auto it = std::find(x_orig.begin(), x_orig.end(), orig_v);
        if (it == x_orig.end())
            throw Error("verify_decomposition: vertex missing in expansion");
        return static_cast<int>(it - x_orig.begin());
    };
    const int rep_q = q_pos(node.contracted_rep);
    const int n = static_cast<int>(node.vertices.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int a = node.vertices[static_cast<size_t>(i)];
            const int b = node.vertices[static_cast<size_t>(j)];
            const bool a_in = std::binary_search(x_orig.begin(), x_orig.end(), a);
            const bool b_in = std::binary_search(x_orig.begin(), x_orig.end(), b);
            bool adj;
            if (a_in && b_in)
                adj = h2.adjacent(x_pos(a), x_pos(b));
            else if (!a_in && !b_in)
                adj = q.adjacent(q_pos(a), q_pos(b));
            else
                adj = q.adjacent(a_in ? q_pos(b) : q_pos(a), rep_q);
            if (adj) edges.emplace_back(i, j);
        }
    }
    const Graph recomposed = Graph::from_edges(n, edges);
    if (!(recomposed == node.graph))
        throw Error("verify_decomposition: recomposition differs from the recorded graph");
    // the extracted set must be homogeneous at this level
    VertexSet x_local(n);
    for (int v : x_orig) {
        const auto it = std::lower_bound(node.vertices.begin(), node.vertices.end(), v);
        x_local.add(static_cast<int>(it - node.vertices.begin()));
    }
    if (!HomogeneousSetCert{x_local}.validate(recomposed))
        throw Error("verify_decomposition: extracted set is not homogeneous at its level");
    return recomposed;
}

}  // namespace fourpath

#endif
