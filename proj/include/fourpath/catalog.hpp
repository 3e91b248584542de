#ifndef FOURPATH_CATALOG_HPP
#define FOURPATH_CATALOG_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fourpath/graph.hpp"

namespace fourpath {

// A graph from the fixed catalog, with display labels for reports.
struct NamedGraph {
    std::string id;
    Graph graph;
    std::vector<std::string> labels;  // internal index -> display label

    int label_index(const std::string& label) const {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return static_cast<int>(i);
        throw std::invalid_argument("no vertex labeled '" + label + "' in " + id);
    }
    std::string label_of(int v) const { return labels.at(static_cast<size_t>(v)); }
};

namespace detail {

inline std::vector<std::string> v_labels(int n, const std::string& prefix = "v") {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

inline std::vector<std::string> numeric_labels(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

}  // namespace detail

inline NamedGraph make_path(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return NamedGraph{"p" + std::to_string(k), Graph::from_edges(k, edges), detail::v_labels(k)};
}

inline NamedGraph make_cycle(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return NamedGraph{"c" + std::to_string(k), Graph::from_edges(k, edges), detail::v_labels(k)};
}

inline NamedGraph make_p4() { return make_path(4); }
inline NamedGraph make_p5() { return make_path(5); }
inline NamedGraph make_c4() { return make_cycle(4); }
inline NamedGraph make_c5() { return make_cycle(5); }

inline NamedGraph make_p5c() {
    NamedGraph p5 = make_p5();
    return NamedGraph{"p5c", complement(p5.graph), p5.labels};
}

inline NamedGraph make_2k2() {
    return NamedGraph{"2k2", Graph::from_edges(4, {{0, 1}, {2, 3}}), detail::v_labels(4)};
}

// Triangle x1 x2 x3 with pendants y at x1 and z at x2.
inline NamedGraph make_bull() {
    return NamedGraph{"bull", Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}}),
                      {"x1", "x2", "x3", "y", "z"}};
}

// Six vertices; degree-one vertices v1, v4; degree-three vertices v2, v3.
inline NamedGraph make_h6() {
    return NamedGraph{"h6", Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {4, 5}}),
                      detail::v_labels(6)};
}

// Half graph: sides a_1..a_k and b_1..b_k, a_i ~ b_j exactly when i+j >= k+1.
inline NamedGraph make_half_graph(int k) {
    if (k < 1) throw std::invalid_argument("half graph needs k >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (i + j >= k + 1) edges.emplace_back(i - 1, k + j - 1);
    std::vector<std::string> labels = detail::v_labels(k, "a");
    std::vector<std::string> bs = detail::v_labels(k, "b");
    labels.insert(labels.end(), bs.begin(), bs.end());
    return NamedGraph{"o:" + std::to_string(k), Graph::from_edges(2 * k, edges), labels};
}

// 12-vertex self-complementary counterexample graph, 33 edges.
inline NamedGraph make_fig2() {
    std::vector<std::pair<int, int>> e1 = {
        {1, 2},  {2, 3},  {3, 4},                                        // bottom path
        {8, 7},  {7, 6},  {6, 5},                                        // middle path
        {12, 11}, {11, 10}, {10, 9},                                     // top path
        {12, 8}, {8, 11}, {11, 6}, {6, 9}, {9, 5}, {5, 10}, {10, 7}, {7, 12},
        {1, 7},  {7, 3},  {3, 5},
        {8, 2},  {2, 6},  {6, 4},
        {2, 7},  {3, 6},
    };
    for (int t : {9, 10, 11, 12}) {
        e1.emplace_back(2, t);
        e1.emplace_back(3, t);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : e1) edges.emplace_back(u - 1, v - 1);
    return NamedGraph{"fig2", Graph::from_edges(12, edges), detail::numeric_labels(12)};
}

// The self-complementing bijection of fig2, internal indices.
inline std::vector<int> fig2_complement_map() {
    std::vector<int> phi1 = {3, 1, 4, 2, 7, 5, 8, 6, 11, 9, 12, 10};
    std::vector<int> out;
    for (int x : phi1) out.push_back(x - 1);
    return out;
}

// 10-vertex counterexample graph, 19 edges.
inline NamedGraph make_fig3() {
    std::vector<std::pair<int, int>> e1 = {
        {1, 5}, {5, 2}, {2, 4}, {4, 6}, {6, 3}, {3, 1},
        {3, 5}, {5, 6}, {6, 2},
        {8, 6}, {5, 7},
        {1, 9}, {9, 7}, {5, 9}, {9, 6},
        {4, 10}, {10, 8}, {5, 10}, {10, 6},
    };
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : e1) edges.emplace_back(u - 1, v - 1);
    return NamedGraph{"fig3", Graph::from_edges(10, edges), detail::numeric_labels(10)};
}

inline std::vector<std::string> catalog_ids() {
    return {"p4", "p5", "p5c", "c4", "2k2", "c5", "bull", "h6", "fig2", "fig3", "o:<k>"};
}

// Lookup by id string; "o:4" style ids select the half graph order.
inline std::optional<NamedGraph> catalog_lookup(const std::string& id) {
    if (id == "p4") return make_p4();
    if (id == "p5") return make_p5();
    if (id == "p5c") return make_p5c();
    if (id == "c4") return make_c4();
    if (id == "2k2") return make_2k2();
    if (id == "c5") return make_c5();
    if (id == "bull") return make_bull();
    if (id == "h6") return make_h6();
    if (id == "fig2") return make_fig2();
    if (id == "fig3") return make_fig3();
    if (id.rfind("o:", 0) == 0) {
        try {
            size_t used = 0;
            int k = std::stoi(id.substr(2), &used);
            if (used == id.size() - 2 && k >= 1 && k <= 64) return make_half_graph(k);
        } catch (const std::exception&) {
        }
        return std::nullopt;
    }
    return std::nullopt;
}

// Lookup that fails loudly, for callers that need a definite graph.
inline NamedGraph catalog_get(const std::string& id) {
    auto found = catalog_lookup(id);
    if (found) return *found;
    std::string msg = "unknown catalog id '" + id + "'; known ids:";
    for (const auto& known : catalog_ids()) msg += " " + known;
    throw Error(msg);
}

}  // namespace fourpath

#endif
