#ifndef FOURPATH_LEMMAS_HPP
#define FOURPATH_LEMMAS_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fourpath/catalog.hpp"
#include "fourpath/errors.hpp"
#include "fourpath/graph.hpp"
#include "fourpath/iso.hpp"
#include "fourpath/patterns.hpp"
#include "fourpath/recognizers.hpp"

namespace fourpath {

enum class LemmaId {
    prime_conn,
    simp_and_anti,
    anti_or_1join,
    simp_or_anti,
    common_nbrs,
    p4free_disconnected,
    prime_has_p4,
    simp_char,
    anti_clique,
    simp_anti_split,
    good_p4,
    h6_presence,
    h6conj,
    h6weak,
    structure_conj,
    c5_unique,
    halfgraph_obst,
    bullfree_struct,
    split_iff,
    mixed_pair,
    mixed_on_common,
    mixed_nbr,
};

enum class LemmaStatus { holds, fails, precondition_not_met };

struct TextCert {
    std::string text;
};

struct VertexCert {
    int v = -1;
    std::string role;
};

struct VertexPairCert {
    int simplicial = -1;
    int antisimplicial = -1;
};

struct EmbeddingCert {
    std::string pattern;
    Embedding embedding;
    bool in_complement = false;
};

struct H6Witness {
    bool in_complement = false;
    std::array<int, 6> image{};  // host vertices in role order v1..v6
    std::array<bool, 2> deg1_simplicial{};
    int deg3_antisimplicial_count = 0;
};

struct IsoMapCert {
    std::string target;
    std::vector<int> map;  // map[i] = target vertex for input vertex i
};

// named vertex-set bindings describing one concrete configuration
struct ConfigWitness {
    std::vector<std::pair<std::string, std::vector<int>>> bindings;
};

using LemmaCert = std::variant<TextCert, VertexCert, VertexPairCert, EmbeddingCert, H6Witness,
                               IsoMapCert, ConfigWitness, OneJoinCert, SplitPartitionCert,
                               HomogeneousSetCert, HalfGraphCert>;

struct Verdict {
    LemmaId lemma = LemmaId::prime_conn;
    LemmaStatus status = LemmaStatus::precondition_not_met;
    std::string detail;
    std::optional<LemmaCert> certificate;     // present when status == holds
    std::optional<LemmaCert> counterwitness;  // present when status == fails
};

struct CheckOptions {
    int onejoin_cap = kDefaultOneJoinCap;
    int iso_cap = kDefaultIsoCap;
    // quantified mixing lemmas run exhaustively up to this order, sampled above it
    int exhaustive_mixed_max_n = 6;
    int sample_count = 200;
    uint64_t seed = 0;
    // role convention for H6 copies found in the complement: evaluate
    // simplicial/antisimplicial in the graph containing the copy
    bool h6_roles_in_copy_side = true;
    bool note_alternate_h6_convention = true;
};

struct LemmaInfo {
    LemmaId id;
    std::string_view name;
    std::string_view statement;
    std::string_view precondition;
    bool expected_refutable;
    std::string_view expected_refuted_on;  // catalog id, empty when none
    bool in_small_sweep;                   // part of the exhaustive clean-sweep set
};

inline const std::array<LemmaInfo, 22>& lemma_table() {
    static const std::array<LemmaInfo, 22> table = {{
        {LemmaId::prime_conn, "prime_conn", "every prime graph is connected and anticonnected",
         "prime", false, "", true},
        {LemmaId::simp_and_anti, "simp_and_anti",
         "a prime {P5,coP5,C5}-free graph has a simplicial vertex and an antisimplicial vertex",
         "prime {P5,coP5,C5}-free", false, "", true},
        {LemmaId::anti_or_1join, "anti_or_1join",
         "a prime {P5,coP5,C5}-free graph has an antisimplicial vertex or admits a 1-join",
         "prime {P5,coP5,C5}-free", false, "", true},
        {LemmaId::simp_or_anti, "simp_or_anti",
         "a prime {P5,coP5,C5}-free graph has a simplicial or an antisimplicial vertex",
         "prime {P5,coP5,C5}-free", false, "", true},
        {LemmaId::common_nbrs, "common_nbrs",
         "in a prime coP5-free graph, for every non-adjacent u,v the common neighborhood is a "
         "clique, or some vertex outside N(u), N(v), {u,v} is mixed on an anticonnected subset "
         "of it",
         "prime coP5-free", false, "", true},
        {LemmaId::p4free_disconnected, "p4free_disconnected",
         "a P4-free graph with at least two vertices is disconnected or anti-disconnected",
         "P4-free, n >= 2", false, "", true},
        {LemmaId::prime_has_p4, "prime_has_p4", "every prime graph contains an induced P4",
         "prime", false, "", true},
        {LemmaId::simp_char, "simp_char",
         "in a prime graph, v is simplicial iff v has degree one in every induced P4 containing "
         "it, and antisimplicial iff degree two in every induced P4 containing it",
         "prime", false, "", true},
        {LemmaId::anti_clique, "anti_clique",
         "in a prime graph the antisimplicial vertices form a clique and the simplicial "
         "vertices a stable set",
         "prime", false, "", true},
        {LemmaId::simp_anti_split, "simp_anti_split",
         "in a prime {P5,coP5,C5}-free graph, the subgraph induced by the simplicial and "
         "antisimplicial vertices is a connected and anticonnected split graph",
         "prime {P5,coP5,C5}-free", false, "", true},
        {LemmaId::good_p4, "good_p4",
         "a prime {P5,coP5,C5}-free graph has an induced P4 whose endpoints are simplicial and "
         "whose middle vertices are antisimplicial",
         "prime {P5,coP5,C5}-free", false, "", true},
        {LemmaId::h6_presence, "h6_presence",
         "a prime {P5,coP5,C5}-free graph that is not split contains H6 in itself or its "
         "complement",
         "prime {P5,coP5,C5}-free, not split", false, "", true},
        {LemmaId::h6conj, "h6conj",
         "a prime {P5,coP5,C5}-free non-split graph has an H6 copy, in itself or its "
         "complement, with both degree-one vertices simplicial and both degree-three vertices "
         "antisimplicial",
         "prime {P5,coP5,C5}-free, not split", true, "fig2", false},
        {LemmaId::h6weak, "h6weak",
         "a prime {P5,coP5,C5}-free non-split graph has an H6 copy, in itself or its "
         "complement, with both degree-one vertices simplicial and at least one degree-three "
         "vertex antisimplicial",
         "prime {P5,coP5,C5}-free, not split", false, "", true},
        {LemmaId::structure_conj, "structure_conj",
         "a {P5,coP5}-free graph is isomorphic to C5, or split, or has a homogeneous set, or "
         "admits a 1-join in itself or its complement",
         "{P5,coP5}-free", true, "fig3", false},
        {LemmaId::c5_unique, "c5_unique",
         "a prime {P5,coP5}-free graph containing C5 is isomorphic to C5",
         "prime {P5,coP5}-free containing C5", false, "", true},
        {LemmaId::halfgraph_obst, "halfgraph_obst",
         "a prime {P5,coP5,C5,bull}-free graph is a half graph or has a half-graph complement",
         "prime {P5,coP5,C5,bull}-free", false, "", true},
        {LemmaId::bullfree_struct, "bullfree_struct",
         "a {P5,coP5,bull}-free graph has at most two vertices, or is isomorphic to C5, or has "
         "a homogeneous set, or it or its complement is a half graph",
         "{P5,coP5,bull}-free", false, "", true},
        {LemmaId::split_iff, "split_iff",
         "a graph has a split partition exactly when it is {C4,2K2,C5}-free", "none", false, "",
         true},
        {LemmaId::mixed_pair, "mixed_pair",
         "in a P5-free graph no vertex is mixed on two disjoint connected sets anticomplete to "
         "each other; in a coP5-free graph no vertex is mixed on two disjoint anticonnected "
         "sets complete to each other",
         "P5-free or coP5-free", false, "", false},
        {LemmaId::mixed_on_common, "mixed_on_common",
         "in a coP5-free graph, for non-adjacent u,v and an anticonnected subset A of their "
         "common neighborhood, no outside vertex is mixed on both A and {u,v}",
         "coP5-free", false, "", false},
        {LemmaId::mixed_nbr, "mixed_nbr",
         "in a {P5,coP5}-free graph, for pairwise non-adjacent u,v,w with w mixed on an "
         "anticonnected subset A of the common neighborhood of u and v, no neighbor of w "
         "outside A, u, v is mixed on {u,v}",
         "{P5,coP5}-free", false, "", false},
    }};
    return table;
}

inline const LemmaInfo& lemma_info(LemmaId id) {
    for (const auto& row : lemma_table())
        if (row.id == id) return row;
    throw std::invalid_argument("lemma_info: unknown lemma id");
}

inline LemmaId lemma_from_name(const std::string& name) {
    for (const auto& row : lemma_table())
        if (row.name == name) return row.id;
    std::string known;
    for (const auto& row : lemma_table()) {
        if (!known.empty()) known += ", ";
        known += row.name;
    }
    throw std::invalid_argument("unknown lemma '" + name + "'; known: " + known);
}

namespace detail {

// P4 with edges (0,1),(1,2),(2,3): endpoint roles {0,3}, middle roles {1,2}
inline constexpr std::array<int, 2> kP4Ends = {0, 3};
inline constexpr std::array<int, 2> kP4Mids = {1, 2};
// H6 role order v1..v6: degree-one roles {0,3}, degree-three {1,2}, degree-two {4,5}
inline constexpr std::array<int, 2> kH6Deg1 = {0, 3};
inline constexpr std::array<int, 2> kH6Deg3 = {1, 2};

inline bool mixed_on_pair(const Graph& g, int w, int x, int y) {
    return g.adjacent(w, x) != g.adjacent(w, y);
}

inline bool mixed_on_set(const Graph& g, int v, const VertexSet& x) {
    bool has_nbr = false, has_non = false;
    for (int u = x.first(); u >= 0; u = x.next(u)) {
        (g.adjacent(v, u) ? has_nbr : has_non) = true;
        if (has_nbr && has_non) return true;
    }
    return false;
}

inline bool set_anticonnected(const Graph& g, const VertexSet& x) {
    return is_anticonnected(induced_subgraph(g, x).graph);
}

inline bool set_connected(const Graph& g, const VertexSet& x) {
    return is_connected(induced_subgraph(g, x).graph);
}

inline std::string join_ints(const std::vector<int>& xs) {
    std::string out = "{";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + "}";
}

inline Verdict not_met(LemmaId id, const std::string& why) {
    Verdict v;
    v.lemma = id;
    v.status = LemmaStatus::precondition_not_met;
    v.detail = why;
    return v;
}

inline Verdict holds(LemmaId id, LemmaCert cert, std::string detail) {
    Verdict v;
    v.lemma = id;
    v.status = LemmaStatus::holds;
    v.detail = std::move(detail);
    v.certificate = std::move(cert);
    return v;
}

inline Verdict fails(LemmaId id, LemmaCert witness, std::string detail) {
    Verdict v;
    v.lemma = id;
    v.status = LemmaStatus::fails;
    v.detail = std::move(detail);
    v.counterwitness = std::move(witness);
    return v;
}

struct ClassTests {
    Graph p4 = make_p4().graph;
    Graph p5 = make_p5().graph;
    Graph p5c = make_p5c().graph;
    Graph c4 = make_c4().graph;
    Graph kk = make_2k2().graph;
    Graph c5 = make_c5().graph;
    Graph bull = make_bull().graph;
    Graph h6 = make_h6().graph;

    bool free_p5s(const Graph& g) const { return is_free_of(g, {p5, p5c}); }
    bool free_p5s_c5(const Graph& g) const { return is_free_of(g, {p5, p5c, c5}); }
    bool split(const Graph& g) const { return is_free_of(g, {c4, kk, c5}); }
};

inline const ClassTests& class_tests() {
    static const ClassTests t;
    return t;
}

// per-vertex role exposure across all induced P4 copies
struct P4Roles {
    std::vector<bool> as_end;
    std::vector<bool> as_mid;
    std::vector<Embedding> mid_example;  // a copy showing the vertex as a middle
    std::vector<Embedding> end_example;  // a copy showing the vertex as an endpoint
};

inline P4Roles p4_roles(const Graph& g) {
    const int n = g.vertex_count();
    P4Roles roles;
    roles.as_end.assign(static_cast<size_t>(n), false);
    roles.as_mid.assign(static_cast<size_t>(n), false);
    roles.mid_example.assign(static_cast<size_t>(n), Embedding{});
    roles.end_example.assign(static_cast<size_t>(n), Embedding{});
    for (const Embedding& e : enumerate_induced(g, class_tests().p4)) {
        for (int r : kP4Ends) {
            int v = e.map[static_cast<size_t>(r)];
            if (!roles.as_end[static_cast<size_t>(v)]) {
                roles.as_end[static_cast<size_t>(v)] = true;
                roles.end_example[static_cast<size_t>(v)] = e;
            }
        }
        for (int r : kP4Mids) {
            int v = e.map[static_cast<size_t>(r)];
            if (!roles.as_mid[static_cast<size_t>(v)]) {
                roles.as_mid[static_cast<size_t>(v)] = true;
                roles.mid_example[static_cast<size_t>(v)] = e;
            }
        }
    }
    return roles;
}

inline H6Witness make_h6_witness(const Graph& host, const Embedding& e, bool in_complement,
                                 const Graph& side_graph) {
    H6Witness w;
    w.in_complement = in_complement;
    for (size_t i = 0; i < 6; ++i) w.image[i] = e.map[i];
    for (size_t i = 0; i < 2; ++i)
        w.deg1_simplicial[i] =
            is_simplicial(side_graph, e.map[static_cast<size_t>(kH6Deg1[i])]);
    for (int r : kH6Deg3)
        if (is_antisimplicial(side_graph, e.map[static_cast<size_t>(r)]))
            ++w.deg3_antisimplicial_count;
    (void)host;
    return w;
}

// all H6 copies on both sides, with role flags under the copy-side convention
inline std::vector<H6Witness> h6_witnesses(const Graph& g) {
    std::vector<H6Witness> out;
    const Graph co = complement(g);
    for (const Embedding& e : enumerate_induced(g, class_tests().h6))
        out.push_back(make_h6_witness(g, e, false, g));
    for (const Embedding& e : enumerate_induced(co, class_tests().h6))
        out.push_back(make_h6_witness(g, e, true, co));
    return out;
}

inline bool h6_witness_strong(const H6Witness& w) {
    return w.deg1_simplicial[0] && w.deg1_simplicial[1] && w.deg3_antisimplicial_count == 2;
}

inline bool h6_witness_weak(const H6Witness& w) {
    return w.deg1_simplicial[0] && w.deg1_simplicial[1] && w.deg3_antisimplicial_count >= 1;
}

// same copies re-flagged with roles always evaluated in g itself
inline std::vector<H6Witness> h6_witnesses_host_convention(const Graph& g) {
    std::vector<H6Witness> out;
    const Graph co = complement(g);
    for (const Embedding& e : enumerate_induced(g, class_tests().h6))
        out.push_back(make_h6_witness(g, e, false, g));
    for (const Embedding& e : enumerate_induced(co, class_tests().h6))
        out.push_back(make_h6_witness(g, e, true, g));
    return out;
}

}  // namespace detail

inline Verdict check_prime_conn(const Graph& g) {
    using namespace detail;
    if (!is_prime(g)) return not_met(LemmaId::prime_conn, "graph is not prime");
    const bool conn = is_connected(g), anti = is_anticonnected(g);
    if (conn && anti)
        return holds(LemmaId::prime_conn, TextCert{"connected and anticonnected"},
                     "both connectivity checks pass");
    ConfigWitness w;
    if (!conn) {
        auto comps = components_within(g, VertexSet::full(g.vertex_count()));
        w.bindings.emplace_back("component", comps.front().to_vector());
    } else {
        auto comps = anticomponents_within(g, VertexSet::full(g.vertex_count()));
        w.bindings.emplace_back("anticomponent", comps.front().to_vector());
    }
    return fails(LemmaId::prime_conn, w, conn ? "not anticonnected" : "not connected");
}

inline Verdict check_simp_and_anti(const Graph& g) {
    using namespace detail;
    if (!is_prime(g)) return not_met(LemmaId::simp_and_anti, "graph is not prime");
    if (!class_tests().free_p5s_c5(g))
        return not_met(LemmaId::simp_and_anti, "graph is not {P5,coP5,C5}-free");
    const VertexSet simp = simplicial_vertices(g), anti = antisimplicial_vertices(g);
    if (!simp.empty() && !anti.empty())
        return holds(LemmaId::simp_and_anti, VertexPairCert{simp.first(), anti.first()},
                     "simplicial count " + std::to_string(simp.count()) +
                         ", antisimplicial count " + std::to_string(anti.count()));
    ConfigWitness w;
    w.bindings.emplace_back("simplicial", simp.to_vector());
    w.bindings.emplace_back("antisimplicial", anti.to_vector());
    return fails(LemmaId::simp_and_anti, w,
                 simp.empty() ? "no simplicial vertex" : "no antisimplicial vertex");
}

inline Verdict check_anti_or_1join(const Graph& g, const CheckOptions& opts) {
    using namespace detail;
    if (!is_prime(g)) return not_met(LemmaId::anti_or_1join, "graph is not prime");
    if (!class_tests().free_p5s_c5(g))
        return not_met(LemmaId::anti_or_1join, "graph is not {P5,coP5,C5}-free");
    const VertexSet anti = antisimplicial_vertices(g);
    if (!anti.empty())
        return holds(LemmaId::anti_or_1join, VertexCert{anti.first(), "antisimplicial"},
                     "antisimplicial vertex exists");
    if (auto j = find_one_join(g, opts.onejoin_cap))
        return holds(LemmaId::anti_or_1join, *j, "1-join exists");
    return fails(LemmaId::anti_or_1join, TextCert{"no antisimplicial vertex and no 1-join"},
                 "both disjuncts fail");
}

inline Verdict check_simp_or_anti(const Graph& g) {
    using namespace detail;
    if (!is_prime(g)) return not_met(LemmaId::simp_or_anti, "graph is not prime");
    if (!class_tests().free_p5s_c5(g))
        return not_met(LemmaId::simp_or_anti, "graph is not {P5,coP5,C5}-free");
    const VertexSet simp = simplicial_vertices(g);
    if (!simp.empty())
        return holds(LemmaId::simp_or_anti, VertexCert{simp.first(), "simplicial"},
                     "simplicial vertex exists");
    const VertexSet anti = antisimplicial_vertices(g);
    if (!anti.empty())
        return holds(LemmaId::simp_or_anti, VertexCert{anti.first(), "antisimplicial"},
                     "antisimplicial vertex exists");
    return fails(LemmaId::simp_or_anti, TextCert{"neither kind of vertex exists"},
                 "both disjuncts fail");
}

inline Verdict check_common_nbrs(const Graph& g) {
    using namespace detail;
    if (!is_prime(g)) return not_met(LemmaId::common_nbrs, "graph is not prime");
    if (!is_free_of(g, {class_tests().p5c}))
        return not_met(LemmaId::common_nbrs, "graph is not coP5-free");
    const int n = g.vertex_count();
    int nontrivial = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            const VertexSet common = g.neighbors(u) & g.neighbors(v);
            if (is_clique(g, common)) continue;
            ++nontrivial;
            // mixed on some anticonnected subset of S iff mixed on some
            // non-adjacent pair inside S
            VertexSet excluded = g.neighbors(u) | g.neighbors(v);
            excluded.add(u);
            excluded.add(v);
            bool found = false;
            for (int w = 0; w < n && !found; ++w) {
                if (excluded.contains(w)) continue;
                for (int x = common.first(); x >= 0 && !found; x = common.next(x))
                    for (int y = common.next(x); y >= 0 && !found; y = common.next(y))
                        if (!g.adjacent(x, y) && mixed_on_pair(g, w, x, y)) found = true;
            }
            if (!found) {
                ConfigWitness w;
                w.bindings.emplace_back("u", std::vector<int>{u});
                w.bindings.emplace_back("v", std::vector<int>{v});
                w.bindings.emplace_back("common_neighborhood", common.to_vector());
                return fails(LemmaId::common_nbrs, w,
                             "common neighborhood is not a clique and no outside vertex is "
                             "mixed on a non-adjacent pair inside it");
            }
        }
    }
    return holds(LemmaId::common_nbrs, TextCert{"all non-adjacent pairs conform"},
                 std::to_string(nontrivial) + " pair(s) needed the mixing disjunct");
}

inline Verdict check_p4free_disconnected(const Graph& g) {
    using namespace detail;
    if (g.vertex_count() < 2)
        return not_met(LemmaId::p4free_disconnected, "fewer than two vertices");
    if (!is_free_of(g, {class_tests().p4}))
        return not_met(LemmaId::p4free_disconnected, "graph is not P4-free");
    if (!is_connected(g))
        return holds(LemmaId::p4free_disconnected, TextCert{"disconnected"}, "not connected");
    if (!is_anticonnected(g))
        return holds(LemmaId::p4free_disconnected, TextCert{"anti-disconnected"},
                     "not anticonnected");
    return fails(LemmaId::p4free_disconnected,
                 TextCert{"connected and anticonnected despite being P4-free"},
                 "both connectivities hold");
}

inline Verdict check_prime_has_p4(const Graph& g) {
    using namespace detail;
    if (!is_prime(g)) return not_met(LemmaId::prime_has_p4, "graph is not prime");
    if (auto e = find_induced(g, class_tests().p4))
        return holds(LemmaId::prime_has_p4, EmbeddingCert{"p4", *e, false}, "induced P4 found");
    return fails(LemmaId::prime_has_p4, TextCert{"no induced P4"}, "search was exhaustive");
}

inline Verdict check_simp_char(const Graph& g) {
    using namespace detail;
    if (!is_prime(g)) return not_met(LemmaId::simp_char, "graph is not prime");
    const int n = g.vertex_count();
    const P4Roles roles = p4_roles(g);
    for (int v = 0; v < n; ++v) {
        const size_t sv = static_cast<size_t>(v);
        const bool simp = is_simplicial(g, v);
        const bool never_mid = !roles.as_mid[sv];
        if (simp != never_mid) {
            ConfigWitness w;
            w.bindings.emplace_back("vertex", std::vector<int>{v});
            if (roles.as_mid[sv])
                w.bindings.emplace_back("middle_copy", roles.mid_example[sv].map);
            return fails(LemmaId::simp_char, w,
                         simp ? "simplicial vertex appears as a P4 middle"
                              : "never a P4 middle yet not simplicial");
        }
        const bool anti = is_antisimplicial(g, v);
        const bool never_end = !roles.as_end[sv];
        if (anti != never_end) {
            ConfigWitness w;
            w.bindings.emplace_back("vertex", std::vector<int>{v});
            if (roles.as_end[sv])
                w.bindings.emplace_back("endpoint_copy", roles.end_example[sv].map);
            return fails(LemmaId::simp_char, w,
                         anti ? "antisimplicial vertex appears as a P4 endpoint"
                              : "never a P4 endpoint yet not antisimplicial");
        }
    }
    return holds(LemmaId::simp_char, TextCert{"both characterizations agree on every vertex"},
                 "checked " + std::to_string(n) + " vertices");
}

inline Verdict check_anti_clique(const Graph& g) {
    using namespace detail;
    if (!is_prime(g)) return not_met(LemmaId::anti_clique, "graph is not prime");
    const std::vector<int> anti = antisimplicial_vertices(g).to_vector();
    for (size_t i = 0; i < anti.size(); ++i)
        for (size_t j = i + 1; j < anti.size(); ++j)
            if (!g.adjacent(anti[i], anti[j])) {
                ConfigWitness w;
                w.bindings.emplace_back("non_adjacent_antisimplicial",
                                        std::vector<int>{anti[i], anti[j]});
                return fails(LemmaId::anti_clique, w, "antisimplicial set is not a clique");
            }
    const std::vector<int> simp = simplicial_vertices(g).to_vector();
    for (size_t i = 0; i < simp.size(); ++i)
        for (size_t j = i + 1; j < simp.size(); ++j)
            if (g.adjacent(simp[i], simp[j])) {
                ConfigWitness w;
                w.bindings.emplace_back("adjacent_simplicial",
                                        std::vector<int>{simp[i], simp[j]});
                return fails(LemmaId::anti_clique, w, "simplicial set is not stable");
            }
    ConfigWitness cert;
    cert.bindings.emplace_back("antisimplicial_clique", anti);
    cert.bindings.emplace_back("simplicial_stable", simp);
    return holds(LemmaId::anti_clique, cert, "clique and stable set verified pairwise");
}

inline Verdict check_simp_anti_split(const Graph& g) {
    using namespace detail;
    if (!is_prime(g)) return not_met(LemmaId::simp_anti_split, "graph is not prime");
    if (!class_tests().free_p5s_c5(g))
        return not_met(LemmaId::simp_anti_split, "graph is not {P5,coP5,C5}-free");
    const VertexSet simp = simplicial_vertices(g), anti = antisimplicial_vertices(g);
    const VertexSet core = simp | anti;
    ConfigWitness w;
    w.bindings.emplace_back("simplicial", simp.to_vector());
    w.bindings.emplace_back("antisimplicial", anti.to_vector());
    if (core.empty())
        return fails(LemmaId::simp_anti_split, w, "no simplicial or antisimplicial vertices");
    const Graph sub = induced_subgraph(g, core).graph;
    auto part = find_split_partition(sub);
    if (!part)
        return fails(LemmaId::simp_anti_split, w, "induced subgraph is not split");
    if (!is_connected(sub)) return fails(LemmaId::simp_anti_split, w, "subgraph not connected");
    if (!is_anticonnected(sub))
        return fails(LemmaId::simp_anti_split, w, "subgraph not anticonnected");
    return holds(LemmaId::simp_anti_split, w,
                 "split, connected and anticonnected on " + std::to_string(core.count()) +
                     " vertices");
}

inline Verdict check_good_p4(const Graph& g) {
    using namespace detail;
    if (!is_prime(g)) return not_met(LemmaId::good_p4, "graph is not prime");
    if (!class_tests().free_p5s_c5(g))
        return not_met(LemmaId::good_p4, "graph is not {P5,coP5,C5}-free");
    size_t copies = 0;
    for (const Embedding& e : enumerate_induced(g, class_tests().p4)) {
        ++copies;
        bool ok = true;
        for (int r : kP4Ends)
            ok = ok && is_simplicial(g, e.map[static_cast<size_t>(r)]);
        for (int r : kP4Mids)
            ok = ok && is_antisimplicial(g, e.map[static_cast<size_t>(r)]);
        if (ok)
            return holds(LemmaId::good_p4, EmbeddingCert{"p4", e, false},
                         "qualifying copy found");
    }
    return fails(LemmaId::good_p4,
                 TextCert{"none of " + std::to_string(copies) + " P4 copies qualifies"},
                 "exhaustive over all copies");
}

inline Verdict check_h6_presence(const Graph& g) {
    using namespace detail;
    if (!is_prime(g)) return not_met(LemmaId::h6_presence, "graph is not prime");
    if (!class_tests().free_p5s_c5(g))
        return not_met(LemmaId::h6_presence, "graph is not {P5,coP5,C5}-free");
    if (class_tests().split(g)) return not_met(LemmaId::h6_presence, "graph is split");
    if (auto e = find_induced(g, class_tests().h6))
        return holds(LemmaId::h6_presence, EmbeddingCert{"h6", *e, false}, "copy in the graph");
    if (auto e = find_induced(complement(g), class_tests().h6))
        return holds(LemmaId::h6_presence, EmbeddingCert{"h6", *e, true},
                     "copy in the complement");
    return fails(LemmaId::h6_presence, TextCert{"no H6 on either side"},
                 "both sides searched exhaustively");
}

namespace detail {

inline Verdict check_h6_flagged(LemmaId id, const Graph& g, const CheckOptions& opts,
                                bool strong) {
    if (!is_prime(g)) return not_met(id, "graph is not prime");
    if (!class_tests().free_p5s_c5(g)) return not_met(id, "graph is not {P5,coP5,C5}-free");
    if (class_tests().split(g)) return not_met(id, "graph is split");
    const auto wits = opts.h6_roles_in_copy_side ? h6_witnesses(g)
                                                 : h6_witnesses_host_convention(g);
    size_t in_g = 0, in_co = 0;
    const H6Witness* best = nullptr;
    for (const auto& w : wits) {
        (w.in_complement ? in_co : in_g) += 1;
        if (strong ? h6_witness_strong(w) : h6_witness_weak(w)) {
            if (!best) best = &w;
        }
    }
    std::string counts = std::to_string(in_g) + " cop" + (in_g == 1 ? "y" : "ies") +
                         " in the graph, " + std::to_string(in_co) + " in the complement";
    if (opts.note_alternate_h6_convention) {
        const auto alt = opts.h6_roles_in_copy_side ? h6_witnesses_host_convention(g)
                                                    : h6_witnesses(g);
        const bool alt_found = std::any_of(alt.begin(), alt.end(), [&](const H6Witness& w) {
            return strong ? h6_witness_strong(w) : h6_witness_weak(w);
        });
        const bool found = best != nullptr;
        if (alt_found != found)
            counts += "; note: the opposite role-evaluation convention gives " +
                      std::string(alt_found ? "holds" : "fails");
    }
    if (best) return holds(id, *best, "qualifying copy found; " + counts);
    return fails(id, TextCert{"no qualifying copy among " + counts},
                 "all copies on both sides examined");
}

}  // namespace detail

inline Verdict check_h6conj(const Graph& g, const CheckOptions& opts) {
    return detail::check_h6_flagged(LemmaId::h6conj, g, opts, true);
}

inline Verdict check_h6weak(const Graph& g, const CheckOptions& opts) {
    return detail::check_h6_flagged(LemmaId::h6weak, g, opts, false);
}

inline Verdict check_structure_conj(const Graph& g, const CheckOptions& opts) {
    using namespace detail;
    if (!class_tests().free_p5s(g))
        return not_met(LemmaId::structure_conj, "graph is not {P5,coP5}-free");
    const Graph& c5 = class_tests().c5;
    if (g.vertex_count() == 5)
        if (auto m = find_isomorphism(g, c5, opts.iso_cap))
            return holds(LemmaId::structure_conj, IsoMapCert{"c5", *m}, "isomorphic to C5");
    if (auto part = find_split_partition(g))
        return holds(LemmaId::structure_conj, *part, "split graph");
    if (auto hs = find_homogeneous_set(g))
        return holds(LemmaId::structure_conj, *hs, "homogeneous set");
    if (auto j = find_one_join(g, opts.onejoin_cap))
        return holds(LemmaId::structure_conj, *j, "1-join in the graph");
    if (auto j = find_one_join(complement(g), opts.onejoin_cap))
        return holds(LemmaId::structure_conj, *j, "1-join in the complement");
    return fails(LemmaId::structure_conj, TextCert{"all four escapes refuted exhaustively"},
                 "not C5, not split, no homogeneous set, no 1-join on either side");
}

inline Verdict check_c5_unique(const Graph& g, const CheckOptions& opts) {
    using namespace detail;
    if (!is_prime(g)) return not_met(LemmaId::c5_unique, "graph is not prime");
    if (!class_tests().free_p5s(g))
        return not_met(LemmaId::c5_unique, "graph is not {P5,coP5}-free");
    if (!contains_induced(g, class_tests().c5))
        return not_met(LemmaId::c5_unique, "graph does not contain C5");
    if (g.vertex_count() == 5)
        if (auto m = find_isomorphism(g, class_tests().c5, opts.iso_cap))
            return holds(LemmaId::c5_unique, IsoMapCert{"c5", *m}, "isomorphic to C5");
    return fails(LemmaId::c5_unique,
                 TextCert{"contains C5 but has " + std::to_string(g.vertex_count()) +
                          " vertices"},
                 "isomorphism to C5 impossible or not found");
}

inline Verdict check_halfgraph_obst(const Graph& g) {
    using namespace detail;
    if (!is_prime(g)) return not_met(LemmaId::halfgraph_obst, "graph is not prime");
    if (!is_free_of(g, {class_tests().p5, class_tests().p5c, class_tests().c5,
                        class_tests().bull}))
        return not_met(LemmaId::halfgraph_obst, "graph is not {P5,coP5,C5,bull}-free");
    if (auto cert = find_half_graph_cert(g))
        return holds(LemmaId::halfgraph_obst, *cert, "the graph is a half graph");
    if (auto cert = find_half_graph_cert(complement(g)))
        return holds(LemmaId::halfgraph_obst, *cert, "the complement is a half graph");
    return fails(LemmaId::halfgraph_obst, TextCert{"neither side is a half graph"},
                 "both sides checked structurally");
}

inline Verdict check_bullfree_struct(const Graph& g, const CheckOptions& opts) {
    using namespace detail;
    if (!is_free_of(g, {class_tests().p5, class_tests().p5c, class_tests().bull}))
        return not_met(LemmaId::bullfree_struct, "graph is not {P5,coP5,bull}-free");
    if (g.vertex_count() <= 2)
        return holds(LemmaId::bullfree_struct, TextCert{"at most two vertices"},
                     "small-graph case");
    if (g.vertex_count() == 5)
        if (auto m = find_isomorphism(g, class_tests().c5, opts.iso_cap))
            return holds(LemmaId::bullfree_struct, IsoMapCert{"c5", *m}, "isomorphic to C5");
    if (auto hs = find_homogeneous_set(g))
        return holds(LemmaId::bullfree_struct, *hs, "homogeneous set");
    if (auto cert = find_half_graph_cert(g))
        return holds(LemmaId::bullfree_struct, *cert, "the graph is a half graph");
    if (auto cert = find_half_graph_cert(complement(g)))
        return holds(LemmaId::bullfree_struct, *cert, "the complement is a half graph");
    return fails(LemmaId::bullfree_struct, TextCert{"no structural outcome applies"},
                 "all four outcomes refuted");
}

inline Verdict check_split_iff(const Graph& g) {
    using namespace detail;
    const auto part = find_split_partition(g);
    const FreeCheck fc = is_free(g, {class_tests().c4, class_tests().kk, class_tests().c5});
    if (part.has_value() == fc.free) {
        if (part)
            return holds(LemmaId::split_iff, *part,
                         "split partition exists and no forbidden pattern occurs");
        static const std::array<std::string_view, 3> names = {"c4", "2k2", "c5"};
        return holds(LemmaId::split_iff,
                     EmbeddingCert{std::string(names[static_cast<size_t>(fc.pattern_index)]),
                                   *fc.witness, false},
                     "no split partition and a forbidden pattern occurs");
    }
    ConfigWitness w;
    if (fc.witness) w.bindings.emplace_back("pattern_witness", fc.witness->map);
    if (part) {
        w.bindings.emplace_back("clique", part->K.to_vector());
        w.bindings.emplace_back("stable", part->S.to_vector());
    }
    return fails(LemmaId::split_iff, w,
                 part ? "partition found despite a forbidden pattern"
                      : "pattern-free yet no partition found");
}

inline Verdict check_mixed_pair(const Graph& g, const CheckOptions& opts) {
    using namespace detail;
    const bool p5_free = is_free_of(g, {class_tests().p5});
    const bool p5c_free = is_free_of(g, {class_tests().p5c});
    if (!p5_free && !p5c_free)
        return not_met(LemmaId::mixed_pair, "graph is neither P5-free nor coP5-free");
    const int n = g.vertex_count();
    size_t configs = 0;

    auto test_config = [&](const VertexSet& x1, const VertexSet& x2,
                           bool connected_form) -> std::optional<Verdict> {
        if (x1.count() < 2 && x2.count() < 2) return std::nullopt;
        if (connected_form) {
            if (!set_connected(g, x1) || !set_connected(g, x2)) return std::nullopt;
            if (!set_anticomplete_to(g, x1, x2)) return std::nullopt;
        } else {
            if (!set_anticonnected(g, x1) || !set_anticonnected(g, x2)) return std::nullopt;
            if (!set_complete_to(g, x1, x2)) return std::nullopt;
        }
        ++configs;
        for (int v = 0; v < n; ++v) {
            if (x1.contains(v) || x2.contains(v)) continue;
            if (mixed_on_set(g, v, x1) && mixed_on_set(g, v, x2)) {
                ConfigWitness w;
                w.bindings.emplace_back("v", std::vector<int>{v});
                w.bindings.emplace_back("x1", x1.to_vector());
                w.bindings.emplace_back("x2", x2.to_vector());
                return fails(LemmaId::mixed_pair, w,
                             connected_form
                                 ? "vertex mixed on two anticomplete connected sets"
                                 : "vertex mixed on two complete anticonnected sets");
            }
        }
        return std::nullopt;
    };

    auto run_form = [&](bool connected_form) -> std::optional<Verdict> {
        if (n <= opts.exhaustive_mixed_max_n) {
            std::vector<int> assign(static_cast<size_t>(n), 0);
            while (true) {
                VertexSet x1(n), x2(n);
                for (int i = 0; i < n; ++i) {
                    if (assign[static_cast<size_t>(i)] == 1) x1.add(i);
                    if (assign[static_cast<size_t>(i)] == 2) x2.add(i);
                }
                if (!x1.empty() && !x2.empty())
                    if (auto v = test_config(x1, x2, connected_form)) return v;
                int i = 0;
                while (i < n && assign[static_cast<size_t>(i)] == 2)
                    assign[static_cast<size_t>(i++)] = 0;
                if (i == n) break;
                ++assign[static_cast<size_t>(i)];
            }
        } else {
            std::mt19937_64 rng(opts.seed ^ (connected_form ? 0x9e3779b97f4a7c15ull : 0));
            for (int t = 0; t < opts.sample_count; ++t) {
                VertexSet x1(n), x2(n);
                for (int i = 0; i < n; ++i) {
                    switch (rng() % 3) {
                        case 1: x1.add(i); break;
                        case 2: x2.add(i); break;
                        default: break;
                    }
                }
                if (x1.empty() || x2.empty()) continue;
                if (auto v = test_config(x1, x2, connected_form)) return v;
            }
        }
        return std::nullopt;
    };

    if (p5_free)
        if (auto v = run_form(true)) return *v;
    if (p5c_free)
        if (auto v = run_form(false)) return *v;
    const std::string mode = n <= opts.exhaustive_mixed_max_n ? "exhaustive" : "sampled";
    return holds(LemmaId::mixed_pair,
                 TextCert{std::to_string(configs) + " qualifying configuration(s), " + mode},
                 std::string(p5_free ? "connected form checked" : "") +
                     (p5_free && p5c_free ? "; " : "") +
                     (p5c_free ? "anticonnected form checked" : ""));
}

inline Verdict check_mixed_on_common(const Graph& g, const CheckOptions& opts) {
    using namespace detail;
    if (!is_free_of(g, {class_tests().p5c}))
        return not_met(LemmaId::mixed_on_common, "graph is not coP5-free");
    const int n = g.vertex_count();
    size_t configs = 0;

    auto test_config = [&](int u, int v, const VertexSet& a) -> std::optional<Verdict> {
        if (a.count() < 2) return std::nullopt;
        if (!set_anticonnected(g, a)) return std::nullopt;
        ++configs;
        for (int w = 0; w < n; ++w) {
            if (w == u || w == v || a.contains(w)) continue;
            if (mixed_on_set(g, w, a) && mixed_on_pair(g, w, u, v)) {
                ConfigWitness cw;
                cw.bindings.emplace_back("u", std::vector<int>{u});
                cw.bindings.emplace_back("v", std::vector<int>{v});
                cw.bindings.emplace_back("a", a.to_vector());
                cw.bindings.emplace_back("w", std::vector<int>{w});
                return fails(LemmaId::mixed_on_common, cw,
                             "vertex mixed on both the subset and the pair");
            }
        }
        return std::nullopt;
    };

    std::mt19937_64 rng(opts.seed ^ 0xc2b2ae3d27d4eb4full);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            const VertexSet common = g.neighbors(u) & g.neighbors(v);
            const auto members = common.to_vector();
            if (members.size() < 2) continue;
            if (n <= opts.exhaustive_mixed_max_n) {
                const uint32_t limit = 1u << members.size();
                for (uint32_t mask = 0; mask < limit; ++mask) {
                    VertexSet a(n);
                    for (size_t i = 0; i < members.size(); ++i)
                        if (mask >> i & 1) a.add(members[i]);
                    if (auto verdict = test_config(u, v, a)) return *verdict;
                }
            } else {
                for (int t = 0; t < opts.sample_count; ++t) {
                    VertexSet a(n);
                    for (int m : members)
                        if (rng() & 1) a.add(m);
                    if (auto verdict = test_config(u, v, a)) return *verdict;
                }
            }
        }
    }
    const std::string mode = n <= opts.exhaustive_mixed_max_n ? "exhaustive" : "sampled";
    return holds(LemmaId::mixed_on_common,
                 TextCert{std::to_string(configs) + " qualifying configuration(s), " + mode},
                 "no doubly mixed vertex in any configuration");
}

inline Verdict check_mixed_nbr(const Graph& g, const CheckOptions& opts) {
    using namespace detail;
    if (!class_tests().free_p5s(g))
        return not_met(LemmaId::mixed_nbr, "graph is not {P5,coP5}-free");
    const int n = g.vertex_count();
    size_t configs = 0;

    auto test_config = [&](int u, int v, int w, const VertexSet& a) -> std::optional<Verdict> {
        if (a.count() < 2) return std::nullopt;
        if (!set_anticonnected(g, a)) return std::nullopt;
        if (!mixed_on_set(g, w, a)) return std::nullopt;
        ++configs;
        for (int z = g.neighbors(w).first(); z >= 0; z = g.neighbors(w).next(z)) {
            if (z == u || z == v || a.contains(z)) continue;
            if (mixed_on_pair(g, z, u, v)) {
                ConfigWitness cw;
                cw.bindings.emplace_back("u", std::vector<int>{u});
                cw.bindings.emplace_back("v", std::vector<int>{v});
                cw.bindings.emplace_back("w", std::vector<int>{w});
                cw.bindings.emplace_back("a", a.to_vector());
                cw.bindings.emplace_back("z", std::vector<int>{z});
                return fails(LemmaId::mixed_nbr,
                             cw, "neighbor of w is mixed on the non-adjacent pair");
            }
        }
        return std::nullopt;
    };

    std::mt19937_64 rng(opts.seed ^ 0xa0761d6478bd642full);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            const VertexSet common = g.neighbors(u) & g.neighbors(v);
            const auto members = common.to_vector();
            if (members.size() < 2) continue;
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v || g.adjacent(w, u) || g.adjacent(w, v)) continue;
                if (n <= opts.exhaustive_mixed_max_n) {
                    const uint32_t limit = 1u << members.size();
                    for (uint32_t mask = 0; mask < limit; ++mask) {
                        VertexSet a(n);
                        for (size_t i = 0; i < members.size(); ++i)
                            if (mask >> i & 1) a.add(members[i]);
                        if (auto verdict = test_config(u, v, w, a)) return *verdict;
                    }
                } else {
                    for (int t = 0; t < opts.sample_count; ++t) {
                        VertexSet a(n);
                        for (int m : members)
                            if (rng() & 1) a.add(m);
                        if (auto verdict = test_config(u, v, w, a)) return *verdict;
                    }
                }
            }
        }
    }
    const std::string mode = n <= opts.exhaustive_mixed_max_n ? "exhaustive" : "sampled";
    return holds(LemmaId::mixed_nbr,
                 TextCert{std::to_string(configs) + " qualifying configuration(s), " + mode},
                 "no mixed neighbor in any configuration");
}

inline Verdict check_lemma(LemmaId id, const Graph& g, const CheckOptions& opts = {}) {
    switch (id) {
        case LemmaId::prime_conn: return check_prime_conn(g);
        case LemmaId::simp_and_anti: return check_simp_and_anti(g);
        case LemmaId::anti_or_1join: return check_anti_or_1join(g, opts);
        case LemmaId::simp_or_anti: return check_simp_or_anti(g);
        case LemmaId::common_nbrs: return check_common_nbrs(g);
        case LemmaId::p4free_disconnected: return check_p4free_disconnected(g);
        case LemmaId::prime_has_p4: return check_prime_has_p4(g);
        case LemmaId::simp_char: return check_simp_char(g);
        case LemmaId::anti_clique: return check_anti_clique(g);
        case LemmaId::simp_anti_split: return check_simp_anti_split(g);
        case LemmaId::good_p4: return check_good_p4(g);
        case LemmaId::h6_presence: return check_h6_presence(g);
        case LemmaId::h6conj: return check_h6conj(g, opts);
        case LemmaId::h6weak: return check_h6weak(g, opts);
        case LemmaId::structure_conj: return check_structure_conj(g, opts);
        case LemmaId::c5_unique: return check_c5_unique(g, opts);
        case LemmaId::halfgraph_obst: return check_halfgraph_obst(g);
        case LemmaId::bullfree_struct: return check_bullfree_struct(g, opts);
        case LemmaId::split_iff: return check_split_iff(g);
        case LemmaId::mixed_pair: return check_mixed_pair(g, opts);
        case LemmaId::mixed_on_common: return check_mixed_on_common(g, opts);
        case LemmaId::mixed_nbr: return check_mixed_nbr(g, opts);
    }
    throw std::invalid_argument("check_lemma: unknown lemma id");
}

inline std::vector<Verdict> check_all_lemmas(const Graph& g, const CheckOptions& opts = {}) {
    std::vector<Verdict> out;
    for (const auto& row : lemma_table()) out.push_back(check_lemma(row.id, g, opts));
    return out;
}

inline std::string status_name(LemmaStatus s) {
    switch (s) {
        case LemmaStatus::holds: return "holds";
        case LemmaStatus::fails: return "fails";
        case LemmaStatus::precondition_not_met: return "precondition_not_met";
    }
    return "unknown";
}

}  // namespace fourpath

#endif
