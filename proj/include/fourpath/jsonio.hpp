#ifndef FOURPATH_JSONIO_HPP
#define FOURPATH_JSONIO_HPP

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "fourpath/decompose.hpp"
#include "fourpath/finders.hpp"
#include "fourpath/graph6.hpp"
#include "fourpath/lemmas.hpp"
#include "fourpath/sweep.hpp"

namespace fourpath {

using Json = nlohmann::ordered_json;

// Maps internal vertex indices to display labels; 1-based numerals by default.
struct Labeler {
    std::vector<std::string> labels;

    Labeler() = default;
    explicit Labeler(std::vector<std::string> ls) : labels(std::move(ls)) {}
    static Labeler for_named(const NamedGraph& g) { return Labeler(g.labels); }

    std::string operator()(int v) const {
        if (v >= 0 && static_cast<size_t>(v) < labels.size()) return labels[v];
        return std::to_string(v + 1);
    }
};

inline Json vertices_json(const std::vector<int>& vs, const Labeler& lab) {
    Json arr = Json::array();
    for (int v : vs) arr.push_back(lab(v));
    return arr;
}

inline Json vertices_json(const VertexSet& vs, const Labeler& lab) {
    return vertices_json(vs.to_vector(), lab);
}

inline Json graph_json(const Graph& g, const Labeler& lab = {}) {
    Json j;
    j["n"] = g.vertex_count();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({lab(u), lab(v)});
    j["edges"] = edges;
    j["graph6"] = to_graph6(g);
    return j;
}

inline Json embedding_json(const Embedding& e, const Labeler& lab = {}) {
    return vertices_json(e.map, lab);
}

inline Json cert_json(const LemmaCert& cert, const Labeler& lab = {}) {
    Json j;
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, TextCert>) {
                j["type"] = "text";
                j["text"] = c.text;
            } else if constexpr (std::is_same_v<T, VertexCert>) {
                j["type"] = "vertex";
                j["vertex"] = lab(c.v);
                j["role"] = c.role;
            } else if constexpr (std::is_same_v<T, VertexPairCert>) {
                j["type"] = "vertex_pair";
                j["simplicial"] = lab(c.simplicial);
                j["antisimplicial"] = lab(c.antisimplicial);
            } else if constexpr (std::is_same_v<T, EmbeddingCert>) {
                j["type"] = "embedding";
                j["pattern"] = c.pattern;
                j["in_complement"] = c.in_complement;
                j["image"] = embedding_json(c.embedding, lab);
            } else if constexpr (std::is_same_v<T, H6Witness>) {
                j["type"] = "h6_witness";
                j["in_complement"] = c.in_complement;
                Json img = Json::array();
                for (int v : c.image) img.push_back(lab(v));
                j["image"] = img;
                j["deg1_simplicial"] = {c.deg1_simplicial[0], c.deg1_simplicial[1]};
                j["deg3_antisimplicial_count"] = c.deg3_antisimplicial_count;
            } else if constexpr (std::is_same_v<T, IsoMapCert>) {
                j["type"] = "isomorphism";
                j["target"] = c.target;
                j["map"] = vertices_json(c.map, lab);
            } else if constexpr (std::is_same_v<T, ConfigWitness>) {
                j["type"] = "configuration";
                Json b = Json::object();
                for (const auto& [name, vs] : c.bindings) b[name] = vertices_json(vs, lab);
                j["bindings"] = b;
            } else if constexpr (std::is_same_v<T, OneJoinCert>) {
                j["type"] = "one_join";
                j["A"] = vertices_json(c.A, lab);
                j["B"] = vertices_json(c.B, lab);
                j["C"] = vertices_json(c.C, lab);
                j["D"] = vertices_json(c.D, lab);
            } else if constexpr (std::is_same_v<T, SplitPartitionCert>) {
                j["type"] = "split_partition";
                j["clique"] = vertices_json(c.K, lab);
                j["stable"] = vertices_json(c.S, lab);
            } else if constexpr (std::is_same_v<T, HomogeneousSetCert>) {
                j["type"] = "homogeneous_set";
                j["X"] = vertices_json(c.X, lab);
            } else if constexpr (std::is_same_v<T, HalfGraphCert>) {
                j["type"] = "half_graph";
                j["k"] = c.k;
                j["a_order"] = vertices_json(c.a_order, lab);
                j["b_order"] = vertices_json(c.b_order, lab);
            }
        },
        cert);
    return j;
}

inline Json verdict_json(const Verdict& v, const Labeler& lab = {}) {
    Json j;
    j["lemma"] = lemma_info(v.lemma).name;
    j["status"] = status_name(v.status);
    j["detail"] = v.detail;
    if (v.certificate) j["certificate"] = cert_json(*v.certificate, lab);
    if (v.counterwitness) j["counterwitness"] = cert_json(*v.counterwitness, lab);
    return j;
}

inline Json lemma_info_json(const LemmaInfo& info) {
    Json j;
    j["name"] = info.name;
    j["statement"] = info.statement;
    j["precondition"] = info.precondition;
    j["in_small_sweep"] = info.in_small_sweep;
    j["expected_refutable"] = info.expected_refutable;
    if (info.expected_refutable) j["expected_refuted_on"] = info.expected_refuted_on;
    return j;
}

inline Json decomposition_json(const DecompositionNode& node, const Labeler& lab = {}) {
    Json j;
    if (node.kind == DecompositionNode::Kind::leaf) {
        j["kind"] = "leaf";
        j["leaf_kind"] = leaf_kind_name(node.leaf_kind);
    } else {
        j["kind"] = "substitution";
        j["contracted_rep"] = lab(node.contracted_rep);
    }
    j["vertices"] = vertices_json(node.vertices, lab);
    j["n"] = node.graph.vertex_count();
    if (node.kind == DecompositionNode::Kind::substitution) {
        j["quotient"] = decomposition_json(*node.quotient, lab);
        j["expansion"] = decomposition_json(*node.expansion, lab);
    }
    return j;
}

inline Json extension_case_json(const ExtensionCase& c, const Labeler& lab = {}) {
    Json j;
    j["attachment"] = vertices_json(c.attachment, lab);
    j["prime"] = c.prime;
    Json contains = Json::object();
    contains["p5"] = c.has_p5;
    contains["p5c"] = c.has_p5c;
    contains["c5"] = c.has_c5;
    contains["bull"] = c.has_bull;
    j["contains"] = contains;
    return j;
}

inline Json lemma_counts_json(const LemmaCounts& c) {
    Json j;
    j["holds"] = c.holds;
    j["fails"] = c.fails;
    j["precondition_not_met"] = c.precondition_not_met;
    j["capped"] = c.capped;
    return j;
}

inline Json sweep_report_json(const SweepReport& r, bool include_wall = true) {
    Json j;
    j["source"] = r.source_description;
    j["total_graphs"] = r.total_graphs;
    Json lemmas = Json::array();
    for (LemmaId id : r.lemmas) lemmas.push_back(lemma_info(id).name);
    j["lemmas"] = lemmas;
    Json counts = Json::object();
    for (const auto& [n, slots] : r.counts) {
        Json per_n = Json::object();
        for (size_t i = 0; i < slots.size(); ++i)
            per_n[lemma_info(r.lemmas[i]).name] = lemma_counts_json(slots[i]);
        counts[std::to_string(n)] = per_n;
    }
    j["counts"] = counts;
    Json per_n_totals = Json::object();
    for (const auto& [n, c] : r.graphs_per_n) per_n_totals[std::to_string(n)] = c;
    j["graphs_per_n"] = per_n_totals;
    Json exemplars = Json::array();
    for (const auto& e : r.exemplars) {
        Json je;
        je["lemma"] = lemma_info(e.lemma).name;
        je["source_index"] = e.source_index;
        je["label"] = e.label;
        je["graph6"] = e.graph6;
        je["expected"] = e.expected;
        je["verdict"] = verdict_json(e.verdict);
        exemplars.push_back(je);
    }
    j["exemplars"] = exemplars;
    Json expected = Json::array();
    for (const auto& er : r.expected) {
        Json je;
        je["lemma"] = lemma_info(er.entry.lemma).name;
        je["graph"] = er.entry.graph_id;
        je["observed"] = er.observed;
        expected.push_back(je);
    }
    j["expected_refutations"] = expected;
    j["unexpected_fails"] = r.unexpected_fails;
    if (!r.diagnostics.empty()) {
        Json diags = Json::array();
        for (const auto& d : r.diagnostics) {
            Json jd;
            jd["line"] = d.line_number;
            jd["message"] = d.message;
            diags.push_back(jd);
        }
        j["diagnostics"] = diags;
    }
    Json cfg;
    cfg["jobs"] = r.jobs;
    cfg["seed"] = r.seed;
    cfg["iso_cap"] = r.iso_cap;
    cfg["onejoin_cap"] = r.onejoin_cap;
    cfg["sample_count"] = r.sample_count;
    cfg["exemplar_limit"] = r.exemplar_limit;
    cfg["free"] = r.free_names;
    j["config"] = cfg;
    if (include_wall) j["wall_ms"] = r.wall_ms;
    return j;
}

}  // namespace fourpath

#endif
