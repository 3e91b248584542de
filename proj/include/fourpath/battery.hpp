#ifndef FOURPATH_BATTERY_HPP
#define FOURPATH_BATTERY_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fourpath/catalog.hpp"
#include "fourpath/iso.hpp"
#include "fourpath/lemmas.hpp"
#include "fourpath/patterns.hpp"
#include "fourpath/recognizers.hpp"

namespace fourpath {

struct SubCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline std::string labeled_set(const NamedGraph& g, const VertexSet& vs) {
    std::string out = "{";
    bool first = true;
    for (int v : vs.to_vector()) {
        if (!first) out += ",";
        out += g.label_of(v);
        first = false;
    }
    return out + "}";
}

// Literal bipartition scan: every mask is tried as the A|B side.
inline std::optional<OneJoinCert> one_join_by_scan(const Graph& g) {
    const int n = g.vertex_count();
    const VertexSet all = g.all_vertices();
    for (uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        VertexSet left(n);
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) left.add(v);
        const VertexSet right = all - left;
        VertexSet B(n), C(n);
        for (int v : left.to_vector())
            if (g.neighbors(v).intersects(right)) B.add(v);
        for (int v : right.to_vector())
            if (g.neighbors(v).intersects(left)) C.add(v);
        const OneJoinCert cert{left - B, B, C, right - C};
        if (!cert.A.empty() && !cert.B.empty() && !cert.C.empty() && !cert.D.empty() &&
            cert.validate(g))
            return cert;
    }
    return std::nullopt;
}

}  // namespace detail

inline std::vector<SubCheck> fig2_battery() {
    const NamedGraph fig2 = make_fig2();
    const Graph& g = fig2.graph;
    std::vector<SubCheck> out;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        out.push_back({name, pass, detail});
    };

    add("12 vertices, 33 edges",
        g.vertex_count() == 12 && g.edges().size() == 33,
        "n=" + std::to_string(g.vertex_count()) +
            " m=" + std::to_string(g.edges().size()));
    add("prime", is_prime(g), "");

    const Graph p5 = make_p5().graph;
    add("P5-free", !contains_induced(g, p5), "");

    const auto phi = fig2_complement_map();
    const bool phi_ok = is_isomorphism(g, complement(g), phi);
    add("self-complementary via the recorded bijection", phi_ok,
        phi_ok ? "bijection maps the graph onto its complement" : "bijection rejected");
    add("coP5-free", !contains_induced(g, complement(p5)), "");

    add("not split", !find_split_partition(g).has_value(), "");

    const VertexSet simp = simplicial_vertices(g);
    const VertexSet anti = antisimplicial_vertices(g);
    add("simplicial set {1,4}", simp == VertexSet::of(12, {0, 3}),
        "simplicial = " + detail::labeled_set(fig2, simp));
    add("antisimplicial set {2,3}", anti == VertexSet::of(12, {1, 2}),
        "antisimplicial = " + detail::labeled_set(fig2, anti));

    // the mechanism behind the H6 refutation: no induced C4 spans both 2 and 3
    const auto c4s = enumerate_induced(g, make_c4().graph);
    bool c4_spans = false;
    for (const auto& emb : c4s) {
        bool has2 = false, has3 = false;
        for (int v : emb.map) {
            if (v == 1) has2 = true;
            if (v == 2) has3 = true;
        }
        if (has2 && has3) c4_spans = true;
    }
    add("no induced C4 contains both 2 and 3", !c4_spans,
        std::to_string(c4s.size()) + " induced C4 copies scanned");

    CheckOptions opts;
    const auto strong = check_lemma(LemmaId::h6conj, g, opts);
    add("h6conj fails", strong.status == LemmaStatus::fails, strong.detail);
    const auto weak = check_lemma(LemmaId::h6weak, g, opts);
    add("h6weak holds", weak.status == LemmaStatus::holds, weak.detail);
    const auto presence = check_lemma(LemmaId::h6_presence, g, opts);
    add("h6_presence holds", presence.status == LemmaStatus::holds, presence.detail);
    return out;
}

inline std::vector<SubCheck> fig3_battery() {
    const NamedGraph fig3 = make_fig3();
    const Graph& g = fig3.graph;
    std::vector<SubCheck> out;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        out.push_back({name, pass, detail});
    };

    add("10 vertices, 19 edges",
        g.vertex_count() == 10 && g.edges().size() == 19,
        "n=" + std::to_string(g.vertex_count()) +
            " m=" + std::to_string(g.edges().size()));

    const Graph p5 = make_p5().graph;
    add("{P5,coP5}-free", is_free_of(g, {p5, complement(p5)}), "");
    add("contains induced C4", contains_induced(g, make_c4().graph), "");
    add("contains induced 2K2", contains_induced(g, make_2k2().graph), "");
    add("prime", is_prime(g), "");
    add("not isomorphic to C5", !are_isomorphic(g, make_c5().graph), "");

    const auto join_g = detail::one_join_by_scan(g);
    add("no 1-join (exhaustive bipartition scan)", !join_g.has_value(),
        join_g ? "1-join found" : "all 2^10 bipartitions scanned");

    const auto join_c = detail::one_join_by_scan(complement(g));
    std::string cdetail = "all 2^10 bipartitions scanned";
    if (join_c) {
        std::ostringstream os;
        os << "1-join in the complement: A=" << detail::labeled_set(fig3, join_c->A)
           << " B=" << detail::labeled_set(fig3, join_c->B)
           << " C=" << detail::labeled_set(fig3, join_c->C)
           << " D=" << detail::labeled_set(fig3, join_c->D);
        cdetail = os.str();
    }
    add("no 1-join in the complement (exhaustive bipartition scan)", !join_c.has_value(),
        cdetail);
    return out;
}

}  // namespace fourpath

#endif
