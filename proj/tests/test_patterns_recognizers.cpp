#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "fourpath/catalog.hpp"
#include "fourpath/enumerate.hpp"
#include "fourpath/iso.hpp"
#include "fourpath/patterns.hpp"
#include "fourpath/recognizers.hpp"
#include "oracles.hpp"

using namespace fourpath;

namespace {

std::vector<Graph> small_patterns() {
    return {make_p4().graph, make_c4().graph,  make_2k2().graph,
            make_c5().graph, make_p5().graph, complement(make_p5().graph),
            make_bull().graph, make_h6().graph};
}

}  // namespace

TEST_CASE("induced search agrees with the naive matcher on every 6-vertex class") {
    const auto patterns = small_patterns();
    for_each_class(6, {}, [&](const Graph& host) {
        for (const Graph& pat : patterns) {
            const bool fast = contains_induced(host, pat);
            const bool slow = oracles::naive_contains_induced(host, pat);
            if (fast != slow) FAIL("disagreement on " << to_graph6(host));
        }
    });
}

TEST_CASE("induced search agrees with the naive matcher on random hosts") {
    std::mt19937_64 rng(23);
    const auto patterns = small_patterns();
    for (int trial = 0; trial < 60; ++trial) {
        const Graph host = random_graph(9, 0.2 + 0.06 * (trial % 10), rng());
        for (const Graph& pat : patterns)
            REQUIRE(contains_induced(host, pat) ==
                    oracles::naive_contains_induced(host, pat));
    }
}

TEST_CASE("found embeddings are genuine and enumerate one per image set") {
    std::mt19937_64 rng(31);
    const Graph pat = make_p4().graph;
    for (int trial = 0; trial < 30; ++trial) {
        const Graph host = random_graph(8, 0.4, rng());
        const auto embs = enumerate_induced(host, pat);
        std::set<std::vector<int>> images;
        for (const auto& e : embs) {
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    REQUIRE(pat.adjacent(i, j) == host.adjacent(e.map[i], e.map[j]));
            images.insert(e.image_sorted());
        }
        REQUIRE(images.size() == embs.size());
        const auto sorted_images = std::vector<std::vector<int>>(images.begin(), images.end());
        std::vector<std::vector<int>> reported;
        for (const auto& e : embs) reported.push_back(e.image_sorted());
        REQUIRE(reported == sorted_images);
    }
}

TEST_CASE("pattern cap rejects oversized patterns") {
    const Graph big = random_graph(9, 0.5, 1);
    REQUIRE_THROWS_AS(find_induced(make_c5().graph, big), CapError);
}

TEST_CASE("free filters reproduce the known class counts") {
    const std::vector<Graph> free_pats = {make_p5().graph, complement(make_p5().graph)};
    const uint64_t expected[] = {1, 2, 4, 11, 32, 120, 498};
    for (int n = 1; n <= 7; ++n) {
        size_t count = 0;
        for_each_class(n, free_pats, [&](const Graph&) { ++count; });
        REQUIRE(count == expected[n - 1]);
    }
}

TEST_CASE("completeness helpers match their definitions") {
    const Graph p4 = make_p4().graph;
    REQUIRE(is_clique(p4, VertexSet::of(4, {1, 2})));
    REQUIRE_FALSE(is_clique(p4, VertexSet::of(4, {0, 2})));
    REQUIRE(is_stable(p4, VertexSet::of(4, {0, 2})));
    REQUIRE(set_complete_to(p4, VertexSet::of(4, {0}), VertexSet::of(4, {1})));
    REQUIRE(set_anticomplete_to(p4, VertexSet::of(4, {0}), VertexSet::of(4, {2, 3})));
}

TEST_CASE("mixed vertices come with checkable witnesses") {
    const Graph p4 = make_p4().graph;
    const VertexSet X = VertexSet::of(4, {0, 3});
    REQUIRE(is_mixed_on(p4, 1, X));
    const auto w = mixed_witness(p4, 1, X, MixedKind::non_edge);
    REQUIRE(w.has_value());
    REQUIRE(w->validate(p4, X));
    REQUIRE_FALSE(is_mixed_on(p4, 0, VertexSet::of(4, {2, 3})));
}

TEST_CASE("homogeneous set finder agrees with the subset scan on every class up to 7") {
    for (int n = 2; n <= 7; ++n) {
        for_each_class(n, {}, [&](const Graph& g) {
            const auto fast = find_homogeneous_set(g);
            const auto slow = oracles::brute_homogeneous_set(g);
            if (fast.has_value() != slow.has_value())
                FAIL("disagreement on " << to_graph6(g));
            if (fast && !fast->validate(g)) FAIL("invalid certificate on " << to_graph6(g));
            if (is_prime(g) != (n >= 4 && !slow.has_value()))
                FAIL("primality disagreement on " << to_graph6(g));
        });
    }
}

TEST_CASE("split recognizers agree on every class up to 7 vertices") {
    for (int n = 1; n <= 7; ++n) {
        for_each_class(n, {}, [&](const Graph& g) {
            const auto cert = find_split_partition(g);
            const bool by_pattern = is_split_by_forbidden(g);
            const bool by_brute = oracles::brute_split(g);
            if (cert.has_value() != by_brute || by_pattern != by_brute)
                FAIL("split disagreement on " << to_graph6(g));
            if (cert && !cert->validate(g)) FAIL("invalid partition on " << to_graph6(g));
        });
    }
}

TEST_CASE("split recognizers agree on a thousand seeded random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = random_graph(n, 0.1 * (trial % 11), rng());
        const auto cert = find_split_partition(g);
        REQUIRE(cert.has_value() == is_split_by_forbidden(g));
        if (cert) REQUIRE(cert->validate(g));
    }
}

TEST_CASE("one-join finder agrees with the assignment scan on every class up to 6") {
    for (int n = 1; n <= 6; ++n) {
        for_each_class(n, {}, [&](const Graph& g) {
            const auto cert = find_one_join(g);
            if (cert.has_value() != oracles::brute_one_join(g))
                FAIL("one-join disagreement on " << to_graph6(g));
            if (cert && !cert->validate(g)) FAIL("invalid cert on " << to_graph6(g));
        });
    }
}

TEST_CASE("one-join finder agrees with the assignment scan on random graphs") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        const Graph g = random_graph(8, 0.15 + 0.07 * (trial % 10), rng());
        const auto cert = find_one_join(g);
        REQUIRE(cert.has_value() == oracles::brute_one_join(g));
        if (cert) REQUIRE(cert->validate(g));
    }
}

TEST_CASE("one-join certificate validation enforces every clause") {
    // A = {0}, B = {1}, C = {2}, D = {3} on the path 0-1-2 plus isolated 3
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}});
    const OneJoinCert good{VertexSet::of(4, {0}), VertexSet::of(4, {1}),
                           VertexSet::of(4, {2}), VertexSet::of(4, {3})};
    REQUIRE(good.validate(g));
    const OneJoinCert overlap{VertexSet::of(4, {0, 1}), VertexSet::of(4, {1}),
                              VertexSet::of(4, {2}), VertexSet::of(4, {3})};
    REQUIRE_FALSE(overlap.validate(g));
    const OneJoinCert empty_a{VertexSet::of(4, {}), VertexSet::of(4, {0, 1}),
                              VertexSet::of(4, {2}), VertexSet::of(4, {3})};
    REQUIRE_FALSE(empty_a.validate(g));
    // B must be complete to C
    const Graph g2 = Graph::from_edges(4, {{0, 1}});
    const OneJoinCert not_complete{VertexSet::of(4, {0}), VertexSet::of(4, {1}),
                                   VertexSet::of(4, {2}), VertexSet::of(4, {3})};
    REQUIRE_FALSE(not_complete.validate(g2));
}

TEST_CASE("half graph recognizer agrees with the isomorphism oracle") {
    for (int k = 1; k <= 5; ++k) {
        const Graph target = make_half_graph(k).graph;
        REQUIRE(is_half_graph(target));
        const auto cert = find_half_graph_cert(target);
        REQUIRE(cert.has_value());
        REQUIRE(cert->validate(target));
    }
    // every even-order class up to 8 vertices, against direct isomorphism
    for (int n = 2; n <= 8; n += 2) {
        const Graph target = make_half_graph(n / 2).graph;
        size_t positives = 0;
        for_each_class(n, {}, [&](const Graph& g) {
            const bool by_recognizer = is_half_graph(g);
            const bool by_iso = are_isomorphic(g, target);
            if (by_recognizer != by_iso) FAIL("half-graph disagreement on " << to_graph6(g));
            if (by_recognizer) ++positives;
        });
        REQUIRE(positives == 1);
    }
    // seeded random bipartite-ish graphs at n = 10
    std::mt19937_64 rng(41);
    const Graph target10 = make_half_graph(5).graph;
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(10, 0.3, rng());
        if (trial % 10 == 0) g = target10;  // sprinkle positives
        REQUIRE(is_half_graph(g) == are_isomorphic(g, target10));
    }
}

TEST_CASE("simplicial and antisimplicial classification matches the definitions") {
    for (int n = 1; n <= 6; ++n) {
        for_each_class(n, {}, [&](const Graph& g) {
            for (int v = 0; v < n; ++v) {
                if (is_simplicial(g, v) != oracles::brute_simplicial(g, v))
                    FAIL("simplicial disagreement on " << to_graph6(g));
                if (is_antisimplicial(g, v) != oracles::brute_antisimplicial(g, v))
                    FAIL("antisimplicial disagreement on " << to_graph6(g));
            }
            VertexSet simp(n), anti(n);
            for (int v = 0; v < n; ++v) {
                if (oracles::brute_simplicial(g, v)) simp.add(v);
                if (oracles::brute_antisimplicial(g, v)) anti.add(v);
            }
            if (simplicial_vertices(g) != simp) FAIL("set mismatch " << to_graph6(g));
            if (antisimplicial_vertices(g) != anti) FAIL("set mismatch " << to_graph6(g));
        });
    }
}

TEST_CASE("duality swaps the two vertex roles under complement") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(8, 0.5, rng());
        const Graph gc = complement(g);
        for (int v = 0; v < 8; ++v)
            REQUIRE(is_simplicial(g, v) == is_antisimplicial(gc, v));
    }
}
