#include <doctest.h>

#include <stdexcept>

#include <random>

#include "folkman/arrowing.hpp"
#include "folkman/constructions.hpp"
#include "folkman/enumeration.hpp"
#include "folkman/invariants.hpp"
#include "folkman/search.hpp"

#include "helpers.hpp"

using namespace folkman;

TEST_CASE("contains_subgraph on the named cases") {
    CHECK(!contains_subgraph(complete_graph(6), book_graph(5)));  // B_5 has 7 vertices
    CHECK(!contains_subgraph(theorem4_graph(), book_graph(3)));
    auto embedding = contains_subgraph(book_graph(3), complete_graph(3));
    REQUIRE(embedding);
    // The embedding maps the triangle onto pairwise adjacent vertices.
    Graph b3 = book_graph(3);
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) CHECK(b3.adjacent((*embedding)[i], (*embedding)[j]));
    }
    CHECK(is_free(j_graph(4), complete_graph(4)));
}

TEST_CASE("contains_subgraph agrees with the all-injections oracle, small exhaustive") {
    std::vector<Graph> patterns;
    for (int hn = 1; hn <= 4; ++hn) {
        for_each_nonisomorphic(hn, [&](const Graph& h) { patterns.push_back(h); });
    }
    for (int gn = 1; gn <= 6; ++gn) {
        for_each_nonisomorphic(gn, [&](const Graph& g) {
            for (const Graph& h : patterns) {
                CHECK(contains_subgraph(g, h).has_value() ==
                      testutil::naive_contains_subgraph(g, h));
            }
        });
    }
}

TEST_CASE("contains_subgraph agrees with the oracle on sampled larger hosts") {
    std::vector<Graph> patterns;
    for_each_nonisomorphic(5, [&](const Graph& h) { patterns.push_back(h); });
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(8, 0.25 + 0.1 * double(trial % 5), 99, uint64_t(trial));
        const Graph& h = patterns[rng() % patterns.size()];
        CHECK(contains_subgraph(g, h).has_value() == testutil::naive_contains_subgraph(g, h));
    }
}

TEST_CASE("embeddings found are valid") {
    Graph host = theorem4_graph();
    Graph pattern = cycle_graph(5);
    int count = 0;
    for_each_embedding(host, pattern, [&](const Embedding& phi) {
        for (auto [a, b] : pattern.edges()) CHECK(host.adjacent(phi[a], phi[b]));
        return ++count < 50;
    });
    CHECK(count == 50);
}

TEST_CASE("clique and independence numbers") {
    CHECK(clique_number(complete_graph(6)).size == 6);
    CHECK(independence_number(complete_graph(6)).size == 1);
    for (int k = 1; k <= 4; ++k) CHECK(clique_number(book_graph(k)).size == 3);
    CHECK(clique_number(make_graph(0, {})).size == 0);

    // Witness is a real clique.
    CliqueResult r = clique_number(co_p2_p3());
    CHECK(r.size == 3);
    Graph g = co_p2_p3();
    for (int a = r.witness.first(); a >= 0; a = r.witness.next_after(a)) {
        for (int b = r.witness.next_after(a); b >= 0; b = r.witness.next_after(b)) {
            CHECK(g.adjacent(a, b));
        }
    }
}

TEST_CASE("clique of G equals independence of the complement, exhaustively to 8") {
    for (int n = 1; n <= 8; ++n) {
        for_each_nonisomorphic(n, [&](const Graph& g) {
            CHECK(clique_number(g).size == independence_number(complement(g)).size);
        });
    }
}

TEST_CASE("chromatic number basics") {
    CHECK(chromatic_number(cycle_graph(5)).count == 3);
    CHECK(chromatic_number(complete_graph(7)).count == 7);
    CHECK(chromatic_number(make_graph(0, {})).count == 0);
    CHECK(chromatic_number(make_graph(3, {})).count == 1);
    CHECK(chromatic_number(cycle_graph(6)).count == 2);
    CHECK_THROWS_AS(chromatic_number(make_graph(65, {})), std::invalid_argument);

    // Witness is proper. Five colors are forced: with four, every 5-cycle
    // would use the three colors left over by the dominating vertex, pushing
    // all three triangle vertices onto the dominating color.
    ChromaticResult r = chromatic_number(theorem4_graph());
    Graph g = theorem4_graph();
    for (auto [u, v] : g.edges()) CHECK(r.colors[u] != r.colors[v]);
    CHECK(r.count == 5);
}

TEST_CASE("chi exceeds r exactly when (K_2)^r vertex arrowing holds, n <= 6") {
    Graph k2 = complete_graph(2);
    for (int n = 1; n <= 6; ++n) {
        for_each_nonisomorphic(n, [&](const Graph& g) {
            int chi = chromatic_number(g).count;
            for (int r = 2; r <= 3; ++r) {
                ArrowingInstance instance{g, ArrowingMode::Vertex,
                                          std::vector<Graph>(size_t(r), k2)};
                bool arrows_r = arrows(instance).outcome == ArrowingOutcome::Arrows;
                CHECK(arrows_r == (chi > r));
            }
        });
    }
}

TEST_CASE("component classification") {
    Graph mix = disjoint_union(cycle_graph(5), path_graph(3));
    auto classes = classify_components(mix);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].kind == ComponentKind::OddCycle);
    CHECK(classes[1].kind == ComponentKind::Bipartite);

    auto tri = classify_components(complete_graph(3));
    REQUIRE(tri.size() == 1);
    CHECK(tri[0].kind == ComponentKind::Triangle);

    auto other = classify_components(complete_graph(4));
    CHECK(other[0].kind == ComponentKind::Other);

    CHECK(is_connected(cycle_graph(5)));
    CHECK(!is_connected(mix));
}

TEST_CASE("bipartition is a proper 2-coloring when it exists") {
    auto parts = is_bipartite(star_graph(4));
    REQUIRE(parts);
    CHECK(parts->side0.count() + parts->side1.count() == 5);
    CHECK(!is_bipartite(cycle_graph(5)));
    CHECK(!is_bipartite(complete_graph(3)));
    Graph c6 = cycle_graph(6);
    auto c6parts = is_bipartite(c6);
    REQUIRE(c6parts);
    for (auto [u, v] : c6.edges()) {
        CHECK(c6parts->side0.test(u) != c6parts->side0.test(v));
    }
}

TEST_CASE("every J_3-free graph on up to 6 vertices is bipartite") {
    Graph j3 = j_graph(3);
    for (int n = 1; n <= 6; ++n) {
        for_each_nonisomorphic(n, [&](const Graph& g) {
            if (is_free(g, j3)) CHECK(is_bipartite(g).has_value());
        });
    }
}

TEST_CASE("monotonicity of containment down the catalog") {
    // Every catalog member contained in K_1+P_4 is also found by the search
    // when the host is any graph containing K_1+P_4.
    Graph host = join(complete_graph(1), path_graph(4));
    int contained = 0;
    for (const Graph& h : five_vertex_catalog()) {
        if (contains_subgraph(host, h)) ++contained;
    }
    CHECK(contained == 8);  // itself plus seven more
}
