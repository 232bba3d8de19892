#include <doctest.h>

#include <stdexcept>

#include "folkman/constructions.hpp"
#include "folkman/graph.hpp"
#include "folkman/invariants.hpp"

#include "helpers.hpp"

using namespace folkman;

TEST_CASE("make_graph builds the stated small graphs") {
    Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);

    Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(c5.size() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    Graph k1 = make_graph(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    // Duplicates collapse.
    Graph dup = make_graph(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.size() == 1);
}

TEST_CASE("make_graph rejects bad edges") {
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(-1, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(513, {}), std::invalid_argument);
}

TEST_CASE("edge index is the column-major upper triangle") {
    Graph c5 = cycle_graph(5);
    // Edges sorted by (max, min): (0,1) (1,2) (2,3) (0,4) (3,4).
    CHECK(c5.edge_index(0, 1) == 0);
    CHECK(c5.edge_index(1, 2) == 1);
    CHECK(c5.edge_index(2, 3) == 2);
    CHECK(c5.edge_index(0, 4) == 3);
    CHECK(c5.edge_index(4, 3) == 4);
    CHECK(c5.edge_index(0, 2) == -1);
    CHECK(c5.edge_at(3) == std::pair{0, 4});
}

TEST_CASE("join counts and labelings") {
    Graph b3 = join(complete_graph(1), star_graph(3));
    CHECK(b3.order() == 5);
    CHECK(b3.size() == 7);

    Graph w5 = join(complete_graph(1), cycle_graph(4));
    CHECK(w5.order() == 5);
    CHECK(w5.size() == 8);

    Graph g = cycle_graph(5);
    CHECK(join(complete_graph(0), g) == g);

    CHECK_THROWS_AS(join(make_graph(300, {}), make_graph(300, {})), std::invalid_argument);
}

TEST_CASE("join edge-count identity over a small family") {
    const Graph family[] = {complete_graph(0), complete_graph(1), complete_graph(3),
                            cycle_graph(4),    path_graph(3),     star_graph(3)};
    for (const Graph& g : family) {
        for (const Graph& h : family) {
            Graph gh = join(g, h);
            CHECK(gh.size() == g.size() + h.size() + g.order() * h.order());
        }
    }
}

TEST_CASE("induced subgraph relabels and keeps inner edges") {
    Graph k5 = complete_graph(5);
    VertexSet three;
    three.set(1);
    three.set(2);
    three.set(4);
    CHECK(induced_subgraph(k5, three) == complete_graph(3));

    Graph c5 = cycle_graph(5);
    VertexSet first3;
    first3.set(0);
    first3.set(1);
    first3.set(2);
    CHECK(induced_subgraph(c5, first3) == path_graph(3));

    CHECK(induced_subgraph(c5, c5.vertices()) == c5);

    VertexSet bad;
    bad.set(7);
    CHECK_THROWS_AS(induced_subgraph(c5, bad), std::invalid_argument);
}

TEST_CASE("delete_vertex") {
    CHECK(delete_vertex(complete_graph(4), 2) == complete_graph(3));
    CHECK(delete_vertex(cycle_graph(5), 0) == path_graph(4));
    // Removing the first apex of the book leaves the star.
    Graph b3 = book_graph(3);
    CHECK(delete_vertex(b3, 0) == star_graph(3));
    CHECK_THROWS_AS(delete_vertex(b3, 5), std::invalid_argument);
}

TEST_CASE("delete_vertex undoes join with K_1") {
    const Graph family[] = {cycle_graph(5), path_graph(4), complete_graph(3), star_graph(4)};
    for (const Graph& g : family) {
        CHECK(delete_vertex(join(complete_graph(1), g), 0) == g);
    }
}

TEST_CASE("complement and disjoint union") {
    Graph co = complement(disjoint_union(path_graph(2), path_graph(3)));
    CHECK(co.order() == 5);
    CHECK(co.size() == 7);
    CHECK(testutil::naive_has_clique(co, 3));
    CHECK(!testutil::naive_has_clique(co, 4));

    CHECK(complement(complete_graph(4)).size() == 0);

    const Graph family[] = {cycle_graph(5), path_graph(4), star_graph(3), book_graph(2)};
    for (const Graph& g : family) CHECK(complement(complement(g)) == g);
}
