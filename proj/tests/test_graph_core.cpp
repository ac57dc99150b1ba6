#include <doctest.h>

#include <random>
#include <set>

#include "kappa3/canonical.hpp"
#include "kappa3/families.hpp"
#include "kappa3/graph.hpp"
#include "kappa3/graph6.hpp"
#include "test_util.hpp"

using namespace kappa3;
using namespace kappa3::testutil;

namespace {

// K4 on 0..3 plus pendant at 3: the graph called G1 below
Graph g1_graph() {
    return Graph::from_edges(
        5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

}  // namespace

TEST_CASE("from_edges basics") {
    Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);

    Graph k4 = complete_graph(4);
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

    Graph g1 = g1_graph();
    std::multiset<int> degs;
    for (int v = 0; v < 5; ++v) degs.insert(g1.degree(v));
    CHECK(degs == std::multiset<int>{1, 3, 3, 3, 4});

    CHECK(Graph::from_edges(3, {{0, 1}, {0, 1}}).edge_count() == 1);  // dup collapses
}

TEST_CASE("from_edges errors") {
    CHECK_THROWS_AS(Graph(33), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::out_of_range);
    CHECK_THROWS_AS((void)Graph(3).degree(5), std::out_of_range);
}

TEST_CASE("graph6 codec") {
    CHECK(graph6_encode(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})) == "Bw");
    CHECK(graph6_encode(Graph(1)) == "@");
    CHECK(graph6_decode("Bw").edge_count() == 3);
    CHECK(graph6_decode(">>graph6<<Bw") == graph6_decode("Bw"));

    CHECK_THROWS_AS(graph6_decode("B\x01"), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("D"), std::invalid_argument);    // truncated body
    CHECK_THROWS_AS(graph6_decode("Bww"), std::invalid_argument);  // trailing
    CHECK_THROWS_AS(graph6_decode("~~"), std::invalid_argument);   // n > 32
    CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
}

TEST_CASE("graph6 roundtrip is the identity on all labeled graphs n <= 5") {
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : all_labeled_graphs(n))
            CHECK(graph6_decode(graph6_encode(g)) == g);
}

TEST_CASE("connectivity") {
    CHECK(Graph(0).is_connected());
    CHECK(Graph(1).is_connected());
    CHECK_FALSE(Graph(2).is_connected());  // 2K1
    CHECK(Graph(2).components().size() == 2);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(wheel(5).degree(0) == 4);
    Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
    auto comps = two_triangles.components();
    REQUIRE(comps.size() == 2);
    CHECK(popcount(comps[0]) == 3);
}

TEST_CASE("editing operations") {
    Graph k4 = complete_graph(4);
    CHECK(are_isomorphic(k4.delete_vertex(0), complete_graph(3)));
    CHECK(are_isomorphic(k4.delete_vertex(2), complete_graph(3)));

    Graph p3 = path(3);
    CHECK(are_isomorphic(p3.add_edge(0, 2), complete_graph(3)));

    // K4 - e, new vertex joined to its two degree-3 vertices = K2 v 3K1
    Graph k4_minus = k4.delete_edge(0, 1);
    Graph built = k4_minus.add_vertex_with_neighbors(vbit(2) | vbit(3));
    CHECK(are_isomorphic(built, join(complete_graph(2), empty_graph(3))));

    CHECK_THROWS_AS(k4.add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(k4.delete_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(path(2).delete_edge(0, 1).delete_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Graph(32).add_vertex_with_neighbors(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3).add_vertex_with_neighbors(vbit(5)), std::out_of_range);
}

TEST_CASE("adjacency symmetry and loop-freeness survive edits") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        Graph g = random_graph(rng, 8, 0.4);
        int op = iter % 4;
        if (op == 0) g = g.add_vertex_with_neighbors(rng() & g.vertex_mask());
        if (op == 1 && g.order() > 0) g = g.delete_vertex(int(rng() % g.order()));
        if (op == 2) {
            auto es = g.edges();
            if (!es.empty()) {
                auto [u, v] = es[rng() % es.size()];
                g = g.delete_edge(u, v);
            }
        }
        for (int u = 0; u < g.order(); ++u) {
            CHECK((g.neighbors(u) & vbit(u)) == 0);
            CHECK((g.neighbors(u) & ~g.vertex_mask()) == 0);
            VertexSet nb = g.neighbors(u);
            while (nb) {
                int v = lowest_vertex(nb);
                nb &= nb - 1;
                CHECK(g.has_edge(v, u));
            }
        }
    }
}

TEST_CASE("delete_vertex undoes add_vertex_with_neighbors") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        Graph g = random_graph(rng, 7, 0.5);
        VertexSet s = rng() & g.vertex_mask();
        CHECK(g.add_vertex_with_neighbors(s).delete_vertex(g.order()) == g);
    }
}

TEST_CASE("canonical form identifies K4") {
    // only one 4-vertex graph has 6 edges, so every labeling matches
    Graph k4 = complete_graph(4);
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i)
        CHECK(canonical_form(k4.permuted(random_perm(rng, 4))) == canonical_form(k4));
}

TEST_CASE("exactly two cubic graphs on six vertices") {
    std::set<CanonicalKey> keys;
    for (const Graph& g : all_labeled_graphs(6)) {
        bool cubic = true;
        for (int v = 0; v < 6; ++v) cubic = cubic && g.degree(v) == 3;
        if (cubic) keys.insert(canonical_form(g));
    }
    CHECK(keys.size() == 2);
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(19);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 2 + int(rng() % 7);
        Graph g = random_graph(rng, n, 0.5);
        CanonicalKey key = canonical_form(g);
        CHECK(canonical_form(g.permuted(random_perm(rng, n))) == key);
    }
}

TEST_CASE("are_isomorphic distinguishes same-size non-isomorphic graphs") {
    CHECK(are_isomorphic(path(4), path(4).permuted({2, 0, 3, 1})));
    CHECK_FALSE(are_isomorphic(path(4), Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
    CHECK_FALSE(are_isomorphic(cycle(5), path(5)));
}
