#include <doctest.h>

#include <stdexcept>

#include <random>

#include "specdiss/graph.hpp"

using namespace specdiss;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p = 0.4) {
    Graph g = empty_graph(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) {
                g.adj[u] |= vbit(v);
                g.adj[v] |= vbit(u);
            }
    return g;
}

}  // namespace

TEST_CASE("named constructors") {
    Graph p4 = path_graph(4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.has_edge(0, 1));
    CHECK(p4.has_edge(1, 2));
    CHECK(p4.has_edge(2, 3));
    CHECK(!p4.has_edge(0, 2));

    Graph s4 = star_graph(4);
    CHECK(degree_sequence(s4) == std::vector<int>{3, 1, 1, 1});

    // K_{2,2} is a 4-cycle
    Graph k22 = complete_bipartite_graph(2, 2);
    CHECK(k22.edge_count() == 4);
    CHECK(degree_sequence(k22) == std::vector<int>{2, 2, 2, 2});
    CHECK(is_connected(k22));

    CHECK(make_named("cycle", {5}).edge_count() == 5);
    CHECK_THROWS_AS(make_named("cycle", {2}), std::invalid_argument);
    CHECK_THROWS_AS(make_named("blob", {3}), std::invalid_argument);
    CHECK_THROWS_AS(path_graph(65), std::invalid_argument);
}

TEST_CASE("join and union") {
    Graph k2 = join(complete_graph(1), complete_graph(1));
    CHECK(k2.edge_count() == 1);

    Graph two_k2 = disjoint_union(path_graph(2), path_graph(2));
    Graph j = join(complete_graph(1), two_k2);
    CHECK(j.n == 5);
    CHECK(j.edge_count() == 6);

    // join degree arithmetic: d(v) = d_g(v) + |H|
    Graph g = path_graph(3), h = cycle_graph(4);
    Graph gh = join(g, h);
    for (int v = 0; v < g.n; ++v) CHECK(gh.degree(v) == g.degree(v) + h.n);
    for (int v = 0; v < h.n; ++v) CHECK(gh.degree(g.n + v) == h.degree(v) + g.n);
    gh.validate();
}

TEST_CASE("edge edits and vertex deletion") {
    Graph c4 = cycle_graph(4);
    Graph p4 = remove_edge(c4, 0, 1);
    CHECK(p4.edge_count() == 3);
    CHECK(is_tree(p4));

    CHECK_THROWS_AS(remove_edge(c4, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(add_edge(c4, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(add_edge(c4, 2, 2), std::invalid_argument);

    // complement of K_4 minus a perfect matching is 2K_2
    Graph k4mm = remove_edge(remove_edge(complete_graph(4), 0, 1), 2, 3);
    Graph comp = complement(k4mm);
    CHECK(comp.edge_count() == 2);
    CHECK(comp.has_edge(0, 1));
    CHECK(comp.has_edge(2, 3));

    // deleting the middle of P_5 leaves two disjoint edges
    Graph two_p2 = delete_vertices(path_graph(5), vbit(2));
    CHECK(two_p2.n == 4);
    CHECK(two_p2.edge_count() == 2);
    CHECK(two_p2.has_edge(0, 1));
    CHECK(two_p2.has_edge(2, 3));
    CHECK(!is_connected(two_p2));
}

TEST_CASE("structural sets") {
    StructuralSets p4 = structural_sets(path_graph(4));
    CHECK(p4.pendants == (vbit(0) | vbit(3)));
    CHECK(p4.quasi_pendants == (vbit(1) | vbit(2)));
    CHECK(p4.quasi_pendants_deg2 == (vbit(1) | vbit(2)));

    StructuralSets s5 = structural_sets(star_graph(5));
    CHECK(popcount(s5.pendants) == 4);
    CHECK(s5.quasi_pendants == vbit(0));
    CHECK(s5.quasi_pendants_deg2 == 0);
}

TEST_CASE("predicates") {
    CHECK(is_connected(cycle_graph(5)));
    CHECK(!is_bipartite(cycle_graph(5)));
    CHECK(!is_tree(cycle_graph(5)));

    CHECK(is_connected(path_graph(6)));
    CHECK(is_bipartite(path_graph(6)));
    CHECK(is_tree(path_graph(6)));

    CHECK(!is_connected(disjoint_union(path_graph(2), path_graph(2))));
    CHECK(components(disjoint_union(path_graph(2), path_graph(3))).size() == 2);
}

TEST_CASE("complement involution and validation") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 16);
        Graph g = random_graph(rng, n);
        g.validate();
        CHECK(complement(complement(g)) == g);
        complement(g).validate();
    }
}
