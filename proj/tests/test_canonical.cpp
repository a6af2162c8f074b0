#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <numeric>
#include <random>

#include "specdiss/canonical.hpp"

using namespace specdiss;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out = empty_graph(g.n);
    for (int v = 0; v < g.n; ++v)
        for (VertexSet s = g.adj[v]; s; s &= s - 1)
            out.adj[perm[v]] |= vbit(perm[lowest_vertex(s)]);
    return out;
}

}  // namespace

TEST_CASE("canonical codes separate and identify small graphs") {
    Graph p4 = path_graph(4);
    std::vector<int> perm{2, 0, 3, 1};  // P_4 relabeled 2-0-3-1
    CHECK(canonical_code(p4) == canonical_code(relabel(p4, perm)));
    CHECK(canonical_code(cycle_graph(4)) != canonical_code(p4));
    CHECK(canonical_code(star_graph(4)) != canonical_code(p4));
    CHECK(is_isomorphic(complete_bipartite_graph(2, 2), cycle_graph(4)));
    CHECK_THROWS_AS(canonical_code(path_graph(13)), std::invalid_argument);
}

TEST_CASE("canonical code is stable under random relabelings") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Graph> pool{path_graph(7),  cycle_graph(8),  star_graph(9),
                            complete_graph(6), complete_bipartite_graph(3, 4)};
    for (int trial = 0; trial < 5; ++trial) {
        int n = 5 + static_cast<int>(rng() % 6);
        Graph g = empty_graph(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < 0.35) {
                    g.adj[u] |= vbit(v);
                    g.adj[v] |= vbit(u);
                }
        pool.push_back(g);
    }
    for (const Graph& g : pool) {
        CanonicalCode base = canonical_code(g);
        std::vector<int> perm(g.n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = 0; i < 100; ++i) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_code(relabel(g, perm)) == base);
        }
    }
}

TEST_CASE("highly symmetric graphs stay cheap") {
    CHECK(canonical_code(complete_graph(12)).n == 12);
    CHECK(canonical_code(star_graph(12)).n == 12);
    CHECK(is_isomorphic(complete_graph(10), complete_graph(10)));
    CHECK(!is_isomorphic(complete_graph(6), complete_bipartite_graph(3, 3)));
}
