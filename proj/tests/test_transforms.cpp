#include <doctest.h>

#include <stdexcept>

#include <random>

#include "specdiss/canonical.hpp"
#include "specdiss/dissociation.hpp"
#include "specdiss/families.hpp"
#include "specdiss/spectral.hpp"
#include "specdiss/transforms.hpp"

using namespace specdiss;

namespace {

double lam(const Graph& g, double alpha) {
    return spectral_radius(alpha_matrix(g, alpha), is_connected(g)).lambda;
}

}  // namespace

TEST_CASE("shift_neighbors") {
    // moving N(2) \ N(1) = {3} onto 1 turns P_4 into the star at 1
    Graph p4 = path_graph(4);
    Graph shifted = shift_neighbors(p4, 1, 2, vbit(3));
    CHECK(is_isomorphic(shifted, star_graph(4)));

    CHECK_THROWS_AS(shift_neighbors(p4, 1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(shift_neighbors(p4, 1, 2, vbit(0)), std::invalid_argument);
    CHECK_THROWS_AS(shift_neighbors(p4, 3, 2, vbit(3)), std::invalid_argument);

    // with x_u >= x_v the index strictly increases: move edge 3-4 onto 2
    Graph g = add_edge(path_graph(5), 0, 2);
    for (double alpha : {0.0, 0.5}) {
        SpectralResult r = spectral_radius(alpha_matrix(g, alpha), true);
        int u = 2, v = 3;
        REQUIRE(r.perron[u] > r.perron[v]);
        VertexSet moved = g.adj[v] & ~g.adj[u] & ~vbit(u);
        REQUIRE(moved == vbit(4));
        CHECK(lam(shift_neighbors(g, u, v, moved), alpha) > r.lambda + 1e-10);
    }
}

TEST_CASE("shift composes pendant and path moves between spider roots") {
    // W_{r,t} with (r,t) = (2,2) on 10 vertices: centre 0, pendants 1-2,
    // 2-paths (3,4) and (5,6), tail 0-7-8-9. Move r-1 pendants and t-1 path
    // mids from the centre onto the third-from-last tail vertex.
    Graph w = build(make_spec(FamilyId::WRT, {{"n", 10}, {"r", 2}, {"t", 2}}));
    REQUIRE(w.degree(0) == 5);
    Graph moved = shift_neighbors(w, 7, 0, vbit(1) | vbit(3));
    REQUIRE(is_tree(moved));

    Graph expect = empty_graph(10);
    auto link = [&expect](int u, int v) {
        expect.adj[u] |= vbit(v);
        expect.adj[v] |= vbit(u);
    };
    link(0, 2);            // pendant kept at the centre
    link(0, 5); link(5, 6); // 2-path kept at the centre
    link(0, 7); link(7, 8); link(8, 9);  // tail
    link(7, 1);            // shifted pendant
    link(7, 3); link(3, 4); // shifted 2-path
    CHECK(is_isomorphic(moved, expect));
    CHECK(dissociation_tau(moved) == dissociation_tau(w));
}

TEST_CASE("rebalance pendant paths") {
    // K_2 with two pendant edges at u: away yields one pendant path of length 2
    Graph g = empty_graph(4);
    auto link = [&g](int u, int v) {
        g.adj[u] |= vbit(v);
        g.adj[v] |= vbit(u);
    };
    link(0, 1);  // base edge, u = 0
    link(0, 2);
    link(0, 3);
    Graph away = rebalance_pendant_paths(g, 0, 1, 1, RebalanceDirection::Away);
    CHECK(away.n == 4);
    CHECK(is_isomorphic(away, path_graph(4)));

    // inverse direction restores the shape
    Graph back = rebalance_pendant_paths(away, 0, 2, 0, RebalanceDirection::TowardBalance);
    CHECK(is_isomorphic(back, g));

    CHECK_THROWS_AS(rebalance_pendant_paths(g, 0, 3, 1, RebalanceDirection::Away),
                    std::invalid_argument);

    // the index drops for (s,t) in {(1,1),(2,1),(2,2)} on a K_3 base
    for (auto [s, t] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
        Graph base = complete_graph(3);
        Graph gst = base;
        int next = 3, prev = 0;
        gst.n = 3 + s + t;
        for (int i = 0; i < s; ++i) {
            gst.adj[prev] |= vbit(next);
            gst.adj[next] |= vbit(prev);
            prev = next++;
        }
        prev = 0;
        for (int i = 0; i < t; ++i) {
            gst.adj[prev] |= vbit(next);
            gst.adj[next] |= vbit(prev);
            prev = next++;
        }
        Graph moved = rebalance_pendant_paths(gst, 0, s, t, RebalanceDirection::Away);
        for (double alpha : {0.0, 0.5})
            CHECK(lam(gst, alpha) > lam(moved, alpha) + 1e-10);
    }
}

TEST_CASE("rebalance preserves tau on the pendant-star family") {
    // moving one of >= 2 centre pendants onto another pendant keeps a maximum
    // dissociation set intact: tau stays n-1
    for (int k1 = 2; k1 <= 4; ++k1)
        for (int k2 = 0; k2 <= 3; ++k2) {
            Graph g = build(make_spec(FamilyId::SK1K2, {{"k1", k1}, {"k2", k2}}));
            int before = dissociation_tau(g);
            Graph moved = rebalance_pendant_paths(g, 0, 1, 1, RebalanceDirection::Away);
            CHECK(dissociation_tau(moved) == before);
            CHECK(is_isomorphic(moved, build(make_spec(FamilyId::SK1K2,
                                                       {{"k1", k1 - 2}, {"k2", k2 + 1}}))));
        }
}

TEST_CASE("pendant-2-path trees order by imbalance") {
    // lambda(T1_{2,1}) < lambda(T1_{3,0}) at alpha = 0.3
    Graph lo = build(make_spec(FamilyId::T1, {{"r", 2}, {"p", 1}}));
    Graph hi = build(make_spec(FamilyId::T1, {{"r", 3}, {"p", 0}}));
    CHECK(lam(lo, 0.3) < lam(hi, 0.3) - 1e-10);
}

TEST_CASE("subdivision operations") {
    CHECK(is_isomorphic(subdivide(cycle_graph(3), 0, 1), cycle_graph(4)));
    Graph c6 = triple_subdivide(cycle_graph(3), 0, 1);
    CHECK(is_isomorphic(c6, cycle_graph(6)));
    CHECK(dissociation_tau(cycle_graph(3)) == 2);
    CHECK(dissociation_tau(c6) == 4);
    CHECK_THROWS_AS(subdivide(path_graph(4), 0, 2), std::invalid_argument);

    // the middle edge of the internal path of T1_{2,2} is internal and
    // subdividing it lowers the adjacency index
    Graph t = build(make_spec(FamilyId::T1, {{"r", 2}, {"p", 2}}));
    CHECK(is_internal_path_edge(t, 1, 2));
    CHECK(!is_internal_path_edge(t, 0, 1) == false);  // 0 has degree 3: internal too
    CHECK(lam(subdivide(t, 1, 2), 0.0) < lam(t, 0.0) - 1e-10);

    // pendant edges are never internal
    CHECK(!is_internal_path_edge(star_graph(4), 0, 1));
    CHECK(!is_internal_path_edge(cycle_graph(5), 0, 1));
}

TEST_CASE("optimal subdivision transform") {
    // double spider on 10 vertices
    Graph t = empty_graph(10);
    auto link = [&t](int u, int v) {
        t.adj[u] |= vbit(v);
        t.adj[v] |= vbit(u);
    };
    link(0, 1); link(1, 2); link(2, 3);
    link(0, 4); link(0, 5);
    link(3, 6); link(3, 7);
    link(4, 8); link(5, 9);
    REQUIRE(is_tree(t));
    TransformRecord rec = optimal_subdivision_transform(t);
    CHECK(rec.after.n == t.n);
    CHECK(is_tree(rec.after));
    int tau = dissociation_tau(t), tau2 = dissociation_tau(rec.after);
    CHECK((tau2 == tau || tau2 == tau - 1));
    for (double alpha : {0.0, 0.3, 0.5, 0.75})
        CHECK(lam(rec.after, alpha) < lam(t, alpha) - 1e-10);

    CHECK_THROWS_AS(optimal_subdivision_transform(cycle_graph(6)),
                    std::invalid_argument);
    CHECK_THROWS_AS(optimal_subdivision_transform(star_graph(6)),
                    std::invalid_argument);
}

TEST_CASE("subdivision equality family keeps index 2 at alpha 0") {
    // path with two pendant edges at each end: internal subdivision preserves
    // the adjacency index exactly, so strictness only holds for alpha > 0
    Graph g = empty_graph(8);
    auto link = [&g](int u, int v) {
        g.adj[u] |= vbit(v);
        g.adj[v] |= vbit(u);
    };
    link(0, 1); link(1, 2); link(2, 3);
    link(0, 4); link(0, 5); link(3, 6); link(3, 7);
    REQUIRE(is_internal_path_edge(g, 1, 2));
    Graph sub = subdivide(g, 1, 2);
    CHECK(lam(g, 0.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(lam(sub, 0.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(lam(sub, 0.3) < lam(g, 0.3) - 1e-10);
}

TEST_CASE("transform vertex accounting") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 5 + static_cast<int>(rng() % 6);
        // random tree via successive attachment
        Graph t = empty_graph(n);
        for (int v = 1; v < n; ++v) {
            int parent = static_cast<int>(rng() % v);
            t.adj[v] |= vbit(parent);
            t.adj[parent] |= vbit(v);
        }
        auto edges = t.edges();
        auto [u, v] = edges[rng() % edges.size()];
        CHECK(subdivide(t, u, v).n == n + 1);
        CHECK(subdivide(t, u, v).edge_count() == t.edge_count() + 1);
        CHECK(triple_subdivide(t, u, v).n == n + 3);
        CHECK(triple_subdivide(t, u, v).edge_count() == t.edge_count() + 3);
    }
}
