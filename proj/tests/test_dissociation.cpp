#include <doctest.h>

#include <stdexcept>

#include <random>

#include "specdiss/dissociation.hpp"
#include "specdiss/enumeration.hpp"
#include "specdiss/families.hpp"

using namespace specdiss;

namespace {

int brute_force_tau(const Graph& g) {
    int best = 0;
    for (VertexSet s = 0; s < (VertexSet{1} << g.n); ++s)
        if (is_dissociation_set(g, s)) best = std::max(best, popcount(s));
    return best;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
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

TEST_CASE("is_dissociation_set basics") {
    Graph p4 = path_graph(4);
    CHECK(is_dissociation_set(p4, vbit(0) | vbit(1) | vbit(3)));
    CHECK(!is_dissociation_set(path_graph(3), 0b111));
    CHECK(is_dissociation_set(p4, 0));
    CHECK_THROWS_AS(is_dissociation_set(p4, vbit(4)), std::invalid_argument);

    // K_4 minus a perfect matching: every triple induces a P_3
    Graph k4mm = remove_edge(remove_edge(complete_graph(4), 0, 1), 2, 3);
    for (VertexSet s = 0; s < 16; ++s)
        if (popcount(s) == 3) CHECK(!is_dissociation_set(k4mm, s));
}

TEST_CASE("dissociation number of named graphs") {
    for (int n = 1; n <= 12; ++n)
        CHECK(dissociation_tau(path_graph(n)) == (2 * n + 2) / 3);
    for (int n = 2; n <= 8; ++n) CHECK(dissociation_tau(complete_graph(n)) == 2);
    CHECK(dissociation_tau(empty_graph(3)) == 3);
}

TEST_CASE("forests satisfy the two-thirds lower bound") {
    for (int n = 2; n <= 10; ++n)
        for (const Graph& t : generate(CorpusKind::Trees, n).members)
            CHECK(dissociation_tau(t) >= (2 * n + 2) / 3);
}

TEST_CASE("witness is the lexicographically smallest maximum set") {
    Graph p4 = path_graph(4);
    DissociationResult r = dissociation_number(p4);
    CHECK(r.tau == 3);
    // {0,1,3} is the only maximum set with value 2^0+2^1+2^3 = 11; {0,2,3}=13
    CHECK(r.witness == (vbit(0) | vbit(1) | vbit(3)));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.4);
        DissociationResult rr = dissociation_number(g);
        CHECK(is_dissociation_set(g, rr.witness));
        CHECK(popcount(rr.witness) == rr.tau);
        VertexSet best = ~VertexSet{0};
        for (VertexSet s = 0; s < (VertexSet{1} << g.n); ++s)
            if (popcount(s) == rr.tau && is_dissociation_set(g, s))
                best = std::min(best, s);
        CHECK(rr.witness == best);
    }
}

TEST_CASE("good maximum sets") {
    // the spider tree on 8 vertices keeps all 6 pendants
    Graph sd = build(make_spec(FamilyId::SDagger, {{"n", 8}, {"tau", 6}}));
    DissociationResult r = good_maximum_set(sd);
    CHECK(r.tau == 6);
    CHECK(r.is_good);
    CHECK(r.witness == (structural_sets(sd).pendants));

    // P_6: pendants {0,5} and degree-2 quasi-pendants {1,4} are all kept
    DissociationResult p6 = good_maximum_set(path_graph(6));
    CHECK(p6.tau == 4);
    CHECK(p6.is_good);
    CHECK((p6.witness & (vbit(0) | vbit(1) | vbit(4) | vbit(5))) ==
          (vbit(0) | vbit(1) | vbit(4) | vbit(5)));

    // C_5 has no pendants, so any maximum set is good vacuously
    DissociationResult c5 = good_maximum_set(cycle_graph(5));
    CHECK(c5.tau == 3);
    CHECK(c5.is_good);
}

TEST_CASE("all maximum dissociation sets") {
    CHECK(all_maximum_dissociation_sets(path_graph(3)).size() == 3);
    CHECK(all_maximum_dissociation_sets(path_graph(2)).size() == 1);
    CHECK(all_maximum_dissociation_sets(cycle_graph(4)).size() == 6);
    CHECK_THROWS_AS(all_maximum_dissociation_sets(path_graph(17)),
                    std::invalid_argument);
}

TEST_CASE("solver equals brute force on random graphs") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(rng, n, coin(rng));
        CHECK(dissociation_tau(g) == brute_force_tau(g));
    }
}

TEST_CASE("edge removal never decreases tau") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.45);
        int tau = dissociation_tau(g);
        for (auto [u, v] : g.edges())
            CHECK(dissociation_tau(remove_edge(g, u, v)) >= tau);
    }
}

TEST_CASE("tau range for connected graphs") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : generate(CorpusKind::Connected, n).members) {
            int tau = dissociation_tau(g);
            CHECK(tau >= 2);
            CHECK(tau <= n - 1);
        }
}
