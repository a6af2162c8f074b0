#include "specdiss/dissociation.hpp"

#include <stdexcept>

namespace specdiss {

bool is_dissociation_set(const Graph& g, VertexSet s) {
    if (s & ~g.vertices())
        throw std::invalid_argument("vertex set not contained in the graph");
    for (VertexSet rest = s; rest; rest &= rest - 1)
        if (popcount(g.adj[lowest_vertex(rest)] & s) > 1) return false;
    return true;
}

namespace {

// Branch and bound over (in, out, undecided) vertex states. Branches on an
// undecided vertex inside a P_3 of g[in | undecided], preferring high degree
// there; bound is |in| + |undecided|.
struct Solver {
    const Graph& g;
    int best = -1;
    int target;  // stop early once best >= target (|V|+1 disables)

    Solver(const Graph& g_, int target_) : g(g_), target(target_) {}

    void search(VertexSet in, VertexSet out) {
        if (best >= target) return;
        // Undecided vertices that can no longer join: two in-neighbors, or a
        // single in-neighbor that is already matched inside `in`.
        VertexSet live = g.vertices() & ~in & ~out;
        for (VertexSet rest = live; rest; rest &= rest - 1) {
            int v = lowest_vertex(rest);
            VertexSet inn = g.adj[v] & in;
            if (!inn) continue;
            if ((inn & (inn - 1)) || (g.adj[lowest_vertex(inn)] & in))
                out |= vbit(v);
        }
        VertexSet candidate = g.vertices() & ~out;
        int bound = popcount(candidate);
        if (bound <= best) return;

        int branch = -1, branch_deg = -1;
        VertexSet und = candidate & ~in;
        for (VertexSet rest = candidate; rest; rest &= rest - 1) {
            int v = lowest_vertex(rest);
            int deg = popcount(g.adj[v] & candidate);
            if (deg <= 1) continue;
            // v is the centre of a P_3 inside the candidate set. Branch on v
            // itself when undecided, otherwise on its best undecided neighbor.
            if (und & vbit(v)) {
                if (deg > branch_deg) { branch = v; branch_deg = deg; }
            } else {
                for (VertexSet nb = g.adj[v] & und; nb; nb &= nb - 1) {
                    int u = lowest_vertex(nb);
                    int du = popcount(g.adj[u] & candidate);
                    if (du > branch_deg) { branch = u; branch_deg = du; }
                }
            }
        }
        if (branch < 0) {
            // candidate set induces max degree <= 1: it is feasible in full
            if (bound > best) best = bound;
            return;
        }
        search(in | vbit(branch), out);
        search(in, out | vbit(branch));
    }
};

int solve(const Graph& g, VertexSet forced_in, VertexSet forced_out, int target) {
    if (forced_in & forced_out) return -1;
    if (!is_dissociation_set(g, forced_in)) return -1;
    Solver s(g, target);
    s.search(forced_in, forced_out);
    return s.best;
}

// Greedy high-to-low exclusion yields the minimum witness mask.
VertexSet lexmin_witness(const Graph& g, int tau, VertexSet forced_in) {
    VertexSet in = forced_in, out = 0;
    for (int v = g.n - 1; v >= 0; --v) {
        if (in & vbit(v)) continue;
        if (solve(g, in, out | vbit(v), tau) >= tau) out |= vbit(v);
        else in |= vbit(v);
    }
    return in;
}

}  // namespace

int constrained_dissociation_tau(const Graph& g, VertexSet forced_in,
                                 VertexSet forced_out) {
    return solve(g, forced_in, forced_out, g.n + 1);
}

int dissociation_tau(const Graph& g) {
    return solve(g, 0, 0, g.n + 1);
}

DissociationResult dissociation_number(const Graph& g) {
    DissociationResult out;
    out.tau = dissociation_tau(g);
    out.witness = lexmin_witness(g, out.tau, 0);
    StructuralSets ss = structural_sets(g);
    VertexSet required = ss.pendants | ss.quasi_pendants_deg2;
    out.is_good = (required & ~out.witness) == 0;
    return out;
}

DissociationResult good_maximum_set(const Graph& g) {
    StructuralSets ss = structural_sets(g);
    VertexSet required = ss.pendants | ss.quasi_pendants_deg2;
    DissociationResult out;
    out.tau = dissociation_tau(g);
    int constrained = solve(g, required, 0, g.n + 1);
    if (constrained == out.tau) {
        out.witness = lexmin_witness(g, out.tau, required);
        out.is_good = true;
    } else {
        out.witness = lexmin_witness(g, out.tau, 0);
        out.is_good = false;
    }
    return out;
}

std::vector<VertexSet> all_maximum_dissociation_sets(const Graph& g) {
    if (g.n > 16)
        throw std::invalid_argument("all_maximum_dissociation_sets: n <= 16 only");
    int tau = dissociation_tau(g);
    std::vector<VertexSet> out;
    VertexSet end = VertexSet{1} << g.n;
    for (VertexSet s = 0; s < end; ++s)
        if (popcount(s) == tau && is_dissociation_set(g, s)) out.push_back(s);
    return out;
}

}  // namespace specdiss
